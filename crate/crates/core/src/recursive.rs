//! Recursive staircase decomposition.
//!
//! Slice the generators on the degrees `0 = d_0 < d_1 < ... < d_s` of the
//! last variable. With `I_k` the ideal generated by the coefficients of the
//! generators of `x_n`-degree at most `d_k`, the components of `I` are
//! exactly `(Irr(I_{k-1}) \ Irr(I_k)) ⊗ d_k` over `k = 1..=s`, and these sets
//! are pairwise disjoint.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::{artinianize, deartinianize, ComponentSet, GeneratorSet};
use crate::ops::OpCounter;
use crate::trie::{min_merge_counted, Trie};
use crate::vector::{ExpVector, Exponent};

/// Closed form for two variables: pair consecutive staircase corners.
///
/// Missing pure powers are read as infinite ones.
pub fn decompose_bivariate(g: &GeneratorSet) -> Result<ComponentSet> {
    if g.n() != 2 {
        return Err(Error::NotBivariate(g.n()));
    }
    let min = g.minimalized();
    if min.is_unit() {
        return Ok(ComponentSet::empty(2));
    }
    // Sorted by decreasing x-degree, hence increasing y-degree.
    let mut corners: Vec<(Exponent, Exponent)> =
        min.gens().iter().map(|v| (v.get(0), v.get(1))).collect();
    corners.sort_by_key(|c| std::cmp::Reverse(c.0));
    if corners.first().is_none_or(|c| c.1 != Exponent::ZERO) {
        corners.insert(0, (Exponent::INF, Exponent::ZERO));
    }
    if corners.last().is_none_or(|c| c.0 != Exponent::ZERO) {
        corners.push((Exponent::ZERO, Exponent::INF));
    }
    let comps = corners
        .windows(2)
        .map(|w| ExpVector::new(vec![w[0].0, w[1].1]))
        .collect();
    ComponentSet::new(2, comps)
}

/// `U \ V` by exact vector equality, keeping the order of `U`.
pub fn set_difference_components(a: &ComponentSet, b: &ComponentSet) -> ComponentSet {
    let drop: HashSet<&ExpVector> = b.comps().iter().collect();
    let kept = a
        .comps()
        .iter()
        .filter(|v| !drop.contains(v))
        .cloned()
        .collect();
    ComponentSet::new(a.n(), kept).expect("same length as input")
}

/// `U ⊗ d`: append `d` as a new last coordinate.
pub fn adjoin_degree(v: &ComponentSet, d: Exponent) -> Result<ComponentSet> {
    if d == Exponent::ZERO {
        return Err(Error::ZeroCoordinate { index: v.n() });
    }
    ComponentSet::new(v.n() + 1, v.comps().iter().map(|c| c.extended(d)).collect())
}

/// Irreducible components of the ideal whose minimal Artinian generators are
/// encoded in `t`. Labels may be infinite. An empty trie is the zero ideal.
pub fn irr_recursive(t: &Trie) -> Result<ComponentSet> {
    irr_recursive_counted(t, &mut OpCounter::new())
}

pub fn irr_recursive_counted(t: &Trie, ops: &mut OpCounter) -> Result<ComponentSet> {
    let n = t.height();
    if n == 0 {
        return Err(Error::Usage("trie of height zero".into()));
    }
    if t.is_empty() {
        return ComponentSet::new(n, vec![ExpVector::new(vec![Exponent::INF; n])]);
    }
    let comps = irr(t.clone(), ops)?;
    ComponentSet::new(n, comps)
}

fn irr(t: Trie, ops: &mut OpCounter) -> Result<Vec<ExpVector>> {
    if t.height() == 1 {
        let labels = t.top_labels();
        ops.add(labels.len().saturating_sub(1) as u64);
        let d = labels
            .last()
            .copied()
            .ok_or_else(|| Error::Internal("empty leaf level".into()))?;
        return Ok(vec![ExpVector::new(vec![d])]);
    }

    let mut slices = t.into_slices().into_iter();
    let (_, mut prev_trie) = slices
        .next()
        .ok_or_else(|| Error::Internal("empty subtree".into()))?;
    let mut prev_irr = irr(prev_trie.clone(), ops)?;
    let mut out = Vec::new();
    let mut seen: HashSet<ExpVector> = HashSet::new();

    for (d, slice) in slices {
        let cur_trie = min_merge_counted(&[&prev_trie, &slice], ops)?;
        let cur_irr = irr(cur_trie.clone(), ops)?;
        let drop: HashSet<&ExpVector> = cur_irr.iter().collect();
        ops.add(prev_irr.len() as u64);
        for mu in prev_irr.iter().filter(|mu| !drop.contains(mu)) {
            let beta = mu.extended(d);
            if !seen.insert(beta.clone()) {
                return Err(Error::Internal(format!("{beta} produced twice")));
            }
            out.push(beta);
        }
        prev_trie = cur_trie;
        prev_irr = cur_irr;
    }
    Ok(out)
}

/// Result of a full recursive decomposition plus instrumentation.
#[derive(Debug, Clone)]
pub struct RecursiveRun {
    pub components: ComponentSet,
    pub ops: u64,
    /// Generators of the Artinian ideal the engine ran on.
    pub p: usize,
    /// Distinct degrees of each variable among those generators.
    pub distinct_degrees: Vec<usize>,
}

/// Normalize, close up with pure powers, run the recursion and translate
/// the bounds back to infinity.
pub fn decompose_recursive(g: &GeneratorSet) -> Result<RecursiveRun> {
    let n = g.n();
    let art = artinianize(g);
    let distinct_degrees = (0..n)
        .map(|i| {
            let mut ds: Vec<_> = art.gens().iter().map(|v| v.get(i)).collect();
            ds.sort_unstable();
            ds.dedup();
            ds.len()
        })
        .collect();
    if art.is_unit() {
        return Ok(RecursiveRun {
            components: ComponentSet::empty(n),
            ops: 0,
            p: 1,
            distinct_degrees,
        });
    }
    let mut ops = OpCounter::new();
    let trie = Trie::build(n, art.gens())?;
    let raw = irr_recursive_counted(&trie, &mut ops)?;
    Ok(RecursiveRun {
        components: deartinianize(&raw, &art)?,
        ops: ops.get(),
        p: art.gens().len(),
        distinct_degrees,
    })
}

/// The full chain `I_0 ⊊ I_1 ⊊ ... ⊊ I_s` of coefficient ideals, each as a
/// trie of its minimal generators.
#[derive(Debug, Clone)]
pub struct SliceChain {
    pub degrees: Vec<Exponent>,
    pub tries: Vec<Trie>,
}

impl SliceChain {
    pub fn from_trie(t: &Trie) -> Result<Self> {
        let mut degrees = Vec::new();
        let mut tries: Vec<Trie> = Vec::new();
        for (d, slice) in t.slice_top()? {
            let next = match tries.last() {
                Some(prev) => min_merge_counted(&[prev, &slice], &mut OpCounter::new())?,
                None => slice,
            };
            degrees.push(d);
            tries.push(next);
        }
        Ok(SliceChain { degrees, tries })
    }

    /// Index `k` with `d_k <= d < d_{k+1}`, if `d >= d_0`.
    pub fn level_of(&self, d: Exponent) -> Option<usize> {
        self.degrees.iter().rposition(|&dk| dk <= d)
    }
}
