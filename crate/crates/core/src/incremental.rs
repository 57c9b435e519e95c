//! Incremental decomposition: add one generator at a time.
//!
//! Start from the single component of the pure powers and, for each new
//! generator `X^alpha`, split the current components into those with
//! `alpha ⊀ beta` (kept unchanged) and those with `alpha ≺ beta`. Each of the
//! latter is replaced by the candidates `beta^(alpha,u)` that pass the test
//! `d(beta, u) < a_u`; no further redundancy pass is needed.
//!
//! All internal work uses the finite Artinian bounds; infinity is restored
//! once at the end.

use std::collections::BTreeMap;

use crate::antichain::maximalize;
use crate::error::{Error, Result};
use crate::ideal::{artinianize, deartinianize, ArtinianizedIdeal, ComponentSet, GeneratorSet};
use crate::ops::OpCounter;
use crate::vector::{ExpVector, Exponent};

/// Per variable, the generators grouped by their degree in that variable.
#[derive(Debug, Clone, Default)]
pub struct DegreeIndex {
    buckets: Vec<BTreeMap<Exponent, Vec<usize>>>,
}

impl DegreeIndex {
    pub fn new(n: usize) -> Self {
        DegreeIndex {
            buckets: vec![BTreeMap::new(); n],
        }
    }

    pub fn insert(&mut self, id: usize, v: &ExpVector) {
        for (bucket, e) in self.buckets.iter_mut().zip(v.iter()) {
            bucket.entry(e).or_default().push(id);
        }
    }

    /// Generator ids with degree `deg` in variable `var`.
    pub fn bucket(&self, var: usize, deg: Exponent) -> &[usize] {
        self.buckets
            .get(var)
            .and_then(|b| b.get(&deg))
            .map_or(&[], Vec::as_slice)
    }

    /// All `(degree, ids)` buckets of one variable.
    pub fn buckets(&self, var: usize) -> impl Iterator<Item = (Exponent, &[usize])> {
        self.buckets[var]
            .iter()
            .map(|(d, ids)| (*d, ids.as_slice()))
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.iter().all(BTreeMap::is_empty)
    }
}

pub fn build_degree_index(g: &GeneratorSet) -> DegreeIndex {
    let mut idx = DegreeIndex::new(g.n());
    for (i, v) in g.gens().iter().enumerate() {
        idx.insert(i, v);
    }
    idx
}

/// Split `t` into `(T1, T2)` by whether `alpha ≺ beta`.
pub fn partition_components(
    t: &[ExpVector],
    alpha: &ExpVector,
) -> Result<(Vec<ExpVector>, Vec<ExpVector>)> {
    let mut t1 = Vec::new();
    let mut t2 = Vec::new();
    for beta in t {
        if alpha.strictly_below(beta)? {
            t2.push(beta.clone());
        } else {
            t1.push(beta.clone());
        }
    }
    Ok((t1, t2))
}

/// Variables in which `m` matches `beta`, i.e. `deg_u m = b_u`.
pub fn match_profile(m: &ExpVector, beta: &ExpVector) -> Vec<usize> {
    m.iter()
        .zip(beta.iter())
        .enumerate()
        .filter(|(_, (a, b))| a == b)
        .map(|(u, _)| u)
        .collect()
}

/// `d(beta, u)` for every `u`. `None` means no `k != u` has a generator
/// matching `beta` only in `x_k`, which never happens for `n >= 2` and a
/// genuine component.
pub fn d_values(beta: &ExpVector, m_beta: &[ExpVector]) -> Result<Vec<Option<Exponent>>> {
    d_values_counted(beta, m_beta.iter(), &mut OpCounter::new())
}

fn d_values_counted<'a>(
    beta: &ExpVector,
    m_beta: impl Iterator<Item = &'a ExpVector>,
    ops: &mut OpCounter,
) -> Result<Vec<Option<Exponent>>> {
    let n = beta.len();
    // dmin[u][k] = min deg_u over generators matching beta only in x_k
    let mut dmin: Vec<Vec<Option<Exponent>>> = vec![vec![None; n]; n];
    let mut any_only = false;
    let mut empty = true;
    for m in m_beta {
        empty = false;
        ops.tick();
        let profile = match_profile(m, beta);
        let &[k] = profile.as_slice() else { continue };
        any_only = true;
        for (u, row) in dmin.iter_mut().enumerate() {
            if u == k {
                continue;
            }
            ops.tick();
            let deg = m.get(u);
            row[k] = Some(row[k].map_or(deg, |cur| cur.min(deg)));
        }
    }
    if empty {
        return Err(Error::Internal(format!("no generator divides X^{beta}")));
    }
    if !any_only {
        return Err(Error::Internal(format!(
            "no generator matches {beta} in a single variable"
        )));
    }
    Ok(dmin
        .iter()
        .enumerate()
        .map(|(u, row)| {
            ops.add(n.saturating_sub(1) as u64);
            row.iter()
                .enumerate()
                .filter(|&(k, _)| k != u)
                .filter_map(|(_, d)| *d)
                .max()
        })
        .collect())
}

/// How one component with `alpha ≺ beta` was replaced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaUpdate {
    pub beta: ExpVector,
    /// Generators dividing `X^beta`, in generator-insertion order.
    pub m_beta: Vec<ExpVector>,
    pub d: Vec<Option<Exponent>>,
    /// `kept[u]` iff `beta^(alpha,u)` is a component of the enlarged ideal.
    pub kept: Vec<bool>,
}

impl BetaUpdate {
    pub fn candidate(&self, alpha: &ExpVector, u: usize) -> ExpVector {
        let mut v = self.beta.clone();
        v.set(u, alpha.get(u));
        v
    }
}

/// Everything that happened while adding one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    /// 1-based.
    pub step: usize,
    pub alpha: ExpVector,
    pub t1: Vec<ExpVector>,
    pub t2: Vec<BetaUpdate>,
    /// Components after the step.
    pub t_after: Vec<ExpVector>,
}

/// Running state: current components, generators seen so far, their degree
/// index and the operation count.
#[derive(Debug, Clone)]
pub struct UpdateState {
    n: usize,
    t: Vec<ExpVector>,
    gens: Vec<ExpVector>,
    index: DegreeIndex,
    ops: OpCounter,
    steps: usize,
    check_max_merge: bool,
}

impl UpdateState {
    /// State for the ideal of pure powers `x_i^{pure_i}`; its only component
    /// is `pure` itself. All exponents must be finite and positive.
    pub fn from_pure_powers(pure: &ExpVector) -> Result<Self> {
        let n = pure.len();
        if n == 0 {
            return Err(Error::Usage("no variables".into()));
        }
        for (i, e) in pure.iter().enumerate() {
            if e == Exponent::ZERO || e.is_inf() {
                return Err(Error::Usage(format!(
                    "pure power of x{} must be finite and positive, got {e}",
                    i + 1
                )));
            }
        }
        let mut state = UpdateState {
            n,
            t: vec![pure.clone()],
            gens: Vec::with_capacity(n),
            index: DegreeIndex::new(n),
            ops: OpCounter::new(),
            steps: 0,
            check_max_merge: false,
        };
        for i in 0..n {
            state.push_generator(ExpVector::pure_power(n, i, pure.get(i)));
        }
        Ok(state)
    }

    /// Also compute the full max-merge of all candidates at every step and
    /// fail if it disagrees with the `d(beta,u) < a_u` filter.
    pub fn with_max_merge_check(mut self, on: bool) -> Self {
        self.check_max_merge = on;
        self
    }

    pub fn components(&self) -> &[ExpVector] {
        &self.t
    }

    pub fn generators(&self) -> &[ExpVector] {
        &self.gens
    }

    pub fn index(&self) -> &DegreeIndex {
        &self.index
    }

    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    fn push_generator(&mut self, v: ExpVector) {
        self.index.insert(self.gens.len(), &v);
        self.gens.push(v);
    }

    /// Generators dividing `X^beta`, found through the degree buckets
    /// `(u, b_u)`. Every such generator matches `beta` somewhere, otherwise
    /// `X^{beta ⊖ 1}` would lie in the ideal.
    pub fn find_m_beta(&mut self, beta: &ExpVector) -> Vec<ExpVector> {
        self.m_beta_ids(beta)
            .into_iter()
            .map(|i| self.gens[i].clone())
            .collect()
    }

    fn m_beta_ids(&mut self, beta: &ExpVector) -> Vec<usize> {
        let mut ids = Vec::new();
        for u in 0..self.n {
            for &id in self.index.bucket(u, beta.get(u)) {
                if ids.contains(&id) {
                    continue;
                }
                self.ops.tick();
                if self.gens[id].divides(beta) {
                    ids.push(id);
                }
            }
        }
        ids.sort_unstable();
        ids
    }

    /// Add `X^alpha`. Fails if `alpha` is already in the ideal.
    pub fn update(&mut self, alpha: &ExpVector) -> Result<StepReport> {
        if alpha.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: alpha.len(),
            });
        }
        if !alpha.is_finite() {
            return Err(Error::Usage(format!("generator {alpha} is not finite")));
        }

        let mut t1 = Vec::new();
        let mut t2 = Vec::new();
        for beta in std::mem::take(&mut self.t) {
            self.ops.tick();
            if alpha.prec(&beta) {
                t2.push(beta);
            } else {
                t1.push(beta);
            }
        }
        if t2.is_empty() {
            self.t = t1;
            return Err(Error::Usage(format!("{alpha} already lies in the ideal")));
        }

        let mut next = t1.clone();
        let mut updates = Vec::with_capacity(t2.len());
        for beta in t2 {
            let ids = self.m_beta_ids(&beta);
            let d = d_values_counted(&beta, ids.iter().map(|&i| &self.gens[i]), &mut self.ops)?;
            let kept: Vec<bool> = d
                .iter()
                .zip(alpha.iter())
                .map(|(d, a)| d.is_none_or(|d| d < a))
                .collect();
            let upd = BetaUpdate {
                m_beta: ids.iter().map(|&i| self.gens[i].clone()).collect(),
                beta,
                d,
                kept,
            };
            for u in (0..self.n).filter(|&u| upd.kept[u]) {
                next.push(upd.candidate(alpha, u));
            }
            updates.push(upd);
        }

        if self.check_max_merge {
            let mut all = t1.clone();
            for upd in &updates {
                // a zero exponent makes the candidate the unit ideal
                all.extend(
                    (0..self.n)
                        .filter(|&u| alpha.get(u) != Exponent::ZERO)
                        .map(|u| upd.candidate(alpha, u)),
                );
            }
            let mut want = maximalize(&all);
            want.sort_unstable();
            let mut got = next.clone();
            got.sort_unstable();
            if want != got {
                return Err(Error::Internal(format!(
                    "filtered update {got:?} differs from max-merge {want:?}"
                )));
            }
        }

        self.push_generator(alpha.clone());
        self.steps += 1;
        self.t = next;
        Ok(StepReport {
            step: self.steps,
            alpha: alpha.clone(),
            t1,
            t2: updates,
            t_after: self.t.clone(),
        })
    }
}

/// Order in which the non-pure generators are added.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InsertionOrder {
    /// Lex order with `x_1 < ... < x_n`; the size of the component set never
    /// shrinks on generic input.
    #[default]
    Lex,
    /// Input order. Still correct, but without the monotonicity guarantee.
    AsGiven,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IncrementalOptions {
    pub order: InsertionOrder,
    pub record_steps: bool,
    pub check_max_merge: bool,
}

#[derive(Debug, Clone)]
pub struct IncrementalRun {
    pub components: ComponentSet,
    pub ops: u64,
    /// `|T|` before the first step and after each step.
    pub sizes: Vec<usize>,
    pub steps: Vec<StepReport>,
    pub artinian: ArtinianizedIdeal,
}

impl IncrementalRun {
    pub fn peak(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn is_monotone(&self) -> bool {
        self.sizes.windows(2).all(|w| w[0] <= w[1])
    }
}

pub fn incremental_decompose(g: &GeneratorSet) -> Result<ComponentSet> {
    Ok(incremental_decompose_with(g, IncrementalOptions::default())?.components)
}

pub fn incremental_decompose_with(
    g: &GeneratorSet,
    opts: IncrementalOptions,
) -> Result<IncrementalRun> {
    let art = artinianize(g);
    if art.is_unit() {
        return Ok(IncrementalRun {
            components: ComponentSet::empty(g.n()),
            ops: 0,
            sizes: vec![],
            steps: vec![],
            artinian: art,
        });
    }
    let alphas: Vec<ExpVector> = match opts.order {
        InsertionOrder::Lex => art
            .gens()
            .iter()
            .filter(|v| v.pure_power_var().is_none())
            .cloned()
            .collect(),
        InsertionOrder::AsGiven => {
            let mut seen = Vec::new();
            for v in g.gens() {
                if v.pure_power_var().is_none() && art.gens().contains(v) && !seen.contains(v) {
                    seen.push(v.clone());
                }
            }
            seen
        }
    };

    let mut state = UpdateState::from_pure_powers(art.pure_powers())?
        .with_max_merge_check(opts.check_max_merge);
    let mut sizes = vec![state.components().len()];
    let mut steps = Vec::new();
    for alpha in &alphas {
        let report = state.update(alpha)?;
        sizes.push(state.components().len());
        if opts.record_steps {
            steps.push(report);
        }
    }
    let raw = ComponentSet::new(g.n(), state.components().to_vec())?;
    Ok(IncrementalRun {
        components: deartinianize(&raw, &art)?,
        ops: state.ops(),
        sizes,
        steps,
        artinian: art,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ev;

    fn e(v: u64) -> Exponent {
        Exponent::new(v)
    }

    fn sorted(mut v: Vec<ExpVector>) -> Vec<ExpVector> {
        v.sort();
        v
    }

    fn example() -> GeneratorSet {
        GeneratorSet::new(
            3,
            vec![
                ev![4, 0, 0],
                ev![0, 4, 0],
                ev![3, 2, 2],
                ev![1, 3, 2],
                ev![2, 1, 3],
            ],
        )
        .unwrap()
    }

    fn counterexample() -> GeneratorSet {
        GeneratorSet::new(
            4,
            vec![
                ev![3, 0, 0, 0],
                ev![0, 3, 0, 0],
                ev![0, 0, 2, 0],
                ev![0, 0, 0, 2],
                ev![2, 1, 1, 0],
                ev![1, 2, 0, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn partition_examples() {
        let (t1, t2) = partition_components(&[ev![4, 4, inf]], &ev![3, 2, 2]).unwrap();
        assert!(t1.is_empty());
        assert_eq!(t2, vec![ev![4, 4, inf]]);

        let t = vec![ev![3, 4, inf], ev![4, 2, inf], ev![4, 4, 2]];
        let (t1, t2) = partition_components(&t, &ev![1, 3, 2]).unwrap();
        assert_eq!(sorted(t1), sorted(vec![ev![4, 4, 2], ev![4, 2, inf]]));
        assert_eq!(t2, vec![ev![3, 4, inf]]);

        // alpha in the ideal: nothing strictly above it
        let (_, t2) = partition_components(&t, &ev![4, 4, 4]).unwrap();
        assert!(t2.is_empty());
    }

    #[test]
    fn match_profiles() {
        assert_eq!(match_profile(&ev![1, 1, 0], &ev![1, 1, 2]), vec![0, 1]);
        assert_eq!(match_profile(&ev![4, 0, 0], &ev![4, 4, inf]), vec![0]);
        assert_eq!(match_profile(&ev![3, 2, 2], &ev![3, 3, inf]), vec![0]);
    }

    #[test]
    fn d_values_examples() {
        // with the finite bound z^4 standing in for z^inf
        let d = d_values(&ev![4, 4, 4], &[ev![4, 0, 0], ev![0, 4, 0], ev![0, 0, 4]]).unwrap();
        assert_eq!(d, vec![Some(e(0)); 3]);

        let d = d_values(&ev![4, 2, 4], &[ev![4, 0, 0], ev![3, 2, 2], ev![0, 0, 4]]).unwrap();
        assert_eq!(d, vec![Some(e(3)), Some(e(0)), Some(e(2))]);

        let d = d_values(
            &ev![2, 2, 2, 2],
            &[
                ev![2, 1, 1, 0],
                ev![1, 2, 0, 1],
                ev![0, 0, 2, 0],
                ev![0, 0, 0, 2],
            ],
        )
        .unwrap();
        assert_eq!(d, vec![Some(e(1)); 4]);
    }

    #[test]
    fn d_values_errors() {
        assert!(d_values(&ev![2, 2], &[]).is_err());
        assert!(d_values(&ev![2, 2], &[ev![2, 2]]).is_err());
    }

    #[test]
    fn univariate_has_no_d_terms() {
        assert_eq!(d_values(&ev![3], &[ev![3]]).unwrap(), vec![None]);
        let g = GeneratorSet::new(1, vec![ev![2]]).unwrap();
        assert_eq!(incremental_decompose(&g).unwrap().comps(), &[ev![2]]);
    }

    #[test]
    fn degree_index() {
        let idx = build_degree_index(&example());
        assert_eq!(idx.bucket(2, e(2)), &[2, 3]);
        assert_eq!(idx.bucket(0, e(4)), &[0]);
        assert!(idx.bucket(1, e(9)).is_empty());
        assert!(build_degree_index(&GeneratorSet::new(2, vec![]).unwrap()).is_empty());
    }

    #[test]
    fn example_step_by_step() {
        let art = artinianize(&example());
        let mut st = UpdateState::from_pure_powers(art.pure_powers())
            .unwrap()
            .with_max_merge_check(true);
        let visible = |st: &mut UpdateState, beta: &ExpVector| -> Vec<ExpVector> {
            st.find_m_beta(beta)
                .into_iter()
                .filter(|m| !art.is_injected(m))
                .collect()
        };
        assert_eq!(
            visible(&mut st, &ev![4, 4, 4]),
            vec![ev![4, 0, 0], ev![0, 4, 0]]
        );

        let r = st.update(&ev![3, 2, 2]).unwrap();
        assert_eq!(r.t2[0].kept, vec![true, true, true]);
        assert_eq!(
            sorted(st.components().to_vec()),
            sorted(vec![ev![3, 4, 4], ev![4, 2, 4], ev![4, 4, 2]])
        );
        assert_eq!(
            visible(&mut st, &ev![3, 4, 4]),
            vec![ev![0, 4, 0], ev![3, 2, 2]]
        );

        let r = st.update(&ev![1, 3, 2]).unwrap();
        assert_eq!(sorted(r.t1), sorted(vec![ev![4, 4, 2], ev![4, 2, 4]]));
        assert_eq!(r.t2[0].d, vec![Some(e(0)), Some(e(2)), Some(e(2))]);
        assert_eq!(r.t2[0].kept, vec![true, true, false]);
        assert_eq!(
            visible(&mut st, &ev![3, 3, 4]),
            vec![ev![3, 2, 2], ev![1, 3, 2]]
        );
        assert_eq!(
            visible(&mut st, &ev![4, 2, 4]),
            vec![ev![4, 0, 0], ev![3, 2, 2]]
        );

        let r = st.update(&ev![2, 1, 3]).unwrap();
        let b = r.t2.iter().find(|b| b.beta == ev![4, 2, 4]).unwrap();
        assert_eq!(b.d, vec![Some(e(3)), Some(e(0)), Some(e(2))]);
        assert_eq!(b.kept, vec![false, true, true]);
        let b = r.t2.iter().find(|b| b.beta == ev![3, 3, 4]).unwrap();
        assert_eq!(b.d, vec![Some(e(1)), Some(e(2)), Some(e(2))]);
        assert_eq!(b.kept, vec![true, false, true]);
        assert_eq!(st.components().len(), 6);
    }

    #[test]
    fn example_end_to_end() {
        let c = incremental_decompose(&example()).unwrap();
        assert_eq!(
            c.comps(),
            &sorted(vec![
                ev![4, 4, 2],
                ev![1, 4, inf],
                ev![4, 1, inf],
                ev![4, 2, 3],
                ev![2, 3, inf],
                ev![3, 3, 3],
            ])[..]
        );
    }

    #[test]
    fn irreducible_input() {
        let g = GeneratorSet::new(2, vec![ev![1, 0], ev![0, 1]]).unwrap();
        assert_eq!(incremental_decompose(&g).unwrap().comps(), &[ev![1, 1]]);
    }

    #[test]
    fn counterexample_shrinks() {
        let g = counterexample();
        let irr = incremental_decompose(&g).unwrap();
        assert_eq!(
            irr.comps(),
            &sorted(vec![
                ev![3, 3, 1, 1],
                ev![2, 3, 2, 1],
                ev![3, 2, 1, 2],
                ev![3, 1, 2, 2],
                ev![2, 2, 2, 2],
                ev![1, 3, 2, 2],
            ])[..]
        );

        let art = artinianize(&g);
        let mut st = UpdateState::from_pure_powers(art.pure_powers()).unwrap();
        for a in art.gens().iter().filter(|v| v.pure_power_var().is_none()) {
            st.update(a).unwrap();
        }
        let r = st.update(&ev![1, 1, 1, 1]).unwrap();
        assert_eq!(r.t2.len(), 1);
        assert_eq!(r.t2[0].beta, ev![2, 2, 2, 2]);
        assert_eq!(r.t2[0].d, vec![Some(e(1)); 4]);
        assert!(r.t2[0].kept.iter().all(|k| !k));
        assert_eq!(st.components().len(), 5);
        assert!(!st.components().contains(&ev![2, 2, 2, 2]));
    }

    #[test]
    fn rejects_member_of_ideal() {
        let mut st = UpdateState::from_pure_powers(&ev![2, 2]).unwrap();
        assert!(matches!(st.update(&ev![2, 0]), Err(Error::Usage(_))));
        assert_eq!(st.components(), &[ev![2, 2]]);
        assert!(st.update(&ev![1, inf]).is_err());
        assert!(UpdateState::from_pure_powers(&ev![0, 2]).is_err());
    }

    #[test]
    fn given_order_still_correct() {
        let g = GeneratorSet::new(
            3,
            vec![
                ev![2, 1, 3],
                ev![1, 3, 2],
                ev![3, 2, 2],
                ev![4, 0, 0],
                ev![0, 4, 0],
            ],
        )
        .unwrap();
        let run = incremental_decompose_with(
            &g,
            IncrementalOptions {
                order: InsertionOrder::AsGiven,
                check_max_merge: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(run.components, incremental_decompose(&example()).unwrap());
    }

    #[test]
    fn unit_ideal_is_empty() {
        let g = GeneratorSet::new(2, vec![ev![0, 0]]).unwrap();
        assert!(incremental_decompose(&g).unwrap().is_empty());
    }
}
