//! Brute-force verifier.
//!
//! Fill the staircase `B(I)` inside the Artinian box and read the components
//! off its maximal points: `beta` is a component iff `beta ⊖ 1` is maximal in
//! `B(I)`. Only meant for small boxes.

use crate::error::{Error, Result};
use crate::ideal::{artinianize, deartinianize, ArtinianizedIdeal, ComponentSet, GeneratorSet};
use crate::vector::{ExpVector, Exponent};

/// Default cap on the number of box cells.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Membership of every lattice point of `[0, c_1) x ... x [0, c_n)` in `I`.
///
/// Cells are stored with coordinate 1 varying fastest.
#[derive(Debug, Clone)]
pub struct StaircaseBox {
    bounds: Vec<u64>,
    strides: Vec<usize>,
    in_ideal: Vec<bool>,
}

fn box_cells(bounds: &[u64], budget: u64) -> Result<usize> {
    let cells = bounds.iter().map(|&b| b as u128).product::<u128>();
    if cells > budget as u128 {
        return Err(Error::BudgetExceeded { cells, budget });
    }
    Ok(cells as usize)
}

impl StaircaseBox {
    /// Fill the box for the ideal generated by `gens`.
    pub fn new(gens: &[ExpVector], bounds: &[u64], budget: u64) -> Result<Self> {
        let cells = box_cells(bounds, budget)?;
        let mut strides = Vec::with_capacity(bounds.len());
        let mut s = 1usize;
        for &b in bounds {
            strides.push(s);
            s *= b as usize;
        }
        let mut in_ideal = vec![false; cells];
        let mut bx = StaircaseBox {
            bounds: bounds.to_vec(),
            strides,
            in_ideal: Vec::new(),
        };
        if cells == 0 {
            bx.in_ideal = in_ideal;
            return Ok(bx);
        }
        for g in gens {
            if g.len() != bounds.len() {
                return Err(Error::LengthMismatch {
                    expected: bounds.len(),
                    got: g.len(),
                });
            }
            if let Some(i) = bx.index_of(g) {
                in_ideal[i] = true;
            }
        }
        // Upward closure: a point is in I iff it is a generator or one of its
        // lower neighbours is. Lower neighbours have smaller indices.
        let mut point = vec![0u64; bounds.len()];
        for idx in 0..cells {
            if !in_ideal[idx] {
                in_ideal[idx] = point
                    .iter()
                    .zip(&bx.strides)
                    .any(|(&c, &s)| c > 0 && in_ideal[idx - s]);
            }
            for (c, &b) in point.iter_mut().zip(bounds) {
                *c += 1;
                if *c < b {
                    break;
                }
                *c = 0;
            }
        }
        bx.in_ideal = in_ideal;
        Ok(bx)
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    pub fn cells(&self) -> usize {
        self.in_ideal.len()
    }

    fn index_of(&self, v: &ExpVector) -> Option<usize> {
        let mut idx = 0;
        for ((e, &b), &s) in v.iter().zip(&self.bounds).zip(&self.strides) {
            let e = e.finite()?;
            if e >= b {
                return None;
            }
            idx += e as usize * s;
        }
        Some(idx)
    }

    fn point_of(&self, mut idx: usize) -> ExpVector {
        let coords = self
            .bounds
            .iter()
            .map(|&b| {
                let c = idx as u64 % b;
                idx /= b as usize;
                Exponent::new(c)
            })
            .collect();
        ExpVector::new(coords)
    }

    /// `X^gamma ∈ I`. Points outside the box count as members.
    pub fn in_ideal(&self, gamma: &ExpVector) -> bool {
        self.index_of(gamma).is_none_or(|i| self.in_ideal[i])
    }

    pub fn in_basis(&self, gamma: &ExpVector) -> bool {
        !self.in_ideal(gamma)
    }

    pub fn points(&self) -> impl Iterator<Item = ExpVector> + '_ {
        (0..self.cells()).map(|i| self.point_of(i))
    }

    /// `B(I)` in box order.
    pub fn basis(&self) -> Vec<ExpVector> {
        (0..self.cells())
            .filter(|&i| !self.in_ideal[i])
            .map(|i| self.point_of(i))
            .collect()
    }

    /// Points of `B(I)` with `gamma + e_u ∈ I` for every `u`.
    pub fn maximal_points(&self) -> Vec<ExpVector> {
        (0..self.cells())
            .filter(|&i| !self.in_ideal[i] && self.is_maximal_index(i))
            .map(|i| self.point_of(i))
            .collect()
    }

    fn is_maximal_index(&self, idx: usize) -> bool {
        let p = self.point_of(idx);
        (0..self.bounds.len()).all(|u| {
            let c = p.get(u).finite().unwrap_or(0);
            c + 1 >= self.bounds[u] || self.in_ideal[idx + self.strides[u]]
        })
    }

    /// `B(I)` is closed downward.
    pub fn is_delta_set(&self) -> bool {
        (0..self.cells()).all(|i| {
            if self.in_ideal[i] {
                return true;
            }
            let p = self.point_of(i);
            (0..self.bounds.len())
                .all(|u| p.get(u) == Exponent::ZERO || !self.in_ideal[i - self.strides[u]])
        })
    }
}

fn finite_bounds(a: &ArtinianizedIdeal) -> Vec<u64> {
    a.bounds().iter().map(|e| e.finite().unwrap_or(1)).collect()
}

/// Staircase of an Artinian ideal over its bound box.
pub fn staircase(a: &ArtinianizedIdeal) -> Result<StaircaseBox> {
    staircase_with_budget(a, DEFAULT_BUDGET)
}

pub fn staircase_with_budget(a: &ArtinianizedIdeal, budget: u64) -> Result<StaircaseBox> {
    StaircaseBox::new(a.gens(), &finite_bounds(a), budget)
}

/// Components of the Artinian ideal, still with finite bounds.
pub fn irr_oracle_artinian(a: &ArtinianizedIdeal, budget: u64) -> Result<ComponentSet> {
    let bx = staircase_with_budget(a, budget)?;
    let comps = bx
        .maximal_points()
        .iter()
        .map(ExpVector::increment)
        .collect();
    ComponentSet::new(a.n(), comps)
}

/// Components read off the maximal staircase points, with infinity restored.
pub fn irr_oracle(a: &ArtinianizedIdeal) -> Result<ComponentSet> {
    irr_oracle_with_budget(a, DEFAULT_BUDGET)
}

pub fn irr_oracle_with_budget(a: &ArtinianizedIdeal, budget: u64) -> Result<ComponentSet> {
    if a.is_unit() {
        return Ok(ComponentSet::empty(a.n()));
    }
    deartinianize(&irr_oracle_artinian(a, budget)?, a)
}

/// Convenience: artinianize and run the oracle.
pub fn decompose_oracle(g: &GeneratorSet, budget: u64) -> Result<ComponentSet> {
    irr_oracle_with_budget(&artinianize(g), budget)
}

/// Same ideal, decided by membership over a box holding every generator of
/// both sides.
pub fn ideals_equal_by_membership(g1: &GeneratorSet, g2: &GeneratorSet) -> Result<bool> {
    ideals_equal_with_budget(g1, g2, DEFAULT_BUDGET)
}

pub fn ideals_equal_with_budget(g1: &GeneratorSet, g2: &GeneratorSet, budget: u64) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::LengthMismatch {
            expected: g1.n(),
            got: g2.n(),
        });
    }
    let bounds: Vec<u64> = g1
        .max_degrees()
        .iter()
        .zip(g2.max_degrees())
        .map(|(a, b)| a.max(&b) + 1)
        .collect();
    let b1 = StaircaseBox::new(g1.gens(), &bounds, budget)?;
    let b2 = StaircaseBox::new(g2.gens(), &bounds, budget)?;
    Ok(b1.in_ideal == b2.in_ideal)
}

/// Does `I = ⋂_{beta ∈ c} m^beta` hold pointwise?
///
/// The box reaches one past every finite exponent that occurs on either
/// side, which covers every distinct membership pattern.
pub fn components_generate(c: &ComponentSet, g: &GeneratorSet) -> Result<bool> {
    components_generate_with_budget(c, g, DEFAULT_BUDGET)
}

pub fn components_generate_with_budget(
    c: &ComponentSet,
    g: &GeneratorSet,
    budget: u64,
) -> Result<bool> {
    if c.n() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: c.n(),
        });
    }
    let mut bounds: Vec<u64> = g.max_degrees().iter().map(|d| d + 1).collect();
    for beta in c.comps() {
        for (b, e) in bounds.iter_mut().zip(beta.iter()) {
            if let Some(v) = e.finite() {
                *b = (*b).max(v + 1);
            }
        }
    }
    let bx = StaircaseBox::new(g.gens(), &bounds, budget)?;
    let ok = bx.points().all(|gamma| {
        let by_comps = c.comps().iter().all(|beta| !gamma.prec(beta));
        bx.in_ideal(&gamma) == by_comps
    });
    Ok(ok)
}
