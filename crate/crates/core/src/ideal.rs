//! Generator sets, component sets and the Artinian closure that every engine
//! works on.

use std::collections::HashSet;

use crate::antichain::{is_antichain, maximalize, minimalize};
use crate::error::{Error, Result};
use crate::vector::{ExpVector, Exponent, MAX_INPUT_EXPONENT};

/// A finite set of monomial generators in `n` variables.
///
/// Construction validates the vectors; it does not minimalize. Use
/// [`GeneratorSet::minimalized`] to get `Min(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    n: usize,
    gens: Vec<ExpVector>,
    names: Option<Vec<String>>,
}

impl GeneratorSet {
    pub fn new(n: usize, gens: Vec<ExpVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("an ideal needs at least one variable".into()));
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            for e in g.iter() {
                match e.finite() {
                    Some(v) if v <= MAX_INPUT_EXPONENT => {}
                    _ => {
                        return Err(Error::BadExponent {
                            value: e.to_string(),
                        })
                    }
                }
            }
        }
        Ok(GeneratorSet {
            n,
            gens,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExpVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// `Min(I)`, lex-sorted.
    pub fn minimalized(&self) -> GeneratorSet {
        GeneratorSet {
            n: self.n,
            gens: minimalize(&self.gens),
            names: self.names.clone(),
        }
    }

    /// Contains the monomial 1.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    /// Membership of `X^gamma` by divisibility.
    pub fn contains(&self, gamma: &ExpVector) -> bool {
        self.gens.iter().any(|g| g.divides(gamma))
    }

    /// Largest degree of each variable over the generators.
    pub fn max_degrees(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for g in &self.gens {
            for (m, e) in out.iter_mut().zip(g.iter()) {
                *m = (*m).max(e.finite().unwrap_or(0));
            }
        }
        out
    }

    /// No variable appears with the same nonzero exponent in two distinct
    /// generators. Meaningful on minimalized sets.
    pub fn is_generic(&self) -> bool {
        (0..self.n).all(|i| {
            let mut seen = HashSet::new();
            self.gens
                .iter()
                .map(|g| g.get(i))
                .filter(|e| *e != Exponent::ZERO)
                .all(|e| seen.insert(e))
        })
    }

    /// Generators of `I + J`.
    pub fn sum(&self, other: &GeneratorSet) -> Result<GeneratorSet> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GeneratorSet::new(self.n, minimalize(&gens))
    }

    /// Generators of `I ∩ J` (pairwise lcms).
    pub fn intersection(&self, other: &GeneratorSet) -> Result<GeneratorSet> {
        self.same_ring(other)?;
        let gens: Vec<_> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        GeneratorSet::new(self.n, minimalize(&gens))
    }

    fn same_ring(&self, other: &GeneratorSet) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            })
        }
    }
}

/// The exponent vectors of an irredundant irreducible decomposition, lex-sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSet {
    n: usize,
    comps: Vec<ExpVector>,
}

impl ComponentSet {
    /// Sorts and deduplicates but does not enforce irredundancy; check with
    /// [`ComponentSet::is_antichain`] when the source is untrusted.
    pub fn new(n: usize, mut comps: Vec<ExpVector>) -> Result<Self> {
        for c in &comps {
            if c.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
        }
        comps.sort_unstable();
        comps.dedup();
        Ok(ComponentSet { n, comps })
    }

    /// Keeps only the maximal vectors.
    pub fn from_maximal(n: usize, comps: &[ExpVector]) -> Result<Self> {
        Self::new(n, maximalize(comps))
    }

    pub fn empty(n: usize) -> Self {
        ComponentSet {
            n,
            comps: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn comps(&self) -> &[ExpVector] {
        &self.comps
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_antichain(&self) -> bool {
        is_antichain(&self.comps)
    }

    pub fn into_vec(self) -> Vec<ExpVector> {
        self.comps
    }
}

/// A minimal generating set closed up with a pure power of every variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinianizedIdeal {
    base: GeneratorSet,
    gens: Vec<ExpVector>,
    bounds: ExpVector,
    added: Vec<bool>,
    pure: ExpVector,
}

/// Add `x_i^{c_i}` with `c_i = 1 + max degree of x_i` for every variable and
/// re-minimalize. An injected power is recorded only if it survives, i.e.
/// when the ideal had no pure power of `x_i` already.
pub fn artinianize(g: &GeneratorSet) -> ArtinianizedIdeal {
    let base = g.minimalized();
    let n = base.n();
    let bounds: Vec<Exponent> = base
        .max_degrees()
        .into_iter()
        .map(|d| Exponent::new(d + 1))
        .collect();
    let mut all = base.gens().to_vec();
    all.extend((0..n).map(|i| ExpVector::pure_power(n, i, bounds[i])));
    let gens = minimalize(&all);

    let mut added = vec![false; n];
    let mut pure = vec![Exponent::ZERO; n];
    for v in &gens {
        if let Some(i) = v.pure_power_var() {
            pure[i] = v.get(i);
            added[i] = v.get(i) == bounds[i];
        }
    }
    ArtinianizedIdeal {
        base,
        gens,
        bounds: ExpVector::new(bounds),
        added,
        pure: ExpVector::new(pure),
    }
}

impl ArtinianizedIdeal {
    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// The minimalized input, without injected powers.
    pub fn base(&self) -> &GeneratorSet {
        &self.base
    }

    /// `Min` of the Artinian ideal, lex-sorted.
    pub fn gens(&self) -> &[ExpVector] {
        &self.gens
    }

    pub fn bounds(&self) -> &ExpVector {
        &self.bounds
    }

    pub fn added(&self) -> &[bool] {
        &self.added
    }

    /// Exponent of the pure power of each variable in [`gens`](Self::gens).
    /// This is the single component of the pure-power ideal alone.
    pub fn pure_powers(&self) -> &ExpVector {
        &self.pure
    }

    pub fn is_unit(&self) -> bool {
        self.base.is_unit()
    }

    /// The Artinian ideal as a plain generator set.
    pub fn to_generator_set(&self) -> GeneratorSet {
        GeneratorSet {
            n: self.n(),
            gens: self.gens.clone(),
            names: None,
        }
    }

    /// Whether `v` is one of the injected powers.
    pub fn is_injected(&self, v: &ExpVector) -> bool {
        v.pure_power_var()
            .is_some_and(|i| self.added[i] && v.get(i) == self.bounds.get(i))
    }

    /// Map an injected bound `c_i` back to infinity.
    pub fn restore_infinity(&self, v: &ExpVector) -> Result<ExpVector> {
        let mut out = v.clone();
        for i in 0..self.n() {
            let e = v.get(i);
            if e.is_inf() {
                continue;
            }
            if e > self.bounds.get(i) {
                return Err(Error::Internal(format!(
                    "component {v} exceeds the Artinian bound {} in x{}",
                    self.bounds.get(i),
                    i + 1
                )));
            }
            if self.added[i] && e == self.bounds.get(i) {
                out.set(i, Exponent::INF);
            }
        }
        Ok(out)
    }
}

/// Translate components of the Artinian ideal back to the original ideal.
pub fn deartinianize(c: &ComponentSet, a: &ArtinianizedIdeal) -> Result<ComponentSet> {
    let restored = c
        .comps()
        .iter()
        .map(|v| a.restore_infinity(v))
        .collect::<Result<Vec<_>>>()?;
    ComponentSet::from_maximal(c.n(), &restored)
}
