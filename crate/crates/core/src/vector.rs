//! Extended exponents and exponent vectors.
//!
//! A monomial `x_1^{a_1} ... x_n^{a_n}` is stored as the vector `(a_1, ..., a_n)`
//! and an irreducible ideal `<x_1^{b_1}, ..., x_n^{b_n}>` as `(b_1, ..., b_n)`,
//! where a component exponent may be infinite (`x_i^inf = 0`).
//!
//! Two orders live here and must not be confused:
//!
//! * the divisibility partial order [`ExpVector::leq`] (and its strict
//!   all-coordinates variant [`ExpVector::strictly_below`]);
//! * the total lex order used for sorting, which compares coordinates from
//!   the last variable down to the first. This is the `Ord` impl.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest exponent accepted on input.
pub const MAX_INPUT_EXPONENT: u64 = 1 << 32;

/// A nonnegative integer or infinity. Every finite value is below [`Exponent::INF`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent(u64);

impl Exponent {
    pub const ZERO: Exponent = Exponent(0);
    pub const INF: Exponent = Exponent(u64::MAX);

    /// Panics if `v` collides with the infinity sentinel.
    pub const fn new(v: u64) -> Self {
        assert!(v != u64::MAX, "u64::MAX is reserved for infinity");
        Exponent(v)
    }

    pub fn is_inf(self) -> bool {
        self == Self::INF
    }

    pub fn finite(self) -> Option<u64> {
        (!self.is_inf()).then_some(self.0)
    }

    /// `inf - 1 = inf`; zero has no predecessor.
    pub fn pred(self) -> Option<Exponent> {
        match self {
            Self::INF => Some(Self::INF),
            Exponent(0) => None,
            Exponent(v) => Some(Exponent(v - 1)),
        }
    }

    /// `inf + 1 = inf`.
    pub fn succ(self) -> Exponent {
        if self.is_inf() {
            self
        } else {
            Exponent::new(self.0 + 1)
        }
    }
}

impl From<u64> for Exponent {
    fn from(v: u64) -> Self {
        Exponent::new(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.finite() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.finite() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str("inf"),
        }
    }
}

/// Fixed-length tuple of [`Exponent`]s.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpVector(Vec<Exponent>);

impl ExpVector {
    pub fn new(coords: Vec<Exponent>) -> Self {
        ExpVector(coords)
    }

    /// Build from finite values; handy in tests and parsers.
    pub fn from_u64s(vals: &[u64]) -> Self {
        ExpVector(vals.iter().map(|&v| Exponent::new(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        ExpVector(vec![Exponent::ZERO; n])
    }

    /// Exponent vector of the pure power `x_var^deg` in `n` variables.
    pub fn pure_power(n: usize, var: usize, deg: Exponent) -> Self {
        let mut v = Self::zeros(n);
        v.0[var] = deg;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Exponent] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = Exponent> + '_ {
        self.0.iter().copied()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|e| !e.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == Exponent::ZERO)
    }

    /// Index of the single nonzero coordinate, if this is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, e) in self.0.iter().enumerate() {
            if *e != Exponent::ZERO {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn check_len(&self, other: &ExpVector) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            })
        }
    }

    /// Componentwise `<=`; for monomials this is divisibility.
    pub fn leq(&self, other: &ExpVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides(other))
    }

    /// Every coordinate strictly smaller.
    pub fn strictly_below(&self, other: &ExpVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.prec(other))
    }

    pub fn lex_cmp(&self, other: &ExpVector) -> Result<Ordering> {
        self.check_len(other)?;
        Ok(self.cmp(other))
    }

    // Unchecked variants for the hot loops; callers guarantee equal lengths.

    #[inline]
    pub(crate) fn divides(&self, other: &ExpVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    #[inline]
    pub(crate) fn prec(&self, other: &ExpVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// `beta ⊖ 1`: every coordinate minus one, infinity fixed.
    pub fn decrement(&self) -> Result<ExpVector> {
        self.0
            .iter()
            .enumerate()
            .map(|(index, e)| e.pred().ok_or(Error::ZeroCoordinate { index }))
            .collect::<Result<Vec<_>>>()
            .map(ExpVector)
    }

    /// Inverse of [`decrement`](Self::decrement).
    pub fn increment(&self) -> ExpVector {
        ExpVector(self.0.iter().map(|e| e.succ()).collect())
    }

    /// Copy with coordinate `j` set to `value`.
    pub fn replace_coord(&self, j: usize, value: Exponent) -> Result<ExpVector> {
        if j >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        let mut v = self.clone();
        v.0[j] = value;
        Ok(v)
    }

    /// Append one more coordinate, i.e. `(u, d)`.
    pub fn extended(&self, d: Exponent) -> ExpVector {
        let mut v = self.0.clone();
        v.push(d);
        ExpVector(v)
    }

    /// Drop the last coordinate.
    pub fn truncated(&self) -> ExpVector {
        ExpVector(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &ExpVector) -> ExpVector {
        ExpVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub(crate) fn set(&mut self, i: usize, e: Exponent) {
        self.0[i] = e;
    }
}

impl Ord for ExpVector {
    /// Lex order with variable order `x_1 < ... < x_n`: the last coordinate
    /// is most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for ExpVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExpVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl From<Vec<Exponent>> for ExpVector {
    fn from(v: Vec<Exponent>) -> Self {
        ExpVector(v)
    }
}

/// Shorthand for vectors in tests and examples. `inf` spells infinity.
///
/// ```
/// use mondec_core::ev;
/// let v = ev![4, 1, inf];
/// assert!(v.get(2).is_inf());
/// ```
#[macro_export]
macro_rules! ev {
    (@e inf) => { $crate::Exponent::INF };
    (@e $x:expr) => { $crate::Exponent::new($x) };
    ($($x:tt),* $(,)?) => {
        $crate::ExpVector::new(vec![$($crate::ev!(@e $x)),*])
    };
}
