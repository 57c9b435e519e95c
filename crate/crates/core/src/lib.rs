//! Irreducible decomposition of monomial ideals.
//!
//! A monomial ideal `I` is the intersection of irreducible ideals
//! `<x_1^{b_1}, ..., x_n^{b_n}>` in exactly one irredundant way. This crate
//! computes that decomposition with two engines and checks them against a
//! third:
//!
//! * [`recursive`] slices the staircase on the degrees of the last variable
//!   and recurses on the coefficient ideals;
//! * [`incremental`] adds one generator at a time and updates the component
//!   list with an exact redundancy test;
//! * [`oracle`] enumerates the staircase inside the Artinian box and reads
//!   the components off its maximal points.
//!
//! ```
//! use mondec_core::{decompose, ev, Algorithm, GeneratorSet};
//!
//! // <x^2 y^3> = <x^2> ∩ <y^3>
//! let g = GeneratorSet::new(2, vec![ev![2, 3]]).unwrap();
//! let c = decompose(&g, Algorithm::Incremental).unwrap();
//! assert_eq!(c.comps(), &[ev![inf, 3], ev![2, inf]]);
//! ```

pub mod antichain;
pub mod bench;
pub mod error;
pub mod ideal;
pub mod incremental;
pub mod io;
pub mod ops;
pub mod oracle;
pub mod random;
pub mod recursive;
pub mod trace;
pub mod trie;
pub mod vector;

pub use antichain::{is_antichain, maximalize, minimalize};
pub use error::{Error, Result};
pub use ideal::{artinianize, deartinianize, ArtinianizedIdeal, ComponentSet, GeneratorSet};
pub use ops::OpCounter;
pub use trie::Trie;
pub use vector::{ExpVector, Exponent};

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Recursive,
    Incremental,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [
        Algorithm::Recursive,
        Algorithm::Incremental,
        Algorithm::Oracle,
    ];
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Recursive => "recursive",
            Algorithm::Incremental => "incremental",
            Algorithm::Oracle => "oracle",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(Algorithm::Recursive),
            "incremental" => Ok(Algorithm::Incremental),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(Error::Usage(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Decompose with the chosen engine using default settings.
pub fn decompose(g: &GeneratorSet, algo: Algorithm) -> Result<ComponentSet> {
    match algo {
        Algorithm::Recursive => Ok(recursive::decompose_recursive(g)?.components),
        Algorithm::Incremental => incremental::incremental_decompose(g),
        Algorithm::Oracle => oracle::decompose_oracle(g, oracle::DEFAULT_BUDGET),
    }
}
