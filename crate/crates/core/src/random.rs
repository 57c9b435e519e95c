//! Seeded random monomial ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::GeneratorSet;
use crate::vector::ExpVector;

/// Parameters for [`gen_random`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomIdeal {
    pub n: usize,
    pub p: usize,
    pub maxdeg: u64,
    pub seed: u64,
    pub generic: bool,
}

/// Draw `p` exponent vectors with entries in `0..=maxdeg` and minimalize.
///
/// With `generic`, each variable's degrees are a random selection of
/// distinct values from `0..=maxdeg`, so no nonzero degree repeats; that
/// needs `p <= maxdeg + 1`. The all-zero vector is never produced. The
/// result may hold fewer than `p` generators after minimalization.
pub fn gen_random(params: RandomIdeal) -> Result<GeneratorSet> {
    let RandomIdeal {
        n,
        p,
        maxdeg,
        seed,
        generic,
    } = params;
    if n == 0 || p == 0 || maxdeg == 0 {
        return Err(Error::Usage(
            "need at least one variable, one generator and maxdeg >= 1".into(),
        ));
    }
    if generic && (p as u64).saturating_sub(1) > maxdeg {
        return Err(Error::Usage(format!(
            "a generic ideal with {p} generators needs maxdeg >= {}",
            p - 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = if generic {
        draw_generic(&mut rng, n, p, maxdeg)
    } else {
        (0..p)
            .map(|_| loop {
                let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=maxdeg)).collect();
                if v.iter().any(|&e| e > 0) {
                    break ExpVector::from_u64s(&v);
                }
            })
            .collect()
    };
    Ok(GeneratorSet::new(n, gens)?.minimalized())
}

fn draw_generic(rng: &mut ChaCha8Rng, n: usize, p: usize, maxdeg: u64) -> Vec<ExpVector> {
    let pool: Vec<u64> = (0..=maxdeg).collect();
    loop {
        let columns: Vec<Vec<u64>> = (0..n)
            .map(|_| pool.choose_multiple(rng, p).copied().collect())
            .collect();
        let gens: Vec<ExpVector> = (0..p)
            .map(|j| ExpVector::from_u64s(&columns.iter().map(|c| c[j]).collect::<Vec<_>>()))
            .collect();
        if gens.iter().all(|g| !g.is_zero()) {
            return gens;
        }
    }
}
