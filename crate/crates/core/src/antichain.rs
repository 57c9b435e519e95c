//! Minimal and maximal elements under the divisibility order.

use crate::ops::OpCounter;
use crate::vector::ExpVector;

/// The `<=`-minimal elements of `vs`, deduplicated and lex-sorted.
pub fn minimalize(vs: &[ExpVector]) -> Vec<ExpVector> {
    minimalize_counted(vs.to_vec(), &mut OpCounter::new())
}

/// The `<=`-maximal elements of `vs`, deduplicated and lex-sorted.
pub fn maximalize(vs: &[ExpVector]) -> Vec<ExpVector> {
    maximalize_counted(vs.to_vec(), &mut OpCounter::new())
}

pub(crate) fn minimalize_counted(mut vs: Vec<ExpVector>, ops: &mut OpCounter) -> Vec<ExpVector> {
    // Lex refines divisibility, so after sorting a vector can only be divided
    // by something that precedes it.
    vs.sort_unstable();
    vs.dedup();
    let mut kept: Vec<ExpVector> = Vec::with_capacity(vs.len());
    for v in vs {
        let dominated = kept.iter().any(|k| {
            ops.tick();
            k.divides(&v)
        });
        if !dominated {
            kept.push(v);
        }
    }
    kept
}

pub(crate) fn maximalize_counted(mut vs: Vec<ExpVector>, ops: &mut OpCounter) -> Vec<ExpVector> {
    vs.sort_unstable_by(|a, b| b.cmp(a));
    vs.dedup();
    let mut kept: Vec<ExpVector> = Vec::with_capacity(vs.len());
    for v in vs {
        let dominated = kept.iter().any(|k| {
            ops.tick();
            v.divides(k)
        });
        if !dominated {
            kept.push(v);
        }
    }
    kept.reverse();
    kept
}

/// No two distinct elements are comparable.
pub fn is_antichain(vs: &[ExpVector]) -> bool {
    vs.iter().enumerate().all(|(i, a)| {
        vs.iter()
            .enumerate()
            .all(|(j, b)| i == j || (a != b && !a.divides(b)))
    })
}
