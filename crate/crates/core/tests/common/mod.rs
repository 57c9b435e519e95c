//! Seeded property checks shared by the lemma suites and the acceptance runner.
//!
//! Every check walks a fixed range of seeds and returns the number of
//! instances examined, or a message naming the first failing seed.

#![allow(dead_code)]

use mondec_core::incremental::{
    incremental_decompose_with, match_profile, IncrementalOptions, UpdateState,
};
use mondec_core::oracle::{
    components_generate, decompose_oracle, ideals_equal_by_membership, staircase, StaircaseBox,
    DEFAULT_BUDGET,
};
use mondec_core::random::{gen_random, RandomIdeal};
use mondec_core::recursive::{decompose_bivariate, decompose_recursive, SliceChain};
use mondec_core::{
    artinianize, decompose, maximalize, Algorithm, ArtinianizedIdeal, ComponentSet, ExpVector,
    GeneratorSet, Trie,
};

pub type Check = std::result::Result<usize, String>;

/// Small instance for `seed`: n in {2,3,4}, at most 8 generators, degrees
/// at most 6, generic on even seeds.
pub fn small_params(seed: u64) -> RandomIdeal {
    let n = 2 + (seed % 3) as usize;
    let generic = seed.is_multiple_of(2);
    let maxdeg = 2 + (seed / 6) % 5;
    let mut p = 1 + ((seed / 30) % 8) as usize;
    if generic {
        p = p.min(maxdeg as usize + 1);
    }
    RandomIdeal {
        n,
        p,
        maxdeg,
        seed,
        generic,
    }
}

pub fn small_ideal(seed: u64) -> GeneratorSet {
    gen_random(small_params(seed)).expect("valid parameters")
}

pub fn generic_ideal(seed: u64) -> GeneratorSet {
    let n = 2 + (seed % 3) as usize;
    let p = 2 + ((seed / 3) % 7) as usize;
    gen_random(RandomIdeal {
        n,
        p,
        maxdeg: p as u64 + (seed / 21) % 3,
        seed,
        generic: true,
    })
    .expect("valid parameters")
}

fn fail<T: std::fmt::Debug>(what: &str, seed: u64, detail: T) -> String {
    format!("{what}: seed {seed}: {detail:?}")
}

fn bounds_of(art: &ArtinianizedIdeal) -> Vec<u64> {
    art.bounds().iter().map(|e| e.finite().unwrap()).collect()
}

/// Components of the ideal generated by `gens` inside `bounds`, read off the
/// maximal box points without infinity restored.
fn box_components(gens: &[ExpVector], bounds: &[u64]) -> Vec<ExpVector> {
    let bx = StaircaseBox::new(gens, bounds, DEFAULT_BUDGET).unwrap();
    let mut v: Vec<ExpVector> = bx
        .maximal_points()
        .iter()
        .map(ExpVector::increment)
        .collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<ExpVector>) -> Vec<ExpVector> {
    v.sort();
    v
}

/// Ideals with at least one non-pure generator, which gives the incremental
/// engine something to do.
fn nontrivial(seed: u64) -> Option<(GeneratorSet, ArtinianizedIdeal)> {
    let g = small_ideal(seed);
    let art = artinianize(&g);
    if art.is_unit() || art.gens().iter().all(|v| v.pure_power_var().is_some()) {
        return None;
    }
    Some((g, art))
}

/// Runs `f` on successive non-trivial instances until `count` have been seen.
fn over_instances(
    count: usize,
    mut f: impl FnMut(u64, &GeneratorSet, &ArtinianizedIdeal) -> Result<(), String>,
) -> Check {
    let mut seen = 0;
    let mut seed = 0;
    while seen < count {
        if let Some((g, art)) = nontrivial(seed) {
            f(seed, &g, &art)?;
            seen += 1;
        }
        seed += 1;
    }
    Ok(seen)
}

/// `gamma ∈ B(I)` iff `gamma ≺ beta` for some component `beta`.
pub fn lemma_bi(count: usize) -> Check {
    over_instances(count, |seed, g, art| {
        let comps = decompose_recursive(g)
            .map_err(|e| fail("bi", seed, e))?
            .components;
        let bx = staircase(art).unwrap();
        for gamma in bx.points() {
            let below = comps
                .comps()
                .iter()
                .any(|b| gamma.strictly_below(b).unwrap());
            if bx.in_basis(&gamma) != below {
                return Err(fail("bi", seed, gamma));
            }
        }
        Ok(())
    })
}

/// `beta` is a component iff `beta ⊖ 1` is maximal in `B(I)`.
pub fn lemma_irri(count: usize) -> Check {
    over_instances(count, |seed, _, art| {
        let full = art.to_generator_set();
        let comps = decompose(&full, Algorithm::Incremental).map_err(|e| fail("irri", seed, e))?;
        let shifted = sorted(
            comps
                .comps()
                .iter()
                .map(|b| b.decrement().unwrap())
                .collect(),
        );
        let bx = staircase(art).unwrap();
        let maximal = sorted(maximalize(&bx.basis()));
        if shifted != maximal {
            return Err(fail("irri", seed, (shifted, maximal)));
        }
        Ok(())
    })
}

/// `(mu, d) ∈ B(I)` iff `d_k <= d < d_{k+1}` and `mu ∈ B(I_k)`.
pub fn lemma_d(count: usize) -> Check {
    over_instances(count, |seed, _, art| {
        let n = art.n();
        let chain = SliceChain::from_trie(&Trie::build(n, art.gens()).unwrap())
            .map_err(|e| fail("d", seed, e))?;
        let level_gens: Vec<Vec<ExpVector>> = chain.tries.iter().map(|t| t.paths()).collect();
        let bx = staircase(art).unwrap();
        for gamma in bx.points() {
            let mu = gamma.truncated();
            let predicted = chain
                .level_of(gamma.get(n - 1))
                .is_some_and(|k| !level_gens[k].iter().any(|m| m.leq(&mu).unwrap()));
            if bx.in_basis(&gamma) != predicted {
                return Err(fail("d", seed, gamma));
            }
        }
        Ok(())
    })
}

fn lex_alphas(art: &ArtinianizedIdeal) -> Vec<ExpVector> {
    art.gens()
        .iter()
        .filter(|v| v.pure_power_var().is_none())
        .cloned()
        .collect()
}

/// Replays the incremental engine, calling `f` with the state and the next
/// generator before each update.
fn replay(
    art: &ArtinianizedIdeal,
    mut f: impl FnMut(&mut UpdateState, &ExpVector) -> Result<(), String>,
) -> Result<(), String> {
    let mut state = UpdateState::from_pure_powers(art.pure_powers()).map_err(|e| e.to_string())?;
    for alpha in lex_alphas(art) {
        f(&mut state, &alpha)?;
        state.update(&alpha).map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Every `beta` in `T1` survives the update unchanged.
pub fn lemma_case1(count: usize) -> Check {
    let mut carried = 0usize;
    let seen = over_instances(count, |seed, g, _| {
        let run = incremental_decompose_with(
            g,
            IncrementalOptions {
                record_steps: true,
                ..Default::default()
            },
        )
        .map_err(|e| fail("case1", seed, e))?;
        for step in &run.steps {
            if let Some(b) = step.t1.iter().find(|b| !step.t_after.contains(b)) {
                return Err(fail("case1", seed, (step.step, b)));
            }
            carried += step.t1.len();
        }
        Ok(())
    })?;
    if carried == 0 {
        return Err("case1: no step had a non-empty T1".into());
    }
    Ok(seen)
}

fn brute_m_beta(gens: &[ExpVector], beta: &ExpVector) -> Vec<ExpVector> {
    sorted(
        gens.iter()
            .filter(|m| m.leq(beta).unwrap())
            .cloned()
            .collect(),
    )
}

/// For every current `beta` and every `u`, some generator dividing `X^beta`
/// matches it in `x_u` alone.
pub fn lemma_only(count: usize) -> Check {
    over_instances(count, |seed, _, art| {
        replay(art, |state, _| {
            for beta in state.components().to_vec() {
                let m = brute_m_beta(state.generators(), &beta);
                for u in 0..beta.len() {
                    if !m.iter().any(|m| match_profile(m, &beta) == [u]) {
                        return Err(fail("only", seed, (&beta, u)));
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| fail("only", seed, e))
    })
}

/// The coordinatewise maximum over `M_beta` is `beta`, and the indexed
/// lookup finds exactly the dividing generators.
pub fn max_m_beta(count: usize) -> Check {
    over_instances(count, |seed, _, art| {
        replay(art, |state, _| {
            for beta in state.components().to_vec() {
                let m = brute_m_beta(state.generators(), &beta);
                let indexed = sorted(state.find_m_beta(&beta));
                if indexed != m {
                    return Err(fail("m_beta lookup", seed, (&beta, indexed, m)));
                }
                let top = m.iter().skip(1).fold(m[0].clone(), |acc, v| acc.lcm(v));
                if top != beta {
                    return Err(fail("max(M_beta)", seed, (&beta, top)));
                }
            }
            Ok(())
        })
        .map_err(|e| fail("max(M_beta)", seed, e))
    })
}

/// `beta^(alpha,u)` is a component after the update iff `d(beta,u) < a_u`.
pub fn lemma_du(count: usize) -> Check {
    let (mut kept, mut rejected) = (0usize, 0usize);
    let seen = over_instances(count, |seed, _, art| {
        let bounds = bounds_of(art);
        replay(art, |state, alpha| {
            let mut probe = state.clone();
            let report = probe.update(alpha).map_err(|e| e.to_string())?;
            let truth = box_components(probe.generators(), &bounds);
            for upd in &report.t2 {
                for u in 0..alpha.len() {
                    let cand = upd.candidate(alpha, u);
                    if truth.binary_search(&cand).is_ok() != upd.kept[u] {
                        return Err(fail("du", seed, (&upd.beta, u, &upd.d)));
                    }
                    if upd.kept[u] {
                        kept += 1;
                    } else {
                        rejected += 1;
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| fail("du", seed, e))
    })?;
    if kept == 0 || rejected == 0 {
        return Err(format!(
            "du: vacuous run ({kept} kept, {rejected} rejected)"
        ));
    }
    Ok(seen)
}

/// After every update, `T` equals the brute-force components of the
/// generators inserted so far.
pub fn loop_invariant(count: usize) -> Check {
    over_instances(count, |seed, _, art| {
        let bounds = bounds_of(art);
        let mut state = UpdateState::from_pure_powers(art.pure_powers())
            .unwrap()
            .with_max_merge_check(true);
        for alpha in lex_alphas(art) {
            state
                .update(&alpha)
                .map_err(|e| fail("invariant", seed, e))?;
            let got = sorted(state.components().to_vec());
            let want = box_components(state.generators(), &bounds);
            if got != want {
                return Err(fail("invariant", seed, (alpha, got, want)));
            }
        }
        Ok(())
    })
}

/// All three engines agree, the result generates the ideal and is an
/// antichain.
pub fn cross_validate(count: usize) -> Check {
    let mut generic = 0;
    for seed in 0..count as u64 {
        let g = small_ideal(seed);
        if seed % 2 == 0 {
            generic += 1;
        }
        let outs: Vec<ComponentSet> = Algorithm::ALL
            .iter()
            .map(|&a| decompose(&g, a).map_err(|e| fail(&a.to_string(), seed, e)))
            .collect::<Result<_, _>>()?;
        if outs[0] != outs[1] || outs[1] != outs[2] {
            return Err(fail("engines disagree", seed, &outs));
        }
        if !outs[0].is_antichain() {
            return Err(fail("not an antichain", seed, &outs[0]));
        }
        if !components_generate(&outs[0], &g).map_err(|e| fail("generate", seed, e))? {
            return Err(fail("components do not generate", seed, g.gens()));
        }
    }
    if generic * 2 != count {
        return Err(format!("expected half generic, got {generic} of {count}"));
    }
    Ok(count)
}

/// On generic inputs with lex insertion `|T|` never shrinks and peaks at the
/// final count.
pub fn nondecreasing(count: usize) -> Check {
    for seed in 0..count as u64 {
        let g = generic_ideal(seed);
        if !g.is_generic() {
            return Err(fail("not generic", seed, g.gens()));
        }
        let run = incremental_decompose_with(&g, IncrementalOptions::default())
            .map_err(|e| fail("nondecr", seed, e))?;
        if !run.is_monotone() || run.peak() != run.components.len() {
            return Err(fail("nondecr", seed, &run.sizes));
        }
    }
    Ok(count)
}

/// `(I1+I2)∩J = I1∩J + I2∩J` and `(I1∩I2)+J = (I1+J)∩(I2+J)`.
pub fn distribution_rules(count: usize) -> Check {
    for seed in 0..count as u64 {
        let n = 2 + (seed % 2) as usize;
        let draw = |k: u64| {
            gen_random(RandomIdeal {
                n,
                p: 1 + ((seed + k) % 3) as usize,
                maxdeg: 3,
                seed: 3 * seed + k,
                generic: false,
            })
            .unwrap()
        };
        let (i1, i2, j) = (draw(0), draw(1), draw(2));
        let err = |e| fail("distr", seed, e);
        let a_lhs = i1.sum(&i2).and_then(|s| s.intersection(&j)).map_err(err)?;
        let a_rhs = i1
            .intersection(&j)
            .and_then(|x| x.sum(&i2.intersection(&j)?))
            .map_err(err)?;
        let b_lhs = i1.intersection(&i2).and_then(|x| x.sum(&j)).map_err(err)?;
        let b_rhs = i1
            .sum(&j)
            .and_then(|x| x.intersection(&i2.sum(&j)?))
            .map_err(err)?;
        if !ideals_equal_by_membership(&a_lhs, &a_rhs).map_err(err)? {
            return Err(fail("rule (a)", seed, (i1.gens(), i2.gens(), j.gens())));
        }
        if !ideals_equal_by_membership(&b_lhs, &b_rhs).map_err(err)? {
            return Err(fail("rule (b)", seed, (i1.gens(), i2.gens(), j.gens())));
        }
    }
    Ok(count)
}

/// The two-variable closed form matches brute force.
pub fn bivariate(count: usize) -> Check {
    for seed in 0..count as u64 {
        let g = gen_random(RandomIdeal {
            n: 2,
            p: 1 + (seed % 8) as usize,
            maxdeg: 1 + (seed / 8) % 9,
            seed,
            generic: false,
        })
        .unwrap();
        let closed = decompose_bivariate(&g).map_err(|e| fail("bivariate", seed, e))?;
        let oracle = decompose_oracle(&g, DEFAULT_BUDGET).map_err(|e| fail("oracle", seed, e))?;
        if closed != oracle {
            return Err(fail("bivariate", seed, (g.gens(), closed, oracle)));
        }
    }
    Ok(count)
}
