//! Acceptance suite: ten verification sweeps over the worked example
//! families plus seeded random instances, and the corpus regression check.
//! Shared between the `accept` subcommand and the integration tests.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use toricdeg::binomial::{self, Binomial, Monomial, TermOrder, Tiebreak};
use toricdeg::invariants::{self, IntervalCase};
use toricdeg::lattice;
use toricdeg::moebius::{self, MoebiusContext};
use toricdeg::toric::{self, SemigroupPresentation};
use toricdeg::{GeneratorMatrix, Int, IntVec};

use crate::problem::{parse_vec, ProblemFile};
use crate::random::random_instance;
use crate::{CliError, CliResult};

pub struct CriterionOutcome {
    pub label: String,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(
    label: &str,
    name: &'static str,
    result: Result<String, String>,
) -> CriterionOutcome {
    match result {
        Ok(detail) => CriterionOutcome {
            label: label.into(),
            name,
            passed: true,
            detail,
        },
        Err(detail) => CriterionOutcome {
            label: label.into(),
            name,
            passed: false,
            detail,
        },
    }
}

/// Runs the corpus check (when a directory is given) followed by the ten
/// criteria.  Usage problems with the corpus directory surface as errors;
/// everything else becomes a pass/fail line.
pub fn run_all(
    corpus: Option<&Path>,
    seed: u64,
    max_n: usize,
) -> CliResult<Vec<CriterionOutcome>> {
    let mut out = Vec::new();
    if let Some(dir) = corpus {
        for (name, result) in check_corpus(dir)? {
            out.push(outcome(
                &format!("corpus:{name}"),
                "corpus entry matches its expected sidecar",
                result.map(|()| "ok".into()),
            ));
        }
    }
    for label in CRITERIA {
        out.push(run_criterion(label, seed, max_n).expect("known label"));
    }
    Ok(out)
}

pub const CRITERIA: [&str; 10] = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"];

/// Runs a single criterion by label; `None` for an unknown label.
pub fn run_criterion(label: &str, seed: u64, max_n: usize) -> Option<CriterionOutcome> {
    let (name, result): (&'static str, Result<String, String>) = match label {
        "1" => ("degeneration equals extended toric ideal", criterion1(seed, max_n)),
        "2" => ("Betti sets of the numerical example", criterion2()),
        "3" => ("scroll basis and degenerated Betti set", criterion3()),
        "4" => ("saturation dichotomy of the slope family", criterion4()),
        "5" => ("interval family case shapes and uniqueness", criterion5()),
        "6" => ("Betti lifting and subset-count bound", criterion6(seed)),
        "7" => ("approximation certificates", criterion7(seed)),
        "8" => ("Moebius closed formulas vs brute force", criterion8()),
        "9" => ("Lawrence degenerations uniquely presented", criterion9(seed)),
        "10" => ("independent oracle sweeps", criterion10()),
        _ => return None,
    };
    Some(outcome(label, name, result))
}

fn iv(entries: &[i64]) -> IntVec {
    IntVec::from_i64(entries)
}

fn ones(n: usize) -> IntVec {
    IntVec::from_i64(&vec![1; n])
}

fn one_one() -> SemigroupPresentation {
    SemigroupPresentation::numerical(&[6, 10, 15])
}

fn scroll() -> SemigroupPresentation {
    SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
        &[1, 1, 1, 1],
        &[0, 1, 2, 3],
    ]))
}

fn hypersurface() -> SemigroupPresentation {
    SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
        &[1, 1, 1],
        &[0, 1, 2],
    ]))
}

fn case_key(case: &IntervalCase) -> &'static str {
    match case {
        IntervalCase::One => "1",
        IntervalCase::TwoA => "2a",
        IntervalCase::TwoB => "2b",
        IntervalCase::ThreeA => "3a",
        IntervalCase::ThreeB(_) => "3b",
    }
}

/// First `per_case` weight vectors (scanning {0..=6}³ lexicographically)
/// landing in each of the five cases of the interval-family classification.
fn interval_case_weights(q: u32, per_case: usize) -> Result<Vec<IntVec>, String> {
    let mut buckets: BTreeMap<&'static str, Vec<IntVec>> = BTreeMap::new();
    'outer: for w1 in 0..=6i64 {
        for w2 in 0..=6i64 {
            for w3 in 0..=6i64 {
                if (w1, w2, w3) == (0, 0, 0) {
                    continue;
                }
                let w = iv(&[w1, w2, w3]);
                let case = invariants::classify_interval_weights(q, &w)
                    .map_err(|e| e.to_string())?;
                let bucket = buckets.entry(case_key(&case)).or_default();
                if bucket.len() < per_case {
                    bucket.push(w);
                }
                if buckets.len() == 5 && buckets.values().all(|b| b.len() >= per_case) {
                    break 'outer;
                }
            }
        }
    }
    if buckets.len() < 5 || buckets.values().any(|b| b.len() < per_case) {
        return Err(format!("q={q}: could not populate all five weight cases"));
    }
    Ok(buckets.into_values().flatten().collect())
}

fn verify_main(
    s: SemigroupPresentation,
    w: IntVec,
    tiebreak: Tiebreak,
    tag: &str,
) -> Result<(), String> {
    let ctx = toric::build_context(s, w).map_err(|e| format!("{tag}: {e}"))?;
    let rep = toric::verify_theorem_main(&ctx, tiebreak);
    if rep.equal {
        Ok(())
    } else {
        Err(format!(
            "{tag}: degenerated basis has {} elements, independent basis {}",
            rep.degenerated_gb.len(),
            rep.independent_gb.len()
        ))
    }
}

fn criterion1(seed: u64, max_n: usize) -> Result<String, String> {
    let mut checked = 0usize;
    let mut run = |s: SemigroupPresentation, w: IntVec, tb: Tiebreak, tag: String| {
        verify_main(s, w, tb, &tag).map(|()| checked += 1)
    };
    run(one_one(), ones(3), Tiebreak::Lex, "numerical 6,10,15".into())?;
    run(scroll(), iv(&[3, 7, 2, 5]), Tiebreak::Lex, "scroll".into())?;
    for m in 1..=5 {
        let s = invariants::a_of_m(m).map_err(|e| e.to_string())?;
        run(s, ones(3), Tiebreak::Degrevlex, format!("slope family m={m}"))?;
    }
    for q in 1..=4u32 {
        let ws = interval_case_weights(q, 1)?;
        for w in ws {
            let s = invariants::interval_even(q).map_err(|e| e.to_string())?;
            run(s, w.clone(), Tiebreak::Degrevlex, format!("interval q={q} w={w:?}"))?;
        }
    }
    let coprime = invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?;
    run(coprime.clone(), iv(&[15, 10, 6]), Tiebreak::Degrevlex, "coprime 2,3,5 matched w".into())?;
    run(coprime, ones(3), Tiebreak::Degrevlex, "coprime 2,3,5 unit w".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..50 {
        let (s, w) = random_instance(&mut rng, max_n.min(4));
        run(s, w, Tiebreak::Degrevlex, format!("random #{i}"))?;
    }
    Ok(format!("{checked} instances verified"))
}

fn sorted_vectors(vs: &[IntVec]) -> Vec<IntVec> {
    let mut out = vs.to_vec();
    out.sort();
    out
}

fn criterion2() -> Result<String, String> {
    let s = one_one();
    let base = invariants::betti_elements(&s).map_err(|e| e.to_string())?;
    if base.betti != vec![iv(&[30])] {
        return Err(format!("base Betti set is {:?}", base.betti));
    }
    let ctx = toric::build_context(s, ones(3)).map_err(|e| e.to_string())?;
    let deg = invariants::betti_elements(ctx.degenerated()).map_err(|e| e.to_string())?;
    let expected = sorted_vectors(&[iv(&[30, 5]), iv(&[30, 3])]);
    if sorted_vectors(&deg.betti) != expected {
        return Err(format!("degenerated Betti set is {:?}", deg.betti));
    }
    Ok("Betti sets {30} and {(30,3),(30,5)} confirmed".into())
}

fn basis_pairs(basis: &[Binomial]) -> BTreeSet<(IntVec, IntVec)> {
    basis
        .iter()
        .map(|b| (b.lead.exps().clone(), b.trail.exps().clone()))
        .collect()
}

fn criterion3() -> Result<String, String> {
    let s = scroll();
    let w = iv(&[3, 7, 2, 5]);
    let order = TermOrder::weighted(w.clone(), Tiebreak::Lex);
    let gb = binomial::reduce_basis(s.toric_ideal(), &order);
    let expected: Vec<Binomial> = [
        (&[0, 2, 0, 0][..], &[1, 0, 1, 0][..]), // b² − ac
        (&[0, 1, 1, 0][..], &[1, 0, 0, 1][..]), // bc − ad
        (&[0, 1, 0, 1][..], &[0, 0, 2, 0][..]), // bd − c²
        (&[1, 0, 0, 2][..], &[0, 0, 3, 0][..]), // ad² − c³
    ]
    .iter()
    .map(|(l, t)| Binomial {
        lead: Monomial::from_i64(l),
        trail: Monomial::from_i64(t),
    })
    .collect();
    if basis_pairs(&gb) != basis_pairs(&expected) {
        return Err(format!("weighted-lex basis is {gb:?}"));
    }
    let ctx = toric::build_context(s, w).map_err(|e| e.to_string())?;
    let expected_betti = sorted_vectors(&[
        iv(&[2, 2, 14]),
        iv(&[2, 3, 9]),
        iv(&[2, 4, 12]),
        iv(&[3, 6, 13]),
    ]);
    let deg = invariants::betti_elements(ctx.degenerated()).map_err(|e| e.to_string())?;
    if sorted_vectors(&deg.betti) != expected_betti {
        return Err(format!("degenerated Betti set is {:?}", deg.betti));
    }
    let mg = binomial::minimal_generators(ctx.degenerated().toric_ideal(), ctx.a_w())
        .map_err(|e| e.to_string())?;
    if sorted_vectors(&mg.degrees()) != expected_betti {
        return Err(format!("minimal generator degrees are {:?}", mg.degrees()));
    }
    Ok("scroll basis and all four degenerated Betti degrees confirmed".into())
}

fn criterion4() -> Result<String, String> {
    for m in 1..=8i64 {
        let s = invariants::a_of_m(m).map_err(|e| e.to_string())?;
        let ctx = toric::build_context(s, ones(3)).map_err(|e| e.to_string())?;
        let rep = invariants::is_saturated(ctx.degenerated()).map_err(|e| e.to_string())?;
        if m <= 2 {
            if !rep.saturated {
                return Err(format!("m={m}: expected saturated, witness {:?}", rep.witness));
            }
            continue;
        }
        if rep.saturated {
            return Err(format!("m={m}: expected a saturation failure"));
        }
        if rep.witness.is_none() {
            return Err(format!("m={m}: failure without witness"));
        }
        if m % 2 == 1 {
            let probe = iv(&[2, 2, 1]);
            if !rep.failures.contains(&probe) {
                return Err(format!("m={m}: (2,2,1) missing from failures {:?}", rep.failures));
            }
            let inside = iv(&[m + 1, m + 1, (m - 1) / 2 + 1]);
            if invariants::member(ctx.degenerated(), &inside)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                return Err(format!("m={m}: {inside:?} should be a member"));
            }
        }
    }
    Ok("saturated for m ≤ 2, witnessed failures for 3 ≤ m ≤ 8".into())
}

fn criterion5() -> Result<String, String> {
    let mut checked = 0usize;
    for q in 1..=3u32 {
        for w in interval_case_weights(q, 2)? {
            let chk = invariants::check_unique_presentation_family(q, &w)
                .map_err(|e| e.to_string())?;
            if !chk.gb_matches || !chk.uniquely_presented || !chk.monomial_criterion {
                return Err(format!(
                    "q={q} w={w:?} case {}: gb_matches={} unique={} monomial={}",
                    chk.case, chk.gb_matches, chk.uniquely_presented, chk.monomial_criterion
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (q, w) pairs across all five cases"))
}

fn int_to_i64(x: &Int) -> i64 {
    x.to_i64().expect("acceptance data stays in i64 range")
}

fn criterion6(seed: u64) -> Result<String, String> {
    let mut instances: Vec<(SemigroupPresentation, IntVec, String)> = vec![
        (one_one(), ones(3), "numerical 6,10,15".into()),
        (scroll(), iv(&[3, 7, 2, 5]), "scroll".into()),
    ];
    for m in 1..=5 {
        instances.push((
            invariants::a_of_m(m).map_err(|e| e.to_string())?,
            ones(3),
            format!("slope family m={m}"),
        ));
    }
    let coprime = invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?;
    instances.push((coprime.clone(), iv(&[15, 10, 6]), "coprime matched w".into()));
    instances.push((coprime, ones(3), "coprime unit w".into()));
    for q in 1..=4u32 {
        let w = interval_case_weights(q, 1)?.remove(0);
        instances.push((
            invariants::interval_even(q).map_err(|e| e.to_string())?,
            w,
            format!("interval q={q}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for i in 0..10 {
        let (s, w) = random_instance(&mut rng, 4);
        instances.push((s, w, format!("random #{i}")));
    }
    for (s, w, tag) in &instances {
        invariants::check_theorem_inclusion(s, w).map_err(|e| format!("{tag}: {e}"))?;
    }

    // subset-count bound on the unique-Betti degeneration instances
    let eligible: Vec<(SemigroupPresentation, IntVec, &str)> = vec![
        (
            invariants::pairwise_coprime(&[2, 3]).map_err(|e| e.to_string())?,
            iv(&[2, 3]),
            "coprime 2,3",
        ),
        (
            invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?,
            iv(&[15, 10, 6]),
            "coprime 2,3,5",
        ),
        (hypersurface(), iv(&[1, 2, 5]), "hypersurface"),
    ];
    let mut sampled = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(4));
    for (s, w, tag) in eligible {
        let ctx = MoebiusContext::with_degeneration(s, w.clone())
            .map_err(|e| format!("{tag}: {e}"))?;
        let b = ctx
            .unique_betti()
            .ok_or_else(|| format!("{tag}: no unique Betti element"))?
            .clone();
        let d_w = ctx.d_w().ok_or_else(|| format!("{tag}: no unique degenerated Betti"))?;
        let cols: Vec<IntVec> = ctx.semigroup().matrix().columns().to_vec();
        let n = cols.len();
        let wsum: i64 = w.0.iter().map(int_to_i64).sum();
        let lam_hi = 3 * wsum + 2 * int_to_i64(d_w) + 2;
        for _ in 0..200 {
            let mut z = b.scale(&Int::from(rng.gen_range(0..=2i64)));
            for c in &cols {
                let r = rng.gen_range(0..=3i64);
                if r > 0 {
                    z = z.add(&c.scale(&Int::from(r)));
                }
            }
            let lambda = Int::from(rng.gen_range(0..=lam_hi));
            let az = moebius::a_z(&ctx, &z).map_err(|e| format!("{tag}: {e}"))?;
            let bz = moebius::b_z(&ctx, &z, &lambda).map_err(|e| format!("{tag}: {e}"))?;
            if bz.len() > az.len() {
                return Err(format!(
                    "{tag} z={z:?} λ={lambda}: |b_z| = {} exceeds |a_z| = {}",
                    bz.len(),
                    az.len()
                ));
            }
            let mut projections = BTreeSet::new();
            for wit in &bz {
                let proj: Vec<usize> =
                    wit.subset.iter().copied().filter(|&i| i < n).collect();
                if !projections.insert(proj.clone()) {
                    return Err(format!("{tag} z={z:?} λ={lambda}: projection collides"));
                }
                if !az.iter().any(|a| a.subset == proj && a.k == wit.k) {
                    return Err(format!(
                        "{tag} z={z:?} λ={lambda}: projection {proj:?} missing from a_z"
                    ));
                }
            }
            sampled += 1;
        }
    }
    Ok(format!(
        "{} instances lift their Betti sets; {sampled} sampled points respect the bound",
        instances.len()
    ))
}

fn criterion7(seed: u64) -> Result<String, String> {
    let mut bases: Vec<(SemigroupPresentation, String)> = vec![
        (SemigroupPresentation::numerical(&[2, 3]), "numerical 2,3".into()),
        (one_one(), "numerical 6,10,15".into()),
    ];
    for m in 1..=4 {
        bases.push((
            invariants::a_of_m(m).map_err(|e| e.to_string())?,
            format!("slope family m={m}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    let mut certified = 0usize;
    for (s, tag) in bases {
        let n = s.nvars();
        let mut weights = vec![ones(n)];
        weights.push(IntVec(
            (0..n).map(|_| Int::from(rng.gen_range(1..=8i64))).collect(),
        ));
        for w in weights {
            let a = invariants::approximation_element(&s).map_err(|e| format!("{tag}: {e}"))?;
            let ctx = toric::build_context(s.clone(), w.clone())
                .map_err(|e| format!("{tag}: {e}"))?;
            let cert = invariants::approx_degeneration(&ctx, &a)
                .map_err(|e| format!("{tag} w={w:?}: {e}"))?;
            let sw = ctx.degenerated();
            let lifted = cert.a.extended(cert.delta.clone());
            let points =
                lattice::zonotope_points(ctx.a_w()).map_err(|e| format!("{tag}: {e}"))?;
            for p in &points {
                if invariants::member(sw, &lifted.add(p))
                    .map_err(|e| e.to_string())?
                    .is_none()
                {
                    return Err(format!("{tag} w={w:?}: certificate misses zonotope point {p:?}"));
                }
            }
            // 100 random saturation elements: integer part plus zonotope point
            let cols = ctx.a_w().columns();
            for _ in 0..100 {
                let mut elem = points[rng.gen_range(0..points.len())].clone();
                for c in cols {
                    let m = rng.gen_range(0..=3i64);
                    if m > 0 {
                        elem = elem.add(&c.scale(&Int::from(m)));
                    }
                }
                if invariants::member(sw, &lifted.add(&elem))
                    .map_err(|e| e.to_string())?
                    .is_none()
                {
                    return Err(format!(
                        "{tag} w={w:?}: certificate misses saturation element {elem:?}"
                    ));
                }
            }
            certified += 1;
        }
    }
    Ok(format!("{certified} certificates verified against zonotope and random elements"))
}

fn criterion8() -> Result<String, String> {
    for bs in [vec![2i64, 3], vec![2, 3, 5]] {
        let s = invariants::pairwise_coprime(&bs).map_err(|e| e.to_string())?;
        let ctx = MoebiusContext::new(s.clone()).map_err(|e| e.to_string())?;
        for (z, mu) in moebius::mu_table(&s, &Int::from(60)).map_err(|e| e.to_string())? {
            let closed = moebius::mu_closed(&ctx, &z).map_err(|e| e.to_string())?;
            if closed != mu {
                return Err(format!("{bs:?} z={z:?}: closed {closed} ≠ brute {mu}"));
            }
        }
    }
    let s = invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?;
    let ctx = MoebiusContext::with_degeneration(s, iv(&[15, 10, 6]))
        .map_err(|e| e.to_string())?;
    let sw = ctx.degenerated().expect("degeneration attached").clone();
    let table = moebius::mu_table(&sw, &Int::from(90)).map_err(|e| e.to_string())?;
    let count = table.len();
    for (e, mu) in table {
        let (z, lambda) = e.split_last();
        let via_base = moebius::mu_degeneration(&ctx, &z, &lambda).map_err(|e| e.to_string())?;
        if via_base != mu {
            return Err(format!("(z,λ)={e:?}: formula {via_base} ≠ brute {mu}"));
        }
    }
    Ok(format!("closed formulas agree on both balls ({count} degenerated points)"))
}

fn criterion9(seed: u64) -> Result<String, String> {
    let configs: Vec<GeneratorMatrix> = vec![
        GeneratorMatrix::from_rows_i64(&[&[2, 3]]),
        GeneratorMatrix::from_rows_i64(&[&[1, 2, 4]]),
        GeneratorMatrix::from_rows_i64(&[&[1, 1], &[0, 2]]),
        GeneratorMatrix::from_rows_i64(&[&[1, 1, 1], &[0, 1, 3]]),
        GeneratorMatrix::from_rows_i64(&[&[1, 2], &[2, 1]]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    let mut checked = 0usize;
    for (i, a) in configs.iter().enumerate() {
        let lifted = invariants::lawrence(a);
        let base = invariants::betti_elements(&lifted).map_err(|e| e.to_string())?;
        if !base.uniquely_presented {
            return Err(format!("configuration #{i}: Lawrence lift not uniquely presented"));
        }
        for _ in 0..3 {
            let w = IntVec(
                (0..lifted.nvars())
                    .map(|_| Int::from(rng.gen_range(0..=4i64)))
                    .collect(),
            );
            let ctx = toric::build_context(lifted.clone(), w.clone())
                .map_err(|e| e.to_string())?;
            let deg = invariants::betti_elements(ctx.degenerated()).map_err(|e| e.to_string())?;
            if !deg.uniquely_presented {
                return Err(format!(
                    "configuration #{i} w={w:?}: degeneration not uniquely presented"
                ));
            }
            if deg.beta1_counts.iter().any(|(_, c)| *c != 1) {
                return Err(format!("configuration #{i} w={w:?}: a Betti number exceeds 1"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} Lawrence degenerations uniquely presented"))
}

fn degree_multiset(
    gb: &[Binomial],
    s: &SemigroupPresentation,
) -> Result<Vec<(IntVec, usize)>, String> {
    let mg = binomial::minimal_generators(gb, s.matrix()).map_err(|e| e.to_string())?;
    let mut out: Vec<(IntVec, usize)> = mg
        .entries
        .iter()
        .map(|e| (e.degree.clone(), e.count))
        .collect();
    out.sort();
    Ok(out)
}

fn criterion10() -> Result<String, String> {
    // (a) minimal generator degrees do not depend on the term order
    let instances: Vec<(SemigroupPresentation, String)> = vec![
        (one_one(), "numerical 6,10,15".into()),
        (scroll(), "scroll".into()),
        (invariants::a_of_m(3).map_err(|e| e.to_string())?, "slope family m=3".into()),
        (
            invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?,
            "coprime 2,3,5".into(),
        ),
        (invariants::interval_even(2).map_err(|e| e.to_string())?, "interval q=2".into()),
    ];
    for (s, tag) in &instances {
        let n = s.nvars();
        let reference = degree_multiset(s.toric_ideal(), s)?;
        let mut orders = vec![
            TermOrder::weighted(ones(n), Tiebreak::Lex),
            TermOrder::weighted(
                IntVec((1..=n as i64).map(Int::from).collect()),
                Tiebreak::Degrevlex,
            ),
        ];
        orders.push(
            TermOrder::new(IntVec::zero(n), Tiebreak::Lex, (0..n).rev().collect())
                .map_err(|e| e.to_string())?,
        );
        for order in &orders {
            let gb = binomial::reduce_basis(s.toric_ideal(), order);
            if degree_multiset(&gb, s)? != reference {
                return Err(format!("{tag}: minimal generator degrees moved with the order"));
            }
        }
    }

    // (b) saturation decision equals the ball oracle
    let mut sat_instances: Vec<(SemigroupPresentation, String)> = vec![
        (SemigroupPresentation::numerical(&[2, 3]), "numerical 2,3".into()),
        (one_one(), "numerical 6,10,15".into()),
    ];
    for m in 1..=3 {
        let ctx = toric::build_context(
            invariants::a_of_m(m).map_err(|e| e.to_string())?,
            ones(3),
        )
        .map_err(|e| e.to_string())?;
        sat_instances.push((ctx.degenerated().clone(), format!("slope family m={m} degenerated")));
    }
    for (s, tag) in &sat_instances {
        let rep = invariants::is_saturated(s).map_err(|e| e.to_string())?;
        let c = s.functional().map_err(|e| e.to_string())?;
        let points = lattice::zonotope_points(s.matrix()).map_err(|e| e.to_string())?;
        let bound = points
            .iter()
            .map(|p| c.dot(p))
            .max()
            .unwrap_or_else(Int::zero)
            + Int::from(1);
        let oracle = invariants::saturation_ball_oracle(s, &bound).map_err(|e| e.to_string())?;
        if rep.saturated != oracle {
            return Err(format!(
                "{tag}: decision {} vs ball oracle {oracle}",
                rep.saturated
            ));
        }
    }

    // (c) fiber-graph count equals the minimal generator count per degree
    let ctx = toric::build_context(one_one(), ones(3)).map_err(|e| e.to_string())?;
    let fiber_instances: Vec<(SemigroupPresentation, String)> = vec![
        (one_one(), "numerical 6,10,15".into()),
        (
            invariants::pairwise_coprime(&[2, 3, 5]).map_err(|e| e.to_string())?,
            "coprime 2,3,5".into(),
        ),
        (ctx.degenerated().clone(), "numerical 6,10,15 degenerated".into()),
    ];
    let mut fibers_checked = 0usize;
    for (s, tag) in &fiber_instances {
        let mg = binomial::minimal_generators(s.toric_ideal(), s.matrix())
            .map_err(|e| e.to_string())?;
        let counts: BTreeMap<IntVec, usize> = mg
            .entries
            .iter()
            .map(|e| (e.degree.clone(), e.count))
            .collect();
        let mut degrees: BTreeSet<IntVec> = counts.keys().cloned().collect();
        let cols = s.matrix().columns();
        for i in 0..cols.len() {
            degrees.insert(cols[i].clone());
            for j in i..cols.len() {
                degrees.insert(cols[i].add(&cols[j]));
            }
        }
        for deg in degrees {
            let f = invariants::fiber(s, &deg).map_err(|e| e.to_string())?;
            if f.points.len() > 500 {
                continue;
            }
            let from_graph =
                invariants::fiber_graph_betti_count(s, &deg).map_err(|e| e.to_string())?;
            let expected = counts.get(&deg).copied().unwrap_or(0);
            if from_graph != expected {
                return Err(format!(
                    "{tag} degree {deg:?}: graph count {from_graph} ≠ {expected}"
                ));
            }
            fibers_checked += 1;
        }
    }
    Ok(format!("order sweeps, saturation oracle, and {fibers_checked} fibers agree"))
}

// ---------------------------------------------------------------------------
// corpus regression check

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric_gb: Option<Vec<ExpectedBinomial>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti_w: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem_main: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturated_w: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_w: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpectedBinomial {
    pub lead: Vec<String>,
    pub trail: Vec<String>,
}

/// Validates every corpus entry against its expected sidecar.  A missing or
/// empty directory is a usage error; mismatches are per-entry failures.
pub fn check_corpus(dir: &Path) -> CliResult<Vec<(String, Result<(), String>)>> {
    if !dir.is_dir() {
        return Err(CliError::Usage(format!(
            "corpus directory {} does not exist",
            dir.display()
        )));
    }
    let mut entries: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| {
            p.extension().is_some_and(|x| x == "json")
                && !p
                    .file_name()
                    .is_some_and(|f| f.to_string_lossy().ends_with(".expected.json"))
        })
        .collect();
    entries.sort();
    if entries.is_empty() {
        return Err(CliError::Usage(format!(
            "corpus directory {} has no problem files",
            dir.display()
        )));
    }
    let mut out = Vec::new();
    for path in entries {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        out.push((name, check_corpus_entry(&path)));
    }
    Ok(out)
}

fn check_corpus_entry(path: &Path) -> Result<(), String> {
    let file = ProblemFile::load(path).map_err(|e| e.to_string())?;
    // round-trip invariant
    let reparsed = ProblemFile::parse_str(&file.print()).map_err(|e| e.to_string())?;
    if reparsed != file {
        return Err("problem file does not round-trip".into());
    }
    let sidecar = path.with_extension("expected.json");
    let text = std::fs::read_to_string(&sidecar)
        .map_err(|e| format!("missing sidecar {}: {e}", sidecar.display()))?;
    let expected: Expected =
        serde_json::from_str(&text).map_err(|e| format!("bad sidecar: {e}"))?;
    let s = file.presentation().map_err(|e| e.to_string())?;
    let w = file.weight_vec().map_err(|e| e.to_string())?;
    if let Some(exp) = &expected.toric_gb {
        let got = basis_pairs(s.toric_ideal());
        let want: Result<BTreeSet<(IntVec, IntVec)>, String> = exp
            .iter()
            .map(|b| {
                Ok((
                    parse_vec(&b.lead).map_err(|e| e.to_string())?,
                    parse_vec(&b.trail).map_err(|e| e.to_string())?,
                ))
            })
            .collect();
        if got != want? {
            return Err("toric Groebner basis differs".into());
        }
    }
    if let Some(exp) = &expected.betti {
        let want = parse_vectors(exp)?;
        let got = invariants::betti_elements(&s).map_err(|e| e.to_string())?;
        if sorted_vectors(&got.betti) != want {
            return Err(format!("Betti set {:?} differs", got.betti));
        }
    }
    let ctx = match &w {
        Some(w) => {
            Some(toric::build_context(s.clone(), w.clone()).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    if let Some(exp) = &expected.betti_w {
        let ctx = ctx.as_ref().ok_or("betti_w expected but no weights")?;
        let want = parse_vectors(exp)?;
        let got = invariants::betti_elements(ctx.degenerated()).map_err(|e| e.to_string())?;
        if sorted_vectors(&got.betti) != want {
            return Err(format!("degenerated Betti set {:?} differs", got.betti));
        }
    }
    if let Some(flag) = expected.theorem_main {
        let ctx = ctx.as_ref().ok_or("theorem_main expected but no weights")?;
        let tb = file.tiebreak().map_err(|e| e.to_string())?;
        let rep = toric::verify_theorem_main(ctx, tb);
        if rep.equal != flag {
            return Err(format!("theorem_main verdict {} differs", rep.equal));
        }
    }
    if let Some(flag) = expected.saturated_w {
        let ctx = ctx.as_ref().ok_or("saturated_w expected but no weights")?;
        let rep = invariants::is_saturated(ctx.degenerated()).map_err(|e| e.to_string())?;
        if rep.saturated != flag {
            return Err(format!("saturation verdict {} differs", rep.saturated));
        }
        if let Some(wit) = &expected.witness_w {
            let wit = parse_vec(wit).map_err(|e| e.to_string())?;
            if !rep.failures.contains(&wit) {
                return Err(format!("expected witness {wit:?} not among failures"));
            }
        }
    }
    Ok(())
}

fn parse_vectors(entries: &[Vec<String>]) -> Result<Vec<IntVec>, String> {
    let mut out: Vec<IntVec> = entries
        .iter()
        .map(|v| parse_vec(v).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    out.sort();
    Ok(out)
}
