//! Möbius functions of pointed semigroups: brute-force alternating chain
//! counts over intervals, the closed binomial formula available when the
//! semigroup has a unique Betti element, and the transfer of that formula
//! through a weight degeneration.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::invariants;
use crate::lattice::{Int, IntVec};
use crate::toric::{self, DegenerationContext, SemigroupPresentation};

/// Subset enumeration is exponential in the number of generators; operations
/// that rely on it refuse anything beyond this bound.
pub const MAX_SUBSET_VARS: usize = 20;

/// Shared data for the closed Möbius formulas: the semigroup, its Betti
/// elements, and (optionally) a weight degeneration with the second
/// coordinate `d_w` of the unique Betti element of the degenerated semigroup.
///
/// Construction requires the semigroup to be pointed and to span the full
/// ambient lattice; those are hypotheses of every closed formula here.
pub struct MoebiusContext {
    s: SemigroupPresentation,
    betti: Vec<IntVec>,
    unique_betti: Option<IntVec>,
    degeneration: Option<DegenerationData>,
}

struct DegenerationData {
    ctx: DegenerationContext,
    betti_w: Vec<IntVec>,
    /// Present exactly when the degenerated semigroup has a unique Betti
    /// element; its first coordinates are then checked to match the base
    /// Betti element.
    d_w: Option<Int>,
}

impl MoebiusContext {
    pub fn new(s: SemigroupPresentation) -> Result<Self> {
        if !s.is_pointed() {
            return Err(Error::NotPointed);
        }
        if !s.is_full_lattice() {
            return Err(Error::HypothesisViolated(
                "generators must span the full ambient lattice".into(),
            ));
        }
        let report = invariants::betti_elements(&s)?;
        let unique_betti = match report.betti.as_slice() {
            [b] => Some(b.clone()),
            _ => None,
        };
        Ok(MoebiusContext {
            s,
            betti: report.betti,
            unique_betti,
            degeneration: None,
        })
    }

    /// Like [`MoebiusContext::new`], additionally attaching the degeneration
    /// by `w`.  When both the base and the degenerated semigroup have a
    /// unique Betti element, the degenerated one must be `(b, d_w)` with the
    /// same base degree `b`; a mismatch is rejected rather than glossed over.
    pub fn with_degeneration(s: SemigroupPresentation, w: IntVec) -> Result<Self> {
        let mut out = Self::new(s)?;
        let dctx = toric::build_context(out.s.clone(), w)?;
        let report = invariants::betti_elements(dctx.degenerated())?;
        let d_w = match (report.betti.as_slice(), &out.unique_betti) {
            ([bw], Some(b)) => {
                let (head, tail) = bw.split_last();
                if head != *b {
                    return Err(Error::HypothesisViolated(format!(
                        "degenerated Betti element {:?} does not lift the base Betti element {:?}",
                        bw, b
                    )));
                }
                Some(tail)
            }
            _ => None,
        };
        out.degeneration = Some(DegenerationData {
            ctx: dctx,
            betti_w: report.betti,
            d_w,
        });
        Ok(out)
    }

    pub fn semigroup(&self) -> &SemigroupPresentation {
        &self.s
    }

    pub fn betti(&self) -> &[IntVec] {
        &self.betti
    }

    /// The Betti element, when there is exactly one.
    pub fn unique_betti(&self) -> Option<&IntVec> {
        self.unique_betti.as_ref()
    }

    pub fn weights(&self) -> Option<&IntVec> {
        self.degeneration.as_ref().map(|d| d.ctx.weights())
    }

    pub fn degenerated(&self) -> Option<&SemigroupPresentation> {
        self.degeneration.as_ref().map(|d| d.ctx.degenerated())
    }

    pub fn betti_degenerated(&self) -> Option<&[IntVec]> {
        self.degeneration.as_ref().map(|d| d.betti_w.as_slice())
    }

    /// Second coordinate of the unique Betti element of the degenerated
    /// semigroup, when that semigroup has exactly one.
    pub fn d_w(&self) -> Option<&Int> {
        self.degeneration.as_ref().and_then(|d| d.d_w.as_ref())
    }
}

/// One subset `A` with `z = Σ_{i∈A} a_i + k·b` (indices 0-based into the
/// generator columns).  `level` is `Σ_{i∈A} w_i + k·d_w` when degeneration
/// data is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetWitness {
    pub subset: Vec<usize>,
    pub k: Int,
    pub level: Option<Int>,
}

/// Möbius function by definition: the alternating count of strictly
/// increasing chains from 0 to `z` inside the divisibility order of `S`,
/// computed by the standard interval recursion μ(0,0) = 1,
/// μ(0,z) = −Σ_{0 ≤ s < z} μ(0,s).  Returns 0 for `z ∉ S`.
pub fn mu_bruteforce(s: &SemigroupPresentation, z: &IntVec) -> Result<Int> {
    if invariants::member(s, z)?.is_none() {
        return Ok(Int::zero());
    }
    let interval = interval_elements(s, z)?;
    let known: BTreeSet<&IntVec> = interval.iter().collect();
    let mut mu: Vec<Int> = Vec::with_capacity(interval.len());
    for (i, e) in interval.iter().enumerate() {
        if e.is_zero() {
            mu.push(Int::one());
            continue;
        }
        let mut acc = Int::zero();
        for j in 0..i {
            if known.contains(&e.sub(&interval[j])) {
                acc += &mu[j];
            }
        }
        mu.push(-acc);
    }
    let at = interval
        .iter()
        .position(|e| e == z)
        .expect("z lies in its own interval");
    Ok(mu[at].clone())
}

/// μ for every semigroup element with functional value ≤ `bound`, in one
/// pass over the ball.  Same recursion as [`mu_bruteforce`]; amortizes the
/// ball enumeration across a sweep.
pub fn mu_table(s: &SemigroupPresentation, bound: &Int) -> Result<Vec<(IntVec, Int)>> {
    let ball = invariants::elements_up_to(s, bound)?;
    let known: BTreeSet<&IntVec> = ball.iter().collect();
    let mut mu: Vec<Int> = Vec::with_capacity(ball.len());
    for (i, e) in ball.iter().enumerate() {
        if e.is_zero() {
            mu.push(Int::one());
            continue;
        }
        let mut acc = Int::zero();
        for j in 0..i {
            if known.contains(&e.sub(&ball[j])) {
                acc += &mu[j];
            }
        }
        mu.push(-acc);
    }
    Ok(ball.into_iter().zip(mu).collect())
}

/// Elements of the interval `[0, z] = {s ∈ S : z − s ∈ S}`, sorted by
/// (functional value, lex) — a linear extension of the divisibility order.
pub fn interval_elements(s: &SemigroupPresentation, z: &IntVec) -> Result<Vec<IntVec>> {
    let c = s.functional()?;
    let ball = invariants::elements_up_to(s, &c.dot(z))?;
    let set: BTreeSet<&IntVec> = ball.iter().collect();
    Ok(ball
        .iter()
        .filter(|e| set.contains(&z.sub(e)))
        .cloned()
        .collect())
}

/// All subsets `A ⊆ {columns}` admitting `k ∈ N` with `z = Σ_{i∈A} a_i + k·b`
/// for the unique Betti element `b`, in ascending bitmask order.
pub fn a_z(ctx: &MoebiusContext, z: &IntVec) -> Result<Vec<SubsetWitness>> {
    let b = ctx.unique_betti().ok_or(Error::MissingUniqueBetti)?;
    let cols = ctx.s.matrix().columns();
    let w_dw = ctx
        .degeneration
        .as_ref()
        .and_then(|d| d.d_w.as_ref().map(|dw| (d.ctx.weights(), dw)));
    subset_witnesses(cols, b, z, w_dw)
}

/// Same subset enumeration for the degenerated semigroup: subsets of the
/// `n + 1` columns of the extended configuration against target `(z, λ)` and
/// Betti element `(b, d_w)`.  Levels are not filled here.
pub fn b_z(ctx: &MoebiusContext, z: &IntVec, lambda: &Int) -> Result<Vec<SubsetWitness>> {
    let deg = ctx
        .degeneration
        .as_ref()
        .ok_or(Error::MissingDegenerationData)?;
    let d_w = deg.d_w.as_ref().ok_or(Error::MissingDegenerationData)?;
    let b = ctx.unique_betti().ok_or(Error::MissingUniqueBetti)?;
    let target = z.extended(lambda.clone());
    let bw = b.extended(d_w.clone());
    subset_witnesses(deg.ctx.a_w().columns(), &bw, &target, None)
}

fn subset_witnesses(
    cols: &[IntVec],
    b: &IntVec,
    z: &IntVec,
    w_dw: Option<(&IntVec, &Int)>,
) -> Result<Vec<SubsetWitness>> {
    let n = cols.len();
    if n > MAX_SUBSET_VARS {
        return Err(Error::TooManyGenerators(n));
    }
    if z.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "point has dimension {}, Betti element has {}",
            z.dim(),
            b.dim()
        )));
    }
    assert!(!b.is_zero(), "Betti elements of a pointed semigroup are nonzero");
    let pivot = b.0.iter().position(|e| !e.is_zero()).unwrap();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let mut rem = z.clone();
        for (i, col) in cols.iter().enumerate() {
            if mask & (1 << i) != 0 {
                rem = rem.sub(col);
            }
        }
        let (k, r) = rem.0[pivot].div_rem(&b.0[pivot]);
        if !r.is_zero() || k.is_negative() || b.scale(&k) != rem {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let level = w_dw.map(|(w, dw)| {
            subset.iter().map(|&i| &w.0[i]).sum::<Int>() + &k * dw
        });
        out.push(SubsetWitness { subset, k, level });
    }
    Ok(out)
}

/// Closed Möbius formula for a semigroup with a unique Betti element:
/// μ(z) = Σ_j (−1)^{|A_j|}·binom(k_{A_j} + n − d − 1, k_{A_j}) over the
/// subsets reported by [`a_z`]; 0 when none exist.
pub fn mu_closed(ctx: &MoebiusContext, z: &IntVec) -> Result<Int> {
    if ctx.unique_betti.is_none() {
        return Err(Error::HypothesisViolated(
            "closed formula needs exactly one Betti element".into(),
        ));
    }
    let n = ctx.s.nvars();
    let d = ctx.s.dim();
    assert!(n > d, "full lattice with a relation forces n > d");
    let mut acc = Int::zero();
    for witness in a_z(ctx, z)? {
        acc += signed_binomial_term(&witness, n, d);
    }
    Ok(acc)
}

/// Möbius function of the degenerated semigroup at `(z, λ)`, computed from
/// base data only: with levels `l_j = Σ_{i∈A_j} w_i + k_{A_j}·d_w`, the value
/// is Σ_{λ = l_j} t_j − Σ_{λ = l_j + 1} t_j where `t_j` is the same signed
/// binomial term as in [`mu_closed`] (with the original `n` and `d`); 0 when
/// no level matches.
pub fn mu_degeneration(ctx: &MoebiusContext, z: &IntVec, lambda: &Int) -> Result<Int> {
    if ctx.unique_betti.is_none() {
        return Err(Error::HypothesisViolated(
            "degenerated formula needs a unique base Betti element".into(),
        ));
    }
    let deg = ctx.degeneration.as_ref().ok_or_else(|| {
        Error::HypothesisViolated("no degeneration attached to the context".into())
    })?;
    if deg.d_w.is_none() {
        return Err(Error::HypothesisViolated(
            "degenerated semigroup needs exactly one Betti element".into(),
        ));
    }
    let sw = deg.ctx.degenerated();
    if !sw.is_pointed() || !sw.is_full_lattice() {
        return Err(Error::HypothesisViolated(
            "degenerated semigroup must be pointed with full lattice".into(),
        ));
    }
    let n = ctx.s.nvars();
    let d = ctx.s.dim();
    let mut acc = Int::zero();
    for witness in a_z(ctx, z)? {
        let level = witness.level.clone().expect("levels filled when d_w is known");
        if *lambda == level {
            acc += signed_binomial_term(&witness, n, d);
        } else if *lambda == level + Int::one() {
            acc -= signed_binomial_term(&witness, n, d);
        }
    }
    Ok(acc)
}

fn signed_binomial_term(witness: &SubsetWitness, n: usize, d: usize) -> Int {
    let top = &witness.k + Int::from((n - d - 1) as u64);
    let term = num_integer::binomial(top, witness.k.clone());
    if witness.subset.len() % 2 == 0 {
        term
    } else {
        -term
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::pairwise_coprime;
    use crate::lattice::GeneratorMatrix;

    fn numerical(gens: &[i64]) -> SemigroupPresentation {
        SemigroupPresentation::numerical(gens)
    }

    fn hypersurface() -> SemigroupPresentation {
        // ⟨(1,0),(1,1),(1,2)⟩: toric ideal generated by xz − y², one Betti
        // element (2,2).
        SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
            &[1, 1, 1],
            &[0, 1, 2],
        ]))
    }

    fn iv(entries: &[i64]) -> IntVec {
        IntVec::from_i64(entries)
    }

    /// Literal second oracle: enumerate every chain 0 < z₁ < ⋯ < z_l = z by
    /// picking a totally ordered subset of the open interval, and sum
    /// (−1)^l.  Exponential; callers keep intervals small.
    fn mu_chain_oracle(s: &SemigroupPresentation, z: &IntVec) -> Int {
        if invariants::member(s, z).unwrap().is_none() {
            return Int::zero();
        }
        if z.is_zero() {
            return Int::one(); // the empty chain, length 0
        }
        let interval = interval_elements(s, z).unwrap();
        let inner: Vec<&IntVec> = interval
            .iter()
            .filter(|e| !e.is_zero() && *e != z)
            .collect();
        assert!(inner.len() <= 12, "oracle is exponential; keep intervals small");
        let member_set: BTreeSet<&IntVec> = interval.iter().collect();
        let comparable = |a: &IntVec, b: &IntVec| {
            member_set.contains(&b.sub(a)) || member_set.contains(&a.sub(b))
        };
        let mut acc = Int::zero();
        for mask in 0u32..(1u32 << inner.len()) {
            let picked: Vec<&IntVec> = inner
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| *e)
                .collect();
            let chain = picked
                .iter()
                .enumerate()
                .all(|(i, a)| picked[i + 1..].iter().all(|b| comparable(a, b)));
            if chain {
                // chain 0 < picked… < z has length |picked| + 1
                if picked.len() % 2 == 0 {
                    acc -= Int::one();
                } else {
                    acc += Int::one();
                }
            }
        }
        acc
    }

    #[test]
    fn bruteforce_basics() {
        let s = numerical(&[2, 3]);
        assert_eq!(mu_bruteforce(&s, &iv(&[0])).unwrap(), Int::from(1));
        assert_eq!(mu_bruteforce(&s, &iv(&[1])).unwrap(), Int::from(0));
        assert_eq!(mu_bruteforce(&s, &iv(&[2])).unwrap(), Int::from(-1));
        assert_eq!(mu_bruteforce(&s, &iv(&[3])).unwrap(), Int::from(-1));
        assert_eq!(mu_bruteforce(&s, &iv(&[4])).unwrap(), Int::from(0));
        assert_eq!(mu_bruteforce(&s, &iv(&[5])).unwrap(), Int::from(1));
        assert_eq!(mu_bruteforce(&s, &iv(&[6])).unwrap(), Int::from(1));
    }

    #[test]
    fn bruteforce_matches_chain_oracle() {
        let s = numerical(&[2, 3]);
        for z in invariants::elements_up_to(&s, &Int::from(14)).unwrap() {
            assert_eq!(mu_bruteforce(&s, &z).unwrap(), mu_chain_oracle(&s, &z), "z = {:?}", z);
        }
        let h = hypersurface();
        for z in invariants::elements_up_to(&h, &Int::from(5)).unwrap() {
            if interval_elements(&h, &z).unwrap().len() <= 12 {
                assert_eq!(mu_bruteforce(&h, &z).unwrap(), mu_chain_oracle(&h, &z), "z = {:?}", z);
            }
        }
    }

    #[test]
    fn table_matches_pointwise_values() {
        for s in [numerical(&[2, 3]), pairwise_coprime(&[2, 3, 5]).unwrap()] {
            for (z, mu) in mu_table(&s, &Int::from(30)).unwrap() {
                assert_eq!(mu, mu_bruteforce(&s, &z).unwrap(), "z = {:?}", z);
            }
        }
    }

    #[test]
    fn subsets_small_examples() {
        let ctx = MoebiusContext::new(numerical(&[2, 3])).unwrap();
        assert_eq!(ctx.unique_betti(), Some(&iv(&[6])));
        let w = a_z(&ctx, &iv(&[0])).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0].subset.is_empty() && w[0].k.is_zero());
        let w = a_z(&ctx, &iv(&[2])).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!((w[0].subset.as_slice(), &w[0].k), ([0usize].as_slice(), &Int::from(0)));

        let ctx = MoebiusContext::new(pairwise_coprime(&[2, 3, 5]).unwrap()).unwrap();
        assert_eq!(ctx.unique_betti(), Some(&iv(&[30])));
        let w = a_z(&ctx, &iv(&[30])).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0].subset.is_empty());
        assert_eq!(w[0].k, Int::from(1));
    }

    #[test]
    fn closed_formula_matches_bruteforce() {
        for s in [numerical(&[2, 3]), pairwise_coprime(&[2, 3, 5]).unwrap()] {
            let ctx = MoebiusContext::new(s).unwrap();
            for z in invariants::elements_up_to(ctx.semigroup(), &Int::from(40)).unwrap() {
                assert_eq!(
                    mu_closed(&ctx, &z).unwrap(),
                    mu_bruteforce(ctx.semigroup(), &z).unwrap(),
                    "z = {:?}",
                    z
                );
            }
        }
    }

    #[test]
    fn closed_formula_pinned_value() {
        let ctx = MoebiusContext::new(numerical(&[2, 3])).unwrap();
        // single subset {1} with k = 0: (−1)¹·binom(0 + 2 − 1 − 1, 0) = −1
        assert_eq!(mu_closed(&ctx, &iv(&[2])).unwrap(), Int::from(-1));
        // z ∉ S, no subsets
        assert_eq!(mu_closed(&ctx, &iv(&[1])).unwrap(), Int::from(0));
    }

    #[test]
    fn non_unique_betti_is_rejected() {
        let ctx = MoebiusContext::new(numerical(&[3, 5, 7])).unwrap();
        assert!(ctx.unique_betti().is_none());
        assert!(matches!(a_z(&ctx, &iv(&[3])), Err(Error::MissingUniqueBetti)));
        assert!(matches!(
            mu_closed(&ctx, &iv(&[3])),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            b_z(&ctx, &iv(&[3]), &Int::from(0)),
            Err(Error::MissingDegenerationData)
        ));
    }

    fn coprime_235_degeneration() -> MoebiusContext {
        MoebiusContext::with_degeneration(
            pairwise_coprime(&[2, 3, 5]).unwrap(),
            iv(&[15, 10, 6]),
        )
        .unwrap()
    }

    #[test]
    fn degeneration_context_has_dw() {
        let ctx = coprime_235_degeneration();
        assert_eq!(ctx.d_w(), Some(&Int::from(30)));
        assert_eq!(ctx.betti_degenerated().unwrap(), &[iv(&[30, 30])]);
    }

    #[test]
    fn degenerated_formula_matches_bruteforce() {
        let ctx = coprime_235_degeneration();
        let sw = ctx.degenerated().unwrap().clone();
        for e in invariants::elements_up_to(&sw, &Int::from(35)).unwrap() {
            let (z, lambda) = e.split_last();
            assert_eq!(
                mu_degeneration(&ctx, &z, &lambda).unwrap(),
                mu_bruteforce(&sw, &e).unwrap(),
                "(z, λ) = {:?}",
                e
            );
        }
    }

    #[test]
    fn degenerated_formula_on_hypersurface() {
        // worked instance: b = (2,2), d_w = 6; at z = (5,5), λ = 14 both
        // subsets reach level 14
        let ctx =
            MoebiusContext::with_degeneration(hypersurface(), iv(&[1, 2, 5])).unwrap();
        assert_eq!(ctx.d_w(), Some(&Int::from(6)));
        let z = iv(&[5, 5]);
        let witnesses = a_z(&ctx, &z).unwrap();
        assert_eq!(witnesses.len(), 2);
        for w in &witnesses {
            assert_eq!(w.level, Some(Int::from(14)));
        }
        let sw = ctx.degenerated().unwrap().clone();
        let lam = Int::from(14);
        assert_eq!(
            mu_degeneration(&ctx, &z, &lam).unwrap(),
            mu_bruteforce(&sw, &z.extended(lam.clone())).unwrap()
        );
        // a level matching nothing gives 0
        assert_eq!(
            mu_degeneration(&ctx, &z, &Int::from(3)).unwrap(),
            Int::from(0)
        );
    }

    #[test]
    fn subset_lemmas_hold() {
        let ctx = coprime_235_degeneration();
        let sw = ctx.degenerated().unwrap().clone();
        for e in invariants::elements_up_to(&sw, &Int::from(25)).unwrap() {
            let (z, lambda) = e.split_last();
            let az = a_z(&ctx, &z).unwrap();
            let bz = b_z(&ctx, &z, &lambda).unwrap();
            // projection B ↦ B \ {n+1} is injective into a_z with equal k
            assert!(bz.len() <= az.len());
            let n = ctx.semigroup().nvars();
            let mut projections = BTreeSet::new();
            for b in &bz {
                let proj: Vec<usize> =
                    b.subset.iter().copied().filter(|&i| i < n).collect();
                assert!(projections.insert(proj.clone()), "projection collides");
                assert!(
                    az.iter().any(|a| a.subset == proj && a.k == b.k),
                    "projection missing from a_z"
                );
            }
            // b_z nonempty exactly when λ hits some l_j or l_j + 1
            let hit = az.iter().any(|a| {
                let l = a.level.clone().unwrap();
                lambda == l || lambda == l + Int::one()
            });
            assert_eq!(!bz.is_empty(), hit, "(z, λ) = {:?}", e);
        }
    }
}
