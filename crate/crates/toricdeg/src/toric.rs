//! Toric ideals and their Gröbner degenerations.
//!
//! For `A = {a_1,…,a_n} ⊂ Z^d` and a weight vector `w ≥ 0` the degeneration
//! of `I_A` by `w` equals the toric ideal of the enlarged configuration
//! `A_w = {(a_1,w_1),…,(a_n,w_n),(0,…,0,1)} ⊂ Z^{d+1}`, with the extra
//! coordinate carried by a new variable `t`.  Both sides of that equality are
//! computable, which is what `verify_theorem_main` exploits.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::binomial::{
    self, Binomial, Monomial, TermOrder, Tiebreak,
};
use crate::error::{Error, Result};
use crate::lattice::{self, GeneratorMatrix, Int, IntVec, Pointedness};

/// A generator matrix together with lazily computed facts about the affine
/// semigroup it spans: pointedness, lattice saturation of the span, a kernel
/// basis and the toric ideal.
pub struct SemigroupPresentation {
    a: GeneratorMatrix,
    pointedness: OnceLock<Pointedness>,
    full_lattice: OnceLock<bool>,
    kernel: OnceLock<Vec<IntVec>>,
    ideal: OnceLock<Vec<Binomial>>,
}

impl SemigroupPresentation {
    pub fn new(a: GeneratorMatrix) -> Self {
        SemigroupPresentation {
            a,
            pointedness: OnceLock::new(),
            full_lattice: OnceLock::new(),
            kernel: OnceLock::new(),
            ideal: OnceLock::new(),
        }
    }

    /// Numerical semigroup `⟨g_1,…,g_n⟩ ⊂ N`.
    pub fn numerical(gens: &[i64]) -> Self {
        SemigroupPresentation::new(GeneratorMatrix::numerical(gens))
    }

    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.a
    }

    /// Number of generators = number of variables of the toric ideal.
    pub fn nvars(&self) -> usize {
        self.a.count()
    }

    pub fn dim(&self) -> usize {
        self.a.ambient_dim()
    }

    pub fn pointedness(&self) -> &Pointedness {
        self.pointedness.get_or_init(|| lattice::is_pointed(&self.a))
    }

    pub fn is_pointed(&self) -> bool {
        self.pointedness().pointed
    }

    /// Integer functional `c` with `c·a_i ≥ 1` for all nonzero generators.
    pub fn functional(&self) -> Result<&IntVec> {
        self.pointedness()
            .functional
            .as_ref()
            .ok_or(Error::NotPointed)
    }

    /// Whether the generators span all of `Z^d` as a group.
    pub fn is_full_lattice(&self) -> bool {
        *self
            .full_lattice
            .get_or_init(|| lattice::is_full_lattice(&self.a))
    }

    pub fn kernel(&self) -> &[IntVec] {
        self.kernel.get_or_init(|| lattice::lattice_kernel(&self.a))
    }

    /// The toric ideal `I_A`, returned as its reduced Gröbner basis under the
    /// canonical (degrevlex) order.  Computed as the saturation of the
    /// lattice-basis binomial ideal with respect to all variables.
    pub fn toric_ideal(&self) -> &[Binomial] {
        self.ideal.get_or_init(|| {
            let order = TermOrder::canonical(self.nvars());
            let gens: Vec<Binomial> = self
                .kernel()
                .iter()
                .filter_map(|u| Binomial::from_kernel_vector(u, &order))
                .collect();
            binomial::saturate_variables(&gens, self.nvars())
        })
    }
}

impl Clone for SemigroupPresentation {
    fn clone(&self) -> Self {
        SemigroupPresentation::new(self.a.clone())
    }
}

impl std::fmt::Debug for SemigroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SemigroupPresentation")
            .field("a", &self.a)
            .finish()
    }
}

/// `π_A(u) = u_1 a_1 + … + u_n a_n`.
pub fn pi(a: &GeneratorMatrix, u: &IntVec) -> IntVec {
    a.apply(u)
}

/// A base presentation, a weight vector and the enlarged configuration
/// `A_w`; `t` is the last variable (index `n`).
pub struct DegenerationContext {
    base: SemigroupPresentation,
    w: IntVec,
    degenerated: SemigroupPresentation,
}

impl DegenerationContext {
    pub fn base(&self) -> &SemigroupPresentation {
        &self.base
    }

    pub fn weights(&self) -> &IntVec {
        &self.w
    }

    pub fn a_w(&self) -> &GeneratorMatrix {
        self.degenerated.matrix()
    }

    /// The presentation of `S_w = N A_w`, with its own lazy caches.
    pub fn degenerated(&self) -> &SemigroupPresentation {
        &self.degenerated
    }
}

/// Assembles `A_w` from `A` and `w`.
pub fn build_context(base: SemigroupPresentation, w: IntVec) -> Result<DegenerationContext> {
    let n = base.nvars();
    if w.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "weight vector has length {}, expected {}",
            w.dim(),
            n
        )));
    }
    if !w.is_nonneg() {
        return Err(Error::InvalidParams("negative weight entry".into()));
    }
    let d = base.dim();
    let mut columns = Vec::with_capacity(n + 1);
    for i in 0..n {
        columns.push(base.matrix().column(i).extended(w.0[i].clone()));
    }
    columns.push(IntVec::zero(d).extended(Int::from(1)));
    let a_w = GeneratorMatrix::new(columns, d + 1)?;
    Ok(DegenerationContext {
        base,
        w,
        degenerated: SemigroupPresentation::new(a_w),
    })
}

/// `g_t = x^u − x^v t^{w·u − w·v}` where `x^u` is the side of larger
/// `w`-weight; the `t` power always sits on the trail term.
pub fn degenerate_binomial(g: &Binomial, w: &IntVec) -> Binomial {
    let wl = g.lead.weight(w);
    let wt = g.trail.weight(w);
    let diff = &wl - &wt;
    if diff.is_negative() {
        Binomial {
            lead: g.trail.extended(Int::zero()),
            trail: g.lead.extended(-diff),
        }
    } else {
        Binomial {
            lead: g.lead.extended(Int::zero()),
            trail: g.trail.extended(diff),
        }
    }
}

/// Reduced GB of `I_A` under the `w`-refined order, then `g ↦ g_t` on every
/// element.  Generates the degenerated ideal `(I_A)_t`.
pub fn degenerate_ideal(ctx: &DegenerationContext, tiebreak: Tiebreak) -> Vec<Binomial> {
    let order = TermOrder::weighted(ctx.w.clone(), tiebreak);
    let gb = binomial::reduce_basis(ctx.base.toric_ideal(), &order);
    gb.iter().map(|g| degenerate_binomial(g, &ctx.w)).collect()
}

#[derive(Clone, Debug)]
pub struct MainTheoremReport {
    pub equal: bool,
    /// Reduced GB (canonical order) of the ideal generated by `{g_t}`.
    pub degenerated_gb: Vec<Binomial>,
    /// Reduced GB (canonical order) of `I_{A_w}` computed from scratch.
    pub independent_gb: Vec<Binomial>,
}

/// Checks `(I_A)_t = I_{A_w}` by computing both sides independently: the
/// left from a `w`-refined GB of `I_A` and the degeneration map, the right
/// from the kernel-plus-saturation pipeline applied to `A_w`.
pub fn verify_theorem_main(ctx: &DegenerationContext, tiebreak: Tiebreak) -> MainTheoremReport {
    let nvars = ctx.base.nvars() + 1;
    let order = TermOrder::canonical(nvars);
    let gt = degenerate_ideal(ctx, tiebreak);
    let degenerated_gb = binomial::reduced_groebner_basis(&gt, &order);
    let independent_gb = ctx.degenerated.toric_ideal().to_vec();
    MainTheoremReport {
        equal: degenerated_gb == independent_gb,
        degenerated_gb,
        independent_gb,
    }
}

/// Substitutes `t = 1`: drops the `t`-exponent of every term, removing
/// binomials that collapse to zero.  Output lives in the original `n`
/// variables.
pub fn dehomogenize_t(gens: &[Binomial]) -> Vec<Binomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let order = TermOrder::canonical(first.nvars() - 1);
    gens.iter()
        .filter_map(|g| {
            Binomial::oriented(g.lead.truncated(), g.trail.truncated(), &order)
        })
        .collect()
}

/// Helper used by tests and the acceptance suite: the degeneration of the
/// full reduced GB of the scroll/numerical examples as `(lead, trail)`
/// exponent pairs, checked elsewhere against listed values.
pub fn binomial_from_exps(lead: &[i64], trail: &[i64], order: &TermOrder) -> Option<Binomial> {
    Binomial::oriented(Monomial::from_i64(lead), Monomial::from_i64(trail), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(lead: &[i64], trail: &[i64], _nvars: usize) -> Binomial {
        Binomial {
            lead: Monomial::from_i64(lead),
            trail: Monomial::from_i64(trail),
        }
    }

    fn scroll() -> SemigroupPresentation {
        SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
            &[1, 1, 1, 1],
            &[0, 1, 2, 3],
        ]))
    }

    fn a_of_m(m: i64) -> SemigroupPresentation {
        SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
            &[1, 1, m],
            &[0, 1, m + 1],
        ]))
    }

    #[test]
    fn pi_examples() {
        let a = GeneratorMatrix::numerical(&[6, 10, 15]);
        assert_eq!(pi(&a, &IntVec::from_i64(&[5, 0, 0])), IntVec::from_i64(&[30]));
        assert_eq!(pi(&a, &IntVec::zero(3)), IntVec::from_i64(&[0]));
        let ctx = build_context(a_of_m(2), IntVec::from_i64(&[1, 1, 1])).unwrap();
        assert_eq!(
            pi(ctx.a_w(), &IntVec::from_i64(&[0, 1, 0, 0])),
            IntVec::from_i64(&[1, 1, 1])
        );
    }

    #[test]
    fn toric_ideal_of_6_10_15() {
        let s = SemigroupPresentation::numerical(&[6, 10, 15]);
        let expect = vec![b(&[5, 0, 0], &[0, 3, 0], 3), b(&[0, 3, 0], &[0, 0, 2], 3)];
        assert!(binomial::ideal_equal(s.toric_ideal(), &expect, 3));
    }

    #[test]
    fn toric_ideal_of_scroll() {
        let s = scroll();
        let expect = vec![
            b(&[1, 0, 1, 0], &[0, 2, 0, 0], 4),
            b(&[1, 0, 0, 1], &[0, 1, 1, 0], 4),
            b(&[0, 1, 0, 1], &[0, 0, 2, 0], 4),
        ];
        assert!(binomial::ideal_equal(s.toric_ideal(), &expect, 4));
    }

    #[test]
    fn toric_ideal_of_identity_is_zero() {
        let s = SemigroupPresentation::new(GeneratorMatrix::from_rows_i64(&[
            &[1, 0],
            &[0, 1],
        ]));
        assert!(s.toric_ideal().is_empty());
    }

    #[test]
    fn build_context_shapes() {
        let s = SemigroupPresentation::numerical(&[6, 10, 15]);
        let ctx = build_context(s, IntVec::from_i64(&[1, 1, 1])).unwrap();
        assert_eq!(ctx.a_w().ambient_dim(), 2);
        assert_eq!(ctx.a_w().count(), 4);
        assert_eq!(*ctx.a_w().column(0), IntVec::from_i64(&[6, 1]));
        assert_eq!(*ctx.a_w().column(3), IntVec::from_i64(&[0, 1]));

        let s = a_of_m(3);
        let ctx = build_context(s, IntVec::from_i64(&[1, 1, 1])).unwrap();
        assert_eq!(*ctx.a_w().column(2), IntVec::from_i64(&[3, 4, 1]));

        let s = SemigroupPresentation::numerical(&[2, 3]);
        let ctx = build_context(s, IntVec::zero(2)).unwrap();
        assert_eq!(*ctx.a_w().column(0), IntVec::from_i64(&[2, 0]));
        assert_eq!(*ctx.a_w().column(2), IntVec::from_i64(&[0, 1]));
    }

    #[test]
    fn build_context_rejects_bad_weights() {
        let s = SemigroupPresentation::numerical(&[2, 3]);
        assert!(build_context(s.clone(), IntVec::from_i64(&[1])).is_err());
        assert!(build_context(s, IntVec::from_i64(&[1, -1])).is_err());
    }

    #[test]
    fn degenerate_binomial_examples() {
        let g = b(&[5, 0, 0], &[0, 3, 0], 3); // x1^5 - x2^3
        let w = IntVec::from_i64(&[1, 1, 1]);
        let gt = degenerate_binomial(&g, &w);
        assert_eq!(gt.lead, Monomial::from_i64(&[5, 0, 0, 0]));
        assert_eq!(gt.trail, Monomial::from_i64(&[0, 3, 0, 2]));

        let g = b(&[0, 1, 0, 1], &[0, 0, 2, 0], 4); // bd - c^2
        let w = IntVec::from_i64(&[3, 7, 2, 5]);
        let gt = degenerate_binomial(&g, &w);
        assert_eq!(gt.lead, Monomial::from_i64(&[0, 1, 0, 1, 0]));
        assert_eq!(gt.trail, Monomial::from_i64(&[0, 0, 2, 0, 8]));

        let w0 = IntVec::zero(4);
        let gt = degenerate_binomial(&g, &w0);
        assert_eq!(gt.lead, Monomial::from_i64(&[0, 1, 0, 1, 0]));
        assert_eq!(gt.trail, Monomial::from_i64(&[0, 0, 2, 0, 0]));
    }

    #[test]
    fn degenerate_binomial_reorients_when_needed() {
        // lead x2^3 has smaller w-weight than trail x1^5 under w=(1,1,1)
        let g = Binomial {
            lead: Monomial::from_i64(&[0, 3, 0]),
            trail: Monomial::from_i64(&[5, 0, 0]),
        };
        let w = IntVec::from_i64(&[1, 1, 1]);
        let gt = degenerate_binomial(&g, &w);
        assert_eq!(gt.lead, Monomial::from_i64(&[5, 0, 0, 0]));
        assert_eq!(gt.trail, Monomial::from_i64(&[0, 3, 0, 2]));
    }

    #[test]
    fn degenerate_ideal_one_one() {
        let ctx = build_context(
            SemigroupPresentation::numerical(&[6, 10, 15]),
            IntVec::from_i64(&[1, 1, 1]),
        )
        .unwrap();
        let gt = degenerate_ideal(&ctx, Tiebreak::Lex);
        // the reduced GB rewrites the trail of x1^5 - x2^3 t^2 further, so we
        // get {x2^3 - x3^2 t, x1^5 - x3^2 t^3}; same ideal, same degrees
        assert_eq!(gt.len(), 2);
        assert!(gt.contains(&b(&[0, 3, 0, 0], &[0, 0, 2, 1], 4)));
        let minimal_form = vec![
            b(&[5, 0, 0, 0], &[0, 3, 0, 2], 4),
            b(&[0, 3, 0, 0], &[0, 0, 2, 1], 4),
        ];
        assert!(binomial::ideal_equal(&gt, &minimal_form, 4));
    }

    #[test]
    fn degenerate_ideal_scroll() {
        let ctx = build_context(scroll(), IntVec::from_i64(&[3, 7, 2, 5])).unwrap();
        let gt = degenerate_ideal(&ctx, Tiebreak::Lex);
        let expect = vec![
            b(&[0, 2, 0, 0, 0], &[1, 0, 1, 0, 9], 5), // b^2 - a c t^9
            b(&[0, 1, 1, 0, 0], &[1, 0, 0, 1, 1], 5), // b c - a d t
            b(&[0, 1, 0, 1, 0], &[0, 0, 2, 0, 8], 5), // b d - c^2 t^8
            b(&[1, 0, 0, 2, 0], &[0, 0, 3, 0, 7], 5), // a d^2 - c^3 t^7
        ];
        for e in &expect {
            assert!(gt.contains(e), "missing {e:?} in {gt:?}");
        }
        assert_eq!(gt.len(), 4);
    }

    #[test]
    fn degenerated_binomials_are_a_w_homogeneous() {
        let ctx = build_context(scroll(), IntVec::from_i64(&[3, 7, 2, 5])).unwrap();
        for g in degenerate_ideal(&ctx, Tiebreak::Lex) {
            assert!(g.is_homogeneous(ctx.a_w()));
        }
    }

    #[test]
    fn main_theorem_on_one_one() {
        let ctx = build_context(
            SemigroupPresentation::numerical(&[6, 10, 15]),
            IntVec::from_i64(&[1, 1, 1]),
        )
        .unwrap();
        assert!(verify_theorem_main(&ctx, Tiebreak::Lex).equal);
        assert!(verify_theorem_main(&ctx, Tiebreak::Degrevlex).equal);
    }

    #[test]
    fn main_theorem_on_scroll() {
        let ctx = build_context(scroll(), IntVec::from_i64(&[3, 7, 2, 5])).unwrap();
        assert!(verify_theorem_main(&ctx, Tiebreak::Lex).equal);
    }

    #[test]
    fn main_theorem_with_zero_weights() {
        let ctx = build_context(scroll(), IntVec::zero(4)).unwrap();
        assert!(verify_theorem_main(&ctx, Tiebreak::Degrevlex).equal);
    }

    #[test]
    fn dehomogenization_inverts_degeneration() {
        let ctx = build_context(
            SemigroupPresentation::numerical(&[6, 10, 15]),
            IntVec::from_i64(&[1, 1, 1]),
        )
        .unwrap();
        let gt = degenerate_ideal(&ctx, Tiebreak::Lex);
        let back = dehomogenize_t(&gt);
        assert!(binomial::ideal_equal(&back, ctx.base().toric_ideal(), 3));
    }

    #[test]
    fn dehomogenization_drops_pure_t_binomials() {
        let order = TermOrder::canonical(3);
        let g = binomial_from_exps(&[1, 0, 2], &[1, 0, 0], &order).unwrap();
        assert!(dehomogenize_t(&[g]).is_empty());
    }

    proptest! {
        // π_{A_w}(u, u_{n+1}) = (π_A(u), w·u + u_{n+1})
        #[test]
        fn graded_projection_identity(
            entries in proptest::collection::vec(-6i64..=6, 6),
            u in proptest::collection::vec(0i64..=5, 3),
            un1 in 0i64..=5,
            w in proptest::collection::vec(0i64..=8, 3),
        ) {
            let a = GeneratorMatrix::from_rows_i64(&[
                &entries[0..3], &entries[3..6],
            ]);
            let s = SemigroupPresentation::new(a.clone());
            let ctx = build_context(s, IntVec::from_i64(&w)).unwrap();
            let mut ext = u.clone();
            ext.push(un1);
            let lhs = pi(ctx.a_w(), &IntVec::from_i64(&ext));
            let base = pi(&a, &IntVec::from_i64(&u));
            let wdot = IntVec::from_i64(&w).dot(&IntVec::from_i64(&u)) + Int::from(un1);
            let rhs = base.extended(wdot);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
