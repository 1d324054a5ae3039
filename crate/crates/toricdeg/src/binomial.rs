//! Monomials, pure-difference binomials and a Buchberger engine that is
//! closed on binomials.
//!
//! Every polynomial handled here is of the form `x^u − x^v`; S-polynomials
//! and normal forms of such elements are again of that form (or zero), so the
//! whole Gröbner machinery works on pairs of exponent vectors.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, GeneratorMatrix, Int, IntVec};

/// A monomial `x^u` with nonnegative arbitrary-precision exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: IntVec,
}

impl Monomial {
    pub fn new(exps: IntVec) -> Result<Self> {
        if !exps.is_nonneg() {
            return Err(Error::InvalidParams(format!(
                "negative exponent in monomial {exps:?}"
            )));
        }
        Ok(Monomial { exps })
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: IntVec::zero(nvars),
        }
    }

    pub fn from_i64(exps: &[i64]) -> Self {
        Monomial::new(IntVec::from_i64(exps)).expect("nonnegative exponents")
    }

    pub fn nvars(&self) -> usize {
        self.exps.dim()
    }

    pub fn exps(&self) -> &IntVec {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_zero()
    }

    pub fn total_degree(&self) -> Int {
        self.exps.0.iter().sum()
    }

    pub fn weight(&self, w: &IntVec) -> Int {
        self.exps.dot(w)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .0
            .iter()
            .zip(&other.exps.0)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.add(&other.exps),
        }
    }

    /// `self / other`, provided `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self.exps.sub(&other.exps),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: IntVec(
                self.exps
                    .0
                    .iter()
                    .zip(&other.exps.0)
                    .map(|(a, b)| a.max(b).clone())
                    .collect(),
            ),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .0
            .iter()
            .zip(&other.exps.0)
            .all(|(a, b)| a.is_zero() || b.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Appends one variable with the given exponent (the `t` variable).
    pub fn extended(&self, e: Int) -> Monomial {
        debug_assert!(!e.is_negative());
        Monomial {
            exps: self.exps.extended(e),
        }
    }

    /// Sets the exponent of variable `i` to zero.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.0[i] = Int::zero();
        Monomial { exps }
    }

    /// Drops the last variable.
    pub fn truncated(&self) -> Monomial {
        let (head, _) = self.exps.split_last();
        Monomial { exps: head }
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.exps.0.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == &Int::from(1) {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tiebreak {
    Lex,
    Degrevlex,
}

/// A weight vector refined by lex or degrevlex with an explicit variable
/// permutation; `perm[0]` is the most significant variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TermOrder {
    pub weight: IntVec,
    pub tiebreak: Tiebreak,
    pub perm: Vec<usize>,
}

impl TermOrder {
    pub fn new(weight: IntVec, tiebreak: Tiebreak, perm: Vec<usize>) -> Result<Self> {
        let n = weight.dim();
        if !weight.is_nonneg() {
            return Err(Error::InvalidParams("negative weight entry".into()));
        }
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParams("permutation length mismatch".into()));
        }
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParams("invalid variable permutation".into()));
            }
            seen[p] = true;
        }
        Ok(TermOrder {
            weight,
            tiebreak,
            perm,
        })
    }

    pub fn weighted(weight: IntVec, tiebreak: Tiebreak) -> Self {
        let n = weight.dim();
        TermOrder {
            weight,
            tiebreak,
            perm: (0..n).collect(),
        }
    }

    /// Plain degrevlex with natural variable order; the fixed canonical order
    /// used for ideal comparison.
    pub fn canonical(nvars: usize) -> Self {
        TermOrder {
            weight: IntVec::zero(nvars),
            tiebreak: Tiebreak::Degrevlex,
            perm: (0..nvars).collect(),
        }
    }

    /// Elimination order for the last variable: weight 1 on it, degrevlex
    /// tiebreak.  Any monomial containing that variable beats any without it.
    fn eliminate_last(nvars: usize) -> Self {
        let mut w = vec![Int::zero(); nvars];
        w[nvars - 1] = Int::from(1);
        TermOrder {
            weight: IntVec(w),
            tiebreak: Tiebreak::Degrevlex,
            perm: (0..nvars).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.weight.dim()
    }

    pub fn cmp(&self, m1: &Monomial, m2: &Monomial) -> Ordering {
        debug_assert_eq!(m1.nvars(), self.nvars());
        debug_assert_eq!(m2.nvars(), self.nvars());
        let w1 = m1.weight(&self.weight);
        let w2 = m2.weight(&self.weight);
        match w1.cmp(&w2) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.tiebreak {
            Tiebreak::Lex => {
                for &i in &self.perm {
                    match m1.exps.0[i].cmp(&m2.exps.0[i]) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            Tiebreak::Degrevlex => {
                match m1.total_degree().cmp(&m2.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for &i in self.perm.iter().rev() {
                    match m1.exps.0[i].cmp(&m2.exps.0[i]) {
                        // smaller exponent in the least significant position wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// `lead − trail` with implicit coefficients `+1, −1`; `lead > trail` in the
/// order it was oriented under.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orients `m1 − m2`; `None` when the difference is zero.
    pub fn oriented(m1: Monomial, m2: Monomial, order: &TermOrder) -> Option<Binomial> {
        match order.cmp(&m1, &m2) {
            Ordering::Greater => Some(Binomial {
                lead: m1,
                trail: m2,
            }),
            Ordering::Less => Some(Binomial {
                lead: m2,
                trail: m1,
            }),
            Ordering::Equal => None,
        }
    }

    /// Binomial `x^{u+} − x^{u−}` of a kernel vector, oriented by `order`.
    pub fn from_kernel_vector(u: &IntVec, order: &TermOrder) -> Option<Binomial> {
        let pos = IntVec(
            u.0.iter()
                .map(|e| if e.is_positive() { e.clone() } else { Int::zero() })
                .collect(),
        );
        let neg = IntVec(
            u.0.iter()
                .map(|e| if e.is_negative() { -e.clone() } else { Int::zero() })
                .collect(),
        );
        Binomial::oriented(Monomial { exps: pos }, Monomial { exps: neg }, order)
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// `π(lead) = π(trail)` under the grading matrix.
    pub fn is_homogeneous(&self, grading: &GeneratorMatrix) -> bool {
        grading.apply(self.lead.exps()) == grading.apply(self.trail.exps())
    }

    pub fn degree(&self, grading: &GeneratorMatrix) -> IntVec {
        grading.apply(self.lead.exps())
    }
}

impl std::fmt::Debug for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} - {:?}", self.lead, self.trail)
    }
}

/// Fully reduces a monomial modulo the leading terms of `basis`.
///
/// Precondition: all of `basis` is oriented under one common term order, so
/// each rewriting step strictly decreases the monomial and the loop stops.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    'outer: loop {
        for g in basis {
            if let Some(q) = cur.checked_div(&g.lead) {
                cur = q.mul(&g.trail);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Normal form of a binomial: both monomials are reduced, `None` means the
/// binomial lies in the ideal of `basis` leading-term-wise (reduces to zero).
pub fn normal_form(b: &Binomial, basis: &[Binomial], order: &TermOrder) -> Option<Binomial> {
    let lead = reduce_monomial(&b.lead, basis);
    let trail = reduce_monomial(&b.trail, basis);
    Binomial::oriented(lead, trail, order)
}

/// Buchberger's algorithm on pure-difference binomials.  Pairs are processed
/// by increasing weighted degree of the lcm; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if let Some(b) = Binomial::oriented(g.lead.clone(), g.trail.clone(), order) {
            if !basis.contains(&b) {
                basis.push(b);
            }
        }
    }
    // min-heap on (weight of lcm, total degree of lcm, i, j)
    let mut queue: BinaryHeap<std::cmp::Reverse<(Int, Int, usize, usize)>> = BinaryHeap::new();
    let push_pairs =
        |queue: &mut BinaryHeap<std::cmp::Reverse<(Int, Int, usize, usize)>>,
         basis: &[Binomial],
         j: usize| {
            for i in 0..j {
                let lcm = basis[i].lead.lcm(&basis[j].lead);
                queue.push(std::cmp::Reverse((
                    lcm.weight(&order.weight),
                    lcm.total_degree(),
                    i,
                    j,
                )));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &basis, j);
    }
    while let Some(std::cmp::Reverse((_, _, i, j))) = queue.pop() {
        if basis[i].lead.coprime(&basis[j].lead) {
            continue;
        }
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        let m1 = lcm
            .checked_div(&basis[i].lead)
            .expect("lcm divisible by lead")
            .mul(&basis[i].trail);
        let m2 = lcm
            .checked_div(&basis[j].lead)
            .expect("lcm divisible by lead")
            .mul(&basis[j].trail);
        let r1 = reduce_monomial(&m1, &basis);
        let r2 = reduce_monomial(&m2, &basis);
        if let Some(new) = Binomial::oriented(r1, r2, order) {
            basis.push(new);
            push_pairs(&mut queue, &basis, basis.len() - 1);
        }
    }
    basis
}

/// The unique reduced Gröbner basis of `⟨gens⟩` for `order`: leading
/// monomials pairwise non-dividing, trails fully reduced, elements sorted.
pub fn reduced_groebner_basis(gens: &[Binomial], order: &TermOrder) -> Vec<Binomial> {
    let gb = buchberger(gens, order);
    interreduce(gb, order)
}

/// Interreduction of a Gröbner basis (minimalize leads, reduce trails, sort).
pub fn reduce_basis(gb: &[Binomial], order: &TermOrder) -> Vec<Binomial> {
    // Re-running Buchberger is a no-op on an actual GB and makes the
    // operation total on arbitrary generating sets.
    reduced_groebner_basis(gb, order)
}

fn interreduce(mut gb: Vec<Binomial>, order: &TermOrder) -> Vec<Binomial> {
    gb.sort_by(|a, b| {
        order
            .cmp(&a.lead, &b.lead)
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    let mut kept: Vec<Binomial> = Vec::new();
    for g in gb {
        if !kept.iter().any(|h| h.lead.divides(&g.lead)) {
            kept.push(g);
        }
    }
    let leads = kept.clone();
    for g in kept.iter_mut() {
        let trail = reduce_monomial(&g.trail, &leads);
        *g = Binomial {
            lead: g.lead.clone(),
            trail,
        };
    }
    kept.sort_by(|a, b| {
        order
            .cmp(&a.lead, &b.lead)
            .then_with(|| order.cmp(&a.trail, &b.trail))
    });
    kept
}

/// Equality of the ideals `⟨gens1⟩` and `⟨gens2⟩`, decided by comparing
/// reduced Gröbner bases under the canonical order.
pub fn ideal_equal(gens1: &[Binomial], gens2: &[Binomial], nvars: usize) -> bool {
    let order = TermOrder::canonical(nvars);
    reduced_groebner_basis(gens1, &order) == reduced_groebner_basis(gens2, &order)
}

/// Saturation `(⟨gens⟩ : (x_1⋯x_n)^∞)`.
///
/// Computed by inverting the product of all variables with one auxiliary
/// variable `y`: the binomial `y·x_1⋯x_n − 1` is adjoined and `y` is
/// eliminated, which stays entirely inside the binomial world.  Returns the
/// reduced Gröbner basis of the saturation under the canonical order.
pub fn saturate_variables(gens: &[Binomial], nvars: usize) -> Vec<Binomial> {
    if gens.is_empty() {
        return Vec::new();
    }
    let ext = nvars + 1;
    let elim = TermOrder::eliminate_last(ext);
    let mut ext_gens: Vec<Binomial> = Vec::new();
    for g in gens {
        let lead = g.lead.extended(Int::zero());
        let trail = g.trail.extended(Int::zero());
        if let Some(b) = Binomial::oriented(lead, trail, &elim) {
            ext_gens.push(b);
        }
    }
    let inverter = Binomial::oriented(
        Monomial::new(IntVec(vec![Int::from(1); ext])).unwrap(),
        Monomial::one(ext),
        &elim,
    )
    .expect("product of variables is not 1");
    ext_gens.push(inverter);
    let gb = reduced_groebner_basis(&ext_gens, &elim);
    let mut result = Vec::new();
    let canonical = TermOrder::canonical(nvars);
    for g in gb {
        if g.lead.exps().0[nvars].is_zero() {
            // with an elimination order a y-free lead forces a y-free trail
            debug_assert!(g.trail.exps().0[nvars].is_zero());
            if let Some(b) = Binomial::oriented(g.lead.truncated(), g.trail.truncated(), &canonical)
            {
                result.push(b);
            }
        }
    }
    reduced_groebner_basis(&result, &canonical)
}

/// One graded degree worth of minimal generators.
#[derive(Clone, Debug)]
pub struct DegreeEntry {
    pub degree: IntVec,
    pub count: usize,
    pub representatives: Vec<Binomial>,
}

/// Minimal generators of a graded binomial ideal, grouped by degree; the
/// per-degree counts are the first Betti numbers `β_{1,a}`.
#[derive(Clone, Debug)]
pub struct MinimalGenerators {
    pub entries: Vec<DegreeEntry>,
}

impl MinimalGenerators {
    pub fn degrees(&self) -> Vec<IntVec> {
        self.entries.iter().map(|e| e.degree.clone()).collect()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.count).sum()
    }

    pub fn generators(&self) -> Vec<Binomial> {
        self.entries
            .iter()
            .flat_map(|e| e.representatives.iter().cloned())
            .collect()
    }
}

/// Extracts minimal generators from a generating set of a homogeneous
/// binomial ideal, processing degrees along a linear extension of the
/// divisibility order (pointedness functional first, lex on ties).
pub fn minimal_generators(
    gens: &[Binomial],
    grading: &GeneratorMatrix,
) -> Result<MinimalGenerators> {
    let pointed = lattice::is_pointed(grading);
    let Some(functional) = pointed.functional else {
        return Err(Error::NotPointed);
    };
    let mut by_degree: BTreeMap<(Int, IntVec), Vec<Binomial>> = BTreeMap::new();
    for g in gens {
        if !g.is_homogeneous(grading) {
            return Err(Error::NotHomogeneous(format!("{g:?}")));
        }
        let deg = g.degree(grading);
        by_degree
            .entry((functional.dot(&deg), deg))
            .or_default()
            .push(g.clone());
    }
    let nvars = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let order = TermOrder::canonical(nvars);
    let mut kept: Vec<Binomial> = Vec::new();
    let mut kept_gb: Vec<Binomial> = Vec::new();
    let mut entries = Vec::new();
    for ((_, degree), group) in by_degree {
        let mut representatives = Vec::new();
        for g in group {
            if normal_form(&g, &kept_gb, &order).is_some() {
                kept.push(g.clone());
                kept_gb = reduced_groebner_basis(&kept, &order);
                representatives.push(g);
            }
        }
        if !representatives.is_empty() {
            entries.push(DegreeEntry {
                degree,
                count: representatives.len(),
                representatives,
            });
        }
    }
    Ok(MinimalGenerators { entries })
}
