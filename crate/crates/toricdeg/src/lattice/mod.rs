//! Exact integer and rational linear algebra: lattice kernels, Smith normal
//! form, pointedness certificates, rational cone membership and lattice points
//! of the generator zonotope.

mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use simplex::{solve_standard, LpOutcome};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Column vector with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(pub Vec<Int>);

impl IntVec {
    pub fn zero(dim: usize) -> Self {
        IntVec(vec![Int::zero(); dim])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&e| Int::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.dim(), other.dim());
        IntVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.dim(), other.dim());
        IntVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Int) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Concatenation, used to pass from `Z^d` to `Z^{d+1}`.
    pub fn extended(&self, tail: Int) -> IntVec {
        let mut v = self.0.clone();
        v.push(tail);
        IntVec(v)
    }

    /// Drops the last coordinate, returning (head, last).
    pub fn split_last(&self) -> (IntVec, Int) {
        let mut v = self.0.clone();
        let last = v.pop().expect("split_last on empty vector");
        (IntVec(v), last)
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The configuration `A = {a_1,…,a_n} ⊂ Z^d`, stored column-wise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMatrix {
    columns: Vec<IntVec>,
    ambient_dim: usize,
}

impl GeneratorMatrix {
    pub fn new(columns: Vec<IntVec>, ambient_dim: usize) -> Result<Self> {
        for (i, c) in columns.iter().enumerate() {
            if c.dim() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "column {i} has dimension {} (ambient is {ambient_dim})",
                    c.dim()
                )));
            }
        }
        Ok(GeneratorMatrix {
            columns,
            ambient_dim,
        })
    }

    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let d = rows.len();
        let n = if d == 0 { 0 } else { rows[0].len() };
        let columns = (0..n)
            .map(|j| IntVec((0..d).map(|i| Int::from(rows[i][j])).collect()))
            .collect();
        GeneratorMatrix {
            columns,
            ambient_dim: d,
        }
    }

    /// 1-dimensional configuration, i.e. a numerical semigroup.
    pub fn numerical(gens: &[i64]) -> Self {
        GeneratorMatrix {
            columns: gens.iter().map(|&g| IntVec::from_i64(&[g])).collect(),
            ambient_dim: 1,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[IntVec] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &IntVec {
        &self.columns[i]
    }

    /// Indices of duplicated columns (allowed, but callers may warn).
    pub fn duplicate_columns(&self) -> Vec<(usize, usize)> {
        let mut dups = Vec::new();
        for i in 0..self.columns.len() {
            for j in i + 1..self.columns.len() {
                if self.columns[i] == self.columns[j] {
                    dups.push((i, j));
                }
            }
        }
        dups
    }

    /// `π_A(u) = Σ u_i a_i`.
    pub fn apply(&self, u: &IntVec) -> IntVec {
        assert_eq!(u.dim(), self.count(), "coefficient vector length mismatch");
        let mut acc = IntVec::zero(self.ambient_dim);
        for (ui, col) in u.0.iter().zip(&self.columns) {
            if !ui.is_zero() {
                acc = acc.add(&col.scale(ui));
            }
        }
        acc
    }

    /// Row-major copy, used by the normal-form routines.
    fn rows(&self) -> Vec<Vec<Int>> {
        (0..self.ambient_dim)
            .map(|i| self.columns.iter().map(|c| c.0[i].clone()).collect())
            .collect()
    }
}

/// Nonzero elementary divisors of an integer matrix, each dividing the next.
pub fn smith_normal_form(rows: &[Vec<Int>]) -> Vec<Int> {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < nr && t < nc {
        // Locate a nonzero entry of minimal absolute value in the submatrix.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !m[i][j].is_zero()
                    && best
                        .as_ref()
                        .map(|&(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        // Clear row and column t; remainders restart the search.
        let mut clean = true;
        for i in t + 1..nr {
            if !m[i][t].is_zero() {
                let q = div_round(&m[i][t], &m[t][t]);
                for j in t..nc {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..nc {
            if !m[t][j].is_zero() {
                let q = div_round(&m[t][j], &m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // Divisibility condition on the remaining block.
        let mut fixed = false;
        'outer: for i in t + 1..nr {
            for j in t + 1..nc {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    let row = m[i].clone();
                    for (dst, src) in m[t].iter_mut().zip(row) {
                        *dst += src;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        if m[t][t].is_negative() {
            m[t][t] = -m[t][t].clone();
        }
        divisors.push(m[t][t].clone());
        t += 1;
    }
    divisors
}

/// Quotient rounding toward the nearest integer; keeps remainders small.
fn div_round(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of `{u ∈ Z^n : A u = 0}`, canonicalized by Hermite reduction so the
/// output is deterministic.
pub fn lattice_kernel(a: &GeneratorMatrix) -> Vec<IntVec> {
    let n = a.count();
    let d = a.ambient_dim();
    // Column echelon via unimodular column operations tracked in u.
    let mut mat: Vec<Vec<Int>> = a.columns.iter().map(|c| c.0.clone()).collect();
    let mut u: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut pc = 0;
    for r in 0..d {
        loop {
            let mut jmin: Option<usize> = None;
            for j in pc..n {
                if !mat[j][r].is_zero()
                    && jmin
                        .map(|jm| mat[j][r].abs() < mat[jm][r].abs())
                        .unwrap_or(true)
                {
                    jmin = Some(j);
                }
            }
            let Some(jm) = jmin else { break };
            mat.swap(pc, jm);
            u.swap(pc, jm);
            let mut clean = true;
            for j in pc + 1..n {
                if !mat[j][r].is_zero() {
                    let q = div_round(&mat[j][r], &mat[pc][r]);
                    col_sub(&mut mat, j, pc, &q);
                    col_sub(&mut u, j, pc, &q);
                    if !mat[j][r].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                pc += 1;
                break;
            }
        }
        if pc == n {
            break;
        }
    }
    let basis: Vec<IntVec> = (pc..n).map(|j| IntVec(u[j].clone())).collect();
    hermite_rows(basis)
}

fn col_sub(m: &mut [Vec<Int>], target: usize, source: usize, q: &Int) {
    let src = m[source].clone();
    for (t, s) in m[target].iter_mut().zip(src) {
        *t -= q * s;
    }
}

/// Row-style Hermite normal form of a set of vectors: positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(mut rows: Vec<IntVec>) -> Vec<IntVec> {
    rows.retain(|r| !r.is_zero());
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].dim();
    let mut pivot_row = 0;
    for c in 0..ncols {
        loop {
            let mut imin: Option<usize> = None;
            for i in pivot_row..rows.len() {
                if !rows[i].0[c].is_zero()
                    && imin
                        .map(|im| rows[i].0[c].abs() < rows[im].0[c].abs())
                        .unwrap_or(true)
                {
                    imin = Some(i);
                }
            }
            let Some(im) = imin else { break };
            rows.swap(pivot_row, im);
            let mut clean = true;
            for i in pivot_row + 1..rows.len() {
                if !rows[i].0[c].is_zero() {
                    let q = div_round(&rows[i].0[c], &rows[pivot_row].0[c]);
                    let delta = rows[pivot_row].scale(&q);
                    rows[i] = rows[i].sub(&delta);
                    if !rows[i].0[c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                if rows[pivot_row].0[c].is_negative() {
                    rows[pivot_row] = rows[pivot_row].neg();
                }
                // Reduce the entries above the pivot.
                for i in 0..pivot_row {
                    let q = rows[i].0[c].div_floor(&rows[pivot_row].0[c]);
                    if !q.is_zero() {
                        let delta = rows[pivot_row].scale(&q);
                        rows[i] = rows[i].sub(&delta);
                    }
                }
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// `ZA = Z^d`, i.e. all elementary divisors are 1 and the rank is full.
pub fn is_full_lattice(a: &GeneratorMatrix) -> bool {
    let divisors = smith_normal_form(&a.rows());
    divisors.len() == a.ambient_dim() && divisors.iter().all(|e| e.is_one())
}

#[derive(Clone, Debug)]
pub struct Pointedness {
    pub pointed: bool,
    /// Integer functional `c` with `c·a_i ≥ 1` for every nonzero column.
    pub functional: Option<IntVec>,
}

/// Decides `NA ∩ (−NA) = {0}` by exact LP.  The semigroup fails to be pointed
/// exactly when some nonzero nonnegative rational combination of the nonzero
/// columns vanishes.
pub fn is_pointed(a: &GeneratorMatrix) -> Pointedness {
    let d = a.ambient_dim();
    let nz: Vec<&IntVec> = a.columns.iter().filter(|c| !c.is_zero()).collect();
    let n = nz.len();
    if n == 0 {
        return Pointedness {
            pointed: true,
            functional: Some(IntVec(vec![Int::one(); d])),
        };
    }
    // max Σ x_i  s.t.  Σ x_i a_i = 0, 0 ≤ x_i ≤ 1.
    // Variables: x_1..x_n, slacks s_1..s_n with x_i + s_i = 1.
    let ncols = 2 * n;
    let mut rows = Vec::with_capacity(d + n);
    let mut rhs = Vec::with_capacity(d + n);
    for k in 0..d {
        let mut row = vec![Rat::zero(); ncols];
        for (i, col) in nz.iter().enumerate() {
            row[i] = Rat::from(col.0[k].clone());
        }
        rows.push(row);
        rhs.push(Rat::zero());
    }
    for i in 0..n {
        let mut row = vec![Rat::zero(); ncols];
        row[i] = Rat::one();
        row[n + i] = Rat::one();
        rows.push(row);
        rhs.push(Rat::one());
    }
    let mut cost = vec![Rat::zero(); ncols];
    for c in cost.iter_mut().take(n) {
        *c = -Rat::one();
    }
    let pointed = match solve_standard(&rows, &rhs, &cost) {
        LpOutcome::Optimal { objective, .. } => objective.is_zero(),
        LpOutcome::Unbounded => unreachable!("bounded feasible region"),
        LpOutcome::Infeasible => unreachable!("x = 0 is feasible"),
    };
    if !pointed {
        return Pointedness {
            pointed: false,
            functional: None,
        };
    }
    // Find c with c·a_i ≥ 1 on nonzero columns: c = p − q, c·a_i − t_i = 1.
    let ncols = 2 * d + n;
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for col in &nz {
        let mut row = vec![Rat::zero(); ncols];
        for k in 0..d {
            row[k] = Rat::from(col.0[k].clone());
            row[d + k] = -Rat::from(col.0[k].clone());
        }
        rows.push(row);
        rhs.push(Rat::one());
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[2 * d + i] = -Rat::one();
    }
    let cost = vec![Rat::zero(); ncols];
    match solve_standard(&rows, &rhs, &cost) {
        LpOutcome::Optimal { x, .. } => {
            let c: Vec<Rat> = (0..d).map(|k| x[k].clone() - x[d + k].clone()).collect();
            let denom_lcm = c
                .iter()
                .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
            let functional = IntVec(
                c.iter()
                    .map(|r| (r.clone() * Rat::from(denom_lcm.clone())).to_integer())
                    .collect(),
            );
            Pointedness {
                pointed: true,
                functional: Some(functional),
            }
        }
        _ => unreachable!("a pointed cone admits a strictly positive functional"),
    }
}

/// Exact rational certificate for `z = Σ r_i a_i`, `r_i ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeCertificate {
    pub coefficients: Vec<Rat>,
}

impl ConeCertificate {
    /// Re-applies the coefficients to the columns; must reproduce `z`.
    pub fn verify(&self, a: &GeneratorMatrix, z: &IntVec) -> bool {
        if self.coefficients.len() != a.count() {
            return false;
        }
        if self.coefficients.iter().any(Signed::is_negative) {
            return false;
        }
        for k in 0..a.ambient_dim() {
            let mut acc = Rat::zero();
            for (r, col) in self.coefficients.iter().zip(a.columns()) {
                acc += r.clone() * Rat::from(col.0[k].clone());
            }
            if acc != Rat::from(z.0[k].clone()) {
                return false;
            }
        }
        true
    }
}

/// Membership of `z` in the rational cone `R≥0 A`.
pub fn cone_member(z: &IntVec, a: &GeneratorMatrix) -> Result<Option<ConeCertificate>> {
    if z.dim() != a.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "point has dimension {}, ambient is {}",
            z.dim(),
            a.ambient_dim()
        )));
    }
    let d = a.ambient_dim();
    let n = a.count();
    let mut rows = Vec::with_capacity(d);
    let mut rhs = Vec::with_capacity(d);
    for k in 0..d {
        rows.push(
            a.columns
                .iter()
                .map(|c| Rat::from(c.0[k].clone()))
                .collect::<Vec<_>>(),
        );
        rhs.push(Rat::from(z.0[k].clone()));
    }
    let cost = vec![Rat::zero(); n];
    match solve_standard(&rows, &rhs, &cost) {
        LpOutcome::Optimal { x, .. } => Ok(Some(ConeCertificate { coefficients: x })),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("zero objective"),
    }
}

/// Does `z` lie in the zonotope `{Σ α_i a_i : 0 ≤ α_i ≤ 1}`?
fn in_zonotope(z: &IntVec, a: &GeneratorMatrix) -> bool {
    let d = a.ambient_dim();
    let n = a.count();
    if n == 0 {
        return z.is_zero();
    }
    let ncols = 2 * n;
    let mut rows = Vec::with_capacity(d + n);
    let mut rhs = Vec::with_capacity(d + n);
    for k in 0..d {
        let mut row = vec![Rat::zero(); ncols];
        for (i, col) in a.columns.iter().enumerate() {
            row[i] = Rat::from(col.0[k].clone());
        }
        rows.push(row);
        rhs.push(Rat::from(z.0[k].clone()));
    }
    for i in 0..n {
        let mut row = vec![Rat::zero(); ncols];
        row[i] = Rat::one();
        row[n + i] = Rat::one();
        rows.push(row);
        rhs.push(Rat::one());
    }
    let cost = vec![Rat::zero(); ncols];
    matches!(
        solve_standard(&rows, &rhs, &cost),
        LpOutcome::Optimal { .. }
    )
}

/// All lattice points of the zonotope `C = {Σ α_i a_i : 0 ≤ α_i ≤ 1}`,
/// enumerated in ascending lexicographic order over the integer bounding box.
pub fn zonotope_points(a: &GeneratorMatrix) -> Result<Vec<IntVec>> {
    if !is_pointed(a).pointed {
        return Err(Error::NotPointed);
    }
    let d = a.ambient_dim();
    let mut lo = vec![Int::zero(); d];
    let mut hi = vec![Int::zero(); d];
    for col in &a.columns {
        for k in 0..d {
            if col.0[k].is_negative() {
                lo[k] += &col.0[k];
            } else {
                hi[k] += &col.0[k];
            }
        }
    }
    let mut points = Vec::new();
    let mut current = lo.clone();
    'outer: loop {
        let z = IntVec(current.clone());
        if in_zonotope(&z, a) {
            points.push(z);
        }
        // Odometer over the box, last coordinate fastest.
        for k in (0..d).rev() {
            if current[k] < hi[k] {
                current[k] += 1;
                for (c, l) in current.iter_mut().zip(lo.iter()).skip(k + 1) {
                    *c = l.clone();
                }
                continue 'outer;
            }
        }
        break;
    }
    if d == 0 {
        // A zero-dimensional ambient space has the single point ().
        points.push(IntVec(vec![]));
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(rows: &[&[i64]]) -> GeneratorMatrix {
        GeneratorMatrix::from_rows_i64(rows)
    }

    #[test]
    fn kernel_of_6_10_15() {
        let a = GeneratorMatrix::numerical(&[6, 10, 15]);
        let basis = lattice_kernel(&a);
        assert_eq!(basis.len(), 2);
        for u in &basis {
            assert!(a.apply(u).is_zero());
        }
        // Rank check against an independent Smith normal form of the stacked
        // basis: the kernel lattice has rank 2.
        let rows: Vec<Vec<Int>> = basis.iter().map(|v| v.0.clone()).collect();
        assert_eq!(smith_normal_form(&rows).len(), 2);
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let a = gm(&[&[1, 0], &[0, 1]]);
        assert!(lattice_kernel(&a).is_empty());
    }

    #[test]
    fn kernel_of_scroll_matrix() {
        let a = gm(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let basis = lattice_kernel(&a);
        assert_eq!(basis.len(), 2);
        for u in &basis {
            assert!(a.apply(u).is_zero());
            // both defining relations hold by construction of the kernel
            assert!(u.0.iter().sum::<Int>().is_zero());
        }
    }

    #[test]
    fn kernel_is_deterministic() {
        let a = GeneratorMatrix::numerical(&[6, 10, 15]);
        assert_eq!(lattice_kernel(&a), lattice_kernel(&a));
    }

    #[test]
    fn full_lattice_checks() {
        assert!(is_full_lattice(&GeneratorMatrix::numerical(&[6, 10, 15])));
        assert!(!is_full_lattice(&GeneratorMatrix::numerical(&[2, 4])));
        assert!(is_full_lattice(&gm(&[&[1, 1, 1], &[0, 1, 2]])));
    }

    #[test]
    fn smith_normal_form_basics() {
        // diag(2,6) has divisors 2, 6
        let rows = vec![
            vec![Int::from(2), Int::from(0)],
            vec![Int::from(0), Int::from(6)],
        ];
        assert_eq!(smith_normal_form(&rows), vec![Int::from(2), Int::from(6)]);
        let rows = vec![vec![Int::from(2), Int::from(3)]];
        assert_eq!(smith_normal_form(&rows), vec![Int::from(1)]);
    }

    #[test]
    fn pointedness_positive_generators() {
        let p = is_pointed(&GeneratorMatrix::numerical(&[6, 10, 15]));
        assert!(p.pointed);
        let c = p.functional.unwrap();
        assert!(c.dot(&IntVec::from_i64(&[6])) >= Int::one());
    }

    #[test]
    fn pointedness_fails_on_opposite_pair() {
        assert!(!is_pointed(&GeneratorMatrix::numerical(&[1, -1])).pointed);
    }

    #[test]
    fn pointedness_of_degenerated_a2() {
        let a = gm(&[&[1, 1, 2, 0], &[0, 1, 3, 0], &[1, 1, 1, 1]]);
        let p = is_pointed(&a);
        assert!(p.pointed);
        let c = p.functional.unwrap();
        for col in a.columns() {
            assert!(c.dot(col) >= Int::one());
        }
    }

    #[test]
    fn cone_membership_with_certificate() {
        // (2,2,1) lies in the rational cone over A(3)_w
        let a = gm(&[&[1, 1, 3, 0], &[0, 1, 4, 0], &[1, 1, 1, 1]]);
        let z = IntVec::from_i64(&[2, 2, 1]);
        let cert = cone_member(&z, &a).unwrap().expect("member");
        assert!(cert.verify(&a, &z));
        // zero is a member with zero coefficients
        let zero = IntVec::zero(3);
        let cert = cone_member(&zero, &a).unwrap().expect("member");
        assert!(cert.verify(&a, &zero));
        // negative first coordinate cannot be reached
        let neg = IntVec::from_i64(&[-1, 0, 0]);
        assert!(cone_member(&neg, &a).unwrap().is_none());
    }

    #[test]
    fn zonotope_of_two_vectors() {
        let a = gm(&[&[1, 1], &[0, 1]]);
        let pts = zonotope_points(&a).unwrap();
        let expect: Vec<IntVec> = [[0, 0], [1, 0], [1, 1], [2, 1]]
            .iter()
            .map(|p| IntVec::from_i64(&p[..]))
            .collect();
        assert_eq!(pts.len(), 4);
        for e in &expect {
            assert!(pts.contains(e));
        }
    }

    #[test]
    fn zonotope_of_a2_matches_listed_points() {
        let a = gm(&[&[1, 1, 2], &[0, 1, 3]]);
        let pts = zonotope_points(&a).unwrap();
        let expect: Vec<IntVec> = [
            [0, 0],
            [1, 0],
            [1, 1],
            [2, 1],
            [2, 2],
            [2, 3],
            [3, 3],
            [3, 4],
            [4, 4],
        ]
        .iter()
        .map(|p| IntVec::from_i64(&p[..]))
        .collect();
        assert_eq!(pts, expect);
    }

    #[test]
    fn zonotope_of_empty_configuration() {
        let a = GeneratorMatrix::new(vec![], 2).unwrap();
        assert_eq!(zonotope_points(&a).unwrap(), vec![IntVec::zero(2)]);
    }

    #[test]
    fn zonotope_central_symmetry() {
        let a = gm(&[&[1, 1, 2], &[0, 1, 3]]);
        let pts = zonotope_points(&a).unwrap();
        let total = a
            .columns()
            .iter()
            .fold(IntVec::zero(2), |acc, c| acc.add(c));
        for p in &pts {
            assert!(pts.contains(&total.sub(p)));
        }
    }

    #[test]
    fn zonotope_rejects_unpointed() {
        let a = GeneratorMatrix::numerical(&[1, -1]);
        assert!(matches!(zonotope_points(&a), Err(Error::NotPointed)));
    }
}
