//! Dense two-phase simplex over exact rationals.
//!
//! Solves `min c·x  s.t.  A x = b, x ≥ 0` with Bland's pivoting rule, so the
//! method terminates on every input.  Problem sizes here are tiny (a handful
//! of rows, a few dozen columns), a tableau implementation is plenty.

use num_traits::{One, Signed, Zero};

use crate::lattice::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rat>, objective: Rat },
}

/// `min c·x` subject to `a x = b`, `x ≥ 0`.
pub fn solve_standard(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Phase 1: artificial variable per row, minimize their sum.
    let mut tableau: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = a[i].clone();
        let mut bi = b[i].clone();
        if bi.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            bi = -bi;
        }
        for j in 0..m {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
        tableau.push(row);
        rhs.push(bi);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let phase1_cost: Vec<Rat> = (0..n + m)
        .map(|j| if j < n { Rat::zero() } else { Rat::one() })
        .collect();

    match run_phases(&mut tableau, &mut rhs, &mut basis, &phase1_cost, n + m) {
        SimplexEnd::Unbounded => unreachable!("phase 1 objective is bounded below by 0"),
        SimplexEnd::Optimal(obj) => {
            if !obj.is_zero() {
                return LpOutcome::Infeasible;
            }
        }
    }

    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant equalities and get dropped.
    let mut drop_rows = Vec::new();
    for i in 0..m {
        if basis[i] >= n {
            let mut pivot_col = None;
            for j in 0..n {
                if !tableau[i][j].is_zero() {
                    pivot_col = Some(j);
                    break;
                }
            }
            match pivot_col {
                Some(j) => pivot(&mut tableau, &mut rhs, &mut basis, i, j),
                None => drop_rows.push(i),
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        tableau.remove(i);
        rhs.remove(i);
        basis.remove(i);
    }
    for row in tableau.iter_mut() {
        row.truncate(n);
    }

    // Phase 2.
    match run_phases(&mut tableau, &mut rhs, &mut basis, c, n) {
        SimplexEnd::Unbounded => LpOutcome::Unbounded,
        SimplexEnd::Optimal(objective) => {
            let mut x = vec![Rat::zero(); n];
            for (i, &bi) in basis.iter().enumerate() {
                if bi < n {
                    x[bi] = rhs[i].clone();
                }
            }
            LpOutcome::Optimal { x, objective }
        }
    }
}

enum SimplexEnd {
    Optimal(Rat),
    Unbounded,
}

fn run_phases(
    tableau: &mut [Vec<Rat>],
    rhs: &mut [Rat],
    basis: &mut [usize],
    cost: &[Rat],
    ncols: usize,
) -> SimplexEnd {
    loop {
        // Reduced costs: c_j - c_B B^{-1} A_j, computed directly from the
        // current tableau (rows are already B^{-1} A).
        let mut entering = None;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let mut red = cost[j].clone();
            for (i, &bi) in basis.iter().enumerate() {
                if !tableau[i][j].is_zero() {
                    red -= cost[bi].clone() * tableau[i][j].clone();
                }
            }
            if red.is_negative() {
                entering = Some(j); // Bland: smallest index
                break;
            }
        }
        let Some(j) = entering else {
            let mut obj = Rat::zero();
            for (i, &bi) in basis.iter().enumerate() {
                obj += cost[bi].clone() * rhs[i].clone();
            }
            return SimplexEnd::Optimal(obj);
        };

        // Ratio test, ties broken by smallest basis index (Bland).
        let mut leaving: Option<(usize, Rat)> = None;
        for i in 0..tableau.len() {
            if tableau[i][j].is_positive() {
                let ratio = rhs[i].clone() / tableau[i][j].clone();
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leaving else {
            return SimplexEnd::Unbounded;
        };
        pivot(tableau, rhs, basis, i, j);
    }
}

fn pivot(tableau: &mut [Vec<Rat>], rhs: &mut [Rat], basis: &mut [usize], row: usize, col: usize) {
    let p = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        *v /= p.clone();
    }
    rhs[row] /= p;
    for i in 0..tableau.len() {
        if i == row || tableau[i][col].is_zero() {
            continue;
        }
        let f = tableau[i][col].clone();
        for j in 0..tableau[i].len() {
            let d = f.clone() * tableau[row][j].clone();
            tableau[i][j] -= d;
        }
        rhs[i] = rhs[i].clone() - f * rhs[row].clone();
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    #[test]
    fn feasible_point_on_segment() {
        // x1 + 2 x2 = 4, x >= 0, min x1
        let out = solve_standard(&[vec![r(1), r(2)]], &[r(4)], &[r(1), r(0)]);
        match out {
            LpOutcome::Optimal { x, objective } => {
                assert_eq!(objective, r(0));
                assert_eq!(x, vec![r(0), r(2)]);
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn infeasible_system() {
        // x1 = -1, x1 >= 0
        let out = solve_standard(&[vec![r(1)]], &[r(-1)], &[r(0)]);
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_objective() {
        // x1 - x2 = 0, min -x1
        let out = solve_standard(&[vec![r(1), r(-1)]], &[r(0)], &[r(-1), r(0)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let out = solve_standard(
            &[vec![r(1), r(1)], vec![r(2), r(2)]],
            &[r(3), r(6)],
            &[r(1), r(1)],
        );
        match out {
            LpOutcome::Optimal { objective, .. } => assert_eq!(objective, r(3)),
            other => panic!("unexpected: {other:?}"),
        }
    }
}
