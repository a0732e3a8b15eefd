//! Exact linear feasibility over the rationals.
//!
//! Solves `find x >= 0 with A x = b` by a dense phase-1 simplex with Bland's
//! rule. Everything is exact rational arithmetic; the dimensions here are
//! tiny (at most a few dozen columns), so no sparsity or scaling is needed.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Finds a nonnegative exact solution of `sum_j x_j * columns[j] = rhs`,
/// or None when the system is infeasible.
pub fn solve_nonnegative(columns: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let d = rhs.len();
    let nv = columns.len();
    for col in columns {
        assert_eq!(col.len(), d, "column length must match rhs length");
    }

    // Tableau rows: structural columns, then one artificial per row, then RHS.
    let ncols = nv + d;
    let mut a = vec![vec![BigRational::zero(); ncols + 1]; d];
    for i in 0..d {
        let flip = rhs[i].is_negative();
        for (j, col) in columns.iter().enumerate() {
            a[i][j] = if flip { -col[i].clone() } else { col[i].clone() };
        }
        a[i][ncols] = if flip { -rhs[i].clone() } else { rhs[i].clone() };
        a[i][nv + i] = BigRational::one();
    }

    let mut basis: Vec<usize> = (nv..nv + d).collect();

    // Phase-1 objective: minimize the sum of artificials. Maintain the
    // reduced-cost row explicitly; z[ncols] is minus the current objective.
    let mut z = vec![BigRational::zero(); ncols + 1];
    for j in 0..=ncols {
        let mut acc = BigRational::zero();
        for row in a.iter().take(d) {
            acc += &row[j];
        }
        let cost = if (nv..ncols).contains(&j) {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        z[j] = cost - acc;
    }

    // Bland: entering column is the lowest index with negative reduced cost.
    while let Some(enter) = (0..ncols).find(|&j| z[j].is_negative()) {
        // Ratio test; ties resolved toward the smallest basis index (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..d {
            if a[i][enter].is_positive() {
                let ratio = &a[i][ncols] / &a[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave?; // no positive entry: phase-1 cannot be unbounded, treat as infeasible

        let pivot = a[leave][enter].clone();
        for v in a[leave].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row = a[leave].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != leave && !row[enter].is_zero() {
                let factor = row[enter].clone();
                for (slot, pv) in row.iter_mut().zip(&pivot_row) {
                    *slot -= &factor * pv;
                }
            }
        }
        if !z[enter].is_zero() {
            let factor = z[enter].clone();
            for (slot, pv) in z.iter_mut().zip(&pivot_row) {
                *slot -= &factor * pv;
            }
        }
        basis[leave] = enter;
    }

    // Objective value is -z[ncols]; positive means infeasible.
    if !z[ncols].is_zero() {
        return None;
    }

    let mut x = vec![BigRational::zero(); nv];
    for i in 0..d {
        if basis[i] < nv {
            x[basis[i]] = a[i][ncols].clone();
        }
    }
    Some(x)
}
