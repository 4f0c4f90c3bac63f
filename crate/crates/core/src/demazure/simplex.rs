//! Exact phase-I simplex: is a target point a convex combination of given
//! points? Dense tableau over `BigRational`, Bland's rule, so it terminates.

use num::{BigRational, One, Signed, Zero};

/// Solves `Σ w_i p_i = target, Σ w_i = 1, w ≥ 0` for feasibility.
pub(crate) fn convex_combination_exists(points: &[Vec<i64>], target: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let vars = points.len();
    let rows = dim + 1;
    // Columns: the weights, then one artificial per row, then the right-hand side.
    let width = vars + rows + 1;
    let rhs = width - 1;
    let int = |v: i64| BigRational::from_integer(v.into());
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for r in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        let mut b = if r < dim { target[r] } else { 1 };
        let sign = if b < 0 { -1 } else { 1 };
        b *= sign;
        for (i, p) in points.iter().enumerate() {
            row[i] = int(sign * if r < dim { p[r] } else { 1 });
        }
        row[vars + r] = BigRational::one();
        row[rhs] = int(b);
        tab.push(row);
    }
    // Objective row: minimise the sum of artificials, written in reduced form.
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for (c, v) in row.iter().enumerate() {
            if c < vars || c == rhs {
                obj[c] -= v;
            }
        }
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();

    while let Some(enter) = (0..rhs).find(|&c| tab[rows][c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if tab[r][enter].is_positive() {
                let ratio = &tab[r][rhs] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded cannot happen in phase I; treat defensively as infeasible.
            return false;
        };
        pivot(&mut tab, pr, enter);
        basis[pr] = enter;
    }
    tab[rows][rhs].is_zero()
}

fn pivot(tab: &mut [Vec<BigRational>], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[pr].clone();
    for (r, row) in tab.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let factor = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    }
}
