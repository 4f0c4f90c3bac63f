//! Non-convexity certificates for 312-containing permutations: two keys
//! `W < X` in the Demazure set and an integral point strictly between them
//! that is not.

use serde::Serialize;

use super::member_of;
use crate::error::{input_err, Result};
use crate::rtuples::{RSet, RTuple};
use crate::scanning::Cell;
use crate::shapes::{key_of_perm, tableau_leq, Partition, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Carrel of `a`.
    pub g: usize,
    /// Carrel of `b`.
    pub h: usize,
    /// Positions (1-based) of the chosen 312 pattern `π_b < π_c < π_a`.
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// Position whose value is swapped with `π_b` (equal to `b` when no swap).
    pub d: usize,
    /// `π` with positions `b` and `d` swapped, and its cohort-sorted form.
    pub chi: Vec<usize>,
    pub chi_sorted: RTuple,
    /// `χ` with positions `a` and `b` swapped, and its cohort-sorted form.
    pub omega: Vec<usize>,
    pub omega_sorted: RTuple,
    #[serde(rename = "X")]
    pub upper_key: Tableau,
    #[serde(rename = "W")]
    pub lower_key: Tableau,
    /// Cells of `X` east of the `q_h` columns holding `π_a`.
    pub mu: Vec<Cell>,
    #[serde(rename = "T")]
    pub tableau: Tableau,
    pub x_numerator: usize,
    pub x_denominator: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn sort_cohorts(rs: &RSet, values: &[usize]) -> RTuple {
    let mut entries = values.to_vec();
    for h in 1..=rs.carrels() {
        entries[rs.carrel_range(h)].sort_unstable();
    }
    RTuple::new(rs.clone(), entries).expect("cohort sorting keeps a permutation")
}

/// The pattern `(g, h, a, b, c)`: `h` minimal, then `π_b` maximal, then `π_a`
/// minimal, then `c` smallest.
fn choose_pattern(p: &RTuple) -> Option<(usize, usize, usize, usize, usize)> {
    let rs = p.rset();
    let v = |i: usize| p.entry(i);
    let n = p.n();
    for h in 2..=rs.r() {
        let (lo, top) = (rs.divider(h - 1), rs.divider(h));
        let completes = |a: usize, b: usize| (top + 1..=n).any(|c| v(b) < v(c) && v(c) < v(a));
        let Some(b) = (lo + 1..=top).filter(|&b| (1..=lo).any(|a| completes(a, b))).max_by_key(|&b| v(b)) else {
            continue;
        };
        let a = (1..=lo).filter(|&a| completes(a, b)).min_by_key(|&a| v(a)).unwrap();
        let c = (top + 1..=n).find(|&c| v(b) < v(c) && v(c) < v(a)).unwrap();
        return Some((rs.carrel_of(a), h, a, b, c));
    }
    None
}

/// Builds the certificate for a containing `π`; errors on avoiding input.
pub fn convexity_witness(p: &RTuple, shape: &Partition) -> Result<Witness> {
    if !p.is_r_permutation() {
        return Err(input_err!("{p} is not an R-permutation"));
    }
    let y = key_of_perm(p, shape)?;
    let rs = p.rset();
    let Some((g, h, a, b, c)) = choose_pattern(p) else {
        return Err(input_err!("{p} is 312-avoiding; its Demazure set is convex"));
    };
    let v = |i: usize| p.entry(i);
    let qg = rs.divider(g);
    let d = (1..=qg).filter(|&e| v(b) < v(e) && v(e) < v(c)).max_by_key(|&e| v(e)).unwrap_or(b);

    let mut chi = p.entries().to_vec();
    chi.swap(b - 1, d - 1);
    let chi_sorted = sort_cohorts(rs, &chi);
    let upper_key = key_of_perm(&chi_sorted, shape)?;
    debug_assert!(tableau_leq(&upper_key, &y)?);

    let (low, high, mid) = (chi[b - 1], v(a), v(c));
    let j = shape.last_column_reaching(rs.divider(h));
    let m = shape.last_column_reaching(qg);
    let mu: Vec<Cell> = (j + 1..=m)
        .filter_map(|l| upper_key.column(l).iter().position(|&x| x == high).map(|k| (l, k + 1)))
        .collect();

    let mut omega = chi.clone();
    omega.swap(a - 1, b - 1);
    let omega_sorted = sort_cohorts(rs, &omega);
    let lower_key = key_of_perm(&omega_sorted, shape)?;

    let mut tableau = upper_key.clone();
    for &(l, k) in &mu {
        tableau.set(l, k, mid);
    }
    let step = gcd(mid - low, high - low);
    Ok(Witness {
        g,
        h,
        a,
        b,
        c,
        d,
        chi,
        chi_sorted,
        omega,
        omega_sorted,
        upper_key,
        lower_key,
        mu,
        tableau,
        x_numerator: (mid - low) / step,
        x_denominator: (high - low) / step,
    })
}

impl Witness {
    /// Re-checks every claimed property against `π` and `λ`; on failure the
    /// error names the first property that does not hold.
    pub fn verify(&self, p: &RTuple, shape: &Partition) -> std::result::Result<(), String> {
        let fail = |what: &str| Err(what.to_string());
        let y = key_of_perm(p, shape).map_err(|e| e.to_string())?;
        let (w, x, t) = (&self.lower_key, &self.upper_key, &self.tableau);
        let leq = |s: &Tableau, u: &Tableau| tableau_leq(s, u).unwrap_or(false);
        if !(leq(w, x) && w != x) {
            return fail("W < X");
        }
        if !leq(x, &y) {
            return fail("X ≤ Y");
        }
        if !(0 < self.x_numerator && self.x_numerator < self.x_denominator) {
            return fail("0 < x < 1");
        }
        let (num, den) = (self.x_numerator as i64, self.x_denominator as i64);
        let on_segment = w
            .flatten()
            .iter()
            .zip(x.flatten())
            .zip(t.flatten())
            .all(|((&lo, hi), mid)| (mid - lo) * den == num * (hi - lo));
        if !on_segment {
            return fail("T = W + x(X - W)");
        }
        if !t.is_semistandard() {
            return fail("T semistandard");
        }
        let member = |s: &Tableau| member_of(s, &y).unwrap_or(false);
        if !member(w) || !member(x) {
            return fail("W, X ∈ D");
        }
        if member(t) {
            return fail("T ∉ D");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charted_example() {
        let pi: RTuple = "4,8;9;2,3;1,5;6,7".parse().unwrap();
        let shape = Partition::minimal_for(pi.rset());
        let w = convexity_witness(&pi, &shape).unwrap();
        assert_eq!((w.g, w.h, w.a, w.b, w.c, w.d), (1, 3, 2, 5, 7, 1));
        assert_eq!((w.x_numerator, w.x_denominator), (1, 4));
        assert_eq!(w.chi, vec![3, 8, 9, 2, 4, 1, 5, 6, 7]);
        assert_eq!(w.verify(&pi, &shape), Ok(()));
    }

    #[test]
    fn smallest_case() {
        let pi: RTuple = "3;1;2".parse().unwrap();
        let shape: Partition = "2,1,0".parse().unwrap();
        let w = convexity_witness(&pi, &shape).unwrap();
        assert_eq!(w.d, w.b);
        assert_eq!(w.upper_key.columns(), &[vec![1, 3], vec![3]]);
        assert_eq!(w.lower_key.columns(), &[vec![1, 3], vec![1]]);
        assert_eq!(w.mu, vec![(2, 1)]);
        assert_eq!(w.tableau.columns(), &[vec![1, 3], vec![2]]);
        assert_eq!((w.x_numerator, w.x_denominator), (1, 2));
        assert_eq!(w.verify(&pi, &shape), Ok(()));
    }

    #[test]
    fn avoiding_input_is_rejected() {
        let pi: RTuple = "2;3;1".parse().unwrap();
        assert!(convexity_witness(&pi, &"2,1,0".parse().unwrap()).is_err());
    }

    #[test]
    fn tampered_witness_fails() {
        let pi: RTuple = "3;1;2".parse().unwrap();
        let shape: Partition = "2,1,0".parse().unwrap();
        let mut w = convexity_witness(&pi, &shape).unwrap();
        w.x_numerator = 0;
        assert!(w.verify(&pi, &shape).is_err());
    }
}
