//! Generators and counters for the families counted by the parabolic Catalan
//! numbers `C_n^R`, their totals over all `R`, and the OEIS prefixes.

mod chains;
mod patterns;
mod shape_tuples;

use std::collections::HashMap;
use std::str::FromStr;

use num::{BigInt, BigUint, One, Zero};
use rayon::prelude::*;

use crate::error::{input_err, Error, Result};
use crate::rtuples::{RSet, RTuple};

pub use chains::{gen_generalized_rcd_chains, gen_gapless_keys, gen_rcd_chains};
pub use patterns::{gen_avoiding_ordered_partitions, OrderedPartition, Pattern};
pub use shape_tuples::{gapless_of_shape_tuple, gen_shape_tuples, shape_tuple_of_gapless, ShapeTuple};

/// Largest number of R-permutations a brute-force routine will walk.
pub const PERMUTATION_GUARD: u128 = 50_000_000;

/// Largest `n` for which `count_total` sums over all subsets.
pub const TOTAL_GUARD: usize = 16;

fn guard_permutations(rs: &RSet) -> Result<()> {
    let count = rs.multinomial();
    if count > PERMUTATION_GUARD {
        return Err(Error::Guard(format!("{count} R-permutations for n = {}, R = {{{rs}}}", rs.n())));
    }
    Ok(())
}

/// Increasing `k`-subsets of `pool` in lexicographic order.
pub(crate) fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        if pool.len() < start + need {
            return;
        }
        for i in start..=pool.len() - need {
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= pool.len() {
        go(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All R-permutations in lexicographic order of their entries.
pub fn gen_r_permutations(rs: &RSet) -> Result<Vec<RTuple>> {
    guard_permutations(rs)?;
    fn go(rs: &RSet, h: usize, unused: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<RTuple>) {
        if h > rs.carrels() {
            out.push(RTuple::from_parts_unchecked(rs.clone(), prefix.clone()));
            return;
        }
        for pick in combinations(unused, rs.carrel_size(h)) {
            let rest: Vec<usize> = unused.iter().copied().filter(|v| pick.binary_search(v).is_err()).collect();
            let len = prefix.len();
            prefix.extend(&pick);
            go(rs, h + 1, &rest, prefix, out);
            prefix.truncate(len);
        }
    }
    let all: Vec<usize> = (1..=rs.n()).collect();
    let mut out = Vec::with_capacity(rs.multinomial() as usize);
    go(rs, 1, &all, &mut Vec::with_capacity(rs.n()), &mut out);
    Ok(out)
}

/// `S_n^{R-312}` by filtering.
pub fn gen_r312_avoiding(rs: &RSet) -> Result<Vec<RTuple>> {
    let all = gen_r_permutations(rs)?;
    Ok(all.into_iter().filter(|p| p.is_r312_avoiding().expect("R-permutation")).collect())
}

/// Admissible contents of carrel `h` of a gapless tuple, given the last
/// entry of carrel `h - 1` (`None` for the first carrel).
fn carrel_fillings(rs: &RSet, h: usize, prev_last: Option<usize>) -> Vec<Vec<usize>> {
    let n = rs.n();
    let start = rs.divider(h - 1);
    let size = rs.carrel_size(h);
    let mut out = Vec::new();
    fn go(n: usize, start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let pos = start + cur.len() + 1;
        let lo = cur.last().map_or(pos, |&v| (v + 1).max(pos));
        // Leave room for the remaining strictly increasing entries.
        let hi = n + 1 + cur.len() - size;
        for v in lo..=hi {
            cur.push(v);
            go(n, start, size, cur, out);
            cur.pop();
        }
    }
    go(n, start, size, &mut Vec::with_capacity(size), &mut out);
    if let Some(last) = prev_last {
        out.retain(|fill| {
            let next = fill[0];
            if last <= next {
                return true;
            }
            let s = last - next + 1;
            s <= size && (0..s).all(|t| fill[t] == next + t)
        });
    }
    out
}

/// Gapless R-tuples `UG_R(n)`, in lexicographic order.
pub fn gen_gapless(rs: &RSet) -> Result<Vec<RTuple>> {
    guard_permutations(rs)?;
    fn go(rs: &RSet, h: usize, prefix: &mut Vec<usize>, out: &mut Vec<RTuple>) {
        if h > rs.carrels() {
            out.push(RTuple::from_parts_unchecked(rs.clone(), prefix.clone()));
            return;
        }
        for fill in carrel_fillings(rs, h, prefix.last().copied()) {
            let len = prefix.len();
            prefix.extend(&fill);
            go(rs, h + 1, prefix, out);
            prefix.truncate(len);
        }
    }
    let mut out = Vec::new();
    go(rs, 1, &mut Vec::with_capacity(rs.n()), &mut out);
    debug_assert!(out.iter().all(RTuple::is_gapless));
    Ok(out)
}

/// `C_n^R`, counted as gapless R-tuples by dynamic programming over
/// (carrel, last entry of the previous carrel).
pub fn count_cnr(rs: &RSet) -> BigUint {
    fn go(rs: &RSet, h: usize, last: Option<usize>, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
        if h > rs.carrels() {
            return BigUint::one();
        }
        let key = (h, last.unwrap_or(0));
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for fill in carrel_fillings(rs, h, last) {
            total += go(rs, h + 1, fill.last().copied(), memo);
        }
        memo.insert(key, total.clone());
        total
    }
    go(rs, 1, None, &mut HashMap::new())
}

/// `C_n^Σ = Σ_R C_n^R`, with subsets spread over the thread pool.
pub fn count_total(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(input_err!("n must be positive"));
    }
    if n > TOTAL_GUARD {
        return Err(Error::Guard(format!("summing over 2^{} subsets (limit n = {TOTAL_GUARD})", n - 1)));
    }
    let subsets: Vec<RSet> = RSet::all(n).collect();
    Ok(subsets.par_iter().map(count_cnr).reduce(BigUint::zero, |a, b| a + b))
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn catalan(m: u64) -> BigUint {
    binomial(2 * m, m) / (m + 1)
}

/// `Σ_k (-1)^k C(n-k, k) 2^{n-k-1} Cat_{n-k}` over `0 ≤ k ≤ n/2`.
pub fn total_via_formula(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(input_err!("n must be positive"));
    }
    let n = n as u64;
    let mut sum = BigInt::zero();
    for k in 0..=n / 2 {
        let term = BigInt::from(binomial(n - k, k) * (BigUint::one() << (n - k - 1)) * catalan(n - k));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// The two OEIS sequences the counts were matched against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OeisSequence {
    /// `C_{2m}^{R_m}` with `R_m = {2, 4, ..., 2m-2}` (A220097).
    EvenR,
    /// `C_n^Σ` (A226316 without its leading 1).
    Total,
}

impl FromStr for OeisSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "even-r" | "a220097" => Ok(OeisSequence::EvenR),
            "total" | "a226316" => Ok(OeisSequence::Total),
            _ => Err(Error::Parse(format!("unknown sequence {s:?} (expected a220097 or a226316)"))),
        }
    }
}

/// `R_m = {2, 4, ..., 2m-2} ⊆ [2m-1]`.
pub fn even_rset(m: usize) -> RSet {
    RSet::new(2 * m, (1..m).map(|i| 2 * i).collect()).expect("even dividers lie in [2m-1]")
}

/// First `terms` values of the sequence, computed from scratch.
pub fn oeis_check(seq: OeisSequence, terms: usize) -> Result<Vec<BigUint>> {
    match seq {
        OeisSequence::EvenR => {
            if 2 * terms > TOTAL_GUARD + 8 {
                return Err(Error::Guard(format!("{terms} terms of the even-R sequence")));
            }
            Ok((1..=terms).map(|m| count_cnr(&even_rset(m))).collect())
        }
        OeisSequence::Total => (1..=terms).map(count_total).collect(),
    }
}
