//! R-tuples: `n`-tuples over `[n]` cut into carrels by a divider set `R ⊆ [n-1]`.
//!
//! Every public interface is 1-based in values. Positions are exposed both as
//! 1-based indices (`entry`) and as 0-based slices (`entries`, `carrel_range`).

mod chain;
mod clump;
mod maps;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};

pub use chain::{RChain, RcdCriterion};
pub use clump::clump_decompose;
pub use maps::{gapless_to_perm, rank_tuple};

/// A divider set `R = {q_1 < ... < q_r} ⊆ [n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RSet {
    n: usize,
    q: Vec<usize>,
}

impl RSet {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(input_err!("n must be positive"));
        }
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(input_err!("R has repeated elements"));
        }
        if let Some(&bad) = elements.iter().find(|&&q| q == 0 || q >= n) {
            return Err(input_err!("{bad} is not in [{}]", n - 1));
        }
        Ok(RSet { n, q: elements })
    }

    /// `R = [n-1]`.
    pub fn full(n: usize) -> Self {
        RSet { n, q: (1..n).collect() }
    }

    /// `R = ∅`.
    pub fn trivial(n: usize) -> Self {
        RSet { n, q: Vec::new() }
    }

    /// Subset of `[n-1]` given by a bit mask (bit `i-1` set iff `i ∈ R`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let q = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        RSet { n, q }
    }

    /// All `2^{n-1}` subsets of `[n-1]`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = RSet> {
        let count = 1u64 << (n.max(1) - 1);
        (0..count).map(move |m| RSet::from_mask(n, m))
    }

    /// Parse a comma list such as `"3,8"`; the empty string is `∅`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::new(n, parse_list(text)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r = |R|`.
    pub fn r(&self) -> usize {
        self.q.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.q
    }

    pub fn is_full(&self) -> bool {
        self.q.len() + 1 == self.n
    }

    /// `q_h` for `h ∈ [0, r+1]`, with `q_0 = 0` and `q_{r+1} = n`.
    pub fn divider(&self, h: usize) -> usize {
        match h {
            0 => 0,
            h if h <= self.q.len() => self.q[h - 1],
            h if h == self.q.len() + 1 => self.n,
            _ => panic!("divider index {h} out of range"),
        }
    }

    /// Carrel size `p_h = q_h - q_{h-1}` for `h ∈ [r+1]`.
    pub fn carrel_size(&self, h: usize) -> usize {
        self.divider(h) - self.divider(h - 1)
    }

    /// Zero-based positions of carrel `h ∈ [r+1]`.
    pub fn carrel_range(&self, h: usize) -> Range<usize> {
        self.divider(h - 1)..self.divider(h)
    }

    /// Number of carrels, `r + 1`.
    pub fn carrels(&self) -> usize {
        self.q.len() + 1
    }

    /// Carrel containing the 1-based index `i`.
    pub fn carrel_of(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.q.partition_point(|&q| q < i) + 1
    }

    /// `n! / ∏ p_h!`, the number of R-permutations.
    pub fn multinomial(&self) -> u128 {
        let mut total: u128 = 1;
        let mut placed = 0u128;
        for h in 1..=self.carrels() {
            for k in 1..=self.carrel_size(h) as u128 {
                placed += 1;
                total = total * placed / k;
            }
        }
        total
    }

    pub fn mask(&self) -> u64 {
        self.q.iter().fold(0, |m, &q| m | 1 << (q - 1))
    }
}

impl fmt::Display for RSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.q)
    }
}

/// An `n`-tuple with entries in `[n]`, equipped with dividers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RTupleRepr", into = "RTupleRepr")]
pub struct RTuple {
    rset: RSet,
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RTupleRepr {
    n: usize,
    r: Vec<usize>,
    entries: Vec<usize>,
}

impl TryFrom<RTupleRepr> for RTuple {
    type Error = Error;
    fn try_from(repr: RTupleRepr) -> Result<Self> {
        RTuple::new(RSet::new(repr.n, repr.r)?, repr.entries)
    }
}

impl From<RTuple> for RTupleRepr {
    fn from(t: RTuple) -> Self {
        RTupleRepr { n: t.rset.n, r: t.rset.q, entries: t.entries }
    }
}

/// Independent evaluation of each classification predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub upper: bool,
    pub flag: bool,
    pub r_increasing: bool,
    pub r_flag: bool,
    pub r_permutation: bool,
}

impl RTuple {
    pub fn new(rset: RSet, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != rset.n {
            return Err(input_err!("expected {} entries, got {}", rset.n, entries.len()));
        }
        if let Some(&bad) = entries.iter().find(|&&v| v == 0 || v > rset.n) {
            return Err(input_err!("entry {bad} is not in [{}]", rset.n));
        }
        Ok(RTuple { rset, entries })
    }

    /// The identity tuple `(1, 2, ..., n)` with the given dividers.
    pub fn identity(rset: RSet) -> Self {
        let entries = (1..=rset.n).collect();
        RTuple { rset, entries }
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    pub fn n(&self) -> usize {
        self.rset.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `ν_i` for a 1-based index `i`.
    pub fn entry(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// Entries on carrel `h` (the `h`-th cohort, in position order).
    pub fn cohort(&self, h: usize) -> &[usize] {
        &self.entries[self.rset.carrel_range(h)]
    }

    pub fn is_upper(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v > i)
    }

    pub fn is_flag(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_r_increasing(&self) -> bool {
        (1..=self.rset.carrels()).all(|h| self.cohort(h).windows(2).all(|w| w[0] < w[1]))
    }

    pub fn has_distinct_entries(&self) -> bool {
        let mut seen = vec![false; self.n() + 1];
        self.entries.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_r_permutation(&self) -> bool {
        self.has_distinct_entries() && self.is_r_increasing()
    }

    /// R-increasing, upper, and the `u`-th last entries of consecutive
    /// carrels weakly increase.
    pub fn is_r_flag(&self) -> bool {
        if !(self.is_upper() && self.is_r_increasing()) {
            return false;
        }
        let rs = &self.rset;
        (1..=rs.r()).all(|h| {
            let span = rs.carrel_size(h + 1).min(rs.carrel_size(h));
            (1..=span).all(|u| {
                self.entry(rs.divider(h + 1) + 1 - u) >= self.entry(rs.divider(h) + 1 - u)
            })
        })
    }

    pub fn classify(&self) -> Classification {
        Classification {
            upper: self.is_upper(),
            flag: self.is_flag(),
            r_increasing: self.is_r_increasing(),
            r_flag: self.is_r_flag(),
            r_permutation: self.is_r_permutation(),
        }
    }

    /// Gapless R-tuple: R-increasing, upper, and every descent
    /// `γ_{q_h} > γ_{q_h+1}` across a divider is followed by the run
    /// `γ_{q_h}-s+1, ..., γ_{q_h}` at the start of the next carrel,
    /// where `s = γ_{q_h} - γ_{q_h+1} + 1 ≤ p_{h+1}`.
    pub fn is_gapless(&self) -> bool {
        if !(self.is_upper() && self.is_r_increasing()) {
            return false;
        }
        let rs = &self.rset;
        (1..=rs.r()).all(|h| {
            let q = rs.divider(h);
            let last = self.entry(q);
            let next = self.entry(q + 1);
            if last <= next {
                return true;
            }
            let s = last - next + 1;
            s <= rs.carrel_size(h + 1) && (1..=s).all(|t| self.entry(q + t) == last - s + t)
        })
    }

    fn require_r_permutation(&self) -> Result<()> {
        if self.is_r_permutation() {
            Ok(())
        } else {
            Err(input_err!("{self} is not an R-permutation"))
        }
    }

    /// First R-312 pattern `(a, b, c)` in lexicographic order: 1-based
    /// indices `a ≤ q_h < b ≤ q_{h+1} < c` with `π_b < π_c < π_a`.
    pub fn r312_pattern(&self) -> Result<Option<(usize, usize, usize)>> {
        self.require_r_permutation()?;
        let rs = &self.rset;
        let n = rs.n;
        for a in 1..=n {
            for b in a + 1..=n {
                let hb = rs.carrel_of(b);
                // b must sit in a carrel strictly after a's and strictly before c's.
                if rs.carrel_of(a) >= hb || hb > rs.r() {
                    continue;
                }
                for c in rs.divider(hb) + 1..=n {
                    let (pa, pb, pc) = (self.entry(a), self.entry(b), self.entry(c));
                    if pb < pc && pc < pa {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Interval criterion: for every `h ∈ [r]` the open interval between the
    /// minimum of carrel `h+1` and the maximum of the first `h` carrels lies
    /// inside the first `h+1` cohorts.
    pub fn r312_avoiding_by_intervals(&self) -> Result<bool> {
        self.require_r_permutation()?;
        let rs = &self.rset;
        let mut present = vec![false; rs.n + 2];
        let mut prefix_max = 0;
        for &v in self.cohort(1) {
            present[v] = true;
            prefix_max = prefix_max.max(v);
        }
        for h in 1..=rs.r() {
            let next = self.cohort(h + 1);
            for &v in next {
                present[v] = true;
            }
            let low = next[0];
            if (low + 1..prefix_max).any(|v| !present[v]) {
                return Ok(false);
            }
            prefix_max = prefix_max.max(*next.last().unwrap());
        }
        Ok(true)
    }

    pub fn is_r312_avoiding(&self) -> Result<bool> {
        let fast = self.r312_avoiding_by_intervals()?;
        debug_assert_eq!(fast, self.r312_pattern()?.is_none(), "R-312 criteria disagree on {self}");
        Ok(fast)
    }

    /// Copy with each cohort sorted increasingly (standard form).
    pub fn sorted_cohorts(&self) -> RTuple {
        let mut entries = self.entries.clone();
        for h in 1..=self.rset.carrels() {
            entries[self.rset.carrel_range(h)].sort_unstable();
        }
        RTuple { rset: self.rset.clone(), entries }
    }

    pub(crate) fn from_parts_unchecked(rset: RSet, entries: Vec<usize>) -> Self {
        RTuple { rset, entries }
    }
}

impl fmt::Display for RTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in 1..=self.rset.carrels() {
            if h > 1 {
                f.write_str(";")?;
            }
            write_list(f, self.cohort(h))?;
        }
        Ok(())
    }
}

/// Parses `"2,4,6;1,5,7,8,9;3"`: `n` is the entry count, `R` the semicolon
/// positions.
impl FromStr for RTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut q = Vec::new();
        for (k, part) in s.trim().split(';').enumerate() {
            if k > 0 {
                q.push(entries.len());
            }
            let cohort = parse_list(part)?;
            if cohort.is_empty() {
                return Err(Error::Parse(format!("empty carrel in {s:?}")));
            }
            entries.extend(cohort);
        }
        let rset = RSet::new(entries.len(), q)?;
        RTuple::new(rset, entries)
    }
}

/// Comma-separated nonnegative integers; blank input is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
