use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::gen_r_permutations;
use crate::error::{Error, Result};
use crate::rtuples::{RSet, RTuple};

/// A permutation of `[3]`, written as in `312`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pattern([usize; 3]);

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern([1, 2, 3]),
        Pattern([1, 3, 2]),
        Pattern([2, 1, 3]),
        Pattern([2, 3, 1]),
        Pattern([3, 1, 2]),
        Pattern([3, 2, 1]),
    ];

    pub fn new(letters: [usize; 3]) -> Result<Self> {
        let mut sorted = letters;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::Input(format!("{letters:?} is not a permutation of 1,2,3")));
        }
        Ok(Pattern(letters))
    }

    /// Whether the values `(x, y, z)` are order-isomorphic to the pattern.
    fn matches(&self, vals: [usize; 3]) -> bool {
        (0..3).all(|i| (0..3).all(|j| (self.0[i] < self.0[j]) == (vals[i] < vals[j])))
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<usize> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ';' | ' '))
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("bad pattern {s:?}")))?;
        let letters: [usize; 3] = digits.try_into().map_err(|_| Error::Parse(format!("pattern {s:?} needs three letters")))?;
        Pattern::new(letters)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// An ordered partition of `[n]` into blocks of sizes `p_1, ..., p_{r+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrderedPartition {
    #[serde(skip)]
    rset: RSet,
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    /// Carrel `h` of an R-permutation becomes block `h`.
    pub fn from_perm(p: &RTuple) -> Result<Self> {
        if !p.is_r_permutation() {
            return Err(Error::Input(format!("{p} is not an R-permutation")));
        }
        let rset = p.rset().clone();
        let blocks = (1..=rset.carrels()).map(|h| p.cohort(h).to_vec()).collect();
        Ok(OrderedPartition { rset, blocks })
    }

    pub fn to_perm(&self) -> RTuple {
        RTuple::new(self.rset.clone(), self.blocks.concat()).expect("blocks partition [n]")
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Three entries in pairwise distinct blocks, listed by block order,
    /// whose values form `sigma`.
    pub fn contains(&self, sigma: Pattern) -> bool {
        let k = self.blocks.len();
        for x in 0..k {
            for y in x + 1..k {
                for z in y + 1..k {
                    for &a in &self.blocks[x] {
                        for &b in &self.blocks[y] {
                            if self.blocks[z].iter().any(|&c| sigma.matches([a, b, c])) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_perm())
    }
}

/// Ordered `R`-partitions avoiding `sigma`, in lexicographic order.
pub fn gen_avoiding_ordered_partitions(rs: &RSet, sigma: Pattern) -> Result<Vec<OrderedPartition>> {
    let mut out = Vec::new();
    for p in gen_r_permutations(rs)? {
        let op = OrderedPartition::from_perm(&p)?;
        if !op.contains(sigma) {
            out.push(op);
        }
    }
    Ok(out)
}
