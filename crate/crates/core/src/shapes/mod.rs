//! Partitions with an explicit row count, semistandard tableaux, keys, and
//! the row-end constructions.

mod keys;
mod tableau;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::rtuples::{parse_list, RSet};

pub use keys::{
    column_of_set, is_gapless_key, is_key, key_of_chain, key_of_perm, row_end_list, row_end_max,
    tableau_leq,
};
pub use tableau::{Tableau, Violation};

/// `λ_1 ≥ ... ≥ λ_n ≥ 0`; trailing zeros are significant since they fix `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(input_err!("a partition needs n ≥ 1 rows"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(input_err!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Shape with exactly one column of each length in `R` and no column of
    /// length `n`.
    pub fn minimal_for(rset: &RSet) -> Self {
        let parts = (1..=rset.n()).map(|i| rset.elements().iter().filter(|&&q| q >= i).count()).collect();
        Partition { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for `i ∈ [n]`.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Number of columns, `λ_1`.
    pub fn width(&self) -> usize {
        self.parts[0]
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty_shape(&self) -> bool {
        self.parts[0] == 0
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `ζ_j` for `j ∈ [λ_1]`.
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.partition_point(|&p| p >= j)
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        (1..=self.width()).map(|j| self.column_len(j)).collect()
    }

    /// `R_λ`: the distinct column lengths below `n`.
    pub fn r_set(&self) -> RSet {
        let n = self.n();
        let mut lens: Vec<usize> = self.column_lengths().into_iter().filter(|&z| z < n).collect();
        lens.dedup();
        RSet::new(n, lens).expect("column lengths lie in [n-1]")
    }

    /// Index of the rightmost column whose length is at least `len`.
    pub fn last_column_reaching(&self, len: usize) -> usize {
        if len == 0 {
            self.width()
        } else {
            self.parts[len - 1]
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        f.write_str(&items.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The 12-row key with columns of lengths 11, 9 and 5.
    pub fn worked_key() -> Tableau {
        let shape: Partition = "7,7,7,7,7,5,5,5,5,2,2,0".parse().unwrap();
        let long = vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];
        let mid = vec![1, 3, 4, 5, 6, 7, 8, 9, 10];
        let short = vec![1, 4, 6, 7, 10];
        let columns = vec![long.clone(), long, mid.clone(), mid.clone(), mid, short.clone(), short];
        Tableau::new(shape, columns).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_data() {
        let p: Partition = "7,7,7,7,7,5,5,5,5,2,2,0".parse().unwrap();
        assert_eq!(p.n(), 12);
        assert_eq!(p.column_lengths(), vec![11, 11, 9, 9, 9, 5, 5]);
        assert_eq!(p.r_set().elements(), &[5, 9, 11]);
        assert_eq!(p.size(), 35 + 20 + 4);
        assert_eq!(p.last_column_reaching(9), 5);
        assert!(!p.is_strict());
        assert!("3,2,1,0".parse::<Partition>().unwrap().is_strict());
    }

    #[test]
    fn trivial_columns_are_not_in_r() {
        let p: Partition = "2,2,1".parse().unwrap();
        assert_eq!(p.column_lengths(), vec![3, 2]);
        assert_eq!(p.r_set().elements(), &[2]);
    }

    #[test]
    fn minimal_shape() {
        let rs = RSet::new(5, vec![1, 3]).unwrap();
        let p = Partition::minimal_for(&rs);
        assert_eq!(p.parts(), &[2, 1, 1, 0, 0]);
        assert_eq!(p.r_set(), rs);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }
}
