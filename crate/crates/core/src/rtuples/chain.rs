use std::fmt;

use serde::{Deserialize, Serialize};

use super::{clump_decompose, RSet, RTuple};
use crate::error::{input_err, Error, Result};

/// Nested sets `∅ = B_0 ⊂ B_1 ⊂ ... ⊂ B_{r+1} = [n]` with `|B_h| = q_h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RChainRepr", into = "RChainRepr")]
pub struct RChain {
    rset: RSet,
    /// `blocks[h]` is `B_h`, sorted, for `h ∈ [0, r+1]`.
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RChainRepr {
    n: usize,
    r: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RChainRepr> for RChain {
    type Error = Error;
    fn try_from(repr: RChainRepr) -> Result<Self> {
        RChain::new(RSet::new(repr.n, repr.r)?, repr.blocks)
    }
}

impl From<RChain> for RChainRepr {
    fn from(c: RChain) -> Self {
        RChainRepr { n: c.rset.n(), r: c.rset.elements().to_vec(), blocks: c.blocks }
    }
}

/// The equivalent formulations of "R-rightmost clump deleting".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcdCriterion {
    /// New elements are whole top clumps of `B_{h+1}` plus part of the next lower clump.
    Clumps,
    /// `[b_{h+1}, m_h] ⊆ B_{h+1}`.
    ClosedInterval,
    /// `(b_{h+1}, m_h) ⊂ B_{h+1}`.
    OpenInterval,
    /// The `s` new elements below `m_h` are the `s` largest of `[m_h] \ B_h`.
    LargestMissing,
    /// Full case: `[b_{h+1}, m_{h+1}] ⊆ B_{h+1}`.
    SingleToTop,
    /// Full case: `[b_{h+1}, m_h] ⊆ B_{h+1}`.
    SingleClosed,
    /// Full case: `(b_{h+1}, m_h) ⊂ B_h`.
    SingleOpenOld,
    /// Full case: if `b_{h+1} < m_h` then `b_{h+1} = max([m_h] \ B_h)`.
    SingleMaxMissing,
    /// Full case: `b_{h+1} = max([m_{h+1}] \ B_h)`.
    SingleMaxMissingTop,
}

impl RcdCriterion {
    pub const GENERAL: [RcdCriterion; 4] = [
        RcdCriterion::Clumps,
        RcdCriterion::ClosedInterval,
        RcdCriterion::OpenInterval,
        RcdCriterion::LargestMissing,
    ];

    pub const FULL_ONLY: [RcdCriterion; 5] = [
        RcdCriterion::SingleToTop,
        RcdCriterion::SingleClosed,
        RcdCriterion::SingleOpenOld,
        RcdCriterion::SingleMaxMissing,
        RcdCriterion::SingleMaxMissingTop,
    ];

    pub fn needs_full_case(self) -> bool {
        Self::FULL_ONLY.contains(&self)
    }
}

impl RChain {
    pub fn new(rset: RSet, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = rset.n();
        let r = rset.r();
        if blocks.len() != r + 2 {
            return Err(input_err!("expected {} blocks, got {}", r + 2, blocks.len()));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for (h, mut b) in blocks.into_iter().enumerate() {
            b.sort_unstable();
            b.dedup();
            if b.len() != rset.divider(h) {
                return Err(input_err!("|B_{h}| must be {}", rset.divider(h)));
            }
            if b.iter().any(|&v| v == 0 || v > n) {
                return Err(input_err!("B_{h} has values outside [{n}]"));
            }
            sorted.push(b);
        }
        for h in 1..sorted.len() {
            let outer = &sorted[h];
            if !sorted[h - 1].iter().all(|v| outer.binary_search(v).is_ok()) {
                return Err(input_err!("B_{} is not contained in B_{h}", h - 1));
            }
        }
        Ok(RChain { rset, blocks: sorted })
    }

    /// `B_h = {π_1, ..., π_{q_h}}`.
    pub fn from_perm(p: &RTuple) -> Result<Self> {
        if !p.is_r_permutation() {
            return Err(input_err!("{p} is not an R-permutation"));
        }
        let rset = p.rset().clone();
        let blocks = (0..=rset.carrels())
            .map(|h| {
                let mut b = p.entries()[..rset.divider(h)].to_vec();
                b.sort_unstable();
                b
            })
            .collect();
        Ok(RChain { rset, blocks })
    }

    /// The R-permutation whose carrel `h` lists `B_h \ B_{h-1}` increasingly.
    pub fn to_perm(&self) -> RTuple {
        let entries = (1..=self.rset.carrels()).flat_map(|h| self.new_elements(h)).collect();
        RTuple::from_parts_unchecked(self.rset.clone(), entries)
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    pub fn block(&self, h: usize) -> &[usize] {
        &self.blocks[h]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `B_h \ B_{h-1}`, sorted.
    pub fn new_elements(&self, h: usize) -> Vec<usize> {
        let old = &self.blocks[h - 1];
        self.blocks[h].iter().copied().filter(|v| old.binary_search(v).is_err()).collect()
    }

    fn contains(&self, h: usize, v: usize) -> bool {
        self.blocks[h].binary_search(&v).is_ok()
    }

    fn max_of(&self, h: usize) -> usize {
        *self.blocks[h].last().expect("B_h is nonempty for h ≥ 1")
    }

    pub fn is_rcd(&self) -> bool {
        let verdict = self.satisfies(RcdCriterion::Clumps).unwrap();
        debug_assert!(
            RcdCriterion::GENERAL
                .iter()
                .chain(RcdCriterion::FULL_ONLY.iter())
                .filter_map(|&c| self.satisfies(c))
                .all(|v| v == verdict),
            "rightmost clump deleting reformulations disagree"
        );
        verdict
    }

    /// Evaluates one formulation; `None` for full-case criteria on a non-full `R`.
    pub fn satisfies(&self, criterion: RcdCriterion) -> Option<bool> {
        if criterion.needs_full_case() && !self.rset.is_full() {
            return None;
        }
        let r = self.rset.r();
        Some((1..=r).all(|h| self.stage_ok(criterion, h)))
    }

    fn stage_ok(&self, criterion: RcdCriterion, h: usize) -> bool {
        let fresh = self.new_elements(h + 1);
        let b = fresh[0];
        let m = self.max_of(h);
        match criterion {
            RcdCriterion::Clumps => {
                let clumps = clump_decompose(&self.blocks[h + 1]);
                let e = clumps.iter().position(|c| c.contains(&b)).unwrap();
                clumps[e + 1..].iter().flatten().all(|v| fresh.binary_search(v).is_ok())
            }
            RcdCriterion::ClosedInterval | RcdCriterion::SingleClosed => {
                (b..=m).all(|v| self.contains(h + 1, v))
            }
            RcdCriterion::OpenInterval => (b + 1..m).all(|v| self.contains(h + 1, v)),
            RcdCriterion::LargestMissing => {
                let below: Vec<usize> = fresh.iter().copied().filter(|&v| v < m).collect();
                let mut missing: Vec<usize> =
                    (1..=m).rev().filter(|&v| !self.contains(h, v)).take(below.len()).collect();
                missing.reverse();
                below == missing
            }
            RcdCriterion::SingleToTop => {
                let top = self.max_of(h + 1);
                (b..=top).all(|v| self.contains(h + 1, v))
            }
            RcdCriterion::SingleOpenOld => (b + 1..m).all(|v| self.contains(h, v)),
            RcdCriterion::SingleMaxMissing => {
                b >= m || Some(b) == (1..=m).rev().find(|&v| !self.contains(h, v))
            }
            RcdCriterion::SingleMaxMissingTop => {
                let top = self.max_of(h + 1);
                Some(b) == (1..=top).rev().find(|&v| !self.contains(h, v))
            }
        }
    }
}

impl fmt::Display for RChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (h, b) in self.blocks.iter().enumerate() {
            if h > 0 {
                f.write_str(" ⊂ ")?;
            }
            if b.is_empty() {
                f.write_str("∅")?;
            } else {
                let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize, r: &[usize], mid: &[&[usize]]) -> RChain {
        let rset = RSet::new(n, r.to_vec()).unwrap();
        let mut blocks = vec![vec![]];
        blocks.extend(mid.iter().map(|b| b.to_vec()));
        blocks.push((1..=n).collect());
        RChain::new(rset, blocks).unwrap()
    }

    #[test]
    fn chains_of_table_permutations() {
        let c = RChain::from_perm(&"2,3,6;1,4,5,8,9;7".parse().unwrap()).unwrap();
        assert_eq!(c.block(1), &[2, 3, 6]);
        assert_eq!(c.block(2), &[1, 2, 3, 4, 5, 6, 8, 9]);
        assert_eq!(c.to_string(), "∅ ⊂ {2,3,6} ⊂ {1,2,3,4,5,6,8,9} ⊂ {1,2,3,4,5,6,7,8,9}");
        let c = RChain::from_perm(&"2,4,6;1,3,7,8,9;5".parse().unwrap()).unwrap();
        assert_eq!(c.block(1), &[2, 4, 6]);
        assert_eq!(c.block(2), &[1, 2, 3, 4, 6, 7, 8, 9]);
    }

    #[test]
    fn round_trip_small() {
        for rs in RSet::all(4) {
            for p in crate::enumeration::gen_r_permutations(&rs).unwrap() {
                let c = RChain::from_perm(&p).unwrap();
                assert_eq!(c.to_perm(), p);
            }
        }
    }

    #[test]
    fn worked_rcd_example() {
        let c = chain(14, &[3, 5, 10], &[&[1, 2, 6], &[1, 2, 5, 6, 8], &[1, 2, 4, 5, 6, 7, 8, 10, 13, 14]]);
        assert!(c.is_rcd());
        for crit in RcdCriterion::GENERAL {
            assert_eq!(c.satisfies(crit), Some(true), "{crit:?}");
        }
        assert_eq!(c.satisfies(RcdCriterion::SingleClosed), None);
    }

    #[test]
    fn full_case_312_chain_is_not_rcd() {
        let c = chain(3, &[1, 2], &[&[3], &[1, 3]]);
        assert!(!c.is_rcd());
        for crit in RcdCriterion::GENERAL.iter().chain(&RcdCriterion::FULL_ONLY) {
            assert_eq!(c.satisfies(*crit), Some(false), "{crit:?}");
        }
    }

    #[test]
    fn validation() {
        let rs = RSet::new(3, vec![1]).unwrap();
        assert!(RChain::new(rs.clone(), vec![vec![], vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(RChain::new(rs.clone(), vec![vec![], vec![4], vec![1, 2, 3]]).is_err());
        assert!(RChain::new(rs, vec![vec![], vec![1]]).is_err());
        assert!(RChain::from_perm(&"2,1;3".parse().unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = chain(4, &[2], &[&[1, 3]]);
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<RChain>(&js).unwrap(), c);
    }
}
