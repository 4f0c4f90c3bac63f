//! Random-input strategies shared by the property and acceptance targets.
#![allow(dead_code)]

use proptest::prelude::*;

use parabolic_catalan::rtuples::{RSet, RTuple};
use parabolic_catalan::shapes::{Partition, Tableau};

/// Random R-permutation with `n ≤ 7`.
pub fn r_perm() -> impl Strategy<Value = RTuple> {
    r_perm_upto(7)
}

pub fn r_perm_upto(n_max: usize) -> impl Strategy<Value = RTuple> {
    (1..=n_max)
        .prop_flat_map(|n| (Just(n), 0..(1u64 << (n - 1)), Just((1..=n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(n, mask, mut entries)| {
            let rs = RSet::from_mask(n, mask);
            for h in 1..=rs.carrels() {
                entries[rs.carrel_range(h)].sort_unstable();
            }
            RTuple::new(rs, entries).unwrap()
        })
}

/// Shape with the given column lengths, in any order.
pub fn shape_of(n: usize, mut lengths: Vec<usize>) -> Partition {
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new((1..=n).map(|i| lengths.iter().filter(|&&z| z >= i).count()).collect()).unwrap()
}

/// Random semistandard tableau, `n ≤ 7`, at most three columns; each cell
/// takes a choice-driven value inside its feasible window.
pub fn tableau() -> impl Strategy<Value = Tableau> {
    (1..=7usize)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1..=n, 1..=3), prop::collection::vec(any::<u32>(), 21)))
        .prop_map(|(n, lengths, choices)| {
            let shape = shape_of(n, lengths);
            let mut columns: Vec<Vec<usize>> = Vec::new();
            let mut pick = choices.into_iter();
            for len in shape.column_lengths() {
                let mut col = Vec::with_capacity(len);
                for i in 0..len {
                    let above = if i == 0 { 1 } else { col[i - 1] + 1 };
                    let west = columns.last().map_or(1, |w: &Vec<usize>| w[i]);
                    let (lo, hi) = (above.max(west), n - (len - 1 - i));
                    col.push(lo + pick.next().unwrap() as usize % (hi - lo + 1));
                }
                columns.push(col);
            }
            Tableau::new(shape, columns).unwrap()
        })
}

/// Shape of width at most two and a random permutation for its R-set.
pub fn demazure_case() -> impl Strategy<Value = (Partition, RTuple)> {
    (1..=7usize)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1..n.max(2), 1..=2), Just((1..=n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(n, lengths, mut entries)| {
            let lengths = lengths.into_iter().map(|z| z.min(n)).collect();
            let shape = shape_of(n, lengths);
            let rs = shape.r_set();
            for h in 1..=rs.carrels() {
                entries[rs.carrel_range(h)].sort_unstable();
            }
            (shape, RTuple::new(rs, entries).unwrap())
        })
}
