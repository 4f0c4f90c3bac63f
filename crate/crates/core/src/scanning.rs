//! Scanning tableaux (right keys) via earliest weakly increasing subsequences.
//!
//! Pass `l` works on columns `l, l+1, ...` of `T`. Each round reads the lowest
//! unmarked value of every column, takes the EWIS of that sequence starting
//! at column `l`, marks the contributing cells, and writes the final EWIS
//! value into the lowest open cell of column `l` of `S(T)`. After each round
//! the unmarked cells of every column form a top segment, and the segment
//! heights weakly decrease from west to east.

use std::collections::BTreeMap;

use crate::error::{input_err, Error, Result};
use crate::rtuples::RTuple;
use crate::shapes::{key_of_perm, Partition, Tableau};

/// Cell `(column, row)`, 1-based.
pub type Cell = (usize, usize);

/// Earliest weakly increasing subsequence; returns 1-based indices.
pub fn ewis(seq: &[usize]) -> Result<Vec<usize>> {
    let (&first, rest) = seq.split_first().ok_or_else(|| input_err!("EWIS of an empty sequence"))?;
    let mut picked = vec![1];
    let mut last = first;
    for (k, &v) in rest.iter().enumerate() {
        if v >= last {
            picked.push(k + 2);
            last = v;
        }
    }
    Ok(picked)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub source: Tableau,
    /// `S(T)`.
    pub scan: Tableau,
    /// Scanning path for each origin cell, listed west to east.
    pub paths: BTreeMap<Cell, Vec<Cell>>,
}

/// One extracted path of a pass.
struct Round {
    origin_row: usize,
    cells: Vec<Cell>,
    value: usize,
    /// Largest unmarked value east of the working column before extraction,
    /// or 1 when nothing is left there.
    residual: usize,
}

/// Runs pass `l`, returning its rounds in extraction order (bottom row first).
fn pass(t: &Tableau, l: usize) -> Vec<Round> {
    let width = t.shape().width();
    let mut heights: Vec<usize> = (l..=width).map(|j| t.column(j).len()).collect();
    let mut rounds = Vec::with_capacity(heights[0]);
    while heights[0] > 0 {
        debug_assert!(heights.windows(2).all(|w| w[0] >= w[1]), "unmarked cells do not form a shape");
        let live = heights.iter().take_while(|&&h| h > 0).count();
        let bottoms: Vec<usize> = (0..live).map(|d| t.value(l + d, heights[d])).collect();
        let residual = bottoms[1..].iter().copied().max().unwrap_or(1);
        let picked = ewis(&bottoms).expect("column l is live");
        let cells: Vec<Cell> = picked.iter().map(|&k| (l + k - 1, heights[k - 1])).collect();
        let value = bottoms[*picked.last().unwrap() - 1];
        let origin_row = heights[0];
        for &k in &picked {
            heights[k - 1] -= 1;
        }
        rounds.push(Round { origin_row, cells, value, residual });
    }
    debug_assert!(heights.iter().all(|&h| h == 0), "pass {l} left cells unmarked");
    rounds
}

/// Computes `S(T)` together with every scanning path.
pub fn scanning_tableau(t: &Tableau) -> Result<ScanResult> {
    t.check()?;
    let shape = t.shape();
    let mut columns: Vec<Vec<usize>> = shape.column_lengths().into_iter().map(|z| vec![0; z]).collect();
    let mut paths = BTreeMap::new();
    for l in 1..=shape.width() {
        for round in pass(t, l) {
            columns[l - 1][round.origin_row - 1] = round.value;
            paths.insert((l, round.origin_row), round.cells);
        }
    }
    let scan = Tableau::new(shape.clone(), columns)?;
    debug_assert!(scan.is_semistandard() && crate::shapes::is_key(&scan));
    Ok(ScanResult { source: t.clone(), scan, paths })
}

/// `S(T)` alone.
pub fn scan(t: &Tableau) -> Result<Tableau> {
    Ok(scanning_tableau(t)?.scan)
}

fn check_cell(shape: &Partition, l: usize, k: usize) -> Result<()> {
    if l == 0 || l > shape.width() || k == 0 || k > shape.column_len(l) {
        return Err(input_err!("cell ({l},{k}) is not in the shape"));
    }
    Ok(())
}

/// `m(U^{(l,k)})`: the largest value left east of column `l` once the
/// scanning paths originating below `(l, k)` are removed (1 if nothing is left).
pub fn residual_max(t: &Tableau, l: usize, k: usize) -> Result<usize> {
    t.check()?;
    check_cell(t.shape(), l, k)?;
    let round = pass(t, l).into_iter().find(|r| r.origin_row == k).unwrap();
    Ok(round.residual)
}

/// `m(U^{(l,k)})` for every cell at once, indexed `[l-1][k-1]`.
pub fn residual_maxima(t: &Tableau) -> Result<Vec<Vec<usize>>> {
    t.check()?;
    let shape = t.shape();
    let mut out: Vec<Vec<usize>> = shape.column_lengths().into_iter().map(|z| vec![0; z]).collect();
    for l in 1..=shape.width() {
        for round in pass(t, l) {
            out[l - 1][round.origin_row - 1] = round.residual;
        }
    }
    Ok(out)
}

/// Either empty or the integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ASet {
    Empty,
    Interval { lo: usize, hi: usize },
}

impl ASet {
    pub fn contains(&self, v: usize) -> bool {
        match *self {
            ASet::Empty => false,
            ASet::Interval { lo, hi } => lo <= v && v <= hi,
        }
    }
}

fn a_set_from(t: &Tableau, y: &Tableau, residual: usize, l: usize, k: usize) -> ASet {
    let n = t.n();
    let bound = y.value(l, k);
    if residual > bound {
        return ASet::Empty;
    }
    let below = t.get(l, k + 1).map_or(n, |v| v - 1);
    let east = t.get(l + 1, k).unwrap_or(n);
    ASet::Interval { lo: k, hi: bound.min(below).min(east) }
}

/// `A_λ(T, π; l, k)`. A missing southern neighbour counts as `n + 1` and a
/// missing eastern neighbour as `n`.
pub fn a_set(t: &Tableau, p: &RTuple, shape: &Partition, l: usize, k: usize) -> Result<ASet> {
    if t.shape() != shape {
        return Err(Error::Structure("tableau shape differs from λ".into()));
    }
    check_cell(shape, l, k)?;
    let y = key_of_perm(p, shape)?;
    Ok(a_set_from(t, &y, residual_max(t, l, k)?, l, k))
}

/// Every cell value lies in its A-set, with `y` the key of the permutation.
pub fn a_set_criterion(t: &Tableau, y: &Tableau) -> Result<bool> {
    let residuals = residual_maxima(t)?;
    Ok(t.cells().all(|(l, k)| a_set_from(t, y, residuals[l - 1][k - 1], l, k).contains(t.value(l, k))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::fixtures::worked_key;

    fn tab(shape: &str, cols: Vec<Vec<usize>>) -> Tableau {
        Tableau::semistandard(shape.parse().unwrap(), cols).unwrap()
    }

    #[test]
    fn ewis_examples() {
        assert_eq!(ewis(&[1, 3, 2, 4]).unwrap(), vec![1, 2, 4]);
        assert_eq!(ewis(&[3, 1, 2, 2]).unwrap(), vec![1]);
        assert_eq!(ewis(&[5]).unwrap(), vec![1]);
        assert_eq!(ewis(&[2, 2, 1, 2]).unwrap(), vec![1, 2, 4]);
        assert!(ewis(&[]).is_err());
    }

    #[test]
    fn keys_are_fixed() {
        let y = worked_key();
        assert_eq!(scan(&y).unwrap(), y);
        let col = tab("1,1,1,0", vec![vec![1, 3, 4]]);
        assert_eq!(scan(&col).unwrap(), col);
    }

    #[test]
    fn hand_traced_scan() {
        let t = tab("2,1,0", vec![vec![1, 3], vec![2]]);
        let res = scanning_tableau(&t).unwrap();
        assert_eq!(res.scan.columns(), &[vec![2, 3], vec![2]]);
        assert_eq!(res.paths[&(1, 2)], vec![(1, 2)]);
        assert_eq!(res.paths[&(1, 1)], vec![(1, 1), (2, 1)]);
        assert_eq!(res.paths[&(2, 1)], vec![(2, 1)]);
    }

    #[test]
    fn residual_examples() {
        let t = tab("2,1,0", vec![vec![1, 3], vec![2]]);
        assert_eq!(residual_max(&t, 1, 1).unwrap(), 2);
        assert_eq!(residual_max(&t, 1, 2).unwrap(), 2);
        assert_eq!(residual_max(&t, 2, 1).unwrap(), 1);
        let col = tab("1,1,0", vec![vec![2, 3]]);
        assert_eq!(residual_max(&col, 1, 1).unwrap(), 1);
        assert_eq!(residual_max(&col, 1, 2).unwrap(), 1);
        assert!(residual_max(&col, 2, 1).is_err());
        let y = worked_key();
        for k in 1..=5 {
            assert_eq!(residual_max(&y, 7, k).unwrap(), 1);
        }
    }

    #[test]
    fn residual_identity_on_worked_key() {
        let y = worked_key();
        let s = scan(&y).unwrap();
        let m = residual_maxima(&y).unwrap();
        for (l, k) in y.cells() {
            assert_eq!(s.value(l, k), y.value(l, k).max(m[l - 1][k - 1]));
        }
    }

    #[test]
    fn a_sets_for_small_case() {
        let shape: Partition = "2,1,0".parse().unwrap();
        let pi: RTuple = "3;1;2".parse().unwrap();
        let y = key_of_perm(&pi, &shape).unwrap();
        assert_eq!(y.columns(), &[vec![1, 3], vec![3]]);
        // At Y itself every A-set is a nonempty interval holding Y's value.
        for (l, k) in y.cells() {
            let a = a_set(&y, &pi, &shape, l, k).unwrap();
            assert!(a.contains(y.value(l, k)), "({l},{k}) -> {a:?}");
        }
        // S(t) = (2,3),(2) is not below Y = (1,3),(3): cell (1,1) fails.
        let t = tab("2,1,0", vec![vec![1, 3], vec![2]]);
        assert_eq!(a_set(&t, &pi, &shape, 1, 1).unwrap(), ASet::Empty);
        assert_eq!(a_set(&t, &pi, &shape, 1, 2).unwrap(), ASet::Interval { lo: 2, hi: 3 });
        assert_eq!(a_set(&t, &pi, &shape, 2, 1).unwrap(), ASet::Interval { lo: 1, hi: 3 });
        assert!(!a_set_criterion(&t, &y).unwrap());
        let lowest = tab("2,1,0", vec![vec![1, 2], vec![2]]);
        assert_eq!(a_set(&lowest, &pi, &shape, 1, 1).unwrap(), ASet::Interval { lo: 1, hi: 1 });
        assert!(a_set_criterion(&lowest, &y).unwrap());
    }
}
