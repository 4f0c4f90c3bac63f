//! Demazure tableau sets `D_λ(π) = {T : S(T) ≤ Y_λ(π)}`, their weight
//! polynomials, convexity in `Z^{|λ|}`, and non-convexity witnesses.

mod lattice;
mod simplex;
mod witness;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rtuples::RTuple;
use crate::scanning::{a_set_criterion, scan};
use crate::shapes::{key_of_perm, tableau_leq, Partition, Tableau};

pub use lattice::{convexity_verdict, in_convex_hull, is_convex_lattice_set, ConvexityVerdict, LatticeSet};
pub use witness::{convexity_witness, Witness};

/// Default cap on the number of tableaux any exhaustive routine may visit.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Lexicographic (column-major) stream of all semistandard tableaux of a
/// shape, optionally restricted to those entrywise below a ceiling.
pub struct TableauIter {
    shape: Partition,
    /// Per flattened cell: index of the cell above, of the cell to the west,
    /// and the largest admissible value.
    above: Vec<Option<usize>>,
    west: Vec<Option<usize>>,
    row: Vec<usize>,
    upper: Vec<usize>,
    values: Vec<usize>,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl TableauIter {
    pub fn new(shape: &Partition) -> Self {
        Self::build(shape, None)
    }

    /// Only tableaux `T ≤ ceiling`; the ceiling must be semistandard.
    pub fn below(ceiling: &Tableau) -> Self {
        Self::build(ceiling.shape(), Some(ceiling))
    }

    fn build(shape: &Partition, ceiling: Option<&Tableau>) -> Self {
        let n = shape.n();
        let lengths = shape.column_lengths();
        let mut above = Vec::new();
        let mut west = Vec::new();
        let mut row = Vec::new();
        let mut upper = Vec::new();
        let mut starts = Vec::new();
        let mut idx = 0;
        for (j, &len) in lengths.iter().enumerate() {
            starts.push(idx);
            for i in 0..len {
                above.push(if i > 0 { Some(idx - 1) } else { None });
                west.push(if j > 0 { Some(starts[j - 1] + i) } else { None });
                row.push(i + 1);
                let mut cap = if len == n { i + 1 } else { n - len + i + 1 };
                if let Some(c) = ceiling {
                    cap = cap.min(c.value(j + 1, i + 1));
                }
                upper.push(cap);
                idx += 1;
            }
        }
        let values = vec![0; idx];
        TableauIter { shape: shape.clone(), above, west, row, upper, values, state: IterState::Fresh }
    }

    fn floor(&self, p: usize) -> usize {
        let mut lo = self.row[p];
        if let Some(a) = self.above[p] {
            lo = lo.max(self.values[a] + 1);
        }
        if let Some(w) = self.west[p] {
            lo = lo.max(self.values[w]);
        }
        lo
    }

    /// Fill positions `from..` with their least admissible values.
    fn settle(&mut self, from: usize) -> bool {
        for p in from..self.values.len() {
            let lo = self.floor(p);
            if lo > self.upper[p] {
                return false;
            }
            self.values[p] = lo;
        }
        true
    }

    fn current(&self) -> Tableau {
        let mut columns = Vec::with_capacity(self.shape.width());
        let mut idx = 0;
        for len in self.shape.column_lengths() {
            columns.push(self.values[idx..idx + len].to_vec());
            idx += len;
        }
        Tableau::from_columns_unchecked(self.shape.clone(), columns)
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if !self.settle(0) {
                    self.state = IterState::Done;
                    return None;
                }
                return Some(self.current());
            }
            IterState::Running => {}
        }
        let mut p = self.values.len();
        while p > 0 {
            p -= 1;
            if self.values[p] < self.upper[p] {
                self.values[p] += 1;
                if self.settle(p + 1) {
                    return Some(self.current());
                }
            }
        }
        self.state = IterState::Done;
        None
    }
}

/// All of `T_λ`, failing once more than `budget` tableaux have been produced.
pub fn enumerate_tableaux(shape: &Partition, budget: usize) -> Result<Vec<Tableau>> {
    collect_budgeted(TableauIter::new(shape), budget)
}

fn collect_budgeted(iter: impl Iterator<Item = Tableau>, budget: usize) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    for t in iter {
        if out.len() == budget {
            return Err(Error::Guard(format!("more than {budget} tableaux")));
        }
        out.push(t);
    }
    Ok(out)
}

fn key_for(p: &RTuple, shape: &Partition) -> Result<Tableau> {
    key_of_perm(p, shape)
}

/// `S(T) ≤ Y_λ(π)`.
pub fn is_demazure_member(t: &Tableau, p: &RTuple, shape: &Partition) -> Result<bool> {
    if t.shape() != shape {
        return Err(Error::Structure("tableau shape differs from λ".into()));
    }
    let y = key_for(p, shape)?;
    member_of(t, &y)
}

/// Membership against a precomputed key.
pub fn member_of(t: &Tableau, y: &Tableau) -> Result<bool> {
    let verdict = tableau_leq(&scan(t)?, y)?;
    debug_assert_eq!(verdict, a_set_criterion(t, y)?, "A-set criterion disagrees on\n{t}");
    Ok(verdict)
}

/// `D_λ(π)`, generated inside the ideal `[Y_λ(π)]` that contains it.
pub fn demazure_set(p: &RTuple, shape: &Partition, budget: usize) -> Result<LatticeSet> {
    let y = key_for(p, shape)?;
    let ideal = collect_budgeted(TableauIter::below(&y), budget)?;
    let members = filter_members(ideal, &y)?;
    Ok(LatticeSet::from_tableaux(shape, &members))
}

/// `D_λ(π)` by filtering every tableau of the shape; no containment assumed.
pub fn demazure_set_unpruned(p: &RTuple, shape: &Partition, budget: usize) -> Result<LatticeSet> {
    let y = key_for(p, shape)?;
    let members = filter_members(enumerate_tableaux(shape, budget)?, &y)?;
    Ok(LatticeSet::from_tableaux(shape, &members))
}

fn filter_members(candidates: Vec<Tableau>, y: &Tableau) -> Result<Vec<Tableau>> {
    let flags: Vec<bool> = candidates.par_iter().map(|t| member_of(t, y)).collect::<Result<_>>()?;
    Ok(candidates.into_iter().zip(flags).filter_map(|(t, keep)| keep.then_some(t)).collect())
}

/// `[y] = {T ∈ T_λ : T ≤ y}`.
pub fn principal_ideal(y: &Tableau, budget: usize) -> Result<LatticeSet> {
    y.check()?;
    let members = collect_budgeted(TableauIter::below(y), budget)?;
    Ok(LatticeSet::from_tableaux(y.shape(), &members))
}

/// Sum of `x^{Θ(T)}` over a tableau set, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DemazurePolynomial {
    pub terms: BTreeMap<Vec<u32>, u64>,
}

impl DemazurePolynomial {
    pub fn from_tableaux<'a>(tableaux: impl IntoIterator<Item = &'a Tableau>) -> Self {
        let mut terms = BTreeMap::new();
        for t in tableaux {
            *terms.entry(t.content()).or_insert(0) += 1;
        }
        DemazurePolynomial { terms }
    }

    pub fn coefficient_sum(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Invariant under swapping `x_i` and `x_{i+1}`.
    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut swapped = e.clone();
            swapped.swap(i - 1, i);
            self.terms.get(&swapped) == Some(c)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        let vars = self.terms.keys().next().map_or(0, |e| e.len());
        (1..vars).all(|i| self.is_symmetric_in(i))
    }
}

impl Serialize for DemazurePolynomial {
    /// A list of `{"exponents": [...], "coefficient": c}` records.
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exponents: &'a [u32],
            coefficient: u64,
        }
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (e, &c) in &self.terms {
            seq.serialize_element(&Term { exponents: e, coefficient: c })?;
        }
        seq.end()
    }
}

impl std::fmt::Display for DemazurePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            match (c, mono.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&mono.join("*"))?,
                _ => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `d_λ(π; x)`.
pub fn demazure_polynomial(p: &RTuple, shape: &Partition, budget: usize) -> Result<DemazurePolynomial> {
    let set = demazure_set(p, shape, budget)?;
    Ok(DemazurePolynomial::from_tableaux(&set.tableaux()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rtuples::RSet;

    fn shape(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let all = enumerate_tableaux(&shape("1,1,0"), 100).unwrap();
        let cols: Vec<_> = all.iter().map(|t| t.column(1).to_vec()).collect();
        assert_eq!(cols, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(enumerate_tableaux(&shape("2,1,0"), 100).unwrap().len(), 8);
        let null = enumerate_tableaux(&shape("0,0"), 100).unwrap();
        assert_eq!(null, vec![Tableau::null(2)]);
        assert!(matches!(enumerate_tableaux(&shape("2,1,0"), 5), Err(Error::Guard(_))));
    }

    #[test]
    fn enumeration_is_lexicographic_and_semistandard() {
        let all = enumerate_tableaux(&shape("3,2,1,0"), 1000).unwrap();
        assert_eq!(all.len(), 64);
        assert!(all.iter().all(Tableau::is_semistandard));
        assert!(all.windows(2).all(|w| w[0].flatten() < w[1].flatten()));
    }

    #[test]
    fn inert_columns_are_fixed() {
        let all = enumerate_tableaux(&shape("2,1,1"), 100).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|t| t.column(1) == [1, 2, 3]));
    }

    #[test]
    fn one_box_shape() {
        let sh = shape("1,0");
        let pi: RTuple = "2;1".parse().unwrap();
        let d = demazure_set(&pi, &sh, 100).unwrap();
        assert_eq!(d.len(), 2);
        let poly = demazure_polynomial(&pi, &sh, 100).unwrap();
        assert_eq!(poly.to_string(), "x1 + x2");
        assert_eq!(poly.terms.len(), 2);
    }

    #[test]
    fn minimal_permutation_gives_single_monomial() {
        let sh = shape("1,1,0");
        let pi: RTuple = "1,2;3".parse().unwrap();
        let poly = demazure_polynomial(&pi, &sh, 100).unwrap();
        assert_eq!(poly.terms, BTreeMap::from([(vec![1, 1, 0], 1)]));
    }

    #[test]
    fn maximal_permutation_gives_schur_sum() {
        let sh = shape("2,1,0");
        let pi: RTuple = "3;2;1".parse().unwrap();
        let poly = demazure_polynomial(&pi, &sh, 100).unwrap();
        let all = enumerate_tableaux(&sh, 100).unwrap();
        assert_eq!(poly, DemazurePolynomial::from_tableaux(&all));
        assert!(poly.is_symmetric());
        assert_eq!(poly.coefficient_sum(), 8);
    }

    #[test]
    fn containing_permutation_set_is_proper() {
        let sh = shape("2,1,0");
        let pi: RTuple = "3;1;2".parse().unwrap();
        let d = demazure_set(&pi, &sh, 100).unwrap();
        let y = key_of_perm(&pi, &sh).unwrap();
        let ideal = principal_ideal(&y, 100).unwrap();
        assert!(d.is_subset(&ideal));
        assert!(d.len() < ideal.len());
        assert_eq!(d, demazure_set_unpruned(&pi, &sh, 100).unwrap());
        assert_eq!(d.max_element().unwrap(), y);
    }

    #[test]
    fn principal_ideal_of_minimal_key() {
        let sh = Partition::minimal_for(&RSet::full(4));
        let y = key_of_perm(&RTuple::identity(RSet::full(4)), &sh).unwrap();
        assert_eq!(principal_ideal(&y, 10).unwrap().len(), 1);
    }

    #[test]
    fn key_is_member() {
        let sh = shape("2,1,1,0");
        let pi: RTuple = "4;1,2;3".parse().unwrap();
        let y = key_of_perm(&pi, &sh).unwrap();
        assert!(is_demazure_member(&y, &pi, &sh).unwrap());
    }
}
