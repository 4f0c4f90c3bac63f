use std::collections::BTreeSet;

use serde::Serialize;

use super::simplex::convex_combination_exists;
use crate::error::{Error, Result};
use crate::shapes::{Partition, Tableau};

/// A finite set of tableaux of one shape, viewed as points of `Z^{|λ|}`
/// through the column-major flattening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeSet {
    shape: Partition,
    points: BTreeSet<Vec<i64>>,
}

impl LatticeSet {
    pub fn new(shape: Partition) -> Self {
        LatticeSet { shape, points: BTreeSet::new() }
    }

    pub fn from_tableaux<'a>(shape: &Partition, tableaux: impl IntoIterator<Item = &'a Tableau>) -> Self {
        let mut set = LatticeSet::new(shape.clone());
        for t in tableaux {
            set.insert(t);
        }
        set
    }

    pub fn insert(&mut self, t: &Tableau) -> bool {
        assert_eq!(t.shape(), &self.shape, "lattice set points must share the shape");
        self.points.insert(t.flatten())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        self.shape.size()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &BTreeSet<Vec<i64>> {
        &self.points
    }

    pub fn contains_point(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn contains(&self, t: &Tableau) -> bool {
        t.shape() == &self.shape && self.points.contains(&t.flatten())
    }

    /// Members in lexicographic order of their flattenings.
    pub fn tableaux(&self) -> Vec<Tableau> {
        self.points.iter().map(|p| Tableau::from_flat(&self.shape, p).expect("stored points are tableaux")).collect()
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        self.shape == other.shape && self.points.is_subset(&other.points)
    }

    /// The unique entrywise-maximal member, if there is one.
    pub fn max_element(&self) -> Option<Tableau> {
        let first = self.points.iter().next()?;
        let top: Vec<i64> = (0..first.len()).map(|k| self.points.iter().map(|p| p[k]).max().unwrap()).collect();
        self.points.contains(&top).then(|| Tableau::from_flat(&self.shape, &top).unwrap())
    }

    /// Coordinate-wise bounding box.
    pub fn bounds(&self) -> Vec<(i64, i64)> {
        let dim = self.dimension();
        (0..dim)
            .map(|k| {
                let vals = self.points.iter().map(|p| p[k]);
                (vals.clone().min().unwrap_or(0), vals.max().unwrap_or(0))
            })
            .collect()
    }
}

/// Exact hull membership of an arbitrary point.
pub fn in_convex_hull(s: &LatticeSet, p: &[i64]) -> bool {
    if p.len() != s.dimension() {
        return false;
    }
    if s.contains_point(p) {
        return true;
    }
    let pts: Vec<Vec<i64>> = s.points.iter().cloned().collect();
    convex_combination_exists(&pts, p)
}

/// How a convexity question was settled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ConvexityVerdict {
    /// Every hull lattice point is in the set (exact oracle).
    Convex,
    /// The exact oracle found a hull lattice point outside the set.
    Nonconvex { outside: Vec<i64> },
    /// Budget exceeded; an integral point strictly between two members is missing.
    CertifiedNonconvex { from: Vec<i64>, to: Vec<i64>, outside: Vec<i64> },
    /// Budget exceeded; every segment between members is closed, which is
    /// necessary but not sufficient for convexity.
    SegmentClosedOnly,
}

impl ConvexityVerdict {
    /// `Some(answer)` when the verdict is conclusive.
    pub fn is_convex(&self) -> Option<bool> {
        match self {
            ConvexityVerdict::Convex => Some(true),
            ConvexityVerdict::Nonconvex { .. } | ConvexityVerdict::CertifiedNonconvex { .. } => Some(false),
            ConvexityVerdict::SegmentClosedOnly => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ConvexityVerdict::Convex => "convex",
            ConvexityVerdict::Nonconvex { .. } => "nonconvex",
            ConvexityVerdict::CertifiedNonconvex { .. } => "certified-nonconvex",
            ConvexityVerdict::SegmentClosedOnly => "segment-closed-only",
        }
    }
}

/// Lattice points satisfying every bound `lo ≤ x_a ≤ hi` and
/// `min(x_a - x_b) ≤ x_a - x_b ≤ max(x_a - x_b)` valid on `s`; these
/// inequalities hold on the hull, so every hull lattice point is listed.
/// Returns `None` once more than `budget` candidates turn up.
fn hull_candidates(s: &LatticeSet, budget: usize) -> Option<Vec<Vec<i64>>> {
    let dim = s.dimension();
    let bounds = s.bounds();
    let mut dmin = vec![vec![0i64; dim]; dim];
    let mut dmax = vec![vec![0i64; dim]; dim];
    for a in 0..dim {
        for b in 0..a {
            let diffs = s.points.iter().map(|p| p[a] - p[b]);
            dmin[a][b] = diffs.clone().min().unwrap();
            dmax[a][b] = diffs.max().unwrap();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(dim);
    fn dfs(
        k: usize,
        cur: &mut Vec<i64>,
        bounds: &[(i64, i64)],
        dmin: &[Vec<i64>],
        dmax: &[Vec<i64>],
        out: &mut Vec<Vec<i64>>,
        budget: usize,
    ) -> bool {
        if k == bounds.len() {
            if out.len() == budget {
                return false;
            }
            out.push(cur.clone());
            return true;
        }
        let (mut lo, mut hi) = bounds[k];
        for b in 0..k {
            lo = lo.max(cur[b] + dmin[k][b]);
            hi = hi.min(cur[b] + dmax[k][b]);
        }
        for v in lo..=hi {
            cur.push(v);
            let ok = dfs(k + 1, cur, bounds, dmin, dmax, out, budget);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    dfs(0, &mut current, &bounds, &dmin, &dmax, &mut out, budget).then_some(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// First pair of members whose segment passes through a lattice point
/// outside the set.
fn open_segment(s: &LatticeSet) -> Option<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let pts: Vec<&Vec<i64>> = s.points.iter().collect();
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let diff: Vec<i64> = q.iter().zip(p.iter()).map(|(a, b)| a - b).collect();
            let steps = diff.iter().fold(0, |g, &d| gcd(g, d));
            for t in 1..steps {
                let mid: Vec<i64> = p.iter().zip(&diff).map(|(a, d)| a + t * d / steps).collect();
                if !s.contains_point(&mid) {
                    return Some(((*p).clone(), (*q).clone(), mid));
                }
            }
        }
    }
    None
}

/// Decides `s = conv(s) ∩ Z^{|λ|}` exactly when at most `budget` hull
/// candidates exist, otherwise falls back to the segment-closure test.
pub fn convexity_verdict(s: &LatticeSet, budget: usize) -> Result<ConvexityVerdict> {
    if s.is_empty() {
        return Err(Error::Input("convexity of an empty set".into()));
    }
    let Some(candidates) = hull_candidates(s, budget) else {
        return Ok(match open_segment(s) {
            Some((from, to, outside)) => ConvexityVerdict::CertifiedNonconvex { from, to, outside },
            None => ConvexityVerdict::SegmentClosedOnly,
        });
    };
    let pts: Vec<Vec<i64>> = s.points.iter().cloned().collect();
    for c in candidates {
        if !s.contains_point(&c) && convex_combination_exists(&pts, &c) {
            return Ok(ConvexityVerdict::Nonconvex { outside: c });
        }
    }
    Ok(ConvexityVerdict::Convex)
}

/// Exact convexity; a guard error when the candidate budget is exceeded.
pub fn is_convex_lattice_set(s: &LatticeSet, budget: usize) -> Result<bool> {
    match convexity_verdict(s, budget)? {
        ConvexityVerdict::Convex => Ok(true),
        ConvexityVerdict::Nonconvex { .. } => Ok(false),
        _ => Err(Error::Guard(format!("more than {budget} hull candidates"))),
    }
}
