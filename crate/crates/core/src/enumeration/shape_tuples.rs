use std::fmt;

use serde::Serialize;

use crate::error::{input_err, Result};
use crate::rtuples::{RSet, RTuple};

/// `(μ^(1), ..., μ^(r))` with `μ^(h)` inside a `p_h × (n - q_h)` box, stored
/// without trailing zero rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeTuple {
    #[serde(skip)]
    rset: RSet,
    shapes: Vec<Vec<usize>>,
}

impl ShapeTuple {
    pub fn new(rset: RSet, mut shapes: Vec<Vec<usize>>) -> Result<Self> {
        if shapes.len() != rset.r() {
            return Err(input_err!("expected {} shapes, got {}", rset.r(), shapes.len()));
        }
        for (k, mu) in shapes.iter_mut().enumerate() {
            let h = k + 1;
            while mu.last() == Some(&0) {
                mu.pop();
            }
            let width = rset.n() - rset.divider(h);
            if mu.windows(2).any(|w| w[0] < w[1]) || mu.len() > rset.carrel_size(h) || mu.iter().any(|&v| v > width) {
                return Err(input_err!("shape {h} does not fit a {} × {width} box", rset.carrel_size(h)));
            }
        }
        let st = ShapeTuple { rset, shapes };
        if !(1..st.rset.r()).all(|h| st.links(h)) {
            return Err(input_err!("row condition fails between consecutive shapes"));
        }
        Ok(st)
    }

    pub fn rset(&self) -> &RSet {
        &self.rset
    }

    pub fn shapes(&self) -> &[Vec<usize>] {
        &self.shapes
    }

    /// `μ^(h)` padded with zeros to exactly `p_h` rows.
    fn padded(&self, h: usize) -> Vec<usize> {
        let mut rows = self.shapes[h - 1].clone();
        rows.resize(self.rset.carrel_size(h), 0);
        rows
    }

    /// First row of `μ^(h)` ≤ last row of `μ^(h+1)` plus that row's multiplicity.
    fn links(&self, h: usize) -> bool {
        let next = self.padded(h + 1);
        let last = *next.last().unwrap();
        let mult = next.iter().filter(|&&v| v == last).count();
        self.padded(h)[0] <= last + mult
    }
}

impl fmt::Display for ShapeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .shapes
            .iter()
            .map(|mu| format!("({})", mu.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Partitions with at most `rows` parts, each at most `width`, padded to `rows`.
fn box_partitions(rows: usize, width: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            go(rows, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, width, &mut Vec::new(), &mut out);
    out
}

/// All shape tuples for `R`, built directly from the box and row conditions.
pub fn gen_shape_tuples(rs: &RSet) -> Vec<ShapeTuple> {
    let r = rs.r();
    let boxes: Vec<Vec<Vec<usize>>> =
        (1..=r).map(|h| box_partitions(rs.carrel_size(h), rs.n() - rs.divider(h))).collect();
    let mut out = Vec::new();
    fn go(rs: &RSet, boxes: &[Vec<Vec<usize>>], chosen: &mut Vec<Vec<usize>>, out: &mut Vec<ShapeTuple>) {
        if chosen.len() == boxes.len() {
            out.push(ShapeTuple::new(rs.clone(), chosen.clone()).expect("conditions checked"));
            return;
        }
        // Shapes are chosen from the last carrel backwards so each new one
        // can be linked to its already-chosen successor.
        let h = boxes.len() - chosen.len();
        for mu in &boxes[h - 1] {
            if let Some(next) = chosen.first() {
                let last = *next.last().unwrap();
                let mult = next.iter().filter(|&&v| v == last).count();
                if mu[0] > last + mult {
                    continue;
                }
            }
            chosen.insert(0, mu.clone());
            go(rs, boxes, chosen, out);
            chosen.remove(0);
        }
    }
    go(rs, &boxes, &mut Vec::with_capacity(r), &mut out);
    out.sort();
    out
}

/// Subtracts the staircase `q_{h-1}+1, ..., q_h` from each of the first `r`
/// carrels and reads the result as a partition.
pub fn shape_tuple_of_gapless(g: &RTuple) -> Result<ShapeTuple> {
    if !g.is_gapless() {
        return Err(input_err!("{g} is not gapless"));
    }
    let rs = g.rset();
    let shapes = (1..=rs.r())
        .map(|h| {
            let start = rs.divider(h - 1);
            g.cohort(h).iter().enumerate().rev().map(|(t, &v)| v - (start + t + 1)).collect()
        })
        .collect();
    ShapeTuple::new(rs.clone(), shapes)
}

/// Inverse of [`shape_tuple_of_gapless`]; the last carrel is `q_r+1, ..., n`.
pub fn gapless_of_shape_tuple(st: &ShapeTuple) -> RTuple {
    let rs = st.rset();
    let mut entries = Vec::with_capacity(rs.n());
    for h in 1..=rs.r() {
        let start = rs.divider(h - 1);
        entries.extend(st.padded(h).iter().rev().enumerate().map(|(t, &v)| v + start + t + 1));
    }
    entries.extend(rs.divider(rs.r()) + 1..=rs.n());
    let g = RTuple::new(rs.clone(), entries).expect("values lie in [n]");
    debug_assert!(g.is_gapless(), "{g}");
    g
}
