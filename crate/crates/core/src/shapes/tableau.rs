use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A filling of a shape, stored column by column (west to east, each column
/// north to south). Cells are addressed `(j, i)` = (column, row), 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    n: usize,
    lambda: Vec<usize>,
    columns: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(repr: TableauRepr) -> Result<Self> {
        let shape = Partition::new(repr.lambda)?;
        if shape.n() != repr.n {
            return Err(Error::Structure(format!("n = {} but lambda has {} parts", repr.n, shape.n())));
        }
        Tableau::new(shape, repr.columns)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { n: t.shape.n(), lambda: t.shape.parts().to_vec(), columns: t.columns }
    }
}

/// First failure of the semistandard conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `T_j(i) ≥ T_j(i+1)`.
    ColumnNotIncreasing { column: usize, row: usize },
    /// `T_j(i) > T_{j+1}(i)`.
    RowDecreasing { column: usize, row: usize },
    /// A column of length `n` that is not `1, ..., n`.
    NonInertColumn { column: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ColumnNotIncreasing { column, row } => {
                write!(f, "cells ({column},{row}) and ({column},{}) do not increase", row + 1)
            }
            Violation::RowDecreasing { column, row } => {
                write!(f, "cells ({column},{row}) and ({},{row}) decrease", column + 1)
            }
            Violation::NonInertColumn { column } => write!(f, "column {column} has trivial length but is not inert"),
        }
    }
}

impl Tableau {
    /// Checks only that the column data fits the shape and values lie in `[n]`.
    pub fn new(shape: Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.len() != shape.width() {
            return Err(Error::Structure(format!(
                "shape has {} columns, got {}",
                shape.width(),
                columns.len()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != shape.column_len(j + 1) {
                return Err(Error::Structure(format!(
                    "column {} must have {} cells, got {}",
                    j + 1,
                    shape.column_len(j + 1),
                    col.len()
                )));
            }
            if let Some(&bad) = col.iter().find(|&&v| v == 0 || v > shape.n()) {
                return Err(Error::Structure(format!("value {bad} outside [{}]", shape.n())));
            }
        }
        Ok(Tableau { shape, columns })
    }

    /// Like [`Tableau::new`], additionally requiring semistandardness.
    pub fn semistandard(shape: Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(shape, columns)?;
        t.check()?;
        Ok(t)
    }

    /// The null tableau on the empty shape with `n` rows.
    pub fn null(n: usize) -> Self {
        Tableau { shape: Partition::new(vec![0; n]).unwrap(), columns: Vec::new() }
    }

    pub(crate) fn from_columns_unchecked(shape: Partition, columns: Vec<Vec<usize>>) -> Self {
        Tableau { shape, columns }
    }

    /// Rebuilds a tableau from its column-major flattening.
    pub fn from_flat(shape: &Partition, flat: &[i64]) -> Result<Self> {
        if flat.len() != shape.size() {
            return Err(Error::Structure(format!("expected {} values, got {}", shape.size(), flat.len())));
        }
        let mut it = flat.iter();
        let mut columns = Vec::with_capacity(shape.width());
        for j in 1..=shape.width() {
            let col: Option<Vec<usize>> =
                (0..shape.column_len(j)).map(|_| usize::try_from(*it.next().unwrap()).ok()).collect();
            columns.push(col.ok_or_else(|| Error::Structure("negative value".into()))?);
        }
        Tableau::new(shape.clone(), columns)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column `j ∈ [λ_1]`.
    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    /// `T_j(i)`.
    pub fn value(&self, j: usize, i: usize) -> usize {
        self.columns[j - 1][i - 1]
    }

    /// `T_j(i)` if the cell exists.
    pub fn get(&self, j: usize, i: usize) -> Option<usize> {
        if j == 0 || i == 0 {
            return None;
        }
        self.columns.get(j - 1)?.get(i - 1).copied()
    }

    pub fn set(&mut self, j: usize, i: usize, v: usize) {
        self.columns[j - 1][i - 1] = v;
    }

    /// All cells `(j, i)` in column-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, c)| (1..=c.len()).map(move |i| (j + 1, i)))
    }

    /// Values in column-major order; the coordinates of `Z^{|λ|}`.
    pub fn flatten(&self) -> Vec<i64> {
        self.columns.iter().flatten().map(|&v| v as i64).collect()
    }

    pub fn max_value(&self) -> Option<usize> {
        self.columns.iter().filter_map(|c| c.last()).max().copied()
    }

    /// Census of values: entry `v-1` counts occurrences of `v`.
    pub fn content(&self) -> Vec<u32> {
        let mut census = vec![0; self.n()];
        for &v in self.columns.iter().flatten() {
            census[v - 1] += 1;
        }
        census
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.n();
        for (j0, col) in self.columns.iter().enumerate() {
            let j = j0 + 1;
            if let Some(i) = col.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Violation::ColumnNotIncreasing { column: j, row: i + 1 });
            }
            if col.len() == n && col.iter().enumerate().any(|(i, &v)| v != i + 1) {
                return Err(Violation::NonInertColumn { column: j });
            }
            if let Some(next) = self.columns.get(j0 + 1) {
                if let Some(i) = next.iter().zip(col).position(|(&east, &west)| west > east) {
                    return Err(Violation::RowDecreasing { column: j, row: i + 1 });
                }
            }
        }
        Ok(())
    }

    pub fn is_semistandard(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn check(&self) -> Result<()> {
        self.validate().map_err(|v| Error::Input(format!("not semistandard: {v}")))
    }
}

impl fmt::Display for Tableau {
    /// Rows north to south, values separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.columns.first().map_or(0, |c| c.len());
        if rows == 0 {
            return f.write_str("(null)");
        }
        for i in 0..rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> =
                self.columns.iter().filter_map(|c| c.get(i)).map(|v| v.to_string()).collect();
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}
