use std::collections::HashMap;
use std::fmt;

use super::partition::{DoublePartition, Partition};
use crate::error::{Error, Result};
use crate::scalars::{ExactScalar, ParameterPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    First,
    Second,
}

/// A box of a double diagram; `row` and `col` are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub component: Component,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Location statistics of the box holding an entry. `row` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxStat {
    pub component: Component,
    pub content: i64,
    pub row: usize,
}

/// A standard filling of a double diagram, stored as entry -> box:
/// `cells[k - 1]` is the box holding entry `k`.
///
/// Tableaux of a single partition are the case `shape.second = []`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleTableau {
    shape: DoublePartition,
    cells: Vec<Cell>,
}

impl DoubleTableau {
    /// Validates that `cells` fills `shape` exactly and is standard.
    pub fn from_cells(shape: DoublePartition, cells: Vec<Cell>) -> Result<Self> {
        if cells.len() != shape.size() {
            return Err(Error::pre("cell count does not match the shape"));
        }
        let mut filled: HashMap<Cell, usize> = HashMap::new();
        for (k, c) in cells.iter().enumerate() {
            let part = component_of(&shape, c.component);
            if c.col >= part.part(c.row) {
                return Err(Error::pre(format!("cell {c:?} lies outside {shape}")));
            }
            if filled.insert(*c, k + 1).is_some() {
                return Err(Error::pre(format!("cell {c:?} filled twice")));
            }
        }
        for (c, &k) in &filled {
            let left = (c.col > 0).then(|| Cell { col: c.col - 1, ..*c });
            let up = (c.row > 0).then(|| Cell { row: c.row - 1, ..*c });
            for nb in [left, up].into_iter().flatten() {
                if filled[&nb] > k {
                    return Err(Error::pre(format!("filling is not standard at {c:?}")));
                }
            }
        }
        Ok(DoubleTableau { shape, cells })
    }

    pub fn shape(&self) -> &DoublePartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// The box holding `entry` (1-based).
    pub fn cell(&self, entry: usize) -> Option<&Cell> {
        entry.checked_sub(1).and_then(|k| self.cells.get(k))
    }

    pub fn box_stat(&self, entry: usize) -> Result<BoxStat> {
        let c = self.cell(entry).ok_or_else(|| {
            Error::pre(format!("entry {entry} out of range 1..={}", self.size()))
        })?;
        Ok(BoxStat {
            component: c.component,
            content: c.content(),
            row: c.row + 1,
        })
    }

    /// Swap `i` and `i+1`; `None` if the result is not standard.
    pub fn apply_transposition(&self, i: usize) -> Option<DoubleTableau> {
        if i == 0 || i >= self.size() {
            return None;
        }
        let (a, b) = (self.cells[i - 1], self.cells[i]);
        if a.component == b.component && (a.row == b.row || a.col == b.col) {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Some(DoubleTableau {
            shape: self.shape.clone(),
            cells,
        })
    }

    /// Drops the box holding the largest entry.
    pub fn without_last(&self) -> Option<DoubleTableau> {
        let last = *self.cells.last()?;
        let mut shape = self.shape.clone();
        match last.component {
            Component::First => shape.first = shape.first.with_box_removed(last.row)?,
            Component::Second => shape.second = shape.second.with_box_removed(last.row)?,
        }
        Some(DoubleTableau {
            shape,
            cells: self.cells[..self.cells.len() - 1].to_vec(),
        })
    }
}

impl fmt::Debug for DoubleTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |comp: Component, part: &Partition| -> String {
            let mut rows: Vec<Vec<usize>> = part.parts().iter().map(|&l| vec![0; l]).collect();
            for (k, c) in self.cells.iter().enumerate() {
                if c.component == comp {
                    rows[c.row][c.col] = k + 1;
                }
            }
            let rows: Vec<String> = rows
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            rows.join(" / ")
        };
        write!(
            f,
            "({} , {})",
            render(Component::First, &self.shape.first),
            render(Component::Second, &self.shape.second)
        )
    }
}

fn component_of(shape: &DoublePartition, c: Component) -> &Partition {
    match c {
        Component::First => &shape.first,
        Component::Second => &shape.second,
    }
}

/// All standard tableaux of `shape`, sorted lexicographically by their
/// entry -> box maps (boxes ordered by component, then row, then column).
pub fn standard_tableaux(shape: &DoublePartition) -> Vec<DoubleTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut fill_first = vec![0usize; shape.first.len()];
    let mut fill_second = vec![0usize; shape.second.len()];
    let mut cells = Vec::with_capacity(n);
    grow(shape, &mut fill_first, &mut fill_second, &mut cells, &mut out);
    out.sort();
    out
}

fn grow(
    shape: &DoublePartition,
    fill_first: &mut Vec<usize>,
    fill_second: &mut Vec<usize>,
    cells: &mut Vec<Cell>,
    out: &mut Vec<DoubleTableau>,
) {
    if cells.len() == shape.size() {
        out.push(DoubleTableau {
            shape: shape.clone(),
            cells: cells.clone(),
        });
        return;
    }
    for comp in [Component::First, Component::Second] {
        let target = component_of(shape, comp);
        for row in 0..target.len() {
            let fill = match comp {
                Component::First => &*fill_first,
                Component::Second => &*fill_second,
            };
            let col = fill[row];
            let fits = col < target.part(row) && (row == 0 || fill[row - 1] > col);
            if !fits {
                continue;
            }
            cells.push(Cell { component: comp, row, col });
            match comp {
                Component::First => fill_first[row] += 1,
                Component::Second => fill_second[row] += 1,
            }
            grow(shape, fill_first, fill_second, cells, out);
            match comp {
                Component::First => fill_first[row] -= 1,
                Component::Second => fill_second[row] -= 1,
            }
            cells.pop();
        }
    }
}

/// The scalar `x(t, i)` governing the 2x2 seminormal block that swaps `i` and
/// `i+1`:
///
/// * same component: `q^(c(i+1) - c(i))`;
/// * `i` in the first component, `i+1` in the second: `-q^(c(i+1) - c(i)) / Q`;
/// * `i` in the second, `i+1` in the first: `-Q q^(c(i+1) - c(i))`.
pub fn axial_parameter(t: &DoubleTableau, i: usize, point: &ParameterPoint) -> Result<ExactScalar> {
    let (a, b) = match (t.cell(i), t.cell(i + 1)) {
        (Some(a), Some(b)) if i >= 1 => (*a, *b),
        _ => {
            return Err(Error::pre(format!(
                "axial parameter index {i} out of range 1..{}",
                t.size()
            )))
        }
    };
    let base = point.qpow(b.content() - a.content());
    Ok(match (a.component, b.component) {
        (Component::First, Component::Second) => -(base / point.big_q()),
        (Component::Second, Component::First) => -(base * point.big_q()),
        _ => base,
    })
}

/// Sign of the axial distance between `i` and `i+1` once the double diagram
/// is glued onto a large rectangle: positive when `i+1` sits up and to the
/// right of `i`.
pub(crate) fn ascending(t: &DoubleTableau, i: usize) -> bool {
    let (a, b) = (t.cells[i - 1], t.cells[i]);
    match (a.component, b.component) {
        (Component::First, Component::Second) => false,
        (Component::Second, Component::First) => true,
        _ => b.content() > a.content(),
    }
}

/// Lookup from entry -> box maps to basis positions.
pub(crate) struct TableauIndex(HashMap<Vec<Cell>, usize>);

impl TableauIndex {
    pub(crate) fn new(basis: &[DoubleTableau]) -> Self {
        TableauIndex(
            basis
                .iter()
                .enumerate()
                .map(|(k, t)| (t.cells.clone(), k))
                .collect(),
        )
    }

    pub(crate) fn position(&self, t: &DoubleTableau) -> Option<usize> {
        self.0.get(&t.cells).copied()
    }
}
