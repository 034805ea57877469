use serde::Serialize;

use crate::compact::{is_canonical, is_compact};
use crate::error::{Error, Result};
use crate::grid::Configuration;

/// Full positions in reading order: top row first, left to right.
pub fn index_positions(k: &Configuration) -> Result<Vec<(usize, usize)>> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    Ok(reading_order(k))
}

pub(crate) fn reading_order(c: &Configuration) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(c.len());
    for y in (0..c.height()).rev() {
        for x in 0..c.width() {
            if c.is_full(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Full rows and columns of a compact configuration and the block of cells
/// that no push sequence can move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreGeometry {
    pub a: usize,
    pub b: usize,
    pub a_full: usize,
    pub b_full: usize,
    pub a_rest: usize,
    pub b_rest: usize,
    pub core_cells: Vec<(usize, usize)>,
}

impl CoreGeometry {
    /// Geometry of an `a x b` box with `a_full` full columns and `b_full`
    /// full rows.
    pub fn from_counts(a: usize, b: usize, a_full: usize, b_full: usize) -> Self {
        let a_rest = a - a_full;
        let b_rest = b - b_full;
        let mut core_cells = Vec::new();
        if a_full > a_rest && b_full > b_rest {
            for y in (b_rest..b - b_rest).rev() {
                for x in a_rest..a - a_rest {
                    core_cells.push((x, y));
                }
            }
        }
        Self {
            a,
            b,
            a_full,
            b_full,
            a_rest,
            b_rest,
            core_cells,
        }
    }

    pub fn has_core(&self) -> bool {
        !self.core_cells.is_empty()
    }

    pub fn is_core(&self, x: usize, y: usize) -> bool {
        self.has_core()
            && (self.a_rest..self.a - self.a_rest).contains(&x)
            && (self.b_rest..self.b - self.b_rest).contains(&y)
    }
}

pub fn core_geometry(c: &Configuration) -> Result<CoreGeometry> {
    if !is_compact(c) {
        return Err(Error::NotCompact);
    }
    let a_full = (0..c.width()).filter(|&x| c.column_count(x) == c.height()).count();
    let b_full = (0..c.height()).filter(|&y| c.row_count(y) == c.width()).count();
    Ok(CoreGeometry::from_counts(c.width(), c.height(), a_full, b_full))
}
