//! Permutation puzzles: which relabelings of a compact configuration can be
//! reached without changing its shape, and how.

mod chain;
mod generators;
mod geometry;
mod group;
mod permutation;
mod solve;

use std::fmt;

use serde::Serialize;

pub use chain::{enumerate_words, SchreierSims, WordChain};
pub use generators::{generator_sequences, generator_word, induced_permutation, Generator, GeneratorKind, Letter, Word};
pub use geometry::{core_geometry, index_positions, CoreGeometry};
pub(crate) use generators::permutation_between;
pub(crate) use geometry::reading_order;
pub use group::{alternating_order, classify, GroupClass, ShapeGroup};
pub use permutation::{Parity, Permutation};
pub use solve::{is_solvable, shape_group, solve_permutation};

/// Why a permutation puzzle has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Unsolvable {
    NotCompact,
    ShapeMismatch,
    CoreMismatch,
    LabelMismatch,
    OddPermutation,
    NotInGroup,
}

impl Unsolvable {
    pub fn code(self) -> &'static str {
        match self {
            Unsolvable::NotCompact => "not_compact",
            Unsolvable::ShapeMismatch => "shape_mismatch",
            Unsolvable::CoreMismatch => "core_mismatch",
            Unsolvable::LabelMismatch => "label_mismatch",
            Unsolvable::OddPermutation => "odd_permutation",
            Unsolvable::NotInGroup => "not_in_group",
        }
    }
}

impl fmt::Display for Unsolvable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unsolvable::NotCompact => "a configuration is not compact",
            Unsolvable::ShapeMismatch => "start and goal have different shapes",
            Unsolvable::CoreMismatch => "a core token would have to move",
            Unsolvable::LabelMismatch => "start and goal use different labels",
            Unsolvable::OddPermutation => "parity obstruction: the required permutation is odd",
            Unsolvable::NotInGroup => "the required permutation is not reachable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub solvable: bool,
    pub reason: Option<Unsolvable>,
}

impl Verdict {
    pub const YES: Verdict = Verdict {
        solvable: true,
        reason: None,
    };

    pub fn no(reason: Unsolvable) -> Self {
        Self {
            solvable: false,
            reason: Some(reason),
        }
    }
}
