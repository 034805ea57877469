//! Which permutations of a staircase are reachable by pushes.

use std::collections::HashMap;
use std::sync::OnceLock;


use super::chain::{enumerate_words, SchreierSims, WordChain};
use super::generators::{generator_sequences, Generator, Word};
use super::geometry::{core_geometry, reading_order, CoreGeometry};
use super::permutation::{Parity, Permutation};
use crate::compact::{canonical_form, shape_of, CanonicalShape};
use crate::error::{Error, Result};
use crate::grid::{Configuration, PushSequence};

/// Groups up to this order are solved from a full table of shortest words.
const TABLE_LIMIT: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupClass {
    /// Nothing can move.
    Trivial,
    /// One empty cell: powers of the perimeter cycle.
    Cyclic { order: usize, generator: Permutation },
    /// Six tokens in a box with two empty cells: a copy of `Alt(5)` acting on
    /// all six places.
    AltFiveSpecial { elements: Vec<Permutation> },
    /// Every even permutation of the listed (non-core) position indices.
    AlternatingNonCore { non_core: Vec<usize> },
}

impl GroupClass {
    pub fn name(&self) -> &'static str {
        match self {
            GroupClass::Trivial => "trivial",
            GroupClass::Cyclic { .. } => "cyclic",
            GroupClass::AltFiveSpecial { .. } => "alt5",
            GroupClass::AlternatingNonCore { .. } => "alternating",
        }
    }

    /// Group order; saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        match self {
            GroupClass::Trivial => 1,
            GroupClass::Cyclic { order, .. } => *order as u128,
            GroupClass::AltFiveSpecial { elements } => elements.len() as u128,
            GroupClass::AlternatingNonCore { non_core } => alternating_order(non_core.len()),
        }
    }
}

pub fn alternating_order(m: usize) -> u128 {
    if m < 2 {
        return 1;
    }
    (3..=m as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// Everything needed to decide and solve permutation puzzles on one
/// canonical shape. Token `i` of the reference configuration sits at reading
/// index `i`.
pub struct ShapeGroup {
    shape: CanonicalShape,
    reference: Configuration,
    geometry: CoreGeometry,
    core_indices: Vec<usize>,
    generators: Vec<Generator>,
    class: GroupClass,
    words: OnceLock<Factorizer>,
}

enum Factorizer {
    Table(HashMap<Permutation, Word>),
    Chain(WordChain),
}

impl ShapeGroup {
    pub fn new(shape: &CanonicalShape) -> Result<Self> {
        let reference = shape.labeled();
        let geometry = core_geometry(&reference)?;
        let generators = generator_sequences(&reference)?;
        let order = reading_order(&reference);
        let core_indices: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| geometry.is_core(x, y))
            .map(|(i, _)| i)
            .collect();
        let n = reference.len();
        let degree = n;
        let class = match shape.empty_cells() {
            0 => GroupClass::Trivial,
            1 => {
                let a0 = generators
                    .first()
                    .ok_or_else(|| Error::Verification("one empty cell but no type-A word".into()))?;
                GroupClass::Cyclic {
                    order: 2 * geometry.a + 2 * geometry.b - 5,
                    generator: a0.permutation.clone(),
                }
            }
            2 if n == 6 => {
                let perms: Vec<Permutation> = generators.iter().map(|g| g.permutation.clone()).collect();
                let table = enumerate_words(degree, &perms, TABLE_LIMIT).expect("Alt(5) is small");
                let mut elements: Vec<Permutation> = table.keys().cloned().collect();
                elements.sort();
                GroupClass::AltFiveSpecial { elements }
            }
            _ => GroupClass::AlternatingNonCore {
                non_core: (0..n).filter(|i| !core_indices.contains(i)).collect(),
            },
        };
        Ok(Self {
            shape: shape.clone(),
            reference,
            geometry,
            core_indices,
            generators,
            class,
            words: OnceLock::new(),
        })
    }

    pub fn shape(&self) -> &CanonicalShape {
        &self.shape
    }

    /// The canonical configuration with distinct labels; token ids equal
    /// reading indices.
    pub fn reference(&self) -> &Configuration {
        &self.reference
    }

    pub fn geometry(&self) -> &CoreGeometry {
        &self.geometry
    }

    pub fn core_indices(&self) -> &[usize] {
        &self.core_indices
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn class(&self) -> &GroupClass {
        &self.class
    }

    pub fn degree(&self) -> usize {
        self.reference.len()
    }

    /// Membership as predicted by the classification.
    pub fn contains(&self, p: &Permutation) -> bool {
        match &self.class {
            GroupClass::Trivial => p.is_identity(),
            GroupClass::Cyclic { order, generator } => (0..*order).any(|j| generator.pow(j) == *p),
            GroupClass::AltFiveSpecial { elements } => elements.binary_search(p).is_ok(),
            GroupClass::AlternatingNonCore { .. } => {
                p.parity() == Parity::Even && self.core_indices.iter().all(|&i| p.fixes(i))
            }
        }
    }

    fn factorizer(&self) -> &Factorizer {
        self.words.get_or_init(|| {
            let perms: Vec<Permutation> = self.generators.iter().map(|g| g.permutation.clone()).collect();
            let small = self.class.order() <= TABLE_LIMIT as u128;
            match small.then(|| enumerate_words(self.degree(), &perms, TABLE_LIMIT)).flatten() {
                Some(table) => Factorizer::Table(table),
                None => {
                    let plain = SchreierSims::new(self.degree(), &perms);
                    Factorizer::Chain(WordChain::build(self.degree(), &perms, plain.base(), &plain.orbit_sizes()))
                }
            }
        })
    }

    /// A word over the generators realizing `p`, if `p` is reachable.
    pub fn word_for(&self, p: &Permutation) -> Option<Word> {
        if let GroupClass::Cyclic { order, generator } = &self.class {
            let j = (0..*order).find(|&j| generator.pow(j) == *p)?;
            let letter = super::generators::Letter {
                generator: 0,
                inverse: 2 * j > *order,
            };
            let count = if letter.inverse { order - j } else { j };
            return Some(Word(vec![letter; count]));
        }
        match self.factorizer() {
            Factorizer::Table(t) => t.get(p).cloned(),
            Factorizer::Chain(c) => c.factorize(p),
        }
    }

    /// Push sequence that applies `p` to the reference configuration.
    pub fn pushes_for(&self, p: &Permutation) -> Option<PushSequence> {
        self.word_for(p).map(|w| w.to_pushes(&self.generators))
    }
}

/// Classification of the reachable group of a compact configuration, computed
/// on its canonical shape.
pub fn classify(c: &Configuration) -> Result<GroupClass> {
    canonical_form(c)?;
    Ok(ShapeGroup::new(&shape_of(c)?)?.class)
}
