//! The push words that generate the reachable permutations of a staircase.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::geometry::{core_geometry, reading_order};
use super::permutation::Permutation;
use crate::compact::{invert_sequence, is_canonical};
use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction, PushSequence};

/// Permutation of places taking `before` to `after`: the token at reading
/// index `p` of `before` sits at reading index `perm(p)` of `after`.
pub(crate) fn permutation_between(before: &Configuration, after: &Configuration) -> Result<Permutation> {
    if !before.same_shape(after) {
        return Err(Error::ShapeChanged);
    }
    let order = reading_order(after);
    let index: HashMap<(usize, usize), usize> = order.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let after_pos = after.positions();
    let images = reading_order(before)
        .into_iter()
        .map(|(x, y)| index[&after_pos[before.get(x, y).unwrap().index()]])
        .collect();
    Ok(Permutation::from_images(images).expect("token ids are unique"))
}

pub fn induced_permutation(k: &Configuration, s: &PushSequence) -> Result<Permutation> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    permutation_between(k, &k.apply(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorKind {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub k: usize,
    pub word: PushSequence,
    pub inverse_word: PushSequence,
    pub permutation: Permutation,
}

impl Generator {
    pub fn name(&self) -> String {
        format!("{:?}{}", self.kind, self.k)
    }
}

/// Push word for a generator of the given kind and index.
pub fn generator_word(kind: GeneratorKind, k: usize) -> PushSequence {
    use Direction::*;
    let mut s = PushSequence::new();
    match kind {
        GeneratorKind::A => {
            s.push_n(Right, k + 1);
            s.0.extend([Up, Left, Down]);
            s.push_n(Left, k);
        }
        GeneratorKind::B => {
            s.push_n(Up, k + 1);
            s.0.extend([Right, Down, Left]);
            s.push_n(Down, k);
        }
        GeneratorKind::C => {
            s.push_n(Right, k);
            s.0.extend([Up, Right, Down]);
            s.push_n(Left, k + 1);
        }
    }
    s
}

/// Type-A words for `k < a''`, type-B for `k < b''`, type-C for `k < a''`,
/// each checked to return to the starting shape, with its permutation and an
/// inverse word.
pub fn generator_sequences(k: &Configuration) -> Result<Vec<Generator>> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    let g = core_geometry(k)?;
    let plan = [
        (GeneratorKind::A, g.a_rest),
        (GeneratorKind::B, g.b_rest),
        (GeneratorKind::C, g.a_rest),
    ];
    let mut out = Vec::new();
    for (kind, count) in plan {
        for i in 0..count {
            let word = generator_word(kind, i);
            let after = k.apply(&word);
            let permutation = permutation_between(k, &after)?;
            let inverse_word = invert_sequence(k, &word)?;
            out.push(Generator {
                kind,
                k: i,
                word,
                inverse_word,
                permutation,
            });
        }
    }
    Ok(out)
}

/// One generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// A product of generators, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letter(l: Letter) -> Self {
        Self(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// Concatenation with adjacent `g g^-1` pairs cancelled.
    pub fn then(&self, other: &Word) -> Self {
        let mut out = self.0.clone();
        for &l in &other.0 {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self(out)
    }

    pub fn evaluate(&self, gens: &[Generator], degree: usize) -> Permutation {
        self.0.iter().fold(Permutation::identity(degree), |acc, l| {
            let g = &gens[l.generator].permutation;
            if l.inverse {
                acc.then(&g.inverse())
            } else {
                acc.then(g)
            }
        })
    }

    pub fn to_pushes(&self, gens: &[Generator]) -> PushSequence {
        let mut s = PushSequence::new();
        for l in &self.0 {
            let g = &gens[l.generator];
            s.extend_from(if l.inverse { &g.inverse_word } else { &g.word });
        }
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", l.generator)?;
            if l.inverse {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}
