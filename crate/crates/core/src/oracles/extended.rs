use crate::compact::{is_canonical, is_compact};
use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction, TokenId};
use crate::perm::{permutation_between, Parity, Permutation};

/// A cell of the bounding box: a token, or an empty cell with its own name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    Full(TokenId),
    Empty(u32),
}

/// A compact configuration whose empty cells are labeled too. Pushes rotate
/// whole lines, so every cell (full or empty) keeps an identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedBoard {
    full: Configuration,
    cells: Vec<Mark>,
}

impl ExtendedBoard {
    /// Empty cells are numbered in reading order.
    pub fn new(c: &Configuration) -> Result<Self> {
        if !is_compact(c) {
            return Err(Error::NotCompact);
        }
        let (w, h) = (c.width(), c.height());
        let mut cells = vec![Mark::Empty(0); w * h];
        let mut next = 0;
        for y in (0..h).rev() {
            for x in 0..w {
                cells[y * w + x] = match c.get(x, y) {
                    Some(id) => Mark::Full(id),
                    None => {
                        next += 1;
                        Mark::Empty(next - 1)
                    }
                };
            }
        }
        Ok(Self { full: c.clone(), cells })
    }

    pub fn width(&self) -> usize {
        self.full.width()
    }

    pub fn height(&self) -> usize {
        self.full.height()
    }

    pub fn at(&self, x: usize, y: usize) -> Mark {
        self.cells[y * self.width() + x]
    }

    /// The tokens alone.
    pub fn configuration(&self) -> &Configuration {
        &self.full
    }

    pub fn empty_count(&self) -> usize {
        self.cells.len() - self.full.len()
    }

    /// Lines whose cell on the `d` side is empty rotate one step toward `d`;
    /// the others stay put. The tokens end up exactly where an ordinary push
    /// puts them, which is checked.
    pub fn push(&self, d: Direction) -> Result<Self> {
        let (w, h) = (self.width(), self.height());
        let mut cells = self.cells.clone();
        let (lines, len) = if d.is_horizontal() { (h, w) } else { (w, h) };
        for line in 0..lines {
            let at = |k: usize| -> usize {
                match d {
                    Direction::Left => line * w + k,
                    Direction::Right => line * w + (w - 1 - k),
                    Direction::Down => k * w + line,
                    Direction::Up => (h - 1 - k) * w + line,
                }
            };
            if let Mark::Empty(_) = cells[at(0)] {
                let first = cells[at(0)];
                for k in 0..len - 1 {
                    cells[at(k)] = cells[at(k + 1)];
                }
                cells[at(len - 1)] = first;
            }
        }
        let full = self.full.push(d);
        let agrees = full.width() == w
            && full.height() == h
            && (0..h).all(|y| {
                (0..w).all(|x| match cells[y * w + x] {
                    Mark::Full(id) => full.get(x, y) == Some(id),
                    Mark::Empty(_) => full.get(x, y).is_none(),
                })
            });
        if !agrees {
            return Err(Error::Verification(format!("labeled push {d} disagrees with the plain push")));
        }
        Ok(Self { full, cells })
    }

    fn item(&self, m: Mark) -> usize {
        match m {
            Mark::Full(id) => id.index(),
            Mark::Empty(e) => self.full.len() + e as usize,
        }
    }

    /// Permutation of all cells (in reading order) from `self` to `later`.
    pub fn permutation_to(&self, later: &Self) -> Result<Permutation> {
        if !self.full.same_shape(&later.full) {
            return Err(Error::ShapeChanged);
        }
        let (w, h) = (self.width(), self.height());
        let order: Vec<usize> = (0..h).rev().flat_map(|y| (0..w).map(move |x| y * w + x)).collect();
        let mut place_of = vec![0; self.cells.len()];
        for (p, &i) in order.iter().enumerate() {
            place_of[later.item(later.cells[i])] = p;
        }
        let images = order.iter().map(|&i| place_of[self.item(self.cells[i])]).collect();
        Ok(Permutation::from_images(images).expect("cells are a bijection"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedParity {
    /// Of the permutation of full and empty cells together.
    pub cells: Parity,
    /// Of the permutation of tokens only.
    pub tokens: Parity,
}

/// Parities of a push sequence that returns canonical `k` to its own shape.
pub fn closed_sequence_parity(k: &Configuration, s: &crate::grid::PushSequence) -> Result<ClosedParity> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    let start = ExtendedBoard::new(k)?;
    let mut board = start.clone();
    for d in s.iter() {
        board = board.push(d)?;
    }
    let cells = start.permutation_to(&board)?.parity();
    let tokens = permutation_between(k, board.configuration())?.parity();
    Ok(ClosedParity { cells, tokens })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::PushSequence;

    #[test]
    fn row_rotation() {
        let b = ExtendedBoard::new(&"AB.\nCDE".parse().unwrap()).unwrap();
        let top: Vec<Mark> = (0..3).map(|x| b.at(x, 1)).collect();
        let pushed = b.push(Direction::Right).unwrap();
        let got: Vec<Mark> = (0..3).map(|x| pushed.at(x, 1)).collect();
        assert_eq!(got, vec![top[2], top[0], top[1]]);
        assert_eq!(pushed.at(0, 1), Mark::Empty(0));
        assert_eq!(pushed.configuration().format_grid(), ".AB\nCDE");
    }

    #[test]
    fn full_right_end_stays() {
        let b = ExtendedBoard::new(&".AB\nCDE".parse().unwrap()).unwrap();
        assert_eq!(b.push(Direction::Right).unwrap(), b);
        let full = ExtendedBoard::new(&"AB\nCD".parse().unwrap()).unwrap();
        for d in Direction::ALL {
            assert_eq!(full.push(d).unwrap(), full);
        }
    }

    #[test]
    fn parities() {
        let k: Configuration = "AB.\nCDE".parse().unwrap();
        let p = closed_sequence_parity(&k, &PushSequence::new()).unwrap();
        assert_eq!((p.cells, p.tokens), (Parity::Even, Parity::Even));
        let p = closed_sequence_parity(&k, &"RULD".parse().unwrap()).unwrap();
        assert_eq!((p.cells, p.tokens), (Parity::Even, Parity::Even));
        assert_eq!(closed_sequence_parity(&k, &"R".parse().unwrap()), Err(Error::ShapeChanged));
        assert!(ExtendedBoard::new(&"A.\n.B".parse().unwrap()).is_err());
    }
}
