//! Labeled token configurations on the square lattice and the line-push move.
//!
//! A configuration is stored translated so that its bounding box starts at
//! `(0, 0)`, with `y` growing upwards. A push in direction `d` lets every
//! token fall one unit toward `d` inside the bounding box: along each line
//! parallel to `d`, every token beyond the first empty cell (counted from the
//! `d` side) moves one step. This is the cascade of the sweep definition,
//! where a vacated cell is refilled within the same push.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Left,
    Right,
    Up,
    Down,
}

impl Direction {
    /// In the tie-breaking order used by searches: L < R < U < D.
    pub const ALL: [Direction; 4] = [Direction::Left, Direction::Right, Direction::Up, Direction::Down];

    pub fn opposite(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }

    /// Quarter turn clockwise.
    pub fn rotate_cw(self) -> Self {
        match self {
            Direction::Left => Direction::Up,
            Direction::Up => Direction::Right,
            Direction::Right => Direction::Down,
            Direction::Down => Direction::Left,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Direction::Left | Direction::Right)
    }

    pub fn letter(self) -> char {
        match self {
            Direction::Left => 'L',
            Direction::Right => 'R',
            Direction::Up => 'U',
            Direction::Down => 'D',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        match ch {
            'L' => Some(Direction::Left),
            'R' => Some(Direction::Right),
            'U' => Some(Direction::Up),
            'D' => Some(Direction::Down),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An ordered list of pushes. Text form is a string over `LRUD`; whitespace
/// is ignored when parsing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PushSequence(pub Vec<Direction>);

impl PushSequence {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn repeat(d: Direction, k: usize) -> Self {
        Self(vec![d; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Direction> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, d: Direction) {
        self.0.push(d);
    }

    pub fn push_n(&mut self, d: Direction, k: usize) {
        self.0.extend(std::iter::repeat_n(d, k));
    }

    pub fn extend_from(&mut self, other: &PushSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn then(mut self, other: &PushSequence) -> Self {
        self.extend_from(other);
        self
    }
}

impl FromStr for PushSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::with_capacity(s.len());
        for (offset, ch) in s.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            match Direction::from_letter(ch) {
                Some(d) => out.push(d),
                None => return Err(Error::BadMove { ch, offset }),
            }
        }
        Ok(Self(out))
    }
}

impl fmt::Display for PushSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{}", d.letter())?;
        }
        Ok(())
    }
}

impl Serialize for PushSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromIterator<Direction> for PushSequence {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenId(pub u32);

impl TokenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A normalized placement of tokens. Token ids are dense (`0..len`) and never
/// change under pushes; labels are looked up by id and may repeat.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    width: usize,
    height: usize,
    // row-major, row 0 is the bottom row
    cells: Vec<Option<TokenId>>,
    labels: Arc<[char]>,
}

impl Configuration {
    /// Builds a configuration from arbitrary integer positions. Token ids are
    /// assigned in iteration order.
    pub fn from_tokens<I>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((i64, i64), char)>,
    {
        let tokens: Vec<_> = tokens.into_iter().collect();
        if tokens.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let min_x = tokens.iter().map(|t| t.0 .0).min().unwrap();
        let min_y = tokens.iter().map(|t| t.0 .1).min().unwrap();
        let max_x = tokens.iter().map(|t| t.0 .0).max().unwrap();
        let max_y = tokens.iter().map(|t| t.0 .1).max().unwrap();
        let width = (max_x - min_x + 1) as usize;
        let height = (max_y - min_y + 1) as usize;
        let mut cells = vec![None; width * height];
        let mut labels = Vec::with_capacity(tokens.len());
        for (id, &((x, y), label)) in tokens.iter().enumerate() {
            let i = (y - min_y) as usize * width + (x - min_x) as usize;
            if cells[i].is_some() {
                return Err(Error::Collision { x, y });
            }
            cells[i] = Some(TokenId(id as u32));
            labels.push(label);
        }
        Ok(Self {
            width,
            height,
            cells,
            labels: labels.into(),
        })
    }

    /// Builds from positions, with every token carrying `label`.
    pub fn unlabeled<I>(positions: I, label: char) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_tokens(positions.into_iter().map(|p| (p, label)))
    }

    /// Rebuilds from a dense cell grid, cropping empty border lines.
    pub(crate) fn from_cells(width: usize, height: usize, cells: Vec<Option<TokenId>>, labels: Arc<[char]>) -> Self {
        let mut c = Self {
            width,
            height,
            cells,
            labels,
        };
        c.crop();
        c
    }

    fn crop(&mut self) {
        let (w, h) = (self.width, self.height);
        let occupied = |x: usize, y: usize| self.cells[y * w + x].is_some();
        let col_used = |x: usize| (0..h).any(|y| occupied(x, y));
        let row_used = |y: usize| (0..w).any(|x| occupied(x, y));
        let x0 = (0..w).find(|&x| col_used(x)).expect("configuration has tokens");
        let x1 = (0..w).rev().find(|&x| col_used(x)).unwrap();
        let y0 = (0..h).find(|&y| row_used(y)).unwrap();
        let y1 = (0..h).rev().find(|&y| row_used(y)).unwrap();
        if x0 == 0 && y0 == 0 && x1 == w - 1 && y1 == h - 1 {
            return;
        }
        let nw = x1 - x0 + 1;
        let nh = y1 - y0 + 1;
        let mut cells = Vec::with_capacity(nw * nh);
        for y in y0..=y1 {
            cells.extend_from_slice(&self.cells[y * w + x0..=y * w + x1]);
        }
        self.width = nw;
        self.height = nh;
        self.cells = cells;
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// Number of tokens.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, x: usize, y: usize) -> Option<TokenId> {
        if x < self.width && y < self.height {
            self.cells[y * self.width + x]
        } else {
            None
        }
    }

    pub fn is_full(&self, x: usize, y: usize) -> bool {
        self.get(x, y).is_some()
    }

    pub fn label(&self, id: TokenId) -> char {
        self.labels[id.index()]
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn label_at(&self, x: usize, y: usize) -> Option<char> {
        self.get(x, y).map(|id| self.label(id))
    }

    pub(crate) fn cells(&self) -> &[Option<TokenId>] {
        &self.cells
    }

    /// All tokens with their positions, in row-major order from the bottom.
    pub fn tokens(&self) -> impl Iterator<Item = ((usize, usize), TokenId)> + '_ {
        let w = self.width;
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(i, c)| c.map(|id| ((i % w, i / w), id)))
    }

    /// Position of every token, indexed by token id.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.len()];
        for (p, id) in self.tokens() {
            out[id.index()] = p;
        }
        out
    }

    pub fn row_count(&self, y: usize) -> usize {
        (0..self.width).filter(|&x| self.is_full(x, y)).count()
    }

    pub fn column_count(&self, x: usize) -> usize {
        (0..self.height).filter(|&y| self.is_full(x, y)).count()
    }

    /// Same set of full positions (labels and ids ignored).
    pub fn same_shape(&self, other: &Self) -> bool {
        self.width == other.width
            && self.height == other.height
            && self.cells.iter().zip(&other.cells).all(|(a, b)| a.is_some() == b.is_some())
    }

    /// Same shape and the same label at every full position.
    pub fn label_equal(&self, other: &Self) -> bool {
        self.same_shape(other)
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| a.map(|id| self.label(id)) == b.map(|id| other.label(id)))
    }

    /// Same labels per token id, new label vector.
    pub fn with_labels(&self, labels: Vec<char>) -> Self {
        assert_eq!(labels.len(), self.len(), "label count must match token count");
        Self {
            labels: labels.into(),
            ..self.clone()
        }
    }

    /// Relabels so that the label at every full position matches `by_position`
    /// (row-major from the bottom, full positions only).
    pub fn with_position_labels(&self, by_position: &[char]) -> Self {
        let mut labels = vec!['#'; self.len()];
        for (k, (_, id)) in self.tokens().enumerate() {
            labels[id.index()] = by_position[k];
        }
        self.with_labels(labels)
    }

    /// Reassigns token ids in row-major order from the bottom, keeping labels.
    pub fn renumbered(&self) -> Self {
        let mut cells = vec![None; self.cells.len()];
        let mut labels = Vec::with_capacity(self.len());
        let mut next = 0u32;
        for (i, c) in self.cells.iter().enumerate() {
            if let Some(id) = c {
                cells[i] = Some(TokenId(next));
                labels.push(self.label(*id));
                next += 1;
            }
        }
        Self {
            width: self.width,
            height: self.height,
            cells,
            labels: labels.into(),
        }
    }

    pub fn push(&self, d: Direction) -> Self {
        let (w, h) = (self.width, self.height);
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
            if let Some(gap) = (0..len).find(|&k| cells[at(k)].is_none()) {
                for k in gap..len - 1 {
                    cells[at(k)] = cells[at(k + 1)];
                }
                cells[at(len - 1)] = None;
            }
        }
        Self::from_cells(w, h, cells, self.labels.clone())
    }

    pub fn apply(&self, seq: &PushSequence) -> Self {
        seq.iter().fold(self.clone(), |c, d| c.push(d))
    }

    /// Every intermediate configuration, starting with `self` and ending with
    /// the final one (`seq.len() + 1` entries).
    pub fn apply_traced(&self, seq: &PushSequence) -> Vec<Self> {
        let mut trace = Vec::with_capacity(seq.len() + 1);
        trace.push(self.clone());
        for d in seq.iter() {
            let next = trace.last().unwrap().push(d);
            trace.push(next);
        }
        trace
    }

    /// Every cell of the bounding box is full.
    pub fn is_box(&self) -> bool {
        self.len() == self.area()
    }

    /// No row and no column holds more than one token.
    pub fn is_sparse(&self) -> bool {
        (0..self.height).all(|y| self.row_count(y) <= 1) && (0..self.width).all(|x| self.column_count(x) <= 1)
    }

    /// Some push can shrink the bounding box. Incompressible exactly when the
    /// box has a full row and a full column.
    pub fn is_compressible(&self) -> bool {
        let full_row = (0..self.height).any(|y| self.row_count(y) == self.width);
        let full_col = (0..self.width).any(|x| self.column_count(x) == self.height);
        !(full_row && full_col)
    }

    pub fn parse_grid(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
        let height = lines.len() as i64;
        let mut tokens = Vec::new();
        for (row, line) in lines.iter().enumerate() {
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    '.' => {}
                    '#' | 'A'..='Z' | 'a'..='z' | '0'..='9' => {
                        tokens.push(((col as i64, height - 1 - row as i64), ch));
                    }
                    _ => {
                        return Err(Error::IllegalChar {
                            line: row + 1,
                            column: col + 1,
                            ch,
                        })
                    }
                }
            }
        }
        if tokens.is_empty() {
            return Err(Error::EmptyGrid);
        }
        Self::from_tokens(tokens)
    }

    /// Rows top to bottom joined by `\n`, no trailing newline.
    pub fn format_grid(&self) -> String {
        let mut s = String::with_capacity((self.width + 1) * self.height);
        for y in (0..self.height).rev() {
            for x in 0..self.width {
                s.push(self.label_at(x, y).unwrap_or('.'));
            }
            if y > 0 {
                s.push('\n');
            }
        }
        s
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_grid(s)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_grid())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({}x{})\n{}", self.width, self.height, self.format_grid())
    }
}
