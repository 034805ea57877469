//! Compact and canonical configurations.
//!
//! Compact configurations are the ones reachable from a staircase by pushes.
//! They keep their bounding box forever, every push on them can be undone,
//! and each class of compatible configurations has exactly one canonical
//! (bottom-left justified) representative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction, PushSequence};

/// Label alphabet used when materializing shapes with distinct labels.
pub const ALPHABET: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

/// Column lengths of a staircase, left to right. Non-increasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalShape {
    columns: Vec<usize>,
}

impl CanonicalShape {
    pub fn new(columns: Vec<usize>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidPartition("no columns".into()));
        }
        if columns.contains(&0) {
            return Err(Error::InvalidPartition("zero-length column".into()));
        }
        if columns.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{columns:?} is not non-increasing")));
        }
        Ok(Self { columns })
    }

    /// Shape with the given row lengths, in any order; the longest row ends up
    /// at the bottom.
    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        let mut rows = rows.to_vec();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(rows.clone())?;
        Ok(Self { columns: conjugate(&rows) })
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// Row lengths, bottom row first.
    pub fn rows(&self) -> Vec<usize> {
        conjugate(&self.columns)
    }

    pub fn token_count(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn height(&self) -> usize {
        self.columns[0]
    }

    pub fn empty_cells(&self) -> usize {
        self.width() * self.height() - self.token_count()
    }

    /// The staircase with every token labeled `label`.
    pub fn unlabeled(&self, label: char) -> Configuration {
        Configuration::from_tokens(self.cells().map(|p| (p, label))).expect("non-empty shape")
    }

    /// The staircase with distinct labels and token ids in reading order
    /// (top row first, left to right), so token `i` sits at position index `i`.
    /// Shapes with more than 62 tokens reuse labels.
    pub fn labeled(&self) -> Configuration {
        let alphabet: Vec<char> = ALPHABET.chars().collect();
        let rows = self.rows();
        let mut tokens = Vec::with_capacity(self.token_count());
        for y in (0..rows.len()).rev() {
            for x in 0..rows[y] {
                let label = alphabet[tokens.len() % alphabet.len()];
                tokens.push(((x as i64, y as i64), label));
            }
        }
        Configuration::from_tokens(tokens).expect("non-empty shape")
    }

    fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(x, &len)| (0..len).map(move |y| (x as i64, y as i64)))
    }

    /// Every shape with `n` tokens, in reverse lexicographic order of columns.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_into(n, n, &mut current, &mut out);
        out.into_iter().map(|columns| Self { columns }).collect()
    }
}

impl fmt::Display for CanonicalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| r.to_string()).collect();
        write!(f, "rows({})", rows.join(","))
    }
}

fn partitions_into(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=rest.min(max)).rev() {
        current.push(part);
        partitions_into(rest - part, part, current, out);
        current.pop();
    }
}

fn conjugate(parts: &[usize]) -> Vec<usize> {
    let longest = parts.iter().copied().max().unwrap_or(0);
    (1..=longest).map(|k| parts.iter().filter(|&&p| p >= k).count()).collect()
}

/// Occupied interval of each row (bottom first) or column (left first);
/// `None` if the line is empty or has a gap.
fn intervals(c: &Configuration, rows: bool) -> Vec<Option<(usize, usize)>> {
    let (lines, len) = if rows { (c.height(), c.width()) } else { (c.width(), c.height()) };
    (0..lines)
        .map(|line| {
            let full = |k: usize| if rows { c.is_full(k, line) } else { c.is_full(line, k) };
            let first = (0..len).find(|&k| full(k))?;
            let last = (0..len).rev().find(|&k| full(k))?;
            (first..=last).all(full).then_some((first, last))
        })
        .collect()
}

fn nested(ivs: &[Option<(usize, usize)>]) -> bool {
    let Some(ivs) = ivs.iter().copied().collect::<Option<Vec<_>>>() else {
        return false;
    };
    ivs.iter().all(|&(s, e)| {
        ivs.iter()
            .filter(|&&(s2, e2)| e2 - s2 >= e - s)
            .all(|&(s2, e2)| s2 <= s && e <= e2)
    })
}

/// Every row and column is one contiguous run, and the run of any line lies
/// within the run of every line at least as long.
pub fn is_compact(c: &Configuration) -> bool {
    nested(&intervals(c, true)) && nested(&intervals(c, false))
}

/// Neither a down nor a left push changes anything.
pub fn is_canonical(c: &Configuration) -> bool {
    c.push(Direction::Down) == *c && c.push(Direction::Left) == *c
}

/// Pushes down and left alternately (down first) until two consecutive
/// pushes change nothing. Returns the fixpoint and the pushes applied, with
/// trailing no-ops removed.
pub fn canonicalize(c: &Configuration) -> (Configuration, PushSequence) {
    let mut current = c.clone();
    let mut seq = PushSequence::new();
    let mut effective_len = 0;
    let mut idle = 0;
    let limit = 2 * c.len() * (c.width() + c.height()) + 4;
    let mut d = Direction::Down;
    while idle < 2 {
        assert!(seq.len() <= limit, "canonicalize failed to terminate");
        let next = current.push(d);
        seq.push(d);
        if next == current {
            idle += 1;
        } else {
            idle = 0;
            effective_len = seq.len();
            current = next;
        }
        d = if d == Direction::Down { Direction::Left } else { Direction::Down };
    }
    seq.0.truncate(effective_len);
    (current, seq)
}

/// Down pushes to a fixpoint, then left pushes to a fixpoint. The result is
/// the labeled canonical form of a compact configuration.
pub fn canonical_form(c: &Configuration) -> Result<(Configuration, PushSequence)> {
    if !is_compact(c) {
        return Err(Error::NotCompact);
    }
    let mut seq = PushSequence::new();
    let mut current = c.clone();
    for d in [Direction::Down, Direction::Left] {
        loop {
            let next = current.push(d);
            if next == current {
                break;
            }
            seq.push(d);
            current = next;
        }
    }
    debug_assert!(is_canonical(&current));
    Ok((current, seq))
}

/// Shape of the canonical configuration compatible with a compact `c`.
pub fn shape_of(c: &Configuration) -> Result<CanonicalShape> {
    if !is_compact(c) {
        return Err(Error::NotCompact);
    }
    let mut cols: Vec<usize> = (0..c.width()).map(|x| c.column_count(x)).collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CanonicalShape { columns: cols })
}

/// Same multiset of row lengths and of column lengths.
pub fn compatible(a: &Configuration, b: &Configuration) -> Result<bool> {
    if !is_compact(a) || !is_compact(b) {
        return Err(Error::NotCompact);
    }
    let lengths = |c: &Configuration| {
        let mut rows: Vec<usize> = (0..c.height()).map(|y| c.row_count(y)).collect();
        let mut cols: Vec<usize> = (0..c.width()).map(|x| c.column_count(x)).collect();
        rows.sort_unstable();
        cols.sort_unstable();
        (rows, cols)
    };
    Ok(lengths(a) == lengths(b))
}

/// Distance of a cell from the `d` side of the box, and the index of the line
/// parallel to `d` that contains it.
fn depth_and_line(c: &Configuration, d: Direction, x: usize, y: usize) -> (usize, usize) {
    match d {
        Direction::Left => (x, y),
        Direction::Right => (c.width() - 1 - x, y),
        Direction::Down => (y, x),
        Direction::Up => (c.height() - 1 - y, x),
    }
}

/// Guess for the number of opposite pushes: bring the opposite side of the
/// box in to the farthest cross-line that is full on every line touching the
/// `d` side.
fn analytic_k(c: &Configuration, d: Direction) -> usize {
    let extent = if d.is_horizontal() { c.width() } else { c.height() };
    let cells: Vec<(usize, usize)> = c.tokens().map(|((x, y), _)| depth_and_line(c, d, x, y)).collect();
    let touching: Vec<usize> = cells.iter().filter(|(depth, _)| *depth == 0).map(|&(_, line)| line).collect();
    let farthest = (1..extent)
        .filter(|&depth| touching.iter().all(|&line| cells.contains(&(depth, line))))
        .max();
    match farthest {
        Some(v) => (extent - 1 - v).max(1),
        None => 1,
    }
}

/// A sequence `s` with `push(c, d).apply(s) == c`, exactly (positions and
/// token ids). Tries the analytic reversal first and falls back to scanning
/// every repetition count; every candidate is checked by simulation.
pub fn invert_push(c: &Configuration, d: Direction) -> Result<PushSequence> {
    if !is_compact(c) {
        return Err(Error::NotCompact);
    }
    let pushed = c.push(d);
    if pushed == *c {
        return Ok(PushSequence::new());
    }
    let candidate = |k: usize| {
        let mut s = PushSequence::repeat(d.opposite(), k);
        s.push_n(d, k - 1);
        s
    };
    let guess = analytic_k(c, d);
    let extent = c.width().max(c.height()) + 1;
    std::iter::once(guess)
        .chain((1..=extent).filter(|&k| k != guess))
        .map(candidate)
        .find(|s| pushed.apply(s) == *c)
        .ok_or_else(|| Error::Verification(format!("no inverse found for push {d} on\n{c}")))
}

/// Inverse of a whole sequence: undo the pushes one at a time, last first.
pub fn invert_sequence(c: &Configuration, s: &PushSequence) -> Result<PushSequence> {
    if !is_compact(c) {
        return Err(Error::NotCompact);
    }
    let trace = c.apply_traced(s);
    let mut out = PushSequence::new();
    for (i, d) in s.iter().enumerate().rev() {
        out.extend_from(&invert_push(&trace[i], d)?);
    }
    debug_assert_eq!(trace.last().unwrap().apply(&out), *c);
    Ok(out)
}
