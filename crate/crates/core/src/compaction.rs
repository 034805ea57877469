//! Pushing scattered tokens together: into a given compact shape, or into a
//! full rectangle.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::compact::{canonical_form, shape_of, CanonicalShape};
use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction, PushSequence};

use Direction::{Down, Left, Right, Up};

/// `n` tokens on the main diagonal. Every compact shape with `n` tokens can
/// be reached from it.
pub fn diagonal_config(n: usize) -> Result<Configuration> {
    if n == 0 {
        return Err(Error::OutOfRange("diagonal needs at least one token".into()));
    }
    Configuration::unlabeled((0..n as i64).map(|i| (i, i)), '#')
}

/// Pushes that take [`diagonal_config`] to a configuration of the given
/// shape. Column `c` is built by pushing left until it is tall enough, then
/// the leftover diagonal is dropped until its lowest token sits on the floor
/// next to it.
pub fn realize_partition(n: usize, shape: &CanonicalShape) -> Result<PushSequence> {
    if shape.token_count() != n {
        return Err(Error::InvalidPartition(format!("{shape} does not have {n} tokens")));
    }
    let mut c = diagonal_config(n)?;
    let mut s = PushSequence::new();
    let mut step = |c: &mut Configuration, d: Direction| {
        *c = c.push(d);
        s.push(d);
    };
    let columns = shape.columns();
    for (col, &len) in columns.iter().enumerate() {
        let mut guard = 0;
        while c.column_count(col) < len {
            step(&mut c, Left);
            guard += 1;
            if guard > n {
                return Err(Error::Verification(format!("column {col} never reached length {len}")));
            }
        }
        if col + 1 == columns.len() {
            break;
        }
        guard = 0;
        while !c.is_full(col + 1, 0) {
            step(&mut c, Down);
            guard += 1;
            if guard > n {
                return Err(Error::Verification(format!("column {} never reached the floor", col + 1)));
            }
        }
    }
    let end = diagonal_config(n)?.apply(&s);
    match canonical_form(&end).ok().and_then(|(k, _)| shape_of(&k).ok()) {
        Some(got) if got == *shape => Ok(s),
        _ => Err(Error::Verification(format!("diagonal did not reach {shape}"))),
    }
}

/// The sparse configuration that cannot be pushed into an `a` by `b` box: one
/// diagonal in the upper left holding half the tokens, the other half on a
/// diagonal in the lower right.
pub fn counterexample(a: usize, b: usize) -> Result<Configuration> {
    if !((a >= 4 && b >= 3) || (a >= 3 && b >= 4)) {
        return Err(Error::OutOfRange(format!("no counterexample family for {a}x{b}")));
    }
    let n = (a * b) as i64;
    let n1 = n / 2;
    let n2 = n - n1;
    let upper = (0..n1).map(|i| (i, n2 + i));
    let lower = (0..n2).map(|j| (n1 + j, j));
    Configuration::unlabeled(upper.chain(lower), '#')
}

/// Target rectangle: `a` columns by `b` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub a: usize,
    pub b: usize,
}

impl BoxSpec {
    pub fn tokens(self) -> usize {
        self.a * self.b
    }

    /// Whether `c` is exactly this full rectangle.
    pub fn matches(self, c: &Configuration) -> bool {
        c.width() == self.a && c.height() == self.b && c.len() == self.tokens()
    }

    /// Every sparse configuration of the right size can be boxed.
    pub fn always_solvable(self) -> bool {
        self.a <= 2 || self.b <= 2 || (self.a == 3 && self.b == 3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxOutcome {
    Found(PushSequence),
    /// No constructive procedure exists for this box size.
    Unsupported,
    /// The procedure ran but its result did not check out.
    NoneFound,
}

/// Applies pushes while recording them, with a guard against runaway loops.
struct Driver {
    c: Configuration,
    s: PushSequence,
    limit: usize,
}

impl Driver {
    fn new(c: &Configuration) -> Self {
        let limit = 4 * (c.width() + c.height() + c.len());
        Self {
            c: c.clone(),
            s: PushSequence::new(),
            limit,
        }
    }

    fn until(&mut self, d: Direction, done: impl Fn(&Configuration) -> bool) -> Option<()> {
        let mut steps = 0;
        while !done(&self.c) {
            let next = self.c.push(d);
            if next == self.c || steps >= self.limit {
                return None;
            }
            self.c = next;
            self.s.push(d);
            steps += 1;
        }
        Some(())
    }
}

fn boundary_count(c: &Configuration, d: Direction) -> usize {
    match d {
        Left => c.column_count(0),
        Right => c.column_count(c.width() - 1),
        Down => c.row_count(0),
        Up => c.row_count(c.height() - 1),
    }
}

fn coordinate(c: &Configuration, id: crate::grid::TokenId, horizontal: bool) -> usize {
    let (x, y) = c.positions()[id.index()];
    if horizontal {
        x
    } else {
        y
    }
}

/// Gather half the tokens on the `gather` side, bring the rest against them,
/// then squeeze along the other axis. Target has extent 2 across `gather`.
fn two_lines(c: &Configuration, gather: Direction) -> Option<PushSequence> {
    let n = c.len();
    let half = n / 2;
    let mut dr = Driver::new(c);
    dr.until(gather, |c| boundary_count(c, gather) >= half)?;
    if boundary_count(&dr.c, gather) != half {
        return None;
    }
    let horizontal = gather.is_horizontal();
    let line = match gather {
        Right => dr.c.width() - 1,
        Up => dr.c.height() - 1,
        Left | Down => 0,
    };
    let (gathered, rest): (Vec<_>, Vec<_>) = dr
        .c
        .tokens()
        .partition(|&((x, y), _)| if horizontal { x == line } else { y == line });
    let gathered: Vec<_> = gathered.into_iter().map(|(_, id)| id).collect();
    let rest: Vec<_> = rest.into_iter().map(|(_, id)| id).collect();
    let back = gather.opposite();
    // the gathered line moves in lockstep; stop once the rest lie right next to it
    dr.until(back, |c| {
        let g = coordinate(c, gathered[0], horizontal);
        rest.iter().all(|&id| {
            let r = coordinate(c, id, horizontal);
            match gather {
                Right | Up => r + 1 == g,
                Left | Down => r == g + 1,
            }
        })
    })?;
    let squeeze = if horizontal { Down } else { Left };
    dr.until(squeeze, |c| c.is_box())?;
    Some(dr.s)
}

fn one_line(c: &Configuration, horizontal: bool) -> Option<PushSequence> {
    let mut dr = Driver::new(c);
    if horizontal {
        dr.until(Down, |c| c.height() == 1)?;
        dr.until(Left, |c| c.is_box())?;
    } else {
        dr.until(Left, |c| c.width() == 1)?;
        dr.until(Down, |c| c.is_box())?;
    }
    Some(dr.s)
}

fn three_by_three(c: &Configuration) -> Option<PushSequence> {
    let mut dr = Driver::new(c);
    dr.until(Left, |c| c.column_count(0) >= 3)?;
    dr.until(Right, |c| c.column_count(c.width() - 1) >= 3)?;
    let w = dr.c.width();
    let mut middle: Vec<_> = dr.c.tokens().filter(|&((x, _), _)| x > 0 && x + 1 < w).collect();
    if middle.len() != 3 {
        return None;
    }
    middle.sort_by_key(|&((_, y), _)| y);
    let t2 = middle[1].1;
    dr.until(Down, |c| c.positions()[t2.index()].1 == 1)?;
    dr.until(Up, |c| c.height() == c.positions()[t2.index()].1 + 2)?;
    dr.until(Left, |c| c.is_box())?;
    Some(dr.s)
}

/// Pushes that turn sparse `c` into the box `spec`, for the sizes where
/// that is always possible. Any sequence returned has been replayed and
/// checked, including that no intermediate line overflows the box.
pub fn solve_box(c: &Configuration, spec: BoxSpec) -> Result<BoxOutcome> {
    if !c.is_sparse() {
        return Err(Error::NotSparse);
    }
    if c.len() != spec.tokens() {
        return Err(Error::CountMismatch {
            expected: spec.tokens(),
            found: c.len(),
        });
    }
    let found = match (spec.a, spec.b) {
        (_, 1) => one_line(c, true),
        (1, _) => one_line(c, false),
        (_, 2) => two_lines(c, Up),
        (2, _) => two_lines(c, Right),
        (3, 3) => three_by_three(c),
        _ => return Ok(BoxOutcome::Unsupported),
    };
    let Some(s) = found else {
        return Ok(BoxOutcome::NoneFound);
    };
    let trace = c.apply_traced(&s);
    let overflow = trace.iter().any(|t| {
        (0..t.height()).any(|y| t.row_count(y) > spec.a) || (0..t.width()).any(|x| t.column_count(x) > spec.b)
    });
    if overflow || !spec.matches(trace.last().unwrap()) {
        return Ok(BoxOutcome::NoneFound);
    }
    Ok(BoxOutcome::Found(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_states: usize,
    pub max_depth: Option<usize>,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_states: 10_000_000,
            max_depth: None,
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A shortest witness; among equally short ones the first in L<R<U<D order.
    Found(PushSequence),
    /// Every reachable configuration was visited and none satisfies the goal.
    Refuted { states: usize },
    /// A budget ran out before the search finished.
    Exhausted { states: usize, depth: usize },
}

/// Occupancy (and, when labels matter, token ids) packed for hashing.
fn state_key(c: &Configuration, with_ids: bool) -> Box<[u64]> {
    let mut key = Vec::with_capacity(2 + c.area() / 64);
    key.push(((c.width() as u64) << 32) | c.height() as u64);
    if with_ids {
        key.extend(c.cells().iter().map(|t| t.map_or(0, |id| id.0 as u64 + 1)));
    } else {
        let mut word = 0u64;
        for (i, t) in c.cells().iter().enumerate() {
            if t.is_some() {
                word |= 1 << (i % 64);
            }
            if i % 64 == 63 {
                key.push(word);
                word = 0;
            }
        }
        key.push(word);
    }
    key.into_boxed_slice()
}

/// Breadth-first search over push sequences from `start`. States are
/// deduplicated by occupancy alone unless `labels_matter`.
pub fn brute_force_search(
    start: &Configuration,
    goal: impl Fn(&Configuration) -> bool,
    budget: Budget,
    labels_matter: bool,
) -> SearchOutcome {
    if goal(start) {
        return SearchOutcome::Found(PushSequence::new());
    }
    let began = Instant::now();
    let mut seen: HashMap<Box<[u64]>, ()> = HashMap::new();
    // parent index and the push that led here
    let mut parents: Vec<(u32, Direction)> = vec![(u32::MAX, Left)];
    seen.insert(state_key(start, labels_matter), ());
    let mut frontier = vec![(0u32, start.clone())];
    let mut depth = 0;
    let witness = |parents: &[(u32, Direction)], mut i: u32| {
        let mut s = Vec::new();
        while i != 0 {
            let (p, d) = parents[i as usize];
            s.push(d);
            i = p;
        }
        s.reverse();
        PushSequence(s)
    };
    while !frontier.is_empty() {
        if budget.max_depth.is_some_and(|m| depth >= m) {
            return SearchOutcome::Exhausted {
                states: parents.len(),
                depth,
            };
        }
        depth += 1;
        let mut next = Vec::new();
        for (idx, c) in &frontier {
            for d in Direction::ALL {
                let after = c.push(d);
                let key = state_key(&after, labels_matter);
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                parents.push((*idx, d));
                let here = (parents.len() - 1) as u32;
                if goal(&after) {
                    return SearchOutcome::Found(witness(&parents, here));
                }
                if parents.len() >= budget.max_states
                    || budget.max_time.is_some_and(|t| began.elapsed() > t)
                {
                    return SearchOutcome::Exhausted {
                        states: parents.len(),
                        depth,
                    };
                }
                next.push((here, after));
            }
        }
        frontier = next;
    }
    SearchOutcome::Refuted { states: parents.len() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(r: &[usize]) -> CanonicalShape {
        CanonicalShape::from_rows(r).unwrap()
    }

    #[test]
    fn diagonal() {
        assert_eq!(diagonal_config(1).unwrap().len(), 1);
        let d = diagonal_config(3).unwrap();
        assert_eq!(d.format_grid(), "..#\n.#.\n#..");
        assert!(d.is_sparse());
        let d = diagonal_config(6).unwrap();
        assert_eq!((d.width(), d.height(), d.len()), (6, 6, 6));
        assert!(diagonal_config(0).is_err());
    }

    #[test]
    fn small_partitions() {
        let s = realize_partition(3, &rows(&[3])).unwrap();
        assert_eq!(diagonal_config(3).unwrap().apply(&s).format_grid(), "###");
        let s = realize_partition(4, &rows(&[2, 2])).unwrap();
        assert_eq!(diagonal_config(4).unwrap().apply(&s).format_grid(), "##\n##");
        assert!(realize_partition(4, &rows(&[2, 1])).is_err());
    }

    #[test]
    fn every_partition_up_to_eight() {
        for n in 1..=8 {
            for shape in CanonicalShape::all(n) {
                realize_partition(n, &shape).unwrap();
            }
        }
    }

    #[test]
    fn counterexample_layout() {
        let c = counterexample(4, 3).unwrap();
        assert_eq!((c.len(), c.width(), c.height()), (12, 12, 12));
        assert!(c.is_sparse());
        let c = counterexample(5, 3).unwrap();
        assert_eq!(c.len(), 15);
        assert!(c.is_full(0, 8) && c.is_full(7, 0));
        assert!(counterexample(3, 3).is_err());
        assert!(counterexample(2, 5).is_err());
    }

    #[test]
    fn boxes_from_diagonals() {
        for (a, b) in [(1, 5), (5, 1), (2, 3), (3, 2), (2, 4), (4, 2), (2, 2), (3, 3), (2, 6)] {
            let c = diagonal_config(a * b).unwrap();
            match solve_box(&c, BoxSpec { a, b }).unwrap() {
                BoxOutcome::Found(s) => assert!(BoxSpec { a, b }.matches(&c.apply(&s))),
                other => panic!("{a}x{b}: {other:?}"),
            }
        }
    }

    #[test]
    fn box_preconditions() {
        let c = diagonal_config(12).unwrap();
        assert_eq!(solve_box(&c, BoxSpec { a: 4, b: 3 }).unwrap(), BoxOutcome::Unsupported);
        assert_eq!(
            solve_box(&c, BoxSpec { a: 3, b: 3 }),
            Err(Error::CountMismatch { expected: 9, found: 12 })
        );
        let dense: Configuration = "##".parse().unwrap();
        assert_eq!(solve_box(&dense, BoxSpec { a: 2, b: 1 }), Err(Error::NotSparse));
    }

    #[test]
    fn search_finds_short_witness() {
        let spec = BoxSpec { a: 2, b: 2 };
        match brute_force_search(&diagonal_config(4).unwrap(), |c| spec.matches(c), Budget::default(), false) {
            SearchOutcome::Found(s) => {
                assert!(spec.matches(&diagonal_config(4).unwrap().apply(&s)));
                assert!(s.len() <= 4);
            }
            other => panic!("{other:?}"),
        }
        let one: Configuration = "#".parse().unwrap();
        let spec = BoxSpec { a: 1, b: 1 };
        assert_eq!(
            brute_force_search(&one, |c| spec.matches(c), Budget::default(), false),
            SearchOutcome::Found(PushSequence::new())
        );
    }

    #[test]
    fn search_respects_budget() {
        let c = counterexample(4, 3).unwrap();
        let budget = Budget {
            max_states: 10,
            ..Budget::default()
        };
        assert!(matches!(
            brute_force_search(&c, |_| false, budget, false),
            SearchOutcome::Exhausted { .. }
        ));
    }
}
