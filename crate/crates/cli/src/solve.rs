//! Goal handling shared by the command line and the service, so that
//! anything `solve` returns also passes `verify`.

use std::time::Duration;

use linepush::compaction::{brute_force_search, solve_box, BoxOutcome, BoxSpec, Budget, SearchOutcome};
use linepush::perm::{core_geometry, is_solvable, solve_permutation, Unsolvable};
use linepush::{canonical_form, is_compact, Configuration, Error, PushSequence};
use num_bigint::BigUint;
use serde::Serialize;

/// What counts as reaching a goal grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Any full rectangle of this size. Used when the goal is a box whose
    /// tokens all carry one label.
    Box(BoxSpec),
    /// A configuration label-equal to this one.
    Labels(Configuration),
}

impl Target {
    pub fn of(goal: &Configuration) -> Self {
        let labels = goal.labels();
        if goal.is_box() && labels.iter().all(|&l| l == labels[0]) {
            Target::Box(BoxSpec {
                a: goal.width(),
                b: goal.height(),
            })
        } else {
            Target::Labels(goal.clone())
        }
    }

    pub fn reached(&self, c: &Configuration) -> bool {
        match self {
            Target::Box(spec) => spec.matches(c),
            Target::Labels(goal) => c.label_equal(goal),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Solved(PushSequence),
    /// No push sequence reaches the goal; the string is a stable reason code.
    Unsolvable(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// Start and goal do not form a puzzle at all.
    Invalid(String),
    /// The search ran out of states or time.
    Budget(String),
    Engine(Error),
}

impl std::fmt::Display for SolveError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveError::Invalid(m) => write!(f, "invalid instance: {m}"),
            SolveError::Budget(m) => write!(f, "budget exceeded: {m}"),
            SolveError::Engine(e) => write!(f, "{e}"),
        }
    }
}

pub const REFUTED: &str = "refuted";

fn search(start: &Configuration, target: &Target, budget: Budget) -> Result<Outcome, SolveError> {
    let labels_matter = matches!(target, Target::Labels(_));
    match brute_force_search(start, |c| target.reached(c), budget, labels_matter) {
        SearchOutcome::Found(s) => Ok(Outcome::Solved(s)),
        SearchOutcome::Refuted { .. } => Ok(Outcome::Unsolvable(REFUTED)),
        SearchOutcome::Exhausted { states, depth } => {
            Err(SolveError::Budget(format!("{states} states searched, no solution up to depth {depth}")))
        }
    }
}

/// Finds pushes from `start` to `goal`. Compact permutation instances are
/// decided exactly; sparse starts aimed at a tractable box use the
/// constructive procedure; everything else falls back to breadth-first search
/// within `budget`.
pub fn solve(start: &Configuration, goal: &Configuration, budget: Budget) -> Result<Outcome, SolveError> {
    if start.len() != goal.len() {
        return Err(SolveError::Invalid(format!(
            "start has {} tokens, goal has {}",
            start.len(),
            goal.len()
        )));
    }
    let target = Target::of(goal);
    if target.reached(start) {
        return Ok(Outcome::Solved(PushSequence::new()));
    }
    let found = match &target {
        Target::Box(spec) if start.is_sparse() && spec.always_solvable() => {
            match solve_box(start, *spec).map_err(SolveError::Engine)? {
                BoxOutcome::Found(s) => Outcome::Solved(s),
                _ => search(start, &target, budget)?,
            }
        }
        Target::Labels(goal) if is_compact(start) => {
            let v = is_solvable(start, goal);
            match v.reason {
                None => Outcome::Solved(solve_permutation(start, goal).map_err(SolveError::Engine)?),
                Some(r @ (Unsolvable::OddPermutation | Unsolvable::NotInGroup)) => Outcome::Unsolvable(r.code()),
                // a compact start never leaves its shape class
                Some(Unsolvable::NotCompact | Unsolvable::ShapeMismatch) => Outcome::Unsolvable(Unsolvable::ShapeMismatch.code()),
                Some(r) => return Err(SolveError::Invalid(r.to_string())),
            }
        }
        _ => search(start, &target, budget)?,
    };
    if let Outcome::Solved(s) = &found {
        if !target.reached(&start.apply(s)) {
            return Err(SolveError::Engine(Error::Verification(format!("{s} does not reach the goal"))));
        }
    }
    Ok(found)
}

pub fn verify(start: &Configuration, moves: &PushSequence, goal: &Configuration) -> bool {
    Target::of(goal).reached(&start.apply(moves))
}

pub fn budget(max_states: usize, time: Option<Duration>) -> Budget {
    Budget {
        max_states,
        max_depth: None,
        max_time: time,
    }
}

/// Shape and group data for a compact configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub a: usize,
    pub b: usize,
    pub a_full: usize,
    pub b_full: usize,
    pub core_cells: usize,
    pub class: &'static str,
    /// Exact group order in decimal; it outgrows every machine integer
    /// quickly.
    pub order: String,
}

pub fn classify(c: &Configuration) -> linepush::Result<Classification> {
    use linepush::perm::GroupClass;
    let (k, _) = canonical_form(c)?;
    let g = core_geometry(&k)?;
    let class = linepush::perm::classify(&k)?;
    let order = match &class {
        GroupClass::AlternatingNonCore { non_core } => {
            let m = non_core.len() as u32;
            if m < 2 {
                BigUint::from(1u32)
            } else {
                (3..=m).map(BigUint::from).product()
            }
        }
        other => BigUint::from(other.order()),
    };
    Ok(Classification {
        a: g.a,
        b: g.b,
        a_full: g.a_full,
        b_full: g.b_full,
        core_cells: g.core_cells.len(),
        class: class.name(),
        order: order.to_string(),
    })
}
