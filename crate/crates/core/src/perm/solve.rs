use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::group::{GroupClass, ShapeGroup};
use super::permutation::{Parity, Permutation};
use super::{reading_order, Unsolvable, Verdict};
use crate::compact::{canonical_form, invert_sequence, shape_of, CanonicalShape};
use crate::error::{Error, Result};
use crate::grid::{Configuration, PushSequence};

/// Shape groups are expensive to set up, so they are shared per shape.
pub fn shape_group(shape: &CanonicalShape) -> Result<Arc<ShapeGroup>> {
    static CACHE: OnceLock<Mutex<HashMap<CanonicalShape, Arc<ShapeGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(shape) {
        return Ok(g.clone());
    }
    let g = Arc::new(ShapeGroup::new(shape)?);
    let mut map = cache.lock().unwrap();
    if map.len() >= 256 {
        map.clear();
    }
    Ok(map.entry(shape.clone()).or_insert(g).clone())
}

struct Plan {
    group: Arc<ShapeGroup>,
    to_start_canon: PushSequence,
    goal: Configuration,
    goal_canon_seq: PushSequence,
    target: Permutation,
}

fn labels_by_index(k: &Configuration) -> Vec<char> {
    reading_order(k).into_iter().map(|(x, y)| k.label_at(x, y).unwrap()).collect()
}

fn sorted(mut v: Vec<char>) -> Vec<char> {
    v.sort_unstable();
    v
}

/// Does `p` carry the labels `from` onto `to` (token at place `i` ends at
/// place `p(i)`)?
fn carries(p: &Permutation, from: &[char], to: &[char]) -> bool {
    from.iter().enumerate().all(|(i, &l)| to[p.apply(i)] == l)
}

fn plan(start: &Configuration, goal: &Configuration) -> std::result::Result<Plan, Unsolvable> {
    let (k, to_start_canon) = canonical_form(start).map_err(|_| Unsolvable::NotCompact)?;
    let (k2, goal_canon_seq) = canonical_form(goal).map_err(|_| Unsolvable::NotCompact)?;
    if !k.same_shape(&k2) {
        return Err(Unsolvable::ShapeMismatch);
    }
    let group = shape_group(&shape_of(&k).map_err(|_| Unsolvable::NotCompact)?).map_err(|_| Unsolvable::NotCompact)?;
    let from = labels_by_index(&k);
    let to = labels_by_index(&k2);
    if group.core_indices().iter().any(|&i| from[i] != to[i]) {
        return Err(Unsolvable::CoreMismatch);
    }
    if sorted(from.clone()) != sorted(to.clone()) {
        return Err(Unsolvable::LabelMismatch);
    }
    let n = from.len();
    let target = match group.class() {
        GroupClass::Trivial => {
            if from != to {
                return Err(Unsolvable::NotInGroup);
            }
            Permutation::identity(n)
        }
        GroupClass::Cyclic { order, generator } => (0..*order)
            .map(|j| generator.pow(j))
            .find(|p| carries(p, &from, &to))
            .ok_or(Unsolvable::NotInGroup)?,
        GroupClass::AltFiveSpecial { elements } => {
            elements.iter().find(|p| carries(p, &from, &to)).cloned().ok_or(Unsolvable::NotInGroup)?
        }
        GroupClass::AlternatingNonCore { .. } => even_matching(&from, &to, group.core_indices())?,
    };
    Ok(Plan {
        group,
        to_start_canon,
        goal: goal.clone(),
        goal_canon_seq,
        target,
    })
}

/// A permutation carrying `from` onto `to` that fixes `core`, made even by
/// swapping two equally labeled tokens when needed.
fn even_matching(from: &[char], to: &[char], core: &[usize]) -> std::result::Result<Permutation, Unsolvable> {
    let n = from.len();
    let mut free: HashMap<char, Vec<usize>> = HashMap::new();
    for i in (0..n).rev().filter(|i| !core.contains(i)) {
        free.entry(to[i]).or_default().push(i);
    }
    let mut images = vec![0; n];
    for i in 0..n {
        images[i] = if core.contains(&i) {
            i
        } else {
            free.get_mut(&from[i]).and_then(|v| v.pop()).ok_or(Unsolvable::LabelMismatch)?
        };
    }
    let mut p = Permutation::from_images(images.clone()).expect("matching is a bijection");
    if p.parity() == Parity::Odd {
        let twin = (0..n)
            .filter(|i| !core.contains(i))
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !core.contains(&j) && from[i] == from[j])
            .ok_or(Unsolvable::OddPermutation)?;
        images.swap(twin.0, twin.1);
        p = Permutation::from_images(images).expect("swap keeps a bijection");
    }
    Ok(p)
}

pub fn is_solvable(start: &Configuration, goal: &Configuration) -> Verdict {
    match plan(start, goal) {
        Ok(p) if p.group.contains(&p.target) => Verdict::YES,
        Ok(_) => Verdict::no(Unsolvable::NotInGroup),
        Err(r) => Verdict::no(r),
    }
}

/// Pushes taking `start` to a configuration label-equal to `goal`. The
/// result is always checked by simulation before it is returned.
pub fn solve_permutation(start: &Configuration, goal: &Configuration) -> Result<PushSequence> {
    let plan = plan(start, goal).map_err(Error::Unsolvable)?;
    let middle = plan
        .group
        .pushes_for(&plan.target)
        .ok_or(Error::Unsolvable(Unsolvable::NotInGroup))?;
    let back = invert_sequence(&plan.goal, &plan.goal_canon_seq)?;
    let s = plan.to_start_canon.then(&middle).then(&back);
    if !start.apply(&s).label_equal(&plan.goal) {
        return Err(Error::Verification(format!("sequence {s} does not reach the goal")));
    }
    Ok(s)
}
