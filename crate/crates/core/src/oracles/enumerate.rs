use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::compact::{is_canonical, shape_of};
use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction, PushSequence};
use crate::perm::{permutation_between, GroupClass, Permutation, ShapeGroup};

/// Every permutation reachable from a canonical configuration, found by
/// visiting every labeled configuration reachable from it.
#[derive(Debug, Clone)]
pub struct GroupEnumeration {
    /// Distinct permutations with a push sequence realizing each, in order
    /// of discovery (so the first witness of each is as short as possible).
    pub elements: Vec<(Permutation, PushSequence)>,
    /// Labeled configurations visited.
    pub states: usize,
    /// False if the state budget ran out first.
    pub complete: bool,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.iter().any(|(q, _)| q == p)
    }
}

pub fn enumerate_group(k: &Configuration, max_states: usize) -> Result<GroupEnumeration> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    let mut index: HashMap<Configuration, u32> = HashMap::new();
    let mut parents: Vec<(u32, Direction)> = vec![(u32::MAX, Direction::Left)];
    let mut elements = Vec::new();
    let mut found: HashSet<Permutation> = HashSet::new();
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
    let id = Permutation::identity(k.len());
    found.insert(id.clone());
    elements.push((id, PushSequence::new()));
    index.insert(k.clone(), 0);
    let mut queue = VecDeque::from([(0u32, k.clone())]);
    let mut complete = true;
    'search: while let Some((i, c)) = queue.pop_front() {
        for d in Direction::ALL {
            let next = c.push(d);
            if index.contains_key(&next) {
                continue;
            }
            if parents.len() >= max_states {
                complete = false;
                break 'search;
            }
            parents.push((i, d));
            let j = (parents.len() - 1) as u32;
            if next.same_shape(k) {
                let p = permutation_between(k, &next)?;
                if found.insert(p.clone()) {
                    elements.push((p, witness(&parents, j)));
                }
            }
            index.insert(next.clone(), j);
            queue.push_back((j, next));
        }
    }
    Ok(GroupEnumeration {
        elements,
        states: parents.len(),
        complete,
    })
}

/// Whether the group generated by `generators` can send any ordered pair of
/// distinct points to any other. Checked by growing the orbit of one pair.
pub fn is_two_transitive(generators: &[Permutation], degree: usize) -> bool {
    if degree < 2 {
        return false;
    }
    let mut seen = HashSet::from([(0usize, 1usize)]);
    let mut queue = VecDeque::from([(0usize, 1usize)]);
    while let Some((x, y)) = queue.pop_front() {
        for g in generators {
            let image = (g.apply(x), g.apply(y));
            if seen.insert(image) {
                queue.push_back(image);
            }
        }
    }
    seen.len() == degree * (degree - 1)
}

/// Summary of an enumeration next to what the classification predicts.
#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub shape: String,
    pub order: usize,
    pub predicted_order: String,
    pub class: &'static str,
    pub complete: bool,
    pub states: usize,
    pub sample_words: Vec<String>,
}

pub fn group_report(k: &Configuration, max_states: usize, samples: usize) -> Result<GroupReport> {
    let e = enumerate_group(k, max_states)?;
    let shape = shape_of(k)?;
    let group = ShapeGroup::new(&shape)?;
    let class: &GroupClass = group.class();
    Ok(GroupReport {
        shape: shape.to_string(),
        order: e.order(),
        predicted_order: class.order().to_string(),
        class: class.name(),
        complete: e.complete,
        states: e.states,
        sample_words: e.elements.iter().skip(1).take(samples).map(|(_, s)| s.to_string()).collect(),
    })
}
