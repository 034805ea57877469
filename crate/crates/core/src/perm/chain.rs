//! Stabilizer chains.
//!
//! [`SchreierSims`] is the plain deterministic algorithm over permutations and
//! gives a base and the exact group order. [`WordChain`] fills transversals for
//! that base with elements that remember a word over the generators, which is
//! what the solver needs to turn a permutation into pushes. It sifts random
//! products and keeps the shortest word seen for each coset, so words stay
//! reasonably short; the orbit lengths from the plain chain tell it when to stop.

use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generators::{Letter, Word};
use super::permutation::Permutation;

struct Level {
    base: usize,
    transversal: Vec<Option<Permutation>>,
}

/// Base and strong generating set for the group generated by some
/// permutations of `0..degree`.
pub struct SchreierSims {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<(Permutation, usize)>, // generator and the number of base points it fixes
}

impl SchreierSims {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut s = Self {
            degree,
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for g in generators {
            if g.is_identity() {
                continue;
            }
            let (r, depth) = s.sift(g, 0);
            if !r.is_identity() {
                s.add_strong(r, depth);
            }
        }
        s.complete();
        s
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit length at each level of the chain.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.transversal.iter().filter(|t| t.is_some()).count()).collect()
    }

    /// Group order; saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.orbit_sizes().iter().fold(1u128, |acc, &k| acc.saturating_mul(k as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.sift(g, 0).0.is_identity()
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// where it stopped.
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut r = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            match &level.transversal[r.apply(level.base)] {
                Some(u) => r = r.then(&u.inverse()),
                None => return (r, i),
            }
        }
        (r, self.levels.len())
    }

    fn add_strong(&mut self, g: Permutation, depth: usize) {
        if depth == self.levels.len() {
            let base = (0..self.degree).find(|&p| !g.fixes(p)).expect("non-identity");
            self.levels.push(Level {
                base,
                transversal: Vec::new(),
            });
        }
        self.strong.push((g, depth));
        for i in 0..=depth {
            self.rebuild_orbit(i);
        }
    }

    fn rebuild_orbit(&mut self, i: usize) {
        let base = self.levels[i].base;
        let gens: Vec<&Permutation> = self.strong.iter().filter(|(_, d)| *d >= i).map(|(g, _)| g).collect();
        let mut trans: Vec<Option<Permutation>> = vec![None; self.degree];
        trans[base] = Some(Permutation::identity(self.degree));
        let mut queue = VecDeque::from([base]);
        while let Some(p) = queue.pop_front() {
            let u = trans[p].clone().unwrap();
            for g in &gens {
                let q = g.apply(p);
                if trans[q].is_none() {
                    trans[q] = Some(u.then(g));
                    queue.push_back(q);
                }
            }
        }
        self.levels[i].transversal = trans;
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            let gens: Vec<Permutation> = self
                .strong
                .iter()
                .filter(|(_, d)| *d >= level)
                .map(|(g, _)| g.clone())
                .collect();
            let reps: Vec<(usize, Permutation)> = self.levels[level]
                .transversal
                .iter()
                .enumerate()
                .filter_map(|(p, t)| t.clone().map(|t| (p, t)))
                .collect();
            for (p, u) in &reps {
                for s in &gens {
                    let q = s.apply(*p);
                    let back = self.levels[level].transversal[q].as_ref().unwrap().inverse();
                    let h = u.then(s).then(&back);
                    let (r, depth) = self.sift(&h, level + 1);
                    if !r.is_identity() {
                        self.add_strong(r, depth);
                        i = depth + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }
}

/// Transversals with recorded words over a fixed set of generators.
pub struct WordChain {
    degree: usize,
    base: Vec<usize>,
    tables: Vec<Vec<Option<(Permutation, Word)>>>,
}

impl WordChain {
    /// `letters` are the generator permutations (inverses are added here).
    /// `base` must be a base for the group they generate and `orbits` the
    /// basic orbit lengths along it; both come from [`SchreierSims`].
    pub fn build(degree: usize, generators: &[Permutation], base: Vec<usize>, orbits: &[usize]) -> Self {
        let mut chain = Self {
            degree,
            tables: base
                .iter()
                .map(|&b| {
                    let mut t = vec![None; degree];
                    t[b] = Some((Permutation::identity(degree), Word::default()));
                    t
                })
                .collect(),
            base,
        };
        let letters: Vec<(Permutation, Letter)> = generators
            .iter()
            .enumerate()
            .flat_map(|(i, g)| {
                [
                    (g.clone(), Letter { generator: i, inverse: false }),
                    (g.inverse(), Letter { generator: i, inverse: true }),
                ]
            })
            .collect();
        if letters.is_empty() {
            return chain;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c69_6e65_7075_7368);
        let mut limit = 4 * degree + 16;
        let mut attempts = 0usize;
        for (g, l) in &letters {
            chain.insert(g.clone(), Word::letter(*l), limit);
        }
        while chain.orbit_sizes() != orbits {
            let len = rng.gen_range(1..=degree.max(4));
            let mut g = Permutation::identity(degree);
            let mut w = Word::default();
            for _ in 0..len {
                let (p, l) = &letters[rng.gen_range(0..letters.len())];
                g = g.then(p);
                w = w.then(&Word::letter(*l));
            }
            chain.insert(g, w, limit);
            attempts += 1;
            if attempts.is_multiple_of(256) {
                chain.improve(limit);
            }
            if attempts.is_multiple_of(4096) {
                limit *= 2;
            }
        }
        for _ in 0..3 {
            if !chain.improve(limit) {
                break;
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.tables.iter().map(|t| t.iter().filter(|e| e.is_some()).count()).collect()
    }

    /// Group order; saturates at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.orbit_sizes().iter().fold(1u128, |acc, &k| acc.saturating_mul(k as u128))
    }

    pub fn max_word_len(&self) -> usize {
        self.tables
            .iter()
            .flatten()
            .flatten()
            .map(|(_, w)| w.len())
            .max()
            .unwrap_or(0)
    }

    /// Sifts `g`, keeping the shorter word whenever a coset is already
    /// represented. Returns whether any table entry changed.
    fn insert(&mut self, mut g: Permutation, mut w: Word, limit: usize) -> bool {
        let mut changed = false;
        for i in 0..self.base.len() {
            let p = g.apply(self.base[i]);
            let slot = &mut self.tables[i][p];
            match slot {
                None => {
                    *slot = Some((g, w));
                    return true;
                }
                Some((u, wu)) => {
                    if w.len() < wu.len() {
                        std::mem::swap(u, &mut g);
                        std::mem::swap(wu, &mut w);
                        changed = true;
                    }
                    g = g.then(&u.inverse());
                    w = w.then(&wu.inverse());
                }
            }
            if g.is_identity() || w.len() > limit {
                break;
            }
        }
        changed
    }

    fn improve(&mut self, limit: usize) -> bool {
        let mut changed = false;
        for i in 0..self.tables.len() {
            let entries: Vec<(Permutation, Word)> = self.tables[i].iter().flatten().cloned().collect();
            for (a, wa) in &entries {
                for (b, wb) in &entries {
                    changed |= self.insert(a.then(b), wa.then(wb), limit);
                }
            }
        }
        changed
    }

    /// Word for `g`, or `None` if `g` is not in the group.
    pub fn factorize(&self, g: &Permutation) -> Option<Word> {
        let mut r = g.clone();
        let mut parts = Vec::with_capacity(self.base.len());
        for (i, &b) in self.base.iter().enumerate() {
            let (u, w) = self.tables[i][r.apply(b)].as_ref()?;
            r = r.then(&u.inverse());
            parts.push(w);
        }
        if !r.is_identity() {
            return None;
        }
        Some(parts.iter().rev().fold(Word::default(), |acc, w| acc.then(w)))
    }
}

/// Every element of the group generated by `generators`, each with a word of
/// minimum length over the generators and their inverses. `None` if the
/// group has more than `limit` elements.
pub fn enumerate_words(degree: usize, generators: &[Permutation], limit: usize) -> Option<HashMap<Permutation, Word>> {
    let mut table = HashMap::new();
    let id = Permutation::identity(degree);
    table.insert(id.clone(), Word::default());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let w = table[&p].clone();
        for (i, g) in generators.iter().enumerate() {
            for inverse in [false, true] {
                let step = if inverse { g.inverse() } else { g.clone() };
                let q = p.then(&step);
                if !table.contains_key(&q) {
                    if table.len() >= limit {
                        return None;
                    }
                    table.insert(q.clone(), w.then(&Word::letter(Letter { generator: i, inverse })));
                    queue.push_back(q);
                }
            }
        }
    }
    Some(table)
}
