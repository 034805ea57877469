use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// A bijection on `0..degree`, read as acting on places: `p` is sent to
/// `apply(p)`. Products compose left to right, so `a.then(&b)` applies `a`
/// first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Product of the given cycles (0-based points), each cycle sending
    /// `c[0] -> c[1] -> ... -> c[0]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut p = Self::identity(degree);
        for cycle in cycles {
            let mut c = Self::identity(degree);
            for (i, &from) in cycle.iter().enumerate() {
                c.images[from] = cycle[(i + 1) % cycle.len()] as u32;
            }
            p = p.then(&c);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (from, &to) in self.images.iter().enumerate() {
            images[to as usize] = from as u32;
        }
        Self { images }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    /// Points that move.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| !self.fixes(p)).collect()
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Cycle notation with 1-based points, e.g. `(1 2 5 4 3)`; `()` for the
/// identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_basics() {
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
        assert_eq!(Permutation::from_cycles(4, &[&[0, 1]]).parity(), Parity::Odd);
        assert_eq!(Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).parity(), Parity::Even);
        assert_eq!(Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).parity(), Parity::Odd);
    }

    #[test]
    fn left_to_right_composition() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let a = Permutation::from_cycles(3, &[&[0, 1]]);
        let b = Permutation::from_cycles(3, &[&[1, 2]]);
        let ab = a.then(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1 3 2)");
    }

    #[test]
    fn cycles_inverse_order() {
        let p = Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 5]]);
        assert_eq!(p.cycles(), vec![vec![0, 2, 4], vec![1, 5]]);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(2), p.then(&p));
        assert_eq!(p.support(), vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![2, 0]).is_none());
        assert!(Permutation::from_images(vec![1, 0]).is_some());
    }
}
