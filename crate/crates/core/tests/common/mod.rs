#![allow(dead_code)]

use std::collections::HashMap;

use linepush::{CanonicalShape, Configuration, Direction, PushSequence};
use rand::prelude::*;

/// Straight from the definition: for a left push, sweep columns from the
/// left and drop each token into an empty cell to its left. Other
/// directions rotate the plane first.
pub fn reference_push(c: &Configuration, d: Direction) -> Configuration {
    let turn = |(x, y): (i64, i64)| match d {
        Direction::Left => (x, y),
        Direction::Right => (-x, y),
        Direction::Down => (y, x),
        Direction::Up => (-y, x),
    };
    let unturn = |(u, v): (i64, i64)| match d {
        Direction::Left => (u, v),
        Direction::Right => (-u, v),
        Direction::Down => (v, u),
        Direction::Up => (v, -u),
    };
    let mut cells: HashMap<(i64, i64), usize> = c
        .tokens()
        .map(|((x, y), id)| (turn((x as i64, y as i64)), id.index()))
        .collect();
    let min_x = cells.keys().map(|p| p.0).min().unwrap();
    let max_x = cells.keys().map(|p| p.0).max().unwrap();
    let min_y = cells.keys().map(|p| p.1).min().unwrap();
    let max_y = cells.keys().map(|p| p.1).max().unwrap();
    for i in min_x + 1..=max_x {
        for j in min_y..=max_y {
            if cells.contains_key(&(i, j)) && !cells.contains_key(&(i - 1, j)) {
                let id = cells.remove(&(i, j)).unwrap();
                cells.insert((i - 1, j), id);
            }
        }
    }
    let mut tokens: Vec<(usize, (i64, i64))> = cells.into_iter().map(|(p, id)| (id, unturn(p))).collect();
    tokens.sort_unstable();
    Configuration::from_tokens(tokens.into_iter().map(|(id, p)| (p, c.labels()[id]))).unwrap()
}

pub fn random_shape(rng: &mut impl Rng, n: usize) -> CanonicalShape {
    // random composition, sorted into a partition
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    CanonicalShape::from_rows(&parts).unwrap()
}

pub fn random_moves(rng: &mut impl Rng, max_len: usize) -> PushSequence {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Direction::ALL[rng.gen_range(0..4)]).collect()
}

pub fn random_compact(rng: &mut impl Rng, max_n: usize) -> Configuration {
    let n = rng.gen_range(1..=max_n);
    let k = random_shape(rng, n).labeled();
    k.apply(&random_moves(rng, 12))
}

pub fn random_sparse(rng: &mut impl Rng, n: usize) -> Configuration {
    let mut xs: Vec<i64> = (0..3 * n as i64).collect();
    let mut ys = xs.clone();
    xs.shuffle(rng);
    ys.shuffle(rng);
    Configuration::unlabeled(xs[..n].iter().copied().zip(ys[..n].iter().copied()), '#').unwrap()
}

/// Every configuration with 1 to `max_tokens` tokens whose bounding box
/// fits in `side` by `side`, with distinct labels.
pub fn small_configurations(max_tokens: usize, side: usize) -> Vec<Configuration> {
    let cells: Vec<(i64, i64)> = (0..side as i64).flat_map(|y| (0..side as i64).map(move |x| (x, y))).collect();
    let mut out = Vec::new();
    let total = cells.len();
    for mask in 1u32..(1 << total) {
        let k = mask.count_ones() as usize;
        if k > max_tokens {
            continue;
        }
        let tokens = (0..total)
            .filter(|i| mask & (1 << i) != 0)
            .enumerate()
            .map(|(j, i)| (cells[i], (b'A' + j as u8) as char));
        out.push(Configuration::from_tokens(tokens).unwrap());
    }
    out
}
