//! Greedy (lexicode-style) code construction.
//!
//! Words are visited in a fixed order and kept whenever they are at distance
//! at least `d` from everything kept so far. Each kept word blocks its ball
//! of radius `d - 1`, so the result covers the space and therefore has at
//! least `3^n / max_x |B(x, d - 1)|` words.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::code::{BinaryCode, TernaryCode};
use crate::counting::EXHAUSTIVE_LIMIT;
use crate::error::{Error, Result};
use crate::word::{BinaryWord, TernaryWord};

/// Longest binary lexicode built by [`greedy_binary_code`].
pub const BINARY_GREEDY_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyOrder {
    Lexicographic,
    /// Uniform shuffle of `Q^n` from a seeded ChaCha8 stream.
    Shuffled(u64),
}

fn mark_ternary_ball(center: &[i8], radius: u32, blocked: &mut [bool]) {
    fn walk(center: &[i8], pos: usize, left: u32, idx: usize, blocked: &mut [bool]) {
        if pos == center.len() {
            blocked[idx] = true;
            return;
        }
        for s in -1i8..=1 {
            let cost = (center[pos] - s).unsigned_abs() as u32;
            if cost <= left {
                walk(center, pos + 1, left - cost, idx * 3 + (s + 1) as usize, blocked);
            }
        }
    }
    walk(center, 0, radius, 0, blocked);
}

/// Greedy code of length `n` and minimum d1 distance `d`.
pub fn greedy_gv_code(n: usize, d: u32, order: GreedyOrder) -> Result<TernaryCode> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let total = 3usize.pow(n as u32);
    let mut indices: Vec<usize> = (0..total).collect();
    if let GreedyOrder::Shuffled(seed) = order {
        indices.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut blocked = vec![false; total];
    let mut code = TernaryCode::new(n);
    for idx in indices {
        if blocked[idx] {
            continue;
        }
        let w = TernaryWord::from_index(n, idx as u128)?;
        code.insert(w)?;
        if d >= 1 {
            mark_ternary_ball(&w.to_i8_vec(), d - 1, &mut blocked);
        } else {
            blocked[idx] = true;
        }
    }
    Ok(code)
}

/// Binary lexicode of length `n` and minimum Hamming distance `d`.
pub fn greedy_binary_code(n: usize, d: u32) -> Result<BinaryCode> {
    if n > BINARY_GREEDY_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: BINARY_GREEDY_LIMIT,
        });
    }
    let total = 1usize << n;
    let mut blocked = vec![false; total];
    let mut code = BinaryCode::new(n);
    // value v encodes coordinate i as bit n-1-i, so increasing v is lexicographic
    for v in 0..total {
        if blocked[v] {
            continue;
        }
        let mut bits = 0u128;
        for i in 0..n {
            if v >> (n - 1 - i) & 1 == 1 {
                bits |= 1 << i;
            }
        }
        code.insert(BinaryWord::from_bits(n, bits)?)?;
        blocked[v] = true;
        let radius = d.saturating_sub(1) as usize;
        mark_binary_ball(v, n, radius, 0, &mut blocked);
    }
    Ok(code)
}

fn mark_binary_ball(v: usize, n: usize, left: usize, from: usize, blocked: &mut [bool]) {
    if left == 0 {
        return;
    }
    for i in from..n {
        let u = v ^ (1 << i);
        blocked[u] = true;
        mark_binary_ball(u, n, left - 1, i + 1, blocked);
    }
}
