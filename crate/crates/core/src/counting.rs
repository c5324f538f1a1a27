//! Exact counts: ordered pairs by d1 distance, constant-weight spheres and
//! balls, Hamming ball volumes and the average d1 ball volume.
//!
//! Everything here is exact (`BigUint` / `BigRational`).

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::TernaryWord;

/// Longest words that brute-force helpers will enumerate (`3^12` words).
pub const EXHAUSTIVE_LIMIT: usize = 12;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn pow(base: u32, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// `m(n, w)` for `w = 0..=2n`: ordered pairs of words of `Q^n` at d1 distance `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCountTable {
    pub n: usize,
    pub counts: Vec<BigUint>,
}

impl PairCountTable {
    pub fn get(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// `sum_{w <= r} m(n, w)`.
    pub fn cumulative(&self, r: usize) -> BigUint {
        self.counts.iter().take(r + 1).sum()
    }
}

/// Coefficients of `(3 + 4z + 2z^2)^n`.
pub fn pair_count_poly(n: usize) -> PairCountTable {
    let base = [3u32, 4, 2];
    let mut poly = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); poly.len() + 2];
        for (i, c) in poly.iter().enumerate() {
            for (j, &b) in base.iter().enumerate() {
                next[i + j] += c * b;
            }
        }
        poly = next;
    }
    PairCountTable { n, counts: poly }
}

/// `m(n, w) = sum_i C(n,i) 2^i C(2i, w)`; zero outside `0..=2n`.
pub fn pair_count_closed(n: usize, w: usize) -> BigUint {
    if w > 2 * n {
        return BigUint::zero();
    }
    (0..=n)
        .map(|i| binomial(n, i) * pow(2, i) * binomial(2 * i, w))
        .sum()
}

/// Number of weight-`w` words at d1 distance exactly `dist` from a fixed
/// weight-`w` word of `Q^n`. Zero for odd `dist`.
pub fn constant_weight_sphere(n: usize, w: usize, dist: usize) -> BigUint {
    if w > n || dist % 2 == 1 {
        return BigUint::zero();
    }
    let i = dist / 2;
    let top = i.min(n - w).min(w);
    (0..=top)
        .map(|j| {
            if i - j > w - j {
                return BigUint::zero();
            }
            binomial(w, j) * binomial(w - j, i - j) * binomial(n - w, j) * pow(2, j)
        })
        .sum()
}

/// Weight-`w` words within d1 distance `r` of a fixed weight-`w` word.
pub fn constant_weight_ball(n: usize, w: usize, r: usize) -> BigUint {
    (0..=r / 2)
        .map(|i| constant_weight_sphere(n, w, 2 * i))
        .sum()
}

/// `|Q^n_w| = C(n, w) 2^w`.
pub fn shell_size(n: usize, w: usize) -> BigUint {
    binomial(n, w) * pow(2, w)
}

/// Average size of a d1 ball of radius `r` in `Q^n`: `sum_{w<=r} m(n,w) / 3^n`.
pub fn avg_ball_volume(n: usize, r: usize) -> BigRational {
    let num = pair_count_poly(n).cumulative(r);
    BigRational::new(BigInt::from(num), BigInt::from(pow(3, n)))
}

/// `V_q(n, r) = sum_{k<=r} C(n,k) (q-1)^k`.
pub fn hamming_ball_volume(q: u32, n: usize, r: usize) -> BigUint {
    (0..=r.min(n))
        .map(|k| binomial(n, k) * pow(q - 1, k))
        .sum()
}

/// Brute-force `|{y in Q^n : d1(center, y) <= r}|`.
pub fn d1_ball_volume_oracle(center: &TernaryWord, r: usize) -> Result<u64> {
    let n = center.len();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(TernaryWord::all(n)
        .filter(|y| center.d1_unchecked(y) as usize <= r)
        .count() as u64)
}

/// Ceiling of a nonnegative rational as an integer.
pub fn ceil_rational(r: &BigRational) -> BigUint {
    let c = r.ceil().to_integer();
    c.to_biguint().unwrap_or_default()
}

pub fn floor_rational(r: &BigRational) -> BigUint {
    let c = r.floor().to_integer();
    c.to_biguint().unwrap_or_default()
}
