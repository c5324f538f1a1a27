//! Explicit ternary codes that witness lower bounds on `T(n, d)`.
//!
//! Every constructor checks the minimum distance of what it returns.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{BinaryCode, MinDistance, TernaryCode};
use crate::counting::{binomial, pow, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::search::{best_binary_code, SearchConfig};
use crate::word::{phi_inverse, BinaryWord, Symbol, TernaryWord};

/// Longest binary input (`2n`) for the exhaustive shift search.
pub const EXHAUSTIVE_SHIFT_LIMIT: usize = 24;
/// Longest outer code for the exhaustive coset scan.
pub const COSET_SCAN_LIMIT: usize = 10;

fn verify(code: TernaryCode, d: u32) -> Result<TernaryCode> {
    let md = code.min_d1_distance();
    if !md.at_least(d) {
        return Err(Error::MinDistanceViolated {
            required: d,
            actual: md.to_string(),
        });
    }
    Ok(code)
}

/// All words of `Q^n` with an even number of zeros: `(3^n + 1) / 2` words at
/// minimum distance 2.
pub fn even_zeros_code(n: usize) -> Result<TernaryCode> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut code = TernaryCode::new(n);
    for w in TernaryWord::all(n).filter(|w| w.zero_count() % 2 == 0) {
        code.insert(w)?;
    }
    Ok(code)
}

/// Size of [`even_zeros_code`] counted without materialising it:
/// `sum_{k even} C(n, k) 2^(n-k)`.
pub fn even_zeros_size(n: usize) -> BigUint {
    (0..=n)
        .step_by(2)
        .map(|k| binomial(n, k) * pow(2, n - k))
        .sum()
}

fn signed(b: &BinaryWord) -> TernaryWord {
    let syms: Vec<Symbol> = b
        .symbols()
        .map(|s| if s == 1 { Symbol::Plus } else { Symbol::Minus })
        .collect();
    TernaryWord::from_symbols(&syms).expect("binary length fits")
}

/// Maps `0 -> -1` and `1 -> +1`; d1 distances are twice the Hamming distances.
pub fn signed_binary_code(b: &BinaryCode) -> Result<TernaryCode> {
    TernaryCode::from_words(b.word_len(), b.iter().map(signed))
}

/// Number of codewords of each Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<usize>,
}

impl WeightDistribution {
    pub fn of(code: &BinaryCode) -> Self {
        let mut counts = vec![0; code.word_len() + 1];
        for w in code {
            counts[w.weight()] += 1;
        }
        WeightDistribution { counts }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Places the signs of `inner` on the support of `outer`, left to right.
fn place_on_support(outer: &BinaryWord, inner: &BinaryWord) -> TernaryWord {
    let mut syms = vec![Symbol::Zero; outer.len()];
    for (k, pos) in outer.support().enumerate() {
        syms[pos] = if inner.get(k) == 1 {
            Symbol::Plus
        } else {
            Symbol::Minus
        };
    }
    TernaryWord::from_symbols(&syms).expect("binary length fits")
}

fn check_hamming(code: &BinaryCode, d: u32, what: &str) -> Result<()> {
    let md = code.min_hamming_distance();
    if !md.at_least(d) {
        return Err(Error::InvalidParameter(format!(
            "{what} has minimum Hamming distance {md}, needs at least {d}"
        )));
    }
    Ok(())
}

/// For each outer codeword `u` of weight `w` and each `v` in `inner[w]`,
/// emits the word supported on `u` carrying the signs of `v`.
///
/// Requires `d_H(outer) >= d` and `d_H(inner[w]) >= ceil(d/2)`; the output
/// has size `sum_w A_w |inner[w]|` and minimum d1 distance at least `d`.
pub fn support_construction(
    outer: &BinaryCode,
    inner: &BTreeMap<usize, BinaryCode>,
    d: u32,
) -> Result<TernaryCode> {
    check_hamming(outer, d, "outer code")?;
    let dist = WeightDistribution::of(outer);
    for (w, &count) in dist.counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let code = inner.get(&w).ok_or(Error::MissingInnerCode { weight: w })?;
        if code.word_len() != w {
            return Err(Error::InvalidParameter(format!(
                "inner code for weight {w} has length {}",
                code.word_len()
            )));
        }
        check_hamming(code, d.div_ceil(2), &format!("inner code for weight {w}"))?;
    }
    let mut words = Vec::new();
    for u in outer {
        for v in &inner[&u.weight()] {
            words.push(place_on_support(u, v));
        }
    }
    verify(TernaryCode::from_words(outer.word_len(), words)?, d)
}

/// Predicted size of [`support_construction`].
pub fn support_construction_size(outer: &BinaryCode, inner: &BTreeMap<usize, BinaryCode>) -> usize {
    WeightDistribution::of(outer)
        .counts
        .iter()
        .enumerate()
        .map(|(w, &a)| a * inner.get(&w).map_or(0, |c| c.len()))
        .sum()
}

/// Inner codes for every weight `0..=n` with Hamming distance `ceil(d/2)`,
/// from small exact searches or lexicodes.
pub fn default_inner_codes(n: usize, d: u32) -> Result<BTreeMap<usize, BinaryCode>> {
    let cfg = SearchConfig {
        vertex_limit: 256,
        budget: 200_000,
        symmetry: true,
    };
    (0..=n)
        .map(|w| Ok((w, best_binary_code(w, d.div_ceil(2), &cfg)?)))
        .collect()
}

/// Translates `outer` by every `x` in `{0,1}^n`, keeps the translate whose
/// support construction is largest (smallest `x` on ties) and builds it.
pub fn coset_scan_construction(
    outer: &BinaryCode,
    inner: &BTreeMap<usize, BinaryCode>,
    d: u32,
) -> Result<(TernaryCode, BinaryWord)> {
    let n = outer.word_len();
    if n > COSET_SCAN_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: COSET_SCAN_LIMIT,
        });
    }
    let mut best: Option<(usize, BinaryWord)> = None;
    for x in BinaryWord::all(n) {
        let size: usize = outer
            .iter()
            .map(|u| {
                let w = (u.bits() ^ x.bits()).count_ones() as usize;
                inner.get(&w).map_or(0, |c| c.len())
            })
            .sum();
        if best.as_ref().map_or(true, |(s, _)| size > *s) {
            best = Some((size, x));
        }
    }
    let (_, x) = best.expect("at least one translate");
    let translate = BinaryCode::from_words(
        n,
        outer.iter().map(|u| u.xor(&x)).collect::<Result<Vec<_>>>()?,
    )?;
    Ok((support_construction(&translate, inner, d)?, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftStrategy {
    /// Every shift in `{0,1}^{2n}`.
    Exhaustive,
    /// `trials` shifts drawn from a seeded ChaCha8 stream.
    Randomized { trials: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftConstruction {
    pub code: TernaryCode,
    pub shift: BinaryWord,
    /// `ceil(|b| 3^n / 4^n)`, met by the best shift.
    pub guaranteed: BigUint,
}

fn in_phi_image(bits: u128, n: usize) -> bool {
    const EVEN: u128 = 0x5555_5555_5555_5555_5555_5555_5555_5555;
    let both = bits & (bits >> 1) & EVEN;
    let mask = if 2 * n >= 128 { u128::MAX } else { (1u128 << (2 * n)) - 1 };
    both & mask == 0
}

/// Shifts a binary code of length `2n` so that as many codewords as possible
/// avoid `(1,1)` pairs, then pulls them back to `Q^n`. The d1 distances of
/// the result equal the Hamming distances of the shifted words.
pub fn phi_shift_construction(b: &BinaryCode, strategy: ShiftStrategy) -> Result<ShiftConstruction> {
    let len = b.word_len();
    if len % 2 != 0 {
        return Err(Error::OddLength { len });
    }
    let n = len / 2;
    let hits = |x: u128| b.iter().filter(|c| in_phi_image(c.bits() ^ x, n)).count();
    let shift = match strategy {
        ShiftStrategy::Exhaustive => {
            if len > EXHAUSTIVE_SHIFT_LIMIT {
                return Err(Error::OverExhaustiveLimit {
                    n: len,
                    limit: EXHAUSTIVE_SHIFT_LIMIT,
                });
            }
            let mut best = (0usize, 0u128);
            for x in 0..1u128 << len {
                let h = hits(x);
                if h > best.0 {
                    best = (h, x);
                }
            }
            best.1
        }
        ShiftStrategy::Randomized { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mask = if len == 128 { u128::MAX } else { (1u128 << len) - 1 };
            let mut best = (hits(0), 0u128);
            for _ in 0..trials {
                let x = rng.gen::<u128>() & mask;
                let h = hits(x);
                if h > best.0 {
                    best = (h, x);
                }
            }
            best.1
        }
    };
    let words = b
        .iter()
        .filter(|c| in_phi_image(c.bits() ^ shift, n))
        .map(|c| phi_inverse(&BinaryWord::from_bits(len, c.bits() ^ shift)?))
        .collect::<Result<Vec<_>>>()?;
    let code = TernaryCode::from_words(n, words)?;
    let bound = b.min_hamming_distance();
    let code = match bound {
        MinDistance::Finite(d) => verify(code, d)?,
        MinDistance::Unbounded => code,
    };
    let num = BigUint::from(b.len()) * pow(3, n);
    let den = pow(4, n);
    Ok(ShiftConstruction {
        code,
        shift: BinaryWord::from_bits(len, shift)?,
        guaranteed: Integer::div_ceil(&num, &den),
    })
}

/// Uniformly random binary code of `size` distinct words (test and demo helper).
pub fn random_binary_code(len: usize, size: usize, seed: u64) -> Result<BinaryCode> {
    if len > 24 || size > 1usize << len {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {size} distinct words of length {len}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut code = BinaryCode::new(len);
    while code.len() < size {
        let bits = rng.gen_range(0..1u128 << len);
        code.insert(BinaryWord::from_bits(len, bits)?)?;
    }
    Ok(code)
}
