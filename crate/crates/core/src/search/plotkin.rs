//! Column-count certificate for the Plotkin-type averaging argument.
//!
//! For a code of `M` words with minimum distance `d`, the sum `S` of all
//! ordered pairwise d1 distances satisfies
//! `M(M-1)d <= S <= nM^2 - sum_i m0(i)^2`, where `m0(i)` counts the words
//! with a zero in coordinate `i`.

use crate::code::TernaryCode;
use crate::error::{Error, Result};
use crate::word::Symbol;

/// Per-coordinate symbol counts and the pairwise distance sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnStats {
    pub size: u128,
    pub minus: Vec<u128>,
    pub zero: Vec<u128>,
    pub plus: Vec<u128>,
    /// `sum_i 2 m0(i) (m1(i) + m-1(i)) + 4 m1(i) m-1(i)`.
    pub pair_sum: u128,
}

impl ColumnStats {
    pub fn of(code: &TernaryCode) -> ColumnStats {
        let n = code.word_len();
        let (mut minus, mut zero, mut plus) = (vec![0u128; n], vec![0u128; n], vec![0u128; n]);
        for w in code {
            for (i, s) in w.symbols().enumerate() {
                match s {
                    Symbol::Minus => minus[i] += 1,
                    Symbol::Zero => zero[i] += 1,
                    Symbol::Plus => plus[i] += 1,
                }
            }
        }
        let pair_sum = (0..n)
            .map(|i| 2 * zero[i] * (plus[i] + minus[i]) + 4 * plus[i] * minus[i])
            .sum();
        ColumnStats {
            size: code.len() as u128,
            minus,
            zero,
            plus,
            pair_sum,
        }
    }

    pub fn zero_square_sum(&self) -> u128 {
        self.zero.iter().map(|z| z * z).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotkinReport {
    pub d: u32,
    pub stats: ColumnStats,
    /// `S` summed directly over ordered pairs.
    pub direct_sum: u128,
    /// `M(M-1)d`.
    pub pair_lower: u128,
    /// `nM^2 - sum_i m0(i)^2`.
    pub column_upper: u128,
}

impl PlotkinReport {
    pub fn identity_holds(&self) -> bool {
        self.direct_sum == self.stats.pair_sum
    }

    pub fn chain_holds(&self) -> bool {
        self.pair_lower <= self.direct_sum && self.direct_sum <= self.column_upper
    }

    pub fn lower_slack(&self) -> i128 {
        self.direct_sum as i128 - self.pair_lower as i128
    }

    pub fn upper_slack(&self) -> i128 {
        self.column_upper as i128 - self.direct_sum as i128
    }
}

/// Computes the column statistics of `code` and the Plotkin inequality chain.
pub fn plotkin_witness_check(code: &TernaryCode, d: u32) -> Result<PlotkinReport> {
    if code.is_empty() {
        return Err(Error::InvalidParameter("code must be nonempty".into()));
    }
    let md = code.min_d1_distance();
    if !md.at_least(d) {
        return Err(Error::MinDistanceViolated {
            required: d,
            actual: md.to_string(),
        });
    }
    let stats = ColumnStats::of(code);
    let words: Vec<_> = code.iter().collect();
    let direct_sum: u128 = words
        .iter()
        .flat_map(|a| words.iter().map(move |b| a.d1_unchecked(b) as u128))
        .sum();
    let m = stats.size;
    let n = code.word_len() as u128;
    Ok(PlotkinReport {
        d,
        pair_lower: m * (m - 1) * d as u128,
        column_upper: n * m * m - stats.zero_square_sum(),
        direct_sum,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::TernaryWord;

    #[test]
    fn even_zeros_n2() {
        let code = TernaryCode::from_words(
            2,
            [[-1, -1], [-1, 1], [0, 0], [1, -1], [1, 1]]
                .iter()
                .map(|w| TernaryWord::new(w).unwrap()),
        )
        .unwrap();
        let r = plotkin_witness_check(&code, 2).unwrap();
        assert_eq!(r.stats.size, 5);
        // 16 ordered pairs among the four (+-1,+-1) words sum to 32, each of
        // them is at distance 2 from (0,0): 8 more pairs, 16 more
        assert_eq!(r.direct_sum, 48);
        assert_eq!(r.pair_lower, 40);
        assert_eq!(r.column_upper, 2 * 25 - 2);
        assert!(r.identity_holds() && r.chain_holds());
    }

    #[test]
    fn singleton_and_errors() {
        let code = TernaryCode::from_words(3, [TernaryWord::zeros(3).unwrap()]).unwrap();
        let r = plotkin_witness_check(&code, 99).unwrap();
        assert_eq!((r.direct_sum, r.pair_lower), (0, 0));
        assert!(r.chain_holds());
        assert!(plotkin_witness_check(&TernaryCode::new(2), 1).is_err());
        let pair = TernaryCode::from_words(
            1,
            [TernaryWord::new(&[0]).unwrap(), TernaryWord::new(&[1]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            plotkin_witness_check(&pair, 2),
            Err(Error::MinDistanceViolated { .. })
        ));
    }

    #[test]
    fn antipodal_code_has_no_zeros() {
        let code = TernaryCode::from_words(
            3,
            [[1, 1, 1], [-1, -1, -1]].iter().map(|w| TernaryWord::new(w).unwrap()),
        )
        .unwrap();
        let r = plotkin_witness_check(&code, 6).unwrap();
        assert_eq!(r.stats.zero_square_sum(), 0);
        assert_eq!(r.upper_slack(), 0);
    }
}
