//! Code containers, minimum distance and shortening.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BinaryWord, CodeWord, Symbol, TernaryWord};

/// Minimum distance of a code. Codes with at most one word have no pairs
/// and satisfy every distance requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinDistance {
    Finite(u32),
    Unbounded,
}

impl MinDistance {
    pub fn at_least(self, d: u32) -> bool {
        match self {
            MinDistance::Finite(v) => v >= d,
            MinDistance::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            MinDistance::Finite(v) => Some(v),
            MinDistance::Unbounded => None,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Finite(v) => write!(f, "{v}"),
            MinDistance::Unbounded => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    D1,
    Hamming,
}

/// A set of equal-length words, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code<W> {
    word_len: usize,
    words: BTreeSet<W>,
}

pub type TernaryCode = Code<TernaryWord>;
pub type BinaryCode = Code<BinaryWord>;

impl<W: CodeWord> Code<W> {
    pub fn new(word_len: usize) -> Self {
        Code {
            word_len,
            words: BTreeSet::new(),
        }
    }

    /// Collects words into a code, rejecting length mismatches and duplicates.
    pub fn from_words(word_len: usize, words: impl IntoIterator<Item = W>) -> Result<Self> {
        let mut code = Self::new(word_len);
        for w in words {
            if !code.insert(w)? {
                return Err(Error::DuplicateWord {
                    word: w.to_string(),
                });
            }
        }
        Ok(code)
    }

    /// Inserts a word; returns `false` if it was already present.
    pub fn insert(&mut self, w: W) -> Result<bool> {
        if w.word_len() != self.word_len {
            return Err(Error::LengthMismatch {
                left: self.word_len,
                right: w.word_len(),
            });
        }
        Ok(self.words.insert(w))
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &W) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &W> + '_ {
        self.words.iter()
    }

    fn min_over_pairs(&self, dist: impl Fn(&W, &W) -> u32) -> MinDistance {
        let words: Vec<&W> = self.words.iter().collect();
        let mut best: Option<u32> = None;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = dist(a, b);
                best = Some(best.map_or(d, |m| m.min(d)));
            }
        }
        best.map_or(MinDistance::Unbounded, MinDistance::Finite)
    }

    pub fn min_hamming_distance(&self) -> MinDistance {
        self.min_over_pairs(|a, b| a.hamming_unchecked(b))
    }
}

impl<'a, W> IntoIterator for &'a Code<W> {
    type Item = &'a W;
    type IntoIter = std::collections::btree_set::Iter<'a, W>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl<W: fmt::Display> fmt::Debug for Code<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.words.iter().map(|w| w.to_string()))
            .finish()
    }
}

impl TernaryCode {
    pub fn min_d1_distance(&self) -> MinDistance {
        self.min_over_pairs(|a, b| a.d1_unchecked(b))
    }

    pub fn min_distance(&self, metric: Metric) -> MinDistance {
        match metric {
            Metric::D1 => self.min_d1_distance(),
            Metric::Hamming => self.min_hamming_distance(),
        }
    }

    /// Words whose last coordinate equals `symbol`, with that coordinate removed.
    pub fn shorten(&self, symbol: Symbol) -> Result<TernaryCode> {
        if self.word_len < 2 {
            return Err(Error::ShortenTooShort {
                len: self.word_len,
            });
        }
        self.shorten_at(self.word_len - 1, symbol)
    }

    /// Words whose coordinate `pos` equals `symbol`, with that coordinate removed.
    pub fn shorten_at(&self, pos: usize, symbol: Symbol) -> Result<TernaryCode> {
        if self.word_len < 2 {
            return Err(Error::ShortenTooShort {
                len: self.word_len,
            });
        }
        if pos >= self.word_len {
            return Err(Error::CoordinateOutOfRange {
                index: pos,
                len: self.word_len,
            });
        }
        let mut out = TernaryCode::new(self.word_len - 1);
        for w in &self.words {
            let (short, s) = w.remove(pos)?;
            if s == symbol {
                out.words.insert(short);
            }
        }
        Ok(out)
    }

    /// Union of two equal-length codes.
    pub fn union(&self, other: &TernaryCode) -> Result<TernaryCode> {
        if self.word_len != other.word_len {
            return Err(Error::LengthMismatch {
                left: self.word_len,
                right: other.word_len,
            });
        }
        let mut out = self.clone();
        out.words.extend(other.words.iter().copied());
        Ok(out)
    }
}
