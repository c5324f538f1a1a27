//! Words over the ternary alphabet `{-1, 0, +1}` and over `{0, 1}`.
//!
//! A [`TernaryWord`] is stored as two bit planes: bit `i` of `plus` is set
//! when coordinate `i` holds `+1`, bit `i` of `minus` when it holds `-1`.
//! That is exactly the image of the coordinatewise embedding
//! `-1 -> (0,1), 0 -> (0,0), +1 -> (1,0)`, so the d1 distance between two
//! words is the Hamming distance between their bit planes and costs two
//! popcounts.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Longest supported ternary word.
pub const MAX_TERNARY_LEN: usize = 64;
/// Longest supported binary word.
pub const MAX_BINARY_LEN: usize = 128;

/// One symbol of the ternary alphabet. Ordered `Minus < Zero < Plus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Minus,
    Zero,
    Plus,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Minus, Symbol::Zero, Symbol::Plus];

    pub fn value(self) -> i8 {
        match self {
            Symbol::Minus => -1,
            Symbol::Zero => 0,
            Symbol::Plus => 1,
        }
    }

    pub fn negate(self) -> Symbol {
        match self {
            Symbol::Minus => Symbol::Plus,
            Symbol::Zero => Symbol::Zero,
            Symbol::Plus => Symbol::Minus,
        }
    }
}

impl TryFrom<i64> for Symbol {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            -1 => Ok(Symbol::Minus),
            0 => Ok(Symbol::Zero),
            1 => Ok(Symbol::Plus),
            _ => Err(Error::InvalidSymbol {
                symbol: v,
                expected: "-1, 0, 1",
            }),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn mask128(len: usize) -> u128 {
    if len == 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

/// A fixed-length word over `{-1, 0, +1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryWord {
    plus: u64,
    minus: u64,
    len: u8,
}

impl TernaryWord {
    /// Builds a word from integer symbols, rejecting anything outside `{-1,0,1}`.
    pub fn new(symbols: &[i8]) -> Result<Self> {
        let syms = symbols
            .iter()
            .map(|&s| Symbol::try_from(s as i64))
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(&syms)
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        if symbols.len() > MAX_TERNARY_LEN {
            return Err(Error::LengthTooLong {
                len: symbols.len(),
                max: MAX_TERNARY_LEN,
            });
        }
        let mut w = TernaryWord {
            plus: 0,
            minus: 0,
            len: symbols.len() as u8,
        };
        for (i, &s) in symbols.iter().enumerate() {
            w.set(i, s);
        }
        Ok(w)
    }

    /// Builds a word directly from its bit planes.
    pub fn from_planes(len: usize, plus: u64, minus: u64) -> Result<Self> {
        if len > MAX_TERNARY_LEN {
            return Err(Error::LengthTooLong {
                len,
                max: MAX_TERNARY_LEN,
            });
        }
        let m = mask(len);
        if plus & minus != 0 || plus & !m != 0 || minus & !m != 0 {
            return Err(Error::InvalidParameter(
                "bit planes overlap or exceed the word length".into(),
            ));
        }
        Ok(TernaryWord {
            plus,
            minus,
            len: len as u8,
        })
    }

    pub fn constant(len: usize, symbol: Symbol) -> Result<Self> {
        Self::from_symbols(&vec![symbol; len])
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::constant(len, Symbol::Zero)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn plus_plane(&self) -> u64 {
        self.plus
    }

    pub fn minus_plane(&self) -> u64 {
        self.minus
    }

    pub fn get(&self, i: usize) -> Symbol {
        assert!(i < self.len(), "coordinate {i} out of range");
        if self.plus >> i & 1 == 1 {
            Symbol::Plus
        } else if self.minus >> i & 1 == 1 {
            Symbol::Minus
        } else {
            Symbol::Zero
        }
    }

    fn set(&mut self, i: usize, s: Symbol) {
        let bit = 1u64 << i;
        self.plus &= !bit;
        self.minus &= !bit;
        match s {
            Symbol::Plus => self.plus |= bit,
            Symbol::Minus => self.minus |= bit,
            Symbol::Zero => {}
        }
    }

    pub fn with_symbol(mut self, i: usize, s: Symbol) -> Self {
        assert!(i < self.len(), "coordinate {i} out of range");
        self.set(i, s);
        self
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_i8_vec(&self) -> Vec<i8> {
        self.symbols().map(Symbol::value).collect()
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        (self.plus | self.minus).count_ones() as usize
    }

    pub fn zero_count(&self) -> usize {
        self.len() - self.weight()
    }

    pub fn negate(&self) -> Self {
        TernaryWord {
            plus: self.minus,
            minus: self.plus,
            len: self.len,
        }
    }

    /// Removes coordinate `pos`, returning the shorter word and the removed symbol.
    pub fn remove(&self, pos: usize) -> Result<(TernaryWord, Symbol)> {
        if pos >= self.len() {
            return Err(Error::CoordinateOutOfRange {
                index: pos,
                len: self.len(),
            });
        }
        let s = self.get(pos);
        let squeeze = |plane: u64| {
            let low = plane & mask(pos);
            let high = if pos + 1 >= 64 { 0 } else { plane >> (pos + 1) };
            low | (high << pos)
        };
        Ok((
            TernaryWord {
                plus: squeeze(self.plus),
                minus: squeeze(self.minus),
                len: self.len - 1,
            },
            s,
        ))
    }

    /// Appends a symbol at the end.
    pub fn push(&self, s: Symbol) -> Result<TernaryWord> {
        if self.len() >= MAX_TERNARY_LEN {
            return Err(Error::LengthTooLong {
                len: self.len() + 1,
                max: MAX_TERNARY_LEN,
            });
        }
        let mut w = *self;
        w.len += 1;
        w.set(self.len(), s);
        Ok(w)
    }

    pub(crate) fn d1_unchecked(&self, other: &Self) -> u32 {
        (self.plus ^ other.plus).count_ones() + (self.minus ^ other.minus).count_ones()
    }

    pub(crate) fn hamming_unchecked(&self, other: &Self) -> u32 {
        ((self.plus ^ other.plus) | (self.minus ^ other.minus)).count_ones()
    }

    /// Rank of the word in lexicographic order of `Q^n` (`-1 < 0 < +1`,
    /// first coordinate most significant).
    pub fn index(&self) -> u128 {
        self.symbols()
            .fold(0u128, |acc, s| acc * 3 + (s.value() + 1) as u128)
    }

    pub fn from_index(len: usize, mut index: u128) -> Result<Self> {
        let mut syms = vec![Symbol::Zero; len];
        for slot in syms.iter_mut().rev() {
            *slot = Symbol::ALL[(index % 3) as usize];
            index /= 3;
        }
        if index != 0 {
            return Err(Error::InvalidParameter(format!(
                "index out of range for length {len}"
            )));
        }
        Self::from_symbols(&syms)
    }

    /// Every word of `Q^n`, in lexicographic order.
    pub fn all(len: usize) -> AllTernaryWords {
        AllTernaryWords {
            next: TernaryWord::constant(len, Symbol::Minus).ok(),
        }
    }
}

impl Ord for TernaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = (self.plus ^ other.plus) | (self.minus ^ other.minus);
        let common = self.len.min(other.len) as usize;
        let diff = diff & mask(common);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros() as usize;
        self.get(i).cmp(&other.get(i))
    }
}

impl PartialOrd for TernaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryWord({self})")
    }
}

/// Lexicographic odometer over `Q^n`.
pub struct AllTernaryWords {
    next: Option<TernaryWord>,
}

impl Iterator for AllTernaryWords {
    type Item = TernaryWord;

    fn next(&mut self) -> Option<TernaryWord> {
        let current = self.next?;
        let mut w = current;
        // increment from the last coordinate
        let mut pos = w.len();
        self.next = loop {
            if pos == 0 {
                break None;
            }
            pos -= 1;
            match w.get(pos) {
                Symbol::Minus => {
                    w.set(pos, Symbol::Zero);
                    break Some(w);
                }
                Symbol::Zero => {
                    w.set(pos, Symbol::Plus);
                    break Some(w);
                }
                Symbol::Plus => w.set(pos, Symbol::Minus),
            }
        };
        Some(current)
    }
}

/// A fixed-length word over `{0, 1}`; bit `i` of `bits` is coordinate `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u128,
    len: u8,
}

impl BinaryWord {
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.len() > MAX_BINARY_LEN {
            return Err(Error::LengthTooLong {
                len: symbols.len(),
                max: MAX_BINARY_LEN,
            });
        }
        let mut bits = 0u128;
        for (i, &s) in symbols.iter().enumerate() {
            match s {
                0 => {}
                1 => bits |= 1 << i,
                _ => {
                    return Err(Error::InvalidSymbol {
                        symbol: s as i64,
                        expected: "0, 1",
                    })
                }
            }
        }
        Ok(BinaryWord {
            bits,
            len: symbols.len() as u8,
        })
    }

    pub fn from_bits(len: usize, bits: u128) -> Result<Self> {
        if len > MAX_BINARY_LEN {
            return Err(Error::LengthTooLong {
                len,
                max: MAX_BINARY_LEN,
            });
        }
        if bits & !mask128(len) != 0 {
            return Err(Error::InvalidParameter(format!(
                "bits set beyond length {len}"
            )));
        }
        Ok(BinaryWord {
            bits,
            len: len as u8,
        })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len(), "coordinate {i} out of range");
        (self.bits >> i & 1) as u8
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Positions of the ones, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.bits >> i & 1 == 1)
    }

    /// Coordinatewise sum mod 2.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(BinaryWord {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    pub(crate) fn hamming_unchecked(&self, other: &Self) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// Every word of `{0,1}^n` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(len < 128);
        (0u128..1u128 << len).map(move |v| {
            // lexicographic: coordinate 0 is the most significant digit
            let mut bits = 0u128;
            for i in 0..len {
                if v >> (len - 1 - i) & 1 == 1 {
                    bits |= 1 << i;
                }
            }
            BinaryWord {
                bits,
                len: len as u8,
            }
        })
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len) as usize;
        let diff = (self.bits ^ other.bits) & mask128(common);
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let i = diff.trailing_zeros() as usize;
        self.get(i).cmp(&other.get(i))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::LengthMismatch { left: a, right: b });
    }
    Ok(())
}

/// `sum_i |x_i - y_i|`.
pub fn d1_distance(x: &TernaryWord, y: &TernaryWord) -> Result<u32> {
    check_len(x.len(), y.len())?;
    Ok(x.d1_unchecked(y))
}

/// Number of differing coordinates, for either alphabet.
pub fn hamming_distance<W: CodeWord>(x: &W, y: &W) -> Result<u32> {
    check_len(x.word_len(), y.word_len())?;
    Ok(x.hamming_unchecked(y))
}

/// Maps `-1 -> (0,1)`, `0 -> (0,0)`, `+1 -> (1,0)` coordinatewise.
pub fn phi_map(x: &TernaryWord) -> BinaryWord {
    let mut bits = 0u128;
    for i in 0..x.len() {
        bits |= ((x.plus >> i & 1) as u128) << (2 * i);
        bits |= ((x.minus >> i & 1) as u128) << (2 * i + 1);
    }
    BinaryWord {
        bits,
        len: (2 * x.len()) as u8,
    }
}

/// Inverse of [`phi_map`]; fails on odd lengths and on any `(1,1)` pair.
pub fn phi_inverse(b: &BinaryWord) -> Result<TernaryWord> {
    if b.len() % 2 != 0 {
        return Err(Error::OddLength { len: b.len() });
    }
    let n = b.len() / 2;
    let (mut plus, mut minus) = (0u64, 0u64);
    for k in 0..n {
        let hi = b.bits >> (2 * k) & 1;
        let lo = b.bits >> (2 * k + 1) & 1;
        if hi == 1 && lo == 1 {
            return Err(Error::NotInPhiImage { pair: k });
        }
        plus |= (hi as u64) << k;
        minus |= (lo as u64) << k;
    }
    TernaryWord::from_planes(n, plus, minus)
}

/// Common surface of words that can be collected into a [`crate::code::Code`].
pub trait CodeWord: Copy + Ord + fmt::Display {
    fn word_len(&self) -> usize;
    fn hamming_unchecked(&self, other: &Self) -> u32;
}

impl CodeWord for TernaryWord {
    fn word_len(&self) -> usize {
        self.len()
    }

    fn hamming_unchecked(&self, other: &Self) -> u32 {
        TernaryWord::hamming_unchecked(self, other)
    }
}

impl CodeWord for BinaryWord {
    fn word_len(&self) -> usize {
        self.len()
    }

    fn hamming_unchecked(&self, other: &Self) -> u32 {
        BinaryWord::hamming_unchecked(self, other)
    }
}
