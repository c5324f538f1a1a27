//! Lower and upper bounds on `A_q(n, d)` for Hamming-metric codes.
//!
//! Sources, in order of preference: closed forms (`d <= 2`, `d = n`,
//! `d > n`), the bundled table of published values, exact clique search when
//! `q^n` is small, and finally the Gilbert-Varshamov lower bound
//! `ceil(q^n / V_q(n, d-1))` with the Singleton upper bound `q^(n-d+1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::counting::{hamming_ball_volume, pow};
use crate::error::{Error, Result};
use crate::search::{exact_A, SearchConfig};

const BUNDLED: &str = include_str!("../../data/hamming_bounds.txt");

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HammingSource {
    ClosedForm(&'static str),
    Bundled(String),
    ExactSearch,
    SearchInterval,
    GilbertVarshamov,
    Singleton,
}

impl fmt::Display for HammingSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HammingSource::ClosedForm(name) => f.write_str(name),
            HammingSource::Bundled(src) => write!(f, "bundled:{src}"),
            HammingSource::ExactSearch => f.write_str("exact-search"),
            HammingSource::SearchInterval => f.write_str("search-incomplete"),
            HammingSource::GilbertVarshamov => f.write_str("gv"),
            HammingSource::Singleton => f.write_str("singleton"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingBoundEntry {
    pub q: u8,
    pub n: usize,
    pub d: u32,
    pub lower: BigUint,
    pub upper: BigUint,
    pub lower_source: HammingSource,
    pub upper_source: HammingSource,
}

impl HammingBoundEntry {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

#[derive(Debug, Clone)]
struct BundledRow {
    lower: BigUint,
    upper: BigUint,
    source: String,
}

fn parse_bundled(text: &str) -> Result<BTreeMap<(u8, usize, u32), BundledRow>> {
    let mut rows = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: &str| Error::Parse {
            line: i + 1,
            message: m.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(err("expected `q n d lower upper source`"));
        }
        let q: u8 = fields[0].parse().map_err(|_| err("bad q"))?;
        let n: usize = fields[1].parse().map_err(|_| err("bad n"))?;
        let d: u32 = fields[2].parse().map_err(|_| err("bad d"))?;
        let lower: BigUint = fields[3].parse().map_err(|_| err("bad lower"))?;
        let upper: BigUint = fields[4].parse().map_err(|_| err("bad upper"))?;
        if lower > upper {
            return Err(err("lower exceeds upper"));
        }
        rows.insert(
            (q, n, d),
            BundledRow {
                lower,
                upper,
                source: fields[5].to_string(),
            },
        );
    }
    Ok(rows)
}

/// Memoising provider of `A_q(n, d)` bounds.
#[derive(Debug, Clone)]
pub struct HammingBounds {
    bundled: BTreeMap<(u8, usize, u32), BundledRow>,
    search: Option<SearchConfig>,
    cache: BTreeMap<(u8, usize, u32), HammingBoundEntry>,
}

impl HammingBounds {
    /// Bundled data plus closed forms and fallbacks; `search` enables exact
    /// search for small `q^n` when nothing cheaper is exact.
    pub fn new(search: Option<SearchConfig>) -> Self {
        HammingBounds {
            bundled: parse_bundled(BUNDLED).expect("bundled table parses"),
            search,
            cache: BTreeMap::new(),
        }
    }

    /// Rows of the bundled table as `(q, n, d, lower, upper, source)`.
    pub fn bundled_rows(&self) -> impl Iterator<Item = (u8, usize, u32, &BigUint, &BigUint, &str)> {
        self.bundled
            .iter()
            .map(|(&(q, n, d), r)| (q, n, d, &r.lower, &r.upper, r.source.as_str()))
    }

    pub fn get(&mut self, q: u8, n: usize, d: u32) -> HammingBoundEntry {
        if let Some(e) = self.cache.get(&(q, n, d)) {
            return e.clone();
        }
        let e = self.compute(q, n, d);
        self.cache.insert((q, n, d), e.clone());
        e
    }

    fn compute(&self, q: u8, n: usize, d: u32) -> HammingBoundEntry {
        let qn = pow(q as u32, n);
        let du = d as usize;
        // candidates in order of preference: (lower, source), (upper, source)
        let mut lowers: Vec<(BigUint, HammingSource)> = Vec::new();
        let mut uppers: Vec<(BigUint, HammingSource)> = Vec::new();

        let closed = if d <= 1 {
            Some((qn.clone(), "whole-space"))
        } else if du > n {
            Some((BigUint::from(1u32), "single-word"))
        } else if d == 2 {
            Some((pow(q as u32, n - 1), "parity-mds"))
        } else if du == n {
            Some((BigUint::from(q), "repetition-mds"))
        } else {
            None
        };
        let has_closed = closed.is_some();
        if let Some((v, name)) = closed {
            lowers.push((v.clone(), HammingSource::ClosedForm(name)));
            uppers.push((v, HammingSource::ClosedForm(name)));
        }
        if let Some(row) = self.bundled.get(&(q, n, d)) {
            lowers.push((row.lower.clone(), HammingSource::Bundled(row.source.clone())));
            uppers.push((row.upper.clone(), HammingSource::Bundled(row.source.clone())));
        }
        let exact_so_far = has_closed
            || self
                .bundled
                .get(&(q, n, d))
                .is_some_and(|r| r.lower == r.upper);
        if !exact_so_far {
            if let Some(cfg) = &self.search {
                if let Ok(out) = exact_A(q, n, d, cfg) {
                    let src = if out.is_exact() {
                        HammingSource::ExactSearch
                    } else {
                        HammingSource::SearchInterval
                    };
                    lowers.push((BigUint::from(out.lower), src.clone()));
                    uppers.push((BigUint::from(out.upper), src));
                }
            }
        }
        let gv = qn.div_ceil(&hamming_ball_volume(q as u32, n, du.saturating_sub(1)));
        lowers.push((gv, HammingSource::GilbertVarshamov));
        let singleton = if du == 0 {
            qn.clone()
        } else {
            pow(q as u32, n.saturating_sub(du - 1))
        };
        uppers.push((singleton, HammingSource::Singleton));

        let (lower, lower_source) = best(lowers, |a, b| a > b);
        let (upper, upper_source) = best(uppers, |a, b| a < b);
        HammingBoundEntry {
            q,
            n,
            d,
            lower,
            upper,
            lower_source,
            upper_source,
        }
    }
}

fn best(
    candidates: Vec<(BigUint, HammingSource)>,
    better: impl Fn(&BigUint, &BigUint) -> bool,
) -> (BigUint, HammingSource) {
    let mut it = candidates.into_iter();
    let mut winner = it.next().expect("at least one candidate");
    for c in it {
        if better(&c.0, &winner.0) {
            winner = c;
        }
    }
    winner
}
