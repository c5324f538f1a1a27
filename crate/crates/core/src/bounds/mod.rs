//! Certified lower and upper bounds on `T(n, d)` over a rectangle of
//! parameters, propagated to a fixed point.
//!
//! Every bound carries a [`Provenance`] naming the family that produced it.
//! Updates only ever raise a lower bound or lower an upper bound, and a bound
//! is replaced only on strict improvement, so the first family to reach a
//! value keeps the credit.

mod hamming;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::constructions::{even_zeros_size, WeightDistribution};
use crate::counting::{binomial, constant_weight_ball, pair_count_poly, pow, shell_size};
use crate::error::{Error, Result};
use crate::search::{exact_T, greedy_binary_code, SearchConfig};

pub use hamming::{HammingBoundEntry, HammingBounds, HammingSource};

/// Longest outer lexicode used by the support-construction bound.
pub const SUPPORT_LEXICODE_LIMIT: usize = 16;

/// Where a bound on `T(n, d)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `3^n` words; exact for `d <= 1`.
    WholeSpace,
    /// A single word; exact for `d > 2n`.
    SingleWord,
    /// `T(1, 2) = 2`.
    BaseCase,
    /// Words with an even number of zeros.
    EvenZeros,
    /// A ternary Hamming-distance-`d` code: `A_3(n, d) <= T(n, d)`.
    TernaryHamming,
    /// A `{-1,+1}` code from a binary code: `A_2(n, ceil(d/2)) <= T(n, d)`.
    SignedBinary,
    /// Shifted binary code of length `2n` pulled back through phi:
    /// `ceil((3/4)^n A_2(2n, d))`.
    PhiShift,
    /// Support construction with the binary lexicode as outer code.
    Support,
    /// Support construction averaged over the translates of a binary code.
    CosetAverage,
    /// `ceil(9^n / sum_{w<d} m(n, w))`.
    GeneralizedGv,
    /// GV argument inside the weight-`w` shell.
    ConstantWeightGv { w: usize },
    /// Maximum-clique search (exact or certified interval).
    Search,
    /// `T(n, d) <= 3 T(n-1, d)`.
    Puncture,
    /// `T(n, d) <= T(n-1, d) + T(n-1, d-1)`, for `d >= 2`.
    Mix,
    /// `T(n, d) <= T(n-1, d-2)`, for `d >= 3`.
    Shorten,
    /// `T(n, d) <= A_3(n, ceil(d/2))`.
    TernaryHammingUpper,
    /// `T(n, d) <= A_2(2n, d)` through the phi map.
    PhiImage,
    /// `T(n, d) <= floor(d / (d - n))` for `d > n`.
    PlotkinAbove,
    /// `T(d, d) <= floor(2d + 1/2 + sqrt(2d + 1/4))`.
    PlotkinDiagonal,
    /// Monotonicity in `d`, copied from `(n, from_d)`.
    MonotoneD { from_d: u32 },
    /// Monotonicity in `n`, copied from `(from_n, d)`.
    MonotoneN { from_n: usize },
}

impl Provenance {
    /// Human-readable tag with the parameters the family was evaluated at.
    pub fn describe(&self, n: usize, d: u32) -> String {
        let h = d.div_ceil(2);
        match *self {
            Provenance::WholeSpace => "whole-space".into(),
            Provenance::SingleWord => "single-word".into(),
            Provenance::BaseCase => "base-case".into(),
            Provenance::EvenZeros => format!("even-zeros(n={n})"),
            Provenance::TernaryHamming => format!("ternary-hamming(A3({n},{d}))"),
            Provenance::SignedBinary => format!("signed-binary(A2({n},{h}))"),
            Provenance::PhiShift => format!("phi-shift(A2({},{d}))", 2 * n),
            Provenance::Support => format!("support(outer=lexicode({n},{d}),inner=A2(w,{h}))"),
            Provenance::CosetAverage => format!("coset-average(A2({n},{d}),inner=A2(w,{h}))"),
            Provenance::GeneralizedGv => format!("generalized-gv(r={})", d.saturating_sub(1)),
            Provenance::ConstantWeightGv { w } => format!("constant-weight-gv(w={w})"),
            Provenance::Search => format!("clique-search(n={n},d={d})"),
            Provenance::Puncture => format!("puncture(3*T({},{d}))", n - 1),
            Provenance::Mix => format!("mix(T({},{d})+T({},{}))", n - 1, n - 1, d - 1),
            Provenance::Shorten => format!("shorten(T({},{}))", n - 1, d - 2),
            Provenance::TernaryHammingUpper => format!("ternary-hamming(A3({n},{h}))"),
            Provenance::PhiImage => format!("phi-image(A2({},{d}))", 2 * n),
            Provenance::PlotkinAbove => format!("plotkin(d={d},n={n})"),
            Provenance::PlotkinDiagonal => format!("plotkin-diagonal(d={d})"),
            Provenance::MonotoneD { from_d } => format!("monotone-d(T({n},{from_d}))"),
            Provenance::MonotoneN { from_n } => format!("monotone-n(T({from_n},{d}))"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: BigUint,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub n: usize,
    pub d: u32,
    pub lower: Bound,
    pub upper: Bound,
}

impl BoundEntry {
    pub fn is_exact(&self) -> bool {
        self.lower.value == self.upper.value
    }

    pub fn lower_provenance(&self) -> String {
        self.lower.provenance.describe(self.n, self.d)
    }

    pub fn upper_provenance(&self) -> String {
        self.upper.provenance.describe(self.n, self.d)
    }
}

/// Finished table for `1 <= n <= n_max`, `1 <= d <= d_max`, row-major in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    pub n_max: usize,
    pub d_max: u32,
    entries: Vec<BoundEntry>,
}

impl BoundTable {
    pub fn get(&self, n: usize, d: u32) -> Option<&BoundEntry> {
        if n == 0 || n > self.n_max || d == 0 || d > self.d_max {
            return None;
        }
        self.entries.get((n - 1) * self.d_max as usize + (d as usize - 1))
    }

    pub fn entries(&self) -> &[BoundEntry] {
        &self.entries
    }
}

#[derive(Debug, Clone)]
pub struct TableOptions {
    /// Run clique search on `T(n, d)` itself when `3^n` fits the vertex limit.
    pub search: Option<SearchConfig>,
    /// Exact search for `A_q(n, d)` values not settled by closed forms or
    /// the bundled data.
    pub hamming_search: Option<SearchConfig>,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            search: None,
            hamming_search: Some(SearchConfig::default().with_budget(20_000)),
        }
    }
}

/// Mutable table under construction.
#[derive(Debug, Clone)]
pub struct BoundsEngine {
    n_max: usize,
    d_max: u32,
    lower: Vec<Bound>,
    upper: Vec<Bound>,
    hamming: HammingBounds,
    search: Option<SearchConfig>,
    lexicode_weights: BTreeMap<(usize, u32), Vec<usize>>,
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `floor(2d + 1/2 + sqrt(2d + 1/4)) = floor((4d + 1 + sqrt(8d + 1)) / 2)`;
/// replacing the root by its integer part leaves the floor unchanged.
pub fn plotkin_diagonal(d: u64) -> BigUint {
    let s = BigUint::from(8 * d + 1).sqrt();
    (big(4 * d + 1) + s) >> 1
}

/// `floor(d / (d - n))` for `d > n`.
pub fn plotkin_above(n: usize, d: u32) -> Option<BigUint> {
    let (n, d) = (n as u64, d as u64);
    (d > n).then(|| big(d / (d - n)))
}

impl BoundsEngine {
    /// Seeds every entry with the trivial bounds `1 <= T(n, d) <= 3^n`, the
    /// exact edge rows `d <= 1` and `d > 2n`, and `T(1, 2) <= 2`.
    pub fn new(n_max: usize, d_max: u32, opts: &TableOptions) -> Result<Self> {
        if n_max == 0 || d_max == 0 {
            return Err(Error::InvalidParameter(
                "n_max and d_max must be at least 1".into(),
            ));
        }
        if n_max > 64 {
            return Err(Error::InvalidParameter(format!(
                "n_max = {n_max} is above the supported maximum of 64"
            )));
        }
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for n in 1..=n_max {
            for d in 1..=d_max {
                let space = pow(3, n);
                let (lo, hi) = if d <= 1 {
                    (
                        (space.clone(), Provenance::WholeSpace),
                        (space, Provenance::WholeSpace),
                    )
                } else if d as usize > 2 * n {
                    (
                        (big(1), Provenance::SingleWord),
                        (big(1), Provenance::SingleWord),
                    )
                } else if n == 1 && d == 2 {
                    ((big(1), Provenance::SingleWord), (big(2), Provenance::BaseCase))
                } else {
                    ((big(1), Provenance::SingleWord), (space, Provenance::WholeSpace))
                };
                lower.push(Bound {
                    value: lo.0,
                    provenance: lo.1,
                });
                upper.push(Bound {
                    value: hi.0,
                    provenance: hi.1,
                });
            }
        }
        Ok(BoundsEngine {
            n_max,
            d_max,
            lower,
            upper,
            hamming: HammingBounds::new(opts.hamming_search),
            search: opts.search,
            lexicode_weights: BTreeMap::new(),
        })
    }

    fn idx(&self, n: usize, d: u32) -> usize {
        (n - 1) * self.d_max as usize + (d as usize - 1)
    }

    fn cells(&self) -> impl Iterator<Item = (usize, u32)> {
        let d_max = self.d_max;
        (1..=self.n_max).flat_map(move |n| (1..=d_max).map(move |d| (n, d)))
    }

    /// Current upper bound on `T(n, d)`, with the edge values `T(0, d) = 1`,
    /// `T(n, 0) = 3^n` and `T(n, d) = 1` for `d > 2n` outside the rectangle.
    pub fn upper_value(&self, n: usize, d: u32) -> BigUint {
        if n == 0 || d as usize > 2 * n {
            return big(1);
        }
        if d == 0 {
            return pow(3, n);
        }
        if n > self.n_max || d > self.d_max {
            // only reached for in-range recursions when the rectangle is narrow
            return pow(3, n);
        }
        self.upper[self.idx(n, d)].value.clone()
    }

    pub fn lower_value(&self, n: usize, d: u32) -> BigUint {
        if d == 0 && n > 0 {
            return pow(3, n);
        }
        if n == 0 || d as usize > 2 * n || n > self.n_max || d > self.d_max {
            return big(1);
        }
        self.lower[self.idx(n, d)].value.clone()
    }

    fn improve_lower(&mut self, n: usize, d: u32, value: BigUint, provenance: Provenance) -> bool {
        let i = self.idx(n, d);
        if value > self.lower[i].value {
            self.lower[i] = Bound { value, provenance };
            true
        } else {
            false
        }
    }

    fn improve_upper(&mut self, n: usize, d: u32, value: BigUint, provenance: Provenance) -> bool {
        let i = self.idx(n, d);
        if value < self.upper[i].value {
            self.upper[i] = Bound { value, provenance };
            true
        } else {
            false
        }
    }

    fn lexicode_weights(&mut self, n: usize, d: u32) -> Option<Vec<usize>> {
        if n > SUPPORT_LEXICODE_LIMIT {
            return None;
        }
        if let Some(w) = self.lexicode_weights.get(&(n, d)) {
            return Some(w.clone());
        }
        let code = greedy_binary_code(n, d).ok()?;
        let counts = WeightDistribution::of(&code).counts;
        self.lexicode_weights.insert((n, d), counts.clone());
        Some(counts)
    }

    /// Every table-independent lower bound family at `(n, d)`, in the order
    /// they are applied.
    pub fn lower_candidates(&mut self, n: usize, d: u32) -> Vec<(BigUint, Provenance)> {
        let h = d.div_ceil(2);
        let mut out = Vec::new();
        if d <= 2 {
            out.push((even_zeros_size(n), Provenance::EvenZeros));
        }
        out.push((self.hamming.get(3, n, d).lower, Provenance::TernaryHamming));
        out.push((self.hamming.get(2, n, h).lower, Provenance::SignedBinary));
        let phi = self.hamming.get(2, 2 * n, d).lower * pow(3, n);
        out.push((phi.div_ceil(&pow(4, n)), Provenance::PhiShift));

        let inner: Vec<BigUint> = (0..=n).map(|w| self.hamming.get(2, w, h).lower).collect();
        if let Some(weights) = self.lexicode_weights(n, d) {
            let size: BigUint = weights
                .iter()
                .zip(&inner)
                .map(|(&a, b)| BigUint::from(a) * b)
                .sum();
            out.push((size, Provenance::Support));
        }
        let outer = self.hamming.get(2, n, d).lower;
        let total: BigUint = inner
            .iter()
            .enumerate()
            .map(|(w, b)| binomial(n, w) * b)
            .sum();
        // the best translate is at least the average, and sizes are integers
        out.push(((outer * total).div_ceil(&pow(2, n)), Provenance::CosetAverage));

        let pairs = pair_count_poly(n);
        let denom = pairs.cumulative(d as usize - 1);
        out.push((pow(9, n).div_ceil(&denom), Provenance::GeneralizedGv));

        let mut best_cw: Option<(BigUint, usize)> = None;
        for w in 1..=n {
            let v = shell_size(n, w).div_ceil(&constant_weight_ball(n, w, d as usize - 1));
            if best_cw.as_ref().map_or(true, |(b, _)| v > *b) {
                best_cw = Some((v, w));
            }
        }
        if let Some((v, w)) = best_cw {
            out.push((v, Provenance::ConstantWeightGv { w }));
        }
        out
    }

    /// Applies every lower bound family.
    pub fn lower_all(&mut self) -> bool {
        let mut changed = false;
        let cells: Vec<_> = self.cells().collect();
        for (n, d) in cells {
            for (v, p) in self.lower_candidates(n, d) {
                changed |= self.improve_lower(n, d, v, p);
            }
        }
        changed
    }

    /// Clique search on every cell with `3^n` within the vertex limit.
    pub fn apply_search(&mut self) -> Result<bool> {
        let Some(cfg) = self.search else {
            return Ok(false);
        };
        let mut changed = false;
        let cells: Vec<_> = self.cells().collect();
        for (n, d) in cells {
            if 3u128.pow(n.min(40) as u32) > cfg.vertex_limit as u128 {
                continue;
            }
            let out = exact_T(n, d, &cfg)?;
            changed |= self.improve_lower(n, d, big(out.lower as u64), Provenance::Search);
            changed |= self.improve_upper(n, d, big(out.upper as u64), Provenance::Search);
        }
        Ok(changed)
    }

    /// The three shortening/puncturing recursions, swept in increasing `n`.
    pub fn upper_recursions(&mut self) -> bool {
        let mut changed = false;
        let cells: Vec<_> = self.cells().filter(|&(n, _)| n >= 2).collect();
        for (n, d) in cells {
            for (v, p) in self.recursion_candidates(n, d) {
                changed |= self.improve_upper(n, d, v, p);
            }
        }
        changed
    }

    fn recursion_candidates(&self, n: usize, d: u32) -> Vec<(BigUint, Provenance)> {
        let mut out = Vec::new();
        if d >= 2 {
            out.push((
                self.upper_value(n - 1, d) + self.upper_value(n - 1, d - 1),
                Provenance::Mix,
            ));
        }
        out.push((self.upper_value(n - 1, d) * 3u32, Provenance::Puncture));
        if d >= 3 {
            out.push((self.upper_value(n - 1, d - 2), Provenance::Shorten));
        }
        out
    }

    /// `A_3(n, ceil(d/2))` and `A_2(2n, d)` upper bounds.
    pub fn upper_hamming_bridge(&mut self) -> bool {
        let mut changed = false;
        let cells: Vec<_> = self.cells().collect();
        for (n, d) in cells {
            for (v, p) in self.bridge_candidates(n, d) {
                changed |= self.improve_upper(n, d, v, p);
            }
        }
        changed
    }

    fn bridge_candidates(&mut self, n: usize, d: u32) -> Vec<(BigUint, Provenance)> {
        vec![
            (
                self.hamming.get(3, n, d.div_ceil(2)).upper,
                Provenance::TernaryHammingUpper,
            ),
            (self.hamming.get(2, 2 * n, d).upper, Provenance::PhiImage),
        ]
    }

    pub fn upper_plotkin(&mut self) -> bool {
        let mut changed = false;
        let cells: Vec<_> = self.cells().collect();
        for (n, d) in cells {
            for (v, p) in plotkin_candidates(n, d) {
                changed |= self.improve_upper(n, d, v, p);
            }
        }
        changed
    }

    /// `T` is non-increasing in `d` and non-decreasing in `n`.
    pub fn monotone_closure(&mut self) -> bool {
        let mut changed = false;
        loop {
            let mut round = false;
            let cells: Vec<_> = self.cells().collect();
            for &(n, d) in &cells {
                if d < self.d_max {
                    let v = self.lower_value(n, d + 1);
                    round |= self.improve_lower(n, d, v, Provenance::MonotoneD { from_d: d + 1 });
                }
                if n > 1 {
                    let v = self.lower_value(n - 1, d);
                    round |= self.improve_lower(n, d, v, Provenance::MonotoneN { from_n: n - 1 });
                }
            }
            for &(n, d) in cells.iter().rev() {
                if d > 1 {
                    let v = self.upper_value(n, d - 1);
                    round |= self.improve_upper(n, d, v, Provenance::MonotoneD { from_d: d - 1 });
                }
                if n < self.n_max {
                    let v = self.upper_value(n + 1, d);
                    round |= self.improve_upper(n, d, v, Provenance::MonotoneN { from_n: n + 1 });
                }
            }
            if !round {
                return changed;
            }
            changed = true;
        }
    }

    /// Applies every family until nothing changes. Terminates because every
    /// update moves a bound strictly inside a finite interval.
    pub fn run_to_fixed_point(&mut self) -> Result<()> {
        self.lower_all();
        self.apply_search()?;
        loop {
            let mut changed = self.upper_recursions();
            changed |= self.upper_hamming_bridge();
            changed |= self.upper_plotkin();
            changed |= self.monotone_closure();
            self.check()?;
            if !changed {
                return Ok(());
            }
        }
    }

    fn check(&self) -> Result<()> {
        for (n, d) in self.cells() {
            let i = self.idx(n, d);
            let (lo, hi) = (&self.lower[i], &self.upper[i]);
            if lo.value > hi.value || lo.value.is_zero() {
                return Err(Error::Inconsistent {
                    n,
                    d: d as usize,
                    lower: lo.value.to_string(),
                    upper: hi.value.to_string(),
                    lower_provenance: lo.provenance.describe(n, d),
                    upper_provenance: hi.provenance.describe(n, d),
                });
            }
        }
        Ok(())
    }

    /// Recomputes the family named by `provenance` at `(n, d)` against the
    /// current table. `None` if the family does not apply there.
    pub fn replay(&mut self, n: usize, d: u32, lower: bool, provenance: Provenance) -> Option<BigUint> {
        let space = pow(3, n);
        match provenance {
            Provenance::WholeSpace => Some(space),
            Provenance::SingleWord => {
                (lower || d as usize > 2 * n).then(BigUint::one)
            }
            Provenance::BaseCase => (n == 1 && d == 2).then(|| big(2)),
            Provenance::Search => {
                let cfg = self.search?;
                let out = exact_T(n, d, &cfg).ok()?;
                Some(big(if lower { out.lower } else { out.upper } as u64))
            }
            Provenance::MonotoneD { from_d } => {
                if from_d == 0 || from_d > self.d_max || from_d.abs_diff(d) != 1 {
                    return None;
                }
                Some(if lower {
                    self.lower_value(n, from_d)
                } else {
                    self.upper_value(n, from_d)
                })
            }
            Provenance::MonotoneN { from_n } => {
                if from_n == 0 || from_n > self.n_max || from_n.abs_diff(n) != 1 {
                    return None;
                }
                Some(if lower {
                    self.lower_value(from_n, d)
                } else {
                    self.upper_value(from_n, d)
                })
            }
            p if lower => self
                .lower_candidates(n, d)
                .into_iter()
                .find(|(_, q)| *q == p)
                .map(|(v, _)| v),
            p => {
                let mut all = if n >= 2 {
                    self.recursion_candidates(n, d)
                } else {
                    Vec::new()
                };
                all.extend(self.bridge_candidates(n, d));
                all.extend(plotkin_candidates(n, d));
                all.into_iter().find(|(_, q)| *q == p).map(|(v, _)| v)
            }
        }
    }

    pub fn finish(self) -> Result<BoundTable> {
        self.check()?;
        let entries = self
            .cells()
            .map(|(n, d)| {
                let i = self.idx(n, d);
                BoundEntry {
                    n,
                    d,
                    lower: self.lower[i].clone(),
                    upper: self.upper[i].clone(),
                }
            })
            .collect();
        Ok(BoundTable {
            n_max: self.n_max,
            d_max: self.d_max,
            entries,
        })
    }
}

fn plotkin_candidates(n: usize, d: u32) -> Vec<(BigUint, Provenance)> {
    let mut out = Vec::new();
    if let Some(v) = plotkin_above(n, d) {
        out.push((v, Provenance::PlotkinAbove));
    }
    if d as usize == n {
        out.push((plotkin_diagonal(d as u64), Provenance::PlotkinDiagonal));
    }
    out
}

/// Builds the table for `1 <= n <= n_max`, `1 <= d <= d_max`.
pub fn build_table(n_max: usize, d_max: u32, opts: &TableOptions) -> Result<BoundTable> {
    let mut engine = BoundsEngine::new(n_max, d_max, opts)?;
    engine.run_to_fixed_point()?;
    engine.finish()
}

impl fmt::Display for BoundEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T({},{}) in [{}, {}]",
            self.n, self.d, self.lower.value, self.upper.value
        )
    }
}
