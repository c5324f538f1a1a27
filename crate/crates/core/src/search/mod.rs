//! Exact values of `T(n, d)` and `A_q(n, d)` at small lengths.
//!
//! A code with minimum distance `d` is a clique in the graph on all words
//! with an edge between words at distance `>= d`, so the maximum code size
//! is that graph's clique number. Coordinate permutations and per-coordinate
//! sign changes preserve d1, which lets the search fix the first codeword to
//! one representative per orbit (for `Q^n` the orbits are indexed by the
//! number of zeros).

mod clique;
mod greedy;
mod plotkin;

pub use greedy::{greedy_binary_code, greedy_gv_code, GreedyOrder};
pub use plotkin::{plotkin_witness_check, ColumnStats, PlotkinReport};

use crate::code::{BinaryCode, TernaryCode};
use crate::error::{Error, Result};
use crate::word::{BinaryWord, Symbol, TernaryWord};
use clique::{max_clique, whole_graph, Bitset, Graph, Task};

/// Default cap on the number of vertices (`3^7`).
pub const DEFAULT_VERTEX_LIMIT: usize = 2187;
/// Environment variable that overrides [`DEFAULT_VERTEX_LIMIT`].
pub const VERTEX_LIMIT_ENV: &str = "TBOUNDS_VERTEX_LIMIT";
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub vertex_limit: usize,
    /// Maximum number of branch-and-bound node expansions.
    pub budget: u64,
    /// Fix the first codeword to an orbit representative.
    pub symmetry: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            budget: DEFAULT_BUDGET,
            symmetry: true,
        }
    }
}

impl SearchConfig {
    /// Default configuration with the vertex limit taken from
    /// `TBOUNDS_VERTEX_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(VERTEX_LIMIT_ENV) {
            cfg.vertex_limit = v.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("{VERTEX_LIMIT_ENV}={v} is not a number"))
            })?;
        }
        Ok(cfg)
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// Result of a search: exact when `lower == upper`, otherwise a certified
/// interval. `witness` always has `lower` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<C> {
    pub lower: usize,
    pub upper: usize,
    pub witness: C,
    pub nodes: u64,
}

impl<C> SearchOutcome<C> {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }

    fn map<D>(self, f: impl FnOnce(C) -> D) -> SearchOutcome<D> {
        SearchOutcome {
            lower: self.lower,
            upper: self.upper,
            witness: f(self.witness),
            nodes: self.nodes,
        }
    }
}

fn check_vertices(count: u128, limit: usize) -> Result<usize> {
    if count > limit as u128 {
        return Err(Error::OverVertexLimit {
            vertices: count,
            limit,
        });
    }
    Ok(count as usize)
}

fn run<W>(
    vertices: &[W],
    dist: impl Fn(&W, &W) -> u32,
    d: u32,
    tasks: Option<Vec<Task>>,
    cfg: &SearchConfig,
) -> SearchOutcome<Vec<W>>
where
    W: Clone,
{
    let graph = Graph::from_fn(vertices.len(), |i, j| dist(&vertices[i], &vertices[j]) >= d);
    let tasks = tasks.unwrap_or_else(|| whole_graph(vertices.len()));
    let out = max_clique(&graph, &tasks, cfg.budget);
    SearchOutcome {
        lower: out.clique.len(),
        upper: out.upper,
        witness: out.clique.iter().map(|&v| vertices[v].clone()).collect(),
        nodes: out.nodes,
    }
}

/// Orbit tasks: representative `reps[k]` as root, with candidates its
/// neighbours outside the orbits of `reps[..k]`.
fn orbit_tasks<W>(
    vertices: &[W],
    dist: impl Fn(&W, &W) -> u32,
    d: u32,
    reps: &[usize],
    orbit_of: impl Fn(&W) -> usize,
) -> Vec<Task> {
    let n = vertices.len();
    let mut tasks = Vec::with_capacity(reps.len());
    for (k, &r) in reps.iter().enumerate() {
        let mut candidates = Bitset::new(n);
        for (v, w) in vertices.iter().enumerate() {
            if v != r && orbit_of(w) >= k && dist(&vertices[r], w) >= d {
                candidates.insert(v);
            }
        }
        tasks.push(Task {
            root: Some(r),
            candidates,
        });
    }
    tasks
}

/// Exact `T(n, d)` (or an interval if the budget runs out).
#[allow(non_snake_case)]
pub fn exact_T(n: usize, d: u32, cfg: &SearchConfig) -> Result<SearchOutcome<TernaryCode>> {
    check_vertices(3u128.checked_pow(n as u32).unwrap_or(u128::MAX), cfg.vertex_limit)?;
    let vertices: Vec<TernaryWord> = TernaryWord::all(n).collect();
    let dist = |a: &TernaryWord, b: &TernaryWord| a.d1_unchecked(b);
    let tasks = if cfg.symmetry && n > 0 {
        // orbit k: words with k nonzero coordinates; representative -1^k 0^(n-k)
        let reps: Vec<usize> = (0..=n)
            .rev()
            .map(|k| {
                let mut syms = vec![Symbol::Zero; n];
                syms[..k].fill(Symbol::Minus);
                TernaryWord::from_symbols(&syms).expect("length checked").index() as usize
            })
            .collect();
        let orbit_of = |w: &TernaryWord| n - w.weight();
        Some(orbit_tasks(&vertices, dist, d, &reps, orbit_of))
    } else {
        None
    };
    let out = run(&vertices, dist, d, tasks, cfg);
    Ok(out.map(|ws| TernaryCode::from_words(n, ws).expect("clique words are distinct")))
}

/// Exact maximum size of a code inside the weight-`w` shell of `Q^n`.
#[allow(non_snake_case)]
pub fn exact_T_constant_weight(
    n: usize,
    w: usize,
    d: u32,
    cfg: &SearchConfig,
) -> Result<SearchOutcome<TernaryCode>> {
    if w > n {
        return Err(Error::InvalidParameter(format!("weight {w} exceeds length {n}")));
    }
    let size = crate::counting::shell_size(n, w);
    let size: u128 = size.try_into().unwrap_or(u128::MAX);
    check_vertices(size, cfg.vertex_limit)?;
    if n > crate::counting::EXHAUSTIVE_LIMIT {
        return Err(Error::OverExhaustiveLimit {
            n,
            limit: crate::counting::EXHAUSTIVE_LIMIT,
        });
    }
    let vertices: Vec<TernaryWord> = TernaryWord::all(n).filter(|x| x.weight() == w).collect();
    let dist = |a: &TernaryWord, b: &TernaryWord| a.d1_unchecked(b);
    let tasks = if cfg.symmetry && !vertices.is_empty() {
        // the shell is a single orbit; -1^w 0^(n-w) is its smallest word
        Some(orbit_tasks(&vertices, dist, d, &[0], |_| 0))
    } else {
        None
    };
    let out = run(&vertices, dist, d, tasks, cfg);
    Ok(out.map(|ws| TernaryCode::from_words(n, ws).expect("clique words are distinct")))
}

/// Every word of `{0..q-1}^n` in lexicographic order.
pub fn all_qary_words(q: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..q).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

/// Exact `A_q(n, d)` by clique search in Hamming space.
#[allow(non_snake_case)]
pub fn exact_A(q: u8, n: usize, d: u32, cfg: &SearchConfig) -> Result<SearchOutcome<Vec<Vec<u8>>>> {
    if q < 2 {
        return Err(Error::InvalidParameter("alphabet size must be at least 2".into()));
    }
    check_vertices(
        (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX),
        cfg.vertex_limit,
    )?;
    let vertices = all_qary_words(q, n);
    let dist = |a: &Vec<u8>, b: &Vec<u8>| a.iter().zip(b).filter(|(x, y)| x != y).count() as u32;
    let tasks = if cfg.symmetry {
        // Hamming space is vertex-transitive; the all-zero word is index 0
        Some(orbit_tasks(&vertices, dist, d, &[0], |_| 0))
    } else {
        None
    };
    Ok(run(&vertices, dist, d, tasks, cfg))
}

/// Converts a q = 2 witness into a [`BinaryCode`].
pub fn binary_witness(n: usize, words: &[Vec<u8>]) -> Result<BinaryCode> {
    BinaryCode::from_words(
        n,
        words
            .iter()
            .map(|w| BinaryWord::new(w))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Largest binary code of length `n` and distance `d` this crate can find:
/// the exact search witness when it fits, else a lexicode.
pub fn best_binary_code(n: usize, d: u32, cfg: &SearchConfig) -> Result<BinaryCode> {
    if let Ok(out) = exact_A(2, n, d, cfg) {
        let lex = greedy_binary_code(n, d)?;
        if lex.len() >= out.lower {
            return Ok(lex);
        }
        return binary_witness(n, &out.witness);
    }
    greedy_binary_code(n, d)
}
