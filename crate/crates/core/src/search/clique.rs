//! Branch-and-bound maximum clique on dense bitset graphs.
//!
//! Greedy colouring bounds each subproblem (a clique uses at most one vertex
//! per colour class). Vertices are renumbered once into degeneracy order so
//! that bitset scans follow that order; ties break on the original index, so
//! every run explores the same tree.

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bitset {
    blocks: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, &b)| b != 0)
            .map(|(i, b)| i * 64 + b.trailing_zeros() as usize)
    }

    pub fn intersect(&self, other: &Bitset) -> Bitset {
        Bitset {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn subtract_in_place(&mut self, other: &Bitset) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &b)| {
            let mut b = b;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(i * 64 + t)
            })
        })
    }
}

/// Undirected simple graph as adjacency bitsets.
pub(crate) struct Graph {
    adj: Vec<Bitset>,
}

impl Graph {
    /// Builds the graph with an edge wherever `edge(i, j)` holds (`i < j`).
    pub fn from_fn(n: usize, edge: impl Fn(usize, usize) -> bool) -> Graph {
        let mut adj = vec![Bitset::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    /// Smallest-last order, reversed: densest core first.
    fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut degree: Vec<usize> = self.adj.iter().map(Bitset::count).collect();
        let mut removed = vec![false; n];
        let mut sequence = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("vertex left");
            removed[v] = true;
            sequence.push(v);
            for u in self.adj[v].iter() {
                if !removed[u] {
                    degree[u] -= 1;
                }
            }
        }
        sequence.reverse();
        sequence
    }

    fn renumber(&self, order: &[usize]) -> Graph {
        let n = self.len();
        let mut position = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        let mut adj = vec![Bitset::new(n); n];
        for (v, row) in self.adj.iter().enumerate() {
            for u in row.iter() {
                adj[position[v]].insert(position[u]);
            }
        }
        Graph { adj }
    }
}

/// One independent subproblem: cliques that contain `root` and otherwise
/// use only `candidates` (all of which must be adjacent to `root`).
pub(crate) struct Task {
    pub root: Option<usize>,
    pub candidates: Bitset,
}

pub(crate) struct CliqueOutcome {
    pub clique: Vec<usize>,
    /// Certified upper bound on the clique number over all tasks.
    pub upper: usize,
    pub nodes: u64,
}

struct Exhausted;

struct Solver<'g> {
    graph: &'g Graph,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
    frontier: usize,
}

impl Solver<'_> {
    fn colour_sort(&self, p: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.clone();
        let mut order = Vec::with_capacity(p.count());
        let mut colours = Vec::with_capacity(order.capacity());
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.subtract_in_place(self.graph.neighbours(v));
                order.push(v);
                colours.push(k);
            }
        }
        (order, colours)
    }

    fn colour_bound(&self, p: &Bitset) -> usize {
        self.colour_sort(p).1.last().copied().unwrap_or(0)
    }

    fn expand(
        &mut self,
        clique: &mut Vec<usize>,
        mut p: Bitset,
        top: bool,
    ) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        let (order, colours) = self.colour_sort(&p);
        for i in (0..order.len()).rev() {
            if clique.len() + colours[i] <= self.best.len() {
                return Ok(());
            }
            if top {
                self.frontier = clique.len() + colours[i];
            }
            let v = order[i];
            clique.push(v);
            let next = p.intersect(self.graph.neighbours(v));
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next, false)?;
            }
            clique.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// Greedy clique following the given vertex order.
fn greedy_clique(graph: &Graph, order: &[usize]) -> Vec<usize> {
    let mut clique: Vec<usize> = Vec::new();
    for &v in order {
        if clique.iter().all(|&u| graph.neighbours(v).contains(u)) {
            clique.push(v);
        }
    }
    clique
}

/// Maximum clique over the union of `tasks`, with a node-expansion budget.
///
/// If the budget runs out, `clique` is the best found and `upper` bounds the
/// clique number from the colouring of whatever was left unexplored.
pub(crate) fn max_clique(graph: &Graph, tasks: &[Task], budget: u64) -> CliqueOutcome {
    let n = graph.len();
    if n == 0 {
        return CliqueOutcome {
            clique: Vec::new(),
            upper: 0,
            nodes: 0,
        };
    }
    let order = graph.degeneracy_order();
    let renumbered = graph.renumber(&order);
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let relabel = |set: &Bitset| {
        let mut out = Bitset::new(n);
        for v in set.iter() {
            out.insert(position[v]);
        }
        out
    };

    let identity: Vec<usize> = (0..n).collect();
    let mut solver = Solver {
        graph: &renumbered,
        budget,
        nodes: 0,
        best: greedy_clique(&renumbered, &identity),
        frontier: 0,
    };
    // tasks must cover every clique of the graph for the greedy start to be sound
    let tasks: Vec<(Option<usize>, Bitset)> = tasks
        .iter()
        .map(|t| (t.root.map(|r| position[r]), relabel(&t.candidates)))
        .collect();

    let mut upper = None;
    for (idx, (root, candidates)) in tasks.iter().enumerate() {
        let mut clique: Vec<usize> = root.iter().copied().collect();
        let base = clique.len();
        if base > solver.best.len() {
            solver.best = clique.clone();
        }
        solver.frontier = base + solver.colour_bound(candidates);
        let result = if candidates.is_empty() {
            Ok(())
        } else {
            solver.expand(&mut clique, candidates.clone(), true)
        };
        if result.is_err() {
            let rest = tasks[idx + 1..]
                .iter()
                .map(|(r, c)| r.iter().count() + solver.colour_bound(c))
                .max()
                .unwrap_or(0);
            upper = Some(solver.best.len().max(solver.frontier).max(rest));
            break;
        }
    }
    let mut clique: Vec<usize> = solver.best.iter().map(|&p| order[p]).collect();
    clique.sort_unstable();
    CliqueOutcome {
        upper: upper.unwrap_or(clique.len()),
        clique,
        nodes: solver.nodes,
    }
}

/// The single task "whole graph".
pub(crate) fn whole_graph(n: usize) -> Vec<Task> {
    let mut all = Bitset::new(n);
    for v in 0..n {
        all.insert(v);
    }
    vec![Task {
        root: None,
        candidates: all,
    }]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> usize {
        let mut best = 0;
        for mask in 0u32..1 << n {
            let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = vs
                .iter()
                .enumerate()
                .all(|(a, &i)| vs[a + 1..].iter().all(|&j| edge(i, j)));
            if ok {
                best = best.max(vs.len());
            }
        }
        best
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_graphs() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        for trial in 0..40 {
            let n = 6 + trial % 9;
            let mut bits = vec![vec![false; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    seed ^= seed << 13;
                    seed ^= seed >> 7;
                    seed ^= seed << 17;
                    let e = seed % 100 < 55;
                    bits[i][j] = e;
                    bits[j][i] = e;
                }
            }
            let edge = |i: usize, j: usize| bits[i][j];
            let g = Graph::from_fn(n, edge);
            let out = max_clique(&g, &whole_graph(n), u64::MAX);
            assert_eq!(out.clique.len(), brute_force(n, &edge));
            assert_eq!(out.upper, out.clique.len());
            for (a, &i) in out.clique.iter().enumerate() {
                for &j in &out.clique[a + 1..] {
                    assert!(edge(i, j));
                }
            }
        }
    }

    #[test]
    fn exhausted_budget_gives_valid_interval() {
        // complete 5-partite graph with parts of size 4: clique number 5
        let n = 20;
        let g = Graph::from_fn(n, |i, j| i % 5 != j % 5);
        let out = max_clique(&g, &whole_graph(n), 1);
        assert!(out.clique.len() <= 5);
        assert!(out.upper >= 5);
        let full = max_clique(&g, &whole_graph(n), u64::MAX);
        assert_eq!((full.clique.len(), full.upper), (5, 5));
    }

    #[test]
    fn empty_and_edgeless() {
        let g = Graph::from_fn(0, |_, _| true);
        assert_eq!(max_clique(&g, &whole_graph(0), 10).clique.len(), 0);
        let g = Graph::from_fn(4, |_, _| false);
        let out = max_clique(&g, &whole_graph(4), 10);
        assert_eq!((out.clique.len(), out.upper), (1, 1));
    }
}
