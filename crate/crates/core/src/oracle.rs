//! Backtracking Hamiltonian-cycle search and an independent certificate
//! checker.
//!
//! The search is a depth-first walk from vertex 0 that tries neighbours in
//! ascending label order and prunes with three tests: every unvisited vertex
//! keeps two usable neighbours, a neighbour of the head with only one other
//! usable neighbour forces the next move, and the unvisited vertices stay
//! connected to the head.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::cayley::{CayleyGraph, Sym, Word};
use crate::group::{Elem, GroupTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub const DEFAULT: SearchBudget = SearchBudget { max_nodes: 10_000_000, max_time: Duration::from_secs(30) };
    pub const FALLBACK: SearchBudget = SearchBudget { max_nodes: 100_000_000, max_time: Duration::from_secs(300) };
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::DEFAULT
    }
}

/// The search ended without a cycle. `complete` means every branch was
/// explored, so no Hamiltonian cycle exists.
#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("search exhausted after {nodes} nodes ({})", if *complete { "complete" } else { "budget reached" })]
pub struct Exhausted {
    pub complete: bool,
    pub nodes: u64,
}

/// Undirected graph with labelled adjacency lists; labels order the search.
#[derive(Clone, Debug)]
pub struct AdjGraph {
    adj: Vec<Vec<(usize, usize)>>,
}

impl AdjGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> AdjGraph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            if !adj[u].iter().any(|&(w, _)| w == v) {
                adj[u].push((v, v));
                adj[v].push((u, u));
            }
        }
        for a in &mut adj {
            a.sort();
        }
        AdjGraph { adj }
    }

    fn from_cayley(cay: &CayleyGraph<'_>) -> AdjGraph {
        let adj = cay
            .group()
            .elements()
            .map(|v| {
                let mut out: Vec<(usize, usize)> = Vec::new();
                for (label, &s) in cay.symbols().iter().enumerate() {
                    let w = cay.step(v, s).index();
                    if w != v.index() && !out.iter().any(|&(x, _)| x == w) {
                        out.push((w, label));
                    }
                }
                out
            })
            .collect();
        AdjGraph { adj }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {0}: expected two vertex numbers")]
    BadLine(usize),
}

/// Parses an edge list: one `u v` pair per line, `#` comments allowed.
/// Vertices are numbered from 0 and the count is one more than the largest.
pub fn parse_edge_list(text: &str) -> Result<AdjGraph, EdgeListError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| EdgeListError::BadLine(i + 1)))
            .collect::<Result<_, _>>()?;
        let [u, v] = nums.as_slice() else { return Err(EdgeListError::BadLine(i + 1)) };
        n = n.max(u + 1).max(v + 1);
        edges.push((*u, *v));
    }
    Ok(AdjGraph::from_edges(n, &edges))
}

struct Dfs<'a> {
    g: &'a AdjGraph,
    target: Option<usize>,
    visited: Vec<bool>,
    free_deg: Vec<usize>,
    path: Vec<usize>,
    labels: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    out_of_budget: bool,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        for &(w, _) in &self.g.adj[v] {
            self.free_deg[w] -= 1;
        }
    }

    fn unvisit(&mut self, v: usize) {
        self.visited[v] = false;
        for &(w, _) in &self.g.adj[v] {
            self.free_deg[w] += 1;
        }
    }

    /// Usable neighbours of an unvisited vertex that survive the head
    /// moving on: unvisited ones, plus the start when closing a cycle.
    fn post(&self, w: usize) -> usize {
        self.free_deg[w] + usize::from(self.target.is_none() && self.g.adjacent(w, 0))
    }

    fn usable(&self, w: usize, head: usize) -> usize {
        let via_head = self.g.adjacent(w, head) && !(self.target.is_none() && head == 0);
        self.post(w) + usize::from(via_head)
    }

    fn need(&self, w: usize) -> usize {
        // the path's final vertex only needs one usable neighbour
        if self.target == Some(w) {
            1
        } else {
            2
        }
    }

    fn locally_ok(&self, prev: usize, head: usize) -> bool {
        for &x in [prev, head].iter() {
            for &(w, _) in &self.g.adj[x] {
                if !self.visited[w] && self.usable(w, head) < self.need(w) {
                    return false;
                }
            }
        }
        true
    }

    fn connected(&self, head: usize, remaining: usize) -> bool {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut stack = vec![head];
        seen[head] = true;
        let mut count = 0;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.g.adj[v] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == remaining
    }

    fn run(&mut self, remaining: usize) -> bool {
        let head = *self.path.last().unwrap();
        if remaining == 0 {
            return match self.target {
                Some(t) => head == t,
                None => self.g.adjacent(head, 0) || self.g.vertex_count() <= 2,
            };
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.budget.max_time)
        {
            self.out_of_budget = true;
            return false;
        }
        if self.target.is_none() && self.free_deg[0] == 0 {
            return false;
        }
        if !self.connected(head, remaining) {
            return false;
        }
        // forced move: a neighbour whose only other usable neighbour is gone
        let mut forced: Option<usize> = None;
        for &(w, _) in &self.g.adj[head] {
            if self.visited[w] || self.target == Some(w) && remaining > 1 {
                continue;
            }
            if self.post(w) < self.need(w) {
                if forced.is_some() {
                    return false;
                }
                forced = Some(w);
            }
        }
        let cands: Vec<(usize, usize)> = self.g.adj[head]
            .iter()
            .copied()
            .filter(|&(w, _)| !self.visited[w] && forced.is_none_or(|f| f == w))
            .filter(|&(w, _)| self.target != Some(w) || remaining == 1)
            .collect();
        for (w, label) in cands {
            self.visit(w);
            self.path.push(w);
            self.labels.push(label);
            if self.locally_ok(head, w) && self.run(remaining - 1) {
                return true;
            }
            self.labels.pop();
            self.path.pop();
            self.unvisit(w);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Deterministic xorshift generator for the rotation phase.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Rotation-extension heuristic: grow a path from vertex 0, and when the
/// end is stuck, reverse the tail after a neighbour of the end inside the
/// path. Returns a Hamiltonian path from 0 whose end is adjacent to 0.
fn rotate_extend(g: &AdjGraph, seed: u64, max_steps: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut rng = XorShift(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1);
    let mut path = vec![0usize];
    let mut pos = vec![usize::MAX; n];
    pos[0] = 0;
    for _ in 0..max_steps {
        let end = *path.last().unwrap();
        if path.len() == n && g.adjacent(end, 0) {
            return Some(path);
        }
        let fresh: Vec<usize> = g.adj[end].iter().map(|&(w, _)| w).filter(|&w| pos[w] == usize::MAX).collect();
        if !fresh.is_empty() {
            // prefer the fresh neighbour with fewest fresh neighbours
            let score = |w: usize| g.adj[w].iter().filter(|&&(x, _)| pos[x] == usize::MAX).count();
            let best = fresh.iter().map(|&w| score(w)).min().unwrap();
            let ties: Vec<usize> = fresh.into_iter().filter(|&w| score(w) == best).collect();
            let w = ties[rng.below(ties.len())];
            pos[w] = path.len();
            path.push(w);
            continue;
        }
        let inner: Vec<usize> =
            g.adj[end].iter().map(|&(w, _)| pos[w]).filter(|&i| i != usize::MAX && i + 1 < path.len() - 1).collect();
        if inner.is_empty() {
            return None;
        }
        let i = inner[rng.below(inner.len())];
        path[i + 1..].reverse();
        for (k, &v) in path.iter().enumerate().skip(i + 1) {
            pos[v] = k;
        }
    }
    None
}

fn heuristic_cycle(g: &AdjGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    (0..8u64).find_map(|seed| rotate_extend(g, seed + 1, 40 * n * n + 1000))
}

fn search(g: &AdjGraph, target: Option<usize>, budget: SearchBudget) -> Result<(Vec<usize>, Vec<usize>), Exhausted> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Exhausted { complete: true, nodes: 0 });
    }
    let mut d = Dfs {
        g,
        target,
        visited: vec![false; n],
        free_deg: g.adj.iter().map(|a| a.len()).collect(),
        path: vec![0],
        labels: Vec::new(),
        nodes: 0,
        budget,
        started: Instant::now(),
        out_of_budget: false,
    };
    d.visit(0);
    if d.run(n - 1) {
        Ok((d.path, d.labels))
    } else {
        Err(Exhausted { complete: !d.out_of_budget, nodes: d.nodes })
    }
}

/// A Hamiltonian cycle of a plain graph as a vertex sequence from 0 (the
/// closing edge back to 0 is implied).
pub fn find_hamiltonian_adjacency(g: &AdjGraph, budget: SearchBudget) -> Result<Vec<usize>, Exhausted> {
    if g.vertex_count() < 3 {
        return Err(Exhausted { complete: true, nodes: 0 });
    }
    if let Some(p) = heuristic_cycle(g) {
        return Ok(p);
    }
    search(g, None, budget).map(|(p, _)| p)
}

/// A Hamiltonian cycle of a Cayley graph as a word from the identity.
/// Requires the identity at index 0.
pub fn find_hamiltonian(cay: &CayleyGraph<'_>, budget: SearchBudget) -> Result<Word, Exhausted> {
    let g = cay.group();
    assert_eq!(g.identity().index(), 0, "search starts at element 0");
    let n = g.order();
    if n == 1 {
        return Ok(Word::new());
    }
    if n == 2 {
        return Ok(Word(vec![cay.symbols()[0]; 2]));
    }
    let adj = AdjGraph::from_cayley(cay);
    let path = match heuristic_cycle(&adj) {
        Some(p) => p,
        None => search(&adj, None, budget)?.0,
    };
    let syms = cay.symbols();
    let step_to = |u: usize, v: usize| {
        syms.iter().copied().find(|&s| cay.step(Elem::new(u), s).index() == v).expect("consecutive vertices are adjacent")
    };
    let mut w: Word = path.windows(2).map(|p| step_to(p[0], p[1])).collect();
    w.push(step_to(*path.last().unwrap(), 0));
    Ok(w)
}

/// A Hamiltonian path from the identity to `end`, as a word.
pub fn find_hamiltonian_path(cay: &CayleyGraph<'_>, end: Elem, budget: SearchBudget) -> Result<Word, Exhausted> {
    let g = cay.group();
    assert_eq!(g.identity().index(), 0, "search starts at element 0");
    if g.order() == 1 {
        return if end == g.identity() { Ok(Word::new()) } else { Err(Exhausted { complete: true, nodes: 0 }) };
    }
    if end == g.identity() {
        return Err(Exhausted { complete: true, nodes: 0 });
    }
    let adj = AdjGraph::from_cayley(cay);
    let (_, labels) = search(&adj, Some(end.index()), budget)?;
    Ok(labels.iter().map(|&l| cay.symbols()[l]).collect())
}

/// Independent check of a certificate: walks `word^repeat` using right
/// multiplication permutations built straight from the table.
pub fn verify_independent(group: &GroupTable, gens: &[Elem], word: &Word, repeat: usize) -> bool {
    let n = group.order();
    if gens.iter().any(|g| g.index() >= n) {
        return false;
    }
    let right: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..n).map(|x| group.row(Elem::new(x)).nth(s.index()).unwrap().index()).collect())
        .collect();
    let mut left_inv: Vec<Vec<usize>> = Vec::new();
    for r in &right {
        let mut inv = vec![0; n];
        for (x, &y) in r.iter().enumerate() {
            inv[y] = x;
        }
        left_inv.push(inv);
    }
    let total = word.len() * repeat;
    if total != if n == 1 { 0 } else { n } {
        return false;
    }
    let start = group.identity().index();
    let mut visited: HashSet<usize> = HashSet::from([start]);
    let mut v = start;
    let mut steps = 0;
    for _ in 0..repeat {
        for &Sym { gen, inv } in word.syms() {
            let Some(perm) = (if inv { left_inv.get(gen as usize) } else { right.get(gen as usize) }) else {
                return false;
            };
            v = perm[v];
            steps += 1;
            if steps < total && !visited.insert(v) {
                return false;
            }
        }
    }
    v == start && visited.len() == n
}
