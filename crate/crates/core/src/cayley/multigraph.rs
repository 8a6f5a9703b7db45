use std::collections::BTreeMap;

use super::{CayleyError, CayleyGraph, Sym, Word};
use crate::group::{is_prime, Cosets, Elem, Subgroup};

/// A multigraph in which every symbol acts as a function on the vertices:
/// vertex `v` has one outgoing edge per symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: usize,
    symbols: Vec<Sym>,
    next: Vec<u32>,
}

impl Multigraph {
    pub fn new(vertices: usize, symbols: Vec<Sym>, next: Vec<u32>) -> Multigraph {
        assert_eq!(next.len(), vertices * symbols.len());
        Multigraph { vertices, symbols, next }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    pub fn degree(&self) -> usize {
        self.symbols.len()
    }

    fn column(&self, s: Sym) -> Option<usize> {
        self.symbols
            .iter()
            .position(|&t| t == s)
            .or_else(|| self.symbols.iter().position(|&t| t.gen == s.gen && s.inv && !t.inv && !self.symbols.contains(&t.inverse())))
    }

    /// Endpoint of the edge leaving `v` labelled `s`.
    pub fn step(&self, v: usize, s: Sym) -> Option<usize> {
        self.column(s).map(|c| self.next[v * self.symbols.len() + c] as usize)
    }

    pub fn target(&self, v: usize, column: usize) -> usize {
        self.next[v * self.symbols.len() + column] as usize
    }

    /// Number of edges from `u` to `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        (0..self.symbols.len()).filter(|&c| self.target(u, c) == v).count()
    }

    /// Unordered pairs `{u, v}`, `u < v`, joined by at least two edges, with
    /// their multiplicity.
    pub fn double_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertices {
            let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
            for c in 0..self.symbols.len() {
                *counts.entry(self.target(u, c)).or_default() += 1;
            }
            for (v, m) in counts {
                if v > u && m >= 2 {
                    out.push((u, v, m));
                }
            }
        }
        out
    }

    /// Vertices visited by a walk, including both ends; `None` on an
    /// unknown symbol.
    pub fn walk(&self, start: usize, w: &Word) -> Option<Vec<usize>> {
        let mut v = start;
        let mut out = vec![v];
        for &s in w.syms() {
            v = self.step(v, s)?;
            out.push(v);
        }
        Some(out)
    }

    /// Whether the walk from `start` visits every vertex once and closes up.
    pub fn is_hamiltonian_walk(&self, start: usize, w: &Word) -> bool {
        if w.len() != self.vertices {
            return false;
        }
        let Some(vs) = self.walk(start, w) else { return false };
        if vs[vs.len() - 1] != start {
            return false;
        }
        let mut seen = vec![false; self.vertices];
        vs[..vs.len() - 1].iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// Steps of the walk that run along a multiple edge.
    pub fn double_edge_steps(&self, start: usize, w: &Word) -> Vec<usize> {
        let Some(vs) = self.walk(start, w) else { return Vec::new() };
        (0..w.len()).filter(|&i| self.multiplicity(vs[i], vs[i + 1]) >= 2).collect()
    }
}

/// The multigraph on right cosets of a subgroup in a Cayley graph.
#[derive(Clone, Debug)]
pub struct CosetMultigraph {
    pub subgroup: Subgroup,
    pub cosets: Cosets,
    pub graph: Multigraph,
}

impl CosetMultigraph {
    pub(crate) fn build(cay: &CayleyGraph<'_>, h: &Subgroup) -> CosetMultigraph {
        let g = cay.group();
        let cosets = g.right_cosets(h);
        let k = cosets.count();
        let syms = cay.symbols().to_vec();
        let mut next = Vec::with_capacity(k * syms.len());
        for &r in &cosets.reps {
            for &s in &syms {
                next.push(cosets.of(cay.step(r, s)) as u32);
            }
        }
        CosetMultigraph { subgroup: h.clone(), graph: Multigraph::new(k, syms, next), cosets }
    }

    pub fn coset_of(&self, g: Elem) -> usize {
        self.cosets.of(g)
    }

    /// Every edge as `(source, target, symbol)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, Sym)> {
        let mut out = Vec::new();
        for u in 0..self.graph.vertex_count() {
            for (c, &s) in self.graph.symbols().iter().enumerate() {
                out.push((u, self.graph.target(u, c), s));
            }
        }
        out.sort();
        out
    }

    pub fn double_edges(&self) -> Vec<(usize, usize, usize)> {
        self.graph.double_edges()
    }
}

/// A multigraph on `Z_p x Z_p`, vertex `(i, j)` at index `i*p + j`.
#[derive(Clone, Debug)]
pub struct PlaneMultigraph {
    pub p: usize,
    pub graph: Multigraph,
}

impl PlaneMultigraph {
    pub fn index(&self, i: i64, j: i64) -> usize {
        let p = self.p as i64;
        (i.rem_euclid(p) * p + j.rem_euclid(p)) as usize
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.p, v % self.p)
    }
}

/// The quotient multigraph of `Cay(Z3 x| (Zp x Zp); {s, t})` by `<s>`.
/// Generator 0 is `s`, generator 1 is `t`: `t` moves `(i, j)` to
/// `(i+1, j)` and `s` moves it to `(-j, i-j)`. `p` must be a prime of at
/// least 5.
pub fn three_p_sq_multigraph(p: usize) -> Result<PlaneMultigraph, CayleyError> {
    if p < 5 || !is_prime(p) {
        return Err(CayleyError::NotPrime(p));
    }
    let syms = vec![Sym::fwd(0), Sym::back(0), Sym::fwd(1), Sym::back(1)];
    let mut pm = PlaneMultigraph { p, graph: Multigraph::new(0, syms.clone(), Vec::new()) };
    let mut next = Vec::with_capacity(p * p * 4);
    for i in 0..p as i64 {
        for j in 0..p as i64 {
            next.push(pm.index(-j, i - j) as u32);
            next.push(pm.index(j - i, -i) as u32);
            next.push(pm.index(i + 1, j) as u32);
            next.push(pm.index(i - 1, j) as u32);
        }
    }
    pm.graph = Multigraph::new(p * p, syms, next);
    Ok(pm)
}
