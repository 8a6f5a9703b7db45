//! Independent count of the groups of a given order, kept apart from the
//! library's catalog code.
//!
//! Every group of order below 60 is solvable, so it has a normal subgroup
//! of prime index `p` and is a cyclic extension of that subgroup: an
//! automorphism `a` of `N` (conjugation by the new generator `g`) and an
//! element `h = g^p` of `N` with `a(h) = h` and `a^p` equal to conjugation
//! by `h`. Isomorphic results are merged by an explicit isomorphism search
//! after bucketing by element statistics.

use std::collections::{BTreeMap, HashMap};

/// A group as a flat multiplication table with identity 0.
#[derive(Clone, Debug)]
pub struct Tab {
    pub n: usize,
    pub mul: Vec<u8>,
}

impl Tab {
    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n).find(|&b| self.m(a, b) == 0).unwrap()
    }

    pub fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.m(x, a);
            k += 1;
        }
        k
    }

    fn cyclic(n: usize) -> Tab {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u8).collect();
        Tab { n, mul }
    }

    /// Rows of a table whose identity is element `id`, renumbered so the
    /// identity is 0.
    pub fn from_rows(rows: &[Vec<usize>], id: usize) -> Tab {
        let n = rows.len();
        let relabel = |x: usize| if x == id { 0 } else if x == 0 { id } else { x };
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u8;
            }
        }
        Tab { n, mul }
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.m(a, g);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// A generating list grown greedily, each step taking the element that
    /// enlarges the generated subgroup most.
    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut size = 1;
        while size < self.n {
            let (best, bsize) = (1..self.n)
                .map(|c| {
                    let mut t = gens.clone();
                    t.push(c);
                    (c, self.closure(&t).iter().filter(|&&b| b).count())
                })
                .max_by_key(|&(c, s)| (s, std::cmp::Reverse(c)))
                .unwrap();
            gens.push(best);
            size = bsize;
        }
        gens
    }

    /// Per-element statistics preserved by isomorphisms.
    fn element_stats(&self) -> Vec<(usize, usize, usize)> {
        let mut roots = vec![0; self.n];
        for x in 0..self.n {
            roots[self.m(x, x)] += 1;
        }
        (0..self.n)
            .map(|a| {
                let cent = (0..self.n).filter(|&b| self.m(a, b) == self.m(b, a)).count();
                (self.order_of(a), cent, roots[a])
            })
            .collect()
    }
}

/// The map sending `gens[i]` to `images[i]`, when it extends to an
/// isomorphism.
fn extend(g: &Tab, h: &Tab, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut phi = vec![usize::MAX; g.n];
    phi[0] = 0;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let b = g.m(a, s);
            let img = h.m(phi[a], t);
            if phi[b] == usize::MAX {
                phi[b] = img;
                stack.push(b);
            } else if phi[b] != img {
                return None;
            }
        }
    }
    let mut hit = vec![false; h.n];
    for &x in &phi {
        if x == usize::MAX || std::mem::replace(&mut hit[x], true) {
            return None;
        }
    }
    Some(phi)
}

fn search(g: &Tab, h: &Tab, gens: &[usize], cands: &[Vec<usize>], chosen: &mut Vec<usize>, all: bool, out: &mut Vec<Vec<usize>>) {
    if !all && !out.is_empty() {
        return;
    }
    if chosen.len() == gens.len() {
        if let Some(phi) = extend(g, h, gens, chosen) {
            out.push(phi);
        }
        return;
    }
    for &c in &cands[chosen.len()] {
        chosen.push(c);
        search(g, h, gens, cands, chosen, all, out);
        chosen.pop();
    }
}

/// Isomorphisms from `g` to `h`: every one when `all`, else at most one.
fn isomorphisms(g: &Tab, h: &Tab, all: bool) -> Vec<Vec<usize>> {
    if g.n != h.n {
        return Vec::new();
    }
    let (sg, sh) = (g.element_stats(), h.element_stats());
    let gens = g.generators();
    let cands: Vec<Vec<usize>> = gens.iter().map(|&s| (0..h.n).filter(|&t| sh[t] == sg[s]).collect()).collect();
    let mut out = Vec::new();
    search(g, h, &gens, &cands, &mut Vec::new(), all, &mut out);
    out
}

pub fn isomorphic(g: &Tab, h: &Tab) -> bool {
    !isomorphisms(g, h, false).is_empty()
}

/// `N` extended by `g` with `g^-1 x g = a(x)` and `g^p = h`; element
/// `g^i x` at index `i*|N| + x`.
fn extension(nt: &Tab, p: usize, a: &[usize], h: usize) -> Tab {
    let m = nt.n;
    let n = m * p;
    // powers[j] = a^j
    let mut powers = vec![(0..m).collect::<Vec<_>>()];
    for j in 1..p {
        let prev: &Vec<usize> = &powers[j - 1];
        powers.push(prev.iter().map(|&x| a[x]).collect());
    }
    let mut mul = vec![0u8; n * n];
    for i in 0..p {
        for x in 0..m {
            for j in 0..p {
                for y in 0..m {
                    let moved = nt.m(powers[j][x], y);
                    let (k, z) = if i + j >= p { (i + j - p, nt.m(h, moved)) } else { (i + j, moved) };
                    mul[(i * m + x) * n + j * m + y] = (k * m + z) as u8;
                }
            }
        }
    }
    Tab { n, mul }
}

fn prime_factors(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0)).collect()
}

/// Valid `(a, h)` pairs for extending `nt` by `p`, one per orbit of
/// `Aut(N)`: `(b a b^-1, b(h))` gives an isomorphic extension.
fn extension_data(nt: &Tab, p: usize) -> Vec<(Vec<usize>, usize)> {
    let autos = isomorphisms(nt, nt, true);
    let mut valid = Vec::new();
    for a in &autos {
        let mut ap: Vec<usize> = (0..nt.n).collect();
        for _ in 0..p {
            ap = ap.iter().map(|&x| a[x]).collect();
        }
        for h in 0..nt.n {
            let hi = nt.inv(h);
            if a[h] == h && (0..nt.n).all(|x| ap[x] == nt.m(nt.m(hi, x), h)) {
                valid.push((a.clone(), h));
            }
        }
    }
    let inverses: Vec<Vec<usize>> = autos
        .iter()
        .map(|b| {
            let mut bi = vec![0; nt.n];
            for (x, &y) in b.iter().enumerate() {
                bi[y] = x;
            }
            bi
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for (a, h) in valid {
        if seen.contains(&(a.clone(), h)) {
            continue;
        }
        for (b, bi) in autos.iter().zip(&inverses) {
            let conj: Vec<usize> = (0..nt.n).map(|x| b[a[bi[x]]]).collect();
            seen.insert((conj, b[h]));
        }
        reps.push((a, h));
    }
    reps
}

/// Representatives of the isomorphism classes of groups of each order
/// needed on the way to `n`.
#[derive(Default)]
pub struct Counter {
    memo: HashMap<usize, Vec<Tab>>,
}

impl Counter {
    pub fn groups(&mut self, n: usize) -> Vec<Tab> {
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let reps = if n == 1 {
            vec![Tab::cyclic(1)]
        } else {
            let mut buckets: BTreeMap<Vec<(usize, usize, usize)>, Vec<Tab>> = BTreeMap::new();
            for p in prime_factors(n) {
                for nt in self.groups(n / p) {
                    for (a, h) in extension_data(&nt, p) {
                        let t = extension(&nt, p, &a, h);
                        let mut key = t.element_stats();
                        key.sort_unstable();
                        let bucket = buckets.entry(key).or_default();
                        if !bucket.iter().any(|r| isomorphic(r, &t)) {
                            bucket.push(t);
                        }
                    }
                }
            }
            buckets.into_values().flatten().collect()
        };
        self.memo.insert(n, reps.clone());
        reps
    }
}

/// Number of groups of each order, as listed in the standard tables.
pub const PUBLISHED: &[(usize, usize)] = &[
    (6, 2),
    (8, 5),
    (12, 5),
    (18, 5),
    (20, 5),
    (24, 15),
    (27, 5),
    (28, 4),
    (36, 14),
    (40, 14),
    (50, 5),
    (54, 15),
];
