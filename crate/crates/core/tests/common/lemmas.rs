//! Exhaustive hypothesis scans for the lifting lemmas. Every instance a
//! lemma accepts must come back as a cycle that the independent verifier
//! accepts; an instance that passes the hypotheses but yields a bad walk
//! is a failure.

use hamcert::catalog::{builtin_catalog, enumerate_generating_sets, CatalogEntry};
use hamcert::cayley::{CayleyGraph, CosetMultigraph, Cycle, Sym, Word};
use hamcert::group::{is_prime, Elem, GroupTable, Subgroup};
use hamcert::lifting::{
    fgl_cyclic_cosets, fgl_normal, fgl_skew, multi_double, normal_easy, stud61, stud71, LiftError, QuotientView,
    SearchSolver,
};
use hamcert::oracle::{find_hamiltonian, verify_independent, SearchBudget};

/// Outcome of one lemma's scan.
#[derive(Debug, Default)]
pub struct Scan {
    pub lemma: &'static str,
    /// Instances tried.
    pub tried: usize,
    /// Instances whose hypotheses held.
    pub applicable: usize,
    pub failures: Vec<String>,
}

impl Scan {
    fn new(lemma: &'static str) -> Scan {
        Scan { lemma, ..Scan::default() }
    }

    pub fn ok(&self) -> bool {
        self.applicable > 0 && self.failures.is_empty()
    }

    fn record(&mut self, what: impl FnOnce() -> String, res: Result<bool, LiftError>) {
        self.tried += 1;
        match res {
            Ok(true) => self.applicable += 1,
            Ok(false) => {
                self.applicable += 1;
                self.failures.push(format!("{}: rejected by the independent check", what()));
            }
            Err(LiftError::HypothesisFailure { .. }) | Err(LiftError::RotationImpossible) => {}
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }
}

fn check(g: &GroupTable, gens: &[Elem], c: &Cycle) -> bool {
    verify_independent(g, gens, &c.word, c.repeat)
}

/// Groups with at least two elements up to `max_order`.
pub fn groups(max_order: usize) -> Vec<CatalogEntry> {
    builtin_catalog(max_order).into_iter().filter(|e| e.order > 1).collect()
}

/// Generating sets of exactly `size` elements, at most `cap` of them.
fn sets(g: &GroupTable, size: usize, cap: usize) -> Vec<Vec<Elem>> {
    enumerate_generating_sets(g, size, usize::MAX)
        .records
        .into_iter()
        .map(|r| r.generators)
        .filter(|s| s.len() == size)
        .take(cap)
        .collect()
}

/// Hamiltonian cycles of a coset multigraph from the identity coset, as
/// symbol sequences, at most `limit` of them.
pub fn coset_cycles(mg: &CosetMultigraph, start: usize, limit: usize) -> Vec<Word> {
    fn go(mg: &CosetMultigraph, start: usize, v: usize, seen: &mut [bool], w: &mut Vec<Sym>, out: &mut Vec<Word>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let n = seen.len();
        for &s in mg.graph.symbols() {
            let t = mg.graph.step(v, s).unwrap();
            if w.len() + 1 == n {
                if t == start {
                    w.push(s);
                    out.push(Word(w.clone()));
                    w.pop();
                }
            } else if !seen[t] {
                seen[t] = true;
                w.push(s);
                go(mg, start, t, seen, w, out, limit);
                w.pop();
                seen[t] = false;
            }
        }
    }
    let mut seen = vec![false; mg.graph.vertex_count()];
    seen[start] = true;
    let mut out = Vec::new();
    if seen.len() == 1 {
        // a single coset: any one step closes up
        return mg.graph.symbols().iter().take(limit).map(|&s| Word(vec![s])).collect();
    }
    go(mg, start, start, &mut seen, &mut Vec::new(), &mut out, limit);
    out
}

/// Whether `w^repeat` from `e` meets every right coset of `k` once and
/// ends in `k`, checked by membership tests alone.
fn coset_hamiltonian(g: &GroupTable, gens: &[Elem], k: &Subgroup, w: &Word, repeat: usize) -> bool {
    let index = g.order() / k.order();
    if w.len() * repeat != index {
        return false;
    }
    let same = |a: Elem, b: Elem| k.contains(g.mul(a, g.inv(b)));
    let mut v = g.identity();
    let mut visited = vec![v];
    for _ in 0..repeat {
        for &s in w.syms() {
            let x = if s.inv { g.inv(gens[s.gen as usize]) } else { gens[s.gen as usize] };
            v = g.mul(v, x);
            visited.push(v);
        }
    }
    let last = visited.pop().unwrap();
    if !k.contains(last) {
        return false;
    }
    (0..visited.len()).all(|i| (i + 1..visited.len()).all(|j| !same(visited[i], visited[j])))
}

fn symbols_pairs(cay: &CayleyGraph<'_>) -> Vec<(Sym, Sym)> {
    let syms = cay.symbols();
    let mut out = Vec::new();
    for &a in syms {
        for &b in syms {
            if a.gen != b.gen {
                out.push((a, b));
            }
        }
    }
    out
}

fn solver() -> SearchSolver {
    SearchSolver(SearchBudget::DEFAULT)
}

pub fn scan_stud61(max_order: usize) -> Scan {
    let mut scan = Scan::new("stud61");
    for e in groups(max_order) {
        let g = &e.table;
        for gens in sets(g, 2, usize::MAX) {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for (a, b) in symbols_pairs(&cay) {
                let res = stud61(&cay, a, b).map(|c| check(g, &gens, &c));
                scan.record(|| format!("{} {gens:?} {a:?} {b:?}", e.name), res);
            }
        }
    }
    scan
}

pub fn scan_stud71(max_order: usize, three_cap: usize) -> Scan {
    let mut scan = Scan::new("stud71");
    let solver = solver();
    for e in groups(max_order) {
        let g = &e.table;
        let mut all = sets(g, 2, usize::MAX);
        all.extend(sets(g, 3, three_cap));
        for gens in all {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for (a, b) in symbols_pairs(&cay) {
                let res = stud71(&cay, a, b, &solver).map(|l| check(g, &gens, &l.cycle));
                scan.record(|| format!("{} {gens:?} {a:?} {b:?}", e.name), res);
            }
        }
    }
    scan
}

/// Non-trivial cyclic normal subgroups.
fn cyclic_normal(g: &GroupTable) -> Vec<Subgroup> {
    g.all_subgroups().into_iter().filter(|h| h.order() > 1 && g.subgroup_is_cyclic(h) && g.is_normal(h)).collect()
}

pub fn scan_fgl_normal(max_order: usize, cap: usize) -> Scan {
    let mut scan = Scan::new("fgl_normal");
    for e in groups(max_order) {
        let g = &e.table;
        let normals = cyclic_normal(g);
        for gens in sets(g, 2, cap) {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for n in &normals {
                let qv = QuotientView::new(&cay, n).unwrap();
                let seqs: Vec<Word> = if qv.gens.is_empty() {
                    vec![Word::new()]
                } else {
                    let qc = CayleyGraph::new(&qv.quotient.table, &qv.gens).unwrap();
                    match find_hamiltonian(&qc, SearchBudget::DEFAULT) {
                        Ok(w) => vec![qv.lift_word(&Cycle::new(w, 1))],
                        Err(_) => continue,
                    }
                };
                for seq in seqs {
                    let res = fgl_normal(&cay, n, &seq).map(|c| check(g, &gens, &c));
                    scan.record(|| format!("{} {gens:?} N={:?} {seq}", e.name, n.members()), res);
                }
            }
        }
    }
    scan
}

pub fn scan_fgl_cyclic_cosets(max_order: usize, cap: usize, per: usize) -> Scan {
    let mut scan = Scan::new("fgl_cyclic_cosets");
    for e in groups(max_order) {
        let g = &e.table;
        let subs: Vec<Subgroup> = g
            .all_subgroups()
            .into_iter()
            .filter(|h| h.order() > 1 && g.subgroup_is_cyclic(h) && g.order() / h.order() <= 12)
            .collect();
        for gens in sets(g, 2, cap) {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for h in &subs {
                let mg = cay.coset_multigraph(h);
                for seq in coset_cycles(&mg, mg.coset_of(g.identity()), per) {
                    let res = fgl_cyclic_cosets(&cay, h, &seq).map(|c| check(g, &gens, &c));
                    scan.record(|| format!("{} {gens:?} H={:?} {seq}", e.name, h.members()), res);
                }
            }
        }
    }
    scan
}

pub fn scan_fgl_skew(max_order: usize, cap: usize, per: usize) -> Scan {
    let mut scan = Scan::new("fgl_skew");
    for e in groups(max_order) {
        let g = &e.table;
        let all = g.all_subgroups();
        let mut pairs = Vec::new();
        for h in all.iter().filter(|h| h.order() > 1 && g.order() / h.order() <= 8) {
            for k in all.iter().filter(|k| k.order() < h.order() && k.is_subset_of(h)) {
                let normal_in_h = k.members().iter().all(|&x| h.members().iter().all(|&y| k.contains(g.conjugate(x, y))));
                if normal_in_h {
                    pairs.push((h.clone(), k.clone()));
                }
            }
        }
        for gens in sets(g, 2, cap) {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for (h, k) in &pairs {
                let mg = cay.coset_multigraph(h);
                for seq in coset_cycles(&mg, mg.coset_of(g.identity()), per) {
                    let res = fgl_skew(&cay, h, k, &seq).map(|c| coset_hamiltonian(g, &gens, k, &c.word, c.repeat));
                    scan.record(|| format!("{} {gens:?} H={:?} K={:?} {seq}", e.name, h.members(), k.members()), res);
                }
            }
        }
    }
    scan
}

pub fn scan_multi_double(max_order: usize, cap: usize, per: usize) -> Scan {
    let mut scan = Scan::new("multi_double");
    for e in groups(max_order) {
        let g = &e.table;
        let subs: Vec<Subgroup> =
            g.all_subgroups().into_iter().filter(|h| is_prime(h.order()) && g.order() / h.order() <= 16).collect();
        let mut all = sets(g, 2, cap);
        all.extend(sets(g, 3, cap));
        for gens in all {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for h in &subs {
                let mg = cay.coset_multigraph(h);
                if mg.double_edges().is_empty() {
                    continue;
                }
                let start = mg.coset_of(g.identity());
                for seq in coset_cycles(&mg, start, per) {
                    if mg.graph.double_edge_steps(start, &seq).is_empty() {
                        continue;
                    }
                    let res = multi_double(&cay, h, &seq).map(|c| check(g, &gens, &c));
                    scan.record(|| format!("{} {gens:?} H={:?} {seq}", e.name, h.members()), res);
                }
            }
        }
    }
    scan
}

pub fn scan_normal_easy(max_order: usize, cap: usize) -> Scan {
    let mut scan = Scan::new("normal_easy");
    let solver = solver();
    for e in groups(max_order) {
        let g = &e.table;
        let mut all = sets(g, 2, cap);
        all.extend(sets(g, 3, cap));
        for gens in all {
            let cay = CayleyGraph::new(g, &gens).unwrap();
            for i in 0..gens.len() {
                let res = normal_easy(&cay, i, &solver).map(|l| check(g, &gens, &l.cycle));
                scan.record(|| format!("{} {gens:?} gen={i}", e.name), res);
            }
        }
    }
    scan
}
