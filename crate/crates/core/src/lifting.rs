//! Lifting Hamiltonian cycles from quotients and subgroups.
//!
//! Every operation checks its hypotheses first and reports the failing
//! clause with witnesses; every returned cycle has been verified on the
//! Cayley graph it was built for.

use thiserror::Error;

use crate::cayley::{CayleyGraph, Cycle, HamFailure, Sym, Word};
use crate::group::{is_prime, Elem, GroupTable, Quotient, Subgroup};
use crate::oracle::{find_hamiltonian, SearchBudget};
use crate::trace::{Cited, StepKind, Trace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("{lemma}: hypothesis failed: {clause} (witness {witness:?})")]
    HypothesisFailure { lemma: &'static str, clause: String, witness: Vec<Elem> },
    #[error("no rotation of the subgroup cycle ends with the required step")]
    RotationImpossible,
    #[error("cited result violated: {0}")]
    TheoremViolationSuspected(String),
    #[error("constructed walk is not a Hamiltonian cycle: {0}")]
    NotHamiltonian(HamFailure),
    #[error("sub-problem failed: {0}")]
    Sub(String),
    #[error("search budget exhausted")]
    BudgetExceeded,
}

fn fail(lemma: &'static str, clause: impl Into<String>, witness: Vec<Elem>) -> LiftError {
    LiftError::HypothesisFailure { lemma, clause: clause.into(), witness }
}

/// A verified cycle and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifted {
    pub cycle: Cycle,
    pub trace: Trace,
}

/// Source of Hamiltonian cycles for smaller groups.
pub trait SubSolver {
    /// A Hamiltonian cycle of `Cay(group; gens)`, as a cycle over indices of
    /// `gens`. `gens` may contain repeats; they must generate the group.
    fn solve_sub(&self, group: &GroupTable, gens: &[Elem]) -> Result<Lifted, LiftError>;
}

/// Solves sub-problems by plain search; tagged as unexpected fallbacks.
pub struct SearchSolver(pub SearchBudget);

impl SubSolver for SearchSolver {
    fn solve_sub(&self, group: &GroupTable, gens: &[Elem]) -> Result<Lifted, LiftError> {
        let cay = CayleyGraph::new(group, gens).map_err(|e| LiftError::Sub(e.to_string()))?;
        let w = find_hamiltonian(&cay, self.0).map_err(|_| LiftError::BudgetExceeded)?;
        Ok(Lifted { cycle: Cycle::new(w, 1), trace: Trace::unexpected("search") })
    }
}

pub(crate) fn verified(cay: &CayleyGraph<'_>, cycle: Cycle, trace: Trace) -> Result<Lifted, LiftError> {
    cay.check_cycle(&cycle).map_err(LiftError::NotHamiltonian)?;
    Ok(Lifted { cycle, trace })
}

/// `G/N` with generators: the distinct non-trivial images of `S`, one per
/// inverse pair, and for each a symbol of `S u S^-1` mapping onto it.
pub struct QuotientView {
    pub quotient: Quotient,
    pub gens: Vec<Elem>,
    pub origin: Vec<Sym>,
}

impl QuotientView {
    pub fn new(cay: &CayleyGraph<'_>, n: &Subgroup) -> Result<QuotientView, LiftError> {
        let g = cay.group();
        let quotient = g.quotient(n).map_err(|_| fail("quotient", "subgroup is normal", n.members().to_vec()))?;
        let qt = &quotient.table;
        let mut gens = Vec::new();
        let mut origin = Vec::new();
        for (i, &s) in cay.gens().iter().enumerate() {
            let x = quotient.project(s);
            if x == qt.identity() || gens.contains(&x) || gens.contains(&qt.inv(x)) {
                continue;
            }
            gens.push(x);
            origin.push(Sym::fwd(i));
        }
        Ok(QuotientView { quotient, gens, origin })
    }

    /// The quotient cycle, flattened, in symbols of the parent graph.
    pub fn lift_word(&self, c: &Cycle) -> Word {
        c.flatten().relabel(&self.origin)
    }
}

/// `<S - {gen}>` as a group of its own, with its generators and the parent
/// symbol for each.
pub struct SubgroupView {
    pub table: GroupTable,
    pub embed: Vec<Elem>,
    pub gens: Vec<Elem>,
    pub origin: Vec<Sym>,
}

impl SubgroupView {
    pub fn new(cay: &CayleyGraph<'_>, keep: &[usize]) -> SubgroupView {
        let g = cay.group();
        let sel: Vec<Elem> = keep.iter().map(|&i| cay.gens()[i]).collect();
        let sub = g.subgroup_closure(&sel);
        let (table, embed) = g.subgroup_table(&sub);
        let pos = |e: Elem| Elem::new(embed.iter().position(|&x| x == e).unwrap());
        SubgroupView {
            gens: sel.iter().map(|&e| pos(e)).collect(),
            origin: keep.iter().map(|&i| Sym::fwd(i)).collect(),
            table,
            embed,
        }
    }
}

/// Cycle in a grid `P_n x C_L`: `layer` lists the `n-1` steps between
/// consecutive layers, `fiber` is a closed walk of length `L` inside a
/// layer, and every layer step must commute with every fiber step.
pub fn layered_snake(layer: &[Sym], fiber: &[Sym]) -> Word {
    let n = layer.len() + 1;
    let l = fiber.len();
    if n == 1 {
        return Word(fiber.to_vec());
    }
    let mut w = Word(fiber[..l - 1].to_vec());
    let mut pos = l - 1;
    w.push(layer[0]);
    for &step in &layer[1..] {
        if pos == l - 1 {
            for j in (2..l).rev() {
                w.push(fiber[j - 1].inverse());
            }
            pos = 1;
        } else {
            for j in 2..l {
                w.push(fiber[j - 1]);
            }
            pos = l - 1;
        }
        w.push(step);
    }
    if pos == 1 {
        for j in 2..=l {
            w.push(fiber[j - 1]);
        }
    } else {
        for j in (1..l).rev() {
            w.push(fiber[j - 1].inverse());
        }
    }
    for &step in layer.iter().rev() {
        w.push(step.inverse());
    }
    w
}

/// Prefix products `e, s1, s1 s2, ...` of a word (without the full product).
fn prefixes(cay: &CayleyGraph<'_>, w: &Word) -> (Vec<Elem>, Elem) {
    let (mut v, end) = cay.evaluate_walk(cay.group().identity(), w);
    v.pop();
    (v, end)
}

fn check_coset_cycle(
    lemma: &'static str,
    cay: &CayleyGraph<'_>,
    h: &Subgroup,
    seq: &Word,
) -> Result<Elem, LiftError> {
    let g = cay.group();
    let index = g.order() / h.order();
    if seq.len() != index {
        return Err(fail(lemma, format!("sequence length {} equals the index {index}", seq.len()), vec![]));
    }
    let cos = g.right_cosets(h);
    let (pre, end) = prefixes(cay, seq);
    let mut seen = vec![false; index];
    for &x in &pre {
        if std::mem::replace(&mut seen[cos.of(x)], true) {
            return Err(fail(lemma, "partial products lie in distinct right cosets", vec![x]));
        }
    }
    if !h.contains(end) {
        return Err(fail(lemma, "product lies in the subgroup", vec![end]));
    }
    Ok(end)
}

/// `(s1, ..., sn)^|H|` is a Hamiltonian cycle when `H` is cyclic of index
/// `n`, the partial products lie in distinct right cosets of `H`, and the
/// full product generates `H`.
pub fn fgl_cyclic_cosets(cay: &CayleyGraph<'_>, h: &Subgroup, seq: &Word) -> Result<Cycle, LiftError> {
    const L: &str = "fgl-cosets";
    let g = cay.group();
    if !g.subgroup_is_cyclic(h) {
        return Err(fail(L, "subgroup is cyclic", h.members().to_vec()));
    }
    let end = check_coset_cycle(L, cay, h, seq)?;
    if g.element_order(end) != h.order() {
        return Err(fail(L, "product generates the subgroup", vec![end]));
    }
    let c = Cycle::new(seq.clone(), h.order());
    cay.check_cycle(&c).map_err(LiftError::NotHamiltonian)?;
    Ok(c)
}

/// Lifts a Hamiltonian cycle of `Cay(G/N)` whose product generates the
/// cyclic normal subgroup `N`.
pub fn fgl_normal(cay: &CayleyGraph<'_>, n: &Subgroup, quotient_seq: &Word) -> Result<Cycle, LiftError> {
    const L: &str = "fgl-normal";
    if let Some((h, g)) = cay.group().normality_witness(n) {
        return Err(fail(L, "subgroup is normal", vec![h, g]));
    }
    fgl_cyclic_cosets(cay, n, quotient_seq).map_err(|e| match e {
        LiftError::HypothesisFailure { clause, witness, .. } => LiftError::HypothesisFailure { lemma: L, clause, witness },
        e => e,
    })
}

/// For `K` normal in `H`: a Hamiltonian cycle of the coset graph by `H`
/// whose product generates `H/K` repeats `|H/K|` times to a Hamiltonian
/// cycle of the coset graph by `K`.
pub fn fgl_skew(cay: &CayleyGraph<'_>, h: &Subgroup, k: &Subgroup, seq: &Word) -> Result<Cycle, LiftError> {
    const L: &str = "fgl-skew";
    let g = cay.group();
    if !k.is_subset_of(h) {
        return Err(fail(L, "K is contained in H", vec![]));
    }
    for &x in k.members() {
        for &y in h.members() {
            if !k.contains(g.conjugate(x, y)) {
                return Err(fail(L, "K is normal in H", vec![x, y]));
            }
        }
    }
    let end = check_coset_cycle(L, cay, h, seq)?;
    let mut gens = k.members().to_vec();
    gens.push(end);
    if g.subgroup_closure(&gens).order() != h.order() {
        return Err(fail(L, "product generates H/K", vec![end]));
    }
    let reps = h.order() / k.order();
    let c = Cycle::new(seq.clone(), reps);
    let mg = cay.coset_multigraph(k);
    if !mg.graph.is_hamiltonian_walk(mg.coset_of(g.identity()), &c.flatten()) {
        return Err(LiftError::NotHamiltonian(HamFailure::NotClosed { endpoint: end }));
    }
    Ok(c)
}

/// Finds the first step of `seq` that has a parallel edge in the coset
/// multigraph of `h`, and the alternative symbol.
fn parallel_step(cay: &CayleyGraph<'_>, h: &Subgroup, seq: &Word) -> Option<(usize, Sym)> {
    let g = cay.group();
    let cos = g.right_cosets(h);
    let (pre, _) = prefixes(cay, seq);
    for (i, &s) in seq.syms().iter().enumerate() {
        let here = pre[i];
        let to = cos.of(cay.step(here, s));
        let se = cay.elem(s);
        if let Some(&t) = cay.symbols().iter().find(|&&t| cay.elem(t) != se && cos.of(cay.step(here, t)) == to) {
            return Some((i, t));
        }
    }
    None
}

/// `H` of prime order and a Hamiltonian cycle of the coset multigraph that
/// runs along a multiple edge: one of the two labels of that edge gives a
/// product generating `H`, and the cycle lifts.
pub fn multi_double(cay: &CayleyGraph<'_>, h: &Subgroup, seq: &Word) -> Result<Cycle, LiftError> {
    const L: &str = "multi-double";
    let g = cay.group();
    if !is_prime(h.order()) {
        return Err(fail(L, "subgroup has prime order", vec![]));
    }
    check_coset_cycle(L, cay, h, seq)?;
    let (i, alt) = parallel_step(cay, h, seq).ok_or_else(|| fail(L, "cycle uses a multiple edge", vec![]))?;
    let mut other = seq.clone();
    other.0[i] = alt;
    for w in [seq, &other] {
        if cay.word_product(w) != g.identity() {
            return fgl_cyclic_cosets(cay, h, w);
        }
    }
    Err(LiftError::TheoremViolationSuspected("both labels of a multiple edge give trivial voltage".into()))
}

/// Whether the distinct non-trivial images of `gens` form a minimal
/// generating set of the quotient.
fn images_minimal(q: &QuotientView) -> bool {
    let t = &q.quotient.table;
    (0..q.gens.len()).all(|i| {
        let rest: Vec<Elem> = q.gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        !t.generates(&rest)
    })
}

/// `N` normal of prime order, the image of `S` minimal in `G/N`, and two
/// different elements of `S u S^-1` congruent modulo `N`: a Hamiltonian
/// cycle of `G/N` lifts.
pub fn double_edge_normal(cay: &CayleyGraph<'_>, n: &Subgroup, solver: &dyn SubSolver) -> Result<Lifted, LiftError> {
    const L: &str = "double-edge";
    let g = cay.group();
    if !is_prime(n.order()) {
        return Err(fail(L, "subgroup has prime order", n.members().to_vec()));
    }
    if let Some((h, x)) = g.normality_witness(n) {
        return Err(fail(L, "subgroup is normal", vec![h, x]));
    }
    let qv = QuotientView::new(cay, n)?;
    if !images_minimal(&qv) {
        return Err(fail(L, "image of S is a minimal generating set of G/N", qv.gens.clone()));
    }
    let syms = cay.symbols();
    let congruent = syms.iter().enumerate().find_map(|(i, &s)| {
        syms[i + 1..]
            .iter()
            .find(|&&t| qv.quotient.project(cay.elem(s)) == qv.quotient.project(cay.elem(t)))
            .map(|&t| (s, t))
    });
    let Some((s, t)) = congruent else {
        return Err(fail(L, "two elements of S u S^-1 are congruent modulo N", vec![]));
    };
    let sub = solver.solve_sub(&qv.quotient.table, &qv.gens)?;
    let seq = qv.lift_word(&sub.cycle);
    let cycle = multi_double(cay, n, &seq)?;
    let mut trace = Trace::construction(format!("double-edge[N={},s={},t={}]", n.order(), cay.elem(s), cay.elem(t)));
    trace.nest(sub.trace);
    verified(cay, cycle, trace)
}

/// `<s>` normal for a generator `s`, with `s` central, or `<s>` meeting
/// the center trivially, or `|s|` prime: a Hamiltonian cycle of `G/<s>`
/// lifts.
pub fn normal_easy(cay: &CayleyGraph<'_>, gen: usize, solver: &dyn SubSolver) -> Result<Lifted, LiftError> {
    const L: &str = "normal-easy";
    let g = cay.group();
    let s = cay.gens()[gen];
    let n = g.subgroup_closure(&[s]);
    if let Some((h, x)) = g.normality_witness(&n) {
        return Err(fail(L, "<s> is normal", vec![h, x]));
    }
    let center = g.center();
    let central = center.contains(s);
    let meets_trivially = n.intersection(&center).order() == 1;
    if !central && !meets_trivially {
        return Err(fail(L, "s central or <s> meets the center trivially", vec![s]));
    }
    let m = n.order();
    let qv = QuotientView::new(cay, &n)?;
    if qv.gens.is_empty() {
        let c = Cycle::new(Word::sym_pow(Sym::fwd(gen), m as i64), 1);
        return verified(cay, c, Trace::construction("normal-easy[cyclic]"));
    }
    let sub = solver.solve_sub(&qv.quotient.table, &qv.gens)?;
    let seq = qv.lift_word(&sub.cycle);
    let cycle = if central {
        let layer = &seq.syms()[..seq.len() - 1];
        let fiber = vec![Sym::fwd(gen); m];
        Cycle::new(layered_snake(layer, &fiber), 1)
    } else {
        let k = g.element_order(cay.word_product(&seq));
        let reps = g.order() / (seq.len() * k);
        let mut w = Word::new();
        for &t in seq.syms() {
            w.extend(&Word::sym_pow(Sym::fwd(gen), reps as i64 - 1));
            w.push(t);
        }
        Cycle::new(w, k)
    };
    let case = if central { "central" } else { "center-free" };
    let mut trace = Trace::construction(format!("normal-easy[{case},s={s}]"));
    trace.nest(sub.trace);
    verified(cay, cycle, trace)
}

/// Two generators `s1, s2` with `g = [s1, s2]` and `2|s1||g| = |G|`,
/// `s2` outside `<s1><g>`, and `<g>` meeting both `<s1>` and its conjugate
/// by `s2` trivially.
pub fn stud61(cay: &CayleyGraph<'_>, s1: Sym, s2: Sym) -> Result<Cycle, LiftError> {
    const L: &str = "two-gen-commutator";
    let g = cay.group();
    if s1.gen == s2.gen {
        return Err(fail(L, "s1 and s2 are different generators", vec![]));
    }
    let (a, b) = (cay.elem(s1), cay.elem(s2));
    let gamma = g.commutator(a, b);
    let oa = g.element_order(a);
    let og = g.element_order(gamma);
    if 2 * oa * og != g.order() {
        return Err(fail(L, "2|s1||[s1,s2]| = |G|", vec![a, gamma]));
    }
    let ca = g.subgroup_closure(&[a]);
    let cg = g.subgroup_closure(&[gamma]);
    if ca.members().iter().any(|&x| cg.members().iter().any(|&y| g.mul(x, y) == b)) {
        return Err(fail(L, "s2 not in <s1><[s1,s2]>", vec![b]));
    }
    if cg.intersection(&ca).order() != 1 {
        return Err(fail(L, "<[s1,s2]> meets <s1> trivially", vec![gamma, a]));
    }
    let conj: Vec<Elem> = ca.members().iter().map(|&x| g.conjugate(x, b)).collect();
    if conj.iter().any(|&x| x != g.identity() && cg.contains(x)) {
        return Err(fail(L, "<[s1,s2]> meets s2^-1 <s1> s2 trivially", vec![gamma, b]));
    }
    let k = oa as i64 - 1;
    let w = crate::word![Word::sym_pow(s1, k), s2.inverse(), Word::sym_pow(s1, -k), s2];
    let c = Cycle::new(w, og);
    cay.check_cycle(&c).map_err(LiftError::NotHamiltonian)?;
    Ok(c)
}

/// With `K = <S - {s1}>`: if `|s1 s2| = |G : K|` and `<s1 s2>` meets `K`
/// trivially, a Hamiltonian cycle of `K` ending in `s2^-1` gives
/// `((t1, ..., t_{n-1}), s1)^{|s1 s2|}`.
pub fn stud71(cay: &CayleyGraph<'_>, s1: Sym, s2: Sym, solver: &dyn SubSolver) -> Result<Lifted, LiftError> {
    const L: &str = "subgroup-rotation";
    let g = cay.group();
    if s1.gen == s2.gen {
        return Err(fail(L, "s1 and s2 are different generators", vec![]));
    }
    let keep: Vec<usize> = (0..cay.gens().len()).filter(|&i| i != s1.gen as usize).collect();
    let sv = SubgroupView::new(cay, &keep);
    let k = g.subgroup_closure(&keep.iter().map(|&i| cay.gens()[i]).collect::<Vec<_>>());
    let (a, b) = (cay.elem(s1), cay.elem(s2));
    let ab = g.mul(a, b);
    let oab = g.element_order(ab);
    if oab * k.order() != g.order() {
        return Err(fail(L, "|s1 s2| = |G : <S - s1>|", vec![ab]));
    }
    let cab = g.subgroup_closure(&[ab]);
    if cab.intersection(&k).order() != 1 {
        return Err(fail(L, "<s1 s2> meets <S - s1> trivially", vec![ab]));
    }
    let sub = solver.solve_sub(&sv.table, &sv.gens)?;
    let t = sub.cycle.flatten().relabel(&sv.origin);
    let target = g.inv(b);
    let rotated = [t.clone(), t.invert()]
        .into_iter()
        .find_map(|w| w.syms().iter().position(|&x| cay.elem(x) == target).map(|i| w.rotate_left(i + 1)))
        .ok_or(LiftError::RotationImpossible)?;
    let word = crate::word![rotated.drop_last(), s1];
    let label = if is_prime(oab) { "direct-product" } else { "subgroup-rotation" };
    let mut trace = Trace::construction(format!("{label}[s1={a},s2={b}]"));
    trace.nest(sub.trace);
    verified(cay, Cycle::new(word, oab), trace)
}

/// Searches Hamiltonian cycles of the quotient multigraph by `N` (normal,
/// prime order) for one whose voltage generates `N`, and lifts it.
pub fn voltage_lift_search(
    cay: &CayleyGraph<'_>,
    n: &Subgroup,
    max_nodes: u64,
    cited: Cited,
) -> Result<Lifted, LiftError> {
    const L: &str = "voltage";
    let g = cay.group();
    if !is_prime(n.order()) {
        return Err(fail(L, "subgroup has prime order", vec![]));
    }
    if let Some((h, x)) = g.normality_witness(n) {
        return Err(fail(L, "subgroup is normal", vec![h, x]));
    }
    let cos = g.right_cosets(n);
    let k = cos.count();
    let mut seen = vec![false; k];
    seen[cos.of(g.identity())] = true;
    let mut path: Vec<Sym> = Vec::new();
    let mut nodes = 0u64;
    fn dfs(
        cay: &CayleyGraph<'_>,
        cos: &crate::group::Cosets,
        n: &Subgroup,
        at: Elem,
        seen: &mut Vec<bool>,
        path: &mut Vec<Sym>,
        nodes: &mut u64,
        max: u64,
    ) -> Option<bool> {
        let g = cay.group();
        *nodes += 1;
        if *nodes > max {
            return None;
        }
        let k = cos.count();
        for &s in cay.symbols() {
            let to = cay.step(at, s);
            let c = cos.of(to);
            if path.len() + 1 == k {
                if n.contains(to) && g.element_order(to) == n.order() {
                    path.push(s);
                    return Some(true);
                }
                continue;
            }
            if seen[c] {
                continue;
            }
            seen[c] = true;
            path.push(s);
            match dfs(cay, cos, n, to, seen, path, nodes, max) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            path.pop();
            seen[c] = false;
        }
        Some(false)
    }
    match dfs(cay, &cos, n, g.identity(), &mut seen, &mut path, &mut nodes, max_nodes) {
        None => Err(LiftError::BudgetExceeded),
        Some(false) => Err(LiftError::TheoremViolationSuspected("no quotient cycle has generating voltage".into())),
        Some(true) => {
            let cycle = fgl_normal(cay, n, &Word(path))?;
            verified(cay, cycle, Trace::cited(cited, format!("voltage-lift[N={}]", n.order())))
        }
    }
}

/// Certified search justified by the normal p-subgroup result: `N` a
/// normal p-subgroup with `G/N` cyclic and every `s t^-1` in `N`.
pub fn pk_subgroup_fallback(cay: &CayleyGraph<'_>, n: &Subgroup, budget: SearchBudget) -> Result<Lifted, LiftError> {
    const L: &str = "pk-subgroup";
    let g = cay.group();
    if crate::group::prime_power_base(n.order()).is_none() && n.order() != 1 {
        return Err(fail(L, "N is a p-group", vec![]));
    }
    if let Some((h, x)) = g.normality_witness(n) {
        return Err(fail(L, "N is normal", vec![h, x]));
    }
    let s0 = cay.gens()[0];
    for &s in cay.gens() {
        if !n.contains(g.mul(s, g.inv(s0))) {
            return Err(fail(L, "s t^-1 lies in N for all s, t in S", vec![s, s0]));
        }
    }
    let q = g.quotient(n).map_err(|_| fail(L, "N is normal", vec![]))?;
    if !q.table.is_cyclic() {
        return Err(fail(L, "G/N is cyclic", vec![]));
    }
    let w = find_hamiltonian(cay, budget).map_err(|e| {
        if e.complete {
            LiftError::TheoremViolationSuspected("complete search found no Hamiltonian cycle".into())
        } else {
            LiftError::BudgetExceeded
        }
    })?;
    verified(cay, Cycle::new(w, 1), Trace::cited(Cited::PkSubgroup, format!("pk-subgroup[N={}]", n.order())))
}

/// Kind used when reporting a construction step.
pub const CONSTRUCTION: StepKind = StepKind::Construction;
