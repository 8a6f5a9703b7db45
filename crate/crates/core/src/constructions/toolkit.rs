//! Scans for any lifting lemma whose hypotheses hold.

use crate::cayley::{CayleyGraph, Cycle, Sym, Word};
use crate::group::{is_prime, prime_power_base, Subgroup};
use crate::lifting::{
    double_edge_normal, fgl_normal, layered_snake, normal_easy, pk_subgroup_fallback, stud61, stud71, verified,
    voltage_lift_search, Lifted, QuotientView, SubSolver, SubgroupView,
};
use crate::trace::{Cited, StepKind, Trace};

use super::{SolveError, Solver};

/// Abelian groups: every generator is central, so the grid construction
/// applies to the first one and recursion handles the quotient.
pub(super) fn abelian(solver: &Solver, cay: &CayleyGraph<'_>) -> Result<Lifted, SolveError> {
    normal_easy(cay, 0, solver)
        .map(|r| r.under("abelian", StepKind::Construction))
        .map_err(|e| SolveError::InternalInconsistency(format!("abelian grid: {e}")))
}

/// Cyclic normal subgroups, smallest first.
pub(super) fn cyclic_normal_subgroups(cay: &CayleyGraph<'_>) -> Vec<Subgroup> {
    let g = cay.group();
    let mut out: Vec<Subgroup> = Vec::new();
    for x in g.elements().skip(1) {
        let h = g.subgroup_closure(&[x]);
        if h.order() < g.order() && !out.contains(&h) && g.is_normal(&h) {
            out.push(h);
        }
    }
    out.sort_by_key(|h| (h.order(), h.members().to_vec()));
    out
}

pub(super) fn try_normal_easy(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    (0..cay.gens().len()).find_map(|i| normal_easy(cay, i, solver).ok())
}

pub(super) fn try_stud61(cay: &CayleyGraph<'_>) -> Option<Lifted> {
    let syms = cay.symbols();
    for &s1 in syms {
        for &s2 in syms {
            if s1.gen == s2.gen {
                continue;
            }
            if let Ok(c) = stud61(cay, s1, s2) {
                let (a, b) = (cay.elem(s1), cay.elem(s2));
                return Some(Lifted { cycle: c, trace: Trace::construction(format!("two-gen-commutator[s1={a},s2={b}]")) });
            }
        }
    }
    None
}

pub(super) fn try_double_edge(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    let g = cay.group();
    g.normal_subgroups_of_prime_order().iter().find_map(|n| double_edge_normal(cay, n, solver).ok())
}

pub(super) fn try_stud71(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    let k = cay.gens().len();
    if k < 2 {
        return None;
    }
    for i in 0..k {
        for s1 in [Sym::fwd(i), Sym::back(i)] {
            for &s2 in cay.symbols() {
                if s2.gen as usize == i {
                    continue;
                }
                if let Ok(r) = stud71(cay, s1, s2, solver) {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// A Hamiltonian cycle of `G/N` whose voltage generates the cyclic normal
/// subgroup `N`.
pub(super) fn try_fgl(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    for n in cyclic_normal_subgroups(cay) {
        let Ok(qv) = QuotientView::new(cay, &n) else { continue };
        if qv.gens.is_empty() {
            continue;
        }
        let Ok(sub) = solver.solve_sub(&qv.quotient.table, &qv.gens) else { continue };
        let seq = qv.lift_word(&sub.cycle);
        if let Ok(c) = fgl_normal(cay, &n, &seq) {
            let mut t = Trace::construction(format!("factor-group[N={}]", n.order()));
            t.nest(sub.trace);
            return verified(cay, c, t).ok();
        }
    }
    None
}

/// Every lemma with an explicit construction, in a fixed order.
pub(super) fn scan(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    try_normal_easy(solver, cay)
        .or_else(|| try_stud61(cay))
        .or_else(|| try_double_edge(solver, cay))
        .or_else(|| try_stud71(solver, cay))
        .or_else(|| try_fgl(solver, cay))
        .or_else(|| try_product_split(solver, cay))
}

/// Cited lifting results: a normal p-subgroup containing every `s t^-1`,
/// or a normal cyclic `<s>` of odd index.
pub(super) fn cited_scan(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    let g = cay.group();
    let s0 = cay.gens()[0];
    let diffs: Vec<_> = cay.gens().iter().map(|&s| g.mul(s, g.inv(s0))).collect();
    let n = g.normal_closure(&diffs);
    if n.order() == 1 || prime_power_base(n.order()).is_some() {
        if let Ok(r) = pk_subgroup_fallback(cay, &n, solver.opts.cited_budget) {
            return Some(r);
        }
    }
    for &s in cay.gens() {
        let n = g.subgroup_closure(&[s]);
        if !g.is_normal(&n) || (g.order() / n.order()).is_multiple_of(2) {
            continue;
        }
        let label = format!("odd-index-lift[s={s}]");
        if is_prime(n.order()) {
            if let Ok(r) = voltage_lift_search(cay, &n, 1_000_000, Cited::AlspachLifting) {
                return Some(r);
            }
        }
        if let Ok(r) = solver.cited(cay, Cited::AlspachLifting, &label) {
            return Some(r);
        }
    }
    None
}

/// `G = <A> x <B>` for a split of the generators into two commuting parts
/// with trivial intersection: a Hamiltonian path of `Cay(<A>)` carries
/// copies of a Hamiltonian cycle of `Cay(<B>)`.
pub(super) fn try_product_split(solver: &Solver, cay: &CayleyGraph<'_>) -> Option<Lifted> {
    let g = cay.group();
    let k = cay.gens().len();
    if !(2..=16).contains(&k) {
        return None;
    }
    for mask in 1u32..(1 << k) - 1 {
        let (a, b): (Vec<usize>, Vec<usize>) = (0..k).partition(|&i| mask >> i & 1 == 1);
        let ga: Vec<_> = a.iter().map(|&i| cay.gens()[i]).collect();
        let gb: Vec<_> = b.iter().map(|&i| cay.gens()[i]).collect();
        if ga.iter().any(|&x| gb.iter().any(|&y| g.mul(x, y) != g.mul(y, x))) {
            continue;
        }
        let (ha, hb) = (g.subgroup_closure(&ga), g.subgroup_closure(&gb));
        if ha.order() * hb.order() != g.order() || ha.intersection(&hb).order() != 1 {
            continue;
        }
        let part = |keep: &[usize]| {
            let sv = SubgroupView::new(cay, keep);
            let sub = solver.solve_sub(&sv.table, &sv.gens).ok()?;
            Some((sub.cycle.flatten().relabel(&sv.origin), sub.trace))
        };
        let Some((path, ta)) = part(&a) else { continue };
        let Some((fiber, tb)) = part(&b) else { continue };
        let w: Word = layered_snake(&path.drop_last().0, &fiber.0);
        let mut t = Trace::construction(format!("direct-product[{}x{}]", ha.order(), hb.order()));
        t.nest(ta);
        t.nest(tb);
        if let Ok(r) = verified(cay, Cycle::new(w, 1), t) {
            return Some(r);
        }
    }
    None
}
