//! Handlers for the structural families and the order shapes.

use crate::catalog::Route;
use crate::cayley::{CayleyGraph, Cycle, Sym};
use crate::group::{is_prime, Subgroup};
use crate::lifting::{
    double_edge_normal, fgl_cyclic_cosets, pk_subgroup_fallback, verified, Lifted, SubSolver, SubgroupView,
};
use crate::trace::{Cited, StepKind, Trace};
use crate::word;

use super::pattern::{describe, first_cycle};

use super::{endgames, special, SolveError, Solver};

/// Groups of dihedral or quaternion type.
pub(super) fn dihedral_or_quaternion(solver: &Solver, cay: &CayleyGraph<'_>) -> Result<Option<Lifted>, SolveError> {
    let g = cay.group();
    if let Some((a, _f)) = g.dihedral_type() {
        if g.subgroup_is_cyclic(&a) {
            return solver.cited(cay, Cited::Dihedral, "dihedral").map(Some);
        }
        let s_outside = cay.gens().iter().all(|&s| !a.contains(s));
        if s_outside && crate::group::prime_power_base(a.order()).is_some() {
            if let Ok(r) = pk_subgroup_fallback(cay, &a, solver.opts.cited_budget) {
                return Ok(Some(r.under("dihedral-type", StepKind::Construction)));
            }
        }
        if s_outside {
            return Ok(dihedral_type_cases(solver, cay, &a));
        }
        return Ok(None);
    }
    if let Some((_, f)) = g.quaternion_type() {
        let n = g.subgroup_closure(&[g.mul(f, f)]);
        if let Ok(r) = double_edge_normal(cay, &n, solver) {
            return Ok(Some(r.under("quaternion-type", StepKind::Construction)));
        }
    }
    Ok(None)
}

/// Dihedral type with every generator outside `A`, so every generator is
/// an involution inverting `A`.
fn dihedral_type_cases(solver: &Solver, cay: &CayleyGraph<'_>, a: &Subgroup) -> Option<Lifted> {
    let g = cay.group();
    let k = cay.gens().len();
    // f s' of prime order: a cycle on the rest, ending with f, then s'
    for fi in 0..k {
        for xi in (0..k).filter(|&i| i != fi) {
            let (f, sx) = (cay.gens()[fi], cay.gens()[xi]);
            let x = g.mul(f, sx);
            if !is_prime(g.element_order(x)) {
                continue;
            }
            let rest: Vec<usize> = (0..k).filter(|&i| i != xi).collect();
            let sv = SubgroupView::new(cay, &rest);
            let Ok(sub) = solver.solve_sub(&sv.table, &sv.gens) else { continue };
            let w = sub.cycle.flatten().relabel(&sv.origin);
            let Some(at) = w.syms().iter().position(|&s| cay.elem(s) == f) else { continue };
            let seq = word![w.rotate_left(at + 1).drop_last(), Sym::fwd(xi)];
            let h = g.subgroup_closure(&[x]);
            if let Ok(c) = fgl_cyclic_cosets(cay, &h, &seq) {
                let mut t = Trace::construction(format!("dihedral-type-prime[f={f},fx={sx}]"));
                t.nest(sub.trace);
                if let Ok(r) = verified(cay, c, t) {
                    return Some(r);
                }
            }
        }
    }
    if k != 3 {
        return None;
    }
    let p = (2..=a.order()).find(|&d| a.order().is_multiple_of(d * d) && is_prime(d))? as i64;
    let rep = a.order() / p as usize;
    let found = first_cycle(cay, 3, |r| {
        let (f, f1, f2) = (r[0], r[1], r[2]);
        (0..=p).find_map(|j| {
            let c = Cycle::new(word![word![f2, f].power((p - j) as usize), word![f2, f1].power(j as usize)], rep);
            cay.check_cycle(&c).is_ok().then_some(c)
        })
    });
    found.map(|(r, c)| Lifted {
        cycle: c,
        trace: Trace::construction(format!("dihedral-type-pair[{}]", describe(cay, &["f", "f1", "f2"], &r))),
    })
}

pub(super) fn by_route(solver: &Solver, cay: &CayleyGraph<'_>, rt: Route) -> Result<Option<Lifted>, SolveError> {
    let g = cay.group();
    match rt {
        Route::PrimePower { .. } => return solver.cited(cay, Cited::PrimePower, "prime-power").map(Some),
        Route::Unsupported | Route::NoConstruction { .. } => return solver.fallback(cay, rt).map(Some),
        _ => {}
    }
    if special::is_s4(g) {
        return special::s4(solver, cay);
    }
    if special::is_a5(g) {
        return special::a5(solver, cay).map(Some);
    }
    if let Some((p, z)) = special::a4_times_zp(g) {
        return special::a4_zp(solver, cay, p, &z);
    }
    Ok(None)
}

/// Explicit words for the order shape, then the cited results the shape
/// relies on when no word applies.
pub(super) fn endgame(solver: &Solver, cay: &CayleyGraph<'_>, rt: Route) -> Result<Option<Lifted>, SolveError> {
    let Some((list, primes)) = endgames::for_route(rt) else { return Ok(None) };
    let ctx = endgames::Ctx { cay, solver, primes };
    if let Some(r) = endgames::run(&ctx, list) {
        return Ok(Some(r));
    }
    if let Route::FourPQ { .. } = rt {
        if crate::cayley::recognize_generalized_petersen(cay).is_some() {
            return solver.cited(cay, Cited::GeneralizedPetersen, "generalized-petersen").map(Some);
        }
        for n in cay.group().normal_subgroups_of_prime_order() {
            if let Ok(r) = crate::lifting::voltage_lift_search(cay, &n, 1_000_000, Cited::VoltageCor) {
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}
