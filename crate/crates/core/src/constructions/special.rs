//! Three small groups handled on their own: `S4`, `A4 x Zp` and `A5`.

use crate::cayley::{CayleyGraph, Cycle, Sym, Word};
use crate::group::{Elem, GroupTable, Subgroup};
use crate::lifting::{Lifted, SubgroupView};
use crate::oracle::{find_hamiltonian_path, SearchBudget};
use crate::trace::{Cited, Trace};
use crate::word;

use super::pattern::{describe, first_cycle, pw};
use super::{toolkit, SolveError, Solver};

pub(super) fn is_s4(g: &GroupTable) -> bool {
    g.order() == 24 && g.center().order() == 1 && g.commutator_subgroup().order() == 12
}

pub(super) fn is_a5(g: &GroupTable) -> bool {
    g.order() == 60 && g.commutator_subgroup().order() == 60
}

fn is_a4(g: &GroupTable) -> bool {
    g.order() == 12 && g.center().order() == 1 && g.commutator_subgroup().order() == 4
}

/// `p` when `g` is `A4 x Zp` for a prime `p`, together with the centre.
pub(super) fn a4_times_zp(g: &GroupTable) -> Option<(usize, Subgroup)> {
    let n = g.order();
    if !n.is_multiple_of(12) || !crate::group::is_prime(n / 12) {
        return None;
    }
    let z = g.center();
    let d = g.commutator_subgroup();
    if z.order() != n / 12 || d.order() != 4 || d.members().iter().any(|&x| g.element_order(x) > 2) {
        return None;
    }
    let q = g.quotient(&z).ok()?;
    if !is_a4(&q.table) {
        return None;
    }
    let mut gens = d.members().to_vec();
    let complement = g.elements().any(|t| {
        if g.element_order(t) != 3 || z.contains(t) {
            return false;
        }
        gens.truncate(4);
        gens.push(t);
        let h = g.subgroup_closure(&gens);
        h.order() == 12 && h.intersection(&z).order() == 1
    });
    complement.then_some((n / 12, z))
}

fn in_subgroup_path(cay: &CayleyGraph<'_>, roles: [Sym; 2], end: Sym) -> Option<Word> {
    let sv = SubgroupView::new(cay, &[roles[0].gen as usize, roles[1].gen as usize]);
    let sub_gens: Vec<Elem> = roles
        .iter()
        .map(|&s| Elem::new(sv.embed.iter().position(|&x| x == cay.elem(s)).unwrap()))
        .collect();
    let sub = CayleyGraph::new(&sv.table, &sub_gens).ok()?;
    let end_e = Elem::new(sv.embed.iter().position(|&x| x == cay.elem(end))?);
    let path = find_hamiltonian_path(&sub, end_e, SearchBudget::DEFAULT).ok()?;
    Some(path.relabel(&roles))
}

/// Every connected Cayley graph on `S4`.
pub(super) fn s4(solver: &Solver, cay: &CayleyGraph<'_>) -> Result<Option<Lifted>, SolveError> {
    let g = cay.group();
    let even = g.commutator_subgroup();
    let k = cay.gens().len();
    if k == 2 {
        // a transposition and a 3-cycle; 4-cycles go through the commutator lemma
        if let Some((a, c)) = first_cycle(cay, 2, |r| {
            let (a, b) = (r[0], r[1]);
            (g.element_order(cay.elem(a)) == 2 && g.element_order(cay.elem(b)) == 3).then(|| {
                let half = word![word![a, pw(b, 2)].power(2), word![a, pw(b, -2)].power(2)];
                Cycle::new(half, 2)
            })
        }) {
            return Ok(Some(lifted(c, format!("s4[{}]", describe(cay, &["a", "b"], &a)))));
        }
        return Ok(toolkit::try_stud61(cay).map(|r| r.under("s4", crate::trace::StepKind::Construction)));
    }
    if k != 3 {
        return Ok(None);
    }
    let odd = |e: Elem| !even.contains(e);
    let has_even_involution = cay.gens().iter().any(|&s| !odd(s) && g.element_order(s) == 2);
    if has_even_involution {
        if let Some(r) = toolkit::try_stud71(solver, cay) {
            return Ok(Some(r.under("s4", crate::trace::StepKind::Construction)));
        }
    } else if cay.gens().iter().all(|&s| odd(s) && g.element_order(s) == 2) {
        return solver.cited(cay, Cited::Transpositions, "s4-transpositions").map(Some);
    }
    // (L, c)^2 with L a Hamiltonian path of the even subgroup from e to b
    let found = first_cycle(cay, 3, |r| {
        let (a, b, c) = (r[0], r[1], r[2]);
        let ok = !odd(cay.elem(a)) && !odd(cay.elem(b)) && odd(cay.elem(c)) && r[0] < r[1];
        if !ok {
            return None;
        }
        let l = in_subgroup_path(cay, [a, b], b)?;
        Some(Cycle::new(word![l, c], 2))
    });
    Ok(found.map(|(a, c)| lifted(c, format!("s4-path[{}]", describe(cay, &["a", "b", "c"], &a)))))
}

/// Every connected Cayley graph on `A4 x Zp`.
pub(super) fn a4_zp(solver: &Solver, cay: &CayleyGraph<'_>, p: usize, z: &Subgroup) -> Result<Option<Lifted>, SolveError> {
    let g = cay.group();
    let d = g.commutator_subgroup();
    let outside = |e: Elem| !z.contains(e);
    if cay.gens().len() == 2 && p == 2 {
        // a: an involution outside A4 and the centre
        let found = first_cycle(cay, 2, |r| {
            let (a, b) = (r[0], r[1]);
            let (ae, be) = (cay.elem(a), cay.elem(b));
            if g.element_order(ae) != 2 || d.contains(ae) || !outside(ae) {
                return None;
            }
            match g.element_order(be) {
                3 => Some(Cycle::new(word![word![pw(b, 2), a].power(2), word![pw(b, -2), a].power(2)], 2)),
                6 => Some(Cycle::new(word![pw(b, 5), a, pw(b, -5), a], 2)),
                _ => None,
            }
        });
        if let Some((a, c)) = found {
            return Ok(Some(lifted(c, format!("a4xz2[{}]", describe(cay, &["a", "b"], &a)))));
        }
    }
    if cay.gens().len() == 2 && p == 3 {
        let found = first_cycle(cay, 2, |r| {
            let (a, b) = (r[0], r[1]);
            let (ae, be) = (cay.elem(a), cay.elem(b));
            if g.element_order(ae) != 3 || !outside(ae) || g.element_order(be) != 3 {
                return None;
            }
            let w = word![
                pw(a, -2),
                pw(b, -2),
                pw(a, 2),
                b,
                word![pw(a, -2), pw(b, 2)].power(2),
                pw(a, 2),
                b,
                pw(a, -2),
                pw(b, -2),
                a,
                b,
                pw(a, 2),
                b.inverse(),
                pw(a, -2),
                pw(b, 2),
                pw(a, -2),
                b,
                a.inverse(),
                b
            ];
            Some(Cycle::new(w, 1))
        });
        if let Some((a, c)) = found {
            return Ok(Some(lifted(c, format!("a4xz3[{}]", describe(cay, &["a", "b"], &a)))));
        }
    }
    Ok(toolkit::scan(solver, cay).map(|r| r.under(format!("a4xz{p}"), crate::trace::StepKind::Construction)))
}

pub(super) fn a5(solver: &Solver, cay: &CayleyGraph<'_>) -> Result<Lifted, SolveError> {
    solver.cited(cay, Cited::A5, "a5")
}

fn lifted(c: Cycle, label: String) -> Lifted {
    Lifted { cycle: c, trace: Trace::construction(label) }
}
