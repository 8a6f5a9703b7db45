//! Explicit cycle words stated for named generators, tried under every
//! assignment of the generators of `S u S^-1` to the named roles.
//!
//! A case that holds "up to inversion and relabelling" of the generators
//! is realised by trying each assignment in a fixed order and keeping the
//! first one whose word verifies.

use crate::cayley::{CayleyGraph, Cycle, Sym, Word};

/// `s^k`; negative `k` steps along `s^-1`.
pub fn pw(s: Sym, k: i64) -> Word {
    Word::sym_pow(s, k)
}

/// Assignments of symbols to `roles` slots, one symbol per distinct
/// element of `S u S^-1`, with the slots on pairwise different generators.
pub fn assignments(cay: &CayleyGraph<'_>, roles: usize) -> Vec<Vec<Sym>> {
    let syms = cay.symbols();
    let mut out = Vec::new();
    let mut cur: Vec<Sym> = Vec::with_capacity(roles);
    fn rec(syms: &[Sym], roles: usize, cur: &mut Vec<Sym>, out: &mut Vec<Vec<Sym>>) {
        if cur.len() == roles {
            out.push(cur.clone());
            return;
        }
        for &s in syms {
            if cur.iter().any(|c| c.gen == s.gen) {
                continue;
            }
            cur.push(s);
            rec(syms, roles, cur, out);
            cur.pop();
        }
    }
    rec(syms, roles, &mut cur, &mut out);
    out
}

/// The first assignment for which `build` returns a walk that is a
/// Hamiltonian cycle.
pub fn first_cycle<F>(cay: &CayleyGraph<'_>, roles: usize, mut build: F) -> Option<(Vec<Sym>, Cycle)>
where
    F: FnMut(&[Sym]) -> Option<Cycle>,
{
    if cay.gens().len() < roles {
        return None;
    }
    for a in assignments(cay, roles) {
        if let Some(c) = build(&a) {
            if cay.check_cycle(&c).is_ok() {
                return Some((a, c));
            }
        }
    }
    None
}

/// Elements named by an assignment, for trace labels.
pub fn describe(cay: &CayleyGraph<'_>, names: &[&str], a: &[Sym]) -> String {
    names.iter().zip(a).map(|(n, &s)| format!("{n}={}", cay.elem(s))).collect::<Vec<_>>().join(",")
}
