//! Explicit cycle words for the order shapes, each stated for named
//! generators and checked under every assignment of the actual generators.
//!
//! A template either returns a word with its repeat count, which is then
//! verified, or calls a lifting lemma that verifies its own hypotheses.

use crate::cayley::{CayleyGraph, Cycle, Sym, Word};
use crate::catalog::Route;
use crate::group::{Elem, GroupTable, Subgroup};
use crate::lifting::{fgl_cyclic_cosets, fgl_normal, multi_double, Lifted, SubSolver, SubgroupView};
use crate::trace::Trace;
use crate::word;

use super::pattern::{assignments, describe, pw};
use super::row_sweep::{row_sweep_cycle, ROW_SWEEP_START};
use super::Solver;

/// What a template hands back: a cycle and, when it solved a smaller
/// group on the way, that sub-problem's trace.
pub(super) struct Built {
    cycle: Cycle,
    sub: Option<Trace>,
}

impl From<Cycle> for Built {
    fn from(cycle: Cycle) -> Built {
        Built { cycle, sub: None }
    }
}

pub(super) struct Ctx<'s, 'c, 'g> {
    pub cay: &'c CayleyGraph<'g>,
    pub solver: &'s Solver,
    /// The primes of the order shape, in the order the route names them.
    pub primes: Vec<usize>,
}

impl Ctx<'_, '_, '_> {
    fn g(&self) -> &GroupTable {
        self.cay.group()
    }

    fn e(&self, s: Sym) -> Elem {
        self.cay.elem(s)
    }

    fn ord(&self, s: Sym) -> usize {
        self.g().element_order(self.e(s))
    }

    fn p(&self) -> i64 {
        self.primes[0] as i64
    }

    fn q(&self) -> i64 {
        self.primes[1] as i64
    }

    fn gen(&self, xs: &[Elem]) -> Subgroup {
        self.g().subgroup_closure(xs)
    }

    /// `word^repeat` if it is a Hamiltonian cycle.
    fn check(&self, w: Word, repeat: usize) -> Option<Built> {
        let c = Cycle::new(w, repeat);
        self.cay.check_cycle(&c).is_ok().then(|| c.into())
    }
}

type Build = fn(&Ctx<'_, '_, '_>, &[Sym]) -> Option<Built>;

pub(super) struct Endgame {
    pub name: &'static str,
    pub roles: &'static [&'static str],
    pub build: Build,
}

const fn eg(name: &'static str, roles: &'static [&'static str], build: Build) -> Endgame {
    Endgame { name, roles, build }
}

/// The first template, in list order, that yields a Hamiltonian cycle
/// under some assignment of generators to its roles.
pub(super) fn run(ctx: &Ctx<'_, '_, '_>, list: &[Endgame]) -> Option<Lifted> {
    let cay = ctx.cay;
    for t in list {
        if cay.gens().len() != t.roles.len() {
            continue;
        }
        for a in assignments(cay, t.roles.len()) {
            let Some(b) = (t.build)(ctx, &a) else { continue };
            if cay.check_cycle(&b.cycle).is_err() {
                continue;
            }
            let mut trace = Trace::construction(format!("{}[{}]", t.name, describe(cay, t.roles, &a)));
            if let Some(sub) = b.sub {
                trace.nest(sub);
            }
            return Some(Lifted { cycle: b.cycle, trace });
        }
    }
    None
}

/// Templates for a route, with the primes they are stated in.
pub(super) fn for_route(rt: Route) -> Option<(&'static [Endgame], Vec<usize>)> {
    Some(match rt {
        Route::EightP { p } => (EIGHT_P, vec![p]),
        Route::ThreePSquared { p } => (THREE_P_SQUARED, vec![p]),
        Route::FourPSquared { p } => (FOUR_P_SQUARED, vec![p]),
        Route::OddPQR { p, q, r } => {
            let mut v = vec![p, q, r];
            v.sort_unstable();
            (ODD_PQR, v)
        }
        Route::FourPQ { p, q } => (FOUR_PQ, vec![p, q]),
        Route::TwoPCubed { p } => (TWO_P_CUBED, vec![p]),
        Route::EighteenP { p } => (EIGHTEEN_P, vec![p]),
        _ => return None,
    })
}

// ---- 8p ----

const EIGHT_P: &[Endgame] = &[
    eg("8p-binary-tetrahedral", &["s1", "s2"], |c, r| {
        let g = c.g();
        let z = g.center();
        if g.order() != 24 || z.order() != 2 {
            return None;
        }
        let (a, b) = (r[0], r[1]);
        let seq = word![pw(a, 2), b.inverse(), pw(a, -2), b].power(2);
        fgl_normal(c.cay, &z, &seq).ok().map(Into::into)
    }),
    eg("8p-z7-on-z2^3", &["x", "t"], |c, r| {
        let (x, t) = (r[0], r[1]);
        if c.p() != 7 || c.ord(x) != 7 {
            return None;
        }
        let words = [
            word![word![pw(x, 6), t].power(2), word![pw(x, -6), t].power(2)].power(2),
            word![pw(x, 6), t, t].power(7),
            word![word![pw(x, 6), t].power(2), word![pw(x, -6), t.inverse()].power(2)].power(2),
        ];
        words.into_iter().find_map(|w| c.check(w, 1))
    }),
    eg("8p-d8-kernel-central-gen", &["f", "fx", "x2z"], |c, r| {
        let (f, a, z) = (r[0], r[1], r[2]);
        let seq = word![a, f, a, z];
        let h = c.gen(&[c.cay.word_product(&seq)]);
        if h.order() != 2 * c.p() as usize {
            return None;
        }
        fgl_cyclic_cosets(c.cay, &h, &seq).ok().map(Into::into)
    }),
    eg("8p-d8-kernel-quotient", &["f", "fx", "fx3z"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        if c.p() < 5 {
            return None;
        }
        let n = c.g().sylow_subgroup(c.p() as usize).ok()?;
        fgl_normal(c.cay, &n, &word![a, b, a, f, b, a, b, f]).ok().map(Into::into)
    }),
    eg("8p-d8-kernel-p3", &["f", "fx", "fx3z"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        if c.p() != 3 {
            return None;
        }
        let w = word![
            word![f, a].power(2),
            b,
            f,
            a,
            f,
            b,
            word![a, f].power(2),
            b,
            f,
            b,
            a,
            f,
            b,
            f,
            a,
            b,
            f,
            b
        ];
        c.check(w, 1)
    }),
];

// ---- 3p^2 ----

const THREE_P_SQUARED: &[Endgame] = &[eg("3p2-row-sweep", &["s", "t"], |c, r| {
    let (s, t) = (r[0], r[1]);
    let p = c.p() as usize;
    if c.ord(s) != 3 || c.ord(t) != p {
        return None;
    }
    let plane = crate::cayley::three_p_sq_multigraph(p).ok()?;
    let w = row_sweep_cycle(p);
    let start = plane.index(ROW_SWEEP_START.0, ROW_SWEEP_START.1);
    let visited = plane.graph.walk(start, &w)?;
    let at = visited.iter().position(|&v| v == plane.index(0, 0))?;
    let seq = w.rotate_left(at).relabel(&[s, t]);
    let h = c.gen(&[c.e(s)]);
    multi_double(c.cay, &h, &seq).ok().map(Into::into)
})];

// ---- 4p^2 ----

const FOUR_P_SQUARED: &[Endgame] = &[
    eg("4p2-z4-power", &["f", "z"], |c, r| {
        let (f, z) = (r[0], r[1]);
        let p = c.p();
        if c.ord(f) != 4 {
            return None;
        }
        let inner = word![pw(z, p - 1), f.inverse(), pw(z, -(p - 1)), f].power(p as usize).drop_last();
        c.check(word![inner, f.inverse()], 2)
    }),
    eg("4p2-z4-coset", &["f", "fz"], |c, r| {
        let (f, b) = (r[0], r[1]);
        let p = c.p();
        if c.ord(f) != 4 {
            return None;
        }
        c.check(word![word![pw(f, 3), b].power(p as usize - 1), pw(f, -3), b.inverse()], p as usize)
    }),
    eg("4p2-z4-square-inverting", &["f", "f2z"], |c, r| {
        let (f, b) = (r[0], r[1]);
        let p = c.p();
        if c.ord(f) != 4 {
            return None;
        }
        let block = word![word![b, f.inverse()].power(2), word![b, f].power(2)].power((p as usize - 1) / 2);
        c.check(word![block, b, f.inverse(), b, f], p as usize)
    }),
    eg("4p2-reflection-pairs", &["s", "r1", "r2"], |c, r| {
        let (s, r1, r2) = (r[0], r[1], r[2]);
        let p = c.p() as usize;
        c.check(word![word![s, r1].power(p).drop_last(), r2], 2 * p)
    }),
];

// ---- pqr ----

const ODD_PQR: &[Endgame] = &[eg("pqr-commutator-lift", &["s", "t"], |c, r| {
    let (s, t) = (r[0], r[1]);
    let p = c.p();
    let qr = c.primes[1] * c.primes[2];
    let n = c.g().commutator_subgroup();
    (1..p).find_map(|k| {
        let seq = word![t, pw(s, -(k - 1)), t, pw(s, p - k - 1)];
        if n.order() != qr {
            return None;
        }
        fgl_normal(c.cay, &n, &seq).ok().map(Into::into)
    })
})];

// ---- 4pq ----

const FOUR_PQ: &[Endgame] = &[
    eg("4pq-z4-cube", &["f", "s"], |c, r| {
        let (f, s) = (r[0], r[1]);
        (c.ord(f) == 4).then_some(())?;
        c.check(word![pw(f, 3), s], (c.p() * c.q()) as usize)
    }),
    eg("4pq-z4-commutator", &["f", "s"], |c, r| {
        let (f, s) = (r[0], r[1]);
        (c.ord(f) == 4).then_some(())?;
        c.check(word![f, s, f.inverse(), s.inverse()], (c.p() * c.q()) as usize)
    }),
    eg("4pq-z4-mixed", &["f", "s1", "s2"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        (c.ord(f) == 4).then_some(())?;
        c.check(word![a, f.inverse(), a, b], (c.p() * c.q()) as usize)
    }),
    eg("4pq-z4-squares", &["f", "s1", "s2"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        (c.ord(f) == 4).then_some(())?;
        c.check(word![f, a, f.inverse(), b], (c.p() * c.q()) as usize)
    }),
    eg("4pq-dihedral-pair", &["fx", "fx'", "ff'"], |c, r| {
        let (a, b, d) = (r[0], r[1], r[2]);
        let pq = (c.p() * c.q()) as usize;
        c.check(word![word![a, b].power(pq).drop_last(), d], 2)
    }),
    eg("4pq-involutions", &["s", "t", "u"], |c, r| {
        let (s, t, u) = (r[0], r[1], r[2]);
        c.check(word![s, t, s, u], (c.p() * c.q()) as usize)
    }),
];

// ---- 2p^3 ----

/// Subgroup cycle on `<a, b>` rotated so that it ends with `end`.
fn subgroup_cycle_ending(c: &Ctx<'_, '_, '_>, a: Sym, b: Sym, end: Elem) -> Option<(Word, Trace)> {
    let cay = c.cay;
    let sv = SubgroupView::new(cay, &[a.gen as usize, b.gen as usize]);
    let sub = c.solver.solve_sub(&sv.table, &sv.gens).ok()?;
    let t = sub.cycle.flatten().relabel(&sv.origin);
    let rotated = [t.clone(), t.invert()]
        .into_iter()
        .find_map(|w| w.syms().iter().position(|&x| cay.elem(x) == end).map(|i| w.rotate_left(i + 1)))?;
    Some((rotated, sub.trace))
}

const TWO_P_CUBED: &[Endgame] = &[
    eg("2p3-involution", &["s", "f"], |c, r| {
        let (s, f) = (r[0], r[1]);
        let p = c.p();
        (c.ord(f) == 2).then_some(())?;
        let w = word![word![pw(s, p - 1), f].power(2 * p as usize - 2), word![pw(s, -(p - 1)), f].power(2)];
        c.check(w, p as usize)
    }),
    eg("2p3-inverted-pair", &["x", "a"], |c, r| {
        let (x, a) = (r[0], r[1]);
        let p = c.p();
        let h = c.gen(&[c.g().mul(c.e(a), c.e(a))]);
        (h.order() == p as usize).then_some(())?;
        let seq = word![word![pw(x, -(p - 1)), a.inverse(), pw(x, -(p - 1)), a].power(p as usize).drop_last(), a.inverse()];
        fgl_cyclic_cosets(c.cay, &h, &seq).ok().map(Into::into)
    }),
    eg("2p3-double-square", &["s", "a"], |c, r| {
        let (s, a) = (r[0], r[1]);
        let p = c.p();
        let h = c.gen(&[c.g().mul(c.e(a), c.e(a))]);
        (h.order() == p as usize).then_some(())?;
        let seq = word![pw(s, p - 1), a].power(2 * p as usize);
        multi_double(c.cay, &h, &seq).ok().map(Into::into)
    }),
    eg("2p3-abelian-sylow", &["s", "t", "f"], |c, r| {
        let (s, t, f) = (r[0], r[1], r[2]);
        let p = c.p();
        let g = c.g();
        let h = c.gen(&[g.mul(g.inv(c.e(t)), c.e(f))]);
        let seq = word![word![pw(s, p - 1), t].power(p as usize).drop_last(), f];
        fgl_cyclic_cosets(c.cay, &h, &seq).ok().map(Into::into)
    }),
    eg("2p3-two-sylow-cycles", &["x", "y", "f"], |c, r| {
        let (x, y, f) = (r[0], r[1], r[2]);
        let g = c.g();
        let (xe, fe) = (c.e(x), c.e(f));
        if c.ord(f) != 2 {
            return None;
        }
        let xf = g.conjugate(xe, fe);
        if xf != xe && xf != g.inv(xe) {
            return None;
        }
        let (first, sub) = subgroup_cycle_ending(c, x, y, g.inv(xe))?;
        let (second, _) = subgroup_cycle_ending(c, x, y, xf)?;
        let w = word![first.drop_last(), f, second.drop_last(), f];
        let built = c.check(w, 1)?;
        Some(Built { cycle: built.cycle, sub: Some(sub) })
    }),
    eg("2p3-skew-three", &["x", "y", "f"], |c, r| {
        let (x, y, f) = (r[0], r[1], r[2]);
        let p = c.p();
        let g = c.g();
        let h = c.gen(&[g.mul(c.e(y), g.inv(c.e(x)))]);
        (h.order() == p as usize).then_some(())?;
        let seqs = [
            word![x, y, pw(x, p - 3), f, pw(x, p - 1), f].power(p as usize),
            word![pw(x, p - 1), f].power(2 * p as usize),
        ];
        seqs.iter().find_map(|s| multi_double(c.cay, &h, s).ok()).map(Into::into)
    }),
    eg("2p3-skew-reflection", &["f", "fy", "x"], |c, r| {
        let (f, b, x) = (r[0], r[1], r[2]);
        let p = c.p();
        let g = c.g();
        let h = c.gen(&[g.mul(c.e(f), c.e(b))]);
        (h.order() == p as usize).then_some(())?;
        [1i64, -1].iter().find_map(|&eps| {
            [b, f].iter().find_map(|&mid| {
                let seq = word![f, pw(x, -(p - 1)), mid, pw(x, eps * (p - 1))].power(p as usize);
                multi_double(c.cay, &h, &seq).ok()
            })
        }).map(Into::into)
    }),
];

// ---- 18p ----

const EIGHTEEN_P: &[Endgame] = &[
    eg("18p-square-coset", &["f", "fx", "yz"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        let p = c.p() as usize;
        c.check(word![word![pw(b, 2), f].power(2 * p).drop_last(), a], 3)
    }),
    eg("18p-quotient-d6", &["f", "yz", "xz^k"], |c, r| {
        let (f, b, d) = (r[0], r[1], r[2]);
        c.check(word![d, b, f, pw(b, 2), f], 3 * c.p() as usize)
    }),
    eg("18p-reflections", &["fy", "fx", "fz"], |c, r| {
        let (a, b, d) = (r[0], r[1], r[2]);
        let p = c.p() as usize;
        c.check(word![word![d, b].power(3 * p).drop_last(), a], 3)
    }),
    eg("18p-long-power", &["f", "xyz"], |c, r| {
        let (f, b) = (r[0], r[1]);
        c.check(word![pw(b, 3 * c.p() - 1), f], 6)
    }),
    eg("18p-abelian-path", &["f", "xy", "yz"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        let m = 3 * c.p() - 1;
        c.check(word![pw(b, m), a.inverse(), pw(b, -m), a.inverse(), pw(b, m), f], 2)
    }),
    eg("18p-conjugate-pair", &["f", "b", "c"], |c, r| {
        let (f, b, d) = (r[0], r[1], r[2]);
        let n = 3 * c.p() as usize;
        [2i64, -2].iter().find_map(|&k| c.check(word![pw(b, k), f, pw(b, -k), d], n))
    }),
    eg("18p-fifth-power", &["fy", "fxyz"], |c, r| {
        let (a, b) = (r[0], r[1]);
        c.check(word![pw(a, 5), b], 3 * c.p() as usize)
    }),
    eg("18p-square-commutator", &["fy", "xyz"], |c, r| {
        let (a, b) = (r[0], r[1]);
        let n = 3 * c.p() as usize;
        c.check(word![pw(b, 2), a.inverse(), pw(b, -2), a], n).or_else(|| c.check(word![a.inverse(), pw(b, -2), a, pw(b, 2)], n))
    }),
    eg("18p-reflection-square", &["f", "xyz"], |c, r| {
        let (f, b) = (r[0], r[1]);
        c.check(word![f, pw(b, -2), f, pw(b, 2)], 3 * c.p() as usize)
    }),
    eg("18p-mixed-five", &["f", "xy", "x2yz"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        c.check(word![f, pw(a, -2), f, a, b], 3 * c.p() as usize)
    }),
    eg("18p-rotation-square", &["f", "xy", "yz"], |c, r| {
        let (f, a, b) = (r[0], r[1], r[2]);
        c.check(word![pw(a, -2), f, pw(b, 2), f], 3 * c.p() as usize)
    }),
    eg("18p-eighteen-step", &["f", "fxyz"], |c, r| {
        let (f, b) = (r[0], r[1]);
        let n = c.g().sylow_subgroup(c.p() as usize).ok()?;
        let seq = eighteen_step(f, b);
        fgl_normal(c.cay, &n, &seq).ok().map(Into::into)
    }),
];

/// The 18-step closed walk on `{f, b}` whose voltage generates the normal
/// Sylow subgroup of order `p`.
pub fn eighteen_step(f: Sym, b: Sym) -> Word {
    word![b, f, pw(b, -2), f, pw(b, -3), f, pw(b, 3), f, pw(b, 2), f, pw(b, -1), f]
}
