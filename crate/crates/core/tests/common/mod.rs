//! Helpers shared by the integration tests.
#![allow(dead_code)]

pub mod counts;
pub mod lemmas;

use hamcert::cayley::{Sym, Word};
use hamcert::group::{ActionSpec, Elem, GroupTable};

/// `<f, x, z | f^2 = x^4 = z^p = 1, x^f = x^-1, z^f = z, z^x = z^-1>`, of
/// order `8p`.
pub struct EightP {
    pub g: GroupTable,
    pub f: Elem,
    pub x: Elem,
    pub z: Elem,
}

fn inversion(n: usize) -> Vec<Elem> {
    (0..n).map(|k| Elem::new((n - k) % n)).collect()
}

fn scaling(n: usize, r: usize) -> Vec<Elem> {
    (0..n).map(|k| Elem::new(k * r % n)).collect()
}

pub fn eight_p(p: usize) -> EightP {
    // dihedral(8) numbers x as 1 and f as 4
    let act = ActionSpec::new().with(Elem::new(4), scaling(p, 1)).with(Elem::new(1), inversion(p));
    let g = GroupTable::semidirect(&GroupTable::dihedral(8), &GroupTable::cyclic(p), &act).unwrap();
    EightP { g, f: Elem::new(4 * p), x: Elem::new(p), z: Elem::new(1) }
}

/// `D_2p x D_2q` with the rotation and reflection of each factor.
pub struct DihedralPair {
    pub g: GroupTable,
    pub q: usize,
    pub x: Elem,
    pub f: Elem,
    pub x2: Elem,
    pub f2: Elem,
}

impl DihedralPair {
    pub fn new(p: usize, q: usize) -> DihedralPair {
        let g = GroupTable::direct_product(&GroupTable::dihedral(2 * p), &GroupTable::dihedral(2 * q));
        let pair = |a: usize, b: usize| Elem::new(a * 2 * q + b);
        DihedralPair { x: pair(1, 0), f: pair(p, 0), x2: pair(0, 1), f2: pair(0, q), g, q }
    }

    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        let k = 2 * self.q;
        Elem::new((a.index() / k) * k + b.index() % k)
    }
}

/// `(D_6 x Z_3) : Z_p` with `z^f = z^-1`, `z^x = z` and `z^y = z^r`.
pub struct EighteenP {
    pub g: GroupTable,
    pub f: Elem,
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

pub fn eighteen_p(p: usize, r: usize) -> EighteenP {
    let acting = GroupTable::direct_product(&GroupTable::dihedral(6), &GroupTable::cyclic(3));
    // in D6 x Z3: f = (3, 0), x = (1, 0), y = (0, 1)
    let (f, x, y) = (9, 3, 1);
    let act = ActionSpec::new()
        .with(Elem::new(f), inversion(p))
        .with(Elem::new(x), scaling(p, 1))
        .with(Elem::new(y), scaling(p, r));
    let g = GroupTable::semidirect(&acting, &GroupTable::cyclic(p), &act).unwrap();
    EighteenP { g, f: Elem::new(f * p), x: Elem::new(x * p), y: Elem::new(y * p), z: Elem::new(1) }
}

/// Power `k` of a single step, negative for the inverse.
pub fn pw(gen: usize, k: i64) -> Word {
    let s = if k < 0 { Sym::back(gen) } else { Sym::fwd(gen) };
    Word(vec![s; k.unsigned_abs() as usize])
}

/// Concatenation of words.
pub fn cat(parts: &[Word]) -> Word {
    Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
}

/// Product of a sequence of elements, each raised to a power.
pub fn prod(g: &GroupTable, parts: &[(Elem, i64)]) -> Elem {
    parts.iter().fold(g.identity(), |acc, &(a, k)| g.mul(acc, g.pow(a, k)))
}

/// Edges of the Petersen graph `GP(5, 2)`: outer 5-cycle, spokes, and the
/// inner pentagram.
pub fn petersen_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    e
}
