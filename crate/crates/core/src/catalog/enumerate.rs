//! Enumeration of groups of a given order up to isomorphism.
//!
//! Every solvable group has a normal subgroup of prime index, so each one
//! arises as a cyclic extension `<N, g>` with `g^-1 x g = a(x)` and
//! `g^p = h`, where `a` is an automorphism of `N` fixing `h` whose `p`-th
//! power is conjugation by `h`. Named groups are offered first so that they
//! keep their standard numbering; non-solvable groups are only named ones.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{are_isomorphic, automorphisms, factorize, Elem, GroupSignature, GroupTable, Perm};

/// How a catalog group is built from the group-core constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Dicyclic (generalised quaternion) group of the given order.
    Quaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    /// `SL(2,3)` acting on the eight nonzero vectors of the plane over `F_3`.
    SpecialLinear23,
    Direct(Box<Recipe>, Box<Recipe>),
    /// Cyclic extension of prime degree of `base` by the automorphism given
    /// as a list of images and the element `g^degree`.
    Extension { base: Box<Recipe>, degree: usize, aut: Vec<u16>, power: u16 },
}

impl Recipe {
    pub fn evaluate(&self) -> GroupTable {
        match self {
            Recipe::Cyclic(n) => GroupTable::cyclic(*n),
            Recipe::Dihedral(n) => GroupTable::dihedral(*n),
            Recipe::Quaternion(n) => GroupTable::generalized_quaternion(*n),
            Recipe::Symmetric(d) => GroupTable::symmetric(*d),
            Recipe::Alternating(d) => GroupTable::alternating(*d),
            Recipe::SpecialLinear23 => special_linear_2_3(),
            Recipe::Direct(a, b) => GroupTable::direct_product(&a.evaluate(), &b.evaluate()),
            Recipe::Extension { base, degree, aut, power } => {
                let n = base.evaluate();
                let a: Vec<Elem> = aut.iter().map(|&x| Elem::new(x as usize)).collect();
                cyclic_extension(&n, *degree, &invert(&a), Elem::new(*power as usize))
            }
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic({n})"),
            Recipe::Dihedral(n) => write!(f, "dihedral({n})"),
            Recipe::Quaternion(n) => write!(f, "quaternion({n})"),
            Recipe::Symmetric(d) => write!(f, "symmetric({d})"),
            Recipe::Alternating(d) => write!(f, "alternating({d})"),
            Recipe::SpecialLinear23 => write!(f, "sl(2,3)"),
            Recipe::Direct(a, b) => write!(f, "direct({a}, {b})"),
            Recipe::Extension { base, degree, power, .. } => write!(f, "extension({base}, {degree}, g^{degree}={power})"),
        }
    }
}

fn special_linear_2_3() -> GroupTable {
    // points 1..=8 are the nonzero vectors (x, y) of F_3^2 in reading order
    let vecs: Vec<(u8, u8)> = (0..3u8).flat_map(|x| (0..3u8).map(move |y| (x, y))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [u8; 4]| {
        let img = vecs
            .iter()
            .map(|&(x, y)| {
                let v = ((m[0] * x + m[2] * y) % 3, (m[1] * x + m[3] * y) % 3);
                vecs.iter().position(|&w| w == v).unwrap() as u8
            })
            .collect();
        Perm(img)
    };
    GroupTable::from_permutations("SL(2,3)", 8, &[act([1, 1, 0, 1]), act([1, 0, 1, 1])]).unwrap()
}

/// The cyclic extension of `n` of prime degree `p`, given the inverse of
/// the automorphism and `g^p`. Element `x g^i` sits at index `i*|N| + x`.
fn cyclic_extension(n: &GroupTable, p: usize, a_inv: &[Elem], h: Elem) -> GroupTable {
    let k = n.order();
    let total = k * p;
    // ainv_pow[i][y] = a^{-i}(y), which equals g^i y g^-i
    let mut ainv_pow: Vec<Vec<Elem>> = vec![n.elements().collect()];
    for i in 1..p {
        let prev = &ainv_pow[i - 1];
        ainv_pow.push(prev.iter().map(|&y| a_inv[y.index()]).collect());
    }
    let mut mul = vec![0u16; total * total];
    for i in 0..p {
        for x in 0..k {
            for j in 0..p {
                for y in 0..k {
                    let mut z = n.mul(Elem::new(x), ainv_pow[i][y]);
                    let mut e = i + j;
                    if e >= p {
                        z = n.mul(z, h);
                        e -= p;
                    }
                    mul[(i * k + x) * total + j * k + y] = (e * k + z.index()) as u16;
                }
            }
        }
    }
    GroupTable::from_trusted(format!("G{total}"), total, mul)
}

fn compose(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    // apply a, then b
    a.iter().map(|&x| b[x.index()]).collect()
}

fn invert(a: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem(0); a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x.index()] = Elem::new(i);
    }
    out
}

/// A group together with the recipe that reproduces its table exactly.
#[derive(Clone, Debug)]
pub struct Built {
    pub table: GroupTable,
    pub recipe: Recipe,
}

impl Built {
    fn from_recipe(recipe: Recipe) -> Built {
        Built { table: recipe.evaluate(), recipe }
    }
}

/// Isomorphism classes in insertion order, bucketed by signature.
#[derive(Default)]
struct ClassSet {
    found: Vec<Built>,
    buckets: BTreeMap<GroupSignature, Vec<usize>>,
}

impl ClassSet {
    fn insert(&mut self, b: Built) -> bool {
        let bucket = self.buckets.entry(GroupSignature::of(&b.table)).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.found[i].table, &b.table)) {
            return false;
        }
        bucket.push(self.found.len());
        self.found.push(b);
        true
    }
}

/// All cyclic extensions of degree `p` of `base`, added to `out`.
fn extend_all(base: &Built, p: usize, out: &mut ClassSet) {
    let n = &base.table;
    let auts = automorphisms(n);
    let inner: Vec<Vec<Elem>> = n.elements().map(|h| n.elements().map(|x| n.conjugate(x, h)).collect()).collect();
    for a in &auts {
        let mut ap = a.clone();
        for _ in 1..p {
            ap = compose(&ap, a);
        }
        let a_inv = invert(a);
        for h in n.elements() {
            if a[h.index()] != h || ap != inner[h.index()] {
                continue;
            }
            let table = cyclic_extension(n, p, &a_inv, h);
            let recipe = Recipe::Extension {
                base: Box::new(base.recipe.clone()),
                degree: p,
                aut: a.iter().map(|x| x.index() as u16).collect(),
                power: h.index() as u16,
            };
            out.insert(Built { table, recipe });
        }
    }
}

/// Invariant factor lists `d1 | d2 | ...` with product `n`.
pub(crate) fn abelian_invariants(n: usize) -> Vec<Vec<usize>> {
    // each prime power p^k splits by a partition of k; combine across primes
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=k.min(max)).rev() {
            for mut rest in partitions(k - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut lists: Vec<Vec<usize>> = vec![vec![]];
    for (p, k) in factorize(n) {
        let mut next = Vec::new();
        for l in &lists {
            for part in partitions(k, k) {
                // largest parts go to the largest factors
                let len = l.len().max(part.len());
                let mut f = vec![1usize; len];
                for (i, x) in l.iter().enumerate() {
                    f[len - l.len() + i] = *x;
                }
                for (i, e) in part.iter().enumerate() {
                    f[len - 1 - i] *= p.pow(*e);
                }
                next.push(f);
            }
        }
        lists = next;
    }
    lists
}

fn abelian_recipe(factors: &[usize]) -> Recipe {
    let mut it = factors.iter().map(|&d| Recipe::Cyclic(d));
    let first = it.next().unwrap_or(Recipe::Cyclic(1));
    it.fold(first, |acc, r| Recipe::Direct(Box::new(acc), Box::new(r)))
}

/// Named groups of order `n`, in the order they are offered.
fn named(n: usize) -> Vec<Recipe> {
    let mut out: Vec<Recipe> = abelian_invariants(n).iter().map(|f| abelian_recipe(f)).collect();
    if n >= 6 && n.is_multiple_of(2) {
        out.push(Recipe::Dihedral(n));
    }
    if n >= 8 && n.is_multiple_of(4) {
        out.push(Recipe::Quaternion(n));
    }
    match n {
        12 => out.push(Recipe::Alternating(4)),
        24 => {
            out.push(Recipe::Symmetric(4));
            out.push(Recipe::SpecialLinear23);
        }
        60 => out.push(Recipe::Alternating(5)),
        _ => {}
    }
    if n.is_multiple_of(12) && crate::group::is_prime(n / 12) {
        out.push(Recipe::Direct(Box::new(Recipe::Alternating(4)), Box::new(Recipe::Cyclic(n / 12))));
    }
    out
}

/// Groups of order `n` up to isomorphism, given the lists for all proper
/// divisors. Non-solvable groups other than `A5` are not produced.
pub fn groups_of_order(n: usize, smaller: &BTreeMap<usize, Vec<Built>>) -> Vec<Built> {
    let mut set = ClassSet::default();
    for r in named(n) {
        set.insert(Built::from_recipe(r));
    }
    if n == 1 {
        return set.found;
    }
    for (p, _) in factorize(n) {
        if let Some(list) = smaller.get(&(n / p)) {
            for base in list {
                extend_all(base, p, &mut set);
            }
        }
    }
    set.found
}
