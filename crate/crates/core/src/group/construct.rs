use std::collections::HashMap;
use std::fmt;

use super::{Elem, GroupError, GroupTable, MAX_ORDER};

/// A permutation of `{1, ..., degree}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Left-to-right composition: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Builds a permutation from cycles of one-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, GroupError> {
        let mut img: Vec<u8> = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(GroupError::InvalidPermutation(format!("point {a} outside 1..={degree}")));
                }
                if std::mem::replace(&mut used[a - 1], true) {
                    return Err(GroupError::InvalidPermutation(format!("point {a} repeated")));
                }
                let b = cyc[(i + 1) % cyc.len()];
                img[a - 1] = (b - 1) as u8;
            }
        }
        Ok(Perm(img))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of permutations in cycle notation, such as
/// `(1,2),(2,3,4)` or `(1,2)(3,4),(1,2,3)`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Vec<Perm>, GroupError> {
    let bad = |m: &str| GroupError::InvalidPermutation(format!("{m} in {text:?}"));
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let mut cycles = Vec::new();
        while i < chars.len() && chars[i] == '(' {
            let close = chars[i..].iter().position(|&c| c == ')').ok_or_else(|| bad("unclosed cycle"))? + i;
            let body: String = chars[i + 1..close].iter().collect();
            let pts = if body.is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                    .collect::<Result<Vec<_>, _>>()?
            };
            cycles.push(pts);
            i = close + 1;
        }
        if cycles.is_empty() {
            return Err(bad("expected '('"));
        }
        out.push(Perm::from_cycles(degree, &cycles)?);
        if i < chars.len() {
            if chars[i] != ',' {
                return Err(bad("expected ','"));
            }
            i += 1;
        }
    }
    Ok(out)
}

/// Homomorphism from an acting group into the automorphisms of an acted-on
/// group, given on generators of the acting group. The permutation attached to
/// `h` lists `h^-1 k h` for every element `k` of the acted-on group.
#[derive(Clone, Debug, Default)]
pub struct ActionSpec {
    pub generators: Vec<(Elem, Vec<Elem>)>,
}

impl ActionSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, h: Elem, image: Vec<Elem>) -> Self {
        self.generators.push((h, image));
        self
    }

    /// The trivial action.
    pub fn trivial() -> Self {
        Self::default()
    }
}

impl GroupTable {
    pub fn cyclic(n: usize) -> GroupTable {
        assert!((1..=MAX_ORDER).contains(&n));
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u16).collect();
        GroupTable::from_trusted(format!("C{n}"), n, mul)
    }

    /// Dihedral group of the given order (`2m`): elements `f^a x^i` at index
    /// `a*m + i`, so `x = 1` and `f = m`.
    pub fn dihedral(order: usize) -> GroupTable {
        assert!(order >= 2 && order.is_multiple_of(2) && order <= MAX_ORDER);
        let m = order / 2;
        let mut mul = vec![0u16; order * order];
        for a in 0..2 {
            for i in 0..m {
                for b in 0..2 {
                    for j in 0..m {
                        let xi = if b == 1 { (m - i) % m } else { i };
                        let r = ((a + b) % 2) * m + (xi + j) % m;
                        mul[(a * m + i) * order + b * m + j] = r as u16;
                    }
                }
            }
        }
        GroupTable::from_trusted(format!("D{order}"), order, mul)
    }

    /// Dicyclic group of the given order (`4m`): `x^{2m} = e`, `f^2 = x^m`,
    /// `x^f = x^-1`. Elements `f^a x^i` sit at index `a*2m + i`.
    pub fn generalized_quaternion(order: usize) -> GroupTable {
        assert!(order >= 4 && order.is_multiple_of(4) && order <= MAX_ORDER);
        let m = order / 4;
        let c = 2 * m;
        let mut mul = vec![0u16; order * order];
        for a in 0..2 {
            for i in 0..c {
                for b in 0..2 {
                    for j in 0..c {
                        let xi = if b == 1 { (c - i) % c } else { i };
                        let (fa, shift) = if a + b == 2 { (0, m) } else { (a + b, 0) };
                        let r = fa * c + (xi + j + shift) % c;
                        mul[(a * c + i) * order + b * c + j] = r as u16;
                    }
                }
            }
        }
        GroupTable::from_trusted(format!("Q{order}"), order, mul)
    }

    /// `G x H` with element `(g, h)` at index `g*|H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (m, k) = (g.order(), h.order());
        let n = m * k;
        assert!(n <= MAX_ORDER);
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let x = g.mul(Elem::new(a / k), Elem::new(b / k)).index();
                let y = h.mul(Elem::new(a % k), Elem::new(b % k)).index();
                mul[a * n + b] = (x * k + y) as u16;
            }
        }
        let mut t = GroupTable::from_trusted(format!("{}x{}", g.name(), h.name()), n, mul);
        if g.identity().index() != 0 || h.identity().index() != 0 {
            t.identity = Elem::new(g.identity().index() * k + h.identity().index());
        }
        t
    }

    /// `K : H` where `acting` conjugates `acted` as described by `action`.
    /// Element `h k` sits at index `h*|K| + k`, and
    /// `(h1 k1)(h2 k2) = (h1 h2)(k1^{h2} k2)`.
    pub fn semidirect(acting: &GroupTable, acted: &GroupTable, action: &ActionSpec) -> Result<GroupTable, GroupError> {
        let (m, k) = (acting.order(), acted.order());
        let n = m * k;
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        for (h, img) in &action.generators {
            if h.index() >= m {
                return Err(GroupError::InvalidAction(format!("acting element {h} out of range")));
            }
            check_automorphism(acted, img)?;
        }
        // phi[h] = permutation of K induced by conjugation with h
        let id: Vec<Elem> = acted.elements().collect();
        let mut phi: Vec<Option<Vec<Elem>>> = vec![None; m];
        phi[acting.identity().index()] = Some(id);
        let mut queue = vec![acting.identity()];
        while let Some(h) = queue.pop() {
            for (g, pg) in &action.generators {
                let hg = acting.mul(h, *g);
                let ph = phi[h.index()].as_ref().unwrap();
                let composed: Vec<Elem> = ph.iter().map(|&x| pg[x.index()]).collect();
                match &phi[hg.index()] {
                    Some(existing) if *existing != composed => {
                        return Err(GroupError::InvalidAction(format!(
                            "images of generators do not define a homomorphism (conflict at {hg})"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        phi[hg.index()] = Some(composed);
                        queue.push(hg);
                    }
                }
            }
        }
        if phi.iter().any(Option::is_none) {
            return Err(GroupError::InvalidAction("action generators do not generate the acting group".into()));
        }
        let phi: Vec<Vec<Elem>> = phi.into_iter().map(Option::unwrap).collect();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let (h1, k1) = (Elem::new(a / k), Elem::new(a % k));
            for b in 0..n {
                let (h2, k2) = (Elem::new(b / k), Elem::new(b % k));
                let hh = acting.mul(h1, h2);
                let kk = acted.mul(phi[h2.index()][k1.index()], k2);
                mul[a * n + b] = (hh.index() * k + kk.index()) as u16;
            }
        }
        let mut t = GroupTable::from_trusted(format!("{}:{}", acted.name(), acting.name()), n, mul);
        t.identity = Elem::new(acting.identity().index() * k + acted.identity().index());
        Ok(t)
    }

    /// Closure of permutations of `{1..degree}`, numbered in breadth-first
    /// order from the identity.
    pub fn from_permutations(name: &str, degree: usize, gens: &[Perm]) -> Result<GroupTable, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!("{g} has the wrong degree")));
            }
        }
        let mut elems = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::from([(Perm::identity(degree), 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = elems[i].then(g);
                if !index.contains_key(&p) {
                    if elems.len() >= MAX_ORDER {
                        return Err(GroupError::TooLarge(elems.len() + 1));
                    }
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&elems[a].then(&elems[b])] as u16;
            }
        }
        let mut t = GroupTable::from_trusted(name, n, mul);
        t.set_permutations(elems);
        Ok(t)
    }

    pub fn symmetric(degree: usize) -> GroupTable {
        let mut gens = vec![Perm::from_cycles(degree, &[(1..=degree).collect()]).unwrap()];
        if degree > 2 {
            gens.push(Perm::from_cycles(degree, &[vec![1, 2]]).unwrap());
        }
        GroupTable::from_permutations(&format!("S{degree}"), degree, &gens).unwrap()
    }

    pub fn alternating(degree: usize) -> GroupTable {
        assert!(degree >= 3);
        let gens: Vec<Perm> = (3..=degree).map(|k| Perm::from_cycles(degree, &[vec![1, 2, k]]).unwrap()).collect();
        GroupTable::from_permutations(&format!("A{degree}"), degree, &gens).unwrap()
    }
}

fn check_automorphism(g: &GroupTable, img: &[Elem]) -> Result<(), GroupError> {
    let n = g.order();
    if img.len() != n {
        return Err(GroupError::InvalidAction(format!("image has {} entries, expected {n}", img.len())));
    }
    let mut seen = vec![false; n];
    for &x in img {
        if x.index() >= n || std::mem::replace(&mut seen[x.index()], true) {
            return Err(GroupError::InvalidAction("image is not a bijection".into()));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            if img[g.mul(a, b).index()] != g.mul(img[a.index()], img[b.index()]) {
                return Err(GroupError::InvalidAction(format!("not a homomorphism at ({a}, {b})")));
            }
        }
    }
    Ok(())
}
