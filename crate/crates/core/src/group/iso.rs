//! Isomorphism testing and automorphism enumeration by backtracking over
//! images of a small generating sequence.

use super::{Elem, GroupTable};

/// Per-element isomorphism invariant: order, centralizer size, and the
/// number of square and cube roots.
type ElemInv = (u16, u16, u16, u16);

fn element_invariants(g: &GroupTable) -> Vec<ElemInv> {
    let n = g.order();
    let mut sq = vec![0u16; n];
    let mut cu = vec![0u16; n];
    for x in g.elements() {
        let x2 = g.mul(x, x);
        sq[x2.index()] += 1;
        cu[g.mul(x2, x).index()] += 1;
    }
    g.elements()
        .map(|a| {
            let c = g.elements().filter(|&b| g.commute(a, b)).count() as u16;
            (g.element_order(a) as u16, c, sq[a.index()], cu[a.index()])
        })
        .collect()
}

/// Isomorphism-invariant fingerprint used to bucket groups before running a
/// full isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSignature {
    pub order: usize,
    pub center: usize,
    pub derived: usize,
    pub profile: Vec<(ElemInv, usize)>,
}

impl GroupSignature {
    pub fn of(g: &GroupTable) -> GroupSignature {
        let mut inv = element_invariants(g);
        inv.sort();
        let mut profile: Vec<(ElemInv, usize)> = Vec::new();
        for x in inv {
            match profile.last_mut() {
                Some((y, c)) if *y == x => *c += 1,
                _ => profile.push((x, 1)),
            }
        }
        GroupSignature {
            order: g.order(),
            center: g.center().order(),
            derived: g.commutator_subgroup().order(),
            profile,
        }
    }
}

/// A short generating sequence: each new element maximises the size of the
/// subgroup generated so far, preferring rare invariants.
fn generating_sequence(g: &GroupTable, inv: &[ElemInv]) -> Vec<Elem> {
    let mut freq = std::collections::HashMap::new();
    for x in inv {
        *freq.entry(*x).or_insert(0usize) += 1;
    }
    let mut gens = Vec::new();
    let mut sub = g.trivial_subgroup();
    while sub.order() < g.order() {
        let mut best: Option<(usize, usize, Elem)> = None;
        for x in g.elements() {
            if sub.contains(x) {
                continue;
            }
            let mut t = gens.clone();
            t.push(x);
            let size = g.subgroup_closure(&t).order();
            let f = freq[&inv[x.index()]];
            let better = match best {
                None => true,
                Some((s, bf, _)) => size > s || (size == s && f < bf),
            };
            if better {
                best = Some((size, f, x));
            }
        }
        let (_, _, x) = best.unwrap();
        gens.push(x);
        sub = g.subgroup_closure(&gens);
    }
    gens
}

struct Search<'a> {
    g: &'a GroupTable,
    h: &'a GroupTable,
    gi: Vec<ElemInv>,
    hi: Vec<ElemInv>,
    gens: Vec<Elem>,
    map: Vec<u16>,
    used: Vec<bool>,
}

const UNSET: u16 = u16::MAX;

impl Search<'_> {
    /// Extends the map to the subgroup generated by the first `k` generators.
    /// Returns the list of newly assigned elements, or `None` on conflict
    /// (after undoing its own assignments).
    fn extend(&mut self, k: usize, images: &[Elem]) -> Option<Vec<Elem>> {
        let mut added = Vec::new();
        let mut queue: Vec<Elem> = self.g.elements().filter(|x| self.map[x.index()] != UNSET).collect();
        while let Some(a) = queue.pop() {
            let fa = Elem(self.map[a.index()]);
            for j in 0..k {
                let b = self.g.mul(a, self.gens[j]);
                let fb = self.h.mul(fa, images[j]);
                let cur = self.map[b.index()];
                if cur == UNSET {
                    if self.used[fb.index()] || self.gi[b.index()] != self.hi[fb.index()] {
                        self.undo(&added);
                        return None;
                    }
                    self.map[b.index()] = fb.0;
                    self.used[fb.index()] = true;
                    added.push(b);
                    queue.push(b);
                } else if cur != fb.0 {
                    self.undo(&added);
                    return None;
                }
            }
        }
        Some(added)
    }

    fn undo(&mut self, added: &[Elem]) {
        for &b in added {
            self.used[self.map[b.index()] as usize] = false;
            self.map[b.index()] = UNSET;
        }
    }

    fn run(&mut self, depth: usize, images: &mut Vec<Elem>, found: &mut dyn FnMut(&[u16]) -> bool) -> bool {
        if depth == self.gens.len() {
            return found(&self.map);
        }
        let want = self.gi[self.gens[depth].index()];
        for cand in self.h.elements() {
            if self.hi[cand.index()] != want {
                continue;
            }
            images.push(cand);
            if let Some(added) = self.extend(depth + 1, images) {
                let stop = self.run(depth + 1, images, found);
                self.undo(&added);
                if stop {
                    images.pop();
                    return true;
                }
            }
            images.pop();
        }
        false
    }
}

fn search(g: &GroupTable, h: &GroupTable, found: &mut dyn FnMut(&[u16]) -> bool) {
    if g.order() != h.order() {
        return;
    }
    let gi = element_invariants(g);
    let hi = if std::ptr::eq(g, h) { gi.clone() } else { element_invariants(h) };
    let mut a = gi.clone();
    let mut b = hi.clone();
    a.sort();
    b.sort();
    if a != b {
        return;
    }
    let gens = generating_sequence(g, &gi);
    let n = g.order();
    let mut s = Search { g, h, gi, hi, gens, map: vec![UNSET; n], used: vec![false; n] };
    s.map[g.identity().index()] = h.identity().0;
    s.used[h.identity().index()] = true;
    s.run(0, &mut Vec::new(), found);
}

/// An isomorphism `G -> H` as the image of every element, if one exists.
pub fn isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<Elem>> {
    let mut out = None;
    search(g, h, &mut |m| {
        out = Some(m.iter().map(|&x| Elem(x)).collect());
        true
    });
    out
}

pub fn are_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    isomorphism(g, h).is_some()
}

/// All automorphisms, each as the image of every element.
pub fn automorphisms(g: &GroupTable) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    search(g, g, &mut |m| {
        out.push(m.iter().map(|&x| Elem(x)).collect());
        false
    });
    out
}
