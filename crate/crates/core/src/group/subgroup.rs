use std::collections::HashSet;

use super::{factorize, is_prime, Elem, GroupError, GroupTable};

/// A subgroup, stored as a sorted member list plus a membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Subgroup {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| Elem::new(i)).collect();
        Subgroup { members, mask }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.mask[g.index()]
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect())
    }
}

/// Right cosets `Hg` of a subgroup, each represented by its least element.
#[derive(Clone, Debug)]
pub struct Cosets {
    pub reps: Vec<Elem>,
    pub coset_of: Vec<u32>,
}

impl Cosets {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn of(&self, g: Elem) -> usize {
        self.coset_of[g.index()] as usize
    }
}

/// `G/N` together with the projection and the least-representative section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    pub projection: Vec<Elem>,
    pub section: Vec<Elem>,
}

impl Quotient {
    pub fn project(&self, g: Elem) -> Elem {
        self.projection[g.index()]
    }

    pub fn lift(&self, q: Elem) -> Elem {
        self.section[q.index()]
    }
}

impl GroupTable {
    pub fn subgroup_closure(&self, gens: &[Elem]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[self.identity().index()] = true;
        let mut queue = vec![self.identity()];
        while let Some(a) = queue.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !mask[b.index()] {
                    mask[b.index()] = true;
                    queue.push(b);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order()])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_closure(&[])
    }

    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.subgroup_closure(gens).order() == self.order()
    }

    /// Checks a subset for closure (finite, so closure under products suffices).
    pub fn subgroup_from_members(&self, members: &[Elem]) -> Option<Subgroup> {
        let mut mask = vec![false; self.order()];
        for &m in members {
            mask[m.index()] = true;
        }
        if !mask[self.identity().index()] {
            return None;
        }
        for &a in members {
            for &b in members {
                if !mask[self.mul(a, b).index()] {
                    return None;
                }
            }
        }
        Some(Subgroup::from_mask(mask))
    }

    /// `None` if normal, otherwise a witness `(h, g)` with `h^g` outside.
    pub fn normality_witness(&self, h: &Subgroup) -> Option<(Elem, Elem)> {
        for g in self.elements() {
            for &x in h.members() {
                if !h.contains(self.conjugate(x, g)) {
                    return Some((x, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_witness(h).is_none()
    }

    pub fn normal_closure(&self, gens: &[Elem]) -> Subgroup {
        let conj: Vec<Elem> = gens.iter().flat_map(|&x| self.elements().map(move |g| (x, g))).map(|(x, g)| self.conjugate(x, g)).collect();
        self.subgroup_closure(&conj)
    }

    pub fn center(&self) -> Subgroup {
        let mask = self.elements().map(|a| self.elements().all(|b| self.commute(a, b))).collect();
        Subgroup::from_mask(mask)
    }

    pub fn centralizer(&self, xs: &[Elem]) -> Subgroup {
        let mask = self.elements().map(|a| xs.iter().all(|&b| self.commute(a, b))).collect();
        Subgroup::from_mask(mask)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mask = self.elements().map(|g| h.members().iter().all(|&x| h.contains(self.conjugate(x, g)))).collect();
        Subgroup::from_mask(mask)
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut comms = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.commutator(a, b);
                if !std::mem::replace(&mut seen[c.index()], true) {
                    comms.push(c);
                }
            }
        }
        self.subgroup_closure(&comms)
    }

    /// Commutator subgroup `[H, K]` of two subgroups.
    pub fn commutator_of(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &a in h.members() {
            for &b in k.members() {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort();
        comms.dedup();
        self.subgroup_closure(&comms)
    }

    pub fn right_cosets(&self, h: &Subgroup) -> Cosets {
        let n = self.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g.index()] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &x in h.members() {
                coset_of[self.mul(x, g).index()] = c;
            }
        }
        Cosets { reps, coset_of }
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient, GroupError> {
        if let Some((h, g)) = self.normality_witness(n) {
            return Err(GroupError::NotNormal { h, g });
        }
        let cos = self.right_cosets(n);
        let k = cos.count();
        let mut mul = vec![0u16; k * k];
        for i in 0..k {
            for j in 0..k {
                mul[i * k + j] = cos.of(self.mul(cos.reps[i], cos.reps[j])) as u16;
            }
        }
        let table = GroupTable::from_trusted(format!("{}/N{}", self.name(), n.order()), k, mul);
        let projection = self.elements().map(|g| Elem::new(cos.of(g))).collect();
        Ok(Quotient { table, projection, section: cos.reps })
    }

    /// The subgroup as a group in its own right, with the embedding.
    pub fn subgroup_table(&self, h: &Subgroup) -> (GroupTable, Vec<Elem>) {
        let members = h.members();
        let mut pos = vec![u16::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m.index()] = i as u16;
        }
        let k = members.len();
        let mut mul = vec![0u16; k * k];
        for i in 0..k {
            for j in 0..k {
                mul[i * k + j] = pos[self.mul(members[i], members[j]).index()];
            }
        }
        (GroupTable::from_trusted(format!("{}<{}>", self.name(), k), k, mul), members.to_vec())
    }

    /// A Sylow `p`-subgroup, grown one normalizer step at a time from the
    /// identity; the element added at each step is the least admissible one.
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup, GroupError> {
        let n = self.order();
        if !is_prime(p) || !n.is_multiple_of(p) {
            return Err(GroupError::NotAPrimeDivisor { p, order: n });
        }
        let mut target = 1;
        while n.is_multiple_of(target * p) {
            target *= p;
        }
        let mut sub = self.trivial_subgroup();
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let g = norm
                .members()
                .iter()
                .copied()
                .find(|&g| !sub.contains(g) && sub.contains(self.pow(g, p as i64)))
                .expect("a p-subgroup below Sylow size has a larger normalizer");
            let mut gens = sub.members().to_vec();
            gens.push(g);
            sub = self.subgroup_closure(&gens);
        }
        Ok(sub)
    }

    /// True when the Sylow counting theorems alone force the Sylow
    /// `p`-subgroup to be normal: 1 is the only divisor of the index that is
    /// congruent to 1 modulo `p`.
    pub fn sylow_forced_normal(&self, p: usize) -> bool {
        sylow_count_forced(self.order(), p)
    }

    /// Exact normality of the Sylow `p`-subgroup.
    pub fn sylow_is_normal(&self, p: usize) -> bool {
        self.sylow_forced_normal(p) || self.sylow_subgroup(p).map(|s| self.is_normal(&s)).unwrap_or(false)
    }

    /// Every subgroup, found as joins of cyclic subgroups. Ordered by size and
    /// then by member list.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut cyclic: Vec<Subgroup> = Vec::new();
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        for g in self.elements() {
            let c = self.subgroup_closure(&[g]);
            if seen.insert(c.members().to_vec()) {
                cyclic.push(c);
            }
        }
        let mut all = cyclic.clone();
        let mut i = 0;
        while i < all.len() {
            for c in &cyclic {
                if c.is_subset_of(&all[i]) {
                    continue;
                }
                let mut gens = all[i].members().to_vec();
                gens.extend_from_slice(c.members());
                let j = self.subgroup_closure(&gens);
                if seen.insert(j.members().to_vec()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
        all
    }

    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        let all = self.all_subgroups();
        let n = self.order();
        all.iter()
            .filter(|h| h.order() < n && !all.iter().any(|k| k.order() < n && k.order() > h.order() && h.is_subset_of(k)))
            .cloned()
            .collect()
    }

    pub fn frattini_subgroup(&self) -> Subgroup {
        let mut phi = self.whole();
        for m in self.maximal_subgroups() {
            phi = phi.intersection(&m);
        }
        phi
    }

    /// Normal subgroups `<g>` of prime order, ordered by least generator.
    pub fn normal_subgroups_of_prime_order(&self) -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = Vec::new();
        for g in self.elements() {
            if !is_prime(self.element_order(g)) {
                continue;
            }
            let c = self.subgroup_closure(&[g]);
            if out.contains(&c) {
                continue;
            }
            if self.is_normal(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Subgroups of index 2, enumerated as kernels of maps onto `Z2`.
    pub fn index_two_subgroups(&self) -> Vec<Subgroup> {
        let squares: Vec<Elem> = self.elements().map(|g| self.mul(g, g)).collect();
        let sq = self.normal_closure(&squares);
        if sq.order() == self.order() {
            return Vec::new();
        }
        let q = self.quotient(&sq).expect("normal closure is normal");
        let qt = &q.table;
        // greedy basis of the elementary abelian 2-group G/G^2
        let mut basis: Vec<Elem> = Vec::new();
        let mut span = qt.trivial_subgroup();
        for x in qt.elements() {
            if !span.contains(x) {
                basis.push(x);
                span = qt.subgroup_closure(&basis);
            }
        }
        let r = basis.len();
        let mut coord = vec![0usize; qt.order()];
        for bits in 0..(1usize << r) {
            let x = (0..r).filter(|i| bits >> i & 1 == 1).fold(qt.identity(), |acc, i| qt.mul(acc, basis[i]));
            coord[x.index()] = bits;
        }
        (1..(1usize << r))
            .map(|mask| {
                let m = self.elements().map(|g| (coord[q.project(g).index()] & mask).count_ones().is_multiple_of(2)).collect();
                Subgroup::from_mask(m)
            })
            .collect()
    }

    /// An abelian index-2 subgroup `A` and an element `f` outside it of the
    /// given order that inverts every element of `A`.
    fn inverted_index_two(&self, f_order: usize) -> Option<(Subgroup, Elem)> {
        for a in self.index_two_subgroups() {
            if !a.members().iter().all(|&x| a.members().iter().all(|&y| self.commute(x, y))) {
                continue;
            }
            let f = self.elements().find(|&f| {
                !a.contains(f)
                    && self.element_order(f) == f_order
                    && a.members().iter().all(|&x| self.conjugate(x, f) == self.inv(x))
            });
            if let Some(f) = f {
                return Some((a, f));
            }
        }
        None
    }

    /// `G = Z2 x| A` with `A` abelian and the involution inverting `A`.
    pub fn dihedral_type(&self) -> Option<(Subgroup, Elem)> {
        self.inverted_index_two(2)
    }

    /// `A` abelian of index 2, `f` of order 4 inverting `A`.
    pub fn quaternion_type(&self) -> Option<(Subgroup, Elem)> {
        self.inverted_index_two(4)
    }

    pub fn is_dihedral_type(&self) -> bool {
        self.dihedral_type().is_some()
    }

    pub fn is_quaternion_type(&self) -> bool {
        self.quaternion_type().is_some()
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|g| self.element_order(g) == self.order())
    }

    pub fn subgroup_is_cyclic(&self, h: &Subgroup) -> bool {
        h.members().iter().any(|&g| self.element_order(g) == h.order())
    }

    pub fn subgroup_is_abelian(&self, h: &Subgroup) -> bool {
        h.members().iter().all(|&x| h.members().iter().all(|&y| self.commute(x, y)))
    }

    /// Whether the commutator subgroup is a cyclic group of prime-power
    /// order (including the trivial group).
    pub fn commutator_is_cyclic_p_group(&self) -> bool {
        let d = self.commutator_subgroup();
        d.order() == 1 || (factorize(d.order()).len() == 1 && self.subgroup_is_cyclic(&d))
    }
}

pub(crate) fn sylow_count_forced(n: usize, p: usize) -> bool {
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (2..=m).all(|k| !m.is_multiple_of(k) || k % p != 1)
}
