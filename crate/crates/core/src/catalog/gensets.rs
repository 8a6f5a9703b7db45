use crate::group::{Elem, GroupTable};

/// Default number of generating sets swept per group.
pub const DEFAULT_GENSET_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSetRecord {
    /// Name of the group the set belongs to.
    pub group: String,
    /// Generators in ascending index order.
    pub generators: Vec<Elem>,
    /// No proper subset generates.
    pub minimal: bool,
    /// The set generates the group.
    pub connected: bool,
}

#[derive(Clone, Debug, Default)]
pub struct GenSetList {
    pub records: Vec<GenSetRecord>,
    /// Enumeration stopped at the cap before listing every set.
    pub capped: bool,
}

/// Whether no proper subset of `gens` generates `g`. Dropping one element
/// at a time suffices, since subsets of non-generating sets do not generate.
pub fn is_minimal(g: &GroupTable, gens: &[Elem]) -> bool {
    (0..gens.len()).all(|i| {
        let rest: Vec<Elem> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        !g.generates(&rest)
    })
}

/// Connected generating sets of size at most `max_size`, one per choice
/// of representatives up to inversion: each element is taken as the
/// smaller of `s` and `s^-1`, and the identity never appears. Sets are
/// listed by size, then lexicographically, stopping after `cap` sets.
pub fn enumerate_generating_sets(g: &GroupTable, max_size: usize, cap: usize) -> GenSetList {
    let reps: Vec<Elem> = g.elements().filter(|&x| x != g.identity() && x.index() <= g.inv(x).index()).collect();
    let mut out = GenSetList::default();
    let mut sets = Vec::new();
    if g.order() == 1 {
        sets.push(Vec::new());
    } else {
        let mut cur = Vec::new();
        for size in 1..=max_size {
            if combos(g, &reps, 0, size, &mut cur, &mut sets, cap) {
                out.capped = true;
                break;
            }
        }
    }
    out.records = sets
        .into_iter()
        .map(|s| GenSetRecord { group: g.name().to_string(), minimal: is_minimal(g, &s), connected: true, generators: s })
        .collect();
    out
}

/// Appends generating subsets of `reps[from..]` of size `left` to `out`;
/// true when one more set was found after reaching `cap`.
fn combos(
    g: &GroupTable,
    reps: &[Elem],
    from: usize,
    left: usize,
    cur: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
    cap: usize,
) -> bool {
    if left == 0 {
        if g.generates(cur) {
            if out.len() >= cap {
                return true;
            }
            out.push(cur.clone());
        }
        return false;
    }
    for i in from..reps.len() {
        if reps.len() - i < left {
            break;
        }
        cur.push(reps[i]);
        let hit = combos(g, reps, i + 1, left - 1, cur, out, cap);
        cur.pop();
        if hit {
            return true;
        }
    }
    false
}
