//! The built-in catalog: every group of every in-scope order up to
//! [`CATALOG_MAX_ORDER`], with names, recipes and structural tags.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{is_prime, GroupTable};

use super::enumerate::{groups_of_order, Built, Recipe};
use super::order_form::{in_scope, order_forms, OrderForm};

/// Largest order the catalog enumerates. Above it the extension search
/// meets automorphism groups too large to list.
pub const CATALOG_MAX_ORDER: usize = 63;

/// The coarse order shape of an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormClass {
    KP,
    KPQ,
    PQR,
    KP2,
    KP3,
    PrimePower,
    Other,
}

impl FormClass {
    pub fn of(n: usize) -> FormClass {
        let forms = order_forms(n);
        let has = |f: fn(&OrderForm) -> bool| forms.iter().any(f);
        if has(|f| matches!(f, OrderForm::PrimePower { .. })) {
            FormClass::PrimePower
        } else if has(|f| matches!(f, OrderForm::KP { .. })) {
            FormClass::KP
        } else if has(|f| matches!(f, OrderForm::KPQ { .. })) {
            FormClass::KPQ
        } else if has(|f| matches!(f, OrderForm::PQR { .. })) {
            FormClass::PQR
        } else if has(|f| matches!(f, OrderForm::KP2 { .. })) {
            FormClass::KP2
        } else if has(|f| matches!(f, OrderForm::KP3 { .. })) {
            FormClass::KP3
        } else {
            FormClass::Other
        }
    }
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormClass::KP => "kp",
            FormClass::KPQ => "kpq",
            FormClass::PQR => "pqr",
            FormClass::KP2 => "kp^2",
            FormClass::KP3 => "kp^3",
            FormClass::PrimePower => "p^k",
            FormClass::Other => "other",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Cyclic,
    Abelian,
    DihedralType,
    QuaternionType,
    CyclicCommutator,
    Perfect,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Cyclic => "cyclic",
            Tag::Abelian => "abelian",
            Tag::DihedralType => "dihedral-type",
            Tag::QuaternionType => "quaternion-type",
            Tag::CyclicCommutator => "cyclic-commutator",
            Tag::Perfect => "perfect",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub recipe: Recipe,
    pub order: usize,
    pub form: FormClass,
    pub tags: Vec<Tag>,
    pub table: GroupTable,
}

impl CatalogEntry {
    pub fn answers_to(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }
}

fn tags_of(g: &GroupTable) -> Vec<Tag> {
    let mut t = Vec::new();
    if g.is_cyclic() {
        t.push(Tag::Cyclic);
    }
    if g.is_abelian() {
        t.push(Tag::Abelian);
    }
    if g.dihedral_type().is_some() {
        t.push(Tag::DihedralType);
    }
    if g.quaternion_type().is_some() {
        t.push(Tag::QuaternionType);
    }
    if g.commutator_is_cyclic_p_group() {
        t.push(Tag::CyclicCommutator);
    }
    if g.order() > 1 && g.commutator_subgroup().order() == g.order() {
        t.push(Tag::Perfect);
    }
    t
}

fn cyclic_factors(r: &Recipe) -> Option<Vec<usize>> {
    match r {
        Recipe::Cyclic(n) => Some(vec![*n]),
        Recipe::Direct(a, b) => {
            let mut f = cyclic_factors(a)?;
            f.extend(cyclic_factors(b)?);
            Some(f)
        }
        _ => None,
    }
}

/// Standard name and aliases of a named recipe.
fn names_of(r: &Recipe) -> Option<(String, Vec<String>)> {
    if let Some(f) = cyclic_factors(r) {
        let name = f.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x");
        let alias = f.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("x");
        let mut aliases = vec![alias];
        if f == [2, 2] {
            aliases.push("V4".into());
        }
        return Some((name, aliases));
    }
    Some(match r {
        Recipe::Dihedral(n) if *n == 6 => (format!("D{n}"), vec!["S3".into()]),
        Recipe::Dihedral(n) => (format!("D{n}"), vec![]),
        Recipe::Quaternion(n) => (format!("Q{n}"), vec![format!("Dic{}", n / 4)]),
        Recipe::Symmetric(d) => (format!("S{d}"), vec![]),
        Recipe::Alternating(d) => (format!("A{d}"), vec![]),
        Recipe::SpecialLinear23 => ("SL(2,3)".into(), vec!["SL23".into()]),
        Recipe::Direct(a, b) => match (&**a, &**b) {
            (Recipe::Alternating(4), Recipe::Cyclic(p)) if is_prime(*p) => (format!("A4xC{p}"), vec![format!("A4xZ{p}")]),
            _ => return None,
        },
        _ => return None,
    })
}

/// Every group of every in-scope order up to `max_order` (clamped to
/// [`CATALOG_MAX_ORDER`]), each isomorphism class exactly once, ordered by
/// order and then by discovery.
pub fn builtin_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let max = max_order.min(CATALOG_MAX_ORDER);
    let mut found: BTreeMap<usize, Vec<Built>> = BTreeMap::new();
    let mut out = Vec::new();
    for n in 1..=max {
        let gs = groups_of_order(n, &found);
        if in_scope(n) {
            for (k, b) in gs.iter().enumerate() {
                let (name, mut aliases) = names_of(&b.recipe).unwrap_or_else(|| (format!("G{n}_{}", k + 1), vec![]));
                let numbered = format!("G{n}_{}", k + 1);
                if name != numbered {
                    aliases.push(numbered);
                }
                let table = b.table.clone().with_name(name.clone());
                out.push(CatalogEntry {
                    name,
                    aliases,
                    recipe: b.recipe.clone(),
                    order: n,
                    form: FormClass::of(n),
                    tags: tags_of(&table),
                    table,
                });
            }
        }
        found.insert(n, gs);
    }
    out
}

/// The built-in catalog with lookups by name and order.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin(max_order: usize) -> Catalog {
        Catalog { entries: builtin_catalog(max_order) }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.answers_to(name))
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let c = Catalog::builtin(24);
        assert_eq!(c.of_order(7).count(), 1);
        assert_eq!(c.of_order(18).count(), 5);
        assert_eq!(c.of_order(24).count(), 15);
        assert_eq!(c.get("s3").unwrap().order, 6);
        assert_eq!(c.get("SL(2,3)").unwrap().table.center().order(), 2);
        assert!(c.get("S4").unwrap().table.permutations().is_some());
        assert_eq!(c.get("C2xC6").unwrap().order, 12);
        assert_eq!(c.get("A4xC2").unwrap().order, 24);
        assert!(c.get("G24_15").is_some());
    }

    #[test]
    fn names_are_unique() {
        let c = Catalog::builtin(CATALOG_MAX_ORDER);
        let mut seen = std::collections::HashSet::new();
        for e in c.entries() {
            for n in std::iter::once(&e.name).chain(&e.aliases) {
                assert!(seen.insert(n.to_ascii_lowercase()), "{n}");
            }
        }
    }
}
