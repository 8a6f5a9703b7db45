//! Finite groups stored as dense multiplication tables.
//!
//! Elements are indices `0..n`. Tables built by the constructors in this
//! module always put the identity at index 0; tables ingested through
//! [`GroupTable::from_table`] keep whatever numbering they arrive with.

mod construct;
mod iso;
mod presentation;
mod subgroup;

use std::fmt;

use thiserror::Error;

pub use construct::{parse_cycles, ActionSpec, Perm};
pub use iso::{are_isomorphic, automorphisms, isomorphism, GroupSignature};
pub use presentation::{MatchError, Presentation, RelWord};
pub use subgroup::{Cosets, Quotient, Subgroup};

/// Largest group order any table may have.
pub const MAX_ORDER: usize = 512;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Elem(pub u16);

impl Elem {
    pub const fn new(i: usize) -> Self {
        Elem(i as u16)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which line of a table broke the Latin-square property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableLine {
    Row(usize),
    Column(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("order {0} exceeds the cap of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square ({0:?} repeats an entry)")]
    NotLatinSquare(TableLine),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element 0 is not the identity")]
    IdentityNotZero,
    #[error("{p} is not a prime dividing the group order {order}")]
    NotAPrimeDivisor { p: usize, order: usize },
    #[error("subgroup is not normal: conjugating {h} by {g} leaves it")]
    NotNormal { h: Elem, g: Elem },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u16>,
    identity: Elem,
    perms: Option<Vec<Perm>>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Validates a table given as rows (`rows[g][h]` is `g*h`).
    pub fn from_table(rows: &[Vec<usize>]) -> Result<GroupTable, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::RaggedRow { row: r, len: row.len(), expected: n });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
            }
        }
        let mut seen = vec![false; n];
        for (r, row) in rows.iter().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &v in row {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::NotLatinSquare(TableLine::Row(r)));
                }
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for row in rows {
                if std::mem::replace(&mut seen[row[c]], true) {
                    return Err(GroupError::NotLatinSquare(TableLine::Column(c)));
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0u16; n];
        for g in 0..n {
            let h = (0..n).find(|&h| rows[g][h] == e).ok_or(GroupError::NoInverse(g))?;
            if rows[h][g] != e {
                return Err(GroupError::NoInverse(g));
            }
            inv[g] = h as u16;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mul = rows.iter().flat_map(|r| r.iter().map(|&v| v as u16)).collect();
        Ok(Self::assemble(format!("T{n}"), n, mul, inv, Elem::new(e)))
    }

    /// Builds a table known to be a group by construction.
    pub(crate) fn from_trusted(name: impl Into<String>, n: usize, mul: Vec<u16>) -> GroupTable {
        debug_assert_eq!(mul.len(), n * n);
        let e = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] as usize == g))
            .expect("trusted table has an identity");
        let mut inv = vec![0u16; n];
        for g in 0..n {
            let h = (0..n).find(|&h| mul[g * n + h] as usize == e).expect("inverse");
            inv[g] = h as u16;
        }
        Self::assemble(name.into(), n, mul, inv, Elem::new(e))
    }

    fn assemble(name: String, n: usize, mul: Vec<u16>, inv: Vec<u16>, identity: Elem) -> Self {
        let mut orders = vec![0u16; n];
        for g in 0..n {
            let mut x = g;
            let mut k = 1u16;
            while x != identity.index() {
                x = mul[x * n + g] as usize;
                k += 1;
            }
            orders[g] = k;
        }
        GroupTable { name, n, mul, inv, orders, identity, perms: None }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.n).map(Elem::new)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.n + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inv[a.index()])
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.element_order(a) as i64;
        let k = k.rem_euclid(o);
        let mut r = self.identity;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: Elem) -> usize {
        self.orders[a.index()] as usize
    }

    /// `g^h = h^-1 g h`.
    pub fn conjugate(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// `[g, h] = g^-1 h^-1 g h`.
    pub fn commutator(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    pub fn product(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul[a * self.n + b] == self.mul[b * self.n + a]))
    }

    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Row `g` of the table.
    pub fn row(&self, g: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.mul[g.index() * self.n..(g.index() + 1) * self.n].iter().map(|&v| Elem(v))
    }

    /// Permutation images of the elements, for groups built from permutations.
    pub fn permutations(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub(crate) fn set_permutations(&mut self, perms: Vec<Perm>) {
        self.perms = Some(perms);
    }

    /// Element index of a permutation, for groups built from permutations.
    pub fn element_of_perm(&self, p: &Perm) -> Option<Elem> {
        let perms = self.perms.as_ref()?;
        perms.iter().position(|q| q == p).map(Elem::new)
    }

    /// Human-readable label of an element.
    pub fn label(&self, g: Elem) -> String {
        match &self.perms {
            Some(p) => p[g.index()].to_string(),
            None => g.to_string(),
        }
    }

    /// Parses the plain-text table format: the order on the first line, then
    /// one row per line. Lines starting with `#` are comments.
    pub fn from_text(text: &str) -> Result<GroupTable, GroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());
        let (ln, first) = lines.next().ok_or(GroupError::Empty)?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| GroupError::Parse { line: ln + 1, msg: format!("bad order {first:?}") })?;
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut rows = Vec::with_capacity(n);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| GroupError::Parse { line: ln + 1, msg: e.to_string() })?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(GroupError::Parse {
                line: 0,
                msg: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        let g = GroupTable::from_table(&rows)?;
        if g.identity.index() != 0 {
            return Err(GroupError::IdentityNotZero);
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for r in 0..self.n {
            let row: Vec<String> = self.mul[r * self.n..(r + 1) * self.n].iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|r| self.mul[r * self.n..(r + 1) * self.n].iter().map(|&v| v as usize).collect())
            .collect()
    }
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Some(p)` if `n` is a power of the prime `p` (with `n > 1`).
pub fn prime_power_base(n: usize) -> Option<usize> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
