//! Cayley graphs, words over generators, walks and coset multigraphs.

mod multigraph;
mod petersen;

use std::fmt;

use thiserror::Error;

use crate::group::{Elem, GroupTable, Subgroup};

pub use multigraph::{three_p_sq_multigraph, CosetMultigraph, Multigraph, PlaneMultigraph};
pub use petersen::{recognize_generalized_petersen, GpParams};

/// A step along a generator (`inv == false`) or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Sym {
    pub gen: u16,
    pub inv: bool,
}

impl Sym {
    pub const fn fwd(gen: usize) -> Sym {
        Sym { gen: gen as u16, inv: false }
    }

    pub const fn back(gen: usize) -> Sym {
        Sym { gen: gen as u16, inv: true }
    }

    pub fn inverse(self) -> Sym {
        Sym { gen: self.gen, inv: !self.inv }
    }

    /// One-based signed index, negative for inverses.
    pub fn signed(self) -> i64 {
        let k = self.gen as i64 + 1;
        if self.inv {
            -k
        } else {
            k
        }
    }

    pub fn from_signed(k: i64) -> Option<Sym> {
        match k {
            0 => None,
            k if k > 0 => Some(Sym::fwd((k - 1) as usize)),
            k => Some(Sym::back((-k - 1) as usize)),
        }
    }
}

/// A finite sequence of generator steps.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syms(&self) -> &[Sym] {
        &self.0
    }

    /// `s^k`: `|k|` copies of `s` or of its inverse.
    pub fn sym_pow(s: Sym, k: i64) -> Word {
        let t = if k < 0 { s.inverse() } else { s };
        Word(vec![t; k.unsigned_abs() as usize])
    }

    pub fn single(s: Sym) -> Word {
        Word(vec![s])
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Drops the final step (`W#`).
    pub fn drop_last(&self) -> Word {
        let mut v = self.0.clone();
        v.pop();
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, s: Sym) {
        self.0.push(s);
    }

    pub fn extend(&mut self, w: &Word) {
        self.0.extend_from_slice(&w.0);
    }

    /// The reverse walk: reversed order, each step inverted.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    pub fn rotate_left(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Word(v)
    }

    /// Replaces generator indices through `map`.
    pub fn relabel(&self, map: &[Sym]) -> Word {
        Word(
            self.0
                .iter()
                .map(|s| {
                    let t = map[s.gen as usize];
                    if s.inv {
                        t.inverse()
                    } else {
                        t
                    }
                })
                .collect(),
        )
    }
}

impl FromIterator<Sym> for Word {
    fn from_iter<I: IntoIterator<Item = Sym>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.signed().to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Builds a word from a mix of single steps and sub-words.
#[macro_export]
macro_rules! word {
    ($($part:expr),* $(,)?) => {{
        let mut w = $crate::cayley::Word::new();
        $( $crate::cayley::WordPart::append($part, &mut w); )*
        w
    }};
}

pub trait WordPart {
    fn append(self, w: &mut Word);
}

impl WordPart for Sym {
    fn append(self, w: &mut Word) {
        w.push(self);
    }
}

impl WordPart for Word {
    fn append(self, w: &mut Word) {
        w.extend(&self);
    }
}

impl WordPart for &Word {
    fn append(self, w: &mut Word) {
        w.extend(self);
    }
}

/// A closed walk given as a word repeated some number of times.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cycle {
    pub word: Word,
    pub repeat: usize,
}

impl Cycle {
    pub fn new(word: Word, repeat: usize) -> Cycle {
        Cycle { word, repeat }
    }

    pub fn flatten(&self) -> Word {
        self.word.power(self.repeat)
    }

    pub fn len(&self) -> usize {
        self.word.len() * self.repeat
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn relabel(&self, map: &[Sym]) -> Cycle {
        Cycle { word: self.word.relabel(map), repeat: self.repeat }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CayleyError {
    #[error("generator {0} is out of range")]
    OutOfRange(usize),
    #[error("the generating set does not generate the group")]
    NotGenerating,
    #[error("the identity cannot be a generator")]
    IdentityGenerator,
    #[error("{0} is not a prime of at least 5")]
    NotPrime(usize),
}

/// Why a walk failed to be a Hamiltonian cycle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HamFailure {
    #[error("walk has {len} steps, expected {expected}")]
    WrongLength { len: usize, expected: usize },
    #[error("step {step} revisits element {vertex}")]
    RepeatedVertex { step: usize, vertex: Elem },
    #[error("walk ends at {endpoint}, not at its start")]
    NotClosed { endpoint: Elem },
    #[error("symbol {0} names no generator")]
    BadSymbol(i64),
}

#[derive(Clone, Debug)]
pub struct CayleyGraph<'a> {
    group: &'a GroupTable,
    gens: Vec<Elem>,
    symbols: Vec<Sym>,
}

impl<'a> CayleyGraph<'a> {
    /// A Cayley graph on `gens`; the generators must be non-identity and
    /// generate the group. Repeated or mutually inverse generators are
    /// allowed and simply label parallel steps.
    pub fn new(group: &'a GroupTable, gens: &[Elem]) -> Result<CayleyGraph<'a>, CayleyError> {
        for &g in gens {
            if g.index() >= group.order() {
                return Err(CayleyError::OutOfRange(g.index()));
            }
            if g == group.identity() && group.order() > 1 {
                return Err(CayleyError::IdentityGenerator);
            }
        }
        if !group.generates(gens) {
            return Err(CayleyError::NotGenerating);
        }
        let mut symbols: Vec<Sym> = Vec::new();
        let mut seen: Vec<Elem> = Vec::new();
        for i in 0..gens.len() {
            for s in [Sym::fwd(i), Sym::back(i)] {
                let e = if s.inv { group.inv(gens[i]) } else { gens[i] };
                if !seen.contains(&e) {
                    seen.push(e);
                    symbols.push(s);
                }
            }
        }
        Ok(CayleyGraph { group, gens: gens.to_vec(), symbols })
    }

    pub fn group(&self) -> &'a GroupTable {
        self.group
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// One symbol per distinct element of `S u S^-1`, generator order first.
    pub fn symbols(&self) -> &[Sym] {
        &self.symbols
    }

    pub fn degree(&self) -> usize {
        self.symbols.len()
    }

    pub fn elem(&self, s: Sym) -> Elem {
        let g = self.gens[s.gen as usize];
        if s.inv {
            self.group.inv(g)
        } else {
            g
        }
    }

    /// Symbol of `S u S^-1` equal to `e`, if any (earliest in symbol order).
    pub fn sym_of(&self, e: Elem) -> Option<Sym> {
        self.symbols.iter().copied().find(|&s| self.elem(s) == e)
    }

    pub fn step(&self, v: Elem, s: Sym) -> Elem {
        self.group.mul(v, self.elem(s))
    }

    pub fn neighbors(&self, v: Elem) -> impl Iterator<Item = (Sym, Elem)> + '_ {
        self.symbols.iter().map(move |&s| (s, self.step(v, s)))
    }

    pub fn word_product(&self, w: &Word) -> Elem {
        w.0.iter().fold(self.group.identity(), |acc, &s| self.group.mul(acc, self.elem(s)))
    }

    fn check_word(&self, w: &Word) -> Result<(), HamFailure> {
        match w.0.iter().find(|s| s.gen as usize >= self.gens.len()) {
            Some(s) => Err(HamFailure::BadSymbol(s.signed())),
            None => Ok(()),
        }
    }

    /// Every vertex visited by the walk from `start`, including both ends.
    pub fn evaluate_walk(&self, start: Elem, w: &Word) -> (Vec<Elem>, Elem) {
        let mut v = start;
        let mut out = Vec::with_capacity(w.len() + 1);
        out.push(v);
        for &s in &w.0 {
            v = self.step(v, s);
            out.push(v);
        }
        (out, v)
    }

    /// Checks that `word^repeat`, walked from the identity, visits every
    /// element exactly once and returns to the identity.
    pub fn is_hamiltonian_cycle(&self, word: &Word, repeat: usize) -> Result<(), HamFailure> {
        self.check_word(word)?;
        let n = self.order();
        let len = word.len() * repeat;
        let expected = if n == 1 { 0 } else { n };
        if len != expected {
            return Err(HamFailure::WrongLength { len, expected });
        }
        let mut seen = vec![false; n];
        let mut v = self.group.identity();
        seen[v.index()] = true;
        let mut step = 0;
        for _ in 0..repeat {
            for &s in &word.0 {
                v = self.step(v, s);
                step += 1;
                if step == n {
                    break;
                }
                if std::mem::replace(&mut seen[v.index()], true) {
                    return Err(HamFailure::RepeatedVertex { step, vertex: v });
                }
            }
        }
        if v != self.group.identity() {
            return Err(HamFailure::NotClosed { endpoint: v });
        }
        Ok(())
    }

    pub fn check_cycle(&self, c: &Cycle) -> Result<(), HamFailure> {
        self.is_hamiltonian_cycle(&c.word, c.repeat)
    }

    /// Checks a Hamiltonian path from the identity (all elements visited once).
    pub fn is_hamiltonian_path(&self, w: &Word) -> Result<Elem, HamFailure> {
        self.check_word(w)?;
        let n = self.order();
        if w.len() + 1 != n {
            return Err(HamFailure::WrongLength { len: w.len(), expected: n - 1 });
        }
        let mut seen = vec![false; n];
        let mut v = self.group.identity();
        seen[v.index()] = true;
        for (i, &s) in w.0.iter().enumerate() {
            v = self.step(v, s);
            if std::mem::replace(&mut seen[v.index()], true) {
                return Err(HamFailure::RepeatedVertex { step: i + 1, vertex: v });
            }
        }
        Ok(v)
    }

    pub fn is_connected(&self) -> bool {
        self.group.generates(&self.gens)
    }

    /// The multigraph on right cosets `Hg`: one edge from `Hg` for each
    /// symbol `s`, to `Hgs`.
    pub fn coset_multigraph(&self, h: &Subgroup) -> CosetMultigraph {
        CosetMultigraph::build(self, h)
    }
}
