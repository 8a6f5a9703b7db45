//! Matching a group against named generators, target orders and relations.

use thiserror::Error;

use super::{Elem, GroupTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchError {
    #[error("no assignment satisfies the presentation")]
    NotIsomorphic,
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("bad relation {0:?}: {1}")]
    BadRelation(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    Pow(usize, i64),
    Conj(usize, usize, i64),
}

/// A product of powers of named generators; `x^y` denotes `y^-1 x y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelWord(Vec<Factor>);

impl RelWord {
    fn eval(&self, g: &GroupTable, a: &[Elem]) -> Elem {
        self.0.iter().fold(g.identity(), |acc, f| {
            let x = match *f {
                Factor::Pow(i, k) => g.pow(a[i], k),
                Factor::Conj(i, j, k) => g.pow(g.conjugate(a[i], a[j]), k),
            };
            g.mul(acc, x)
        })
    }

    fn max_name(&self) -> usize {
        self.0
            .iter()
            .map(|f| match *f {
                Factor::Pow(i, _) => i,
                Factor::Conj(i, j, _) => i.max(j),
            })
            .max()
            .unwrap_or(0)
    }
}

/// Named generators with optional exact orders and a list of relations.
#[derive(Clone, Debug, Default)]
pub struct Presentation {
    names: Vec<String>,
    orders: Vec<Option<usize>>,
    relations: Vec<(RelWord, RelWord)>,
}

impl Presentation {
    pub fn new(names: &[&str]) -> Presentation {
        Presentation {
            names: names.iter().map(|s| s.to_string()).collect(),
            orders: vec![None; names.len()],
            relations: Vec::new(),
        }
    }

    pub fn order(mut self, name: &str, k: usize) -> Self {
        let i = self.names.iter().position(|n| n == name).expect("unknown generator");
        self.orders[i] = Some(k);
        self
    }

    /// Adds `lhs = rhs`, written as space-separated factors `a`, `a^k`,
    /// `a^b` or `a^b^k`, with `e` for the identity.
    pub fn relation(mut self, text: &str) -> Result<Self, MatchError> {
        let (l, r) = text
            .split_once('=')
            .ok_or_else(|| MatchError::BadRelation(text.into(), "missing '='".into()))?;
        let lhs = self.parse_word(l, text)?;
        let rhs = self.parse_word(r, text)?;
        self.relations.push((lhs, rhs));
        Ok(self)
    }

    fn parse_word(&self, s: &str, whole: &str) -> Result<RelWord, MatchError> {
        let err = |m: &str| MatchError::BadRelation(whole.into(), m.into());
        let idx = |n: &str| self.names.iter().position(|x| x == n).ok_or_else(|| err(&format!("unknown name {n}")));
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let parts: Vec<&str> = tok.split('^').collect();
            let f = match parts.as_slice() {
                [a] => Factor::Pow(idx(a)?, 1),
                [a, b] => match b.parse::<i64>() {
                    Ok(k) => Factor::Pow(idx(a)?, k),
                    Err(_) => Factor::Conj(idx(a)?, idx(b)?, 1),
                },
                [a, b, k] => Factor::Conj(idx(a)?, idx(b)?, k.parse().map_err(|_| err("bad exponent"))?),
                _ => return Err(err("bad factor")),
            };
            out.push(f);
        }
        Ok(RelWord(out))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Finds images of the named generators satisfying every order and
    /// relation and generating the whole group. Candidates are tried in
    /// increasing element order; `budget` caps the number of search nodes.
    pub fn match_group(&self, g: &GroupTable, budget: u64) -> Result<Vec<Elem>, MatchError> {
        let mut nodes = 0u64;
        let mut found = None;
        let mut assign = Vec::new();
        let k = self.names.len();
        // relations become checkable once all their names are assigned
        let mut ready: Vec<Vec<usize>> = vec![Vec::new(); k.max(1)];
        for (i, (l, r)) in self.relations.iter().enumerate() {
            ready[l.max_name().max(r.max_name())].push(i);
        }
        self.dfs(g, &ready, &mut assign, &mut nodes, budget, &mut found)?;
        found.ok_or(MatchError::NotIsomorphic)
    }

    fn dfs(
        &self,
        g: &GroupTable,
        ready: &[Vec<usize>],
        assign: &mut Vec<Elem>,
        nodes: &mut u64,
        budget: u64,
        found: &mut Option<Vec<Elem>>,
    ) -> Result<bool, MatchError> {
        let d = assign.len();
        if d == self.names.len() {
            if g.generates(assign) {
                *found = Some(assign.clone());
                return Ok(true);
            }
            return Ok(false);
        }
        for x in g.elements() {
            if let Some(o) = self.orders[d] {
                if g.element_order(x) != o {
                    continue;
                }
            }
            *nodes += 1;
            if *nodes > budget {
                return Err(MatchError::BudgetExceeded(budget));
            }
            assign.push(x);
            let ok = ready[d].iter().all(|&i| {
                let (l, r) = &self.relations[i];
                l.eval(g, assign) == r.eval(g, assign)
            });
            if ok && self.dfs(g, ready, assign, nodes, budget, found)? {
                return Ok(true);
            }
            assign.pop();
        }
        Ok(false)
    }
}
