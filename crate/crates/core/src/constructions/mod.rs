//! The dispatcher: reduce the generating set, route the group through the
//! structural gates and the order-shape handlers, and return a verified
//! certificate with the trace of how the cycle was built.

mod endgames;
mod families;
mod special;
mod toolkit;

pub mod pattern;
pub mod row_sweep;

use std::fmt;

use thiserror::Error;

use crate::catalog::{route, Route};
use crate::cayley::{CayleyError, CayleyGraph, Cycle, Sym, Word};
use crate::group::{Elem, GroupTable};
use crate::lifting::{LiftError, Lifted, SubSolver};
use crate::oracle::{find_hamiltonian, SearchBudget};
use crate::trace::{Cited, StepKind, Trace};

pub use row_sweep::row_sweep_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest group order accepted at the top level.
    pub cap: usize,
    /// Allow uncredited search when no construction applies.
    pub allow_fallback: bool,
    /// Budget for searches backed by a published existence result.
    pub cited_budget: SearchBudget,
    /// Budget for uncredited searches.
    pub fallback_budget: SearchBudget,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: 63,
            allow_fallback: true,
            cited_budget: SearchBudget::DEFAULT,
            fallback_budget: SearchBudget::FALLBACK,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("the generators do not generate the group")]
    NotGenerating,
    #[error("invalid generator: {0}")]
    InvalidGenerator(CayleyError),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderAboveCap { order: usize, cap: usize },
    #[error("order {order} matches no supported shape")]
    Unsupported { order: usize },
    #[error("order {order} ({route}) has no construction here; fallback search is disabled")]
    UnsupportedByPaper { order: usize, route: Route },
    #[error("search budget exhausted")]
    BudgetExceeded,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A Hamiltonian cycle of `Cay(G; gens)`: `word^repeat` from the identity,
/// with symbols indexing `gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub group: String,
    pub order: usize,
    pub gens: Vec<Elem>,
    pub word: Word,
    pub repeat: usize,
    pub method: Trace,
}

impl Certificate {
    pub fn cycle(&self) -> Cycle {
        Cycle::new(self.word.clone(), self.repeat)
    }

    /// Re-checks the certificate against a group table.
    pub fn verify(&self, g: &GroupTable) -> bool {
        g.order() == self.order
            && CayleyGraph::new(g, &self.gens).is_ok_and(|c| c.is_hamiltonian_cycle(&self.word, self.repeat).is_ok())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}^{} [{}]", self.group, self.word, self.repeat, self.method)
    }
}

/// Drops generators in ascending index order while the rest still
/// generate. Returns the kept indices.
pub fn minimality_reduce(g: &GroupTable, gens: &[Elem]) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..gens.len()).collect();
    let mut i = 0;
    while i < keep.len() {
        let rest: Vec<Elem> = keep.iter().filter(|&&k| k != keep[i]).map(|&k| gens[k]).collect();
        if g.generates(&rest) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

/// Finds a certified Hamiltonian cycle of `Cay(g; gens)`.
pub fn solve(g: &GroupTable, gens: &[Elem]) -> Result<Certificate, SolveError> {
    solve_with(g, gens, &SolveOptions::default())
}

pub fn solve_with(g: &GroupTable, gens: &[Elem], opts: &SolveOptions) -> Result<Certificate, SolveError> {
    if g.order() > opts.cap {
        return Err(SolveError::OrderAboveCap { order: g.order(), cap: opts.cap });
    }
    let solver = Solver { opts: *opts };
    let lifted = solver.solve_group(g, gens)?;
    let cert = Certificate {
        group: g.name().to_string(),
        order: g.order(),
        gens: gens.to_vec(),
        word: lifted.cycle.word,
        repeat: lifted.cycle.repeat,
        method: lifted.trace,
    };
    if !cert.verify(g) {
        return Err(SolveError::InternalInconsistency("certificate failed verification".into()));
    }
    Ok(cert)
}

/// The recursive solver; also serves lifting lemmas that need cycles of
/// quotients and subgroups.
pub(crate) struct Solver {
    opts: SolveOptions,
}

impl SubSolver for Solver {
    fn solve_sub(&self, group: &GroupTable, gens: &[Elem]) -> Result<Lifted, LiftError> {
        self.solve_group(group, gens).map_err(|e| match e {
            SolveError::BudgetExceeded => LiftError::BudgetExceeded,
            e => LiftError::Sub(e.to_string()),
        })
    }
}

impl Solver {
    fn solve_group(&self, g: &GroupTable, gens: &[Elem]) -> Result<Lifted, SolveError> {
        let cay = CayleyGraph::new(g, gens).map_err(|e| match e {
            CayleyError::NotGenerating => SolveError::NotGenerating,
            e => SolveError::InvalidGenerator(e),
        })?;
        if g.order() == 1 {
            return Ok(Lifted { cycle: Cycle::new(Word::new(), 1), trace: Trace::construction("trivial") });
        }
        let keep = minimality_reduce(g, gens);
        let reduced: Vec<Elem> = keep.iter().map(|&i| gens[i]).collect();
        let rcay = CayleyGraph::new(g, &reduced).map_err(SolveError::InvalidGenerator)?;
        let mut lifted = self.dispatch(&rcay)?;
        let map: Vec<Sym> = keep.iter().map(|&i| Sym::fwd(i)).collect();
        lifted.cycle = lifted.cycle.relabel(&map);
        if keep.len() < gens.len() {
            let dropped = gens.len() - keep.len();
            lifted.trace = lifted.trace.under(format!("minimal[-{dropped}]"), StepKind::Construction);
        }
        if cay.check_cycle(&lifted.cycle).is_err() {
            return Err(SolveError::InternalInconsistency(format!("cycle failed on {}", g.name())));
        }
        Ok(lifted)
    }

    /// Gates in order: cyclic and abelian groups, the cyclic-commutator
    /// result, dihedral and quaternion type, then the order-shape handler.
    fn dispatch(&self, cay: &CayleyGraph<'_>) -> Result<Lifted, SolveError> {
        let g = cay.group();
        if g.order() == 2 {
            let c = Cycle::new(Word::single(Sym::fwd(0)), 2);
            return Ok(Lifted { cycle: c, trace: Trace::construction("order-2") });
        }
        if cay.gens().len() == 1 {
            let c = Cycle::new(Word::single(Sym::fwd(0)), g.order());
            return Ok(Lifted { cycle: c, trace: Trace::construction("cyclic") });
        }
        if g.is_abelian() {
            return toolkit::abelian(self, cay);
        }
        if g.commutator_is_cyclic_p_group() {
            return self.cited(cay, Cited::KeatingWitte, "cyclic-commutator");
        }
        if let Some(r) = families::dihedral_or_quaternion(self, cay)? {
            return Ok(r);
        }
        let rt = route(g.order());
        if let Some(r) = families::by_route(self, cay, rt)? {
            return Ok(r);
        }
        if let Some(r) = toolkit::scan(self, cay) {
            return Ok(r.under(format!("{rt}"), StepKind::Construction));
        }
        if let Some(r) = families::endgame(self, cay, rt)? {
            return Ok(r.under(format!("{rt}"), StepKind::Construction));
        }
        if let Some(r) = toolkit::cited_scan(self, cay) {
            return Ok(r.under(format!("{rt}"), StepKind::Construction));
        }
        self.fallback(cay, rt)
    }

    /// Search justified by a published existence result.
    fn cited(&self, cay: &CayleyGraph<'_>, c: Cited, label: &str) -> Result<Lifted, SolveError> {
        let w = find_hamiltonian(cay, self.opts.cited_budget).map_err(|e| {
            if e.complete {
                SolveError::InternalInconsistency(format!("{label}: complete search found no cycle"))
            } else {
                SolveError::BudgetExceeded
            }
        })?;
        Ok(Lifted { cycle: Cycle::new(w, 1), trace: Trace::cited(c, label) })
    }

    fn fallback(&self, cay: &CayleyGraph<'_>, rt: Route) -> Result<Lifted, SolveError> {
        let order = cay.order();
        if !self.opts.allow_fallback {
            return Err(match rt {
                Route::Unsupported => SolveError::Unsupported { order },
                _ => SolveError::UnsupportedByPaper { order, route: rt },
            });
        }
        let w = find_hamiltonian(cay, self.opts.fallback_budget).map_err(|e| {
            if e.complete {
                SolveError::InternalInconsistency("complete search found no cycle".into())
            } else {
                SolveError::BudgetExceeded
            }
        })?;
        Ok(Lifted { cycle: Cycle::new(w, 1), trace: Trace::unexpected(format!("search[{rt}]")) })
    }
}

impl Lifted {
    pub(crate) fn under(self, label: impl Into<String>, kind: StepKind) -> Lifted {
        Lifted { cycle: self.cycle, trace: self.trace.under(label, kind) }
    }
}
