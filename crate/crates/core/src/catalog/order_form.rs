//! Classification of group orders by the arithmetic shape of their
//! factorisation.

use std::fmt;

use crate::group::factorize;

/// The shape that decides which construction family handles an order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Trivial,
    PrimePower { p: usize },
    /// `pq`, including `p^2 q` shapes settled by the commutator gate.
    CommutatorGate,
    TwoPSquared { p: usize },
    FourP { p: usize },
    EightP { p: usize },
    ThreePSquared { p: usize },
    FourPSquared { p: usize },
    TwoPQ { p: usize, q: usize },
    OddPQR { p: usize, q: usize, r: usize },
    FourPQ { p: usize, q: usize },
    TwoPCubed { p: usize },
    EighteenP { p: usize },
    /// `16p`, `27p` or `30p`: in scope, but needing arguments not provided here.
    NoConstruction { k: usize, p: usize },
    Unsupported,
}

impl Route {
    pub fn is_supported(self) -> bool {
        !matches!(self, Route::Unsupported | Route::NoConstruction { .. })
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Route::Trivial => write!(f, "trivial"),
            Route::PrimePower { p } => write!(f, "p^k (p={p})"),
            Route::CommutatorGate => write!(f, "cyclic-commutator"),
            Route::TwoPSquared { p } => write!(f, "2p^2 (p={p})"),
            Route::FourP { p } => write!(f, "4p (p={p})"),
            Route::EightP { p } => write!(f, "8p (p={p})"),
            Route::ThreePSquared { p } => write!(f, "3p^2 (p={p})"),
            Route::FourPSquared { p } => write!(f, "4p^2 (p={p})"),
            Route::TwoPQ { p, q } => write!(f, "2pq (p={p}, q={q})"),
            Route::OddPQR { p, q, r } => write!(f, "pqr (p={p}, q={q}, r={r})"),
            Route::FourPQ { p, q } => write!(f, "4pq (p={p}, q={q})"),
            Route::TwoPCubed { p } => write!(f, "2p^3 (p={p})"),
            Route::EighteenP { p } => write!(f, "18p (p={p})"),
            Route::NoConstruction { k, p } => write!(f, "{k}p (p={p}) without construction"),
            Route::Unsupported => write!(f, "unsupported"),
        }
    }
}

/// The order shapes an order matches, as listed in the classification
/// theorem this library follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderForm {
    KP { k: usize, p: usize },
    KPQ { k: usize, p: usize, q: usize },
    PQR { p: usize, q: usize, r: usize },
    KP2 { k: usize, p: usize },
    KP3 { k: usize, p: usize },
    PrimePower { p: usize, k: u32 },
}

impl fmt::Display for OrderForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderForm::KP { k, p } => write!(f, "{k}*{p}"),
            OrderForm::KPQ { k, p, q } => write!(f, "{k}*{p}*{q}"),
            OrderForm::PQR { p, q, r } => write!(f, "{p}*{q}*{r}"),
            OrderForm::KP2 { k, p } => write!(f, "{k}*{p}^2"),
            OrderForm::KP3 { k, p } => write!(f, "{k}*{p}^3"),
            OrderForm::PrimePower { p, k } => write!(f, "{p}^{k}"),
        }
    }
}

fn primes_of(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Every form `n` matches.
pub fn order_forms(n: usize) -> Vec<OrderForm> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let f = factorize(n);
    if let [(p, k)] = f.as_slice() {
        out.push(OrderForm::PrimePower { p: *p, k: *k });
    }
    let ps = primes_of(n);
    for &p in &ps {
        let k = n / p;
        if k < 32 && k != 24 {
            out.push(OrderForm::KP { k, p });
        }
        if n.is_multiple_of(p * p) && n / (p * p) <= 4 {
            out.push(OrderForm::KP2 { k: n / (p * p), p });
        }
        if n.is_multiple_of(p * p * p) && n / (p * p * p) <= 2 {
            out.push(OrderForm::KP3 { k: n / (p * p * p), p });
        }
        for &q in &ps {
            if q > p && n.is_multiple_of(p * q) && n / (p * q) <= 5 {
                out.push(OrderForm::KPQ { k: n / (p * q), p, q });
            }
        }
    }
    if f.len() == 3 && f.iter().all(|&(_, e)| e == 1) {
        out.push(OrderForm::PQR { p: f[0].0, q: f[1].0, r: f[2].0 });
    }
    out
}

/// Whether `n` matches at least one form.
pub fn in_scope(n: usize) -> bool {
    n == 1 || !order_forms(n).is_empty()
}

/// The construction family responsible for order `n`.
pub fn route(n: usize) -> Route {
    if n == 1 {
        return Route::Trivial;
    }
    let f = factorize(n);
    let exps: Vec<u32> = f.iter().map(|x| x.1).collect();
    let pr: Vec<usize> = f.iter().map(|x| x.0).collect();
    match (pr.as_slice(), exps.as_slice()) {
        ([p], _) => return Route::PrimePower { p: *p },
        ([_, _], [1, 1]) => return Route::CommutatorGate,
        ([2, p], [1, 2]) => return Route::TwoPSquared { p: *p },
        ([2, p], [2, 1]) => return Route::FourP { p: *p },
        ([2, p], [3, 1]) => return Route::EightP { p: *p },
        ([3, p], [1, 2]) if *p >= 5 => return Route::ThreePSquared { p: *p },
        ([2, p], [2, 2]) => return Route::FourPSquared { p: *p },
        ([2, p, q], [1, 1, 1]) => return Route::TwoPQ { p: *p, q: *q },
        ([p, q, r], [1, 1, 1]) => return Route::OddPQR { p: *p, q: *q, r: *r },
        ([2, p, q], [2, 1, 1]) => return Route::FourPQ { p: *p, q: *q },
        ([2, p], [1, 3]) => return Route::TwoPCubed { p: *p },
        ([2, 3, p], [1, 2, 1]) if *p >= 5 => return Route::EighteenP { p: *p },
        _ => {}
    }
    // p^2 q with p^2 not congruent to 1 modulo q: the commutator gate applies
    if let ([a, b], [ea, eb]) = (pr.as_slice(), exps.as_slice()) {
        let (p, q) = if *ea == 2 && *eb == 1 { (*a, *b) } else if *ea == 1 && *eb == 2 { (*b, *a) } else { (0, 0) };
        if p != 0 && (p * p) % q != 1 {
            return Route::CommutatorGate;
        }
    }
    for k in [16, 27, 30] {
        if n.is_multiple_of(k) && crate::group::is_prime(n / k) {
            return Route::NoConstruction { k, p: n / k };
        }
    }
    Route::Unsupported
}
