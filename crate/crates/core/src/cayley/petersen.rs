use super::{CayleyGraph, Sym};
use crate::group::{gcd, Elem};

/// Parameters of a generalized Petersen graph `GP(n, k)`.
///
/// `multiplier` is the unit `c` with `x_i s = s x_{c i}`, where `x_i` is
/// the `i`-th vertex of the outer cycle and `s` the spoke generator;
/// `k = c^-1 mod n`, normalised to at most `n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GpParams {
    pub n: usize,
    pub k: usize,
    pub multiplier: usize,
    pub spoke: Sym,
}

fn inverse_mod(c: usize, n: usize) -> Option<usize> {
    (1..n).find(|&d| c * d % n == 1).or(if n == 1 { Some(0) } else { None })
}

/// Recognises a cubic Cayley graph as a generalized Petersen graph.
///
/// A spoke symbol `s` must be an involution; the other symbols trace the
/// outer cycle `x_0 = e, x_1, ...` of length `|G|/2`, and the inner cycle is
/// `s x_0, s x_1, ...`. The graph is `GP(n, k)` when right multiplication by
/// `s` sends `x_i` to `s x_{c i}` for a unit `c`.
pub fn recognize_generalized_petersen(cay: &CayleyGraph<'_>) -> Option<GpParams> {
    let g = cay.group();
    if cay.degree() != 3 || !g.order().is_multiple_of(2) || g.order() < 6 {
        return None;
    }
    let n = g.order() / 2;
    for &s in cay.symbols() {
        let se = cay.elem(s);
        if g.element_order(se) != 2 {
            continue;
        }
        let rest: Vec<Sym> = cay.symbols().iter().copied().filter(|&t| t != s).collect();
        // Walk the 2-factor from e: alternate involutions, or one symbol
        // and its inverse direction.
        let Some(outer) = trace_outer(cay, &rest, n) else { continue };
        if outer.len() != n {
            continue;
        }
        let mut pos = vec![usize::MAX; g.order()];
        let mut distinct = true;
        for (i, &x) in outer.iter().enumerate() {
            distinct &= std::mem::replace(&mut pos[x.index()], i) == usize::MAX;
        }
        let last = outer[n - 1];
        if !distinct || !rest.iter().any(|&t| cay.step(last, t) == g.identity()) {
            continue;
        }
        if outer.iter().any(|&x| pos[g.mul(se, x).index()] != usize::MAX) {
            continue;
        }
        // x_i s = s x_j  <=>  x_j = s x_i s
        let phi: Vec<usize> = outer.iter().map(|&x| pos[g.mul(g.mul(se, x), se).index()]).collect();
        if phi.contains(&usize::MAX) {
            continue;
        }
        let c = phi[1 % n];
        if gcd(c, n) != 1 || (0..n).any(|i| phi[i] != c * i % n) {
            continue;
        }
        let k = inverse_mod(c, n)?;
        return Some(GpParams { n, k: k.min(n - k), multiplier: c, spoke: s });
    }
    None
}

fn trace_outer(cay: &CayleyGraph<'_>, rest: &[Sym], n: usize) -> Option<Vec<Elem>> {
    let g = cay.group();
    let mut out = vec![g.identity()];
    let mut prev: Option<Sym> = None;
    let mut v = g.identity();
    for _ in 1..n {
        // leave along the symbol that does not retrace the previous step
        let next = rest.iter().copied().find(|&t| match prev {
            None => true,
            Some(p) => cay.elem(t) != g.inv(cay.elem(p)),
        })?;
        v = cay.step(v, next);
        if v == g.identity() {
            return None;
        }
        out.push(v);
        prev = Some(next);
    }
    Some(out)
}
