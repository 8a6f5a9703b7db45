//! The explicit Hamiltonian cycle of the `3p^2` quotient multigraph.
//!
//! Symbol 0 is `s` (order 3) and symbol 1 is `t` (order `p`), matching
//! [`crate::cayley::three_p_sq_multigraph`]. The walk sweeps the plane row by
//! row and starts at vertex `(1, 1)`.

use crate::cayley::{Sym, Word};

/// Vertex the row sweep starts from.
pub const ROW_SWEEP_START: (i64, i64) = (1, 1);

/// The row-sweep cycle for a prime `p >= 5`; empty for other `p`.
pub fn row_sweep_cycle(p: usize) -> Word {
    if p < 5 || !crate::group::is_prime(p) {
        return Word::new();
    }
    let pi = p as i64;
    let s = Sym::fwd(0);
    let t = Sym::fwd(1);
    let rem = |n: i64| n.rem_euclid(pi);
    let k = if p % 3 == 1 { (pi - 1) / 3 } else { (pi - 2) / 3 };
    let mut w = Word::new();
    let mut push = |sym: Sym, n: i64| w.extend(&Word::sym_pow(sym, n));
    // rows 1 ..= (p-3)/2, sweeping left then right
    for j in 1..=(pi - 3) / 2 {
        push(t.inverse(), rem(3 * j - 1));
        push(s.inverse(), 1);
        push(t, rem(-3 * j - 1));
        push(s.inverse(), 1);
    }
    // row (p-1)/2, leaving by s
    push(t.inverse(), (pi - 5) / 2);
    push(s.inverse(), 1);
    push(t, (pi + 1) / 2);
    push(s, 1);
    // row 0
    push(t, pi - 1);
    push(s.inverse(), 1);
    // rows -(p-1)/2 ..= -k-1, the same pattern turned half way round
    for j in -(pi - 1) / 2..=-k - 1 {
        push(t, rem(3 * j - 1));
        push(s, 1);
        push(t.inverse(), rem(-3 * j - 1));
        let last = if j == -k - 1 && p % 3 == 1 { s.inverse() } else { s };
        push(last, 1);
    }
    // rows -k ..= -2
    for j in -k..=-2 {
        push(t.inverse(), rem(3 * j - 1));
        push(s.inverse(), 1);
        push(t, rem(-3 * j - 1));
        push(s.inverse(), 1);
    }
    // row -1, then back to the start
    push(t.inverse(), pi - 4);
    push(s.inverse(), 1);
    push(t, 2);
    push(s, 1);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::three_p_sq_multigraph;

    #[test]
    fn sweeps_the_plane() {
        for p in [5usize, 7, 11, 13, 17, 19] {
            let w = row_sweep_cycle(p);
            assert_eq!(w.len(), p * p, "p={p}");
            let m = three_p_sq_multigraph(p).unwrap();
            let start = m.index(ROW_SWEEP_START.0, ROW_SWEEP_START.1);
            assert!(m.graph.is_hamiltonian_walk(start, &w), "p={p}");
            assert!(!m.graph.double_edge_steps(start, &w).is_empty(), "p={p}");
        }
    }

    #[test]
    fn small_primes_give_nothing() {
        assert!(row_sweep_cycle(3).is_empty());
        assert!(row_sweep_cycle(9).is_empty());
        assert!(three_p_sq_multigraph(9).is_err());
    }
}
