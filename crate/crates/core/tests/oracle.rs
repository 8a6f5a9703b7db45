mod common;

use common::petersen_edges;
use hamcert::catalog::{builtin_catalog, enumerate_generating_sets};
use hamcert::cayley::CayleyGraph;
use hamcert::group::{Elem, GroupTable};
use hamcert::oracle::{
    find_hamiltonian, find_hamiltonian_adjacency, find_hamiltonian_path, parse_edge_list, verify_independent, AdjGraph,
    EdgeListError, SearchBudget,
};
use proptest::prelude::*;

/// Whether a Hamiltonian cycle exists, by dynamic programming over the
/// subsets of vertices that contain vertex 0.
fn held_karp(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 3 {
        return false;
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    // reach[mask] has bit v set when a path from 0 covers exactly mask
    // and ends at v
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..(1u32 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        for v in 0..n {
            if ends & (1 << v) == 0 {
                continue;
            }
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    reach[(1 << n) - 1] & adj[0] != 0
}

fn is_cycle(n: usize, edges: &[(usize, usize)], path: &[usize]) -> bool {
    let adjacent = |a: usize, b: usize| edges.iter().any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a));
    let mut seen = vec![false; n];
    path.len() == n
        && path.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| adjacent(path[i], path[(i + 1) % n]))
}

#[test]
fn petersen_is_exhausted() {
    let g = AdjGraph::from_edges(10, &petersen_edges());
    let err = find_hamiltonian_adjacency(&g, SearchBudget::DEFAULT).unwrap_err();
    assert!(err.complete);
    assert!(!held_karp(10, &petersen_edges()));
}

#[test]
fn edge_lists() {
    let text = "# square\n0 1\n1 2\n\n2 3\n3 0\n";
    let g = parse_edge_list(text).unwrap();
    assert_eq!(g.vertex_count(), 4);
    let c = find_hamiltonian_adjacency(&g, SearchBudget::DEFAULT).unwrap();
    assert!(is_cycle(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &c));
    assert_eq!(parse_edge_list("0 1\n2\n").unwrap_err(), EdgeListError::BadLine(2));
    assert_eq!(parse_edge_list("0 x\n").unwrap_err(), EdgeListError::BadLine(1));
}

#[test]
fn cyclic_and_paths() {
    let g = GroupTable::cyclic(7);
    let cay = CayleyGraph::new(&g, &[Elem::new(1)]).unwrap();
    let w = find_hamiltonian(&cay, SearchBudget::DEFAULT).unwrap();
    assert!(verify_independent(&g, &[Elem::new(1)], &w, 1));
    let d = GroupTable::dihedral(12);
    let gens = [Elem::new(1), Elem::new(6)];
    let cay = CayleyGraph::new(&d, &gens).unwrap();
    for end in d.elements().skip(1) {
        match find_hamiltonian_path(&cay, end, SearchBudget::DEFAULT) {
            Ok(p) => assert_eq!(cay.is_hamiltonian_path(&p), Ok(end)),
            Err(e) => assert!(e.complete, "path search to {end} gave up"),
        }
    }
}

#[test]
fn small_cayley_graphs_all_have_cycles() {
    for e in builtin_catalog(16) {
        for rec in enumerate_generating_sets(&e.table, 3, usize::MAX).records {
            let cay = CayleyGraph::new(&e.table, &rec.generators).unwrap();
            let w = find_hamiltonian(&cay, SearchBudget::DEFAULT).unwrap();
            assert!(verify_independent(&e.table, &rec.generators, &w, 1), "{} {:?}", e.name, rec.generators);
        }
    }
}

fn small_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (3usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        (Just(n), prop::collection::vec(prop::bool::weighted(0.45), k))
            .prop_map(move |(n, keep)| (n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn agrees_with_subset_dynamic_programming((n, edges) in small_graph()) {
        let g = AdjGraph::from_edges(n, &edges);
        let exists = held_karp(n, &edges);
        match find_hamiltonian_adjacency(&g, SearchBudget::DEFAULT) {
            Ok(c) => {
                prop_assert!(exists);
                prop_assert!(is_cycle(n, &edges, &c));
            }
            Err(e) => {
                prop_assert!(e.complete);
                prop_assert!(!exists);
            }
        }
    }
}
