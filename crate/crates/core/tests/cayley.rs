mod common;

use common::{cat, pw, DihedralPair};
use hamcert::catalog::{builtin_catalog, enumerate_generating_sets, z3_on_zp_squared};
use hamcert::cayley::{recognize_generalized_petersen, three_p_sq_multigraph, CayleyError, CayleyGraph, HamFailure, Sym, Word};
use hamcert::constructions::solve;
use hamcert::group::{parse_cycles, Elem, GroupTable};
use hamcert::oracle::verify_independent;
use proptest::prelude::*;

fn perm_elem(g: &GroupTable, text: &str, degree: usize) -> Elem {
    g.element_of_perm(&parse_cycles(text, degree).unwrap()[0]).unwrap()
}

#[test]
fn walks() {
    let g = GroupTable::dihedral(10);
    let cay = CayleyGraph::new(&g, &[Elem::new(1), Elem::new(5)]).unwrap();
    let start = Elem::new(3);
    assert_eq!(cay.evaluate_walk(start, &Word::new()), (vec![start], start));
    let w = Word(vec![Sym::fwd(0), Sym::fwd(1), Sym::back(0), Sym::fwd(0), Sym::fwd(0)]);
    let (vs, end) = cay.evaluate_walk(start, &w);
    assert_eq!(vs.len(), w.len() + 1);
    assert_eq!(end, g.mul(start, cay.word_product(&w)));
    assert_eq!(cay.evaluate_walk(end, &w.invert()).1, start);
}

#[test]
fn constructor_errors() {
    let g = GroupTable::cyclic(6);
    assert_eq!(CayleyGraph::new(&g, &[Elem::new(2)]).unwrap_err(), CayleyError::NotGenerating);
    assert_eq!(CayleyGraph::new(&g, &[Elem::new(0), Elem::new(1)]).unwrap_err(), CayleyError::IdentityGenerator);
    assert_eq!(CayleyGraph::new(&g, &[Elem::new(9)]).unwrap_err(), CayleyError::OutOfRange(9));
}

#[test]
fn hamiltonian_cycle_examples() {
    for n in [2usize, 5, 12] {
        let g = GroupTable::cyclic(n);
        let cay = CayleyGraph::new(&g, &[Elem::new(1)]).unwrap();
        assert_eq!(cay.is_hamiltonian_cycle(&Word(vec![Sym::fwd(0)]), n), Ok(()));
        assert!(matches!(cay.is_hamiltonian_cycle(&Word(vec![Sym::fwd(0)]), n - 1), Err(HamFailure::WrongLength { .. })));
    }

    let s4 = GroupTable::symmetric(4);
    let (a, b) = (perm_elem(&s4, "(1,2)", 4), perm_elem(&s4, "(2,3,4)", 4));
    let cay = CayleyGraph::new(&s4, &[a, b]).unwrap();
    let half = cat(&[pw(0, 1), pw(1, 2), pw(0, 1), pw(1, 2), pw(0, 1), pw(1, -2), pw(0, 1), pw(1, -2)]);
    assert_eq!(cay.is_hamiltonian_cycle(&half, 2), Ok(()));
    assert!(verify_independent(&s4, &[a, b], &half, 2));

    let g = GroupTable::direct_product(&GroupTable::alternating(4), &GroupTable::cyclic(2));
    let a4 = GroupTable::alternating(4);
    let lift = |text: &str| Elem::new(perm_elem(&a4, text, 4).index() * 2 + 1);
    let (a, b) = (lift("(1,2)(3,4)"), lift("(1,2,3)"));
    let cay = CayleyGraph::new(&g, &[a, b]).unwrap();
    let w = cat(&[pw(1, 5), pw(0, 1), pw(1, -5), pw(0, 1)]);
    assert_eq!(cay.is_hamiltonian_cycle(&w, 2), Ok(()));
    assert!(verify_independent(&g, &[a, b], &w, 2));
    // the same walk without the last generator revisits a vertex
    let bad = cat(&[pw(1, 5), pw(0, 1), pw(1, -5), pw(1, 1)]);
    assert!(matches!(cay.is_hamiltonian_cycle(&bad, 2), Err(HamFailure::RepeatedVertex { .. })));
}

#[test]
fn coset_multigraph_extremes() {
    for e in builtin_catalog(20) {
        let g = &e.table;
        let list = enumerate_generating_sets(g, 2, 50);
        for rec in list.records.iter().take(5) {
            let cay = CayleyGraph::new(g, &rec.generators).unwrap();
            let mg = cay.coset_multigraph(&g.trivial_subgroup());
            assert_eq!(mg.graph.vertex_count(), g.order());
            for v in g.elements() {
                for &s in cay.symbols() {
                    assert_eq!(mg.graph.step(mg.coset_of(v), s), Some(mg.coset_of(cay.step(v, s))));
                }
            }
            let whole = cay.coset_multigraph(&g.whole());
            assert_eq!(whole.graph.vertex_count(), 1);
            assert_eq!(whole.edges().len(), cay.degree());
            assert!(whole.edges().iter().all(|&(u, v, _)| u == 0 && v == 0));
        }
    }
}

/// The plane coordinates of the coset containing `t^i u^j`.
fn plane_coords_agree(p: usize) {
    let g = z3_on_zp_squared(p).unwrap();
    let (s, t) = (Elem::new(p * p), Elem::new(p));
    let cay = CayleyGraph::new(&g, &[s, t]).unwrap();
    let h = g.subgroup_closure(&[s]);
    let mg = cay.coset_multigraph(&h);
    let plane = three_p_sq_multigraph(p).unwrap();
    assert_eq!(mg.graph.vertex_count(), p * p);
    // element t^i u^j has index i*p + j
    let coset = |i: usize, j: usize| mg.coset_of(Elem::new(i * p + j));
    for i in 0..p {
        for j in 0..p {
            let v = plane.index(i as i64, j as i64);
            assert_eq!(plane.graph.degree(), 4);
            for &sym in plane.graph.symbols() {
                let (ti, tj) = plane.coords(plane.graph.step(v, sym).unwrap());
                assert_eq!(mg.graph.step(coset(i, j), sym), Some(coset(ti, tj)), "p={p} ({i},{j}) {sym:?}");
            }
        }
    }
    assert_eq!(mg.double_edges().len(), 2);
}

#[test]
fn three_p_squared_quotient_matches_the_plane() {
    for p in [5, 7, 11, 13] {
        plane_coords_agree(p);
    }
}

#[test]
fn plane_double_edges() {
    for p in [5usize, 7, 11, 13] {
        let plane = three_p_sq_multigraph(p).unwrap();
        let de = plane.graph.double_edges();
        assert_eq!(de.len(), 2, "p={p}");
        let k = p / 3;
        let (a, b) = if p % 3 == 1 {
            // (-j, i-j) = (i+1, j) at j = k, i = 2k
            ((2 * k, k), (2 * k + 1, k))
        } else {
            // (-j, i-j) = (i-1, j) at j = k+1, i = 2k+2
            ((2 * k + 2, k + 1), (2 * k + 1, k + 1))
        };
        let (u, v) = (plane.index(a.0 as i64, a.1 as i64), plane.index(b.0 as i64, b.1 as i64));
        assert!(de.iter().any(|&(x, y, m)| (x, y) == (u.min(v), u.max(v)) && m == 2), "p={p}: {de:?}");
    }
    assert_eq!(three_p_sq_multigraph(9).unwrap_err(), CayleyError::NotPrime(9));
    assert_eq!(three_p_sq_multigraph(3).unwrap_err(), CayleyError::NotPrime(3));
}

#[test]
fn generalized_petersen_recognition() {
    for k in [3usize, 4, 5, 8] {
        let g = GroupTable::direct_product(&GroupTable::cyclic(2 * k), &GroupTable::cyclic(2));
        let cay = CayleyGraph::new(&g, &[Elem::new(2), Elem::new(1)]).unwrap();
        let gp = recognize_generalized_petersen(&cay).unwrap();
        assert_eq!((gp.n, gp.k), (2 * k, 1));
    }
    let g = GroupTable::cyclic(12);
    let four = CayleyGraph::new(&g, &[Elem::new(1), Elem::new(5)]).unwrap();
    assert_eq!(four.degree(), 4);
    assert!(recognize_generalized_petersen(&four).is_none());

    // three involutions in D10 x D6 with u = s x^2 on the first factor
    let d = DihedralPair::new(5, 3);
    let (x, f, x2, f2) = (d.x, d.f, d.x2, d.f2);
    let e = d.g.identity();
    let t = d.pair(f, f2);
    let s = d.pair(d.g.mul(f, x), e);
    let u = d.pair(d.g.mul(f, d.g.pow(x, 2)), d.g.mul(f2, x2));
    let cay = CayleyGraph::new(&d.g, &[s, t, u]).unwrap();
    let gp = recognize_generalized_petersen(&cay).unwrap();
    assert_eq!(gp.n, 30);
    assert!(gp.k >= 1 && gp.k <= 15 && hamcert::group::gcd(gp.k, 30) == 1);
}

fn group_and_gens() -> impl Strategy<Value = (GroupTable, Vec<Elem>)> {
    let cases: Vec<(GroupTable, Vec<Elem>)> = builtin_catalog(36)
        .into_iter()
        .filter(|e| e.order > 1)
        .flat_map(|e| {
            let list = enumerate_generating_sets(&e.table, 3, 40);
            list.records.into_iter().step_by(7).map(move |r| (e.table.clone(), r.generators))
        })
        .collect();
    (0..cases.len()).prop_map(move |i| cases[i].clone())
}

fn word_over(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..k, any::<bool>()), 0..max_len)
        .prop_map(|v| Word(v.into_iter().map(|(g, inv)| Sym { gen: g as u16, inv }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn power_and_drop_last((g, gens) in group_and_gens(), raw in word_over(3, 12), k in 0usize..6) {
        let w = Word(raw.0.into_iter().filter(|s| (s.gen as usize) < gens.len()).collect());
        let cay = CayleyGraph::new(&g, &gens).unwrap();
        prop_assert!(w.power(0).is_empty());
        prop_assert_eq!(w.power(k).len(), w.len() * k);
        let end = cay.word_product(&w);
        prop_assert_eq!(cay.word_product(&w.power(k)), g.pow(end, k as i64));
        if !w.is_empty() {
            prop_assert_eq!(w.drop_last().len(), w.len() - 1);
        }
        prop_assert_eq!(cay.word_product(&w.concat(&w.invert())), g.identity());
    }

    #[test]
    fn verifiers_agree((g, gens) in group_and_gens(), pos in any::<prop::sample::Index>(), mutation in 0u8..4) {
        let cert = solve(&g, &gens).unwrap();
        let cay = CayleyGraph::new(&g, &gens).unwrap();
        prop_assert!(cay.is_hamiltonian_cycle(&cert.word, cert.repeat).is_ok());
        prop_assert!(verify_independent(&g, &gens, &cert.word, cert.repeat));
        let mut word = cert.word.clone();
        let mut repeat = cert.repeat;
        let i = pos.index(word.len().max(1));
        match mutation {
            0 if !word.is_empty() => word.0[i] = word.0[i].inverse(),
            1 if !word.is_empty() => word.0[i] = Sym { gen: ((word.0[i].gen as usize + 1) % gens.len()) as u16, inv: false },
            2 => repeat += 1,
            _ => word = word.rotate_left(i),
        }
        let a = cay.is_hamiltonian_cycle(&word, repeat).is_ok();
        let b = verify_independent(&g, &gens, &word, repeat);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn random_words_get_the_same_verdict((g, gens) in group_and_gens(), raw in word_over(3, 64), repeat in 1usize..4) {
        let w = Word(raw.0.into_iter().filter(|s| (s.gen as usize) < gens.len()).collect());
        let cay = CayleyGraph::new(&g, &gens).unwrap();
        prop_assert_eq!(cay.is_hamiltonian_cycle(&w, repeat).is_ok(), verify_independent(&g, &gens, &w, repeat));
    }
}
