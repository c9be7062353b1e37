use proptest::prelude::*;

use super::*;
use crate::limits::Limits;

fn betti(g: &FlagGraph, d: usize, coeffs: &str) -> BettiProfile {
    let c = flag_complex(g, d + 1);
    reduced_betti(&c, d, backends().get(coeffs).unwrap(), &Limits::default()).unwrap()
}

fn octahedron() -> FlagGraph {
    let mut g = FlagGraph::complete(6);
    let mut h = FlagGraph::new(6);
    for (i, j) in g.edges().collect::<Vec<_>>() {
        if !(i % 2 == 0 && j == i + 1) {
            h.add_edge(i, j).unwrap();
        }
    }
    g = h;
    g
}

#[test]
fn flag_complex_examples() {
    let c = flag_complex(&FlagGraph::cycle(4), 2);
    assert_eq!(c.counts(), vec![4, 4]);
    let c = flag_complex(&FlagGraph::complete(4), 3);
    assert_eq!(c.counts(), vec![4, 6, 4, 1]);
    let c = flag_complex(&FlagGraph::new(3), 2);
    assert_eq!(c.counts(), vec![3]);
    assert!(c.is_face_closed());
}

#[test]
fn homology_goldens() {
    for coeffs in ["z", "gf2", "q"] {
        let b = betti(&FlagGraph::cycle(4), 1, coeffs);
        assert_eq!((b.minus_one, b.betti.clone()), (0, vec![0, 1]));
        let b = betti(&FlagGraph::complete(4), 2, coeffs);
        assert_eq!(b.betti, vec![0, 0, 0]);
        let b = betti(&octahedron(), 2, coeffs);
        assert_eq!(b.betti, vec![0, 0, 1]);
        assert!(b.torsion.iter().all(Vec::is_empty));
    }
    let empty = reduced_betti(
        &SimplicialComplex::default(),
        1,
        &Integers,
        &Limits::default(),
    )
    .unwrap();
    assert_eq!((empty.minus_one, empty.betti), (1, vec![0, 0]));
    let two = betti(&FlagGraph::new(2), 0, "z");
    assert_eq!(two.betti, vec![1]);
}

#[test]
fn projective_plane_has_two_torsion() {
    let facets = [
        [1, 2, 4],
        [1, 2, 6],
        [1, 3, 5],
        [1, 3, 6],
        [1, 4, 5],
        [2, 3, 4],
        [2, 3, 5],
        [2, 5, 6],
        [3, 4, 6],
        [4, 5, 6],
    ];
    let c =
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().map(|v| v - 1).collect()));
    assert_eq!(c.counts(), vec![6, 15, 10]);
    let limits = Limits::default();
    let z = reduced_betti(&c, 2, &Integers, &limits).unwrap();
    assert_eq!(z.betti, vec![0, 0, 0]);
    assert_eq!(z.torsion, vec![vec![], vec![2], vec![]]);
    assert_eq!(
        reduced_betti(&c, 2, &Gf2, &limits).unwrap().betti,
        vec![0, 1, 1]
    );
    assert_eq!(
        reduced_betti(&c, 2, &Rationals, &limits).unwrap().betti,
        vec![0, 0, 0]
    );
}

#[test]
fn size_cap_is_enforced() {
    let c = flag_complex(&FlagGraph::complete(8), 3);
    let tight = Limits {
        simplices: 10,
        ..Limits::default()
    };
    assert!(matches!(
        reduced_betti(&c, 2, &Integers, &tight),
        Err(crate::Error::SizeCapExceeded { .. })
    ));
}

#[test]
fn ground_examples() {
    assert!(is_k_ground(&FlagGraph::complete(5), &[1, 3], 0).unwrap());
    assert!(is_k_ground(&FlagGraph::cycle(4), &[0, 1], 1).unwrap());
    assert!(!is_k_ground(&FlagGraph::new(2), &[0], 0).unwrap());
    assert_eq!(
        is_k_ground(&FlagGraph::cycle(4), &[0, 2], 1),
        Err(crate::Error::NotAClique)
    );
}

#[test]
fn grounded_check_examples() {
    let limits = Limits::default();
    let finders = ground_finders();
    let r = grounded_connectivity_check(
        &FlagGraph::complete(5),
        2,
        1,
        finders.get("greedy").unwrap(),
        &limits,
    )
    .unwrap();
    assert!(r.hypothesis_holds && r.conclusion_holds);
    let r = grounded_connectivity_check(
        &FlagGraph::cycle(4),
        2,
        1,
        finders.get("exhaustive").unwrap(),
        &limits,
    )
    .unwrap();
    assert!(!r.hypothesis_holds);
    assert!(r.consistent());
    let r = grounded_connectivity_check(
        &FlagGraph::cycle(4),
        1,
        1,
        finders.get("exhaustive").unwrap(),
        &limits,
    )
    .unwrap();
    assert!(r.hypothesis_holds && r.conclusion_holds);
    let bare = random_grounded_complex(3, 0, 2, 1);
    assert_eq!(bare, FlagGraph::complete(3));
    let g = random_grounded_complex(7, 10, 2, 1);
    assert_eq!(g.len(), 13);
    assert!(is_k_ground(&g, &[0, 1, 2], 1).unwrap());
}

#[test]
fn graph_json_and_dot() {
    let g = FlagGraph::cycle(3);
    let json = serde_json::to_string(&g.to_json()).unwrap();
    assert_eq!(json, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
    assert_eq!(FlagGraph::parse_json(&json).unwrap(), g);
    assert!(g.to_dot().contains("0 -- 1;"));
    assert_eq!(
        FlagGraph::from_edges(2, &[[1, 1]]),
        Err(crate::Error::SelfLoop(1))
    );
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = FlagGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = FlagGraph::new(n);
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

/// Dense integer product, as an independent check on the boundary matrices.
fn product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_squares_to_zero(g in arb_graph(8)) {
        let c = flag_complex(&g, 4);
        for d in 1..=4 {
            let lower = c.boundary(d - 1).to_dense();
            let upper = c.boundary(d).to_dense();
            if upper.is_empty() || upper[0].is_empty() { continue; }
            let p = product(&lower, &upper);
            prop_assert!(p.iter().flatten().all(|&x| x == 0));
        }
    }

    #[test]
    fn euler_characteristic_matches_betti(g in arb_graph(9)) {
        let c = flag_complex(&g, 9);
        let top = c.dim().unwrap_or(0);
        for coeffs in ["gf2", "q", "z"] {
            let b = reduced_betti(&c, top, backends().get(coeffs).unwrap(), &Limits::default()).unwrap();
            let alt: i64 = b.betti.iter().enumerate()
                .map(|(d, &x)| if d % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            prop_assert_eq!(alt - b.minus_one as i64 + 1, c.euler_characteristic());
        }
    }

    #[test]
    fn backends_agree_without_torsion(g in arb_graph(9)) {
        let z = betti(&g, 3, "z");
        let q = betti(&g, 3, "q");
        prop_assert_eq!(&z.betti, &q.betti);
        if z.torsion.iter().all(Vec::is_empty) {
            prop_assert_eq!(&betti(&g, 3, "gf2").betti, &z.betti);
        }
    }

    #[test]
    fn adding_an_edge_keeps_cliques(g in arb_graph(8), i in 0usize..8, j in 0usize..8) {
        let (i, j) = (i % g.len(), j % g.len());
        prop_assume!(i != j);
        let mut h = g.clone();
        h.add_edge(i, j).unwrap();
        let before = flag_complex(&g, 7);
        let after = flag_complex(&h, 7);
        for d in 0..=before.dim().unwrap_or(0) {
            for s in before.simplices(d) {
                prop_assert!(after.simplices(d).binary_search(s).is_ok());
            }
        }
    }

    #[test]
    fn component_count_matches_b0(g in arb_graph(10)) {
        prop_assert_eq!(betti(&g, 0, "z").betti[0] + 1, g.components());
    }

    #[test]
    fn random_grounded_graphs_are_grounded(seed in any::<u64>(), extra in 0usize..12, m in 1usize..=3, k in 1usize..=2) {
        let g = random_grounded_complex(seed, extra, m, k);
        let ground: Vec<usize> = (0..=m * k).collect();
        prop_assert!(is_k_ground(&g, &ground, k).unwrap());
        prop_assert_eq!(g, random_grounded_complex(seed, extra, m, k));
    }
}
