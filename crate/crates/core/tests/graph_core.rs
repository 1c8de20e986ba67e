mod common;

use proptest::prelude::*;
use spectral_matching::families::extremal_kfactor;
use spectral_matching::graph6;
use spectral_matching::iso::isomorphic_small;
use spectral_matching::{Error, Graph, Side, VertexSet};

fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn bipartite_strategy(max_side: usize) -> impl Strategy<Value = Graph> {
    (0..=max_side, 0..=max_side).prop_flat_map(|(a, b)| {
        proptest::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
            let mut g = Graph::complete_bipartite(a, b);
            for u in 0..a {
                for v in 0..b {
                    if !bits[u * b + v] {
                        g = g.with_toggled(u, a + v).unwrap();
                    }
                }
            }
            g
        })
    })
}

#[test]
fn complete_graphs() {
    assert_eq!(Graph::complete(1).size(), 0);
    assert_eq!(Graph::complete(4).size(), 6);
    assert_eq!(Graph::complete(0).order(), 0);
}

#[test]
fn complete_bipartite_graphs() {
    let c4 = Graph::cycle(4);
    assert!(isomorphic_small(&Graph::complete_bipartite(2, 2), &c4).unwrap());
    assert_eq!(Graph::complete_bipartite(4, 4).size(), 16);
    let star = Graph::complete_bipartite(1, 3);
    assert_eq!(star.degrees(), vec![3, 1, 1, 1]);
}

#[test]
fn join_examples() {
    let g = Graph::join(&Graph::complete(2), &Graph::disjoint_union(&Graph::complete(7), &Graph::complete(1)));
    assert_eq!(g.order(), 10);
    assert_eq!(g.min_degree(), 2);
    assert_eq!(Graph::join(&Graph::complete(1), &Graph::complete(1)), Graph::complete(2));
    let c5 = Graph::cycle(5);
    assert_eq!(Graph::join(&Graph::empty(0), &c5), c5);
}

#[test]
fn disjoint_union_examples() {
    let g = Graph::disjoint_union(&Graph::complete(7), &Graph::complete(1));
    assert_eq!(g.size(), 21);
    let c5 = Graph::cycle(5);
    assert_eq!(Graph::disjoint_union(&c5, &Graph::empty(0)), c5);
    assert_eq!(Graph::empty(3).size(), 0);
}

#[test]
fn bipartite_join_examples() {
    let g = Graph::bipartite_join(&Graph::complete_bipartite(1, 3), &Graph::complete_bipartite(4, 2)).unwrap();
    assert_eq!((g.order(), g.size()), (10, 13));
    let c6 = Graph::cycle(6);
    assert_eq!(Graph::bipartite_join(&c6, &Graph::empty_bipartite(vec![])).unwrap(), c6);
    // (s, k, n) = (1, 1, 10): X1 has degree (s+k+1) + (n/2-s-k-1) = 5.
    assert_eq!(g.degree(0), 5);
    let err = Graph::bipartite_join(&Graph::complete(2), &Graph::complete_bipartite(1, 1));
    assert_eq!(err.unwrap_err(), Error::MissingBipartition);
}

#[test]
fn remove_star_examples() {
    let k44 = Graph::complete_bipartite(4, 4);
    assert_eq!(k44.remove_star(0, 3).unwrap().degree(0), 1);
    assert_eq!(k44.remove_star(0, 0).unwrap(), k44);
    assert_eq!(Graph::complete_bipartite(5, 5).remove_star(0, 4).unwrap().size(), 21);
    assert!(matches!(k44.remove_star(0, 5), Err(Error::InsufficientDegree { .. })));
}

#[test]
fn odd_components() {
    let g = Graph::join(&Graph::complete(2), &Graph::disjoint_union(&Graph::complete(7), &Graph::complete(1)));
    assert_eq!(g.odd_component_count(&set(10, &[0, 1])), 2);
    assert_eq!(g.odd_component_count(&VertexSet::full(10)), 0);
    assert_eq!(Graph::complete(4).odd_component_count(&VertexSet::new(4)), 0);
}

#[test]
fn neighborhoods() {
    let star = Graph::complete_bipartite(1, 3);
    assert_eq!(star.neighborhood(&set(4, &[0])).to_vec(), vec![1, 2, 3]);
    assert!(star.neighborhood(&VertexSet::new(4)).is_empty());
    let g = Graph::bipartite_join(&Graph::complete_bipartite(1, 3), &Graph::complete_bipartite(4, 2)).unwrap();
    assert_eq!(g.neighborhood(&set(10, &[4, 5, 6, 7])).to_vec(), vec![8, 9]);
}

#[test]
fn edge_count_examples() {
    let k5 = Graph::complete(5);
    assert_eq!(k5.edges_within(&set(5, &[0, 1, 2])), 3);
    let k34 = Graph::complete_bipartite(3, 4);
    assert_eq!(k34.edges_between(&set(7, &[0, 1, 2]), &set(7, &[3, 4, 5, 6])).unwrap(), 12);
    assert_eq!(k34.edges_between(&set(7, &[0, 1]), &set(7, &[1])), Err(Error::OverlappingSets));

    // K_{4,4} minus a 3-star at vertex 0: N(0) = {7}, and vertex 7 has
    // three neighbours besides 0.
    let g = Graph::complete_bipartite(4, 4).remove_star(0, 3).unwrap();
    let n0 = g.neighbor_set(0);
    let rest = n0.union(&set(8, &[0])).complement();
    assert_eq!(g.edge_counts(&n0, &rest).unwrap(), (0, 3));
}

#[test]
fn graph6_examples() {
    assert_eq!(graph6::encode(&Graph::complete(3)).unwrap(), "Bw");
    assert_eq!(graph6::encode(&Graph::empty(1)).unwrap(), "@");
    assert_eq!(graph6::decode("Bw").unwrap(), Graph::complete(3));
    assert!(graph6::decode("B").is_err());
    assert!(graph6::decode("B\u{7f}").is_err());
    assert!(graph6::decode("").is_err());
}

#[test]
fn isomorphism_examples() {
    let c8 = Graph::cycle(8);
    assert!(isomorphic_small(&c8, &c8).unwrap());
    assert!(!isomorphic_small(&Graph::complete_bipartite(3, 3), &Graph::cycle(6)).unwrap());
    let e = extremal_kfactor(8, 2).unwrap();
    let perm = [5, 2, 7, 0, 3, 6, 1, 4];
    assert!(isomorphic_small(&e, &e.relabel(&perm).unwrap()).unwrap());
}

#[test]
fn bipartition_validation() {
    let p3 = Graph::path(3);
    assert!(p3.with_bipartition(vec![Side::A, Side::A, Side::B]).is_err());
    assert!(Graph::cycle(5).two_coloring().is_none());
    assert!(Graph::complete_bipartite(2, 3).with_toggled(0, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let line = graph6::encode(&g).unwrap();
        prop_assert!(line.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&line).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric(g in graph_strategy(20)) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn join_edge_count(g in graph_strategy(12), h in graph_strategy(12)) {
        let j = Graph::join(&g, &h);
        prop_assert_eq!(j.order(), g.order() + h.order());
        prop_assert_eq!(j.size(), g.size() + h.size() + g.order() * h.order());
        let u = Graph::disjoint_union(&g, &h);
        prop_assert_eq!(u.size(), g.size() + h.size());
    }

    #[test]
    fn bipartite_join_edge_count(g1 in bipartite_strategy(6), g2 in bipartite_strategy(6)) {
        let x1 = g1.sides().unwrap().iter().filter(|s| **s == Side::A).count();
        let y2 = g2.sides().unwrap().iter().filter(|s| **s == Side::B).count();
        let j = Graph::bipartite_join(&g1, &g2).unwrap();
        prop_assert_eq!(j.size(), g1.size() + g2.size() + x1 * y2);
        prop_assert!(j.two_coloring().is_some());
    }

    #[test]
    fn relabel_preserves_isomorphism(g in graph_strategy(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert!(isomorphic_small(&g, &h).unwrap());
        prop_assert_eq!(h.size(), g.size());
    }

    #[test]
    fn connectivity_agrees_with_bfs(g in graph_strategy(16)) {
        prop_assert_eq!(g.is_connected(), common::brute_connected(&g));
    }
}
