mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use spectral_matching::families::{extremal_kext_bipartite, extremal_kext_general, extremal_kfactor};
use spectral_matching::spectra::{
    charpoly_b_s, degree_sum_identity, fms_bound, full_spectrum, quotient, refine_equitable, spectral_radius,
    spectral_radius_default, sqrt_m_bound, Partition, SymMatrix,
};
use spectral_matching::{Error, Graph};

use common::{charpoly, oracle_rho, random_graph};

fn close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b}");
}

#[test]
fn spectral_radius_examples() {
    close(spectral_radius_default(&Graph::complete_bipartite(4, 4)).unwrap().rho, 4.0, 1e-10);
    close(spectral_radius_default(&Graph::complete(10)).unwrap().rho, 9.0, 1e-10);
    let e = extremal_kfactor(8, 2).unwrap();
    let r = spectral_radius_default(&e).unwrap();
    close(r.rho, ((13.0 + 133f64.sqrt()) / 2.0).sqrt(), 1e-9);
    close(r.rho, oracle_rho(&e), 1e-9);
    assert!(r.residual <= r.tol);
}

#[test]
fn spectral_radius_of_disconnected_graph() {
    let g = Graph::disjoint_union(&Graph::complete(3), &Graph::complete_bipartite(3, 3));
    close(spectral_radius_default(&g).unwrap().rho, 3.0, 1e-10);
    close(spectral_radius_default(&Graph::empty(4)).unwrap().rho, 0.0, 1e-12);
}

#[test]
fn full_spectrum_examples() {
    let k2 = full_spectrum(&SymMatrix::adjacency(&Graph::complete(2)), 1e-12).unwrap();
    close(k2[0], 1.0, 1e-12);
    close(k2[1], -1.0, 1e-12);
    assert!(full_spectrum(&SymMatrix::zeros(5), 1e-12).unwrap().iter().all(|&l| l == 0.0));
    // C_n eigenvalues are 2cos(2πj/n).
    let c4 = full_spectrum(&SymMatrix::adjacency(&Graph::cycle(4)), 1e-12).unwrap();
    for (got, want) in c4.iter().zip([2.0, 0.0, 0.0, -2.0]) {
        close(*got, want, 1e-10);
    }
    let c9 = full_spectrum(&SymMatrix::adjacency(&Graph::cycle(9)), 1e-12).unwrap();
    let mut want: Vec<f64> = (0..9).map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 9.0).cos()).collect();
    want.sort_by(|a, b| b.partial_cmp(a).unwrap());
    for (got, want) in c9.iter().zip(want) {
        close(*got, want, 1e-10);
    }
}

#[test]
fn asymmetric_matrix_is_rejected() {
    assert!(matches!(SymMatrix::new(2, vec![0.0, 1.0, 0.0, 0.0]), Err(Error::NotSymmetric(..))));
}

#[test]
fn refinement_examples() {
    let g = extremal_kext_general(10, 1, 2).unwrap();
    let mut sizes = refine_equitable(&g, &Partition::trivial(10)).unwrap().sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 7]);
    assert_eq!(refine_equitable(&Graph::cycle(7), &Partition::trivial(7)).unwrap().len(), 1);
    let mut sizes = refine_equitable(&extremal_kfactor(8, 2).unwrap(), &Partition::trivial(8))
        .unwrap()
        .sizes();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 3, 3]);
}

#[test]
fn quotient_examples() {
    // X1, X2, Y1, Y2 of K_{1,3} ∇₁ K_{4,2}
    let g = extremal_kext_bipartite(10, 1, 1).unwrap();
    let p = Partition::new(10, vec![vec![0], vec![4, 5, 6, 7], vec![1, 2, 3], vec![8, 9]]).unwrap();
    let q = quotient(&g, &p).unwrap();
    assert_eq!(q.entries(), &[vec![0, 0, 3, 2], vec![0, 0, 0, 2], vec![1, 0, 0, 0], vec![1, 4, 0, 0]]);

    let k6 = quotient(&Graph::complete(6), &Partition::trivial(6)).unwrap();
    assert_eq!(k6.entries(), &[vec![5]]);

    let (n, k, d) = (18, 1, 3);
    let g = extremal_kext_general(n, k, d).unwrap();
    let p = Partition::new(n, vec![(0..3).collect(), (3..16).collect(), (16..18).collect()]).unwrap();
    let q = quotient(&g, &p).unwrap();
    assert_eq!(
        q.entries(),
        &[
            vec![d - 1, n - 2 * d + 2 * k - 1, d - 2 * k + 1],
            vec![d, n - 2 * d + 2 * k - 2, 0],
            vec![d, 0, 0]
        ]
    );
    close(q.lambda1(1e-12).unwrap(), oracle_rho(&g), 1e-8);
}

#[test]
fn non_equitable_partition_is_rejected() {
    let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    assert!(matches!(quotient(&Graph::path(4), &p), Err(Error::NotEquitable { .. })));
}

#[test]
fn quartic_examples() {
    let q = charpoly_b_s(10, 1, 1).unwrap();
    assert_eq!((q.c2, q.c0), (Ratio::from_integer(-13), Ratio::from_integer(24)));
    let oracle = charpoly(&[vec![0, 0, 3, 2], vec![0, 0, 0, 2], vec![1, 0, 0, 0], vec![1, 4, 0, 0]]);
    assert_eq!(oracle, vec![1, 0, -13, 0, 24]);
    close(q.largest_root(), ((13.0 + 73f64.sqrt()) / 2.0).sqrt(), 1e-12);
    close(q.largest_root(), oracle_rho(&extremal_kext_bipartite(10, 1, 1).unwrap()), 1e-8);
    assert_eq!(charpoly_b_s(12, 2, 0).unwrap().c0, Ratio::from_integer(0));
    assert_eq!(q.eval(Ratio::from_integer(1)), Ratio::from_integer(12));
    assert!(charpoly_b_s(11, 1, 1).is_err());
}

#[test]
fn fms_examples() {
    close(fms_bound(&Graph::cycle(7)).unwrap().bound, 2.0, 1e-12);
    close(fms_bound(&Graph::complete_bipartite(3, 5)).unwrap().bound, 15f64.sqrt(), 1e-12);
    // P3 is semiregular bipartite, so the bound is attained.
    let p3 = Graph::path(3);
    close(fms_bound(&p3).unwrap().bound, 2f64.sqrt(), 1e-12);
    close(spectral_radius_default(&p3).unwrap().rho, 2f64.sqrt(), 1e-10);
    let p4 = Graph::path(4);
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    close(spectral_radius_default(&p4).unwrap().rho, golden, 1e-10);
    assert!(fms_bound(&p4).unwrap().bound > golden + 0.1);
    assert_eq!(fms_bound(&Graph::empty(3)), Err(Error::Disconnected));
}

#[test]
fn degree_sum_examples() {
    let star = degree_sum_identity(&Graph::complete_bipartite(1, 3), 0).unwrap();
    assert_eq!((star.lhs, star.rhs), (3, 3));
    let k6 = degree_sum_identity(&Graph::complete(6), 2).unwrap();
    assert_eq!((k6.lhs, k6.rhs), (25, 25));
    let e = extremal_kfactor(8, 2).unwrap();
    let u = (0..8).find(|&v| e.degree(v) == 1).unwrap();
    let s = degree_sum_identity(&e, u).unwrap();
    assert_eq!((s.lhs, s.rhs), (4, 4));
}

#[test]
fn sqrt_m_examples() {
    let k44 = Graph::complete_bipartite(4, 4);
    close(sqrt_m_bound(&k44).unwrap(), 4.0, 1e-12);
    let c6 = Graph::cycle(6);
    close(sqrt_m_bound(&c6).unwrap(), 6f64.sqrt(), 1e-12);
    close(spectral_radius_default(&c6).unwrap().rho, 2.0, 1e-10);
    close(sqrt_m_bound(&Graph::complete_bipartite(1, 1)).unwrap(), 1.0, 1e-12);
    assert_eq!(sqrt_m_bound(&Graph::complete_bipartite(2, 0)), Err(Error::NoEdges));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn radius_matches_oracle_and_bounds(n in 1usize..24, p in 0.05f64..0.95, seed in any::<u64>()) {
        use rand::SeedableRng;
        let g = random_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, p);
        let r = spectral_radius(&g, 1e-11).unwrap();
        prop_assert!((r.rho - oracle_rho(&g)).abs() <= 1e-8);
        let dense = full_spectrum(&SymMatrix::adjacency(&g), 1e-12).unwrap();
        prop_assert!((r.rho - dense[0]).abs() <= 1e-8);
        if g.is_connected() && n >= 2 {
            prop_assert!(r.rho <= fms_bound(&g).unwrap().bound + 1e-9);
        }
    }

    #[test]
    fn identity_holds_everywhere(n in 1usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
        use rand::SeedableRng;
        let g = random_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, p);
        for u in 0..n {
            let s = degree_sum_identity(&g, u).unwrap();
            prop_assert_eq!(s.lhs, s.rhs);
        }
    }

    #[test]
    fn refinement_is_equitable(n in 1usize..20, p in 0.1f64..0.9, seed in any::<u64>()) {
        use rand::SeedableRng;
        let g = random_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, p);
        let part = refine_equitable(&g, &Partition::trivial(n)).unwrap();
        let q = quotient(&g, &part).unwrap();
        let dense = full_spectrum(&SymMatrix::adjacency(&g), 1e-12).unwrap();
        for lam in q.spectrum(1e-12).unwrap() {
            prop_assert!(dense.iter().any(|d| (d - lam).abs() <= 1e-8));
        }
    }
}
