mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_matching::families::{
    construct, extremal_hamilton, extremal_kext_bipartite, extremal_kext_general, extremal_kfactor, extremal_kfc,
    kfc_order_bound, recognize, threshold_f, threshold_rho, Family, FamilyParams,
};
use spectral_matching::iso::isomorphic_small;
use spectral_matching::matchfactor::{
    find_k_factor_flow, hamiltonian_cycle, has_f_factor_ore, is_k_extendable_chen, is_k_extendable_definitional,
    is_k_extendable_plummer, is_k_factor_critical, FactorSpec, Limits,
};
use spectral_matching::{Error, Graph, Side};

use common::*;

fn close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b}");
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn kext_general_examples() {
    let g = extremal_kext_general(10, 1, 2).unwrap();
    let hand = Graph::join(&Graph::complete(2), &Graph::disjoint_union(&Graph::complete(7), &Graph::complete(1)));
    assert_eq!(g, hand);
    assert_eq!((g.order(), g.min_degree()), (10, 2));
    let g = extremal_kext_general(16, 2, 4).unwrap();
    let hand = Graph::join(&Graph::complete(4), &Graph::disjoint_union(&Graph::complete(11), &Graph::empty(1)));
    assert_eq!(g, hand);
    // δ = 2k leaves exactly one vertex outside the big clique
    for k in 1..=3 {
        let g = extremal_kext_general(20, k, 2 * k).unwrap();
        assert_eq!(g.degrees().iter().filter(|&&d| d == 2 * k).count(), 1);
    }
    assert!(matches!(extremal_kext_general(11, 1, 2), Err(Error::Hypothesis(_))));
    assert!(matches!(extremal_kext_general(10, 2, 3), Err(Error::Hypothesis(_))));
}

#[test]
fn kext_bipartite_examples() {
    let g = extremal_kext_bipartite(10, 1, 1).unwrap();
    assert_eq!(g.size(), 13);
    let g = extremal_kext_bipartite(16, 2, 2).unwrap();
    let hand = Graph::bipartite_join(&Graph::complete_bipartite(2, 5), &Graph::complete_bipartite(6, 3)).unwrap();
    assert_eq!(g, hand);
    assert_eq!(g.size(), 10 + 18 + 2 * 3);
    // n/2 − s − k − 1 = 0: Y2 is empty and X2 is isolated
    let g = extremal_kext_bipartite(8, 1, 2).unwrap();
    assert!(!g.is_connected());
    assert_eq!(g.degrees().iter().filter(|&&d| d == 0).count(), 2);
    assert!(extremal_kext_bipartite(8, 1, 3).is_err());
}

#[test]
fn kfactor_examples() {
    let g = extremal_kfactor(8, 2).unwrap();
    let (a, _) = g.side_lists().unwrap();
    assert_eq!(a.iter().map(|&v| g.degree(v)).collect::<Vec<_>>(), vec![1, 4, 4, 4]);
    assert_eq!(extremal_kfactor(10, 2).unwrap().size(), 21);
    for h in 3..=8 {
        let g = extremal_kfactor(2 * h, h - 1).unwrap();
        assert_eq!(g.min_degree(), h - 2);
        assert_eq!(g.size(), h * h - 2);
    }
    assert!(extremal_kfactor(8, 4).is_err());
    assert!(extremal_kfactor(8, 1).is_err());
}

#[test]
fn kfc_examples() {
    let g = extremal_kfc(15, 1, 2).unwrap();
    let hand = Graph::join(&Graph::complete(2), &Graph::disjoint_union(&Graph::complete(11), &Graph::empty(2)));
    assert_eq!(g, hand);
    assert_eq!(g.min_degree(), 2);
    assert!(matches!(extremal_kfc(16, 1, 2), Err(Error::Hypothesis(_))));
    assert!(matches!(extremal_kfc(13, 1, 2), Err(Error::Hypothesis(_))));
    assert_eq!(kfc_order_bound(1, 2), 15);
}

#[test]
fn hamilton_examples() {
    let g = extremal_hamilton(8).unwrap();
    assert_eq!(g, extremal_kfactor(8, 2).unwrap());
    assert_eq!(g.min_degree(), 1);
    assert_eq!(g.size(), 13);
    assert!(extremal_hamilton(6).is_err());
}

#[test]
fn threshold_f_examples() {
    assert_eq!(threshold_f(1, 2), 10);
    assert_eq!(threshold_f(1, 3), 18);
    assert_eq!(threshold_f(2, 4), 16);
    for k in 1..=4 {
        for d in 2 * k..=12 {
            let want: usize = (8 * d + 4usize).saturating_sub(10 * k).max(d * (d - 2 * k) * (d - 2 * k) + d - 1);
            assert_eq!(threshold_f(k, d), want);
        }
    }
}

#[test]
fn threshold_rho_examples() {
    let t = threshold_rho(Family::KfactorBipartite, &FamilyParams::new(8, 2)).unwrap();
    close(t.rho_star, ((13.0 + 133f64.sqrt()) / 2.0).sqrt(), 1e-10);
    close(t.rho_star, oracle_rho(&extremal_kfactor(8, 2).unwrap()), 1e-8);
    let t = threshold_rho(Family::KextBipartite, &FamilyParams::new(10, 1).with_s(1)).unwrap();
    close(t.rho_star, ((13.0 + 73f64.sqrt()) / 2.0).sqrt(), 1e-10);

    // δ = 2k at an order beyond the dense cross-check
    let (n, k, d) = (3000, 1, 2);
    let t = threshold_rho(Family::KextGeneral, &FamilyParams::new(n, k).with_delta(d)).unwrap();
    assert!(t.dense_rho.is_none());
    assert!(t.rho_star > (n - d + 2 * k - 2) as f64);
    let hand = vec![
        vec![d - 1, n - 2 * d + 2 * k - 1, d - 2 * k + 1],
        vec![d, n - 2 * d + 2 * k - 2, 0],
        vec![d, 0, 0],
    ];
    close(t.rho_star, quotient_rho(&hand), 1e-8);
}

fn valid_params(max_n: usize) -> Vec<(Family, FamilyParams)> {
    let mut out = Vec::new();
    for n in (4..=max_n).step_by(2) {
        for k in 1..n / 2 {
            for d in 2 * k..n {
                if n + 2 * k >= 2 * d + 2 {
                    out.push((Family::KextGeneral, FamilyParams::new(n, k).with_delta(d)));
                }
            }
            for s in 1..n / 2 {
                if n / 2 >= s + k + 1 {
                    out.push((Family::KextBipartite, FamilyParams::new(n, k).with_s(s)));
                }
            }
            if k >= 2 && k < n / 2 {
                out.push((Family::KfactorBipartite, FamilyParams::new(n, k)));
            }
        }
        if n >= 8 {
            out.push((Family::HamiltonBipartite, FamilyParams::new(n, 2)));
        }
    }
    for n in 3..=max_n {
        for k in 1..n {
            for d in k..n {
                if n % 2 == k % 2 && n >= kfc_order_bound(k, d) && n + k >= 2 * d + 1 {
                    out.push((Family::KfcGeneral, FamilyParams::new(n, k).with_delta(d)));
                }
            }
        }
    }
    out
}

#[test]
fn every_member_fails_its_property() {
    let params = valid_params(18);
    assert!(params.len() > 100);
    for (family, p) in &params {
        let g = construct(*family, p).unwrap();
        let (n, k) = (g.order(), p.k);
        // brute force and definitional checks enumerate k-matchings, so they
        // are limited to small n and k
        let brute = n <= 14 && k <= 3;
        match family {
            Family::KextGeneral => {
                assert!(!brute || !brute_k_extendable(&g, k), "{family} {p:?}");
                assert!(!is_k_extendable_chen(&g, k, &lim()).unwrap().holds);
                if k <= 3 {
                    assert!(!is_k_extendable_definitional(&g, k).unwrap().holds);
                }
            }
            Family::KextBipartite => {
                assert!(!brute || !brute_k_extendable(&g, k), "{family} {p:?}");
                if g.is_connected() {
                    assert!(!is_k_extendable_plummer(&g, k, &lim()).unwrap().holds);
                    if k <= 3 {
                        assert!(!is_k_extendable_definitional(&g, k).unwrap().holds);
                    }
                }
            }
            Family::KfactorBipartite => {
                assert!(!brute || !brute_has_k_factor(&g, k), "{family} {p:?}");
                assert!(!has_f_factor_ore(&g, &FactorSpec::constant(n, k), &lim()).unwrap().holds);
                assert!(!find_k_factor_flow(&g, k).unwrap().holds);
            }
            Family::KfcGeneral => {
                assert!(!brute || !brute_k_factor_critical(&g, k), "{family} {p:?}");
                assert!(!is_k_factor_critical(&g, k, &lim()).unwrap().holds);
            }
            Family::HamiltonBipartite => {
                assert!(!brute || !brute_hamiltonian(&g), "{family} {p:?}");
                assert!(!hamiltonian_cycle(&g, &lim()).unwrap().holds);
            }
        }
    }
}

#[test]
fn threshold_routes_agree() {
    for (family, p) in valid_params(40).into_iter().step_by(7) {
        let t = threshold_rho(family, &p).unwrap();
        close(t.rho_star, t.dense_rho.unwrap(), 1e-8);
        close(t.rho_star, oracle_rho(&construct(family, &p).unwrap()), 1e-8);
    }
    for (family, p) in [
        (Family::KextGeneral, FamilyParams::new(200, 3).with_delta(7)),
        (Family::KextBipartite, FamilyParams::new(200, 4).with_s(5)),
        (Family::KfactorBipartite, FamilyParams::new(200, 9)),
        (Family::KfcGeneral, FamilyParams::new(199, 1).with_delta(5)),
        (Family::HamiltonBipartite, FamilyParams::new(200, 2)),
    ] {
        let t = threshold_rho(family, &p).unwrap();
        close(t.rho_star, oracle_rho(&construct(family, &p).unwrap()), 1e-8);
    }
}

#[test]
fn hamilton_threshold_exceeds_complete_bipartite_bound() {
    for n in (8..=40).step_by(2) {
        let h = (n / 2) as f64;
        let rho = oracle_rho(&extremal_hamilton(n).unwrap());
        assert!(rho > (h * (h - 1.0)).sqrt(), "n = {n}");
    }
}

#[test]
fn recognition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (family, p) in valid_params(12) {
        let g = construct(family, &p).unwrap();
        assert!(recognize(family, &p, &g), "{family} {p:?}");
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let relabeled = g.relabel(&perm).unwrap().without_bipartition();
        assert!(recognize(family, &p, &relabeled), "{family} {p:?} relabeled");

        let n = g.order();
        let (u, v) = loop {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                break (u, v);
            }
        };
        let toggled = g.without_bipartition().with_toggled(u, v).unwrap();
        assert_eq!(recognize(family, &p, &toggled), isomorphic_small(&toggled, &g).unwrap(), "{family} {p:?}");
        if !g.has_edge(u, v) {
            assert!(!recognize(family, &p, &toggled));
        }
    }
    let g = extremal_kfactor(10, 2).unwrap();
    assert!(!recognize(Family::KfactorBipartite, &FamilyParams::new(10, 3), &g));
    assert!(!recognize(Family::KfactorBipartite, &FamilyParams::new(10, 9), &g));
}

#[test]
fn canonical_labels() {
    let g = extremal_kext_bipartite(10, 1, 1).unwrap();
    let sides = g.sides().unwrap();
    // X1 = {0}, Y1 = {1,2,3}, X2 = {4..7}, Y2 = {8,9}
    let want = [Side::A, Side::B, Side::B, Side::B, Side::A, Side::A, Side::A, Side::A, Side::B, Side::B];
    assert_eq!(sides, &want);
}
