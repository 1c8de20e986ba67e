//! Brute-force oracles written against edge lists only. None of these call
//! the library's checkers or eigensolvers.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use spectral_matching::Graph;

pub fn masks(g: &Graph) -> Vec<u64> {
    let mut m = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

fn pm_rec(adj: &[u64], rest: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if rest == 0 {
        return true;
    }
    if let Some(&r) = memo.get(&rest) {
        return r;
    }
    let v = rest.trailing_zeros() as usize;
    let mut cand = adj[v] & rest & !(1 << v);
    let mut found = false;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if pm_rec(adj, rest & !(1 << v) & !(1 << u), memo) {
            found = true;
            break;
        }
    }
    memo.insert(rest, found);
    found
}

/// Whether the subgraph induced on `rest` has a perfect matching.
pub fn has_pm_on(adj: &[u64], rest: u64) -> bool {
    rest.count_ones() % 2 == 0 && pm_rec(adj, rest, &mut HashMap::new())
}

fn all_vertices(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Every matching of size `k`, as vertex masks.
fn k_matchings(adj: &[u64], k: usize) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = (0..adj.len())
        .flat_map(|u| (u + 1..adj.len()).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    fn rec(edges: &[(usize, usize)], start: usize, left: usize, used: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(used);
            return;
        }
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                rec(edges, i + 1, left - 1, used | 1 << u | 1 << v, out);
            }
        }
    }
    rec(&edges, 0, k, 0, &mut out);
    out
}

/// Every matching of size `k` lies in a perfect matching, and one exists.
pub fn brute_k_extendable(g: &Graph, k: usize) -> bool {
    let adj = masks(g);
    let full = all_vertices(g.order());
    let ms = k_matchings(&adj, k);
    let mut memo = HashMap::new();
    !ms.is_empty() && g.order() % 2 == 0 && ms.iter().all(|&m| pm_rec(&adj, full & !m, &mut memo))
}

/// `G − S` has a perfect matching for every `k`-set `S`.
pub fn brute_k_factor_critical(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k > n {
        return false;
    }
    let adj = masks(g);
    let full = all_vertices(n);
    let mut memo = HashMap::new();
    let mut ok = true;
    for_each_subset(n, k, |s| ok &= pm_rec(&adj, full & !s, &mut memo));
    ok
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    fn rec(n: usize, start: usize, left: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..n {
            rec(n, v + 1, left - 1, acc | 1 << v, f);
        }
    }
    rec(n, 0, k, 0, &mut f);
}

/// Whether some spanning subgraph is `k`-regular, by backtracking over the
/// edge list.
pub fn brute_has_k_factor(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let edges = g.edges();
    let mut deg = vec![0usize; n];
    // remaining[v]: edges at v not yet decided
    let mut remaining = vec![0usize; n];
    for &(u, v) in &edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    fn rec(i: usize, edges: &[(usize, usize)], k: usize, deg: &mut [usize], remaining: &mut [usize]) -> bool {
        if i == edges.len() {
            return deg.iter().all(|&d| d == k);
        }
        let (u, v) = edges[i];
        remaining[u] -= 1;
        remaining[v] -= 1;
        let mut ok = false;
        if deg[u] < k && deg[v] < k {
            deg[u] += 1;
            deg[v] += 1;
            ok = rec(i + 1, edges, k, deg, remaining);
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !ok && deg[u] + remaining[u] >= k && deg[v] + remaining[v] >= k {
            ok = rec(i + 1, edges, k, deg, remaining);
        }
        remaining[u] += 1;
        remaining[v] += 1;
        ok
    }
    if deg.iter().zip(&remaining).any(|(_, &r)| r < k) {
        return false;
    }
    rec(0, &edges, k, &mut deg, &mut remaining)
}

/// Depth-first Hamilton cycle search from vertex 0.
pub fn brute_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let adj = masks(g);
    fn rec(adj: &[u64], v: usize, seen: u64, n: usize) -> bool {
        if seen.count_ones() as usize == n {
            return adj[v] & 1 == 1;
        }
        let mut cand = adj[v] & !seen;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if rec(adj, u, seen | 1 << u, n) {
                return true;
            }
        }
        false
    }
    rec(&adj, 0, 1, n)
}

pub fn brute_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let adj = masks(g);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

/// Dense row-major adjacency.
pub fn dense(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut a = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    a
}

/// Largest eigenvalue of a nonnegative symmetric matrix by power iteration
/// on `A + I`, stopped on the residual of the Rayleigh quotient.
pub fn power_rho(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    let matvec = |x: &[f64]| -> Vec<f64> {
        (0..n).map(|i| a[i].iter().zip(x).map(|(p, q)| p * q).sum::<f64>()).collect()
    };
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ray = 0.0;
    for _ in 0..500_000 {
        let ax = matvec(&x);
        ray = ax.iter().zip(&x).map(|(p, q)| p * q).sum::<f64>();
        let res = ax.iter().zip(&x).map(|(p, q)| (p - ray * q).abs()).fold(0.0, f64::max);
        if res < 1e-12 * ray.max(1.0) {
            return ray;
        }
        let y: Vec<f64> = ax.iter().zip(&x).map(|(p, q)| p + q).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        x = y.into_iter().map(|v| v / norm).collect();
    }
    ray
}

pub fn oracle_rho(g: &Graph) -> f64 {
    power_rho(&dense(g))
}

/// Largest eigenvalue of a quotient `B` with `B_ij = count_ij`, via the
/// similar symmetric matrix `sqrt(B_ij B_ji)`.
pub fn quotient_rho(b: &[Vec<usize>]) -> f64 {
    let s: Vec<Vec<f64>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| ((v * b[j][i]) as f64).sqrt()).collect())
        .collect();
    power_rho(&s)
}

/// Characteristic polynomial `det(xI − M)` by Faddeev–LeVerrier, exact
/// over the integers. Coefficients are listed from `x^n` down to `x^0`.
pub fn charpoly(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mul = |a: &[Vec<i128>], b: &[Vec<i128>]| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|t| a[i][t] * b[t][j]).sum()).collect())
            .collect()
    };
    let mi: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut coeffs = vec![1i128];
    let mut mk = vec![vec![0i128; n]; n];
    let mut c = 1i128;
    for k in 1..=n {
        let mut prev = mk.clone();
        for (i, row) in prev.iter_mut().enumerate() {
            row[i] += c;
        }
        mk = mul(&mi, &prev);
        let tr: i128 = (0..n).map(|i| mk[i][i]).sum();
        assert_eq!(tr % k as i128, 0);
        c = -tr / k as i128;
        coeffs.push(c);
    }
    coeffs.into_iter().map(|v| v as i64).collect()
}

/// `G(n, p)` on `0..n`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random bipartite graph with sides `0..a` and `a..a+b`, bipartition
/// attached.
pub fn random_bipartite(rng: &mut impl Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut g = Graph::complete_bipartite(a, b);
    for u in 0..a {
        for v in a..a + b {
            if !rng.gen_bool(p) {
                g = g.with_toggled(u, v).unwrap();
            }
        }
    }
    g
}
