use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, SubsetRule, Verdict};
use super::matching::{max_matching_bipartite, Matching};
use super::{for_each_combination, Limits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Side, Vertex, VertexSet};

/// Per-vertex target degrees `f(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub targets: Vec<usize>,
}

impl FactorSpec {
    pub fn constant(order: usize, k: usize) -> FactorSpec {
        FactorSpec {
            targets: vec![k; order],
        }
    }
}

fn side_totals(sides: &[Side], targets: &[usize]) -> (usize, usize) {
    let mut totals = (0, 0);
    for (s, &t) in sides.iter().zip(targets) {
        match s {
            Side::A => totals.0 += t,
            Side::B => totals.1 += t,
        }
    }
    totals
}

/// Degree-constrained subgraph criterion by enumeration over `X ⊆ A`: an
/// `f`-factor exists iff the target sums of the two sides agree and
/// `Σ_{x∈X} f(x) ≤ Σ_{y∈N(X)} min{f(y), d_X(y)}` for every `X`. The
/// certificate is the most violated subset (largest excess, then smallest,
/// then lexicographically least).
pub fn has_f_factor_ore(g: &Graph, f: &FactorSpec, limits: &Limits) -> Result<Verdict> {
    let sides = g.sides().ok_or(Error::MissingBipartition)?;
    let n = g.order();
    if f.targets.len() != n {
        return Err(Error::InvalidParams(format!(
            "{} targets for a graph of order {n}",
            f.targets.len()
        )));
    }
    let (a_total, b_total) = side_totals(sides, &f.targets);
    if a_total != b_total {
        return Ok(Verdict::fails(Certificate::SideImbalance {
            a_total,
            b_total,
            targets: Some(f.targets.clone()),
        }));
    }
    let (a, _) = g.side_lists().expect("bipartition present");
    if a.len() > limits.exhaustive || n > 64 {
        return Err(Error::OrderTooLarge {
            what: "factor subset enumeration",
            order: a.len(),
            limit: limits.exhaustive,
        });
    }
    let rows = g.row_masks();
    let t = &f.targets;
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for r in 1..=a.len() {
        for_each_combination(&a, r, |x| {
            let xmask = x.iter().fold(0u64, |m, &v| m | 1 << v);
            let demand: usize = x.iter().map(|&v| t[v]).sum();
            let mut nx = x.iter().fold(0u64, |m, &v| m | rows[v]);
            let mut supply = 0;
            while nx != 0 && supply < demand {
                let y = nx.trailing_zeros() as usize;
                nx &= nx - 1;
                supply += ((rows[y] & xmask).count_ones() as usize).min(t[y]);
            }
            if demand > supply && best.as_ref().is_none_or(|b| demand - supply > b.0) {
                best = Some((demand - supply, x.to_vec()));
            }
        });
    }
    Ok(match best {
        None => Verdict::holds(None),
        Some((_, x)) => Verdict::fails(ore_certificate(g, x, t)),
    })
}

fn ore_certificate(g: &Graph, subset: Vec<Vertex>, targets: &[usize]) -> Certificate {
    let x = VertexSet::from_vertices(g.order(), subset.iter().copied()).expect("vertices in range");
    let nx = g.neighborhood(&x);
    let demand = subset.iter().map(|&v| targets[v]).sum();
    let mut supply = 0;
    let (mut saturated, mut unsaturated) = (Vec::new(), Vec::new());
    for y in nx.iter() {
        let dx = g.neighbor_set(y).intersection(&x).len();
        supply += dx.min(targets[y]);
        if dx >= targets[y] {
            saturated.push(y);
        } else {
            unsaturated.push(y);
        }
    }
    Certificate::ViolatingSubsetX {
        subset,
        neighborhood: nx.to_vec(),
        rule: SubsetRule::Ore {
            targets: targets.to_vec(),
            demand,
            supply,
            saturated,
            unsaturated,
        },
    }
}

struct FlowNet {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<usize>,
    next: Vec<usize>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            head: vec![usize::MAX; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, c: usize) -> usize {
        let id = self.to.len();
        for (a, b, cap) in [(u, v, c), (v, u, 0)] {
            self.to.push(b);
            self.cap.push(cap);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
        id
    }

    fn arcs(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let mut e = self.head[u];
        std::iter::from_fn(move || {
            (e != usize::MAX).then(|| {
                let cur = e;
                e = self.next[e];
                cur
            })
        })
    }

    /// Shortest augmenting paths (Edmonds–Karp).
    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for e in self.arcs(u) {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !seen[v] {
                        seen[v] = true;
                        via[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut push = usize::MAX;
            let mut v = t;
            while v != s {
                let e = via[v];
                push = push.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = via[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.to[e ^ 1];
            }
            total += push;
        }
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for e in self.arcs(u) {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Finds a `k`-factor of a balanced bipartite graph by maximum flow
/// (source → A with capacity `k`, unit edge arcs, B → sink with capacity
/// `k`). On failure the certificate is `X = A ∩ (source side of a minimum
/// cut)`, which violates the subset criterion for `f ≡ k`.
pub fn find_k_factor_flow(g: &Graph, k: usize) -> Result<Verdict> {
    let (a, b) = g.side_lists().ok_or(Error::MissingBipartition)?;
    if a.len() != b.len() {
        return Err(Error::Unbalanced {
            a: a.len(),
            b: b.len(),
        });
    }
    let n = g.order();
    let (s, t) = (n, n + 1);
    let mut net = FlowNet::new(n + 2);
    for &x in &a {
        net.add(s, x, k);
    }
    let mut edge_arcs = Vec::new();
    for &x in &a {
        for y in g.neighbors(x) {
            edge_arcs.push((net.add(x, y, 1), x, y));
        }
    }
    for &y in &b {
        net.add(y, t, k);
    }
    let flow = net.max_flow(s, t);
    let targets = vec![k; n];
    if flow == k * a.len() {
        let mut edges: Vec<(Vertex, Vertex)> = edge_arcs
            .iter()
            .filter(|&&(e, _, _)| net.cap[e] == 0)
            .map(|&(_, x, y)| (x.min(y), x.max(y)))
            .collect();
        edges.sort_unstable();
        return Ok(Verdict::holds(Some(Certificate::FactorSubgraph { edges, targets })));
    }
    let side = net.reachable(s);
    let x: Vec<Vertex> = a.iter().copied().filter(|&v| side[v]).collect();
    Ok(Verdict::fails(ore_certificate(g, x, &targets)))
}

/// Splits a `k`-regular balanced bipartite graph into `k` edge-disjoint
/// perfect matchings by repeatedly removing a maximum matching, which is
/// perfect because the remainder stays regular.
pub fn decompose_edge_disjoint_pms(h: &Graph) -> Result<Vec<Matching>> {
    let (a, b) = h.side_lists().ok_or(Error::MissingBipartition)?;
    if a.len() != b.len() {
        return Err(Error::Unbalanced {
            a: a.len(),
            b: b.len(),
        });
    }
    let k = h.max_degree();
    if h.min_degree() != k {
        return Err(Error::NotRegular);
    }
    let n = h.order();
    let sides = h.sides().expect("bipartition present").to_vec();
    let mut rest = h.clone();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let m = max_matching_bipartite(&rest)?;
        if !m.is_perfect(n) {
            return Err(Error::InvalidParams("regular remainder has no perfect matching".into()));
        }
        let remaining: Vec<(Vertex, Vertex)> = rest
            .edges()
            .into_iter()
            .filter(|e| m.edges().binary_search(e).is_err())
            .collect();
        rest = Graph::from_edges(n, &remaining)?.with_bipartition(sides.clone())?;
        out.push(m);
    }
    Ok(out)
}
