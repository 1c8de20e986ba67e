use serde::Serialize;

use super::certificate::{Certificate, Verdict};
use super::factor::find_k_factor_flow;
use super::Limits;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Hamilton cycle by dynamic programming over vertex subsets: `reach[S]`
/// holds the endpoints of paths that start at vertex 0 and visit exactly
/// `{0} ∪ S`.
pub fn hamiltonian_cycle(g: &Graph, limits: &Limits) -> Result<Verdict> {
    let n = g.order();
    let limit = limits.hamilton.min(24);
    if n > limit {
        return Err(Error::OrderTooLarge {
            what: "hamilton cycle search",
            order: n,
            limit,
        });
    }
    if let Some((a, b)) = g.side_lists() {
        if a.len() != b.len() {
            return Ok(Verdict::fails(Certificate::SideImbalance {
                a_total: a.len(),
                b_total: b.len(),
                targets: None,
            }));
        }
    }
    let no_cycle = Verdict {
        holds: false,
        certificate: None,
    };
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(no_cycle);
    }
    let rows = g.row_masks();
    // Bit i of a subset index stands for vertex i + 1.
    let m = n - 1;
    let shifted: Vec<u32> = rows.iter().map(|&r| (r >> 1) as u32).collect();
    let mut reach = vec![0u32; 1 << m];
    for v in 0..m {
        if rows[0] >> (v + 1) & 1 == 1 {
            reach[1 << v] = 1 << v;
        }
    }
    for s in 1usize..1 << m {
        if s.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u32;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if reach[s & !(1 << v)] & shifted[v + 1] != 0 {
                ends |= 1 << v;
            }
        }
        reach[s] = ends;
    }
    let full = (1usize << m) - 1;
    let closing = reach[full] & shifted[0];
    if closing == 0 {
        return Ok(no_cycle);
    }
    let mut cycle = vec![0];
    let mut s = full;
    let mut v = closing.trailing_zeros() as usize;
    loop {
        cycle.push(v + 1);
        let prev = s & !(1 << v);
        if prev == 0 {
            break;
        }
        let options = reach[prev] & shifted[v + 1];
        s = prev;
        v = options.trailing_zeros() as usize;
    }
    Ok(Verdict::holds(Some(Certificate::HamCycle { cycle })))
}

/// Outcome of the budgeted connected-factor search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "edges", rename_all = "kebab-case")]
pub enum ConnectedFactor {
    Found(Vec<(Vertex, Vertex)>),
    NotFound,
    Unknown,
}

/// Looks for a connected `k`-factor of a balanced bipartite graph. The flow
/// factor is tried first; otherwise `k`-factors are enumerated edge by edge
/// until one is connected or the node budget runs out.
pub fn connected_k_factor_search(g: &Graph, k: usize, limits: &Limits) -> Result<ConnectedFactor> {
    let n = g.order();
    if n > limits.connected_factor {
        return Err(Error::OrderTooLarge {
            what: "connected factor search",
            order: n,
            limit: limits.connected_factor,
        });
    }
    let (a, b) = g.side_lists().ok_or(Error::MissingBipartition)?;
    if a.len() != b.len() {
        return Ok(ConnectedFactor::NotFound);
    }
    if k == 0 {
        return Ok(if n <= 1 {
            ConnectedFactor::Found(Vec::new())
        } else {
            ConnectedFactor::NotFound
        });
    }
    let first = match find_k_factor_flow(g, k)?.certificate {
        Some(Certificate::FactorSubgraph { edges, .. }) => edges,
        _ => return Ok(ConnectedFactor::NotFound),
    };
    if spans_connected(n, &first) {
        return Ok(ConnectedFactor::Found(first));
    }
    let edges = g.edges();
    let mut avail = g.degrees();
    let mut search = FactorSearch {
        n,
        edges: &edges,
        need: vec![k; n],
        avail: &mut avail,
        chosen: Vec::new(),
        nodes: 0,
        budget: limits.search_budget,
    };
    Ok(match search.run(0) {
        Some(found) => ConnectedFactor::Found(found),
        None if search.nodes > search.budget => ConnectedFactor::Unknown,
        None => ConnectedFactor::NotFound,
    })
}

fn spans_connected(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    Graph::from_edges(n, edges).map(|h| h.is_connected()).unwrap_or(false)
}

struct FactorSearch<'a> {
    n: usize,
    edges: &'a [(Vertex, Vertex)],
    need: Vec<usize>,
    avail: &'a mut Vec<usize>,
    chosen: Vec<(Vertex, Vertex)>,
    nodes: u64,
    budget: u64,
}

impl FactorSearch<'_> {
    fn run(&mut self, i: usize) -> Option<Vec<(Vertex, Vertex)>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.need.iter().all(|&d| d == 0) {
            return spans_connected(self.n, &self.chosen).then(|| self.chosen.clone());
        }
        if i == self.edges.len() {
            return None;
        }
        let (u, v) = self.edges[i];
        self.avail[u] -= 1;
        self.avail[v] -= 1;
        let mut result = None;
        if self.need[u] > 0 && self.need[v] > 0 {
            self.need[u] -= 1;
            self.need[v] -= 1;
            self.chosen.push((u, v));
            if self.need[u] <= self.avail[u] && self.need[v] <= self.avail[v] {
                result = self.run(i + 1);
            }
            self.chosen.pop();
            self.need[u] += 1;
            self.need[v] += 1;
        }
        if result.is_none()
            && self.nodes <= self.budget
            && self.need[u] <= self.avail[u]
            && self.need[v] <= self.avail[v]
        {
            result = self.run(i + 1);
        }
        self.avail[u] += 1;
        self.avail[v] += 1;
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_complete_bipartite() {
        let lim = Limits::default();
        for g in [Graph::cycle(8), Graph::complete_bipartite(4, 4), Graph::complete(5)] {
            let v = hamiltonian_cycle(&g, &lim).unwrap();
            assert!(v.holds);
            v.validate(&g).unwrap();
        }
        let star_removed = Graph::complete_bipartite(4, 4).remove_star(0, 3).unwrap();
        assert!(!hamiltonian_cycle(&star_removed, &lim).unwrap().holds);
        // Petersen graph is not hamiltonian.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
        }
        let petersen = Graph::from_edges(10, &edges).unwrap();
        assert!(!hamiltonian_cycle(&petersen, &lim).unwrap().holds);
    }

    #[test]
    fn connected_factors() {
        let lim = Limits::default();
        assert!(matches!(
            connected_k_factor_search(&Graph::cycle(8), 2, &lim).unwrap(),
            ConnectedFactor::Found(e) if e.len() == 8
        ));
        let ext = Graph::complete_bipartite(4, 4).remove_star(0, 3).unwrap();
        assert_eq!(connected_k_factor_search(&ext, 2, &lim).unwrap(), ConnectedFactor::NotFound);
        match connected_k_factor_search(&Graph::complete_bipartite(4, 4), 2, &lim).unwrap() {
            ConnectedFactor::Found(e) => {
                assert_eq!(e.len(), 8);
                assert!(spans_connected(8, &e));
            }
            other => panic!("expected a connected 2-factor, got {other:?}"),
        }
        // Two disjoint 4-cycles: the only 2-factor is disconnected.
        let two = Graph::disjoint_union(&Graph::cycle(4), &Graph::cycle(4));
        assert_eq!(connected_k_factor_search(&two, 2, &lim).unwrap(), ConnectedFactor::NotFound);
    }
}
