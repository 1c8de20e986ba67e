use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, stored as sorted `(u, v)` pairs
/// with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    /// Checks that every pair is an edge of `g` and no vertex repeats.
    pub fn new(g: &Graph, edges: Vec<(Vertex, Vertex)>) -> Result<Matching> {
        let m = Matching::normalized(edges);
        m.check(g)?;
        Ok(m)
    }

    pub(crate) fn normalized(mut edges: Vec<(Vertex, Vertex)>) -> Matching {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub(crate) fn from_mates(mate: &[usize]) -> Matching {
        let edges = (0..mate.len())
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| (v, mate[v]))
            .collect();
        Matching { edges }
    }

    /// Errors if the matching uses a non-edge or repeats a vertex.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if u >= g.order() || v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order: g.order(),
                });
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidParams(format!("{u}-{v} is not an edge")));
            }
            if used[u] || used[v] {
                return Err(Error::InvalidParams(format!("edge {u}-{v} reuses a matched vertex")));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(())
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self, universe: usize) -> VertexSet {
        let mut set = VertexSet::new(universe);
        for &(u, v) in &self.edges {
            set.insert(u);
            set.insert(v);
        }
        set
    }

    pub fn is_perfect(&self, order: usize) -> bool {
        2 * self.edges.len() == order
    }
}

/// Maximum matching of a bipartitioned graph by Hopcroft–Karp.
pub fn max_matching_bipartite(g: &Graph) -> Result<Matching> {
    let (a, b) = g.side_lists().ok_or(Error::MissingBipartition)?;
    let mut index = vec![0; g.order()];
    for (i, &v) in b.iter().enumerate() {
        index[v] = i;
    }
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|&u| g.neighbors(u).map(|w| index[w]).collect())
        .collect();
    let hk = HopcroftKarp::run(b.len(), &adj);
    let mut mate = vec![NONE; g.order()];
    for (i, &j) in hk.left.iter().enumerate() {
        if j != NONE {
            mate[a[i]] = b[j];
            mate[b[j]] = a[i];
        }
    }
    Ok(Matching::from_mates(&mate))
}

/// Hopcroft–Karp on an explicit left/right adjacency structure.
pub(crate) struct HopcroftKarp {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl HopcroftKarp {
    pub fn run(n_right: usize, adj: &[Vec<usize>]) -> HopcroftKarp {
        let n_left = adj.len();
        let mut hk = HopcroftKarp {
            left: vec![NONE; n_left],
            right: vec![NONE; n_right],
        };
        let mut dist = vec![0usize; n_left];
        loop {
            // Layer the free left vertices and everything reachable by
            // alternating paths.
            let mut queue = VecDeque::new();
            for u in 0..n_left {
                if hk.left[u] == NONE {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NONE;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    let next = hk.right[w];
                    if next == NONE {
                        found = true;
                    } else if dist[next] == NONE {
                        dist[next] = dist[u] + 1;
                        queue.push_back(next);
                    }
                }
            }
            if !found {
                break;
            }
            let mut iter = vec![0usize; n_left];
            for u in 0..n_left {
                if hk.left[u] == NONE {
                    hk.augment(u, adj, &mut dist, &mut iter);
                }
            }
        }
        hk
    }

    fn augment(&mut self, u: usize, adj: &[Vec<usize>], dist: &mut [usize], iter: &mut [usize]) -> bool {
        while iter[u] < adj[u].len() {
            let w = adj[u][iter[u]];
            iter[u] += 1;
            let next = self.right[w];
            let ok = next == NONE || (dist[next] == dist[u] + 1 && self.augment(next, adj, dist, iter));
            if ok {
                self.left[u] = w;
                self.right[w] = u;
                return true;
            }
        }
        dist[u] = NONE;
        false
    }

    pub fn size(&self) -> usize {
        self.left.iter().filter(|&&m| m != NONE).count()
    }

    /// König: vertices reachable from free left vertices by alternating
    /// paths. The maximum independent set is `(L ∩ Z) ∪ (R ∖ Z)`.
    pub fn independent_set(&self, adj: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
        let mut seen_left = vec![false; self.left.len()];
        let mut seen_right = vec![false; self.right.len()];
        let mut queue: VecDeque<usize> = (0..self.left.len()).filter(|&u| self.left[u] == NONE).collect();
        for &u in &queue {
            seen_left[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if seen_right[w] {
                    continue;
                }
                seen_right[w] = true;
                let next = self.right[w];
                if next != NONE && !seen_left[next] {
                    seen_left[next] = true;
                    queue.push_back(next);
                }
            }
        }
        let left = (0..self.left.len()).filter(|&u| seen_left[u]).collect();
        let right = (0..self.right.len()).filter(|&w| !seen_right[w]).collect();
        (left, right)
    }
}

/// Maximum matching of an arbitrary graph by Edmonds' blossom algorithm.
pub fn max_matching_general(g: &Graph) -> Matching {
    let adj = g.adjacency_lists();
    Matching::from_mates(&Blossom::new(&adj).solve())
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching_general(g).len()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && 2 * matching_number(g) == g.order()
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn solve(mut self) -> Vec<usize> {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }
}

/// Largest order accepted by [`matching_number_exhaustive`].
pub const EXHAUSTIVE_MATCHING_LIMIT: usize = 24;

/// Matching number by memoised search over vertex subsets: the lowest
/// remaining vertex is either left unmatched or matched to a remaining
/// neighbour. Independent of the blossom code; used as an oracle.
pub fn matching_number_exhaustive(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > EXHAUSTIVE_MATCHING_LIMIT {
        return Err(Error::OrderTooLarge {
            what: "exhaustive matching",
            order: n,
            limit: EXHAUSTIVE_MATCHING_LIMIT,
        });
    }
    let rows = g.row_masks();
    let mut memo = HashMap::new();
    Ok(nu_mask(&rows, (1u64 << n) - 1, &mut memo))
}

fn nu_mask(rows: &[u64], mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if mask.count_ones() < 2 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut best = nu_mask(rows, rest, memo);
    let mut nb = rows[v] & rest;
    while nb != 0 && best < (mask.count_ones() / 2) as usize {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        best = best.max(1 + nu_mask(rows, rest & !(1 << w), memo));
    }
    memo.insert(mask, best);
    best
}

/// `k` disjoint edges among the vertices of `mask`, if they exist; the
/// lexicographically first such choice under lowest-vertex-first search.
pub(crate) fn k_matching_in_mask(rows: &[u64], mask: u64, k: usize) -> Option<Vec<(Vertex, Vertex)>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if (mask.count_ones() as usize) < 2 * k {
        return None;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    let mut nb = rows[v] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if let Some(mut edges) = k_matching_in_mask(rows, rest & !(1 << w), k - 1) {
            edges.insert(0, (v, w));
            return Some(edges);
        }
    }
    k_matching_in_mask(rows, rest, k)
}

/// A Tutte–Berge barrier: a set `B` with `o(G − B) − |B| = n − 2ν(G)`.
/// Built from the Gallai–Edmonds decomposition: `D` is the set of vertices
/// missed by some maximum matching and the barrier is `N(D) ∖ D`.
pub fn tutte_barrier(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let nu = matching_number(g);
    let mut d = VertexSet::new(n);
    for v in 0..n {
        let mut keep = VertexSet::full(n);
        keep.remove(v);
        let (h, _) = g.induced(&keep);
        if matching_number(&h) == nu {
            d.insert(v);
        }
    }
    g.neighborhood(&d).difference(&d).to_vec()
}

/// Upper bound `(n + |B| − o(G − B)) / 2` on the matching number given by a
/// candidate barrier.
pub fn tutte_berge_bound(g: &Graph, barrier: &VertexSet) -> usize {
    let odd = g.odd_component_count(barrier);
    (g.order() + barrier.len()).saturating_sub(odd) / 2
}
