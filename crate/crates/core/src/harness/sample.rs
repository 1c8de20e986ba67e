use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Side, Vertex};

pub const EDGE_PROBABILITIES: [f64; 4] = [0.3, 0.5, 0.7, 0.9];

/// Attempts per sample before giving up.
pub const MAX_ATTEMPTS: usize = 2000;

/// The RNG for item `index` of a run; independent of the job count.
pub fn graph_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A hypothesis class of graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub order: usize,
    /// Balanced bipartite with sides `0..n/2` and `n/2..n`.
    pub bipartite: bool,
    pub connected: bool,
    /// Exact minimum degree.
    pub min_degree: Option<usize>,
}

impl GraphClass {
    pub fn contains(&self, g: &Graph) -> bool {
        if g.order() != self.order {
            return false;
        }
        if self.bipartite {
            match g.side_lists() {
                Some((a, b)) if a.len() == b.len() => {}
                _ => return false,
            }
        }
        if self.min_degree.is_some_and(|d| g.min_degree() != d) {
            return false;
        }
        !self.connected || g.is_connected()
    }

    fn sides(&self) -> Option<Vec<Side>> {
        let h = self.order / 2;
        self.bipartite
            .then(|| (0..self.order).map(|v| if v < h { Side::A } else { Side::B }).collect())
    }

    fn allowed(&self, sides: &Option<Vec<Side>>, u: Vertex, v: Vertex) -> bool {
        u != v && sides.as_ref().is_none_or(|s| s[u] != s[v])
    }

    /// `G(n, p)` (or its bipartite analogue) with `p` drawn from
    /// [`EDGE_PROBABILITIES`]; when a minimum degree is prescribed, one
    /// random vertex is forced to have exactly that degree. Rejects until
    /// the graph lies in the class.
    pub fn random_member(&self, rng: &mut impl Rng) -> Option<Graph> {
        let n = self.order;
        let sides = self.sides();
        for _ in 0..MAX_ATTEMPTS {
            let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if self.allowed(&sides, u, v) && rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let mut g = Graph::from_edges(n, &edges).expect("pairs in range");
            if let Some(s) = &sides {
                g = g.with_bipartition(s.clone()).expect("edges cross the sides");
            }
            if let Some(d) = self.min_degree {
                let Some(forced) = self.force_degree(rng, g, &sides, d) else {
                    continue;
                };
                g = forced;
            }
            if self.contains(&g) {
                return Some(g);
            }
        }
        None
    }

    fn force_degree(&self, rng: &mut impl Rng, mut g: Graph, sides: &Option<Vec<Side>>, d: usize) -> Option<Graph> {
        let n = self.order;
        if n == 0 {
            return None;
        }
        let v = rng.gen_range(0..n);
        let mut nbrs: Vec<Vertex> = g.neighbors(v).collect();
        let mut others: Vec<Vertex> = (0..n)
            .filter(|&w| self.allowed(sides, v, w) && !g.has_edge(v, w))
            .collect();
        if nbrs.len() + others.len() < d {
            return None;
        }
        nbrs.shuffle(rng);
        others.shuffle(rng);
        for &w in nbrs.iter().skip(d) {
            g = g.with_toggled(v, w).ok()?;
        }
        for &w in others.iter().take(d.saturating_sub(nbrs.len())) {
            g = g.with_toggled(v, w).ok()?;
        }
        Some(g)
    }

    /// Applies one to three random edge toggles to `base` (keeping a
    /// bipartition if present), then relabels randomly. Rejects until the
    /// result lies in the class.
    pub fn perturb(&self, rng: &mut impl Rng, base: &Graph) -> Option<Graph> {
        let n = base.order();
        if n < 2 {
            return None;
        }
        let sides = base.sides().map(|s| s.to_vec());
        for _ in 0..MAX_ATTEMPTS {
            let edits = rng.gen_range(1..=3);
            let mut g = base.clone();
            let mut done = 0;
            while done < edits {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if !self.allowed(&sides, u, v) {
                    continue;
                }
                g = g.with_toggled(u, v).expect("allowed pair");
                done += 1;
            }
            if self.contains(&g) {
                return Some(relabel_random(rng, &g));
            }
        }
        None
    }
}

/// Applies a uniformly random vertex permutation.
pub fn relabel_random(rng: &mut impl Rng, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("a permutation")
}
