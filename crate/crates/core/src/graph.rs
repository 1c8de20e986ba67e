//! Simple undirected graphs stored as one adjacency bitset per vertex, with an
//! optional bipartition, plus the construction algebra used by the extremal
//! families (join, disjoint union, bipartite join, star removal) and the
//! structural queries the checkers are built on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

const WORD: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::new(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "mask sets are limited to 64 vertices");
        let mut set = VertexSet::new(universe);
        let keep = if universe == WORD {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        };
        set.words[0] = mask & keep;
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// # Panics
    /// If `v` is outside the universe.
    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    /// The set as a bitmask; only valid for universes of at most 64 vertices.
    pub fn mask(&self) -> u64 {
        assert!(self.universe <= WORD, "mask sets are limited to 64 vertices");
        self.words[0]
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + bit)
            }
        })
    })
}

/// Undirected simple graph on vertices `0..order`.
///
/// Adjacency is symmetric and irreflexive; when a bipartition is attached,
/// every edge joins side A to side B. Values are immutable once built: every
/// operation returns a new graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
    size: usize,
    sides: Option<Vec<Side>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .field("sides", &self.sides)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let stride = words_for(n);
        Graph {
            order: n,
            stride,
            rows: vec![0; stride * n],
            size: 0,
            sides: None,
        }
    }

    /// Edgeless graph carrying the given bipartition.
    pub fn empty_bipartite(sides: Vec<Side>) -> Graph {
        let mut g = Graph::empty(sides.len());
        g.sides = Some(sides);
        g
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// `K_{p,q}` with side A = `0..p` and side B = `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut sides = vec![Side::A; p];
        sides.extend(std::iter::repeat_n(Side::B, q));
        let mut g = Graph::empty_bipartite(sides);
        for u in 0..p {
            for v in p..p + q {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Cycle `C_n` on `0..n` in order (n >= 3); even cycles get the
    /// alternating bipartition.
    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.set_edge(v, (v + 1) % n);
            }
            if n % 2 == 0 {
                g.sides = Some(
                    (0..n)
                        .map(|v| if v % 2 == 0 { Side::A } else { Side::B })
                        .collect(),
                );
            }
        }
        g
    }

    /// Path `P_n` on `0..n` in order, bipartition attached.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g.sides = Some(
            (0..n)
                .map(|v| if v % 2 == 0 { Side::A } else { Side::B })
                .collect(),
        );
        g
    }

    /// `G ∇ H`: disjoint copies plus every edge between them. The
    /// bipartition is dropped; joining with the order-0 graph is the identity.
    pub fn join(g: &Graph, h: &Graph) -> Graph {
        if g.order == 0 {
            return h.clone();
        }
        if h.order == 0 {
            return g.clone();
        }
        let mut out = Graph::disjoint_union(g, h);
        out.sides = None;
        for u in 0..g.order {
            for v in g.order..g.order + h.order {
                out.set_edge(u, v);
            }
        }
        out
    }

    /// `G ∪ H`. The bipartition survives when both operands carry one.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        if g.order == 0 {
            return h.clone();
        }
        if h.order == 0 {
            return g.clone();
        }
        let n = g.order + h.order;
        let mut out = Graph::empty(n);
        for (u, v) in g.edges() {
            out.set_edge(u, v);
        }
        for (u, v) in h.edges() {
            out.set_edge(u + g.order, v + g.order);
        }
        if let (Some(a), Some(b)) = (&g.sides, &h.sides) {
            out.sides = Some(a.iter().chain(b).copied().collect());
        }
        out
    }

    /// `G1 ∇₁ G2`: the union plus every edge between side A of `g1` and side
    /// B of `g2`.
    pub fn bipartite_join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let s1 = g1.sides.as_ref().ok_or(Error::MissingBipartition)?;
        let s2 = g2.sides.as_ref().ok_or(Error::MissingBipartition)?;
        let mut out = Graph::disjoint_union(g1, g2);
        out.sides = Some(s1.iter().chain(s2).copied().collect());
        for (u, &su) in s1.iter().enumerate() {
            if su != Side::A {
                continue;
            }
            for (v, &sv) in s2.iter().enumerate() {
                if sv == Side::B {
                    out.set_edge(u, g1.order + v);
                }
            }
        }
        Ok(out)
    }

    /// Deletes the edges from `center` to its `leaf_count` lowest-indexed
    /// neighbours.
    pub fn remove_star(&self, center: Vertex, leaf_count: usize) -> Result<Graph> {
        self.check_vertex(center)?;
        let degree = self.degree(center);
        if degree < leaf_count {
            return Err(Error::InsufficientDegree {
                center,
                degree,
                requested: leaf_count,
            });
        }
        let mut out = self.clone();
        let leaves: Vec<Vertex> = self.neighbors(center).take(leaf_count).collect();
        for leaf in leaves {
            out.clear_edge(center, leaf);
        }
        Ok(out)
    }

    /// Attaches a bipartition, validating every edge against it.
    pub fn with_bipartition(&self, sides: Vec<Side>) -> Result<Graph> {
        if sides.len() != self.order {
            return Err(Error::BipartitionLength {
                got: sides.len(),
                order: self.order,
            });
        }
        for (u, v) in self.edges() {
            if sides[u] == sides[v] {
                return Err(Error::BipartitionViolated(u, v));
            }
        }
        let mut out = self.clone();
        out.sides = Some(sides);
        Ok(out)
    }

    pub fn without_bipartition(&self) -> Graph {
        let mut out = self.clone();
        out.sides = None;
        out
    }

    /// Returns a copy with the pair `u v` toggled (added if absent, removed if
    /// present).
    pub fn with_toggled(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut out = self.clone();
        if out.has_edge(u, v) {
            out.clear_edge(u, v);
        } else {
            if let Some(sides) = &out.sides {
                if sides[u] == sides[v] {
                    return Err(Error::BipartitionViolated(u, v));
                }
            }
            out.set_edge(u, v);
        }
        Ok(out)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidParams(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut out = Graph::empty(n);
        for (u, v) in self.edges() {
            out.set_edge(perm[u], perm[v]);
        }
        if let Some(sides) = &self.sides {
            let mut relabeled = vec![Side::A; n];
            for (v, &s) in sides.iter().enumerate() {
                relabeled[perm[v]] = s;
            }
            out.sides = Some(relabeled);
        }
        Ok(out)
    }

    /// Subgraph induced by `keep`, relabeled densely in increasing order.
    /// Returns the subgraph and the map from new to old labels.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = keep.iter().filter(|&v| v < self.order).collect();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut out = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    out.set_edge(i, j);
                }
            }
        }
        if let Some(sides) = &self.sides {
            out.sides = Some(map.iter().map(|&v| sides[v]).collect());
        }
        (out, map)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges `m`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn is_bipartitioned(&self) -> bool {
        self.sides.is_some()
    }

    /// Side A and side B as sorted vertex lists.
    pub fn side_lists(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let sides = self.sides.as_ref()?;
        let a = (0..self.order).filter(|&v| sides[v] == Side::A).collect();
        let b = (0..self.order).filter(|&v| sides[v] == Side::B).collect();
        Some((a, b))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order && v < self.order && self.rows[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        iter_bits(self.row(v))
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        VertexSet {
            universe: self.order,
            words: self.row(v).to_vec(),
        }
    }

    /// Adjacency row of `v` as a bitmask; only for graphs of order <= 64.
    pub fn row_mask(&self, v: Vertex) -> u64 {
        assert!(self.order <= WORD, "row masks need order <= 64");
        self.rows[v]
    }

    /// All adjacency rows as bitmasks; only for graphs of order <= 64.
    pub fn row_masks(&self) -> Vec<u64> {
        (0..self.order).map(|v| self.row_mask(v)).collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<Vertex>> {
        (0..self.order).map(|v| self.neighbors(v).collect()).collect()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&VertexSet::new(self.order))
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// `N(X)`: the union of the neighbourhoods of the members of `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.order);
        for v in x.iter() {
            for (w, r) in out.words.iter_mut().zip(self.row(v)) {
                *w |= r;
            }
        }
        out
    }

    /// `o(G - S)`: the number of odd-order components after deleting `s`.
    pub fn odd_component_count(&self, s: &VertexSet) -> usize {
        self.components_avoiding(s)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }

    /// Components of `G - S`.
    pub fn components_avoiding(&self, s: &VertexSet) -> Vec<Vec<Vertex>> {
        let n = self.order;
        let mut seen = vec![false; n];
        for v in s.iter() {
            if v < n {
                seen[v] = true;
            }
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `e(X)`: edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        let twice: usize = x
            .iter()
            .map(|v| self.neighbor_set(v).intersection(x).len())
            .sum();
        twice / 2
    }

    /// `e(X, Y)` for disjoint `x`, `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize> {
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSets);
        }
        Ok(x
            .iter()
            .map(|v| self.neighbor_set(v).intersection(y).len())
            .sum())
    }

    /// `(e(X), e(X, Y))`.
    pub fn edge_counts(&self, x: &VertexSet, y: &VertexSet) -> Result<(usize, usize)> {
        Ok((self.edges_within(x), self.edges_between(x, y)?))
    }

    /// A proper two-colouring if the graph is bipartite; each component's
    /// smallest vertex is put on side A.
    pub fn two_coloring(&self) -> Option<Vec<Side>> {
        let n = self.order;
        let mut color: Vec<Option<Side>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("coloured on push");
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(cv.flip());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all coloured")).collect())
    }

    /// Returns the graph itself if it already carries a bipartition,
    /// otherwise attaches the two-colouring when one exists.
    pub fn ensure_bipartition(&self) -> Option<Graph> {
        if self.sides.is_some() {
            return Some(self.clone());
        }
        let sides = self.two_coloring()?;
        let mut out = self.clone();
        out.sides = Some(sides);
        Some(out)
    }

    fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn set_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v);
        if !self.has_edge(u, v) {
            self.rows[u * self.stride + v / WORD] |= 1 << (v % WORD);
            self.rows[v * self.stride + u / WORD] |= 1 << (u % WORD);
            self.size += 1;
        }
    }

    fn clear_edge(&mut self, u: Vertex, v: Vertex) {
        if self.has_edge(u, v) {
            self.rows[u * self.stride + v / WORD] &= !(1 << (v % WORD));
            self.rows[v * self.stride + u / WORD] &= !(1 << (u % WORD));
            self.size -= 1;
        }
    }
}
