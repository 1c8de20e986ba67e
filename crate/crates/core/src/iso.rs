//! Exact isomorphism test for small graphs by backtracking.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const ISO_ORDER_LIMIT: usize = 16;

/// Whether an adjacency-preserving bijection between `g` and `h` exists.
/// Bipartition labels are ignored. Limited to order 16.
pub fn isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order();
    for order in [g.order(), h.order()] {
        if order > ISO_ORDER_LIMIT {
            return Err(Error::OrderTooLarge {
                what: "isomorphic_small",
                order,
                limit: ISO_ORDER_LIMIT,
            });
        }
    }
    if n != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let gi = invariants(g);
    let hi = invariants(h);
    let mut gs = gi.clone();
    let mut hs = hi.clone();
    gs.sort();
    hs.sort();
    if gs != hs {
        return Ok(false);
    }

    // Map rare invariants first, then stay adjacent to already-mapped
    // vertices so adjacency checks prune early.
    let order = search_order(g, &gi);
    let gm = g.row_masks();
    let hm = h.row_masks();
    let mut state = Search {
        order: &order,
        gm: &gm,
        hm: &hm,
        gi: &gi,
        hi: &hi,
        map: vec![usize::MAX; n],
        used: 0,
    };
    Ok(state.extend(0))
}

type Invariant = (usize, Vec<usize>);

fn invariants(g: &Graph) -> Vec<Invariant> {
    let deg = g.degrees();
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

fn search_order(g: &Graph, inv: &[Invariant]) -> Vec<usize> {
    let n = g.order();
    let count = |v: usize| inv.iter().filter(|x| **x == inv[v]).count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        // Prefer unplaced vertices adjacent to placed ones, then rarity,
        // then high degree, then index.
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let touches = order.iter().any(|&u| g.has_edge(u, v));
                (!touches, count(v), std::cmp::Reverse(inv[v].0), v)
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    order: &'a [usize],
    gm: &'a [u64],
    hm: &'a [u64],
    gi: &'a [Invariant],
    hi: &'a [Invariant],
    map: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.hm.len() {
            if self.used >> w & 1 == 1 || self.gi[v] != self.hi[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let gu = self.gm[v] >> u & 1;
                let hu = self.hm[w] >> self.map[u] & 1;
                gu == hu
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// Vertices grouped by equal open neighbourhoods (independent classes) or,
/// failing that, equal closed neighbourhoods (clique classes). No vertex
/// can have twins of both kinds, so the grouping is canonical; edges
/// between two classes are all present or all absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClasses {
    pub classes: Vec<Vec<Vertex>>,
    /// Whether each class is a clique (for singletons: false).
    pub clique: Vec<bool>,
}

pub fn twin_classes(g: &Graph) -> TwinClasses {
    let n = g.order();
    let mut open: HashMap<Vec<Vertex>, Vec<Vertex>> = HashMap::new();
    for v in 0..n {
        open.entry(g.neighbors(v).collect()).or_default().push(v);
    }
    let mut closed: HashMap<Vec<Vertex>, Vec<Vertex>> = HashMap::new();
    let mut classes = Vec::new();
    let mut clique = Vec::new();
    for v in 0..n {
        let key: Vec<Vertex> = g.neighbors(v).collect();
        if open[&key].len() >= 2 {
            if open[&key][0] == v {
                classes.push(open[&key].clone());
                clique.push(false);
            }
            continue;
        }
        let mut key = key;
        key.push(v);
        key.sort_unstable();
        closed.entry(key).or_default().push(v);
    }
    for group in closed.into_values() {
        clique.push(group.len() >= 2);
        classes.push(group);
    }
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| classes[i][0]);
    TwinClasses {
        classes: order.iter().map(|&i| classes[i].clone()).collect(),
        clique: order.iter().map(|&i| clique[i]).collect(),
    }
}

/// Decides isomorphism through the twin classes when both graphs have at
/// most `max_classes` of them: the graphs are isomorphic iff some bijection
/// between classes preserves size, kind and class adjacency. Returns `None`
/// when either graph has too many classes.
pub fn isomorphic_by_twins(g: &Graph, h: &Graph, max_classes: usize) -> Option<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Some(false);
    }
    let tg = twin_classes(g);
    let th = twin_classes(h);
    if tg.classes.len() > max_classes || th.classes.len() > max_classes {
        return None;
    }
    if tg.classes.len() != th.classes.len() {
        return Some(false);
    }
    let r = tg.classes.len();
    let adj = |g: &Graph, t: &TwinClasses, i: usize, j: usize| g.has_edge(t.classes[i][0], t.classes[j][0]);
    let mut perm: Vec<usize> = (0..r).collect();
    let mut used = vec![false; r];
    fn place(
        depth: usize,
        r: usize,
        perm: &mut [usize],
        used: &mut [bool],
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) -> bool {
        if depth == r {
            return true;
        }
        for c in 0..r {
            if used[c] {
                continue;
            }
            perm[depth] = c;
            if !ok(depth, c, perm) {
                continue;
            }
            used[c] = true;
            if place(depth + 1, r, perm, used, ok) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    let ok = |i: usize, c: usize, perm: &[usize]| {
        tg.classes[i].len() == th.classes[c].len()
            && tg.clique[i] == th.clique[c]
            && (0..i).all(|j| adj(g, &tg, i, j) == adj(h, &th, c, perm[j]))
    };
    Some(place(0, r, &mut perm, &mut used, &ok))
}
