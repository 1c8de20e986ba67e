use super::certificate::{Certificate, SetCriterion, SubsetRule, Verdict};
use super::matching::{
    has_perfect_matching, k_matching_in_mask, matching_number, tutte_barrier, HopcroftKarp, Matching,
};
use super::{for_each_combination, mask_of, odd_components_mask, Limits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

fn check_general(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if g.order() % 2 == 1 {
        return Err(Error::OddOrder(g.order()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn too_small(g: &Graph, k: usize) -> Option<Verdict> {
    let nu = matching_number(g);
    (nu < k).then(|| {
        Verdict::fails(Certificate::MatchingTooSmall {
            maximum: nu,
            required: k,
            barrier: tutte_barrier(g),
        })
    })
}

/// Checks every matching of size `k` for extension to a perfect matching.
/// On failure the lexicographically least failing matching is returned
/// together with a Tutte barrier of the remaining graph.
pub fn is_k_extendable_definitional(g: &Graph, k: usize) -> Result<Verdict> {
    check_general(g, k)?;
    if let Some(v) = too_small(g, k) {
        return Ok(v);
    }
    let n = g.order();
    let edges = g.edges();
    let mut chosen = Vec::with_capacity(k);
    let mut used = vec![false; n];
    let failing = first_failing(g, &edges, 0, k, &mut chosen, &mut used);
    Ok(match failing {
        None => Verdict::holds(None),
        Some(m) => {
            let matching = Matching::normalized(m);
            let rest = matching.vertices(n).complement();
            let (h, map) = g.induced(&rest);
            let barrier = tutte_barrier(&h).into_iter().map(|v| map[v]).collect();
            Verdict::fails(Certificate::FailingMatching { matching, barrier })
        }
    })
}

fn first_failing(
    g: &Graph,
    edges: &[(Vertex, Vertex)],
    from: usize,
    k: usize,
    chosen: &mut Vec<(Vertex, Vertex)>,
    used: &mut [bool],
) -> Option<Vec<(Vertex, Vertex)>> {
    if chosen.len() == k {
        let rest = VertexSet::from_vertices(g.order(), (0..g.order()).filter(|&v| !used[v]))
            .expect("vertices in range");
        let (h, _) = g.induced(&rest);
        return (!has_perfect_matching(&h)).then(|| chosen.clone());
    }
    for i in from..edges.len() {
        let (u, v) = edges[i];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        let found = first_failing(g, edges, i + 1, k, chosen, used);
        chosen.pop();
        used[u] = false;
        used[v] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

fn mask_limit(n: usize, limits: &Limits, what: &'static str) -> Result<()> {
    let limit = limits.exhaustive.min(64);
    if n > limit {
        return Err(Error::OrderTooLarge { what, order: n, limit });
    }
    Ok(())
}

/// Odd-set criterion: `G` is `k`-extendable iff `o(G − S) ≤ |S| − 2k` for
/// every `S` whose induced subgraph has `k` disjoint edges. Enumerates all
/// such `S`; the certificate is the most violated set (largest excess, then
/// smallest, then lexicographically least).
pub fn is_k_extendable_chen(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    check_general(g, k)?;
    let n = g.order();
    mask_limit(n, limits, "odd-set extendability enumeration")?;
    if let Some(v) = too_small(g, k) {
        return Ok(v);
    }
    let rows = g.row_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let vertices: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>, usize, Vec<(Vertex, Vertex)>)> = None;
    for r in 2 * k..=n {
        // At most n − r odd components remain, so the excess is bounded.
        let cap = (n - r + 2 * k).saturating_sub(r);
        if cap == 0 || best.as_ref().is_some_and(|b| b.0 >= cap) {
            continue;
        }
        for_each_combination(&vertices, r, |s| {
            let mask = mask_of(s);
            let odd = odd_components_mask(&rows, full & !mask);
            if odd + 2 * k <= r {
                return;
            }
            let excess = odd + 2 * k - r;
            if best.as_ref().is_some_and(|b| b.0 >= excess) {
                return;
            }
            if let Some(inner) = k_matching_in_mask(&rows, mask, k) {
                best = Some((excess, s.to_vec(), odd, inner));
            }
        });
    }
    Ok(match best {
        None => Verdict::holds(None),
        Some((_, set, odd, inner)) => Verdict::fails(Certificate::ViolatingSetS {
            set,
            k,
            criterion: SetCriterion::Extendable,
            odd_components: odd,
            inner_matching: Some(Matching::normalized(inner)),
        }),
    })
}

struct BipartiteSides {
    a: Vec<Vertex>,
    b: Vec<Vertex>,
}

fn plummer_sides(g: &Graph, k: usize) -> Result<std::result::Result<BipartiteSides, Verdict>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let (a, b) = g.side_lists().ok_or(Error::MissingBipartition)?;
    if a.len() != b.len() {
        return Ok(Err(Verdict::fails(Certificate::SideImbalance {
            a_total: a.len(),
            b_total: b.len(),
            targets: None,
        })));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if k >= a.len() {
        return Err(Error::InvalidParams(format!(
            "neighbourhood criterion needs k < |A| = {}, got k = {k}",
            a.len()
        )));
    }
    Ok(Ok(BipartiteSides { a, b }))
}

/// Neighbourhood criterion by enumeration: `|N(X)| ≥ |X| + k` for every
/// nonempty `X ⊆ A` with `|X| ≤ |A| − k`. The certificate is the most
/// violated subset (largest shortfall, then smallest, then lexicographically
/// least).
pub fn plummer_enumeration(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    let sides = match plummer_sides(g, k)? {
        Ok(s) => s,
        Err(v) => return Ok(v),
    };
    let half = sides.a.len();
    if half > limits.exhaustive || g.order() > 64 {
        return Err(Error::OrderTooLarge {
            what: "neighbourhood subset enumeration",
            order: half,
            limit: limits.exhaustive,
        });
    }
    let rows = g.row_masks();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for r in 1..=half - k {
        for_each_combination(&sides.a, r, |x| {
            let nx = x.iter().fold(0u64, |m, &v| m | rows[v]).count_ones() as usize;
            if nx >= r + k {
                return;
            }
            let shortfall = r + k - nx;
            if best.as_ref().is_none_or(|b| shortfall > b.0) {
                best = Some((shortfall, x.to_vec()));
            }
        });
    }
    Ok(match best {
        None => Verdict::holds(None),
        Some((_, x)) => Verdict::fails(surplus_certificate(g, x, k)),
    })
}

fn surplus_certificate(g: &Graph, subset: Vec<Vertex>, k: usize) -> Certificate {
    let set = VertexSet::from_vertices(g.order(), subset.iter().copied()).expect("vertices in range");
    Certificate::ViolatingSubsetX {
        neighborhood: g.neighborhood(&set).to_vec(),
        subset,
        rule: SubsetRule::Surplus { k },
    }
}

/// Neighbourhood criterion via matchings. A violating `X` exists iff there
/// are nonempty `X ⊆ A`, `Z ⊆ B` with no edges between them and
/// `|X| + |Z| ≥ |A| − k + 1` (take `Z = B ∖ N(X)`). For each non-adjacent
/// pair `(a, b)` the largest such `X ∪ Z` containing both is `{a, b}` plus a
/// maximum independent set of the bipartite graph on the vertices adjacent
/// to neither, found by König's theorem.
pub fn plummer_surplus(g: &Graph, k: usize) -> Result<Verdict> {
    let sides = match plummer_sides(g, k)? {
        Ok(s) => s,
        Err(v) => return Ok(v),
    };
    let half = sides.a.len();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for &a in &sides.a {
        for &b in &sides.b {
            if g.has_edge(a, b) {
                continue;
            }
            let left: Vec<Vertex> = sides
                .a
                .iter()
                .copied()
                .filter(|&x| x != a && !g.has_edge(x, b))
                .collect();
            let right: Vec<Vertex> = sides
                .b
                .iter()
                .copied()
                .filter(|&y| y != b && !g.has_edge(a, y))
                .collect();
            let mut index = vec![usize::MAX; g.order()];
            for (i, &y) in right.iter().enumerate() {
                index[y] = i;
            }
            let adj: Vec<Vec<usize>> = left
                .iter()
                .map(|&x| {
                    g.neighbors(x)
                        .filter(|&y| index[y] != usize::MAX)
                        .map(|y| index[y])
                        .collect()
                })
                .collect();
            let hk = HopcroftKarp::run(right.len(), &adj);
            let total = 2 + left.len() + right.len() - hk.size();
            if best.as_ref().is_some_and(|bst| bst.0 >= total) {
                continue;
            }
            let (xs, _) = hk.independent_set(&adj);
            let mut x: Vec<Vertex> = std::iter::once(a).chain(xs.iter().map(|&i| left[i])).collect();
            x.sort_unstable();
            best = Some((total, x));
        }
    }
    Ok(match best {
        Some((total, mut x)) if total + k > half => {
            x.truncate(half - k);
            Verdict::fails(surplus_certificate(g, x, k))
        }
        _ => Verdict::holds(None),
    })
}

/// Neighbourhood criterion for a connected bipartite graph. Both the
/// enumeration (when `|A|` is within the limit) and the matching route run,
/// and their verdicts must agree.
pub fn is_k_extendable_plummer(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    let fast = plummer_surplus(g, k)?;
    let half = g.side_lists().map_or(0, |(a, _)| a.len());
    if half > limits.exhaustive || g.order() > 64 {
        return Ok(fast);
    }
    let slow = plummer_enumeration(g, k, limits)?;
    if slow.holds != fast.holds {
        return Err(Error::OracleDisagreement(format!(
            "subset enumeration says {}, matching route says {}",
            slow.holds, fast.holds
        )));
    }
    Ok(slow)
}
