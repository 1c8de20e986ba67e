use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FmsBound {
    /// `max_v sqrt(R_v)` with `R_v = Σ_{u∈N(v)} d(u)`.
    pub bound: f64,
    /// Lowest-indexed vertex attaining the maximum.
    pub vertex: Vertex,
    pub r_max: usize,
}

/// Upper bound on the spectral radius of a connected graph from the
/// neighbour degree sums.
pub fn fms_bound(g: &Graph) -> Result<FmsBound> {
    if g.order() < 2 {
        return Err(Error::InvalidParams("fms_bound needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let deg = g.degrees();
    let (vertex, r_max) = (0..g.order())
        .map(|v| (v, g.neighbors(v).map(|u| deg[u]).sum::<usize>()))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    Ok(FmsBound {
        bound: (r_max as f64).sqrt(),
        vertex,
        r_max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSumSides {
    /// `Σ_{v∈N(u)} d(v)`.
    pub lhs: usize,
    /// `d(u) + 2e(N(u)) + e(N(u), V ∖ N[u])`.
    pub rhs: usize,
}

impl DegreeSumSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of the neighbour degree-sum identity at `u`, computed
/// independently.
pub fn degree_sum_identity(g: &Graph, u: Vertex) -> Result<DegreeSumSides> {
    let n = g.order();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, order: n });
    }
    let lhs = g.neighbors(u).map(|v| g.degree(v)).sum();
    let nu = g.neighbor_set(u);
    let mut closed = nu.clone();
    closed.insert(u);
    let rest = closed.complement();
    let inside = g.edges_within(&nu);
    let across = g.edges_between(&nu, &rest)?;
    let rhs = g.degree(u) + 2 * inside + across;
    Ok(DegreeSumSides { lhs, rhs })
}

/// `sqrt(m)` for a bipartite graph with at least one edge.
pub fn sqrt_m_bound(g: &Graph) -> Result<f64> {
    if !g.is_bipartitioned() && g.two_coloring().is_none() {
        return Err(Error::MissingBipartition);
    }
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    Ok((g.size() as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fms_equality_cases() {
        let b = fms_bound(&Graph::cycle(7)).unwrap();
        assert_eq!((b.bound, b.vertex, b.r_max), (2.0, 0, 4));
        let b = fms_bound(&Graph::complete_bipartite(2, 5)).unwrap();
        assert!((b.bound - 10f64.sqrt()).abs() < 1e-15);
        let b = fms_bound(&Graph::path(3)).unwrap();
        assert_eq!(b.r_max, 2);
        assert_eq!(b.vertex, 0);
    }

    #[test]
    fn fms_errors() {
        assert_eq!(fms_bound(&Graph::empty(3)), Err(Error::Disconnected));
        assert!(fms_bound(&Graph::empty(1)).is_err());
    }

    #[test]
    fn identity_small_cases() {
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(degree_sum_identity(&star, 0).unwrap(), DegreeSumSides { lhs: 3, rhs: 3 });
        let k5 = Graph::complete(5);
        assert_eq!(degree_sum_identity(&k5, 2).unwrap(), DegreeSumSides { lhs: 16, rhs: 16 });
    }

    #[test]
    fn sqrt_m() {
        assert_eq!(sqrt_m_bound(&Graph::complete_bipartite(4, 4)).unwrap(), 4.0);
        assert_eq!(sqrt_m_bound(&Graph::complete_bipartite(1, 1)).unwrap(), 1.0);
        assert_eq!(sqrt_m_bound(&Graph::empty_bipartite(vec![])), Err(Error::NoEdges));
        assert_eq!(sqrt_m_bound(&Graph::complete(3)), Err(Error::MissingBipartition));
    }
}
