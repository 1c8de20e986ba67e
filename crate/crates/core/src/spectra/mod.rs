//! Adjacency spectra: a dense symmetric eigensolver, the spectral radius with
//! its Perron vector, equitable partitions and their quotient matrices, the
//! quartic characteristic polynomial of the bipartite-join family, and the
//! degree-based upper bounds on the spectral radius.

mod bounds;
mod equitable;
mod jacobi;
mod power;
mod quartic;

pub use bounds::{degree_sum_identity, fms_bound, sqrt_m_bound, DegreeSumSides, FmsBound};
pub use equitable::{quotient, refine_equitable, Partition, QuotientMatrix};
pub use jacobi::{full_spectrum, jacobi_eigen, Eigen};
pub use power::{spectral_radius, spectral_radius_default, SpectralResult, MATVEC_BUDGET};
pub use quartic::{charpoly_b_s, BipartiteQuartic};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default residual tolerance for a matrix of the given dimension.
pub fn default_tol(dim: usize) -> f64 {
    if dim <= 256 {
        1e-10
    } else {
        1e-8
    }
}

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<SymMatrix> {
        if data.len() != dim * dim {
            return Err(Error::InvalidParams(format!(
                "expected {} entries for dimension {dim}, got {}",
                dim * dim,
                data.len()
            )));
        }
        for i in 0..dim {
            for j in 0..dim {
                let x = data[i * dim + j];
                if !x.is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
                if j > i && x != data[j * dim + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { dim, data })
    }

    pub fn zeros(dim: usize) -> SymMatrix {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    /// The adjacency matrix `A(G)`.
    pub fn adjacency(g: &Graph) -> SymMatrix {
        let n = g.order();
        let mut m = SymMatrix::zeros(n);
        for (u, v) in g.edges() {
            m.data[u * n + v] = 1.0;
            m.data[v * n + u] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}
