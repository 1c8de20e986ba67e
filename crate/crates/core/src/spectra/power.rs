use serde::Serialize;

use super::default_tol;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Total matrix-vector products allowed for one spectral-radius call.
pub const MATVEC_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    /// Largest adjacency eigenvalue.
    pub rho: f64,
    /// Unit eigenvector for `rho`, supported on the dominant component.
    pub perron: Vec<f64>,
    /// `‖A x − ρ x‖∞`.
    pub residual: f64,
    pub tol: f64,
    pub matvecs: usize,
}

pub fn spectral_radius_default(g: &Graph) -> Result<SpectralResult> {
    spectral_radius(g, default_tol(g.order()))
}

/// Largest adjacency eigenvalue by power iteration on `A + ΔI` (Δ the
/// maximum degree of the component) from the all-ones vector, run per
/// component; the maximum over components is returned.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidParams("spectral radius of the empty graph".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
    }
    let adj = g.adjacency_lists();
    let mut best: Option<(f64, Vec<usize>, Vec<f64>, f64)> = None;
    let mut matvecs = 0;

    for comp in g.components() {
        let (rho, x, residual) = if comp.len() == 1 {
            (0.0, vec![1.0], 0.0)
        } else {
            component_radius(&adj, &comp, tol, &mut matvecs)?
        };
        // Ties keep the earliest component.
        if best.as_ref().is_none_or(|b| rho > b.0) {
            best = Some((rho, comp, x, residual));
        }
    }

    let (rho, comp, local, residual) = best.expect("non-empty graph has a component");
    let mut perron = vec![0.0; n];
    for (&v, &xv) in comp.iter().zip(&local) {
        perron[v] = xv;
    }
    Ok(SpectralResult {
        rho,
        perron,
        residual,
        tol,
        matvecs,
    })
}

fn component_radius(
    adj: &[Vec<usize>],
    comp: &[usize],
    tol: f64,
    matvecs: &mut usize,
) -> Result<(f64, Vec<f64>, f64)> {
    let c = comp.len();
    let mut local = vec![usize::MAX; adj.len()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let ladj: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| adj[v].iter().map(|&w| local[w]).collect())
        .collect();
    let shift = ladj.iter().map(Vec::len).max().unwrap_or(0) as f64;

    let mut x = vec![1.0 / (c as f64).sqrt(); c];
    let mut ax = vec![0.0; c];
    let mut best_residual = f64::INFINITY;
    loop {
        if *matvecs >= MATVEC_BUDGET {
            return Err(Error::NotConverged {
                iterations: *matvecs,
                residual: best_residual,
            });
        }
        *matvecs += 1;
        for (i, nb) in ladj.iter().enumerate() {
            ax[i] = nb.iter().map(|&j| x[j]).sum();
        }
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| (axi - rho * xi).abs())
            .fold(0.0, f64::max);
        best_residual = best_residual.min(residual);
        if residual <= tol {
            return Ok((rho, x, residual));
        }
        let mut norm = 0.0;
        for i in 0..c {
            x[i] = ax[i] + shift * x[i];
            norm += x[i] * x[i];
        }
        let norm = norm.sqrt();
        for xi in &mut x {
            *xi /= norm;
        }
    }
}
