//! Spectral radius by power iteration next to the full Jacobi spectrum, and
//! the degree-based upper bounds.

use spectral_matching::spectra::{
    degree_sum_identity, fms_bound, full_spectrum, spectral_radius_default, sqrt_m_bound, SymMatrix,
};
use spectral_matching::Graph;

fn main() -> spectral_matching::Result<()> {
    let graphs = [
        ("K5", Graph::complete(5)),
        ("K4,4", Graph::complete_bipartite(4, 4)),
        ("P4", Graph::path(4)),
        ("C6", Graph::cycle(6)),
        ("K1,3 + K3", Graph::disjoint_union(&Graph::complete_bipartite(1, 3), &Graph::complete(3))),
    ];
    for (name, g) in graphs {
        let power = spectral_radius_default(&g)?;
        let spectrum = full_spectrum(&SymMatrix::adjacency(&g), 1e-10)?;
        let fms = fms_bound(&g).map(|b| format!("{:.6}", b.bound)).unwrap_or_else(|e| format!("({e})"));
        let sqrt_m = sqrt_m_bound(&g).map(|b| format!("{b:.6}")).unwrap_or_else(|_| "-".into());
        let identity = (0..g.order()).all(|u| degree_sum_identity(&g, u).is_ok_and(|s| s.holds()));
        println!(
            "{name:<10} rho={:.10} ({} matvecs) jacobi={:.10} fms={fms} sqrt_m={sqrt_m} identity={identity}",
            power.rho, power.matvecs, spectrum[0]
        );
    }
    Ok(())
}
