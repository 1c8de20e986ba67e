//! Factor-criticality by both routes, Hamilton cycles, and the budgeted
//! connected k-factor search.

use spectral_matching::families::{extremal_hamilton, extremal_kfc};
use spectral_matching::matchfactor::{
    connected_k_factor_search, hamiltonian_cycle, k_factor_critical_definitional, k_factor_critical_odd_sets,
    Limits,
};
use spectral_matching::Graph;

fn main() -> spectral_matching::Result<()> {
    let lim = Limits::default();
    let kfc = extremal_kfc(15, 1, 2)?;
    let sets = k_factor_critical_odd_sets(&kfc, 1, &lim)?;
    let def = k_factor_critical_definitional(&kfc, 1, &lim)?;
    println!("K2 v (K11 + 2K1): odd sets {} definition {}", sets.holds, def.holds);
    println!("  {}", serde_json::to_string(&sets.certificate).unwrap());
    println!("  {}", serde_json::to_string(&def.certificate).unwrap());

    let ham = extremal_hamilton(8)?;
    println!("K4,4 minus a 3-star hamiltonian: {}", hamiltonian_cycle(&ham, &lim)?.holds);
    let c = hamiltonian_cycle(&Graph::complete_bipartite(4, 4), &lim)?;
    println!("K4,4 cycle: {}", serde_json::to_string(&c.certificate).unwrap());

    for k in [2, 3] {
        let found = connected_k_factor_search(&Graph::complete_bipartite(5, 5), k, &lim)?;
        println!("connected {k}-factor of K5,5: {}", serde_json::to_string(&found).unwrap());
    }
    Ok(())
}
