//! Odd-set, neighbourhood and definitional extendability checks with their
//! certificates.

use spectral_matching::families::{extremal_kext_bipartite, extremal_kext_general};
use spectral_matching::matchfactor::{
    is_k_extendable_chen, is_k_extendable_definitional, plummer_enumeration, plummer_surplus, Limits, Verdict,
};
use spectral_matching::Graph;

fn show(label: &str, g: &Graph, v: &Verdict) {
    let cert = v
        .certificate
        .as_ref()
        .map(|c| serde_json::to_string(c).unwrap())
        .unwrap_or_default();
    let valid = v.validate(g).map(|_| "ok".to_string()).unwrap_or_else(|e| e);
    println!("  {label:<14} holds={:<5} certificate={cert} validates={valid}", v.holds);
}

fn main() -> spectral_matching::Result<()> {
    let lim = Limits::default();
    let general = extremal_kext_general(10, 1, 2)?;
    println!("K2 v (K7 + K1), n = 10, k = 1");
    show("odd sets", &general, &is_k_extendable_chen(&general, 1, &lim)?);
    show("definition", &general, &is_k_extendable_definitional(&general, 1)?);

    let bip = extremal_kext_bipartite(10, 1, 1)?;
    println!("K1,3 v1 K4,2, n = 10, k = 1");
    show("enumeration", &bip, &plummer_enumeration(&bip, 1, &lim)?);
    show("matching route", &bip, &plummer_surplus(&bip, 1)?);
    show("definition", &bip, &is_k_extendable_definitional(&bip, 1)?);

    let cube = Graph::complete_bipartite(3, 3);
    println!("K3,3, k = 2");
    show("odd sets", &cube, &is_k_extendable_chen(&cube, 2, &lim)?);
    show("enumeration", &cube, &plummer_enumeration(&cube, 2, &lim)?);
    Ok(())
}
