//! Builds every extremal family member, prints its threshold and shows that
//! the theorem's property fails on it.

use spectral_matching::families::{construct, recognize, threshold_rho, Family, FamilyParams};
use spectral_matching::graph6;
use spectral_matching::harness::{evaluate_property, Property};
use spectral_matching::matchfactor::Limits;

fn main() -> spectral_matching::Result<()> {
    let cases = [
        (Family::KextGeneral, FamilyParams::new(10, 1).with_delta(2), Property::KExtendable),
        (Family::KextBipartite, FamilyParams::new(10, 1).with_s(1), Property::KExtendable),
        (Family::KfactorBipartite, FamilyParams::new(8, 2), Property::KFactor),
        (Family::KfcGeneral, FamilyParams::new(15, 1).with_delta(2), Property::KFactorCritical),
        (Family::HamiltonBipartite, FamilyParams::new(8, 2), Property::Hamiltonian),
    ];
    let limits = Limits::default();
    for (family, params, property) in cases {
        let g = construct(family, &params)?;
        let t = threshold_rho(family, &params)?;
        let verdict = evaluate_property(&g, property, params.k, &limits)?.expect("decided");
        println!(
            "{family:<20} n={:<3} m={:<3} rho*={:.10} dense={:.10} {}={} recognized={} {}",
            g.order(),
            g.size(),
            t.rho_star,
            t.dense_rho.unwrap_or(f64::NAN),
            property.name(),
            verdict.holds,
            recognize(family, &params, &g),
            graph6::encode(&g)?,
        );
    }
    Ok(())
}
