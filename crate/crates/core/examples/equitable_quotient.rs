//! Coarsest equitable refinement of a family member and the quotient
//! eigenvalues inside the full spectrum.

use spectral_matching::families::{construct, Family, FamilyParams};
use spectral_matching::spectra::{full_spectrum, quotient, refine_equitable, Partition, SymMatrix};

fn main() -> spectral_matching::Result<()> {
    let g = construct(Family::KextBipartite, &FamilyParams::new(10, 1).with_s(1))?;
    let p = refine_equitable(&g, &Partition::trivial(g.order()))?;
    println!("classes: {:?}", p.classes());
    let q = quotient(&g, &p)?;
    for row in q.entries() {
        println!("  {row:?}");
    }
    let small = q.spectrum(1e-12)?;
    let full = full_spectrum(&SymMatrix::adjacency(&g), 1e-10)?;
    println!("quotient spectrum: {small:.8?}");
    println!("full spectrum:     {full:.8?}");
    for l in small {
        let gap = full.iter().map(|x| (x - l).abs()).fold(f64::INFINITY, f64::min);
        println!("  {l:+.10} found within {gap:.1e}");
    }
    Ok(())
}
