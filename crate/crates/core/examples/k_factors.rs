//! k-factors of balanced bipartite graphs: subset criterion, flow, and the
//! split of a k-factor into k edge-disjoint perfect matchings.

use spectral_matching::families::extremal_kfactor;
use spectral_matching::matchfactor::{
    decompose_edge_disjoint_pms, find_k_factor_flow, has_f_factor_ore, Certificate, FactorSpec, Limits,
};
use spectral_matching::{Graph, Side};

fn main() -> spectral_matching::Result<()> {
    let ext = extremal_kfactor(8, 2)?;
    let ore = has_f_factor_ore(&ext, &FactorSpec::constant(8, 2), &Limits::default())?;
    let flow = find_k_factor_flow(&ext, 2)?;
    println!("extremal (8, 2): subset criterion {} flow {}", ore.holds, flow.holds);
    println!("  {}", serde_json::to_string(&ore.certificate).unwrap());

    let g = Graph::complete_bipartite(5, 5);
    let v = find_k_factor_flow(&g, 3)?;
    let Some(Certificate::FactorSubgraph { edges, .. }) = v.certificate else {
        unreachable!("K5,5 has a 3-factor");
    };
    let sides: Vec<Side> = g.sides().unwrap().to_vec();
    let factor = Graph::from_edges(10, &edges)?.with_bipartition(sides)?;
    let pms = decompose_edge_disjoint_pms(&factor)?;
    println!("3-factor of K5,5 with {} edges splits into:", edges.len());
    for m in &pms {
        println!("  {:?}", m.edges());
    }
    Certificate::MatchingList { matchings: pms }
        .validate(&factor)
        .expect("disjoint perfect matchings");
    Ok(())
}
