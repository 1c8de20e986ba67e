//! Tightness row and a small counterexample search for the k-factor
//! threshold, run through the library rather than the command line.

use spectral_matching::harness::{verify, ExperimentConfig, Mode, RowVerdict, Theorem};

fn main() -> spectral_matching::Result<()> {
    let mut cfg = ExperimentConfig::new(Mode::Verify);
    cfg.theorem = Some(Theorem::T13);
    cfg.n = Some(8);
    cfg.k = Some(2);
    cfg.samples = 2000;
    cfg.seed = 7;
    let report = verify(&cfg)?;
    let first = &report.rows[0];
    println!(
        "extremal row: rho={:.10} rho*={:.10} verdict={}",
        first.rho.unwrap(),
        first.rho_star.unwrap(),
        first.verdict.as_str()
    );
    let above = report
        .rows
        .iter()
        .filter(|r| r.margin.is_some_and(|m| m > cfg.tol))
        .count();
    println!("{} graphs sampled, {above} strictly above the threshold", report.rows.len() - 1);
    println!("{}", serde_json::to_string(&report.summary).unwrap());
    assert!(report.rows.iter().all(|r| r.verdict != RowVerdict::Counterexample));

    // Lemma sweeps read n, k and s as grid bounds.
    cfg.theorem = Some(Theorem::L26);
    cfg.n = None;
    cfg.k = None;
    let sweep = verify(&cfg)?;
    let tightest = sweep
        .rows
        .iter()
        .min_by(|a, b| a.margin.partial_cmp(&b.margin).unwrap())
        .unwrap();
    println!(
        "monotonicity sweep: {} instances, smallest margin {:.3e} at {}",
        sweep.rows.len(),
        tightest.margin.unwrap(),
        tightest.graph
    );
    Ok(())
}
