use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spectral_matching::harness::{self, ExperimentConfig, Mode};

#[derive(Parser)]
#[command(name = "spectral-matching", version, about = "Spectral thresholds for matching extendability and regular factors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 line of a family member.
    Construct(Flags),
    /// Spectral radius and upper bounds for graph6 lines.
    Rho(Flags),
    /// Property verdicts with certificates for graph6 lines.
    Check(Flags),
    /// Tightness and counterexample search for a theorem, or a lemma sweep.
    Verify(Flags),
    /// Compare criterion checkers against their oracles.
    CrossCheck(Flags),
    /// Classify a graph6 stream against a theorem's threshold.
    Scan(Flags),
}

#[derive(Args)]
struct Flags {
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    p: Option<String>,
    /// kext-general, kext-bipartite, kfactor-bipartite, kfc-general, hamilton-bipartite
    #[arg(long)]
    family: Option<String>,
    /// t1.1, t1.2, t1.3, t4.3, t4.5, p1, l2.2, l2.3, l2.6
    #[arg(long)]
    theorem: Option<String>,
    /// k-extendable, k-factor, k-factor-critical, hamiltonian, connected-k-factor
    #[arg(long)]
    property: Option<String>,
    #[arg(long)]
    samples: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    jobs: Option<String>,
    /// csv or json
    #[arg(long)]
    format: Option<String>,
    /// key = value file; explicit flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    exhaustive_limit: Option<String>,
    /// graph6 file, one graph per line (default: standard input)
    #[arg(long)]
    input: Option<String>,
}

impl Flags {
    fn pairs(&self) -> Vec<(&'static str, &String)> {
        let all = [
            ("n", &self.n),
            ("k", &self.k),
            ("delta", &self.delta),
            ("s", &self.s),
            ("t", &self.t),
            ("p", &self.p),
            ("family", &self.family),
            ("theorem", &self.theorem),
            ("property", &self.property),
            ("samples", &self.samples),
            ("seed", &self.seed),
            ("tol", &self.tol),
            ("jobs", &self.jobs),
            ("format", &self.format),
            ("exhaustive-limit", &self.exhaustive_limit),
            ("input", &self.input),
        ];
        all.into_iter().filter_map(|(k, v)| v.as_ref().map(|v| (k, v))).collect()
    }
}

fn build(mode: Mode, flags: &Flags) -> Result<ExperimentConfig, String> {
    let mut cfg = ExperimentConfig::new(mode);
    if let Some(path) = &flags.config {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        cfg.apply_file(&text).map_err(|e| e.to_string())?;
    }
    for (key, value) in flags.pairs() {
        cfg.set(key, value).map_err(|e| e.to_string())?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mode, flags) = match &cli.command {
        Command::Construct(f) => (Mode::Construct, f),
        Command::Rho(f) => (Mode::Rho, f),
        Command::Check(f) => (Mode::Check, f),
        Command::Verify(f) => (Mode::Verify, f),
        Command::CrossCheck(f) => (Mode::CrossCheck, f),
        Command::Scan(f) => (Mode::Scan, f),
    };
    let cfg = match build(mode, flags) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(harness::EXIT_USAGE as u8);
        }
    };
    let code = harness::run(&cfg, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
