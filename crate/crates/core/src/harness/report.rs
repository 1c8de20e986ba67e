use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use super::config::Format;

/// Row classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowVerdict {
    /// Below the threshold, or above it with the property holding.
    Consistent,
    /// Property fails at the threshold and the graph is the extremal member.
    ExtremalHit,
    /// Confirmed violation: margin above tolerance, property fails, the
    /// certificate re-validates and the graph is not extremal.
    Counterexample,
    /// Could not be classified at the requested tolerance.
    Borderline,
    Holds,
    Fails,
    Skipped,
    /// Exploration rows carry no correctness claim.
    Explored,
}

impl RowVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RowVerdict::Consistent => "consistent",
            RowVerdict::ExtremalHit => "extremal-hit",
            RowVerdict::Counterexample => "counterexample",
            RowVerdict::Borderline => "borderline",
            RowVerdict::Holds => "holds",
            RowVerdict::Fails => "fails",
            RowVerdict::Skipped => "skipped",
            RowVerdict::Explored => "explored",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictRow {
    /// graph6 string, or a descriptive id for closed-form lemma rows.
    pub graph: String,
    pub rho: Option<f64>,
    pub rho_star: Option<f64>,
    pub margin: Option<f64>,
    pub verdict: RowVerdict,
    pub certificate: Option<Value>,
    pub extremal: bool,
}

#[derive(Serialize)]
struct CsvVerdictRow<'a> {
    graph: &'a str,
    rho: Option<f64>,
    rho_star: Option<f64>,
    margin: Option<f64>,
    verdict: &'static str,
    certificate: String,
    extremal: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub consistent: usize,
    pub extremal_hit: usize,
    pub counterexample: usize,
    pub borderline: usize,
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub explored: usize,
    /// Input lines that failed to parse.
    pub malformed: usize,
    /// Row indices with `|margin| ≤ tol`.
    pub at_threshold: Vec<usize>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub mode: String,
    pub rows: Vec<VerdictRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(mode: &str, rows: Vec<VerdictRow>, tol: f64) -> Report {
        let mut summary = Summary {
            rows: rows.len(),
            ..Summary::default()
        };
        for (i, row) in rows.iter().enumerate() {
            let slot = match row.verdict {
                RowVerdict::Consistent => &mut summary.consistent,
                RowVerdict::ExtremalHit => &mut summary.extremal_hit,
                RowVerdict::Counterexample => &mut summary.counterexample,
                RowVerdict::Borderline => &mut summary.borderline,
                RowVerdict::Holds => &mut summary.holds,
                RowVerdict::Fails => &mut summary.fails,
                RowVerdict::Skipped => &mut summary.skipped,
                RowVerdict::Explored => &mut summary.explored,
            };
            *slot += 1;
            if row.rho_star.is_some() && row.margin.is_some_and(|m| m.abs() <= tol) {
                summary.at_threshold.push(i);
            }
        }
        Report {
            mode: mode.to_string(),
            rows,
            summary,
        }
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &VerdictRow> {
        self.rows.iter().filter(|r| r.verdict == RowVerdict::Counterexample)
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.counterexample > 0 {
            1
        } else {
            0
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => write_json(self, out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                for row in &self.rows {
                    w.serialize(CsvVerdictRow {
                        graph: &row.graph,
                        rho: row.rho,
                        rho_star: row.rho_star,
                        margin: row.margin,
                        verdict: row.verdict.as_str(),
                        certificate: row.certificate.as_ref().map(Value::to_string).unwrap_or_default(),
                        extremal: row.extremal,
                    })?;
                }
                if self.rows.is_empty() {
                    w.write_record(["graph", "rho", "rho_star", "margin", "verdict", "certificate", "extremal"])?;
                }
                w.flush()?;
                writeln!(err, "{}", serde_json::to_string(&self.summary)?)
            }
        }
    }
}

/// Output of the `rho` mode.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub graph: String,
    pub rho: f64,
    pub fms_bound: Option<f64>,
    pub fms_vertex: Option<usize>,
    /// Only reported for bipartite graphs with at least one edge.
    pub sqrt_m: Option<f64>,
    /// Whether the neighbourhood degree-sum identity held at every vertex.
    pub identity: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub rows: usize,
    pub malformed: usize,
    pub identity_failures: usize,
    pub bound_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub mode: String,
    pub rows: Vec<SpectrumRow>,
    pub summary: SpectrumSummary,
}

impl SpectrumReport {
    pub fn write(&self, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => write_json(self, out),
            Format::Csv => {
                write_csv(&self.rows, &["graph", "rho", "fms_bound", "fms_vertex", "sqrt_m", "identity"], out)?;
                writeln!(err, "{}", serde_json::to_string(&self.summary)?)
            }
        }
    }
}

/// One line of the cross-check table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrossCheckRow {
    pub check: String,
    pub graphs: usize,
    pub comparisons: usize,
    pub disagreements: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CrossCheckSummary {
    pub graphs: usize,
    pub exhaustive_graphs: usize,
    pub sampled_graphs: usize,
    pub disagreements: usize,
    /// One line per disagreement, with both verdicts and certificates.
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub mode: String,
    pub rows: Vec<CrossCheckRow>,
    pub summary: CrossCheckSummary,
}

impl CrossCheckReport {
    pub fn exit_code(&self) -> i32 {
        if self.summary.disagreements > 0 {
            1
        } else {
            0
        }
    }

    pub fn write(&self, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
        for d in &self.summary.details {
            writeln!(err, "disagreement: {d}")?;
        }
        match format {
            Format::Json => write_json(self, out),
            Format::Csv => {
                write_csv(&self.rows, &["check", "graphs", "comparisons", "disagreements"], out)?;
                let s = &self.summary;
                writeln!(
                    err,
                    "{{\"graphs\":{},\"exhaustive_graphs\":{},\"sampled_graphs\":{},\"disagreements\":{}}}",
                    s.graphs, s.exhaustive_graphs, s.sampled_graphs, s.disagreements
                )
            }
        }
    }
}

fn write_csv<T: Serialize>(rows: &[T], header: &[&str], out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(header)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}
