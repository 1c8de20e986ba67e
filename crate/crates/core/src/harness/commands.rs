use super::config::{ExperimentConfig, Property};
use super::par_map;
use super::report::{Report, RowVerdict, SpectrumReport, SpectrumRow, SpectrumSummary, VerdictRow};
use super::verify::{certificate_value, k_factor_checked, limits_for, skipped_row, TheoremSetup};
use crate::error::{Error, Result};
use crate::families::{construct, recognize, threshold_rho, Family, FamilyParams};
use crate::graph::Graph;
use crate::graph6;
use crate::matchfactor::{
    connected_k_factor_search, hamiltonian_cycle, is_k_extendable_chen, is_k_extendable_definitional,
    is_k_extendable_plummer, is_k_factor_critical, ConnectedFactor, Limits, Verdict,
};
use crate::spectra::{degree_sum_identity, fms_bound, spectral_radius_default, sqrt_m_bound};

/// Slack allowed when comparing `ρ` against the upper bounds.
const BOUND_SLACK: f64 = 1e-9;

/// Family parameters from the config; `k` defaults to 0 for families that
/// do not use it.
pub fn family_params(cfg: &ExperimentConfig) -> Result<FamilyParams> {
    let n = cfg.require("n", cfg.n)?;
    let mut p = FamilyParams::new(n, cfg.k.unwrap_or(0));
    p.delta = cfg.delta;
    p.s = cfg.s;
    Ok(p)
}

fn family(cfg: &ExperimentConfig) -> Result<Family> {
    cfg.family
        .ok_or_else(|| Error::InvalidParams("--family is required".into()))
}

/// The graph6 line of a family member.
pub fn cmd_construct(cfg: &ExperimentConfig) -> Result<String> {
    let g = construct(family(cfg)?, &family_params(cfg)?)?;
    graph6::encode(&g)
}

/// Graph6 lines, with blank lines dropped and each line's 0-based position
/// kept. Decoding errors are returned per line.
pub fn parse_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i, graph6::decode(l.trim())))
        .collect()
}

pub fn cmd_rho(cfg: &ExperimentConfig, graphs: Vec<Graph>, malformed: usize) -> Result<SpectrumReport> {
    cfg.validate()?;
    let rows = par_map(cfg.jobs, graphs, |g| spectrum_row(&g));
    let rows: Vec<SpectrumRow> = rows.into_iter().collect::<Result<_>>()?;
    let summary = SpectrumSummary {
        rows: rows.len(),
        malformed,
        identity_failures: rows.iter().filter(|r| !r.identity).count(),
        bound_violations: rows
            .iter()
            .filter(|r| {
                r.fms_bound.is_some_and(|b| r.rho > b + BOUND_SLACK)
                    || r.sqrt_m.is_some_and(|b| r.rho > b + BOUND_SLACK)
            })
            .count(),
    };
    Ok(SpectrumReport {
        mode: "rho".into(),
        rows,
        summary,
    })
}

pub fn spectrum_row(g: &Graph) -> Result<SpectrumRow> {
    let rho = spectral_radius_default(g)?.rho;
    let fms = fms_bound(g).ok();
    let sqrt_m = if g.two_coloring().is_some() && g.size() > 0 {
        Some(sqrt_m_bound(g)?)
    } else {
        None
    };
    let mut identity = true;
    for u in 0..g.order() {
        identity &= degree_sum_identity(g, u)?.holds();
    }
    Ok(SpectrumRow {
        graph: graph6::encode(g)?,
        rho,
        fms_bound: fms.map(|f| f.bound),
        fms_vertex: fms.map(|f| f.vertex),
        sqrt_m,
        identity,
    })
}

fn needs_k(cfg: &ExperimentConfig, property: Property) -> Result<usize> {
    match property {
        Property::Hamiltonian => Ok(cfg.k.unwrap_or(2)),
        _ => cfg.require("k", cfg.k),
    }
}

/// Evaluates a property. Bipartite inputs get the bipartite checkers;
/// `Ok(None)` means the property could not be decided within the limits.
pub fn evaluate_property(g: &Graph, property: Property, k: usize, limits: &Limits) -> Result<Option<Verdict>> {
    let bip = g.ensure_bipartition();
    let balanced_connected = bip
        .as_ref()
        .and_then(|b| b.side_lists())
        .is_some_and(|(a, b)| a.len() == b.len() && k < a.len())
        && g.is_connected();
    match property {
        Property::KExtendable => {
            if balanced_connected {
                let b = bip.expect("bipartite");
                return is_k_extendable_plummer(&b, k, limits).map(Some);
            }
            if g.order() <= limits.exhaustive.min(64) {
                is_k_extendable_chen(g, k, limits).map(Some)
            } else {
                is_k_extendable_definitional(g, k).map(Some)
            }
        }
        Property::KFactor => {
            let b = bip.ok_or_else(|| Error::InvalidParams("the k-factor checker needs a bipartite graph".into()))?;
            k_factor_checked(&b, k, limits).map(Some)
        }
        Property::KFactorCritical => is_k_factor_critical(g, k, limits).map(Some),
        Property::Hamiltonian => hamiltonian_cycle(g, limits).map(Some),
        Property::ConnectedKFactor => {
            let b = bip.ok_or_else(|| {
                Error::InvalidParams("the connected factor search needs a bipartite graph".into())
            })?;
            Ok(match connected_k_factor_search(&b, k, limits)? {
                ConnectedFactor::Found(edges) => Some(Verdict::holds(Some(
                    crate::matchfactor::Certificate::FactorSubgraph {
                        edges,
                        targets: vec![k; g.order()],
                    },
                ))),
                ConnectedFactor::NotFound => Some(Verdict {
                    holds: false,
                    certificate: None,
                }),
                ConnectedFactor::Unknown => None,
            })
        }
    }
}

/// Property verdicts with certificates, one row per input graph. When a
/// family is given its threshold fills `rho_star` and `margin`.
pub fn cmd_check(cfg: &ExperimentConfig, graphs: Vec<Graph>) -> Result<Report> {
    cfg.validate()?;
    let property = cfg
        .property
        .ok_or_else(|| Error::InvalidParams("--property is required".into()))?;
    let k = needs_k(cfg, property)?;
    let limits = limits_for(cfg);
    let reference = match cfg.family {
        Some(f) => {
            let p = family_params(cfg)?;
            Some((f, p, threshold_rho(f, &p)?.rho_star))
        }
        None => None,
    };
    let rows = par_map(cfg.jobs, graphs, |g| {
        let id = graph6::encode(&g).unwrap_or_default();
        let rho = (g.order() > 0)
            .then(|| spectral_radius_default(&g).ok().map(|r| r.rho))
            .flatten();
        let verdict = match evaluate_property(&g, property, k, &limits) {
            Ok(Some(v)) => v,
            Ok(None) => return skipped_row(id, "search budget exhausted"),
            Err(e) => return skipped_row(id, &e.to_string()),
        };
        let (rho_star, extremal) = match &reference {
            Some((f, p, r)) => (Some(*r), recognize(*f, p, &g)),
            None => (None, false),
        };
        VerdictRow {
            graph: id,
            rho,
            rho_star,
            margin: rho.zip(rho_star).map(|(a, b)| a - b),
            verdict: if verdict.holds {
                RowVerdict::Holds
            } else {
                RowVerdict::Fails
            },
            certificate: certificate_value(&verdict),
            extremal,
        }
    });
    Ok(Report::new(&format!("check {}", property.name()), rows, cfg.tol))
}

/// Classifies a stream of graphs against a theorem's threshold. Graphs
/// outside the hypothesis class are marked skipped.
pub fn cmd_scan(cfg: &ExperimentConfig, graphs: Vec<Graph>, malformed: usize) -> Result<Report> {
    cfg.validate()?;
    let theorem = cfg
        .theorem
        .ok_or_else(|| Error::InvalidParams("--theorem is required".into()))?;
    if theorem.is_lemma() {
        return Err(Error::InvalidParams(format!("{theorem} has no graph threshold to scan against")));
    }
    let setup = TheoremSetup::new(theorem, cfg)?;
    let rows = par_map(cfg.jobs, graphs, |g| {
        let g = if setup.class.bipartite {
            match g.ensure_bipartition() {
                Some(b) => b,
                None => return outside(&g),
            }
        } else {
            g
        };
        if !setup.class.contains(&g) {
            return outside(&g);
        }
        setup.classify(&g)
    });
    let mut report = Report::new(&format!("scan {theorem}"), rows, cfg.tol);
    report.summary.malformed = malformed;
    report.summary.notes.extend(setup.notes.iter().cloned());
    Ok(report)
}

fn outside(g: &Graph) -> VerdictRow {
    skipped_row(graph6::encode(g).unwrap_or_default(), "outside the hypothesis class")
}
