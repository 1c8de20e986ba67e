use serde_json::{json, Value};

use super::config::{ExperimentConfig, Theorem};
use super::par_map;
use super::report::{Report, RowVerdict, VerdictRow};
use super::sample::{graph_rng, GraphClass};
use crate::error::{Error, Result};
use crate::families::{
    bipartite_join_family, construct, kfc_order_bound, recognize, threshold_f, threshold_rho, Family,
    FamilyParams,
};
use crate::graph::Graph;
use crate::graph6;
use crate::matchfactor::{
    connected_k_factor_search, find_k_factor_flow, hamiltonian_cycle, has_f_factor_ore, is_k_extendable_chen,
    is_k_extendable_definitional, is_k_extendable_plummer, is_k_factor_critical, FactorSpec, Limits, Verdict,
};
use crate::spectra::{charpoly_b_s, default_tol, spectral_radius, QuotientMatrix};

/// Lemma rows need a strictly positive margin above this.
pub const LEMMA_MARGIN: f64 = 1e-9;

/// Closed-form and dense routes must agree this closely.
pub const ROUTE_AGREEMENT: f64 = 1e-8;

/// Eigen tolerance for re-checking a candidate counterexample.
pub fn tightened_tol(n: usize, tol: f64) -> f64 {
    default_tol(n).min(tol / 100.0).max(1e-13)
}

pub(crate) fn limits_for(cfg: &ExperimentConfig) -> Limits {
    Limits {
        exhaustive: cfg.exhaustive_limit,
        ..Limits::default()
    }
}

fn hypothesis(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(msg()))
    }
}

pub fn verify(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let theorem = cfg
        .theorem
        .ok_or_else(|| Error::InvalidParams("--theorem is required".into()))?;
    match theorem {
        Theorem::L22 => Ok(lemma_2_2(cfg)),
        Theorem::L23 => lemma_2_3(cfg),
        Theorem::L26 => lemma_2_6(cfg),
        _ => {
            let setup = TheoremSetup::new(theorem, cfg)?;
            Ok(setup.run(cfg))
        }
    }
}

/// Everything a theorem sub-mode needs to classify one graph.
pub struct TheoremSetup {
    pub theorem: Theorem,
    pub family: Family,
    pub params: FamilyParams,
    pub class: GraphClass,
    pub extremal: Graph,
    pub rho_star: f64,
    pub limits: Limits,
    pub tol: f64,
    pub notes: Vec<String>,
}

impl TheoremSetup {
    /// Checks the theorem's hypotheses on the parameters and computes the
    /// threshold.
    pub fn new(theorem: Theorem, cfg: &ExperimentConfig) -> Result<TheoremSetup> {
        let family = theorem
            .family()
            .ok_or_else(|| Error::InvalidParams(format!("{theorem} is not a theorem sub-mode")))?;
        let limits = limits_for(cfg);
        let n = cfg.require("n", cfg.n)?;
        let mut notes = Vec::new();
        let (params, class) = match theorem {
            Theorem::T11 => {
                let k = cfg.require("k", cfg.k)?;
                let delta = cfg.require("delta", cfg.delta)?;
                hypothesis(k >= 1, || "k >= 1".into())?;
                hypothesis(delta >= 2 * k, || format!("delta >= 2k (delta = {delta}, k = {k})"))?;
                hypothesis(n % 2 == 0, || format!("n even (n = {n})"))?;
                let f = threshold_f(k, delta);
                hypothesis(n >= f, || format!("n >= F(k, delta) = {f} (n = {n})"))?;
                if delta == 2 * k {
                    notes.push(format!(
                        "delta = 2k = {delta}: boundary case, the two-clique comparison is only stated for delta >= 2k + 1"
                    ));
                }
                let class = GraphClass {
                    order: n,
                    bipartite: false,
                    connected: true,
                    min_degree: Some(delta),
                };
                (FamilyParams::new(n, k).with_delta(delta), class)
            }
            Theorem::T12 => {
                let k = cfg.require("k", cfg.k)?;
                let delta = cfg.require("delta", cfg.delta)?;
                hypothesis(n % 2 == 0, || format!("n even (n = {n})"))?;
                hypothesis(k >= 1 && k < n / 2, || format!("1 <= k <= n/2 - 1 (k = {k}, n = {n})"))?;
                hypothesis(delta >= 1, || "delta >= 1".into())?;
                hypothesis(n >= 4 * delta + 2 * k + 2, || {
                    format!("n >= 4delta + 2k + 2 = {} (n = {n})", 4 * delta + 2 * k + 2)
                })?;
                notes.push("sampled graphs are connected; the neighbourhood checker requires it".into());
                let class = GraphClass {
                    order: n,
                    bipartite: true,
                    connected: true,
                    min_degree: Some(delta),
                };
                (FamilyParams::new(n, k).with_s(delta), class)
            }
            Theorem::T13 | Theorem::P1 => {
                let k = cfg.require("k", cfg.k)?;
                hypothesis(n % 2 == 0, || format!("n even (n = {n})"))?;
                let low = if theorem == Theorem::P1 { 3 } else { 2 };
                hypothesis(k >= low && k < n / 2, || format!("{low} <= k <= n/2 - 1 (k = {k}, n = {n})"))?;
                if theorem == Theorem::P1 {
                    hypothesis(n <= limits.connected_factor, || {
                        format!("n <= {} for the connected factor search (n = {n})", limits.connected_factor)
                    })?;
                    notes.push("exploration only: rows record what the search found and assert nothing".into());
                }
                let class = GraphClass {
                    order: n,
                    bipartite: true,
                    connected: true,
                    min_degree: None,
                };
                (FamilyParams::new(n, k), class)
            }
            Theorem::T43 => {
                hypothesis(n % 2 == 0 && n >= 8, || format!("n even and n >= 8 (n = {n})"))?;
                let limit = limits.hamilton.min(24);
                if n > limit {
                    return Err(Error::OrderTooLarge {
                        what: "hamilton cycle search",
                        order: n,
                        limit,
                    });
                }
                let class = GraphClass {
                    order: n,
                    bipartite: true,
                    connected: false,
                    min_degree: None,
                };
                (FamilyParams::new(n, 2), class)
            }
            Theorem::T45 => {
                let k = cfg.require("k", cfg.k)?;
                let delta = cfg.require("delta", cfg.delta)?;
                hypothesis(k >= 1, || "k >= 1".into())?;
                hypothesis(delta >= k, || format!("delta >= k (delta = {delta}, k = {k})"))?;
                hypothesis(n % 2 == k % 2, || format!("n = k mod 2 (n = {n}, k = {k})"))?;
                let bound = kfc_order_bound(k, delta);
                hypothesis(n >= bound, || {
                    format!("n >= max(8delta - 5k + 4, delta(delta - k)^2 + delta - 1) = {bound} (n = {n})")
                })?;
                if n > limits.exhaustive.min(64) {
                    return Err(Error::OrderTooLarge {
                        what: "factor-critical enumeration",
                        order: n,
                        limit: limits.exhaustive.min(64),
                    });
                }
                let class = GraphClass {
                    order: n,
                    bipartite: false,
                    connected: true,
                    min_degree: Some(delta),
                };
                (FamilyParams::new(n, k).with_delta(delta), class)
            }
            _ => unreachable!("lemma sub-modes are handled separately"),
        };
        let extremal = construct(family, &params)?;
        let rho_star = threshold_rho(family, &params)?.rho_star;
        Ok(TheoremSetup {
            theorem,
            family,
            params,
            class,
            extremal,
            rho_star,
            limits,
            tol: cfg.tol,
            notes,
        })
    }

    /// The theorem's property, by the checker the theorem's proof uses.
    pub fn property(&self, g: &Graph) -> Result<Verdict> {
        let k = self.params.k;
        match self.theorem {
            Theorem::T11 if g.order() <= self.limits.exhaustive => is_k_extendable_chen(g, k, &self.limits),
            Theorem::T11 => is_k_extendable_definitional(g, k),
            Theorem::T12 => is_k_extendable_plummer(g, k, &self.limits),
            Theorem::T13 => k_factor_checked(g, k, &self.limits),
            Theorem::T43 => hamiltonian_cycle(g, &self.limits),
            Theorem::T45 => is_k_factor_critical(g, k, &self.limits),
            _ => Err(Error::InvalidParams(format!("{} has no property checker", self.theorem))),
        }
    }

    fn run(&self, cfg: &ExperimentConfig) -> Report {
        let indices: Vec<u64> = (0..=cfg.samples as u64).collect();
        let rows = par_map(cfg.jobs, indices, |i| {
            if i == 0 {
                return self.tightness_row();
            }
            let mut rng = graph_rng(cfg.seed, i);
            let g = if i % 2 == 1 {
                self.class
                    .perturb(&mut rng, &self.extremal)
                    .or_else(|| self.class.random_member(&mut rng))
            } else {
                self.class.random_member(&mut rng)
            };
            match g {
                Some(g) => self.classify(&g),
                None => skipped_row(String::new(), "no graph in the class after rejection sampling"),
            }
        });
        let mut report = Report::new(&format!("verify {}", self.theorem), rows, cfg.tol);
        report.summary.notes.extend(self.notes.iter().cloned());
        report
    }

    fn tightness_row(&self) -> VerdictRow {
        let g = &self.extremal;
        let mut row = self.classify(g);
        if self.theorem == Theorem::P1 {
            return row;
        }
        let fails = matches!(self.property(g), Ok(v) if !v.holds);
        let tight = row.margin.is_some_and(|m| m.abs() <= self.tol);
        if fails && tight && row.extremal {
            row.verdict = RowVerdict::ExtremalHit;
        } else {
            row.verdict = RowVerdict::Borderline;
            row.certificate = Some(json!({ "error": "tightness check failed on the extremal graph" }));
        }
        row
    }

    /// Classifies one graph of the hypothesis class against `ρ*`.
    pub fn classify(&self, g: &Graph) -> VerdictRow {
        match self.try_classify(g) {
            Ok(row) => row,
            Err(e) => skipped_row(graph6::encode(g).unwrap_or_default(), &e.to_string()),
        }
    }

    fn try_classify(&self, g: &Graph) -> Result<VerdictRow> {
        let n = g.order();
        let rho = spectral_radius(g, default_tol(n))?.rho;
        let margin = rho - self.rho_star;
        let mut row = VerdictRow {
            graph: graph6::encode(g)?,
            rho: Some(rho),
            rho_star: Some(self.rho_star),
            margin: Some(margin),
            verdict: RowVerdict::Consistent,
            certificate: None,
            extremal: false,
        };
        if margin < -self.tol {
            return Ok(row);
        }
        row.extremal = recognize(self.family, &self.params, g);
        if self.theorem == Theorem::P1 {
            let found = connected_k_factor_search(g, self.params.k, &self.limits)?;
            row.certificate = Some(serde_json::to_value(found).expect("serializable"));
            row.verdict = RowVerdict::Explored;
            return Ok(row);
        }
        let verdict = self.property(g)?;
        if verdict.holds {
            return Ok(row);
        }
        row.certificate = certificate_value(&verdict);
        if margin.abs() <= self.tol {
            row.verdict = if row.extremal {
                RowVerdict::ExtremalHit
            } else {
                RowVerdict::Borderline
            };
            return Ok(row);
        }
        row.verdict = if !row.extremal && self.confirm(g, &verdict)? {
            if self.theorem == Theorem::T43 {
                row.certificate = Some(json!({ "kind": "NoHamiltonCycle", "confirmed_by": "backtracking" }));
            }
            RowVerdict::Counterexample
        } else {
            RowVerdict::Borderline
        };
        Ok(row)
    }

    /// Re-checks a violation: the margin must survive a tighter eigen
    /// tolerance and the failure must be witnessed independently.
    fn confirm(&self, g: &Graph, verdict: &Verdict) -> Result<bool> {
        let rho = spectral_radius(g, tightened_tol(g.order(), self.tol))?.rho;
        if rho - self.rho_star <= self.tol {
            return Ok(false);
        }
        Ok(match self.theorem {
            Theorem::T43 => !hamiltonian_backtrack(g),
            _ => verdict.certificate.is_some() && verdict.validate(g).is_ok(),
        })
    }
}

/// Flow factor, compared against the subset criterion when `|A|` is within
/// the enumeration limit. Returns the subset verdict when both ran.
pub(crate) fn k_factor_checked(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    if g.side_lists().is_some_and(|(a, b)| a.len() != b.len()) {
        return has_f_factor_ore(g, &FactorSpec::constant(g.order(), k), limits);
    }
    let flow = find_k_factor_flow(g, k)?;
    let half = g.side_lists().map_or(0, |(a, _)| a.len());
    if half > limits.exhaustive || g.order() > 64 {
        return Ok(flow);
    }
    let ore = has_f_factor_ore(g, &FactorSpec::constant(g.order(), k), limits)?;
    if ore.holds != flow.holds {
        return Err(Error::OracleDisagreement(format!(
            "subset criterion says {}, flow says {}",
            ore.holds, flow.holds
        )));
    }
    Ok(ore)
}

pub(crate) fn certificate_value(v: &Verdict) -> Option<Value> {
    v.certificate
        .as_ref()
        .map(|c| serde_json::to_value(c).expect("certificates serialize"))
}

pub(crate) fn skipped_row(graph: String, reason: &str) -> VerdictRow {
    VerdictRow {
        graph,
        rho: None,
        rho_star: None,
        margin: None,
        verdict: RowVerdict::Skipped,
        certificate: Some(json!({ "skipped": reason })),
        extremal: false,
    }
}

/// Plain depth-first Hamilton cycle search, independent of the subset
/// dynamic program. Only used to confirm candidate counterexamples.
pub fn hamiltonian_backtrack(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || n > 64 {
        return false;
    }
    let rows = g.row_masks();
    fn extend(rows: &[u64], n: usize, v: usize, seen: u64, depth: usize) -> bool {
        if depth == n {
            return rows[v] & 1 == 1;
        }
        let mut next = rows[v] & !seen;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            if extend(rows, n, w, seen | 1 << w, depth + 1) {
                return true;
            }
        }
        false
    }
    extend(&rows, n, 0, 1, 1)
}

fn lemma_row(graph: String, lhs: f64, rhs: f64, agree: bool, certificate: Option<Value>, tol: f64) -> VerdictRow {
    let margin = rhs - lhs;
    let verdict = if agree && margin > LEMMA_MARGIN {
        RowVerdict::Consistent
    } else if agree && margin < -tol {
        RowVerdict::Counterexample
    } else {
        RowVerdict::Borderline
    };
    VerdictRow {
        graph,
        rho: Some(lhs),
        rho_star: Some(rhs),
        margin: Some(margin),
        verdict,
        certificate,
        extremal: false,
    }
}

fn clique_join_quotient(s: usize, parts: &[usize]) -> QuotientMatrix {
    let t = parts.len();
    let mut rows = Vec::with_capacity(t + 1);
    let mut first = vec![s - 1];
    first.extend_from_slice(parts);
    rows.push(first);
    for (i, &ni) in parts.iter().enumerate() {
        let mut row = vec![0; t + 1];
        row[0] = s;
        row[i + 1] = ni - 1;
        rows.push(row);
    }
    let mut sizes = vec![s];
    sizes.extend_from_slice(parts);
    QuotientMatrix::from_counts(rows, sizes).expect("join of cliques is equitable")
}

fn clique_join_id(s: usize, parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| format!("K{p}")).collect();
    format!("K{s}v({})", inner.join("+"))
}

/// Non-increasing `t`-part partitions of `m` with every part at least `p`.
fn partitions(m: usize, t: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, t: usize, p: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if t == 0 {
            if m == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if m < p * t {
            return;
        }
        for first in (p..=cap.min(m - p * (t - 1))).rev() {
            cur.push(first);
            go(m - first, t - 1, p, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, t, p, m, &mut Vec::new(), &mut out);
    out
}

/// `ρ(K_s ∇ (K_{n1} ∪ … ∪ K_{nt})) < ρ(K_s ∇ (K_{n−s−p(t−1)} ∪ (t−1)K_p))`
/// whenever `n1 ≥ … ≥ nt ≥ p` and `n1 < n − s − p(t−1)`, over the grid
/// `1 ≤ s`, `2 ≤ t`, `1 ≤ p`, order up to `n` (quotient route).
fn lemma_2_2(cfg: &ExperimentConfig) -> Report {
    let (t_max, p_max, s_max, n_max) = (
        cfg.t.unwrap_or(4),
        cfg.p.unwrap_or(3),
        cfg.s.unwrap_or(5),
        cfg.n.unwrap_or(40),
    );
    let mut cases = Vec::new();
    for s in 1..=s_max {
        for t in 2..=t_max {
            for p in 1..=p_max {
                for n in s + t * p..=n_max {
                    let m = n - s;
                    let top = m - p * (t - 1);
                    for parts in partitions(m, t, p) {
                        if parts[0] < top {
                            cases.push((s, p, parts));
                        }
                    }
                }
            }
        }
    }
    let tol = cfg.tol;
    let rows = par_map(cfg.jobs, cases, |(s, p, parts)| {
        let t = parts.len();
        let m: usize = parts.iter().sum();
        let mut extreme = vec![p; t];
        extreme[0] = m - p * (t - 1);
        let lhs = clique_join_quotient(s, &parts).lambda1(1e-12);
        let rhs = clique_join_quotient(s, &extreme).lambda1(1e-12);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => lemma_row(
                clique_join_id(s, &parts),
                l,
                r,
                true,
                Some(json!({ "rhs": clique_join_id(s, &extreme) })),
                tol,
            ),
            (Err(e), _) | (_, Err(e)) => skipped_row(clique_join_id(s, &parts), &e.to_string()),
        }
    });
    Report::new("verify l2.2", rows, tol)
}

fn two_clique_join(a: usize, b: usize, c: usize, isolated_c: bool) -> Graph {
    let third = if isolated_c {
        Graph::empty(c)
    } else {
        Graph::complete(c)
    };
    Graph::join(&Graph::complete(a), &Graph::disjoint_union(&Graph::complete(b), &third))
}

/// `ρ(K_{2k} ∇ (K_{δ−2k+1} ∪ K_{n−δ−1})) < ρ(K_δ ∇ (K_{n−2δ+2k−1} ∪ (δ−2k+1)K₁))`
/// for `n ≥ 8δ − 10k + 4`, `δ ≥ 2k + 1`, by quotients and dense solves.
fn lemma_2_3(cfg: &ExperimentConfig) -> Result<Report> {
    let (k_max, d_max, n_max) = (cfg.k.unwrap_or(2), cfg.delta.unwrap_or(5), cfg.n.unwrap_or(40));
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for d in 2 * k + 1..=d_max {
            let low = (8 * d + 4).saturating_sub(10 * k).max(2 * d + 2);
            for n in low..=n_max {
                cases.push((n, k, d));
            }
        }
    }
    let tol = cfg.tol;
    let rows = par_map(cfg.jobs, cases, |(n, k, d)| {
        let id = format!("L(n={n},k={k},delta={d})");
        let run = || -> Result<VerdictRow> {
            let (a, b) = (d - 2 * k + 1, n - d - 1);
            let lq = QuotientMatrix::from_counts(
                vec![vec![2 * k - 1, a, b], vec![2 * k, a - 1, 0], vec![2 * k, 0, b - 1]],
                vec![2 * k, a, b],
            )?
            .lambda1(1e-12)?;
            let (c, i) = (n + 2 * k - 2 * d - 1, d - 2 * k + 1);
            let rq = QuotientMatrix::from_counts(
                vec![vec![d - 1, c, i], vec![d, c - 1, 0], vec![d, 0, 0]],
                vec![d, c, i],
            )?
            .lambda1(1e-12)?;
            let ld = spectral_radius(&two_clique_join(2 * k, a, b, false), 1e-12)?.rho;
            let rd = spectral_radius(&two_clique_join(d, c, i, true), 1e-12)?.rho;
            let agree = (lq - ld).abs() <= ROUTE_AGREEMENT && (rq - rd).abs() <= ROUTE_AGREEMENT;
            Ok(lemma_row(
                id.clone(),
                lq,
                rq,
                agree,
                Some(json!({ "lhs_dense": ld, "rhs_dense": rd })),
                tol,
            ))
        };
        run().unwrap_or_else(|e| skipped_row(id.clone(), &e.to_string()))
    });
    Ok(Report::new("verify l2.3", rows, tol))
}

/// `ρ(s) < ρ(s − 1)` for the bipartite join family, `n ≥ 4s + 2k + 2`,
/// by the exact quartic and by dense solves.
fn lemma_2_6(cfg: &ExperimentConfig) -> Result<Report> {
    let (k_max, s_max, n_max) = (cfg.k.unwrap_or(4), cfg.s.unwrap_or(5), cfg.n.unwrap_or(40));
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for s in 1..=s_max {
            let mut n = 4 * s + 2 * k + 2;
            while n <= n_max {
                cases.push((n, k, s));
                n += 2;
            }
        }
    }
    let tol = cfg.tol;
    let rows = par_map(cfg.jobs, cases, |(n, k, s)| {
        let id = format!("B(n={n},k={k},s={s})");
        let run = || -> Result<VerdictRow> {
            let cur = charpoly_b_s(n, k, s)?.largest_root();
            let prev = charpoly_b_s(n, k, s - 1)?.largest_root();
            let cur_dense = spectral_radius(&bipartite_join_family(n, k, s)?, 1e-12)?.rho;
            let prev_dense = spectral_radius(&bipartite_join_family(n, k, s - 1)?, 1e-12)?.rho;
            let agree = (cur - cur_dense).abs() <= ROUTE_AGREEMENT && (prev - prev_dense).abs() <= ROUTE_AGREEMENT;
            Ok(lemma_row(
                id.clone(),
                cur,
                prev,
                agree,
                Some(json!({ "dense": cur_dense, "dense_prev": prev_dense })),
                tol,
            ))
        };
        run().unwrap_or_else(|e| skipped_row(id.clone(), &e.to_string()))
    });
    Ok(Report::new("verify l2.6", rows, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(7, 3, 2), vec![vec![3, 2, 2]]);
        assert_eq!(partitions(6, 2, 1), vec![vec![5, 1], vec![4, 2], vec![3, 3]]);
        assert!(partitions(3, 2, 2).is_empty());
    }

    #[test]
    fn backtracking_agrees_on_small_cases() {
        assert!(hamiltonian_backtrack(&Graph::cycle(7)));
        assert!(!hamiltonian_backtrack(&Graph::path(5)));
        let ext = crate::families::extremal_hamilton(8).unwrap();
        assert!(!hamiltonian_backtrack(&ext));
        assert!(hamiltonian_backtrack(&Graph::complete_bipartite(4, 4)));
    }
}
