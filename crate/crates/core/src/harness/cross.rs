use rand::Rng;

use super::config::ExperimentConfig;
use super::par_map;
use super::report::{CrossCheckReport, CrossCheckRow, CrossCheckSummary};
use super::sample::{graph_rng, EDGE_PROBABILITIES};
use super::verify::limits_for;
use crate::error::Result;
use crate::graph::{Graph, Side};
use crate::graph6;
use crate::matchfactor::{
    find_k_factor_flow, has_f_factor_ore, is_k_extendable_chen, is_k_extendable_definitional,
    k_factor_critical_definitional, k_factor_critical_odd_sets, matching_number, matching_number_exhaustive,
    plummer_enumeration, plummer_surplus, FactorSpec, Limits, Verdict, EXHAUSTIVE_MATCHING_LIMIT,
};

/// Largest order enumerated exhaustively.
pub const EXHAUSTIVE_ORDER: usize = 6;

pub const CHECKS: [&str; 7] = [
    "chen-vs-definitional",
    "plummer-vs-definitional",
    "ore-vs-flow",
    "factor-critical-routes",
    "blossom-vs-exhaustive",
    "extendability-monotone",
    "certificates",
];

#[derive(Clone, Debug, Default)]
struct Tally {
    rows: [CrossCheckRow; 7],
    details: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        let mut t = Tally::default();
        for (row, name) in t.rows.iter_mut().zip(CHECKS) {
            row.check = name.to_string();
        }
        t
    }

    fn touch(&mut self, check: usize) {
        self.rows[check].graphs += 1;
    }

    fn compare(&mut self, check: usize, agree: bool, detail: impl FnOnce() -> String) {
        self.rows[check].comparisons += 1;
        if !agree {
            self.rows[check].disagreements += 1;
            self.details.push(format!("{}: {}", CHECKS[check], detail()));
        }
    }

    fn certificate(&mut self, g: &Graph, id: &str, what: &str, v: &Verdict) {
        let ok = v.validate(g);
        self.compare(6, ok.is_ok(), || format!("{id} {what}: {}", ok.unwrap_err()));
    }

    fn merge(&mut self, other: Tally) {
        for (a, b) in self.rows.iter_mut().zip(other.rows) {
            a.graphs += b.graphs;
            a.comparisons += b.comparisons;
            a.disagreements += b.disagreements;
        }
        self.details.extend(other.details);
    }
}

fn describe(v: &Verdict) -> String {
    match &v.certificate {
        Some(c) => format!("{} {}", v.holds, serde_json::to_string(c).unwrap_or_default()),
        None => v.holds.to_string(),
    }
}

/// Compares every applicable pair of routes on one graph.
fn check_graph(g: &Graph, limits: &Limits) -> Tally {
    let mut t = Tally::new();
    let id = graph6::encode(g).unwrap_or_default();
    let n = g.order();
    let connected = n > 0 && g.is_connected();

    if n <= EXHAUSTIVE_MATCHING_LIMIT {
        t.touch(4);
        let fast = matching_number(g);
        let slow = matching_number_exhaustive(g).ok();
        t.compare(4, slow == Some(fast), || format!("{id}: blossom {fast}, exhaustive {slow:?}"));
    }

    let mut extendable = [None; 3];
    if connected && n % 2 == 0 && n >= 2 {
        t.touch(0);
        for k in 1..=2usize.min(n / 2) {
            let (Ok(chen), Ok(def)) = (is_k_extendable_chen(g, k, limits), is_k_extendable_definitional(g, k)) else {
                continue;
            };
            t.compare(0, chen.holds == def.holds, || {
                format!("{id} k={k}: odd sets {}, definition {}", describe(&chen), describe(&def))
            });
            t.certificate(g, &id, &format!("odd-set k={k}"), &chen);
            t.certificate(g, &id, &format!("definition k={k}"), &def);
            extendable[k] = Some(def.holds);
        }
        // k-extendable implies (k-1)-extendable only when n >= 2k + 2.
        if let (Some(one), Some(two), true) = (extendable[1], extendable[2], n >= 6) {
            t.touch(5);
            t.compare(5, !two || one, || format!("{id}: 2-extendable but not 1-extendable"));
        }
    }

    if let Some(b) = g.ensure_bipartition() {
        let (a_side, b_side) = b.side_lists().expect("bipartition attached");
        if a_side.len() == b_side.len() && n >= 2 {
            t.touch(2);
            for k in 1..=3 {
                let ore = has_f_factor_ore(&b, &FactorSpec::constant(n, k), limits);
                let flow = find_k_factor_flow(&b, k);
                if let (Ok(ore), Ok(flow)) = (ore, flow) {
                    t.compare(2, ore.holds == flow.holds, || {
                        format!("{id} k={k}: subset criterion {}, flow {}", describe(&ore), describe(&flow))
                    });
                    t.certificate(&b, &id, &format!("subset k={k}"), &ore);
                    t.certificate(&b, &id, &format!("flow k={k}"), &flow);
                }
            }
            if connected {
                t.touch(1);
                for k in 1..=2usize.min(a_side.len().saturating_sub(1)) {
                    let routes = (
                        plummer_enumeration(&b, k, limits),
                        plummer_surplus(&b, k),
                        is_k_extendable_definitional(&b, k),
                    );
                    if let (Ok(en), Ok(su), Ok(def)) = routes {
                        let agree = en.holds == su.holds && su.holds == def.holds;
                        t.compare(1, agree, || {
                            format!(
                                "{id} k={k}: enumeration {}, matching route {}, definition {}",
                                describe(&en),
                                describe(&su),
                                describe(&def)
                            )
                        });
                        t.certificate(&b, &id, &format!("enumeration k={k}"), &en);
                        t.certificate(&b, &id, &format!("matching route k={k}"), &su);
                    }
                }
            }
        }
    }

    if n >= 1 {
        t.touch(3);
        for k in 1..=2usize.min(n) {
            let (Ok(sets), Ok(def)) = (
                k_factor_critical_odd_sets(g, k, limits),
                k_factor_critical_definitional(g, k, limits),
            ) else {
                continue;
            };
            t.compare(3, sets.holds == def.holds, || {
                format!("{id} k={k}: odd sets {}, definition {}", describe(&sets), describe(&def))
            });
            t.certificate(g, &id, &format!("factor-critical odd sets k={k}"), &sets);
            t.certificate(g, &id, &format!("factor-critical definition k={k}"), &def);
        }
    }
    t.touch(6);
    t
}

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("pairs in range")
}

fn random_graph(rng: &mut impl Rng, n: usize, bipartite: bool) -> Graph {
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    let h = n / 2;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let allowed = !bipartite || (u < h) != (v < h);
            if allowed && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("pairs in range");
    if bipartite {
        let sides = (0..n).map(|v| if v < h { Side::A } else { Side::B }).collect();
        g.with_bipartition(sides).expect("edges cross the sides")
    } else {
        g
    }
}

/// Exhaustive comparison over all labeled graphs of order
/// `min(n, EXHAUSTIVE_ORDER)`, then `samples` random graphs spread over the
/// orders `EXHAUSTIVE_ORDER + 1 ..= n`, every other one balanced bipartite
/// when the order is even.
pub fn cross_check(cfg: &ExperimentConfig) -> Result<CrossCheckReport> {
    cfg.validate()?;
    let n = cfg.require("n", cfg.n)?;
    if n == 0 {
        return Err(crate::error::Error::InvalidParams("--n must be at least 1".into()));
    }
    let limits = limits_for(cfg);
    let small = n.min(EXHAUSTIVE_ORDER);
    let pairs = small * small.saturating_sub(1) / 2;
    let total = 1u64 << pairs;
    let sampled_orders: Vec<usize> = (EXHAUSTIVE_ORDER + 1..=n).collect();
    let sampled = if sampled_orders.is_empty() { 0 } else { cfg.samples };

    const CHUNK: u64 = 512;
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let exhaustive = par_map(cfg.jobs, chunks, |c| {
        let mut t = Tally::new();
        for bits in c * CHUNK..((c + 1) * CHUNK).min(total) {
            t.merge(check_graph(&graph_from_bits(small, bits), &limits));
        }
        t
    });
    let indices: Vec<u64> = (0..sampled as u64).collect();
    let random = par_map(cfg.jobs, indices, |i| {
        let mut rng = graph_rng(cfg.seed, i);
        let order = sampled_orders[i as usize % sampled_orders.len()];
        let bipartite = order % 2 == 0 && (i / sampled_orders.len() as u64) % 2 == 1;
        check_graph(&random_graph(&mut rng, order, bipartite), &limits)
    });

    let mut tally = Tally::new();
    for t in exhaustive.into_iter().chain(random) {
        tally.merge(t);
    }
    let disagreements = tally.rows.iter().map(|r| r.disagreements).sum();
    Ok(CrossCheckReport {
        mode: "cross-check".into(),
        rows: tally.rows.to_vec(),
        summary: CrossCheckSummary {
            graphs: total as usize + sampled,
            exhaustive_graphs: total as usize,
            sampled_graphs: sampled,
            disagreements,
            details: tally.details,
        },
    })
}
