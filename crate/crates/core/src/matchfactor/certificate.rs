use serde::{Deserialize, Serialize};

use super::matching::{tutte_berge_bound, Matching};
use crate::graph::{Graph, Side, Vertex, VertexSet};

/// Which odd-component inequality a [`Certificate::ViolatingSetS`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetCriterion {
    /// `o(G − S) > |S| − 2k` with `k` disjoint edges inside `S`.
    Extendable,
    /// `o(G − S) > |S| − k` with `|S| ≥ k`.
    FactorCritical,
}

/// Which neighbourhood inequality a [`Certificate::ViolatingSubsetX`] breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum SubsetRule {
    /// `|N(X)| < |X| + k` with `X ⊆ A` and `1 ≤ |X| ≤ |A| − k`.
    Surplus { k: usize },
    /// `Σ_{x∈X} f(x) > Σ_{y∈N(X)} min{f(y), d_X(y)}`. `saturated` lists the
    /// neighbours with `d_X(y) ≥ f(y)`, `unsaturated` the rest.
    Ore {
        targets: Vec<usize>,
        demand: usize,
        supply: usize,
        saturated: Vec<Vertex>,
        unsaturated: Vec<Vertex>,
    },
}

/// A witness for a checker verdict. Every variant can be rechecked against
/// the host graph with [`Certificate::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload")]
pub enum Certificate {
    ViolatingSetS {
        set: Vec<Vertex>,
        k: usize,
        criterion: SetCriterion,
        odd_components: usize,
        /// `k` disjoint edges inside `set` (extendability only).
        inner_matching: Option<Matching>,
    },
    ViolatingSubsetX {
        subset: Vec<Vertex>,
        neighborhood: Vec<Vertex>,
        #[serde(flatten)]
        rule: SubsetRule,
    },
    /// A spanning subgraph whose degrees equal `targets`.
    FactorSubgraph {
        edges: Vec<(Vertex, Vertex)>,
        targets: Vec<usize>,
    },
    /// Pairwise edge-disjoint perfect matchings whose union is every edge.
    MatchingList { matchings: Vec<Matching> },
    HamCycle { cycle: Vec<Vertex> },
    /// A matching that lies in no perfect matching, with a Tutte barrier
    /// showing that the rest of the graph has no perfect matching.
    FailingMatching { matching: Matching, barrier: Vec<Vertex> },
    /// The graph has no matching of size `required`; the barrier certifies
    /// the maximum.
    MatchingTooSmall {
        maximum: usize,
        required: usize,
        barrier: Vec<Vertex>,
    },
    /// Side totals differ: side sizes when `targets` is absent, otherwise
    /// the sums of the targets over each side.
    SideImbalance {
        a_total: usize,
        b_total: usize,
        targets: Option<Vec<usize>>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ViolatingSetS { .. } => "ViolatingSetS",
            Certificate::ViolatingSubsetX { .. } => "ViolatingSubsetX",
            Certificate::FactorSubgraph { .. } => "FactorSubgraph",
            Certificate::MatchingList { .. } => "MatchingList",
            Certificate::HamCycle { .. } => "HamCycle",
            Certificate::FailingMatching { .. } => "FailingMatching",
            Certificate::MatchingTooSmall { .. } => "MatchingTooSmall",
            Certificate::SideImbalance { .. } => "SideImbalance",
        }
    }

    /// Rechecks the witness against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        let set_of = |vs: &[Vertex]| -> Result<VertexSet, String> {
            let set = VertexSet::from_vertices(n, vs.iter().copied()).map_err(|e| e.to_string())?;
            if set.len() != vs.len() {
                return Err("repeated vertex".into());
            }
            Ok(set)
        };
        match self {
            Certificate::ViolatingSetS {
                set,
                k,
                criterion,
                odd_components,
                inner_matching,
            } => {
                let s = set_of(set)?;
                let odd = g.odd_component_count(&s);
                if odd != *odd_components {
                    return Err(format!("reported {odd_components} odd components, found {odd}"));
                }
                let need = match criterion {
                    SetCriterion::Extendable => 2 * k,
                    SetCriterion::FactorCritical => *k,
                };
                if s.len() < need {
                    return Err(format!("|S| = {} is below {need}", s.len()));
                }
                if odd + need <= s.len() {
                    return Err(format!("o(G-S) = {odd} does not exceed |S| - {need}"));
                }
                if *criterion == SetCriterion::Extendable {
                    let m = inner_matching.as_ref().ok_or("missing inner matching")?;
                    m.check(g).map_err(|e| e.to_string())?;
                    if m.len() != *k {
                        return Err(format!("inner matching has {} edges, need {k}", m.len()));
                    }
                    if m.edges().iter().any(|&(u, v)| !s.contains(u) || !s.contains(v)) {
                        return Err("inner matching leaves S".into());
                    }
                }
                Ok(())
            }
            Certificate::ViolatingSubsetX {
                subset,
                neighborhood,
                rule,
            } => {
                let sides = g.sides().ok_or("graph has no bipartition")?;
                let x = set_of(subset)?;
                if x.iter().any(|v| sides[v] != Side::A) {
                    return Err("X is not contained in side A".into());
                }
                let nx = g.neighborhood(&x);
                if nx.to_vec() != *neighborhood {
                    return Err("reported neighbourhood is wrong".into());
                }
                match rule {
                    SubsetRule::Surplus { k } => {
                        let a = sides.iter().filter(|&&s| s == Side::A).count();
                        if x.is_empty() || x.len() + k > a {
                            return Err(format!("|X| = {} outside 1..=|A|-k", x.len()));
                        }
                        if nx.len() >= x.len() + k {
                            return Err(format!("|N(X)| = {} is at least |X| + k", nx.len()));
                        }
                        Ok(())
                    }
                    SubsetRule::Ore {
                        targets,
                        demand,
                        supply,
                        saturated,
                        unsaturated,
                    } => {
                        if targets.len() != n {
                            return Err("targets have the wrong length".into());
                        }
                        let d: usize = x.iter().map(|v| targets[v]).sum();
                        let mut sup = 0;
                        let (mut y1, mut y2) = (Vec::new(), Vec::new());
                        for y in nx.iter() {
                            let dx = g.neighbor_set(y).intersection(&x).len();
                            sup += dx.min(targets[y]);
                            if dx >= targets[y] {
                                y1.push(y);
                            } else {
                                y2.push(y);
                            }
                        }
                        if (d, sup) != (*demand, *supply) || y1 != *saturated || y2 != *unsaturated {
                            return Err("reported demand/supply split is wrong".into());
                        }
                        if d <= sup {
                            return Err(format!("demand {d} does not exceed supply {sup}"));
                        }
                        Ok(())
                    }
                }
            }
            Certificate::FactorSubgraph { edges, targets } => {
                if targets.len() != n {
                    return Err("targets have the wrong length".into());
                }
                let mut deg = vec![0; n];
                let mut seen = std::collections::BTreeSet::new();
                for &(u, v) in edges {
                    if !g.has_edge(u, v) {
                        return Err(format!("{u}-{v} is not an edge"));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(format!("edge {u}-{v} repeated"));
                    }
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if deg != *targets {
                    return Err("factor degrees differ from the targets".into());
                }
                Ok(())
            }
            Certificate::MatchingList { matchings } => {
                let mut covered = std::collections::BTreeSet::new();
                for m in matchings {
                    m.check(g).map_err(|e| e.to_string())?;
                    if !m.is_perfect(n) {
                        return Err("a matching is not perfect".into());
                    }
                    for &e in m.edges() {
                        if !covered.insert(e) {
                            return Err(format!("edge {e:?} used twice"));
                        }
                    }
                }
                if covered.len() != g.size() {
                    return Err("matchings do not cover every edge".into());
                }
                Ok(())
            }
            Certificate::HamCycle { cycle } => {
                set_of(cycle)?;
                if cycle.len() != n || n < 3 {
                    return Err("cycle does not visit every vertex".into());
                }
                for i in 0..n {
                    let (u, v) = (cycle[i], cycle[(i + 1) % n]);
                    if !g.has_edge(u, v) {
                        return Err(format!("{u}-{v} is not an edge"));
                    }
                }
                Ok(())
            }
            Certificate::FailingMatching { matching, barrier } => {
                matching.check(g).map_err(|e| e.to_string())?;
                let used = matching.vertices(n);
                let b = set_of(barrier)?;
                if !b.is_disjoint(&used) {
                    return Err("barrier meets the matching".into());
                }
                let removed = used.union(&b);
                let odd = g.odd_component_count(&removed);
                if odd <= b.len() {
                    return Err(format!("o = {odd} does not exceed |B| = {}", b.len()));
                }
                Ok(())
            }
            Certificate::MatchingTooSmall {
                maximum,
                required,
                barrier,
            } => {
                let b = set_of(barrier)?;
                let bound = tutte_berge_bound(g, &b);
                if bound != *maximum {
                    return Err(format!("barrier bounds the matching number by {bound}, not {maximum}"));
                }
                if maximum >= required {
                    return Err(format!("maximum {maximum} reaches the required {required}"));
                }
                Ok(())
            }
            Certificate::SideImbalance {
                a_total,
                b_total,
                targets,
            } => {
                let sides = g.sides().ok_or("graph has no bipartition")?;
                let weight = |v: Vertex| targets.as_ref().map_or(1, |t| t[v]);
                if targets.as_ref().is_some_and(|t| t.len() != n) {
                    return Err("targets have the wrong length".into());
                }
                let mut totals = (0, 0);
                for v in 0..n {
                    match sides[v] {
                        Side::A => totals.0 += weight(v),
                        Side::B => totals.1 += weight(v),
                    }
                }
                if totals != (*a_total, *b_total) || a_total == b_total {
                    return Err(format!("side totals are {totals:?}"));
                }
                Ok(())
            }
        }
    }
}

/// Outcome of a checker: whether the property holds, with a witness when
/// one is available.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn holds(certificate: Option<Certificate>) -> Verdict {
        Verdict {
            holds: true,
            certificate,
        }
    }

    pub fn fails(certificate: Certificate) -> Verdict {
        Verdict {
            holds: false,
            certificate: Some(certificate),
        }
    }

    /// Validates the attached certificate, if any.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match &self.certificate {
            Some(c) => c.validate(g),
            None => Ok(()),
        }
    }
}
