//! The extremal graphs of the spectral extendability and factor theorems:
//! constructors with hypothesis checks, their equitable quotients and
//! spectral thresholds, and recognizers for the equality cases.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::isomorphic_by_twins;
use crate::spectra::{spectral_radius, Partition, QuotientMatrix};

/// Tolerance for agreement between the quotient and dense routes.
pub const MARGIN_TOL: f64 = 1e-8;

/// Largest order for which [`threshold_rho`] also runs the dense route.
pub const DENSE_CHECK_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `K_δ ∇ (K_{n−2δ+2k−1} ∪ (δ−2k+1)K₁)`: not `k`-extendable.
    KextGeneral,
    /// `K_{s,s+k+1} ∇₁ K_{n/2−s, n/2−s−k−1}`: bipartite, not `k`-extendable.
    KextBipartite,
    /// `K_{n/2,n/2} ∖ E(K_{1,n/2−k+1})`: no `k`-factor.
    KfactorBipartite,
    /// `K_δ ∇ (K_{n−2δ+k−1} ∪ (δ−k+1)K₁)`: not `k`-factor-critical.
    KfcGeneral,
    /// `K_{n/2,n/2} ∖ E(K_{1,n/2−1})`: not hamiltonian.
    HamiltonBipartite,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::KextGeneral,
        Family::KextBipartite,
        Family::KfactorBipartite,
        Family::KfcGeneral,
        Family::HamiltonBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KextGeneral => "kext-general",
            Family::KextBipartite => "kext-bipartite",
            Family::KfactorBipartite => "kfactor-bipartite",
            Family::KfcGeneral => "kfc-general",
            Family::HamiltonBipartite => "hamilton-bipartite",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub k: usize,
    pub delta: Option<usize>,
    pub s: Option<usize>,
}

impl FamilyParams {
    pub fn new(n: usize, k: usize) -> FamilyParams {
        FamilyParams {
            n,
            k,
            delta: None,
            s: None,
        }
    }

    pub fn with_delta(mut self, delta: usize) -> FamilyParams {
        self.delta = Some(delta);
        self
    }

    pub fn with_s(mut self, s: usize) -> FamilyParams {
        self.s = Some(s);
        self
    }

    fn delta(&self, family: Family) -> Result<usize> {
        self.delta
            .ok_or_else(|| Error::InvalidParams(format!("{family} needs delta")))
    }

    fn s(&self, family: Family) -> Result<usize> {
        self.s.ok_or_else(|| Error::InvalidParams(format!("{family} needs s")))
    }
}

fn hypothesis(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(msg()))
    }
}

fn join_family(delta: usize, clique: usize, isolated: usize) -> Graph {
    Graph::join(
        &Graph::complete(delta),
        &Graph::disjoint_union(&Graph::complete(clique), &Graph::empty(isolated)),
    )
}

/// `K_δ ∇ (K_{n−2δ+2k−1} ∪ (δ−2k+1)K₁)`. Labels: the join set, then the
/// clique, then the independent vertices.
pub fn extremal_kext_general(n: usize, k: usize, delta: usize) -> Result<Graph> {
    hypothesis(n % 2 == 0, || format!("n = {n} must be even"))?;
    hypothesis(k >= 1, || "k >= 1 required".into())?;
    hypothesis(delta >= 2 * k, || format!("delta >= 2k fails: {delta} < {}", 2 * k))?;
    hypothesis(n + 2 * k >= 2 * delta + 2, || {
        format!("n - 2delta + 2k - 1 >= 1 fails for n={n}, k={k}, delta={delta}")
    })?;
    Ok(join_family(delta, n + 2 * k - 2 * delta - 1, delta - 2 * k + 1))
}

/// `K_{s,s+k+1} ∇₁ K_{n/2−s, n/2−s−k−1}`. Labels: X1, Y1, X2, Y2.
pub fn extremal_kext_bipartite(n: usize, k: usize, s: usize) -> Result<Graph> {
    hypothesis(n % 2 == 0, || format!("n = {n} must be even"))?;
    hypothesis(k >= 1, || "k >= 1 required".into())?;
    hypothesis(s >= 1, || "s >= 1 required".into())?;
    hypothesis(n / 2 >= s + k + 1, || {
        format!("n/2 - s - k - 1 >= 0 fails for n={n}, k={k}, s={s}")
    })?;
    bipartite_join_family(n, k, s)
}

/// The bipartite join family for any `s ≥ 0` (no hypothesis checks beyond
/// nonnegative part sizes).
pub fn bipartite_join_family(n: usize, k: usize, s: usize) -> Result<Graph> {
    let h = n / 2;
    if n % 2 == 1 || h < s + k + 1 {
        return Err(Error::InvalidParams(format!(
            "negative part size for n={n}, k={k}, s={s}"
        )));
    }
    Graph::bipartite_join(
        &Graph::complete_bipartite(s, s + k + 1),
        &Graph::complete_bipartite(h - s, h - s - k - 1),
    )
}

/// `K_{n/2,n/2} ∖ E(K_{1,n/2−k+1})`, removing the star at vertex 0.
pub fn extremal_kfactor(n: usize, k: usize) -> Result<Graph> {
    hypothesis(n % 2 == 0, || format!("n = {n} must be even"))?;
    hypothesis(k >= 2 && k + 1 <= n / 2, || {
        format!("2 <= k <= n/2 - 1 fails for n={n}, k={k}")
    })?;
    let h = n / 2;
    Graph::complete_bipartite(h, h).remove_star(0, h - k + 1)
}

/// `K_δ ∇ (K_{n−2δ+k−1} ∪ (δ−k+1)K₁)` under the order bound of the
/// factor-critical theorem.
pub fn extremal_kfc(n: usize, k: usize, delta: usize) -> Result<Graph> {
    hypothesis(k >= 1, || "k >= 1 required".into())?;
    hypothesis(n % 2 == k % 2, || format!("n = {n} and k = {k} differ in parity"))?;
    hypothesis(delta >= k, || format!("delta >= k fails: {delta} < {k}"))?;
    let bound = kfc_order_bound(k, delta);
    hypothesis(n >= bound, || {
        format!("n >= max(8delta - 5k + 4, delta(delta-k)^2 + delta - 1) = {bound} fails for n={n}")
    })?;
    Ok(join_family(delta, n + k - 2 * delta - 1, delta - k + 1))
}

/// `max{8δ − 5k + 4, δ(δ−k)² + δ − 1}` for `δ ≥ k`.
pub fn kfc_order_bound(k: usize, delta: usize) -> usize {
    let (k, d) = (k as i64, delta as i64);
    (8 * d - 5 * k + 4).max(d * (d - k) * (d - k) + d - 1).max(0) as usize
}

/// `K_{n/2,n/2} ∖ E(K_{1,n/2−1})`.
pub fn extremal_hamilton(n: usize) -> Result<Graph> {
    hypothesis(n % 2 == 0 && n >= 8, || format!("n = {n} must be even and at least 8"))?;
    extremal_kfactor(n, 2)
}

/// `F(k, δ) = max{8δ − 10k + 4, δ(δ − 2k)² + δ − 1}`.
pub fn threshold_f(k: usize, delta: usize) -> usize {
    let (k, d) = (k as i64, delta as i64);
    (8 * d - 10 * k + 4)
        .max(d * (d - 2 * k) * (d - 2 * k) + d - 1)
        .max(0) as usize
}

pub fn construct(family: Family, p: &FamilyParams) -> Result<Graph> {
    match family {
        Family::KextGeneral => extremal_kext_general(p.n, p.k, p.delta(family)?),
        Family::KextBipartite => extremal_kext_bipartite(p.n, p.k, p.s(family)?),
        Family::KfactorBipartite => extremal_kfactor(p.n, p.k),
        Family::KfcGeneral => extremal_kfc(p.n, p.k, p.delta(family)?),
        Family::HamiltonBipartite => extremal_hamilton(p.n),
    }
}

/// Class sizes and quotient rows read off the construction. Classes of size
/// zero are dropped.
fn quotient_data(family: Family, p: &FamilyParams) -> Result<(Vec<usize>, Vec<Vec<usize>>)> {
    construct(family, p)?;
    let join = |d: usize, a: usize, b: usize| {
        (
            vec![d, a, b],
            vec![vec![d - 1, a, b], vec![d, a - 1, 0], vec![d, 0, 0]],
        )
    };
    let kfactor = |n: usize, k: usize| {
        let h = n / 2;
        (
            vec![1, h - 1, k - 1, h - k + 1],
            vec![
                vec![0, 0, k - 1, 0],
                vec![0, 0, k - 1, h - k + 1],
                vec![1, h - 1, 0, 0],
                vec![0, h - 1, 0, 0],
            ],
        )
    };
    let (n, k) = (p.n, p.k);
    Ok(match family {
        Family::KextGeneral => {
            let d = p.delta(family)?;
            join(d, n + 2 * k - 2 * d - 1, d - 2 * k + 1)
        }
        Family::KfcGeneral => {
            let d = p.delta(family)?;
            join(d, n + k - 2 * d - 1, d - k + 1)
        }
        Family::KextBipartite => bipartite_quotient_data(n, k, p.s(family)?),
        Family::KfactorBipartite => kfactor(n, k),
        Family::HamiltonBipartite => kfactor(n, 2),
    })
}

/// Sizes and rows for the bipartite join family in class order X1, X2, Y1, Y2.
fn bipartite_quotient_data(n: usize, k: usize, s: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let h = n / 2;
    let (x1, y1, x2, y2) = (s, s + k + 1, h - s, h - s - k - 1);
    let sizes = vec![x1, x2, y1, y2];
    let rows = vec![
        vec![0, 0, y1, y2],
        vec![0, 0, 0, y2],
        vec![x1, 0, 0, 0],
        vec![x1, x2, 0, 0],
    ];
    drop_empty(sizes, rows)
}

fn drop_empty(sizes: Vec<usize>, rows: Vec<Vec<usize>>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let keep: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 0).collect();
    (
        keep.iter().map(|&i| sizes[i]).collect(),
        keep.iter().map(|&i| keep.iter().map(|&j| rows[i][j]).collect()).collect(),
    )
}

/// The quotient matrix of the family's canonical partition, from formulas.
pub fn family_quotient(family: Family, p: &FamilyParams) -> Result<QuotientMatrix> {
    let (sizes, rows) = quotient_data(family, p)?;
    QuotientMatrix::from_counts(rows, sizes)
}

/// Quotient of the bipartite join family for any `s ≥ 0`, from formulas.
pub fn bipartite_join_quotient(n: usize, k: usize, s: usize) -> Result<QuotientMatrix> {
    bipartite_join_family(n, k, s)?;
    let (sizes, rows) = bipartite_quotient_data(n, k, s);
    QuotientMatrix::from_counts(rows, sizes)
}

/// The canonical partition of the constructed graph, matching the class
/// order of [`family_quotient`].
pub fn family_partition(family: Family, p: &FamilyParams) -> Result<Partition> {
    let (sizes, _) = quotient_data(family, p)?;
    let n = p.n;
    let classes: Vec<Vec<usize>> = match family {
        Family::KextGeneral | Family::KfcGeneral => consecutive(&sizes),
        Family::KextBipartite => {
            let s = p.s(family)?;
            let h = n / 2;
            let (x1, y1) = (0..s, s..2 * s + p.k + 1);
            let x2 = y1.end..y1.end + h - s;
            let y2 = x2.end..n;
            [x1, x2, y1, y2]
                .into_iter()
                .map(|r| r.collect::<Vec<_>>())
                .filter(|c| !c.is_empty())
                .collect()
        }
        Family::KfactorBipartite | Family::HamiltonBipartite => {
            let k = if family == Family::HamiltonBipartite { 2 } else { p.k };
            let h = n / 2;
            vec![
                vec![0],
                (1..h).collect(),
                (n - k + 1..n).collect(),
                (h..n - k + 1).collect(),
            ]
        }
    };
    Partition::new(n, classes)
}

fn consecutive(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&len| {
            let c = (start..start + len).collect();
            start += len;
            c
        })
        .collect()
}

/// Spectral threshold `ρ*` of a family member.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Threshold {
    /// Largest eigenvalue of the quotient matrix.
    pub rho_star: f64,
    pub quotient: QuotientMatrix,
    pub margin_tol: f64,
    /// Spectral radius of the constructed graph, when it was computed.
    pub dense_rho: Option<f64>,
}

/// `ρ*` from the family's small quotient matrix, cross-checked against the
/// spectral radius of the constructed graph when `n ≤ DENSE_CHECK_LIMIT`.
pub fn threshold_rho(family: Family, p: &FamilyParams) -> Result<Threshold> {
    let quotient = family_quotient(family, p)?;
    let rho_star = quotient.lambda1(1e-12)?;
    let dense_rho = if p.n <= DENSE_CHECK_LIMIT {
        let g = construct(family, p)?;
        let dense = spectral_radius(&g, 1e-11)?.rho;
        if (dense - rho_star).abs() > MARGIN_TOL {
            return Err(Error::ThresholdMismatch {
                quotient: rho_star,
                dense,
            });
        }
        Some(dense)
    } else {
        None
    };
    Ok(Threshold {
        rho_star,
        quotient,
        margin_tol: MARGIN_TOL,
        dense_rho,
    })
}

/// Whether `g` is isomorphic to the family member with parameters `p`.
/// Every family member is determined by its classes of twin vertices, so
/// the test compares twin classes and never falls back to a general
/// isomorphism search. Invalid parameters give `false`.
pub fn recognize(family: Family, p: &FamilyParams, g: &Graph) -> bool {
    let Ok(e) = construct(family, p) else {
        return false;
    };
    if g.order() != e.order() || g.size() != e.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut de = e.degrees();
    dg.sort_unstable();
    de.sort_unstable();
    if dg != de {
        return false;
    }
    isomorphic_by_twins(g, &e, 8).unwrap_or(false)
}
