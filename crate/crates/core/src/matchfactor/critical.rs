use super::certificate::{Certificate, SetCriterion, Verdict};
use super::matching::{has_perfect_matching, tutte_barrier};
use super::{for_each_combination, mask_of, odd_components_mask, Limits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn check(g: &Graph, k: usize, limits: &Limits) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if k > g.order() {
        return Err(Error::InvalidParams(format!(
            "k = {k} exceeds the order {}",
            g.order()
        )));
    }
    let limit = limits.exhaustive.min(64);
    if g.order() > limit {
        return Err(Error::OrderTooLarge {
            what: "factor-critical enumeration",
            order: g.order(),
            limit,
        });
    }
    Ok(())
}

fn set_certificate(g: &Graph, set: Vec<usize>, k: usize) -> Certificate {
    let s = VertexSet::from_vertices(g.order(), set.iter().copied()).expect("vertices in range");
    Certificate::ViolatingSetS {
        odd_components: g.odd_component_count(&s),
        set,
        k,
        criterion: SetCriterion::FactorCritical,
        inner_matching: None,
    }
}

/// Odd-set criterion: `G` is `k`-factor-critical iff `n ≡ k (mod 2)` and
/// `o(G − S) ≤ |S| − k` for every `S` with `|S| ≥ k`. On a parity failure
/// the first `k` vertices serve as the violating set; otherwise the most
/// violated set is returned (largest excess, then smallest, then
/// lexicographically least).
pub fn k_factor_critical_odd_sets(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    check(g, k, limits)?;
    let n = g.order();
    if n % 2 != k % 2 {
        return Ok(Verdict::fails(set_certificate(g, (0..k).collect(), k)));
    }
    let rows = g.row_masks();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let vertices: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for r in k..=n {
        let cap = (n - r + k).saturating_sub(r);
        if cap == 0 || best.as_ref().is_some_and(|b| b.0 >= cap) {
            continue;
        }
        for_each_combination(&vertices, r, |s| {
            let odd = odd_components_mask(&rows, full & !mask_of(s));
            if odd + k > r && best.as_ref().is_none_or(|b| odd + k - r > b.0) {
                best = Some((odd + k - r, s.to_vec()));
            }
        });
    }
    Ok(match best {
        None => Verdict::holds(None),
        Some((_, set)) => Verdict::fails(set_certificate(g, set, k)),
    })
}

/// Definition: `G − S` has a perfect matching for every `k`-set `S`. A
/// failing `S` is returned together with a Tutte barrier `B` of `G − S`, so
/// `S ∪ B` violates the odd-set criterion.
pub fn k_factor_critical_definitional(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    check(g, k, limits)?;
    let n = g.order();
    let vertices: Vec<usize> = (0..n).collect();
    let mut failing: Option<Vec<usize>> = None;
    for_each_combination(&vertices, k, |s| {
        if failing.is_some() {
            return;
        }
        let keep = VertexSet::from_vertices(n, s.iter().copied())
            .expect("vertices in range")
            .complement();
        let (h, _) = g.induced(&keep);
        if !has_perfect_matching(&h) {
            failing = Some(s.to_vec());
        }
    });
    Ok(match failing {
        None => Verdict::holds(None),
        Some(s) => {
            let keep = VertexSet::from_vertices(n, s.iter().copied())
                .expect("vertices in range")
                .complement();
            let (h, map) = g.induced(&keep);
            let mut set = s;
            set.extend(tutte_barrier(&h).into_iter().map(|v| map[v]));
            set.sort_unstable();
            Verdict::fails(set_certificate(g, set, k))
        }
    })
}

/// Runs both routes and requires them to agree; returns the odd-set verdict.
pub fn is_k_factor_critical(g: &Graph, k: usize, limits: &Limits) -> Result<Verdict> {
    let by_sets = k_factor_critical_odd_sets(g, k, limits)?;
    let by_def = k_factor_critical_definitional(g, k, limits)?;
    if by_sets.holds != by_def.holds {
        return Err(Error::OracleDisagreement(format!(
            "odd-set criterion says {}, definition says {}",
            by_sets.holds, by_def.holds
        )));
    }
    Ok(by_sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        let lim = Limits::default();
        for n in 2..9 {
            for k in 1..n {
                let v = is_k_factor_critical(&Graph::complete(n), k, &lim).unwrap();
                assert_eq!(v.holds, n % 2 == k % 2, "n={n} k={k}");
                v.validate(&Graph::complete(n)).unwrap();
            }
        }
    }

    #[test]
    fn k22_is_not_two_factor_critical() {
        let g = Graph::complete_bipartite(2, 2);
        let v = is_k_factor_critical(&g, 2, &Limits::default()).unwrap();
        assert!(!v.holds);
        v.validate(&g).unwrap();
    }

    #[test]
    fn definitional_certificate_validates() {
        let g = Graph::path(5).without_bipartition();
        let v = k_factor_critical_definitional(&g, 1, &Limits::default()).unwrap();
        assert!(!v.holds);
        v.validate(&g).unwrap();
    }
}
