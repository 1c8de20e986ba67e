//! Exact matching and factor checkers. Each criterion comes with a
//! definitional or flow-based counterpart so the two can be compared, and
//! every negative verdict carries a [`Certificate`] that can be rechecked
//! independently.

mod certificate;
mod critical;
mod extend;
mod factor;
mod hamilton;
mod matching;

pub use certificate::{Certificate, SetCriterion, SubsetRule, Verdict};
pub use critical::{is_k_factor_critical, k_factor_critical_definitional, k_factor_critical_odd_sets};
pub use extend::{
    is_k_extendable_chen, is_k_extendable_definitional, is_k_extendable_plummer, plummer_enumeration,
    plummer_surplus,
};
pub use factor::{decompose_edge_disjoint_pms, find_k_factor_flow, has_f_factor_ore, FactorSpec};
pub use hamilton::{connected_k_factor_search, hamiltonian_cycle, ConnectedFactor};
pub use matching::{
    has_perfect_matching, matching_number, matching_number_exhaustive, max_matching_bipartite,
    max_matching_general, tutte_barrier, tutte_berge_bound, Matching, EXHAUSTIVE_MATCHING_LIMIT,
};

/// Size limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order (or side, for subset enumeration over `A`) for subset
    /// enumeration.
    pub exhaustive: usize,
    pub hamilton: usize,
    pub connected_factor: usize,
    /// Node budget for the connected-factor search.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive: 20,
            hamilton: 20,
            connected_factor: 16,
            search_budget: 2_000_000,
        }
    }
}

/// Calls `f` on every `r`-subset of `items`, in lexicographic order of
/// positions.
pub(crate) fn for_each_combination(items: &[usize], r: usize, mut f: impl FnMut(&[usize])) {
    let n = items.len();
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&chosen);
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + n - r) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..r {
            chosen[j] = items[idx[j]];
        }
    }
}

/// Number of odd components among the vertices of `avail`, using row masks.
pub(crate) fn odd_components_mask(rows: &[u64], avail: u64) -> usize {
    let mut left = avail;
    let mut odd = 0;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & avail & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        odd += (comp.count_ones() % 2) as usize;
    }
    odd
}

pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}
