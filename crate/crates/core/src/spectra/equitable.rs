use std::collections::BTreeMap;

use serde::Serialize;

use super::{full_spectrum, SymMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Ordered list of disjoint, nonempty vertex classes covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<Vec<Vertex>>,
}

impl Partition {
    /// Validates that `classes` cover `0..order` exactly once with no empty class.
    /// Members are sorted within each class; class order is kept.
    pub fn new(order: usize, classes: Vec<Vec<Vertex>>) -> Result<Partition> {
        let mut seen = vec![false; order];
        let mut classes = classes;
        for (i, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition(format!("class {i} is empty")));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no class")));
        }
        Ok(Partition { classes })
    }

    /// One class holding every vertex (no classes when `order` is 0).
    pub fn trivial(order: usize) -> Partition {
        let classes = if order == 0 { vec![] } else { vec![(0..order).collect()] };
        Partition { classes }
    }

    /// Builds a partition from per-vertex labels; classes are ordered by label.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut by_label: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        Partition {
            classes: by_label.into_values().collect(),
        }
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Class index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                labels[v] = i;
            }
        }
        labels
    }
}

/// Coarsest equitable refinement of `seed`. Classes are repeatedly split by
/// the exact vector of neighbour counts into the current classes until no
/// class splits. The result lists classes by seed class, then by smallest
/// member.
pub fn refine_equitable(g: &Graph, seed: &Partition) -> Result<Partition> {
    let n = g.order();
    if seed.order() != n {
        return Err(Error::InvalidPartition(format!(
            "seed covers {} vertices, graph has {n}",
            seed.order()
        )));
    }
    let seed_labels = seed.labels();
    let adj = g.adjacency_lists();
    let mut labels = seed_labels.clone();
    let mut count = seed.len();
    loop {
        let mut signatures: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut keyed = Vec::with_capacity(n);
        for v in 0..n {
            let mut counts = vec![0usize; count];
            for &w in &adj[v] {
                counts[labels[w]] += 1;
            }
            keyed.push((labels[v], counts));
        }
        for key in &keyed {
            let next = signatures.len();
            signatures.entry(key.clone()).or_insert(next);
        }
        // Renumber in sorted key order so the labelling is canonical.
        for (i, id) in signatures.values_mut().enumerate() {
            *id = i;
        }
        let refined: Vec<usize> = keyed.iter().map(|k| signatures[k]).collect();
        let new_count = signatures.len();
        labels = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); count];
    for v in 0..n {
        classes[labels[v]].push(v);
    }
    classes.sort_by_key(|c| (seed_labels[c[0]], c[0]));
    Ok(Partition { classes })
}

/// Quotient of an equitable partition: `b[i][j]` is the number of
/// neighbours in class `j` of any vertex of class `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    entries: Vec<Vec<usize>>,
    class_sizes: Vec<usize>,
}

/// Quotient matrix of `g` under `p`, checked exactly: every vertex of a class
/// must have the same neighbour count into every class.
pub fn quotient(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    let p = Partition::new(g.order(), p.classes.clone())?;
    let labels = p.labels();
    let r = p.len();
    let mut entries = vec![vec![0usize; r]; r];
    for (i, class) in p.classes.iter().enumerate() {
        for (pos, &v) in class.iter().enumerate() {
            let mut counts = vec![0usize; r];
            for w in g.neighbors(v) {
                counts[labels[w]] += 1;
            }
            if pos == 0 {
                entries[i] = counts;
                continue;
            }
            for j in 0..r {
                if counts[j] != entries[i][j] {
                    return Err(Error::NotEquitable {
                        vertex: v,
                        to: j,
                        got: counts[j],
                        expected: entries[i][j],
                    });
                }
            }
        }
    }
    Ok(QuotientMatrix {
        entries,
        class_sizes: p.sizes(),
    })
}

impl QuotientMatrix {
    /// Builds a quotient from explicit counts. Requires the edge-count
    /// balance `b[i][j]·|C_i| = b[j][i]·|C_j|` and `b[i][j] ≤ |C_j|`.
    pub fn from_counts(entries: Vec<Vec<usize>>, class_sizes: Vec<usize>) -> Result<QuotientMatrix> {
        let r = class_sizes.len();
        if entries.len() != r || entries.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidPartition(format!("quotient must be {r}x{r}")));
        }
        for i in 0..r {
            if class_sizes[i] == 0 {
                return Err(Error::InvalidPartition(format!("class {i} is empty")));
            }
            for j in 0..r {
                let cap = class_sizes[j] - usize::from(i == j);
                if entries[i][j] > cap {
                    return Err(Error::InvalidPartition(format!(
                        "entry ({i},{j}) = {} exceeds {cap}",
                        entries[i][j]
                    )));
                }
                if entries[i][j] * class_sizes[i] != entries[j][i] * class_sizes[j] {
                    return Err(Error::InvalidPartition(format!(
                        "edge counts between classes {i} and {j} do not balance"
                    )));
                }
            }
        }
        Ok(QuotientMatrix { entries, class_sizes })
    }

    pub fn size(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// `e(C_i, C_j)` for `i ≠ j`, or `e(C_i)` for `i = j`.
    pub fn edge_count(&self, i: usize, j: usize) -> usize {
        let total = self.entries[i][j] * self.class_sizes[i];
        if i == j {
            total / 2
        } else {
            total
        }
    }

    /// Symmetric matrix `D^{1/2} B D^{-1/2}` with entries `sqrt(b_ij b_ji)`,
    /// which has the same spectrum as the quotient.
    pub fn symmetrized(&self) -> SymMatrix {
        let r = self.size();
        let data = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .map(|(i, j)| ((self.entries[i][j] * self.entries[j][i]) as f64).sqrt())
            .collect();
        SymMatrix::new(r, data).expect("balanced counts give a symmetric matrix")
    }

    /// Eigenvalues of the quotient, descending.
    pub fn spectrum(&self, tol: f64) -> Result<Vec<f64>> {
        full_spectrum(&self.symmetrized(), tol)
    }

    /// Largest eigenvalue of the quotient.
    pub fn lambda1(&self, tol: f64) -> Result<f64> {
        Ok(self.spectrum(tol)?.first().copied().unwrap_or(0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_one_class() {
        let g = Graph::complete(6);
        let p = refine_equitable(&g, &Partition::trivial(6)).unwrap();
        assert_eq!(p.sizes(), vec![6]);
        let q = quotient(&g, &p).unwrap();
        assert_eq!(q.entries(), &[vec![5]]);
        assert!((q.lambda1(1e-12).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn path_splits_ends_from_middle() {
        let g = Graph::path(5).without_bipartition();
        let p = refine_equitable(&g, &Partition::trivial(5)).unwrap();
        assert_eq!(p.classes(), &[vec![0, 4], vec![1, 3], vec![2]]);
        let q = quotient(&g, &p).unwrap();
        assert_eq!(q.entries(), &[vec![0, 1, 0], vec![1, 0, 1], vec![0, 2, 0]]);
        assert!((q.lambda1(1e-12).unwrap() - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn seed_is_respected() {
        let g = Graph::cycle(4).without_bipartition();
        let seed = Partition::new(4, vec![vec![1, 2], vec![0, 3]]).unwrap();
        let p = refine_equitable(&g, &seed).unwrap();
        // Every vertex of C4 has one neighbour in each seed class.
        assert_eq!(p.classes(), &[vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn rejects_non_equitable() {
        let g = Graph::path(3).without_bipartition();
        let err = quotient(&g, &Partition::trivial(3)).unwrap_err();
        assert!(matches!(err, Error::NotEquitable { vertex: 1, .. }));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(QuotientMatrix::from_counts(vec![vec![0, 1], vec![1, 0]], vec![1, 2]).is_err());
    }
}
