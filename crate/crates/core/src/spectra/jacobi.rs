use super::SymMatrix;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (descending) with unit eigenvectors stored as columns
/// `vectors[k]`.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn jacobi_eigen(m: &SymMatrix) -> Result<Eigen> {
    let n = m.dim();
    let mut a: Vec<f64> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let floor = (f64::EPSILON * frob).powi(2) * 1e-2;

    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if off <= floor || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged {
                iterations: sweeps,
                residual: off.sqrt(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    Ok(Eigen {
        values: idx.iter().map(|&i| a[i * n + i]).collect(),
        vectors: idx
            .iter()
            .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
            .collect(),
    })
}

/// All eigenvalues in descending order; every eigenpair is checked to have
/// `‖Mx − λx‖∞ ≤ tol`, or within a few ulps of `‖M‖_F` when `tol` is below
/// what double precision can resolve at that scale.
pub fn full_spectrum(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    let eig = jacobi_eigen(m)?;
    let frob = (0..m.dim()).flat_map(|i| m.row(i)).map(|x| x * x).sum::<f64>().sqrt();
    let tol = tol.max(64.0 * f64::EPSILON * frob);
    let mut worst: f64 = 0.0;
    for (lambda, x) in eig.values.iter().zip(&eig.vectors) {
        let mx = m.mul_vec(x);
        let r = mx
            .iter()
            .zip(x)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(r);
    }
    if worst > tol {
        return Err(Error::NotConverged {
            iterations: MAX_SWEEPS,
            residual: worst,
        });
    }
    Ok(eig.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn k2_and_zero_matrix() {
        let k2 = SymMatrix::adjacency(&Graph::complete(2));
        assert!(close(&full_spectrum(&k2, 1e-12).unwrap(), &[1.0, -1.0], 1e-12));
        let z = SymMatrix::zeros(3);
        assert_eq!(full_spectrum(&z, 1e-12).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn cycle_c4_matches_circulant_formula() {
        // Eigenvalues of C_n are 2 cos(2πj/n).
        let c4 = SymMatrix::adjacency(&Graph::cycle(4));
        assert!(close(&full_spectrum(&c4, 1e-12).unwrap(), &[2.0, 0.0, 0.0, -2.0], 1e-12));
        let c7 = SymMatrix::adjacency(&Graph::cycle(7));
        let mut expected: Vec<f64> = (0..7)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos())
            .collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        assert!(close(&full_spectrum(&c7, 1e-11).unwrap(), &expected, 1e-11));
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert_eq!(
            SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(Error::NotSymmetric(0, 1))
        );
    }

    #[test]
    fn trace_is_preserved() {
        let m = SymMatrix::new(3, vec![2.0, -1.0, 0.5, -1.0, 3.0, 0.25, 0.5, 0.25, -4.0]).unwrap();
        let values = full_spectrum(&m, 1e-12).unwrap();
        assert!((values.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
