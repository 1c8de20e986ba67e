use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// `x⁴ + c2·x² + c0`, the characteristic polynomial of the 4×4 quotient of
/// `K_{s,s+k+1} ∇₁ K_{n/2−s, n/2−s−k−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteQuartic {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub c2: Ratio<i64>,
    pub c0: Ratio<i64>,
}

#[derive(Serialize)]
struct Coefficients {
    c4: String,
    c2: String,
    c0: String,
}

impl Serialize for BipartiteQuartic {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Coefficients {
            c4: "1".into(),
            c2: self.c2.to_string(),
            c0: self.c0.to_string(),
        }
        .serialize(ser)
    }
}

/// Exact coefficients for `(n, k, s)`; requires `n` even and
/// `n/2 − s − k − 1 ≥ 0`.
pub fn charpoly_b_s(n: usize, k: usize, s: usize) -> Result<BipartiteQuartic> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n / 2 < s + k + 1 {
        return Err(Error::InvalidParams(format!(
            "n/2 - s - k - 1 = {}/2 - {s} - {k} - 1 is negative",
            n
        )));
    }
    if n > 1 << 20 {
        return Err(Error::InvalidParams(format!("n = {n} is too large for exact coefficients")));
    }
    let (n, k, s) = (n as i64, k as i64, s as i64);
    let c2 = Ratio::new((2 * k + 2 * s + 2 - n) * n, 4) - Ratio::from_integer((s + k + 1) * s);
    let c0 = -Ratio::new(s * (n - 2 * s) * (s + k + 1) * (2 * s - n + 2 * k + 2), 4);
    Ok(BipartiteQuartic {
        n: n as usize,
        k: k as usize,
        s: s as usize,
        c2,
        c0,
    })
}

fn to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl BipartiteQuartic {
    /// Evaluates the polynomial exactly at a rational point.
    pub fn eval(&self, x: Ratio<i64>) -> Ratio<i64> {
        let x2 = x * x;
        x2 * x2 + self.c2 * x2 + self.c0
    }

    /// Largest real root `sqrt((−c2 + sqrt(c2² − 4c0)) / 2)`.
    pub fn largest_root(&self) -> f64 {
        let c2 = to_f64(self.c2);
        let c0 = to_f64(self.c0);
        let disc = (c2 * c2 - 4.0 * c0).max(0.0);
        ((-c2 + disc.sqrt()) / 2.0).max(0.0).sqrt()
    }
}
