//! The cyclic coefficient tables of the closed-form structure function.
//!
//! ```text
//! c_s = (1/2k)   sum_t (k-1-2t)          omega_{s+t}
//! d_s = (1/2k^2) sum_t (t^2-(k-1)(t-1))  omega_{s+t}
//! ```
//!
//! with indices taken mod k. The weights are exact rationals; the float
//! tables are their evaluation against a concrete omega vector.

use num_rational::Ratio;
use serde::Serialize;

/// Evaluated `c_s`, `d_s` tables for one omega vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffSet {
    pub c: Vec<f64>,
    pub d: Vec<f64>,
}

/// `D(t) = t^2 - (k-1)(t-1)`, the quadratic weight of the `d_s` table.
pub fn d_weight_poly(k: usize, t: i64) -> i64 {
    let km1 = k as i64 - 1;
    t * t - km1 * (t - 1)
}

/// Coefficients `[constant, linear, quadratic]` of `D(t)`.
pub fn d_poly_coefficients(k: usize) -> [i64; 3] {
    let km1 = k as i64 - 1;
    [km1, -km1, 1]
}

/// Coefficients `[constant, linear]` of the linear `c`-weight `k-1-2t`.
pub fn c_poly_coefficients(k: usize) -> [i64; 2] {
    [k as i64 - 1, -2]
}

/// Exact rational weight matrix: entry `[s][j]` is the coefficient of
/// `omega_j` in the s-th table row.
pub type WeightTable = Vec<Vec<Ratio<i64>>>;

/// Exact rational weight tables for `c_s` (first) and `d_s` (second).
pub fn coefficient_weights(k: usize) -> (WeightTable, WeightTable) {
    assert!(k >= 1);
    let k_i = k as i64;
    let mut c = vec![vec![Ratio::from_integer(0); k]; k];
    let mut d = vec![vec![Ratio::from_integer(0); k]; k];
    for s in 0..k {
        for t in 0..k {
            let j = (s + t) % k;
            c[s][j] = Ratio::new(k_i - 1 - 2 * t as i64, 2 * k_i);
            d[s][j] = Ratio::new(d_weight_poly(k, t as i64), 2 * k_i * k_i);
        }
    }
    (c, d)
}

/// Float evaluation of the tables against a concrete omega vector.
pub(crate) fn evaluate(k: usize, omega: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let two_k = 2.0 * k as f64;
    let two_k2 = 2.0 * (k * k) as f64;
    let mut c = vec![0.0; k];
    let mut d = vec![0.0; k];
    for s in 0..k {
        let mut c_acc = 0.0;
        let mut d_acc = 0.0;
        for t in 0..k {
            let w = omega[(s + t) % k];
            c_acc += (k as i64 - 1 - 2 * t as i64) as f64 * w;
            d_acc += d_weight_poly(k, t as i64) as f64 * w;
        }
        c[s] = c_acc / two_k;
        d[s] = d_acc / two_k2;
    }
    (c, d)
}
