//! Pointwise verification of a k-step shape-invariance chain.
//!
//! Given sampled superpotentials `W_0..W_{k-1}` at parameter `a_0`, the
//! shifted `W_0(x, a_1)` and the remainder constants `R_0..R_{k-1}`, the k
//! relations
//!
//! ```text
//! W_s² + W_s' = W_{s+1}² - W_{s+1}' + R_s          (s < k-1)
//! W_{k-1}² + W_{k-1}' = W_0(·,a_1)² - W_0(·,a_1)' + R_{k-1}
//! ```
//!
//! are checked at every grid point. Derivatives are taken from the supplied
//! analytic samples when present, otherwise by fourth-order finite
//! differences (one-sided at the edges) so the residual is not dominated by
//! differentiation error.

use serde::{Deserialize, Serialize};

use super::{Grid, SchrodingerError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeSource {
    Analytic,
    /// Fourth-order central differences with one-sided edge stencils.
    Central4,
}

/// A sampled k-step chain on a shared grid.
#[derive(Debug, Clone, Deserialize)]
pub struct ChainSpec {
    pub grid: GridSpec,
    /// `W_s(x, a_0)` for `s = 0..k-1`, each sampled on the grid.
    pub superpotentials: Vec<Vec<f64>>,
    /// Optional analytic `W_s'` samples, same shape as `superpotentials`.
    #[serde(default)]
    pub derivatives: Option<Vec<Vec<f64>>>,
    /// Remainder constants `R_s(a_0)`.
    pub remainders: Vec<f64>,
    /// `W_0(x, a_1)` closing the chain.
    pub shifted: Vec<f64>,
    #[serde(default)]
    pub shifted_derivative: Option<Vec<f64>>,
}

/// Plain serde mirror of [`Grid`] so chain documents parse without touching
/// solver invariants until verification runs.
#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn build(&self) -> Result<Grid, SchrodingerError> {
        Grid::new(self.x_min, self.x_max, self.points)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    /// Max pointwise residual of each of the k relations.
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub derivative_source: DerivativeSource,
    pub tolerance: f64,
    pub pass: bool,
}

/// Fourth-order first derivative on a uniform grid.
pub(crate) fn derivative_central4(values: &[f64], h: f64) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 5, "fourth-order stencils need at least 5 points");
    let mut out = vec![0.0; n];
    let inv = 1.0 / (12.0 * h);
    out[0] = (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2] + 16.0 * values[3] - 3.0 * values[4]) * inv;
    out[1] = (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2] - 6.0 * values[3] + values[4]) * inv;
    for j in 2..n - 2 {
        out[j] = (values[j - 2] - 8.0 * values[j - 1] + 8.0 * values[j + 1] - values[j + 2]) * inv;
    }
    out[n - 2] = (3.0 * values[n - 1] + 10.0 * values[n - 2] - 18.0 * values[n - 3] + 6.0 * values[n - 4]
        - values[n - 5])
        * inv;
    out[n - 1] = (25.0 * values[n - 1] - 48.0 * values[n - 2] + 36.0 * values[n - 3] - 16.0 * values[n - 4]
        + 3.0 * values[n - 5])
        * inv;
    out
}

pub fn verify_chain(chain: &ChainSpec, tol: f64) -> Result<ChainReport, SchrodingerError> {
    let grid = chain.grid.build()?;
    let m = grid.points;
    let k = chain.superpotentials.len();
    if k == 0 {
        return Err(SchrodingerError::EmptyInput("superpotentials"));
    }
    if chain.remainders.len() != k {
        return Err(SchrodingerError::GridMismatch(format!(
            "{} remainders for a {k}-step chain",
            chain.remainders.len()
        )));
    }
    for (s, w) in chain.superpotentials.iter().enumerate() {
        if w.len() != m {
            return Err(SchrodingerError::GridMismatch(format!(
                "W_{s} sampled at {} points for a {m}-point grid",
                w.len()
            )));
        }
    }
    if chain.shifted.len() != m {
        return Err(SchrodingerError::GridMismatch(format!(
            "shifted W_0 sampled at {} points for a {m}-point grid",
            chain.shifted.len()
        )));
    }
    if let Some(d) = &chain.derivatives {
        if d.len() != k || d.iter().any(|v| v.len() != m) {
            return Err(SchrodingerError::GridMismatch("derivative samples".into()));
        }
    }
    if let Some(d) = &chain.shifted_derivative {
        if d.len() != m {
            return Err(SchrodingerError::GridMismatch("shifted derivative samples".into()));
        }
    }

    let analytic = chain.derivatives.is_some() && chain.shifted_derivative.is_some();
    let source = if analytic { DerivativeSource::Analytic } else { DerivativeSource::Central4 };
    let h = grid.spacing();
    let derivative = |values: &[f64], supplied: Option<&Vec<f64>>| -> Vec<f64> {
        match (analytic, supplied) {
            (true, Some(d)) => d.clone(),
            _ => derivative_central4(values, h),
        }
    };

    let w_primes: Vec<Vec<f64>> = chain
        .superpotentials
        .iter()
        .enumerate()
        .map(|(s, w)| derivative(w, chain.derivatives.as_ref().map(|d| &d[s])))
        .collect();
    let shifted_prime = derivative(&chain.shifted, chain.shifted_derivative.as_ref());

    let mut residuals = Vec::with_capacity(k);
    for s in 0..k {
        let (lhs_w, lhs_wp) = (&chain.superpotentials[s], &w_primes[s]);
        let (rhs_w, rhs_wp): (&[f64], &[f64]) = if s + 1 < k {
            (&chain.superpotentials[s + 1], &w_primes[s + 1])
        } else {
            (&chain.shifted, &shifted_prime)
        };
        let r = chain.remainders[s];
        let mut worst = 0.0f64;
        for j in 0..m {
            let lhs = lhs_w[j] * lhs_w[j] + lhs_wp[j];
            let rhs = rhs_w[j] * rhs_w[j] - rhs_wp[j] + r;
            worst = worst.max((lhs - rhs).abs());
        }
        residuals.push(worst);
    }
    let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
    Ok(ChainReport {
        residuals,
        max_residual,
        derivative_source: source,
        tolerance: tol,
        pass: max_residual <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_spec(x_min: f64, x_max: f64, points: usize) -> GridSpec {
        GridSpec { x_min, x_max, points }
    }

    fn sample(grid: &GridSpec, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let g = grid.build().unwrap();
        g.xs().iter().map(|&x| f(x)).collect()
    }

    #[test]
    fn harmonic_self_chain_is_exact() {
        // W_0 = W_1 = x with R_0 = R_1 = 2: x^2 + 1 = x^2 - 1 + 2.
        let grid = grid_spec(-4.0, 4.0, 201);
        let w = sample(&grid, |x| x);
        let wp = sample(&grid, |_| 1.0);
        let chain = ChainSpec {
            grid,
            superpotentials: vec![w.clone(), w.clone()],
            derivatives: Some(vec![wp.clone(), wp.clone()]),
            remainders: vec![2.0, 2.0],
            shifted: w,
            shifted_derivative: Some(wp),
        };
        let report = verify_chain(&chain, 1e-12).unwrap();
        assert_eq!(report.derivative_source, DerivativeSource::Analytic);
        assert!(report.pass, "residuals {:?}", report.residuals);
        assert!(report.max_residual <= 1e-13);
    }

    #[test]
    fn pt2_one_step_chain_with_analytic_derivatives() {
        // W = 3 tanh x, shifted W = 2 tanh x, R = 5 = 2 a_0 - 1.
        let grid = grid_spec(-6.0, 6.0, 401);
        let chain = ChainSpec {
            grid,
            superpotentials: vec![sample(&grid, |x| 3.0 * x.tanh())],
            derivatives: Some(vec![sample(&grid, |x| 3.0 / (x.cosh() * x.cosh()))]),
            remainders: vec![5.0],
            shifted: sample(&grid, |x| 2.0 * x.tanh()),
            shifted_derivative: Some(sample(&grid, |x| 2.0 / (x.cosh() * x.cosh()))),
        };
        let report = verify_chain(&chain, 1e-12).unwrap();
        assert!(report.pass, "residuals {:?}", report.residuals);
    }

    #[test]
    fn numeric_derivatives_are_flagged_and_accurate() {
        let grid = grid_spec(-6.0, 6.0, 1201);
        let chain = ChainSpec {
            grid,
            superpotentials: vec![sample(&grid, |x| 3.0 * x.tanh())],
            derivatives: None,
            remainders: vec![5.0],
            shifted: sample(&grid, |x| 2.0 * x.tanh()),
            shifted_derivative: None,
        };
        let report = verify_chain(&chain, 1e-6).unwrap();
        assert_eq!(report.derivative_source, DerivativeSource::Central4);
        assert!(report.pass, "max residual {}", report.max_residual);
    }

    #[test]
    fn perturbed_remainder_fails_with_matching_residual() {
        let grid = grid_spec(-4.0, 4.0, 201);
        let w = sample(&grid, |x| x);
        let wp = sample(&grid, |_| 1.0);
        let chain = ChainSpec {
            grid,
            superpotentials: vec![w.clone(), w.clone()],
            derivatives: Some(vec![wp.clone(), wp.clone()]),
            remainders: vec![2.0, 2.1],
            shifted: w,
            shifted_derivative: Some(wp),
        };
        let report = verify_chain(&chain, 1e-10).unwrap();
        assert!(!report.pass);
        assert!((report.residuals[1] - 0.1).abs() < 1e-12);
        assert!(report.residuals[0] < 1e-13);
    }

    #[test]
    fn constant_offset_of_both_sides_leaves_residuals_unchanged() {
        // Gauge sanity: adding c to every W_s^2 shifts both sides of each
        // relation equally, so residuals cannot move. Constant
        // superpotentials realize the shift exactly (W -> sqrt(W^2 + c)
        // keeps W' = 0).
        let grid = grid_spec(-4.0, 4.0, 201);
        let build = |squares: [f64; 2], remainders: Vec<f64>| ChainSpec {
            grid,
            superpotentials: vec![
                sample(&grid, |_| squares[0].sqrt()),
                sample(&grid, |_| squares[1].sqrt()),
            ],
            derivatives: Some(vec![sample(&grid, |_| 0.0), sample(&grid, |_| 0.0)]),
            remainders,
            shifted: sample(&grid, |_| squares[0].sqrt()),
            shifted_derivative: Some(sample(&grid, |_| 0.0)),
        };
        let base = verify_chain(&build([4.0, 9.0], vec![-4.9, 5.2]), 1e-10).unwrap();
        let offset = verify_chain(&build([4.0 + 16.0, 9.0 + 16.0], vec![-4.9, 5.2]), 1e-10).unwrap();
        for (a, b) in base.residuals.iter().zip(offset.residuals.iter()) {
            assert!((a - b).abs() < 1e-12, "base {a} vs offset {b}");
        }
        // And the residuals themselves are the relation mismatches.
        assert!((base.residuals[0] - (4.0f64 - 9.0 + 4.9).abs()).abs() < 1e-12);
        assert!((base.residuals[1] - (9.0f64 - 4.0 - 5.2).abs()).abs() < 1e-12);
    }

    #[test]
    fn grid_mismatch_detected() {
        let grid = grid_spec(-4.0, 4.0, 201);
        let w = sample(&grid, |x| x);
        let chain = ChainSpec {
            grid,
            superpotentials: vec![w.clone(), w[..200].to_vec()],
            derivatives: None,
            remainders: vec![2.0, 2.0],
            shifted: w,
            shifted_derivative: None,
        };
        assert!(matches!(verify_chain(&chain, 1e-8), Err(SchrodingerError::GridMismatch(_))));
    }
}
