//! Translational k-step shape invariance.
//!
//! A parameter set fixes the k per-step remainders `R_s(a_m) = sigma_s + a_m
//! omega_s` with `a_m = a_0 + m*delta`. The per-step constants must be
//! compatible, `sigma_s/omega_s = sigma_0/omega_0 + (s/k) delta`, for a
//! single unified remainder
//!
//! ```text
//! R(alpha(N0 - n/k)) = (C + (n/k) delta) * omega_{n mod k},   C = sigma_0/omega_0 + a_0
//! ```
//!
//! to exist; validation rejects incompatible inputs instead of repairing
//! them. The structure function, its closed form with the cyclic `c_s`/`d_s`
//! coefficient tables, and the three spectrum routes live in the submodules.

mod coeffs;
mod spectrum;
mod structure;

pub use coeffs::{
    c_poly_coefficients, coefficient_weights, d_poly_coefficients, d_weight_poly, CoeffSet, WeightTable,
};
pub use spectrum::{CyclicInfo, SpectrumMethod, SpectrumReport};
pub use structure::{StructureTable, TableMethod};

use serde::Serialize;
use thiserror::Error;

/// Relative tolerance for the remainder-compatibility check.
pub const COMPATIBILITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ShapeError {
    #[error("k must be at least 1")]
    ZeroSteps,
    #[error("{field} has length {actual}, expected k = {expected}")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("omega[{s}] must be nonzero")]
    ZeroOmega { s: usize },
    #[error(
        "remainders are incompatible at s = {s}: sigma_s/omega_s = {actual}, \
         expected sigma_0/omega_0 + (s/k) delta = {expected}"
    )]
    IncompatibleRemainders { s: usize, actual: f64, expected: f64 },
    #[error("parameter {0} is not finite")]
    NonFinite(&'static str),
    #[error(
        "structure function is negative at window state nu = {nu}: F = {value} \
         (choose_c0 can select a positive-definite shift)"
    )]
    NegativeStructure { nu: f64, value: f64 },
}

/// `|a - b| / max(1, |a|, |b|)` — relative deviation with a unit floor so
/// comparisons against zero stay meaningful.
pub fn relative_deviation(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1.0_f64.max(a.abs()).max(b.abs())
}

/// Validated parameter record of a translational k-step shape-invariance
/// problem.
///
/// Construction is validation: length checks, nonzero `omega`, and the
/// compatibility relation all hold for every value of this type. The derived
/// constant `C`, the coefficient tables and `Omega_k` are computed once here.
#[derive(Debug, Clone, Serialize)]
pub struct SipParams {
    k: usize,
    sigma: Vec<f64>,
    omega: Vec<f64>,
    a0: f64,
    delta: f64,
    n0: u64,
    c0: f64,
    #[serde(skip)]
    cee: f64,
    #[serde(skip)]
    coeff_c: Vec<f64>,
    #[serde(skip)]
    coeff_d: Vec<f64>,
    #[serde(skip)]
    omega_total: f64,
}

impl SipParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        k: usize,
        sigma: Vec<f64>,
        omega: Vec<f64>,
        a0: f64,
        delta: f64,
        n0: u64,
        c0: f64,
    ) -> Result<Self, ShapeError> {
        if k == 0 {
            return Err(ShapeError::ZeroSteps);
        }
        if sigma.len() != k {
            return Err(ShapeError::LengthMismatch { field: "sigma", expected: k, actual: sigma.len() });
        }
        if omega.len() != k {
            return Err(ShapeError::LengthMismatch { field: "omega", expected: k, actual: omega.len() });
        }
        for (name, value) in [("a0", a0), ("delta", delta), ("c0", c0)] {
            if !value.is_finite() {
                return Err(ShapeError::NonFinite(name));
            }
        }
        if sigma.iter().any(|v| !v.is_finite()) {
            return Err(ShapeError::NonFinite("sigma"));
        }
        if omega.iter().any(|v| !v.is_finite()) {
            return Err(ShapeError::NonFinite("omega"));
        }
        for (s, &w) in omega.iter().enumerate() {
            if w == 0.0 {
                return Err(ShapeError::ZeroOmega { s });
            }
        }
        let base_ratio = sigma[0] / omega[0];
        for s in 1..k {
            let actual = sigma[s] / omega[s];
            let expected = base_ratio + (s as f64 / k as f64) * delta;
            if relative_deviation(actual, expected) > COMPATIBILITY_TOLERANCE {
                return Err(ShapeError::IncompatibleRemainders { s, actual, expected });
            }
        }
        let cee = base_ratio + a0;
        if !cee.is_finite() {
            return Err(ShapeError::NonFinite("sigma_0/omega_0 + a0"));
        }
        let (coeff_c, coeff_d) = coeffs::evaluate(k, &omega);
        let omega_total = omega.iter().sum();
        Ok(Self { k, sigma, omega, a0, delta, n0, c0, cee, coeff_c, coeff_d, omega_total })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn n0(&self) -> u64 {
        self.n0
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    /// The derived constant `C = sigma_0/omega_0 + a_0`.
    pub fn c_constant(&self) -> f64 {
        self.cee
    }

    /// `Omega_k = sum_s omega_s`.
    pub fn omega_total(&self) -> f64 {
        self.omega_total
    }

    /// Same parameters with a different positivity constant. `C_0` never
    /// affects energies, so this needs no revalidation.
    pub fn with_c0(&self, c0: f64) -> Self {
        let mut out = self.clone();
        out.c0 = c0;
        out
    }

    /// Same parameters with a different descending-tower anchor.
    pub fn with_n0(&self, n0: u64) -> Self {
        let mut out = self.clone();
        out.n0 = n0;
        out
    }

    /// Per-step remainder `R_s(a_m) = sigma_s + (a_0 + m*delta) * omega_s`.
    pub fn remainder_step(&self, s: usize, m: u64) -> f64 {
        assert!(s < self.k, "step index out of range");
        self.sigma[s] + (self.a0 + m as f64 * self.delta) * self.omega[s]
    }

    /// Unified remainder `R(alpha(N0 - n/k)) = (C + (n/k) delta) * omega_{n mod k}`.
    ///
    /// Equal to `remainder_step(n mod k, n div k)` up to floating-point
    /// rounding of the two evaluation routes.
    pub fn unified_remainder(&self, n: u64) -> f64 {
        let s = (n % self.k as u64) as usize;
        (self.cee + (n as f64 / self.k as f64) * self.delta) * self.omega[s]
    }

    /// The cyclic coefficient tables `c_s`, `d_s` for these omegas.
    pub fn coefficients(&self) -> CoeffSet {
        CoeffSet { c: self.coeff_c.clone(), d: self.coeff_d.clone() }
    }

    pub(crate) fn coeff_c(&self) -> &[f64] {
        &self.coeff_c
    }

    pub(crate) fn coeff_d(&self) -> &[f64] {
        &self.coeff_d
    }

    /// A zero translation makes the remainders cycle with period k.
    pub fn is_cyclic(&self) -> bool {
        self.delta == 0.0
    }

    /// For cyclic parameters, the repeating remainder pattern
    /// `C*omega_0, ..., C*omega_{k-1}` described as the cycle `omega` up to
    /// the constant `C`.
    pub fn cyclic_info(&self) -> Option<CyclicInfo> {
        self.is_cyclic().then(|| CyclicInfo {
            constant: self.cee,
            cycle: self.omega.clone(),
        })
    }
}
