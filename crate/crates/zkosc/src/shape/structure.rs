//! Closed-form and recursive structure functions.
//!
//! Along the descending tower `nu = N0 - n/k` the structure function obeys
//! `G(n+1) - G(n) = -R(alpha(N0 - n/k))`. The closed form is
//!
//! ```text
//! G(n) = C0 - (Omega_k/k) (C + (n-1) delta/(2k)) n
//!           + (C + (2n-1) delta/(2k)) c_{n mod k} - delta d_{n mod k}
//! ```
//!
//! and the recursion seeded at `G(0)` is kept as an independent oracle for
//! it. `C0` is a gauge: it shifts every level equally and cancels from all
//! energy differences, so it is stored but never enters the spectrum paths.

use serde::Serialize;

use super::{ShapeError, SipParams};
use crate::algebra::StructureFn;
use crate::fock::FockWindow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableMethod {
    Closed,
    Recursive,
}

/// Tabulated structure-function values `G(n) = F(alpha(N0 - n/k))`.
#[derive(Debug, Clone, Serialize)]
pub struct StructureTable {
    pub params: SipParams,
    pub values: Vec<f64>,
    pub method: TableMethod,
    pub omega_total: f64,
}

impl StructureTable {
    pub fn is_positive_definite(&self) -> bool {
        self.values.iter().all(|&v| v > 0.0)
    }
}

impl SipParams {
    /// Closed-form value without the `C0` gauge term. Defined for real `n`
    /// so the checker can probe one step beyond a window edge; the cyclic
    /// index is read from the nearest integer level.
    pub(crate) fn structure_core(&self, n: f64) -> f64 {
        let k = self.k() as f64;
        let s = (n.round() as i64).rem_euclid(self.k() as i64) as usize;
        let cee = self.c_constant();
        let delta = self.delta();
        -(self.omega_total() / k) * (cee + (n - 1.0) * delta / (2.0 * k)) * n + self.delta_term(n, s)
    }

    /// The grade-selected part `(C + (2n-1) delta/(2k)) c_s - delta d_s`.
    pub(crate) fn delta_term(&self, n: f64, s: usize) -> f64 {
        let k = self.k() as f64;
        (self.c_constant() + (2.0 * n - 1.0) * self.delta() / (2.0 * k)) * self.coeff_c()[s]
            - self.delta() * self.coeff_d()[s]
    }

    /// Closed-form structure function at tower level `n`.
    pub fn structure_closed(&self, n: u64) -> f64 {
        self.c0() + self.structure_core(n as f64)
    }

    /// Table of closed-form values for `n = 0..=n_max`.
    pub fn structure_table_closed(&self, n_max: u64) -> StructureTable {
        let values = (0..=n_max).map(|n| self.structure_closed(n)).collect();
        StructureTable {
            params: self.clone(),
            values,
            method: TableMethod::Closed,
            omega_total: self.omega_total(),
        }
    }

    /// Independent oracle: the remainder recursion seeded at the closed-form
    /// `G(0)`, evaluated without reference to the closed form at `n > 0`.
    pub fn structure_recursive(&self, n_max: u64) -> StructureTable {
        let mut values = Vec::with_capacity(n_max as usize + 1);
        values.push(self.structure_closed(0));
        for n in 0..n_max {
            let prev = *values.last().unwrap();
            values.push(prev - self.unified_remainder(n));
        }
        StructureTable {
            params: self.clone(),
            values,
            method: TableMethod::Recursive,
            omega_total: self.omega_total(),
        }
    }

    /// Smallest `C0 >= 0` that keeps `G(1..=n_max)` at or above `margin`.
    ///
    /// Energies never depend on `C0`, so this is a helper rather than an
    /// automatic repair; the default gauge stays `C0 = 0`.
    pub fn choose_c0(&self, n_max: u64, margin: f64) -> f64 {
        assert!(margin > 0.0, "margin must be positive");
        if n_max == 0 {
            return 0.0;
        }
        let min_core = (1..=n_max)
            .map(|n| self.structure_core(n as f64))
            .fold(f64::INFINITY, f64::min);
        (margin - min_core).max(0.0)
    }

    /// Raw closed-form structure function over `nu = N0 - n/k`, with the
    /// graded decomposition `F = f + g_{grade} Pi_{grade}` attached.
    ///
    /// The per-grade parts are indexed by Fock grade; at a descending-tower
    /// level `n` the Fock grade is `(-n) mod k`, so grade `g` selects the
    /// cyclic table entry `(-g) mod k`.
    pub fn structure_as_fn(&self) -> StructureFn {
        self.structure_fn_with_shift(0.0)
    }

    /// Structure function pinned so the lowest-`nu` state of `window` sits
    /// exactly at zero, making it a lowest-weight tower for
    /// `algebra::build_ladders`.
    pub fn structure_as_fn_pinned(&self, window: &FockWindow) -> Result<StructureFn, ShapeError> {
        let bottom = window.bottom_state();
        let shift = self.c0() + self.structure_core(self.level_of_nu(window.nu_f64(bottom)));
        let pinned = self.structure_fn_with_shift(shift);
        for j in 0..window.depth() {
            let nu = window.nu_f64(j);
            let value = if j == bottom { 0.0 } else { pinned.eval(nu) };
            if value < 0.0 {
                return Err(ShapeError::NegativeStructure { nu, value });
            }
        }
        Ok(pinned)
    }

    /// Tower level of a number-eigenvalue: `n = k (N0 - nu)`.
    fn level_of_nu(&self, nu: f64) -> f64 {
        self.k() as f64 * (self.n0() as f64 - nu)
    }

    fn structure_fn_with_shift(&self, shift: f64) -> StructureFn {
        let k = self.k();
        let total = {
            let p = self.clone();
            move |nu: f64| {
                let n = p.level_of_nu(nu);
                let raw = p.c0() + p.structure_core(n) - shift;
                // Levels that cancel to rounding noise are genuine zeros of
                // the pinned tower; clamp them so sqrt stays real.
                if raw < 0.0 && raw > -1e-12 * (1.0 + shift.abs()) {
                    0.0
                } else {
                    raw
                }
            }
        };
        let base = {
            let p = self.clone();
            move |nu: f64| {
                let n = p.level_of_nu(nu);
                let kf = p.k() as f64;
                p.c0() - shift
                    - (p.omega_total() / kf) * (p.c_constant() + (n - 1.0) * p.delta() / (2.0 * kf)) * n
            }
        };
        let per_grade: Vec<std::sync::Arc<dyn Fn(f64) -> f64 + Send + Sync>> = (0..k)
            .map(|g| {
                let p = self.clone();
                let tower_index = (k - g) % k;
                std::sync::Arc::new(move |nu: f64| p.delta_term(p.level_of_nu(nu), tower_index))
                    as std::sync::Arc<dyn Fn(f64) -> f64 + Send + Sync>
            })
            .collect();
        StructureFn::with_decomposition(total, base, per_grade)
    }
}
