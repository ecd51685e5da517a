//! Numerical cross-validation of the algebraic spectra.
//!
//! Partner potentials `V∓ = W² ∓ W'` are sampled from built-in superpotential
//! families, the 1-D Hamiltonian `H = -d²/dx² + V` (units `hbar = 2m = 1`)
//! is discretized by symmetric second-order central differences with
//! Dirichlet walls at the grid endpoints, and the lowest eigenvalues come
//! from Sturm bisection on the resulting tridiagonal matrix.

mod chain;
mod compare;
mod eigen;

pub use chain::{verify_chain, ChainReport, ChainSpec, DerivativeSource};
pub use compare::{compare_spectra, LevelComparison, SpectrumComparison};

use serde::Serialize;
use thiserror::Error;

use crate::shape::SipParams;

/// Fraction of the continuum ceiling below which algebraic levels are still
/// compared against box eigenvalues.
pub const CEILING_EXCLUSION_FRACTION: f64 = 0.95;

/// Minimum distance of a Pöschl-Teller I grid from the `±π/2` poles.
pub const PT1_MIN_INSET: f64 = 1e-5;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SchrodingerError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("family parameter out of domain: {0}")]
    DomainViolation(String),
    #[error("requested {count} eigenvalues but the grid supports at most {max}")]
    CountTooLarge { count: usize, max: usize },
    #[error("eigensolver failed to converge: {0}")]
    ConvergenceFailure(String),
    #[error("sampled arrays disagree with the grid: {0}")]
    GridMismatch(String),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("potential contains a non-finite sample at x = {0}")]
    NonFiniteSample(f64),
}

/// Uniform grid with walls at both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self, SchrodingerError> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(SchrodingerError::InvalidGrid("endpoints must be finite".into()));
        }
        if x_min >= x_max {
            return Err(SchrodingerError::InvalidGrid(format!(
                "x_min = {x_min} must be below x_max = {x_max}"
            )));
        }
        if points < 16 {
            return Err(SchrodingerError::InvalidGrid(format!(
                "{points} points is below the minimum of 16"
            )));
        }
        Ok(Self { x_min, x_max, points })
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }

    pub fn xs(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.points).map(|j| self.x_min + j as f64 * h).collect()
    }
}

/// A potential sampled on a grid; every value finite by construction.
#[derive(Debug, Clone, Serialize)]
pub struct SampledPotential {
    pub grid: Grid,
    pub values: Vec<f64>,
    pub family_tag: String,
}

impl SampledPotential {
    pub fn new(grid: Grid, values: Vec<f64>, family_tag: impl Into<String>) -> Result<Self, SchrodingerError> {
        if values.len() != grid.points {
            return Err(SchrodingerError::GridMismatch(format!(
                "{} samples for a {}-point grid",
                values.len(),
                grid.points
            )));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(SchrodingerError::NonFiniteSample(grid.x_min + j as f64 * grid.spacing()));
        }
        Ok(Self { grid, values, family_tag: family_tag.into() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    Dirichlet,
}

/// Sorted low-lying Dirichlet eigenvalues of one potential.
#[derive(Debug, Clone, Serialize)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    pub count: usize,
    pub grid: Grid,
    pub boundary: Boundary,
}

/// Built-in one-step shape invariant superpotential families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "family", content = "parameter")]
pub enum Family {
    /// `W = (omega/2) x`
    Harmonic(f64),
    /// `W = A tan x` on `(-pi/2, pi/2)`
    PoschlTellerI(f64),
    /// `W = A tanh x`
    PoschlTellerII(f64),
}

impl Family {
    pub fn parameter(&self) -> f64 {
        match self {
            Family::Harmonic(w) | Family::PoschlTellerI(w) | Family::PoschlTellerII(w) => *w,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Harmonic(_) => "harmonic",
            Family::PoschlTellerI(_) => "poschl_teller_i",
            Family::PoschlTellerII(_) => "poschl_teller_ii",
        }
    }

    fn validate(&self, grid: &Grid) -> Result<(), SchrodingerError> {
        if self.parameter() <= 0.0 {
            return Err(SchrodingerError::DomainViolation(format!(
                "{} requires a positive parameter, got {}",
                self.tag(),
                self.parameter()
            )));
        }
        if let Family::PoschlTellerI(_) = self {
            let wall = std::f64::consts::FRAC_PI_2 - PT1_MIN_INSET;
            if grid.x_min <= -wall || grid.x_max >= wall {
                return Err(SchrodingerError::DomainViolation(format!(
                    "Pöschl-Teller I grid [{}, {}] must lie strictly inside (-pi/2, pi/2) \
                     with an inset of at least {PT1_MIN_INSET}",
                    grid.x_min, grid.x_max
                )));
            }
        }
        Ok(())
    }

    pub fn superpotential(&self, x: f64) -> f64 {
        match self {
            Family::Harmonic(w) => 0.5 * w * x,
            Family::PoschlTellerI(a) => a * x.tan(),
            Family::PoschlTellerII(a) => a * x.tanh(),
        }
    }

    pub fn superpotential_derivative(&self, x: f64) -> f64 {
        match self {
            Family::Harmonic(w) => 0.5 * w,
            Family::PoschlTellerI(a) => {
                let sec = 1.0 / x.cos();
                a * sec * sec
            }
            Family::PoschlTellerII(a) => {
                let sech = 1.0 / x.cosh();
                a * sech * sech
            }
        }
    }

    /// Exact bound-state energies of `V⁻` in `hbar = 2m = 1` units.
    pub fn exact_energy(&self, n: u64) -> f64 {
        let n = n as f64;
        match self {
            Family::Harmonic(w) => n * w,
            Family::PoschlTellerI(a) => (a + n) * (a + n) - a * a,
            Family::PoschlTellerII(a) => a * a - (a - n) * (a - n),
        }
    }

    /// `lim_{|x| -> inf} V⁻(x)` when finite: the continuum edge that a box
    /// discretization cannot represent.
    pub fn continuum_ceiling(&self) -> Option<f64> {
        match self {
            Family::PoschlTellerII(a) => Some(a * a),
            _ => None,
        }
    }

    /// The canonical one-step parameter record reproducing this family's
    /// spectrum algebraically.
    pub fn algebraic_params(&self) -> SipParams {
        let (sigma, omega, a0, delta) = match self {
            Family::Harmonic(w) => (0.0, *w, 1.0, 0.0),
            Family::PoschlTellerI(a) => (1.0, 2.0, *a, 1.0),
            Family::PoschlTellerII(a) => (-1.0, 2.0, *a, -1.0),
        };
        SipParams::new(1, vec![sigma], vec![omega], a0, delta, 64, 0.0)
            .expect("built-in family parameters are compatible")
    }

    /// A grid suited to the family's bound states.
    pub fn default_grid(&self) -> Grid {
        match self {
            Family::Harmonic(_) => Grid::new(-8.0, 8.0, 2000).unwrap(),
            Family::PoschlTellerI(_) => {
                let wall = std::f64::consts::FRAC_PI_2 - 2e-4;
                Grid::new(-wall, wall, 4000).unwrap()
            }
            Family::PoschlTellerII(_) => Grid::new(-12.0, 12.0, 3000).unwrap(),
        }
    }
}

/// Superpotential and partner-potential samples of one family on one grid.
#[derive(Debug, Clone)]
pub struct FamilySamples {
    pub w: Vec<f64>,
    pub w_prime: Vec<f64>,
    pub v_minus: SampledPotential,
    pub v_plus: SampledPotential,
}

/// Sample `W`, `W'` analytically and form `V∓ = W² ∓ W'`.
pub fn sample_family(family: &Family, grid: &Grid) -> Result<FamilySamples, SchrodingerError> {
    family.validate(grid)?;
    let xs = grid.xs();
    let w: Vec<f64> = xs.iter().map(|&x| family.superpotential(x)).collect();
    let w_prime: Vec<f64> = xs.iter().map(|&x| family.superpotential_derivative(x)).collect();
    let v_minus: Vec<f64> = w.iter().zip(&w_prime).map(|(w, wp)| w * w - wp).collect();
    let v_plus: Vec<f64> = w.iter().zip(&w_prime).map(|(w, wp)| w * w + wp).collect();
    Ok(FamilySamples {
        v_minus: SampledPotential::new(*grid, v_minus, format!("{}:V-", family.tag()))?,
        v_plus: SampledPotential::new(*grid, v_plus, format!("{}:V+", family.tag()))?,
        w,
        w_prime,
    })
}

/// Lowest `count` Dirichlet eigenvalues of `-d²/dx² + V`.
///
/// The walls sit exactly at `x_min`, `x_max`; the `points - 2` interior
/// samples are the unknowns of the symmetric tridiagonal system.
pub fn eigensolve(potential: &SampledPotential, count: usize) -> Result<EigenResult, SchrodingerError> {
    let m = potential.grid.points;
    let max = m / 4;
    if count == 0 || count > max {
        return Err(SchrodingerError::CountTooLarge { count, max });
    }
    let h = potential.grid.spacing();
    let kin = 1.0 / (h * h);
    let interior = m - 2;
    let diag: Vec<f64> = (0..interior).map(|i| 2.0 * kin + potential.values[i + 1]).collect();
    let off = vec![-kin; interior - 1];
    let eigenvalues = eigen::lowest_eigenvalues(&diag, &off, count)?;
    Ok(EigenResult {
        eigenvalues,
        count,
        grid: potential.grid,
        boundary: Boundary::Dirichlet,
    })
}

/// Isospectrality check of a partner pair built from sampled `W`, `W'`.
#[derive(Debug, Clone, Serialize)]
pub struct PartnerReport {
    pub v_minus_levels: Vec<f64>,
    pub v_plus_levels: Vec<f64>,
    /// `V⁺_i - V⁻_{i+1}` in the SUSY-paired case, `V⁺_i - V⁻_i` when the
    /// superpotential vanishes identically and no level is dropped.
    pub differences: Vec<f64>,
    pub dropped_ground: bool,
    pub tolerance: f64,
    pub pass: bool,
}

/// Compare the `V⁺` spectrum against the `V⁻` spectrum with the zero-energy
/// ground state dropped (SUSY pairing of the discretized problem).
pub fn verify_partners(
    w: &[f64],
    w_prime: &[f64],
    grid: &Grid,
    count: usize,
    tol: f64,
) -> Result<PartnerReport, SchrodingerError> {
    if w.len() != grid.points || w_prime.len() != grid.points {
        return Err(SchrodingerError::GridMismatch(format!(
            "superpotential sampled at {} points for a {}-point grid",
            w.len(),
            grid.points
        )));
    }
    let v_minus: Vec<f64> = w.iter().zip(w_prime).map(|(w, wp)| w * w - wp).collect();
    let v_plus: Vec<f64> = w.iter().zip(w_prime).map(|(w, wp)| w * w + wp).collect();
    let v_minus = SampledPotential::new(*grid, v_minus, "partner:V-")?;
    let v_plus = SampledPotential::new(*grid, v_plus, "partner:V+")?;

    // W identically zero degenerates to V+ = V-: the spectra match level by
    // level, ground state included.
    let degenerate = w.iter().all(|&v| v == 0.0);
    let minus_count = if degenerate { count } else { count + 1 };
    let minus = eigensolve(&v_minus, minus_count)?;
    let plus = eigensolve(&v_plus, count)?;
    let differences: Vec<f64> = (0..count)
        .map(|i| plus.eigenvalues[i] - minus.eigenvalues[if degenerate { i } else { i + 1 }])
        .collect();
    let pass = differences.iter().all(|d| d.abs() <= tol);
    Ok(PartnerReport {
        v_minus_levels: minus.eigenvalues,
        v_plus_levels: plus.eigenvalues,
        differences,
        dropped_ground: !degenerate,
        tolerance: tol,
        pass,
    })
}
