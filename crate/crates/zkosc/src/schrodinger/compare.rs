//! Numeric-vs-algebraic spectrum comparison.

use serde::Serialize;

use super::{EigenResult, SchrodingerError, CEILING_EXCLUSION_FRACTION};
use crate::shape::SpectrumReport;

#[derive(Debug, Clone, Serialize)]
pub struct LevelComparison {
    pub n: usize,
    pub numeric: f64,
    pub algebraic: f64,
    pub abs_difference: f64,
    /// Algebraic level sits within 5% of the continuum ceiling: a box
    /// discretization cannot represent it, so it is excluded from pass/fail.
    pub excluded: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumComparison {
    pub levels: Vec<LevelComparison>,
    pub compared: usize,
    pub excluded: usize,
    pub ceiling: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Compare the overlapping prefix of a numeric eigenvalue list against an
/// algebraic spectrum, excluding algebraic levels within 5% of the continuum
/// ceiling when one exists.
pub fn compare_spectra(
    numeric: &EigenResult,
    algebraic: &SpectrumReport,
    ceiling: Option<f64>,
    tol: f64,
) -> Result<SpectrumComparison, SchrodingerError> {
    if numeric.eigenvalues.is_empty() {
        return Err(SchrodingerError::EmptyInput("numeric eigenvalues"));
    }
    if algebraic.energies.is_empty() {
        return Err(SchrodingerError::EmptyInput("algebraic energies"));
    }
    let overlap = numeric.eigenvalues.len().min(algebraic.energies.len());
    let mut levels = Vec::with_capacity(overlap);
    let mut compared = 0;
    let mut excluded = 0;
    let mut pass = true;
    for n in 0..overlap {
        let e_num = numeric.eigenvalues[n];
        let e_alg = algebraic.energies[n];
        let excluded_level = match ceiling {
            Some(c) => e_alg >= CEILING_EXCLUSION_FRACTION * c,
            None => false,
        };
        let abs_difference = (e_num - e_alg).abs();
        if excluded_level {
            excluded += 1;
        } else {
            compared += 1;
            if abs_difference > tol {
                pass = false;
            }
        }
        levels.push(LevelComparison {
            n,
            numeric: e_num,
            algebraic: e_alg,
            abs_difference,
            excluded: excluded_level,
        });
    }
    // Algebraic levels beyond the numeric overlap are still screened for
    // ceiling exclusion so the report names them.
    for (n, &e_alg) in algebraic.energies.iter().enumerate().skip(overlap) {
        if let Some(c) = ceiling {
            if e_alg >= CEILING_EXCLUSION_FRACTION * c {
                levels.push(LevelComparison {
                    n,
                    numeric: f64::NAN,
                    algebraic: e_alg,
                    abs_difference: f64::NAN,
                    excluded: true,
                });
                excluded += 1;
            }
        }
    }
    Ok(SpectrumComparison { levels, compared, excluded, ceiling, tolerance: tol, pass })
}
