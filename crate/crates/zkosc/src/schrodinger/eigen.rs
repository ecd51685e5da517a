//! Lowest eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
//! bisection.
//!
//! The negative-pivot count of the shifted LDL^T factorization gives the
//! number of eigenvalues below a shift; bisecting that count is
//! deterministic, needs no vectors, and is robust for the stiff potentials
//! the solver meets near domain walls.

use super::SchrodingerError;

/// Eigenvalue count of `tridiag(off, diag, off)` strictly below `shift`.
fn count_below(diag: &[f64], off: &[f64], shift: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0f64;
    for (i, &d) in diag.iter().enumerate() {
        let mut value = d - shift;
        if i > 0 {
            value -= off[i - 1] * off[i - 1] / pivot;
        }
        if value.abs() <= pivmin {
            value = -pivmin;
        }
        if value < 0.0 {
            count += 1;
        }
        pivot = value;
    }
    count
}

/// The `count` lowest eigenvalues, ascending.
pub(crate) fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>, SchrodingerError> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n, "off-diagonal length must be n - 1");
    assert!(count >= 1 && count <= n);
    if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
        return Err(SchrodingerError::ConvergenceFailure("non-finite matrix entry".into()));
    }

    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut radius = 0.0;
        if i > 0 {
            radius += off[i - 1].abs();
        }
        if i < n - 1 {
            radius += off[i].abs();
        }
        lo = lo.min(diag[i] - radius);
        hi = hi.max(diag[i] + radius);
    }
    let scale = lo.abs().max(hi.abs()).max(1.0);
    let pivmin = f64::MIN_POSITIVE.max(f64::EPSILON * f64::EPSILON * scale * scale);

    let mut out = Vec::with_capacity(count);
    for m in 0..count {
        let mut a = lo;
        let mut b = hi;
        let mut iterations = 0;
        while b - a > f64::EPSILON * 4.0 * scale + 1e-14 {
            let mid = 0.5 * (a + b);
            if count_below(diag, off, mid, pivmin) > m {
                b = mid;
            } else {
                a = mid;
            }
            iterations += 1;
            if iterations > 200 {
                return Err(SchrodingerError::ConvergenceFailure(format!(
                    "bisection stalled at eigenvalue {m}: bracket [{a}, {b}]"
                )));
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_analytic() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
        let e = lowest_eigenvalues(&[2.0, 2.0], &[1.0], 2).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-12);
        assert!((e[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn free_laplacian_matches_box_modes() {
        // -u'' on (0, 1) with Dirichlet walls: the discrete eigenvalues are
        // (2/h^2)(1 - cos(m pi h)), an exact formula for the FD matrix.
        let m = 200usize;
        let h = 1.0 / (m as f64 + 1.0);
        let diag = vec![2.0 / (h * h); m];
        let off = vec![-1.0 / (h * h); m - 1];
        let eigs = lowest_eigenvalues(&diag, &off, 4).unwrap();
        for (idx, e) in eigs.iter().enumerate() {
            let mode = (idx + 1) as f64;
            let exact = 2.0 / (h * h) * (1.0 - (mode * std::f64::consts::PI * h).cos());
            assert!((e - exact).abs() < 1e-8 * exact.max(1.0), "mode {mode}: {e} vs {exact}");
        }
    }

    #[test]
    fn degenerate_diagonal_matrix() {
        let e = lowest_eigenvalues(&[5.0, 5.0, 5.0], &[0.0, 0.0], 3).unwrap();
        for v in e {
            assert!((v - 5.0).abs() < 1e-10);
        }
    }

    #[test]
    fn non_finite_entries_rejected() {
        let err = lowest_eigenvalues(&[f64::NAN, 1.0], &[0.0], 1).unwrap_err();
        assert!(matches!(err, SchrodingerError::ConvergenceFailure(_)));
    }
}
