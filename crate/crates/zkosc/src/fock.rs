//! Truncated Z_k-graded Fock windows.
//!
//! A window is a finite slice of the graded Fock tower. Two indexing
//! conventions coexist and are stored explicitly:
//!
//! - `Ascending`: state `j` has number-eigenvalue `nu_j = j/k`, the tower
//!   built upward from the ground state.
//! - `Descending`: state `j` has `nu_j = n0 - j/k`, the tower indexed down
//!   from the anchor `N0 = n0`.
//!
//! The grade of a state is defined from `nu` alone: the unique `g` in
//! `[0, k)` with `nu - g/k` an integer. For a descending window with integer
//! anchor this works out to `grade(j) = (-j) mod k`, while the tower index
//! selected by the cyclic Kronecker delta is `n mod k`; the two maps differ
//! by a sign and both are exposed so the difference is a tested identity
//! rather than an implicit assumption.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("grading order k must be at least 1")]
    ZeroK,
    #[error("invalid window: {0}")]
    InvalidWindow(String),
}

/// Which way the window's number-eigenvalues run with the state index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// `nu_j = j/k`, lowest-weight state first.
    Ascending,
    /// `nu_j = n0 - j/k`, anchor state first.
    Descending,
}

/// One basis state of a window: its index, exact number-eigenvalue, and grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateLabel {
    pub index: usize,
    pub nu: Ratio<i64>,
    pub grade: usize,
}

/// A finite truncation of the Z_k-graded Fock space.
///
/// Immutable after construction; all invariants (lattice membership, grade
/// consistency, no negative eigenvalues in descending windows) are enforced
/// by [`FockWindow::new`].
#[derive(Debug, Clone)]
pub struct FockWindow {
    k: usize,
    depth: usize,
    n0: u64,
    convention: Convention,
    states: Vec<StateLabel>,
}

/// Index selected by the cyclic Kronecker delta at tower level `n`: `n mod k`.
pub fn tower_grade(n: u64, k: usize) -> usize {
    assert!(k >= 1, "grading order k must be at least 1");
    (n % k as u64) as usize
}

/// Grade of a number-eigenvalue: the `g` in `[0, k)` with `nu - g/k` integer.
///
/// Returns `None` when `nu` is not on the `1/k` lattice.
pub fn grade_of_nu(nu: Ratio<i64>, k: usize) -> Option<usize> {
    let scaled = nu * Ratio::from_integer(k as i64);
    if !scaled.is_integer() {
        return None;
    }
    Some(scaled.to_integer().rem_euclid(k as i64) as usize)
}

impl FockWindow {
    pub fn new(k: usize, depth: usize, n0: u64, convention: Convention) -> Result<Self, FockError> {
        if k == 0 {
            return Err(FockError::ZeroK);
        }
        if depth < 2 {
            return Err(FockError::InvalidWindow(format!(
                "depth {depth} is below the minimum of 2"
            )));
        }
        let k_i = i64::try_from(k).map_err(|_| FockError::InvalidWindow("k exceeds i64".into()))?;
        let anchor = i64::try_from(n0)
            .ok()
            .and_then(|n| n.checked_mul(k_i))
            .ok_or_else(|| FockError::InvalidWindow("k * n0 exceeds i64".into()))?;
        if convention == Convention::Descending && depth as i64 > anchor + 1 {
            return Err(FockError::InvalidWindow(format!(
                "descending window of depth {depth} with anchor n0 = {n0} reaches a negative number-eigenvalue \
                 (require depth <= k*n0 + 1 = {})",
                anchor + 1
            )));
        }
        let states = (0..depth)
            .map(|j| {
                let nu = match convention {
                    Convention::Ascending => Ratio::new(j as i64, k_i),
                    Convention::Descending => Ratio::new(anchor - j as i64, k_i),
                };
                let grade = grade_of_nu(nu, k).expect("window eigenvalues lie on the 1/k lattice");
                StateLabel { index: j, nu, grade }
            })
            .collect();
        Ok(Self { k, depth, n0, convention, states })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn n0(&self) -> u64 {
        self.n0
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn states(&self) -> &[StateLabel] {
        &self.states
    }

    pub fn nu(&self, j: usize) -> Ratio<i64> {
        self.states[j].nu
    }

    pub fn nu_f64(&self, j: usize) -> f64 {
        let nu = self.states[j].nu;
        *nu.numer() as f64 / *nu.denom() as f64
    }

    pub fn grade(&self, j: usize) -> usize {
        self.states[j].grade
    }

    /// Index of the state with the highest number-eigenvalue. Truncation
    /// artifacts (the broken `a a† = F(N + 1/k)` relation) live here.
    pub fn top_state(&self) -> usize {
        match self.convention {
            Convention::Ascending => self.depth - 1,
            Convention::Descending => 0,
        }
    }

    /// Index of the state with the lowest number-eigenvalue; the state a
    /// lowest-weight structure function must annihilate.
    pub fn bottom_state(&self) -> usize {
        match self.convention {
            Convention::Ascending => 0,
            Convention::Descending => self.depth - 1,
        }
    }
}
