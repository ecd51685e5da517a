//! k-step shape invariant potentials as a Z_k-graded generalized deformed oscillator.
//!
//! The crate has four layers:
//!
//! - [`fock`]: truncated Z_k-graded Fock windows, state labels and grades,
//!   with both the ascending (`nu = n/k`) and descending (`nu = N0 - n/k`)
//!   indexing conventions and an explicit mapping between them.
//! - [`algebra`]: dense matrix representations of the generators
//!   `{I, a, a†, N, T, Π_s}` on a window for a given structure function, and a
//!   checker that verifies every defining relation of the graded oscillator to
//!   numerical tolerance.
//! - [`shape`]: translational k-step shape invariance — remainder validation,
//!   the closed-form and recursive structure functions with the general
//!   `c_s`/`d_s` coefficients, and energy spectra computed by three
//!   independent routes.
//! - [`schrodinger`]: a finite-difference 1-D eigensolver with built-in
//!   superpotential families, partner-isospectrality checks, chain residual
//!   verification, and numeric-vs-algebraic spectrum comparison.

pub mod algebra;
pub mod fock;
pub mod schrodinger;
pub mod shape;
pub mod sweep;

pub use algebra::{check_algebra, AlgebraError, AlgebraOps, OperatorMatrix, RelationReport, StructureFn};
pub use fock::{tower_grade, Convention, FockError, FockWindow, StateLabel};
pub use schrodinger::{
    compare_spectra, eigensolve, sample_family, verify_chain, verify_partners, ChainSpec, EigenResult, Family, Grid,
    SampledPotential, SchrodingerError,
};
pub use shape::{CoeffSet, CyclicInfo, ShapeError, SipParams, SpectrumMethod, SpectrumReport, StructureTable};

/// Default residual tolerance for double-precision windows up to `D = 256`.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
