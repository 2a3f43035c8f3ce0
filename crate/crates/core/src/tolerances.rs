//! Numerical thresholds shared across the crate.
//!
//! All matrices handled here are at most 6x6 with entries of order one, so the
//! structural checks sit a few orders of magnitude above f64 round-off.

/// Hermiticity defect allowed on a density matrix (entrywise max-norm).
pub const HERMITICITY: f64 = 1e-12;

/// `|tr rho - 1|` allowed on a density matrix.
pub const TRACE: f64 = 1e-12;

/// Eigenvalues down to `-PSD` are accepted as zero. One-sided, so rank-deficient
/// states on the boundary of the physical region still validate.
pub const PSD: f64 = 1e-10;

/// Agreement between spectra computed along different routes.
pub const SPECTRAL: f64 = 1e-10;

/// Partial-transpose eigenvalues in `(-NEGATIVE_EIGENVALUE, 0)` are treated as
/// round-off and do not contribute to the negativity.
pub const NEGATIVE_EIGENVALUE: f64 = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this,
/// relative to `max(1, ||A||_F)`.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-13;

/// Allowed deviation of `sum K^dag K` from the identity.
pub const COMPLETENESS: f64 = 1e-12;
