//! Validated bipartite density matrices and the incoherent-subsystem state family.
//!
//! The family used throughout the crate is the 2 (x) 3 matrix
//!
//! ```text
//! diag(1/4, 1/8, 1/8, 1/8, 1/8, 1/4) + c (|00><12| + |12><00|)
//! ```
//!
//! with a real corner coherence `0 <= c <= 1/4`. Both reduced states are
//! diagonal, so every off-diagonal entry is a joint-system coherence.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result, StateCondition};
use crate::linalg::{self, BipartiteDims, ComplexMatrix, Subsystem};
use crate::tolerances;

/// Diagonal of the one-parameter family.
pub const ANSATZ_DIAGONAL: [f64; 6] = [0.25, 0.125, 0.125, 0.125, 0.125, 0.25];

/// Largest corner value for which the one-parameter family is positive.
pub const ANSATZ_X_MAX: f64 = 0.25;

/// Zero-based positions `(i, j)`, `i < j`, of the off-diagonals allowed in the
/// incoherent-subsystem class. Every other off-diagonal would feed a coherence of
/// one of the reduced states.
pub const INCOHERENT_PATTERN: [(usize, usize); 6] = [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)];

/// Corner position `|00><12|` of the one-parameter family.
pub const CORNER: (usize, usize) = (0, 5);

/// A Hermitian, unit-trace, positive semi-definite matrix on a bipartite space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    dims: BipartiteDims,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Entry `(i, j)`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.mat[(i, j)]
    }

    /// Real part of the `|00><12|` coherence on a 2 (x) 3 state.
    pub fn corner(&self) -> f64 {
        self.mat[CORNER].re
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        linalg::hermitian_eigenvalues(&self.mat).expect("density matrices are Hermitian")
    }

    pub fn maximally_mixed(dims: BipartiteDims) -> Self {
        let n = dims.total();
        Self {
            mat: ComplexMatrix::identity(n).scale(Complex64::new(1.0 / n as f64, 0.0)),
            dims,
        }
    }

    /// True when the state has nonzero off-diagonals only on the incoherent pattern.
    pub fn has_incoherent_pattern(&self, eps: f64) -> bool {
        has_incoherent_pattern(&self.mat, eps)
    }

    /// Serializes as `dims dA dB` followed by one line per row of `re+imj` entries.
    pub fn to_text(&self) -> String {
        let mut out = format!("dims {} {}\n", self.dims.a(), self.dims.b());
        let n = self.dims.total();
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| format_entry(self.mat[(i, j)])).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Parses the [`to_text`](Self::to_text) format and validates the result.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad dimension {s:?}: {e}"),
            })
        };
        let dims = match fields.as_slice() {
            ["dims", a, b] => BipartiteDims::new(parse_dim(a)?, parse_dim(b)?)?,
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `dims dA dB`, got {header:?}"),
                })
            }
        };

        let n = dims.total();
        let mut data = Vec::with_capacity(n * n);
        let mut rows = 0;
        for (line_no, line) in lines {
            let row = line
                .split_whitespace()
                .map(|tok| parse_entry(tok, line_no))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {n} entries, got {}", row.len()),
                });
            }
            data.extend(row);
            rows += 1;
        }
        if rows != n {
            return Err(Error::Parse {
                line: line_no + rows,
                message: format!("expected {n} rows, got {rows}"),
            });
        }
        validate(&ComplexMatrix::new(n, n, data)?, dims)
    }
}

fn format_entry(v: Complex64) -> String {
    let sign = if v.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{}{:.16e}j", v.re, sign, v.im.abs())
}

fn parse_entry(tok: &str, line: usize) -> Result<Complex64> {
    let err = |message: String| Error::Parse { line, message };
    let body = tok
        .strip_suffix('j')
        .ok_or_else(|| err(format!("entry {tok:?} does not end in 'j'")))?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(|| err(format!("entry {tok:?} is not of the form re+imj")))?;
    let re = body[..split]
        .parse::<f64>()
        .map_err(|e| err(format!("bad real part in {tok:?}: {e}")))?;
    let im = body[split..]
        .parse::<f64>()
        .map_err(|e| err(format!("bad imaginary part in {tok:?}: {e}")))?;
    Ok(Complex64::new(re, im))
}

pub(crate) fn has_incoherent_pattern(m: &ComplexMatrix, eps: f64) -> bool {
    let n = m.rows();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let allowed = i == j || INCOHERENT_PATTERN.contains(&(i.min(j), i.max(j)));
            allowed || m[(i, j)].norm() <= eps
        })
    })
}

/// Checks Hermiticity, unit trace and positivity, in that order, and reports
/// the first violated condition with its magnitude.
pub fn validate(m: &ComplexMatrix, dims: BipartiteDims) -> Result<DensityMatrix> {
    if !m.is_square() || m.rows() != dims.total() {
        return Err(Error::InvalidDims(format!(
            "{}x{} matrix does not match dims {}x{}",
            m.rows(),
            m.cols(),
            dims.a(),
            dims.b()
        )));
    }
    let defect = m.hermiticity_defect();
    if defect > tolerances::HERMITICITY {
        return Err(Error::InvalidState {
            condition: StateCondition::Hermiticity,
            magnitude: defect,
        });
    }
    let trace = m.trace();
    let trace_err = (trace - Complex64::new(1.0, 0.0)).norm();
    if trace_err > tolerances::TRACE {
        return Err(Error::InvalidState {
            condition: StateCondition::UnitTrace,
            magnitude: trace_err,
        });
    }
    let min_eig = linalg::hermitian_eigenvalues(m)?[0];
    if min_eig < -tolerances::PSD {
        return Err(Error::InvalidState {
            condition: StateCondition::Positivity,
            magnitude: min_eig,
        });
    }
    Ok(DensityMatrix { mat: m.clone(), dims })
}

/// The one-parameter family with corner coherence `x`.
pub fn ansatz_x(x: f64) -> Result<DensityMatrix> {
    if !(0.0..=ANSATZ_X_MAX).contains(&x) {
        return Err(Error::InvalidParameter(format!(
            "x = {x} is outside [0, 1/4]; the state would not be positive semi-definite"
        )));
    }
    Ok(ansatz_with_corner(x))
}

/// Builds the family member with corner `c` without range checks. Callers
/// guarantee `0 <= c <= 1/4`.
pub(crate) fn ansatz_with_corner(c: f64) -> DensityMatrix {
    let mut mat = ComplexMatrix::from_real_diag(&ANSATZ_DIAGONAL);
    mat[CORNER] = Complex64::new(c, 0.0);
    mat[(CORNER.1, CORNER.0)] = Complex64::new(c, 0.0);
    DensityMatrix {
        mat,
        dims: BipartiteDims::qubit_qutrit(),
    }
}

/// Real entries of an incoherent-subsystem state.
///
/// `off` follows [`INCOHERENT_PATTERN`]: `rho_15, rho_16, rho_24, rho_26, rho_34, rho_35`
/// in one-based notation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncoherentEntries {
    pub diag: [f64; 6],
    pub off: [f64; 6],
}

impl IncoherentEntries {
    /// The one-parameter family's diagonal with all coherences zero.
    pub fn ansatz_diagonal() -> Self {
        Self {
            diag: ANSATZ_DIAGONAL,
            off: [0.0; 6],
        }
    }

    pub fn with_off(mut self, pos: (usize, usize), value: f64) -> Self {
        let k = INCOHERENT_PATTERN
            .iter()
            .position(|&p| p == (pos.0.min(pos.1), pos.0.max(pos.1)))
            .unwrap_or_else(|| panic!("{pos:?} is not on the incoherent pattern"));
        self.off[k] = value;
        self
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::from_real_diag(&self.diag);
        for (&(i, j), &v) in INCOHERENT_PATTERN.iter().zip(&self.off) {
            m[(i, j)] = Complex64::new(v, 0.0);
            m[(j, i)] = Complex64::new(v, 0.0);
        }
        m
    }
}

/// A validated state of the incoherent-subsystem class.
pub fn ansatz_general(entries: &IncoherentEntries) -> Result<DensityMatrix> {
    if entries.diag.iter().chain(&entries.off).any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter("entries must be finite".into()));
    }
    validate(&entries.to_matrix(), BipartiteDims::qubit_qutrit())
}

/// Reduced state of the first factor.
pub fn reduce_a(rho: &DensityMatrix) -> ComplexMatrix {
    linalg::partial_trace(&rho.mat, rho.dims, Subsystem::A).expect("dims checked at construction")
}

/// Reduced state of the second factor.
pub fn reduce_b(rho: &DensityMatrix) -> ComplexMatrix {
    linalg::partial_trace(&rho.mat, rho.dims, Subsystem::B).expect("dims checked at construction")
}

/// The family member tracked by its corner alone: `x` is the initial corner,
/// `corner` the value after any dephasing applied so far.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzState {
    x: f64,
    corner: f64,
}

impl AnsatzState {
    pub fn new(x: f64) -> Result<Self> {
        ansatz_x(x)?;
        Ok(Self { x, corner: x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn corner(&self) -> f64 {
        self.corner
    }

    /// Multiplies the corner by a coherence factor in `[0, 1]`.
    pub fn dephased(self, factor: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&factor) {
            return Err(Error::InvalidParameter(format!(
                "coherence factor {factor} outside [0, 1]"
            )));
        }
        Ok(Self {
            x: self.x,
            corner: self.corner * factor,
        })
    }

    pub fn to_density(&self) -> DensityMatrix {
        ansatz_with_corner(self.corner)
    }
}
