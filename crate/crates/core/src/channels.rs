//! Operator-sum channels and the local phase-damping operators of the 2 (x) 3 system.
//!
//! Qubit dephasing uses `E1 = diag(1, g) (x) I3` and `E2 = diag(0, w) (x) I3`;
//! qutrit dephasing uses `F1 = I2 (x) diag(1, g, g)`, `F2 = I2 (x) diag(0, w, 0)`
//! and `F3 = I2 (x) diag(0, 0, w)`, with `g = exp(-rate t / 2)` and `w = sqrt(1 - g^2)`.
//! Each subsystem carries its own rate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix};
use crate::states::{validate, DensityMatrix};
use crate::tolerances;

/// Decay rate and elapsed time of one local dephasing process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingParams {
    rate: f64,
    t: f64,
}

impl DephasingParams {
    pub fn new(rate: f64, t: f64) -> Result<Self> {
        if !(rate.is_finite() && rate >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "dephasing rate must be finite and >= 0, got {rate}"
            )));
        }
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "time must be finite and >= 0, got {t}"
            )));
        }
        Ok(Self { rate, t })
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Coherence factor `exp(-rate t / 2)`.
    pub fn gamma(&self) -> f64 {
        coherence_factor(self.rate, self.t)
    }

    /// `sqrt(1 - gamma^2)`.
    pub fn omega(&self) -> f64 {
        let g = self.gamma();
        (1.0 - g * g).max(0.0).sqrt()
    }
}

/// `exp(-rate t / 2)`.
pub fn coherence_factor(rate: f64, t: f64) -> f64 {
    (-0.5 * rate * t).exp()
}

/// An ordered set of Kraus operators on a `dim`-dimensional space.
///
/// Construction accepts any set of equally sized square operators; trace
/// preservation is checked when the channel is applied.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    ops: Vec<ComplexMatrix>,
    dim: usize,
    diagonal: bool,
}

impl KrausChannel {
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = ops
            .first()
            .ok_or_else(|| Error::InvalidInput("a channel needs at least one Kraus operator".into()))?
            .rows();
        if let Some(bad) = ops.iter().find(|k| k.rows() != dim || k.cols() != dim) {
            return Err(Error::InvalidDims(format!(
                "Kraus operators must all be {dim}x{dim}, found {}x{}",
                bad.rows(),
                bad.cols()
            )));
        }
        let diagonal = ops.iter().all(is_diagonal);
        Ok(Self { ops, dim, diagonal })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            ops: vec![ComplexMatrix::identity(dim)],
            dim,
            diagonal: true,
        }
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `max |sum K^dag K - I|` over entries.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self
            .ops
            .iter()
            .map(|k| &k.adjoint() * k)
            .fold(ComplexMatrix::zeros(self.dim, self.dim), |acc, m| &acc + &m);
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
    }

    pub fn is_complete(&self) -> bool {
        self.completeness_defect() <= tolerances::COMPLETENESS
    }

    /// The channel `rho -> sum_ij L_j K_i rho K_i^dag L_j^dag`: `self` acts first,
    /// then `after`.
    pub fn then(&self, after: &KrausChannel) -> Result<KrausChannel> {
        if self.dim != after.dim {
            return Err(Error::InvalidDims(format!(
                "cannot compose channels on dimensions {} and {}",
                self.dim, after.dim
            )));
        }
        let ops = self
            .ops
            .iter()
            .flat_map(|k| after.ops.iter().map(move |l| l * k))
            .collect();
        KrausChannel::new(ops)
    }
}

fn is_diagonal(m: &ComplexMatrix) -> bool {
    let n = m.rows();
    (0..n).all(|i| (0..n).all(|j| i == j || m[(i, j)] == Complex64::new(0.0, 0.0)))
}

/// Local dephasing of the qubit factor: `E1 = diag(1,1,1,g,g,g)`, `E2 = diag(0,0,0,w,w,w)`.
pub fn dephasing_qubit(p: DephasingParams) -> KrausChannel {
    let (g, w) = (p.gamma(), p.omega());
    let i3 = ComplexMatrix::identity(3);
    let e1 = kron(&ComplexMatrix::from_real_diag(&[1.0, g]), &i3);
    let e2 = kron(&ComplexMatrix::from_real_diag(&[0.0, w]), &i3);
    KrausChannel::new(vec![e1, e2]).expect("operators share a shape")
}

/// Local dephasing of the qutrit factor: levels 1 and 2 both lose phase relative
/// to level 0 at the same rate.
pub fn dephasing_qutrit(p: DephasingParams) -> KrausChannel {
    let (g, w) = (p.gamma(), p.omega());
    let i2 = ComplexMatrix::identity(2);
    let f1 = kron(&i2, &ComplexMatrix::from_real_diag(&[1.0, g, g]));
    let f2 = kron(&i2, &ComplexMatrix::from_real_diag(&[0.0, w, 0.0]));
    let f3 = kron(&i2, &ComplexMatrix::from_real_diag(&[0.0, 0.0, w]));
    KrausChannel::new(vec![f1, f2, f3]).expect("operators share a shape")
}

fn check_applicable(ch: &KrausChannel, rho: &DensityMatrix) -> Result<()> {
    if ch.dim != rho.dims().total() {
        return Err(Error::InvalidDims(format!(
            "channel acts on dimension {}, state has dimension {}",
            ch.dim,
            rho.dims().total()
        )));
    }
    let defect = ch.completeness_defect();
    if defect > tolerances::COMPLETENESS {
        return Err(Error::CompletenessViolation(defect));
    }
    Ok(())
}

/// `sum_mu K_mu rho K_mu^dag`.
///
/// Channels made only of diagonal operators take an entrywise path:
/// `out_ij = rho_ij * sum_mu k_mu,i * conj(k_mu,j)`.
pub fn apply(ch: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    check_applicable(ch, rho)?;
    let out = if ch.diagonal {
        apply_diagonal(ch, rho.matrix())
    } else {
        apply_dense_matrix(ch, rho.matrix())
    };
    validate(&out, rho.dims())
}

/// [`apply`] without the diagonal shortcut.
pub fn apply_dense(ch: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    check_applicable(ch, rho)?;
    validate(&apply_dense_matrix(ch, rho.matrix()), rho.dims())
}

fn apply_dense_matrix(ch: &KrausChannel, rho: &ComplexMatrix) -> ComplexMatrix {
    ch.ops
        .iter()
        .map(|k| &(k * rho) * &k.adjoint())
        .fold(ComplexMatrix::zeros(ch.dim, ch.dim), |acc, m| &acc + &m)
}

fn apply_diagonal(ch: &KrausChannel, rho: &ComplexMatrix) -> ComplexMatrix {
    let n = ch.dim;
    let diags: Vec<Vec<Complex64>> = ch.ops.iter().map(|k| k.diagonal()).collect();
    let mut out = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = diags
                .iter()
                .map(|d| d[i] * rho[(i, j)] * d[j].conj())
                .fold(Complex64::new(0.0, 0.0), |acc, v| acc + v);
        }
    }
    out
}

/// Independent local noise on both factors: `sum_ij F_j E_i rho E_i^dag F_j^dag`.
pub fn apply_multilocal(ch_a: &KrausChannel, ch_b: &KrausChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    apply(&ch_a.then(ch_b)?, rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::ansatz_x;

    fn params(rate: f64, t: f64) -> DephasingParams {
        DephasingParams::new(rate, t).unwrap()
    }

    /// Params with a prescribed coherence factor `g` (rate 1).
    fn with_gamma(g: f64) -> DephasingParams {
        params(1.0, -2.0 * g.ln())
    }

    #[test]
    fn params_reject_negative() {
        assert!(DephasingParams::new(-1.0, 1.0).is_err());
        assert!(DephasingParams::new(1.0, -1.0).is_err());
        assert!(DephasingParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn gamma_omega_identity() {
        for t in [0.0, 0.3, 1.0, 7.5, 40.0] {
            let p = params(1.3, t);
            assert!((p.gamma().powi(2) + p.omega().powi(2) - 1.0).abs() < 1e-15);
            assert!(p.gamma() > 0.0 && p.gamma() <= 1.0);
        }
    }

    #[test]
    fn qubit_operators_at_t0() {
        let ch = dephasing_qubit(params(1.0, 0.0));
        assert_eq!(ch.ops()[0], ComplexMatrix::identity(6));
        assert_eq!(ch.ops()[1], ComplexMatrix::zeros(6, 6));
    }

    #[test]
    fn qubit_operators_at_half() {
        let ch = dephasing_qubit(with_gamma(0.5));
        let w = 3f64.sqrt() / 2.0;
        let expected = ComplexMatrix::from_real_diag(&[0.0, 0.0, 0.0, w, w, w]);
        assert!(ch.ops()[1].approx_eq(&expected, 1e-15));
        assert!(ch.completeness_defect() < 1e-15);
    }

    #[test]
    fn qutrit_operators() {
        let ch = dephasing_qutrit(params(2.0, 0.0));
        assert_eq!(ch.ops()[0], ComplexMatrix::identity(6));
        assert_eq!(ch.ops()[1], ComplexMatrix::zeros(6, 6));
        assert_eq!(ch.ops()[2], ComplexMatrix::zeros(6, 6));

        let g = 0.3;
        let ch = dephasing_qutrit(with_gamma(g));
        let f1 = ComplexMatrix::from_real_diag(&[1.0, g, g, 1.0, g, g]);
        assert!(ch.ops()[0].approx_eq(&f1, 1e-15));
        assert!(ch.is_complete());
    }

    #[test]
    fn identity_channel_is_noop() {
        let rho = ansatz_x(0.2).unwrap();
        assert_eq!(apply(&KrausChannel::identity(6), &rho).unwrap(), rho);
    }

    #[test]
    fn incomplete_channel_refused() {
        let half = ComplexMatrix::identity(6).scale(Complex64::new(0.5, 0.0));
        let ch = KrausChannel::new(vec![half]).unwrap();
        let err = apply(&ch, &ansatz_x(0.1).unwrap()).unwrap_err();
        match err {
            Error::CompletenessViolation(d) => assert!((d - 0.75).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch_refused() {
        let rho = ansatz_x(0.1).unwrap();
        assert!(matches!(
            apply(&KrausChannel::identity(4), &rho),
            Err(Error::InvalidDims(_))
        ));
        assert!(KrausChannel::new(vec![]).is_err());
        assert!(KrausChannel::new(vec![ComplexMatrix::identity(2), ComplexMatrix::identity(3)]).is_err());
    }

    #[test]
    fn qubit_dephasing_scales_corner() {
        let p = params(1.0, 0.8);
        let out = apply(&dephasing_qubit(p), &ansatz_x(0.2).unwrap()).unwrap();
        let expected = ansatz_x(0.2 * p.gamma()).unwrap();
        assert!(out.matrix().approx_eq(expected.matrix(), 1e-15));
    }

    #[test]
    fn full_qutrit_dephasing_diagonalizes() {
        // g = 0 exactly is the infinite-time limit; build it from explicit operators.
        let i2 = ComplexMatrix::identity(2);
        let ops = vec![
            kron(&i2, &ComplexMatrix::from_real_diag(&[1.0, 0.0, 0.0])),
            kron(&i2, &ComplexMatrix::from_real_diag(&[0.0, 1.0, 0.0])),
            kron(&i2, &ComplexMatrix::from_real_diag(&[0.0, 0.0, 1.0])),
        ];
        let ch = KrausChannel::new(ops).unwrap();
        let out = apply(&ch, &ansatz_x(0.25).unwrap()).unwrap();
        assert_eq!(out.matrix(), ansatz_x(0.0).unwrap().matrix());
    }

    #[test]
    fn multilocal_multiplies_factors() {
        let (pa, pb) = (params(1.0, 0.5), params(0.7, 0.5));
        let rho = ansatz_x(0.25).unwrap();
        let out = apply_multilocal(&dephasing_qubit(pa), &dephasing_qutrit(pb), &rho).unwrap();
        assert!((out.corner() - 0.25 * pa.gamma() * pb.gamma()).abs() < 1e-14);

        let at_zero = apply_multilocal(
            &dephasing_qubit(params(1.0, 0.0)),
            &dephasing_qutrit(params(1.0, 0.0)),
            &rho,
        )
        .unwrap();
        assert_eq!(at_zero, rho);
    }

    #[test]
    fn diagonal_path_matches_dense() {
        let rho = ansatz_x(0.23).unwrap();
        let ch = dephasing_qubit(params(1.0, 0.4))
            .then(&dephasing_qutrit(params(2.0, 0.4)))
            .unwrap();
        let fast = apply(&ch, &rho).unwrap();
        let dense = apply_dense(&ch, &rho).unwrap();
        assert!(fast.matrix().approx_eq(dense.matrix(), 1e-15));
    }
}
