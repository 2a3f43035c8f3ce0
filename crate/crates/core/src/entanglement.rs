//! Negativity and the PPT separability test.
//!
//! Negativity here is the plain sum of the magnitudes of the negative
//! partial-transpose eigenvalues, without a dimensional prefactor. On the
//! one-parameter family it therefore ranges over `[0, 1/8]`.

use crate::linalg::{self, Subsystem};
use crate::states::DensityMatrix;
use crate::tolerances;

/// Ascending eigenvalues of a partial transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct PtSpectrum {
    pub eigenvalues: Vec<f64>,
    pub subsystem: Subsystem,
}

impl PtSpectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityResult {
    pub value: f64,
    pub is_entangled: bool,
    pub min_pt_eigenvalue: f64,
}

pub fn pt_spectrum(rho: &DensityMatrix, subsystem: Subsystem) -> PtSpectrum {
    let pt =
        linalg::partial_transpose(rho.matrix(), rho.dims(), subsystem).expect("density matrix dims are consistent");
    let eigenvalues = linalg::hermitian_eigenvalues(&pt).expect("partial transpose of a Hermitian matrix is Hermitian");
    PtSpectrum { eigenvalues, subsystem }
}

/// Negativity with respect to the smaller factor.
pub fn negativity(rho: &DensityMatrix) -> NegativityResult {
    let dims = rho.dims();
    let smaller = if dims.a() <= dims.b() {
        Subsystem::A
    } else {
        Subsystem::B
    };
    negativity_wrt(rho, smaller)
}

/// Negativity computed from the partial transpose on `subsystem`.
pub fn negativity_wrt(rho: &DensityMatrix, subsystem: Subsystem) -> NegativityResult {
    from_spectrum(&pt_spectrum(rho, subsystem))
}

pub fn from_spectrum(spectrum: &PtSpectrum) -> NegativityResult {
    let value: f64 = spectrum
        .eigenvalues
        .iter()
        .filter(|&&l| l < -tolerances::NEGATIVE_EIGENVALUE)
        .fold(0.0, |acc, l| acc + l.abs());
    NegativityResult {
        value,
        is_entangled: value > 0.0,
        min_pt_eigenvalue: spectrum.min(),
    }
}

/// Positive partial transpose. For 2 (x) 2 and 2 (x) 3 this is exactly separability.
pub fn is_ppt(rho: &DensityMatrix) -> bool {
    !negativity(rho).is_entangled
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BipartiteDims;
    use crate::states::ansatz_x;

    fn assert_close(a: &[f64], b: &[f64], eps: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < eps, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn spectrum_at_max_corner() {
        let s = pt_spectrum(&ansatz_x(0.25).unwrap(), Subsystem::A);
        assert_close(&s.eigenvalues, &[-0.125, 0.125, 0.125, 0.25, 0.25, 0.375], 1e-14);
        assert!((s.sum() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn spectrum_of_diagonal_state() {
        let rho = ansatz_x(0.0).unwrap();
        let s = pt_spectrum(&rho, Subsystem::A);
        assert_close(&s.eigenvalues, &rho.eigenvalues(), 1e-15);
    }

    #[test]
    fn boundary_corner_has_zero_pt_eigenvalue() {
        let rho = ansatz_x(0.125).unwrap();
        assert!(pt_spectrum(&rho, Subsystem::A).min().abs() < 1e-15);
        let n = negativity(&rho);
        assert_eq!(n.value, 0.0);
        assert!(!n.is_entangled);
    }

    #[test]
    fn negativity_values() {
        assert_eq!(negativity(&ansatz_x(0.0).unwrap()).value, 0.0);
        let n = negativity(&ansatz_x(0.25).unwrap());
        assert!((n.value - 0.125).abs() < 1e-14);
        assert!(n.is_entangled);
        assert!((n.min_pt_eigenvalue + 0.125).abs() < 1e-14);
    }

    #[test]
    fn ppt_decisions() {
        assert!(!is_ppt(&ansatz_x(0.2).unwrap()));
        assert!(is_ppt(&ansatz_x(0.1).unwrap()));
        assert!(is_ppt(&DensityMatrix::maximally_mixed(BipartiteDims::qubit_qutrit())));
    }

    #[test]
    fn either_subsystem_gives_same_negativity() {
        for x in [0.0, 0.13, 0.2, 0.25] {
            let rho = ansatz_x(x).unwrap();
            let a = negativity_wrt(&rho, Subsystem::A).value;
            let b = negativity_wrt(&rho, Subsystem::B).value;
            assert!((a - b).abs() < 1e-14);
        }
    }
}
