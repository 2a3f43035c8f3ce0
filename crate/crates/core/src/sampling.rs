//! Random states and unitaries for property checks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{BipartiteDims, ComplexMatrix};
use crate::states::{validate, DensityMatrix, IncoherentEntries, INCOHERENT_PATTERN};

fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    let data = (0..rows * cols)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    ComplexMatrix::new(rows, cols, data).expect("entry count matches")
}

/// `G G^dag / tr(G G^dag)` for a complex Gaussian `G`; full rank almost surely.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dims: BipartiteDims) -> DensityMatrix {
    let n = dims.total();
    let g = gaussian_matrix(rng, n, n);
    let mut m = &g * &g.adjoint();
    let tr = m.trace().re;
    m = m.scale(Complex64::new(1.0 / tr, 0.0));
    // Remove the round-off asymmetry left by the product.
    let sym = (&m + &m.adjoint()).scale(Complex64::new(0.5, 0.0));
    validate(&sym, dims).expect("Gram matrices are valid states")
}

/// A valid state with the incoherent-subsystem zero pattern and real coherences.
///
/// Diagonal entries are drawn uniformly and normalized; each allowed coherence
/// is a uniform fraction of `sqrt(rho_ii rho_jj) / 3`, which keeps the matrix
/// diagonally dominant after rescaling by the diagonal and hence positive.
pub fn random_incoherent_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let mut diag = [0.0; 6];
    for d in diag.iter_mut() {
        *d = rng.gen_range(0.05..1.0);
    }
    let total: f64 = diag.iter().sum();
    diag.iter_mut().for_each(|d| *d /= total);
    let mut off = [0.0; 6];
    for (o, &(i, j)) in off.iter_mut().zip(&INCOHERENT_PATTERN) {
        *o = rng.gen_range(-1.0..1.0) * (diag[i] * diag[j]).sqrt() / 3.0;
    }
    let m = IncoherentEntries { diag, off }.to_matrix();
    validate(&m, BipartiteDims::qubit_qutrit()).expect("scaled diagonally dominant matrix is positive")
}

/// Haar-distributed unitary via Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n, n);
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| (0..n).map(|i| g[(i, j)]).collect()).collect();
    for j in 0..n {
        let (done, rest) = cols.split_at_mut(j);
        let col = &mut rest[0];
        for prev in done.iter() {
            let proj: Complex64 = prev.iter().zip(col.iter()).map(|(p, c)| p.conj() * c).sum();
            for (c, p) in col.iter_mut().zip(prev) {
                *c -= p * proj;
            }
        }
        let norm = col.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        col.iter_mut().for_each(|v| *v /= norm);
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            u[(i, j)] = v;
        }
    }
    u
}

/// A random Hermitian matrix with entries of order one.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n, n);
    (&g + &g.adjoint()).scale(Complex64::new(0.5, 0.0))
}
