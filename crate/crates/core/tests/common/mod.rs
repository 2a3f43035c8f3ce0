//! Test-only oracles, independent of the library's eigensolver.

#![allow(dead_code)]

use esd_core::linalg::ComplexMatrix;

/// Eigenvalues of a 2x2 Hermitian matrix from the quadratic formula, ascending.
pub fn eig2(m: &ComplexMatrix) -> Vec<f64> {
    let (a, d) = (m[(0, 0)].re, m[(1, 1)].re);
    let b = m[(0, 1)].norm();
    let mean = 0.5 * (a + d);
    let r = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    vec![mean - r, mean + r]
}

/// Eigenvalues of a 3x3 Hermitian matrix as the roots of its characteristic
/// cubic (trigonometric form), ascending.
pub fn eig3(m: &ComplexMatrix) -> Vec<f64> {
    let a = |i: usize, j: usize| m[(i, j)];
    let (a00, a11, a22) = (a(0, 0).re, a(1, 1).re, a(2, 2).re);
    let (n01, n02, n12) = (a(0, 1).norm_sqr(), a(0, 2).norm_sqr(), a(1, 2).norm_sqr());
    let tr = a00 + a11 + a22;
    let c1 = a00 * a11 + a00 * a22 + a11 * a22 - n01 - n02 - n12;
    let det = a00 * a11 * a22 + 2.0 * (a(0, 1) * a(1, 2) * a(2, 0)).re - a00 * n12 - a11 * n02 - a22 * n01;
    // lambda^3 + b lambda^2 + c lambda + d
    let (b, c, d) = (-tr, c1, -det);
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;
    let mut roots = if p.abs() < 1e-300 {
        vec![shift; 3]
    } else {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        (0..3)
            .map(|k| shift + r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
            .collect()
    };
    roots.sort_by(|x, y| x.total_cmp(y));
    roots
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|x, y| x.total_cmp(y));
    v
}
