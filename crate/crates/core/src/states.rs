//! Fiducial-state and density-matrix constructors over the truncated
//! number basis, including the seeded random generators shared by the CLI
//! and the test suites (same seed, same state, everywhere).

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{hermiticity_dev, CMatrix, CVector};
use crate::scalar::{cnorm_sqr, cre, Real, C};

/// Tolerance on `| ||f|| - 1 |` for fiducial states.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Number state `|n>` as a length-`dim` coefficient vector.
pub fn fock<T: Real>(n: usize, dim: usize) -> Result<CVector<T>> {
    if n >= dim {
        return Err(Error::DimensionMismatch(format!(
            "fock level {n} does not fit in dimension {dim}"
        )));
    }
    let mut v = CVector::zeros(dim);
    v[n] = cre(T::one());
    Ok(v)
}

/// Squared norm of a coefficient vector.
pub fn norm_sqr<T: Real>(v: &CVector<T>) -> T {
    let mut s = T::zero();
    for z in v.iter() {
        s += cnorm_sqr(*z);
    }
    s
}

/// Check the fiducial normalization invariant.
pub fn check_normalized<T: Real>(v: &CVector<T>) -> Result<()> {
    let norm = norm_sqr(v).sqrt();
    if (norm - T::one()).abs() > T::of(NORMALIZATION_TOL) {
        return Err(Error::NotNormalized {
            norm: crate::scalar::as_f64(norm),
        });
    }
    Ok(())
}

/// Seeded random unit vector supported on the first `levels` basis states,
/// embedded in dimension `dim`. Coefficients are drawn as f64 and converted
/// so every scalar type sees the same state.
pub fn random_unit_vector<T: Real>(levels: usize, dim: usize, seed: u64) -> Result<CVector<T>> {
    if levels == 0 || levels > dim {
        return Err(Error::DimensionMismatch(format!(
            "support {levels} invalid for dimension {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![Complex::new(0.0f64, 0.0); levels];
    for c in coeffs.iter_mut() {
        *c = Complex::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
    }
    let norm = coeffs.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let mut v = CVector::zeros(dim);
    for (i, z) in coeffs.into_iter().enumerate() {
        v[i] = C::new(T::of(z.re / norm), T::of(z.im / norm));
    }
    Ok(v)
}

/// Seeded random density matrix supported on the first `levels` basis
/// states, embedded in `dim`: a normalized mixture G G^dag / tr with a
/// Ginibre factor, so it is Hermitian and positive by construction.
pub fn random_density<T: Real>(levels: usize, dim: usize, seed: u64) -> Result<CMatrix<T>> {
    if levels == 0 || levels > dim {
        return Err(Error::DimensionMismatch(format!(
            "support {levels} invalid for dimension {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::from_fn(levels, levels, |_, _| {
        Complex::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let mut rho = &g * g.adjoint();
    let tr: f64 = (0..levels).map(|i| rho[(i, i)].re).sum();
    rho /= Complex::new(tr, 0.0);

    let mut out = CMatrix::zeros(dim, dim);
    for i in 0..levels {
        for j in 0..levels {
            out[(i, j)] = C::new(T::of(rho[(i, j)].re), T::of(rho[(i, j)].im));
        }
    }
    Ok(out)
}

/// Seeded random density matrix that is diagonal in the number basis.
pub fn random_diagonal_density<T: Real>(levels: usize, dim: usize, seed: u64) -> Result<CMatrix<T>> {
    if levels == 0 || levels > dim {
        return Err(Error::DimensionMismatch(format!(
            "support {levels} invalid for dimension {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights: Vec<f64> = (0..levels).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in weights.iter_mut() {
        *w /= total;
    }
    let mut out = CMatrix::zeros(dim, dim);
    for (i, w) in weights.into_iter().enumerate() {
        out[(i, i)] = cre(T::of(w));
    }
    Ok(out)
}

/// Validate the density-matrix invariants: Hermitian to 1e-12, unit trace
/// to 1e-12, smallest eigenvalue >= -1e-10.
pub fn check_density<T: Real>(rho: &CMatrix<T>) -> Result<()> {
    if rho.nrows() != rho.ncols() {
        return Err(Error::NotDensity("matrix is not square".into()));
    }
    let herm = hermiticity_dev(rho);
    if herm > T::of(1e-12) {
        return Err(Error::NotDensity(format!(
            "not Hermitian: asymmetry {}",
            crate::scalar::as_f64(herm)
        )));
    }
    let mut tr = T::zero();
    for i in 0..rho.nrows() {
        tr += rho[(i, i)].re;
    }
    if (tr - T::one()).abs() > T::of(1e-12) {
        return Err(Error::NotDensity(format!(
            "trace = {}",
            crate::scalar::as_f64(tr)
        )));
    }
    let eig = rho.clone().symmetric_eigen();
    let min = eig
        .eigenvalues
        .iter()
        .fold(T::zero(), |acc, &l| if l < acc { l } else { acc });
    if min < T::of(-1e-10) {
        return Err(Error::NotDensity(format!(
            "negative eigenvalue {}",
            crate::scalar::as_f64(min)
        )));
    }
    Ok(())
}

/// Overlap `<f1|f2>` in the truncated space.
pub fn overlap<T: Real>(f1: &CVector<T>, f2: &CVector<T>) -> C<T> {
    let mut s = C::new(T::zero(), T::zero());
    for (a, b) in f1.iter().zip(f2.iter()) {
        s += a.conj() * *b;
    }
    s
}
