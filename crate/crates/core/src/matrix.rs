//! Dense complex linear algebra shared by all group modules: matrix
//! exponential, deviation norms, block projection and compensated sums.
//!
//! Truncations in this crate stay below a few hundred dimensions, so
//! everything is dense.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cfinite, cnorm, cnorm_sqr, cre, Real, C};

/// Dense complex matrix over the crate scalar.
pub type CMatrix<T> = DMatrix<Complex<T>>;
/// Dense complex column vector over the crate scalar.
pub type CVector<T> = DVector<Complex<T>>;

/// Padé order used by [`mat_exp`]. Fixed so reports are reproducible.
pub const PADE_ORDER: usize = 13;

/// 1-norm threshold above which the argument is scaled before the order-13
/// approximant is applied (Higham 2005, table for m = 13 in double
/// precision).
pub const PADE_THETA_13: f64 = 5.371920351148152;

/// Cap on the number of squarings. `theta * 2^MAX_SQUARINGS` is the largest
/// 1-norm accepted by [`mat_exp`]; anything bigger is rejected instead of
/// silently returning garbage.
pub const MAX_SQUARINGS: u32 = 32;

const PADE_13_COEFFS: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn check_square_finite<T: Real>(a: &CMatrix<T>) -> Result<usize> {
    if a.nrows() != a.ncols() {
        return Err(Error::NonSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.iter().any(|z| !cfinite(*z)) {
        return Err(Error::NonFinite);
    }
    Ok(a.nrows())
}

/// Maximum column sum of entry moduli.
pub fn norm_1<T: Real>(a: &CMatrix<T>) -> T {
    let mut best = T::zero();
    for j in 0..a.ncols() {
        let mut s = T::zero();
        for i in 0..a.nrows() {
            s += cnorm(a[(i, j)]);
        }
        if s > best {
            best = s;
        }
    }
    best
}

/// Matrix exponential by scaling-and-squaring with the fixed order-13
/// diagonal Padé approximant.
///
/// For anti-Hermitian input the result is unitary to roughly the working
/// precision; unit tests pin this at 1e-10 max-entry for 1-norms up to 16
/// and it holds far beyond that in practice.
pub fn mat_exp<T: Real>(a: &CMatrix<T>) -> Result<CMatrix<T>> {
    let n = check_square_finite(a)?;
    let theta = T::of(PADE_THETA_13);
    let norm = norm_1(a);

    let mut squarings = 0u32;
    if norm > theta {
        let ratio: T = norm / theta;
        squarings = crate::scalar::as_f64(ratio.log2().ceil()) as u32;
        if squarings > MAX_SQUARINGS {
            return Err(Error::ScalingBudget {
                norm: crate::scalar::as_f64(norm),
            });
        }
    }

    let scale = cre(T::of(0.5).powi(squarings as i32));
    let a_s = a.map(|z| z * scale);

    let b: Vec<C<T>> = PADE_13_COEFFS.iter().map(|&c| cre(T::of(c))).collect();
    let id = CMatrix::<T>::identity(n, n);
    let a2 = &a_s * &a_s;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    // u = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let u_inner = &a6 * (a6.scale_c(b[13]) + a4.scale_c(b[11]) + a2.scale_c(b[9]))
        + a6.scale_c(b[7])
        + a4.scale_c(b[5])
        + a2.scale_c(b[3])
        + id.scale_c(b[1]);
    let u = &a_s * u_inner;
    // v = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let v = &a6 * (a6.scale_c(b[12]) + a4.scale_c(b[10]) + a2.scale_c(b[8]))
        + a6.scale_c(b[6])
        + a4.scale_c(b[4])
        + a2.scale_c(b[2])
        + id.scale_c(b[0]);

    let denom = &v - &u;
    let numer = &v + &u;
    let mut r = denom
        .lu()
        .solve(&numer)
        .ok_or(Error::SingularDenominator)?;

    for _ in 0..squarings {
        r = &r * &r;
    }
    Ok(r)
}

trait ScaleC<T: Real> {
    fn scale_c(&self, c: C<T>) -> CMatrix<T>;
}

impl<T: Real> ScaleC<T> for CMatrix<T> {
    fn scale_c(&self, c: C<T>) -> CMatrix<T> {
        self.map(|z| z * c)
    }
}

/// Top-left `d`x`d` block.
pub fn project<T: Real>(a: &CMatrix<T>, d: usize) -> Result<CMatrix<T>> {
    let n = check_square_finite(a)?;
    if d > n {
        return Err(Error::BlockTooLarge { requested: d, dim: n });
    }
    Ok(a.view((0, 0), (d, d)).into_owned())
}

/// Max-entry modulus of `A - B` restricted to the top-left `d`x`d` blocks.
///
/// This is the deviation the operator-identity claims are stated in; the
/// Frobenius variant below accompanies it in reports.
pub fn max_entry_dev<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>, d: usize) -> Result<T> {
    let na = check_square_finite(a)?;
    let nb = check_square_finite(b)?;
    if d > na || d > nb {
        return Err(Error::BlockTooLarge {
            requested: d,
            dim: na.min(nb),
        });
    }
    let mut best = T::zero();
    for i in 0..d {
        for j in 0..d {
            let dev = cnorm(a[(i, j)] - b[(i, j)]);
            if dev > best {
                best = dev;
            }
        }
    }
    Ok(best)
}

/// Frobenius norm of `A - B` on the top-left `d`x`d` blocks, accumulated
/// with compensated summation so the value is reproducible across
/// evaluation orders.
pub fn frobenius_dev<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>, d: usize) -> Result<T> {
    let na = check_square_finite(a)?;
    let nb = check_square_finite(b)?;
    if d > na || d > nb {
        return Err(Error::BlockTooLarge {
            requested: d,
            dim: na.min(nb),
        });
    }
    let mut sum = KahanSum::<T>::new();
    for i in 0..d {
        for j in 0..d {
            sum.add(cnorm_sqr(a[(i, j)] - b[(i, j)]));
        }
    }
    Ok(sum.value().sqrt())
}

/// Max-entry deviation of `M^\dagger M` from the identity on the top-left
/// `d`x`d` block.
pub fn unitarity_dev<T: Real>(m: &CMatrix<T>, d: usize) -> Result<T> {
    let prod = m.adjoint() * m;
    let id = CMatrix::<T>::identity(prod.nrows(), prod.ncols());
    max_entry_dev(&prod, &id, d)
}

/// Hermitian part max asymmetry `max |M - M^\dagger|`.
pub fn hermiticity_dev<T: Real>(m: &CMatrix<T>) -> T {
    let mut best = T::zero();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let dev = cnorm(m[(i, j)] - m[(j, i)].conj());
            if dev > best {
                best = dev;
            }
        }
    }
    best
}

/// Compensated (Kahan) scalar accumulator.
#[derive(Clone, Copy, Debug)]
pub struct KahanSum<T: Real> {
    s: T,
    c: T,
}

impl<T: Real> KahanSum<T> {
    pub fn new() -> Self {
        Self {
            s: T::zero(),
            c: T::zero(),
        }
    }

    pub fn add(&mut self, x: T) {
        let y = x - self.c;
        let t = self.s + y;
        self.c = (t - self.s) - y;
        self.s = t;
    }

    pub fn value(&self) -> T {
        self.s
    }
}

impl<T: Real> Default for KahanSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Compensated accumulator for complex matrices (entrywise Kahan).
#[derive(Clone, Debug)]
pub struct KahanMatrix<T: Real> {
    sum: CMatrix<T>,
    comp: CMatrix<T>,
}

impl<T: Real> KahanMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            sum: CMatrix::zeros(rows, cols),
            comp: CMatrix::zeros(rows, cols),
        }
    }

    /// Accumulate `scale * m`.
    pub fn add_scaled(&mut self, m: &CMatrix<T>, scale: T) {
        let s = cre(scale);
        for i in 0..self.sum.nrows() {
            for j in 0..self.sum.ncols() {
                let x = m[(i, j)] * s;
                let y = x - self.comp[(i, j)];
                let t = self.sum[(i, j)] + y;
                self.comp[(i, j)] = (t - self.sum[(i, j)]) - y;
                self.sum[(i, j)] = t;
            }
        }
    }

    /// Merge another accumulator (deterministic if called in a fixed order).
    pub fn merge(&mut self, other: &KahanMatrix<T>) {
        for i in 0..self.sum.nrows() {
            for j in 0..self.sum.ncols() {
                let x = other.sum[(i, j)];
                let y = x - self.comp[(i, j)];
                let t = self.sum[(i, j)] + y;
                self.comp[(i, j)] = (t - self.sum[(i, j)]) - y;
                self.sum[(i, j)] = t;
            }
        }
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ci;
    use nalgebra::DMatrix;

    type M = CMatrix<f64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    /// Term-by-term Taylor summation of exp(A); the independent oracle the
    /// Padé path is checked against.
    fn taylor_exp(a: &M) -> M {
        let n = a.nrows();
        let mut term = M::identity(n, n);
        let mut sum = term.clone();
        for k in 1..400 {
            term = (a * term).map(|z| z / c(k as f64, 0.0));
            sum += &term;
            if norm_1(&term) < 1e-300 {
                break;
            }
        }
        sum
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let a = M::zeros(4, 4);
        let e = mat_exp(&a).unwrap();
        assert_eq!(max_entry_dev(&e, &M::identity(4, 4), 4).unwrap(), 0.0);
    }

    #[test]
    fn exp_of_diagonal() {
        let a = M::from_diagonal(&CVector::from_vec(vec![
            c(0.0, std::f64::consts::PI),
            c(0.0, 0.0),
        ]));
        let e = mat_exp(&a).unwrap();
        assert!((e[(0, 0)] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((e[(1, 1)] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(e[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn exp_of_ladder_combination_matches_taylor_oracle() {
        // alpha a^dag - alpha^* a at 32 levels, alpha = 1.
        let n = 32;
        let a = M::from_fn(n, n, |i, j| {
            if i == j + 1 {
                c(((j + 1) as f64).sqrt(), 0.0)
            } else if j == i + 1 {
                c(-((i + 1) as f64).sqrt(), 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let e = mat_exp(&a).unwrap();
        let oracle = taylor_exp(&a);
        assert!(max_entry_dev(&e, &oracle, n).unwrap() < 1e-12);
        // (0,0) entry is e^{-1/2}
        assert!((e[(0, 0)].re - 0.6065306597126334).abs() < 1e-12);
        assert!(e[(0, 0)].im.abs() < 1e-14);
    }

    #[test]
    fn exp_inverse_pairs_are_unitary() {
        // exp(A) exp(-A) = I for anti-Hermitian A of various norms.
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &scale in &[0.5, 2.0, 8.0] {
            let n = 12;
            let mut h = M::from_fn(n, n, |_, _| {
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            h = (&h - h.adjoint()).map(|z| z * c(scale, 0.0)); // anti-Hermitian
            let norm = norm_1(&h);
            let e = mat_exp(&h).unwrap();
            let e_inv = mat_exp(&h.map(|z| -z)).unwrap();
            let dev = max_entry_dev(&(&e * &e_inv), &M::identity(n, n), n).unwrap();
            assert!(dev < 1e-10, "norm {norm}: dev {dev}");
            assert!(unitarity_dev(&e, n).unwrap() < 1e-10);
        }
    }

    #[test]
    fn exp_matches_eigendecomposition_on_i_times_hermitian() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &n in &[4usize, 16, 32] {
            let mut h = M::from_fn(n, n, |_, _| {
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            h = (&h + h.adjoint()).map(|z| z * c(0.5, 0.0)); // Hermitian
            let eig = h.clone().symmetric_eigen();
            let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| c(l.cos(), l.sin())));
            let oracle = &eig.eigenvectors * phases * eig.eigenvectors.adjoint();
            let e = mat_exp(&h.map(|z| z * ci())).unwrap();
            assert!(max_entry_dev(&e, &oracle, n).unwrap() < 1e-10);
        }
    }

    #[test]
    fn scaling_budget_is_enforced() {
        let a = M::identity(2, 2).map(|z| z * c(1e12, 0.0));
        match mat_exp(&a) {
            Err(Error::ScalingBudget { .. }) => {}
            other => panic!("expected scaling budget error, got {other:?}"),
        }
    }

    #[test]
    fn non_square_rejected() {
        let a = M::zeros(2, 3);
        assert!(matches!(mat_exp(&a), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn project_examples() {
        let i8 = M::identity(8, 8);
        let p = project(&i8, 3).unwrap();
        assert_eq!(p, M::identity(3, 3));

        let d = M::from_diagonal(&CVector::from_vec(vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]));
        let p = project(&d, 2).unwrap();
        assert_eq!(p[(0, 0)], c(1.0, 0.0));
        assert_eq!(p[(1, 1)], c(2.0, 0.0));
        assert!(project(&d, 4).is_err());
    }

    #[test]
    fn deviation_examples() {
        let i = M::identity(5, 5);
        assert_eq!(max_entry_dev(&i, &i, 5).unwrap(), 0.0);
        let two = i.map(|z| z * c(2.0, 0.0));
        assert_eq!(max_entry_dev(&i, &two, 3).unwrap(), 1.0);
        assert!(max_entry_dev(&i, &two, 6).is_err());
        // Frobenius of the same 3x3 block: sqrt(3).
        assert!((frobenius_dev(&i, &two, 3).unwrap() - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn kahan_reduces_accumulation_error() {
        let mut k = KahanSum::<f64>::new();
        let mut plain = 0.0f64;
        for _ in 0..1_000_000 {
            k.add(0.1);
            plain += 0.1;
        }
        let exact = 100_000.0;
        assert!((k.value() - exact).abs() < 1e-9);
        assert!((k.value() - exact).abs() <= (plain - exact).abs());
    }

    #[test]
    fn blocks_do_not_multiply() {
        // project(AB, d) != project(A, d) project(B, d) in general; keep a
        // concrete witness so nobody "optimizes" the verifier that way.
        let a = M::from_fn(3, 3, |i, j| c((i + 2 * j) as f64, 0.0));
        let b = M::from_fn(3, 3, |i, j| c((3 * i + j) as f64, 1.0));
        let lhs = project(&(&a * &b), 2).unwrap();
        let rhs = project(&a, 2).unwrap() * project(&b, 2).unwrap();
        assert!(max_entry_dev(&lhs, &rhs, 2).unwrap() > 1.0);
    }
}
