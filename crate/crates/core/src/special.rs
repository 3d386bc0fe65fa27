//! Jacobi and associated Laguerre polynomials, log-gamma, and the
//! Jacobi-polynomial integral identity used to cross-check the disc-group
//! matrix elements.

use crate::error::{Error, Result};
use crate::matrix::KahanSum;
use crate::quadrature::gauss_legendre_on;
use crate::scalar::Real;

// Lanczos approximation, g = 7, 9 terms. Good to ~1e-15 relative for
// positive arguments.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Natural log of the gamma function for positive real arguments.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// `exp(sum(ln_gamma(num)) - sum(ln_gamma(den)))`, the overflow-safe way to
/// evaluate gamma ratios with arguments up to several hundred.
pub fn gamma_ratio(numerators: &[f64], denominators: &[f64]) -> f64 {
    let mut ln = 0.0;
    for &x in numerators {
        ln += ln_gamma(x);
    }
    for &x in denominators {
        ln -= ln_gamma(x);
    }
    ln.exp()
}

/// Degree and superscript parameters of a Jacobi polynomial.
#[derive(Debug, Clone, Copy)]
pub struct JacobiParams<T: Real> {
    pub n: usize,
    pub a: T,
    pub b: T,
}

impl<T: Real> JacobiParams<T> {
    pub fn new(n: usize, a: T, b: T) -> Result<Self> {
        if a <= -T::one() || b <= -T::one() {
            return Err(Error::InvalidParam(
                "Jacobi parameters must satisfy a > -1, b > -1".into(),
            ));
        }
        Ok(Self { n, a, b })
    }
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the standard three-term
/// recurrence; stable for `|x| <= 1` and moderate degrees.
pub fn jacobi_eval<T: Real>(p: JacobiParams<T>, x: T) -> T {
    let JacobiParams { n, a, b } = p;
    if n == 0 {
        return T::one();
    }
    let two = T::of(2.0);
    let mut pm1 = T::one();
    let mut pn = (a - b) / two + (a + b + two) / two * x;
    for k in 2..=n {
        let kf = T::of_usize(k);
        let c = two * kf + a + b;
        // 2k(k+a+b)(c-2) P_k = (c-1)[c(c-2)x + a^2-b^2] P_{k-1}
        //                      - 2(k+a-1)(k+b-1)c P_{k-2}
        let a1 = two * kf * (kf + a + b) * (c - two);
        let a2 = (c - T::one()) * (c * (c - two) * x + a * a - b * b);
        let a3 = two * (kf + a - T::one()) * (kf + b - T::one()) * c;
        let pk = (a2 * pn - a3 * pm1) / a1;
        pm1 = pn;
        pn = pk;
    }
    pn
}

/// Associated Laguerre polynomial `L_n^{(a)}(x)` by recurrence.
pub fn laguerre_assoc<T: Real>(n: usize, a: T, x: T) -> T {
    if n == 0 {
        return T::one();
    }
    let mut lm1 = T::one();
    let mut ln = T::one() + a - x;
    for k in 1..n {
        let kf = T::of_usize(k);
        let lk = ((T::of(2.0) * kf + T::one() + a - x) * ln - (kf + a) * lm1) / (kf + T::one());
        lm1 = ln;
        ln = lk;
    }
    ln
}

/// Full left side of the unit-normalized Jacobi integral
///
/// ```text
/// (1/2) [Gamma(n+1) Gamma(p+3/2) / (Gamma(p+1) Gamma(n+3/2))]
///   * \int_0^1 x^{p-n} [P_n^{(p-n,1/2)}(1-2x)]^2 (1-x)^{-1/2} dx
/// ```
///
/// which equals 1 for every `p >= n >= 0`. The endpoint singularity is
/// removed analytically with `x = 1 - t^2`, leaving a polynomial in `t`
/// that Gauss-Legendre integrates exactly.
pub fn jacobi_identity_lhs(n: usize, p: usize) -> Result<f64> {
    if p < n {
        return Err(Error::InvalidParam(format!(
            "identity requires p >= n, got n = {n}, p = {p}"
        )));
    }
    let a = (p - n) as f64;
    let params = JacobiParams::new(n, a, 0.5)?;

    // integrand in t has degree 2(p - n) + 4n = 2(p + n); 2N-1 >= deg.
    let n_nodes = (p + n + 2).max(48);
    let (ts, ws) = gauss_legendre_on(n_nodes, 0.0f64, 1.0)?;
    let mut sum = KahanSum::new();
    for (&t, &w) in ts.iter().zip(&ws) {
        let x = 1.0 - t * t;
        let poly = jacobi_eval(params, 1.0 - 2.0 * x);
        sum.add(w * 2.0 * x.powi((p - n) as i32) * poly * poly);
    }

    let prefactor = 0.5
        * gamma_ratio(
            &[n as f64 + 1.0, p as f64 + 1.5],
            &[p as f64 + 1.0, n as f64 + 1.5],
        );
    Ok(prefactor * sum.value())
}
