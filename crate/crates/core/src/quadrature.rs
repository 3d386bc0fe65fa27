//! Deterministic quadrature grids for the three invariant measures:
//! `d^2alpha` on the plane, `d^2zeta / (1+|zeta|^2)^2` over the whole
//! zeta-plane (through the sphere chart) and `d^2zeta / (1-|zeta|^2)^2` on
//! the unit disc.
//!
//! Weights carry the raw measure density times the quadrature weight; group
//! prefactor constants (1/pi and friends) are applied by the verifier so
//! that normalization discrepancies stay visible in reports.

use crate::chart::{Chart, GroupPoint};
use crate::error::{Error, Result};
use crate::matrix::KahanSum;
use crate::scalar::{as_f64, cpolar, Real};

/// Radial scheme metadata kept with a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Plane,
    Sphere,
    Disc,
}

#[derive(Debug, Clone)]
pub struct GridMeta<T: Real> {
    pub kind: GridKind,
    /// Radial cutoff in the node coordinate (`R`, none, `tanh(s_max)`).
    pub radial_cutoff: Option<T>,
    pub n_radial: usize,
    pub n_angular: usize,
}

/// Quadrature nodes with positive weights embodying the invariant measure.
#[derive(Debug, Clone)]
pub struct MeasureGrid<T: Real> {
    pub nodes: Vec<GroupPoint<T>>,
    pub weights: Vec<T>,
    pub meta: GridMeta<T>,
}

impl<T: Real> MeasureGrid<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Compensated total weight; equals the analytic measure volume of the
    /// truncated domain up to quadrature rounding.
    pub fn total_weight(&self) -> T {
        let mut s = KahanSum::new();
        for &w in &self.weights {
            s.add(w);
        }
        s.value()
    }

    /// Compensated sum of `f(node) * weight`.
    pub fn integrate(&self, mut f: impl FnMut(&GroupPoint<T>) -> T) -> T {
        let mut s = KahanSum::new();
        for (p, &w) in self.nodes.iter().zip(&self.weights) {
            s.add(f(p) * w);
        }
        s.value()
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Newton iteration with the Chebyshev-like initial guess; nodes are
/// computed for one half and mirrored so the rule is exactly symmetric.
pub fn gauss_legendre<T: Real>(n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n < 1 {
        return Err(Error::InvalidParam("Gauss-Legendre order must be >= 1".into()));
    }
    let mut xs = vec![T::zero(); n];
    let mut ws = vec![T::zero(); n];
    let nf = T::of_usize(n);
    let tol = T::default_epsilon() * T::of(4.0);

    for i in 0..(n + 1) / 2 {
        let theta = T::pi() * (T::of_usize(i) + T::of(0.75)) / (nf + T::of(0.5));
        let mut x = theta.cos();
        let mut dp = T::one();
        for _ in 0..100 {
            // Legendre P_n and P_n' by upward recurrence.
            let mut p0 = T::one();
            let mut p1 = x;
            for k in 1..n {
                let kf = T::of_usize(k);
                let p2 = ((T::of(2.0) * kf + T::one()) * x * p1 - kf * p0) / (kf + T::one());
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - T::one());
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() <= tol {
                break;
            }
        }
        let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
        // enumeration starts from the +1 end; mirror to fill the other half
        xs[i] = -x;
        ws[i] = w;
        xs[n - 1 - i] = x;
        ws[n - 1 - i] = w;
    }
    Ok((xs, ws))
}

/// Gauss-Legendre rule mapped to [a, b].
pub fn gauss_legendre_on<T: Real>(n: usize, a: T, b: T) -> Result<(Vec<T>, Vec<T>)> {
    let (xs, ws) = gauss_legendre(n)?;
    let half = T::of(0.5);
    let mid = (a + b) * half;
    let rad = (b - a) * half;
    Ok((
        xs.iter().map(|&x| mid + rad * x).collect(),
        ws.iter().map(|&w| w * rad).collect(),
    ))
}

/// Uniform angular nodes `phi_k = 2 pi k / n` with the trapezoid weight
/// `2 pi / n`, exact for trigonometric polynomials of degree < n.
fn angular_nodes<T: Real>(n_phi: usize) -> (Vec<T>, T) {
    let w = T::two_pi() / T::of_usize(n_phi);
    let phis = (0..n_phi)
        .map(|k| T::two_pi() * T::of_usize(k) / T::of_usize(n_phi))
        .collect();
    (phis, w)
}

/// Polar grid on the disc `|alpha| <= radius` carrying raw `d^2alpha`.
///
/// Gauss-Legendre in the radius (the weight includes the polar Jacobian r)
/// and uniform angles. Total weight is `pi R^2` to rounding.
pub fn plane_grid<T: Real>(radius: T, n_r: usize, n_phi: usize) -> Result<MeasureGrid<T>> {
    if radius <= T::zero() {
        return Err(Error::InvalidParam("plane grid radius must be positive".into()));
    }
    if n_r < 2 {
        return Err(Error::InvalidParam("plane grid needs n_r >= 2".into()));
    }
    if n_phi < 4 {
        return Err(Error::InvalidParam("plane grid needs n_phi >= 4".into()));
    }
    let (rs, wrs) = gauss_legendre_on(n_r, T::zero(), radius)?;
    let (phis, wphi) = angular_nodes::<T>(n_phi);

    let mut nodes = Vec::with_capacity(n_r * n_phi);
    let mut weights = Vec::with_capacity(n_r * n_phi);
    for (&r, &wr) in rs.iter().zip(&wrs) {
        for &phi in &phis {
            nodes.push(GroupPoint {
                value: cpolar(r, phi),
                chart: Chart::PlaneAlpha,
            });
            weights.push(wr * r * wphi);
        }
    }
    Ok(MeasureGrid {
        nodes,
        weights,
        meta: GridMeta {
            kind: GridKind::Plane,
            radial_cutoff: Some(radius),
            n_radial: n_r,
            n_angular: n_phi,
        },
    })
}

/// Sphere grid in the stereographic chart, carrying
/// `d^2zeta / (1+|zeta|^2)^2 = (1/4) sin(theta) dtheta dphi`.
///
/// Gauss-Legendre in cos(theta) covers the entire zeta-plane through the
/// chart; no radial cutoff is needed. Total weight is pi to rounding.
pub fn sphere_grid<T: Real>(n_theta: usize, n_phi: usize) -> Result<MeasureGrid<T>> {
    if n_theta < 2 {
        return Err(Error::InvalidParam("sphere grid needs n_theta >= 2".into()));
    }
    if n_phi < 4 {
        return Err(Error::InvalidParam("sphere grid needs n_phi >= 4".into()));
    }
    let (us, wus) = gauss_legendre::<T>(n_theta)?;
    let (phis, wphi) = angular_nodes::<T>(n_phi);
    let quarter = T::of(0.25);

    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    let mut weights = Vec::with_capacity(n_theta * n_phi);
    for (&u, &wu) in us.iter().zip(&wus) {
        // |zeta| = tan(theta/2) with u = cos(theta):
        // tan(theta/2) = sqrt((1-u)/(1+u)).
        let r = ((T::one() - u) / (T::one() + u)).sqrt();
        for &phi in &phis {
            nodes.push(GroupPoint {
                value: cpolar(r, phi),
                chart: Chart::Su2Zeta,
            });
            weights.push(quarter * wu * wphi);
        }
    }
    Ok(MeasureGrid {
        nodes,
        weights,
        meta: GridMeta {
            kind: GridKind::Sphere,
            radial_cutoff: None,
            n_radial: n_theta,
            n_angular: n_phi,
        },
    })
}

/// Disc grid carrying `d^2zeta / (1-|zeta|^2)^2` under the substitution
/// `|zeta| = tanh(s)`, which removes the boundary blow-up analytically:
/// the weight becomes `sinh(s) cosh(s) ds dphi`.
///
/// Effective radial cutoff is `tanh(s_max) < 1`; total weight is
/// `pi sinh^2(s_max)` to rounding.
pub fn disc_grid<T: Real>(s_max: T, n_s: usize, n_phi: usize) -> Result<MeasureGrid<T>> {
    if s_max <= T::zero() {
        return Err(Error::InvalidParam("disc grid s_max must be positive".into()));
    }
    if n_s < 2 {
        return Err(Error::InvalidParam("disc grid needs n_s >= 2".into()));
    }
    if n_phi < 4 {
        return Err(Error::InvalidParam("disc grid needs n_phi >= 4".into()));
    }
    let (ss, wss) = gauss_legendre_on(n_s, T::zero(), s_max)?;
    let (phis, wphi) = angular_nodes::<T>(n_phi);

    let mut nodes = Vec::with_capacity(n_s * n_phi);
    let mut weights = Vec::with_capacity(n_s * n_phi);
    for (&s, &ws) in ss.iter().zip(&wss) {
        let r = s.tanh();
        let density = s.sinh() * s.cosh();
        for &phi in &phis {
            nodes.push(GroupPoint {
                value: cpolar(r, phi),
                chart: Chart::Su11Zeta,
            });
            weights.push(ws * density * wphi);
        }
    }
    Ok(MeasureGrid {
        nodes,
        weights,
        meta: GridMeta {
            kind: GridKind::Disc,
            radial_cutoff: Some(s_max.tanh()),
            n_radial: n_s,
            n_angular: n_phi,
        },
    })
}

/// Amplitude-level tail bound for a plane grid of radius `R` when the
/// highest occupied Fock level is `n_occ`:
/// `e^{-R^2/2} R^{n_occ} / sqrt(n_occ!)`.
///
/// Advisory: callers compare it against 1e-12 and attach a warning when the
/// bound is not met. Computed in logs to avoid overflow.
pub fn plane_tail_bound<T: Real>(radius: T, n_occ: usize) -> T {
    let r = as_f64(radius);
    let ln = -r * r / 2.0 + (n_occ as f64) * r.ln() - 0.5 * crate::special::ln_gamma(n_occ as f64 + 1.0);
    T::of(ln.exp())
}

/// Tail bound for the disc grid at Bargmann index k = 3/4: the decaying
/// factor of the assembled integrand behaves like `2 e^{-(4k-2) s}` past the
/// cutoff, so the remaining mass is about `2 e^{-s_max}`.
pub fn disc_tail_bound<T: Real>(s_max: T) -> T {
    T::of(2.0) * (-s_max).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cnorm_sqr;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (xs, ws) = gauss_legendre::<f64>(8).unwrap();
        // degree up to 2n-1 = 15 exact
        for deg in 0..16usize {
            let exact = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            let got: f64 = xs
                .iter()
                .zip(&ws)
                .map(|(&x, &w)| w * x.powi(deg as i32))
                .sum();
            assert!((got - exact).abs() < 1e-13, "degree {deg}: {got} vs {exact}");
        }
    }

    #[test]
    fn plane_grid_total_weight_is_disc_area() {
        let g = plane_grid(2.0f64, 40, 64).unwrap();
        let area = std::f64::consts::PI * 4.0;
        assert!((g.total_weight() - area).abs() < 1e-8);
        assert_eq!(g.len(), 40 * 64);
    }

    #[test]
    fn plane_grid_gaussian_integral() {
        // \int e^{-|alpha|^2} d^2alpha = pi, tail below 1e-15 at R = 6.
        let g = plane_grid(6.0f64, 80, 64).unwrap();
        let got = g.integrate(|p| (-cnorm_sqr(p.value)).exp());
        assert!((got - std::f64::consts::PI).abs() < 1e-8, "{got}");
    }

    #[test]
    fn plane_grid_preconditions() {
        assert!(plane_grid(0.0f64, 40, 64).is_err());
        assert!(plane_grid(2.0f64, 1, 64).is_err());
        assert!(plane_grid(2.0f64, 40, 2).is_err());
    }

    #[test]
    fn sphere_grid_total_weight_is_pi() {
        let g = sphere_grid::<f64>(24, 32).unwrap();
        assert!((g.total_weight() - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn sphere_grid_phi_shift_invariance_of_symmetric_integrand() {
        // f = 1 integrates identically whatever the angular origin; compare
        // n_phi choices that shift the node set.
        let g1 = sphere_grid::<f64>(16, 32).unwrap();
        let g2 = sphere_grid::<f64>(16, 37).unwrap();
        let v1 = g1.integrate(|_| 1.0);
        let v2 = g2.integrate(|_| 1.0);
        assert!((v1 - v2).abs() < 1e-12);
    }

    #[test]
    fn sphere_grid_normalizes_lowest_weight_overlap() {
        // (2S+1)/pi * \int |<S,-S|zeta;-S>|^2 dmu = 1 for S = 1, where
        // |<S,-S|zeta;-S>|^2 = (1+|zeta|^2)^{-2S}. Polynomial in cos(theta),
        // so Gauss-Legendre is exact.
        let s = 1.0f64;
        let g = sphere_grid::<f64>(12, 16).unwrap();
        let integral = g.integrate(|p| (1.0 + cnorm_sqr(p.value)).powf(-2.0 * s));
        let got = (2.0 * s + 1.0) / std::f64::consts::PI * integral;
        assert!((got - 1.0).abs() < 1e-10, "{got}");
    }

    #[test]
    fn disc_grid_total_weight() {
        let g = disc_grid(1.0f64, 40, 32).unwrap();
        let expected = std::f64::consts::PI * 1.0f64.sinh().powi(2);
        assert!((g.total_weight() - expected).abs() < 1e-8);
    }

    #[test]
    fn disc_grid_nodes_stay_inside_cutoff() {
        let g = disc_grid(1.0f64, 24, 16).unwrap();
        let r_max = 1.0f64.tanh();
        let largest = g
            .nodes
            .iter()
            .map(|p| cnorm_sqr(p.value).sqrt())
            .fold(0.0f64, f64::max);
        assert!(largest < r_max);
        assert!(g.meta.radial_cutoff.unwrap() == r_max);
    }

    #[test]
    fn disc_grid_preconditions() {
        assert!(disc_grid(0.0f64, 24, 16).is_err());
        assert!(disc_grid(-1.0f64, 24, 16).is_err());
    }

    #[test]
    fn tail_bounds_behave() {
        // R = 10 meets the 1e-12 amplitude bound for n_occ = 14; R = 6 does not.
        assert!(plane_tail_bound(10.0f64, 14) < 1e-12);
        assert!(plane_tail_bound(6.0f64, 14) > 1e-12);
        assert!(disc_tail_bound(5.0f64) > 1e-10);
        assert!(disc_tail_bound(25.0f64) < 1e-10);
    }
}
