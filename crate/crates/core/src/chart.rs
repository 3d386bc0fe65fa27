//! Coset-chart coordinates for the three groups and the conversions
//! between the angle-like (xi) and stereographic (zeta) charts.

use crate::error::{Error, Result};
use crate::scalar::{as_f64, cnorm, Real, C};

/// Which coordinate a [`GroupPoint`] value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// Displacement amplitude on the plane.
    PlaneAlpha,
    /// Stereographic coordinate of the sphere, `|zeta| = tan(theta/2)`.
    Su2Zeta,
    /// Rotation parameter, `|xi| = theta/2 < pi/2` for the zeta chart image.
    Su2Xi,
    /// Unit-disc coordinate, `|zeta| = tanh|xi| < 1`.
    Su11Zeta,
    /// Squeeze parameter.
    Su11Xi,
}

/// A point on a group's coset chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupPoint<T: Real> {
    pub value: C<T>,
    pub chart: Chart,
}

impl<T: Real> GroupPoint<T> {
    /// Validating constructor: disc-chart points must satisfy `|zeta| < 1`.
    pub fn new(value: C<T>, chart: Chart) -> Result<Self> {
        if chart == Chart::Su11Zeta && cnorm(value) >= T::one() {
            return Err(Error::ChartDomain(format!(
                "|zeta| = {} not inside the unit disc",
                as_f64(cnorm(value))
            )));
        }
        Ok(Self { value, chart })
    }

    pub fn plane(alpha: C<T>) -> Self {
        Self {
            value: alpha,
            chart: Chart::PlaneAlpha,
        }
    }

    pub fn su2_zeta(zeta: C<T>) -> Self {
        Self {
            value: zeta,
            chart: Chart::Su2Zeta,
        }
    }

    pub fn su11_zeta(zeta: C<T>) -> Result<Self> {
        Self::new(zeta, Chart::Su11Zeta)
    }

    pub fn expect_chart(&self, chart: Chart) -> Result<C<T>> {
        if self.chart == chart {
            Ok(self.value)
        } else {
            Err(Error::ChartMismatch {
                expected: chart,
                found: self.chart,
            })
        }
    }
}

/// Rescale the modulus of `z` by `f(|z|)`, preserving the argument.
fn remap_modulus<T: Real>(z: C<T>, f: impl Fn(T) -> T) -> C<T> {
    let r = cnorm(z);
    if r == T::zero() {
        return C::new(T::zero(), T::zero());
    }
    let s = f(r) / r;
    C::new(z.re * s, z.im * s)
}

/// Convert between the SU(2) charts: `|zeta| = tan|xi|`, argument preserved.
///
/// The xi -> zeta direction requires `|xi| < pi/2`.
pub fn su2_chart<T: Real>(p: GroupPoint<T>) -> Result<GroupPoint<T>> {
    match p.chart {
        Chart::Su2Xi => {
            let half_pi = T::pi() * T::of(0.5);
            if cnorm(p.value) >= half_pi {
                return Err(Error::ChartDomain(format!(
                    "|xi| = {} >= pi/2",
                    as_f64(cnorm(p.value))
                )));
            }
            Ok(GroupPoint {
                value: remap_modulus(p.value, |r| r.tan()),
                chart: Chart::Su2Zeta,
            })
        }
        Chart::Su2Zeta => Ok(GroupPoint {
            value: remap_modulus(p.value, |r| r.atan()),
            chart: Chart::Su2Xi,
        }),
        other => Err(Error::ChartMismatch {
            expected: Chart::Su2Zeta,
            found: other,
        }),
    }
}

/// Convert between the SU(1,1) charts: `|zeta| = tanh|xi|`, argument
/// preserved. The zeta -> xi direction requires `|zeta| < 1`.
pub fn su11_chart<T: Real>(p: GroupPoint<T>) -> Result<GroupPoint<T>> {
    match p.chart {
        Chart::Su11Xi => Ok(GroupPoint {
            value: remap_modulus(p.value, |r| r.tanh()),
            chart: Chart::Su11Zeta,
        }),
        Chart::Su11Zeta => {
            if cnorm(p.value) >= T::one() {
                return Err(Error::ChartDomain(format!(
                    "|zeta| = {} >= 1",
                    as_f64(cnorm(p.value))
                )));
            }
            Ok(GroupPoint {
                value: remap_modulus(p.value, |r| r.atanh()),
                chart: Chart::Su11Xi,
            })
        }
        other => Err(Error::ChartMismatch {
            expected: Chart::Su11Zeta,
            found: other,
        }),
    }
}
