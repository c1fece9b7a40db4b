//! Kinematics of the time sphere: velocities, rapidities, four-momenta,
//! and the embedding of time-angle coordinates into the (x0, x3, s) space.
//!
//! The sphere of radius 1/2 rests on the x3-s plane with the x0 axis
//! through its south pole. A surface point is addressed by the hyperbolic
//! angle `t_theta` and the circular angle `t_phi`; the `s` axis stands for
//! a circle in the x1-x2 plane, whose azimuth is carried separately as the
//! complex phase of `v1 + i v2` and never enters `t_phi`.
//!
//! Natural units, c = 1.

use crate::error::{Error, Result};
use crate::C64;

use std::f64::consts::TAU;

/// Relative tolerance for the mass-shell invariant at construction.
pub const MASS_SHELL_TOL: f64 = 1e-12;

/// A point of 3-dimensional time: clock radius plus two direction angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeAngleCoord {
    /// Clock-time radius, `t >= 0`.
    pub t: f64,
    /// Hyperbolic angle (rapidity), `t_theta >= 0`.
    pub t_theta: f64,
    /// Circular time angle, normalized into `[0, 2*pi)`.
    pub t_phi: f64,
}

impl TimeAngleCoord {
    /// Builds a coordinate, normalizing `t_phi` into `[0, 2*pi)`.
    pub fn new(t: f64, t_theta: f64, t_phi: f64) -> Result<Self> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidCoordinate { name: "t", value: t });
        }
        if !t_theta.is_finite() || t_theta < 0.0 {
            return Err(Error::InvalidCoordinate {
                name: "t_theta",
                value: t_theta,
            });
        }
        if !t_phi.is_finite() {
            return Err(Error::InvalidCoordinate {
                name: "t_phi",
                value: t_phi,
            });
        }
        Ok(Self {
            t,
            t_theta,
            t_phi: wrap_angle(t_phi),
        })
    }

    /// Angles-only constructor with zero clock radius.
    pub fn from_angles(t_theta: f64, t_phi: f64) -> Result<Self> {
        Self::new(0.0, t_theta, t_phi)
    }
}

/// Normalizes an angle into `[0, 2*pi)`.
pub fn wrap_angle(phi: f64) -> f64 {
    let mut a = phi.rem_euclid(TAU);
    // rem_euclid can return TAU when phi is a tiny negative number.
    if a >= TAU {
        a -= TAU;
    }
    a
}

/// A 3-velocity in units of c; valid values have speed strictly below 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocity3 {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl Velocity3 {
    pub fn new(v1: f64, v2: f64, v3: f64) -> Result<Self> {
        let v = Self { v1, v2, v3 };
        let s = v.speed();
        if !s.is_finite() || s >= 1.0 {
            return Err(Error::SpeedOutOfRange(s));
        }
        Ok(v)
    }

    pub const fn zero() -> Self {
        Self {
            v1: 0.0,
            v2: 0.0,
            v3: 0.0,
        }
    }

    pub fn speed(&self) -> f64 {
        (self.v1 * self.v1 + self.v2 * self.v2 + self.v3 * self.v3).sqrt()
    }

    /// Magnitude of the component in the x1-x2 plane (the `s` direction).
    pub fn v_s(&self) -> f64 {
        self.v1.hypot(self.v2)
    }

    /// Phase of `v1 + i v2`: the azimuth inside the circle the `s` axis
    /// stands for. Zero when the planar component vanishes.
    pub fn azimuth(&self) -> f64 {
        if self.v_s() == 0.0 {
            0.0
        } else {
            self.v2.atan2(self.v1)
        }
    }
}

/// On-shell four-momentum with its rest mass.
///
/// `e` is always positive; negative-energy solutions are represented by a
/// branch tag on the spinor, not by flipping the sign here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    pub e: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub m: f64,
}

impl FourMomentum {
    /// Validates the mass shell `E^2 - p^2 = m^2` and `E >= m`.
    pub fn new(e: f64, p1: f64, p2: f64, p3: f64, m: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::NonPositiveMass(m));
        }
        let tolerance = MASS_SHELL_TOL * m.powi(2).max(1.0);
        let deviation = (e * e - p1 * p1 - p2 * p2 - p3 * p3 - m * m).abs();
        if !deviation.is_finite() || deviation >= tolerance {
            return Err(Error::OffMassShell {
                deviation,
                tolerance,
            });
        }
        if e < m * (1.0 - MASS_SHELL_TOL) {
            return Err(Error::EnergyBelowMass { energy: e, mass: m });
        }
        Ok(Self { e, p1, p2, p3, m })
    }

    /// Relativistic momentum from rest mass and velocity:
    /// `E = m/sqrt(1-v^2)`, `p_i = m v_i/sqrt(1-v^2)`.
    pub fn from_mass_velocity(m: f64, v: &Velocity3) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::NonPositiveMass(m));
        }
        let speed = v.speed();
        if speed >= 1.0 {
            return Err(Error::SpeedOutOfRange(speed));
        }
        let gamma = 1.0 / (1.0 - speed * speed).sqrt();
        Ok(Self {
            e: m * gamma,
            p1: m * gamma * v.v1,
            p2: m * gamma * v.v2,
            p3: m * gamma * v.v3,
            m,
        })
    }

    pub fn spatial_norm(&self) -> f64 {
        (self.p1 * self.p1 + self.p2 * self.p2 + self.p3 * self.p3).sqrt()
    }

    /// Momentum magnitude in the x1-x2 plane (the `s` direction).
    pub fn p_s(&self) -> f64 {
        self.p1.hypot(self.p2)
    }

    pub fn velocity(&self) -> Velocity3 {
        Velocity3 {
            v1: self.p1 / self.e,
            v2: self.p2 / self.e,
            v3: self.p3 / self.e,
        }
    }
}

/// Embedding coordinates of a time-sphere point in the (x0, x3, s) space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPoint {
    pub x0: f64,
    pub x3: f64,
    pub s: f64,
}

/// Unit time vector in the (x0, x3, s) basis.
///
/// Components are ordered `(n0, n3, ns) = (cosh, sinh*cos, sinh*sin)`:
/// `n0` along the time axis and the two spatial projections after it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeVector {
    pub n0: f64,
    pub n3: f64,
    pub ns: f64,
}

impl TimeVector {
    /// Minkowski norm with signature (+, -, -); unit vectors give +1.
    pub fn minkowski_norm(&self) -> f64 {
        self.n0 * self.n0 - self.n3 * self.n3 - self.ns * self.ns
    }
}

/// Time angles read off a velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeAngles {
    pub t_theta: f64,
    /// In `[0, pi]`; the `s` coordinate is radial in the x1-x2 plane, so
    /// `sin(t_phi) >= 0`.
    pub t_phi: f64,
    /// Phase of `v1 + i v2`, carried separately from `t_phi`.
    pub azimuth: f64,
    /// True at zero velocity, where `t_phi` is undefined and canonicalized
    /// to 0.
    pub indeterminate: bool,
}

/// Rapidity of a speed: `cosh(t_theta) = 1/sqrt(1-v^2)`,
/// `sinh(t_theta) = v/sqrt(1-v^2)`.
pub fn rapidity_from_speed(v: f64) -> Result<f64> {
    if !v.is_finite() || !(0.0..1.0).contains(&v) {
        return Err(Error::SpeedOutOfRange(v));
    }
    Ok(v.atanh())
}

/// Time angles of a velocity: `cos(t_phi) = v3/|v|`, `sin(t_phi) = v_s/|v|`.
pub fn angles_from_velocity(v: &Velocity3) -> Result<TimeAngles> {
    let speed = v.speed();
    if speed == 0.0 {
        return Ok(TimeAngles {
            t_theta: 0.0,
            t_phi: 0.0,
            azimuth: 0.0,
            indeterminate: true,
        });
    }
    let t_theta = rapidity_from_speed(speed)?;
    // atan2 of (v_s, v3) with v_s >= 0 lands in [0, pi].
    let t_phi = v.v_s().atan2(v.v3);
    Ok(TimeAngles {
        t_theta,
        t_phi,
        azimuth: v.azimuth(),
        indeterminate: false,
    })
}

/// Embeds a time-angle coordinate on the radius-1/2 sphere:
/// `x0 = (1 + cosh)/2`, `x3 = sinh*cos/2`, `s = sinh*sin/2`.
pub fn embed_point(c: &TimeAngleCoord) -> HyperbolicPoint {
    let ch = c.t_theta.cosh();
    let sh = c.t_theta.sinh();
    HyperbolicPoint {
        x0: 0.5 * (1.0 + ch),
        x3: 0.5 * sh * c.t_phi.cos(),
        s: 0.5 * sh * c.t_phi.sin(),
    }
}

/// Residual of the hyperbolic constraint `|z1|^2 - |z2|^2 = 1`.
pub fn hyperbolic_constraint_residual(z1: C64, z2: C64) -> f64 {
    z1.norm_sqr() - z2.norm_sqr() - 1.0
}

/// Unit time vector `(cosh, sinh*cos, sinh*sin)` of a surface point; its
/// Minkowski norm is +1.
pub fn unit_time_vector(c: &TimeAngleCoord) -> TimeVector {
    let ch = c.t_theta.cosh();
    let sh = c.t_theta.sinh();
    TimeVector {
        n0: ch,
        n3: sh * c.t_phi.cos(),
        ns: sh * c.t_phi.sin(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI};

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{a} vs {b}");
    }

    #[test]
    fn rapidity_rest_frame() {
        assert_eq!(rapidity_from_speed(0.0).unwrap(), 0.0);
    }

    #[test]
    fn rapidity_point_six() {
        let th = rapidity_from_speed(0.6).unwrap();
        close(th, LN_2, 1e-15);
        close(th.cosh(), 1.25, 1e-12);
        close(th.sinh(), 0.75, 1e-12);
    }

    #[test]
    fn rapidity_point_ninety_nine() {
        let th = rapidity_from_speed(0.99).unwrap();
        close(th, 2.6466524123622457, 1e-12);
        close(th.sinh() / th.cosh(), 0.99, 1e-13);
    }

    #[test]
    fn rapidity_rejects_out_of_range() {
        assert!(matches!(
            rapidity_from_speed(1.0),
            Err(Error::SpeedOutOfRange(_))
        ));
        assert!(matches!(
            rapidity_from_speed(-0.1),
            Err(Error::SpeedOutOfRange(_))
        ));
        assert!(rapidity_from_speed(f64::NAN).is_err());
    }

    #[test]
    fn angles_along_x3() {
        let v = Velocity3::new(0.0, 0.0, 0.6).unwrap();
        let a = angles_from_velocity(&v).unwrap();
        close(a.t_theta, LN_2, 1e-15);
        close(a.t_phi, 0.0, 1e-15);
        assert!(!a.indeterminate);
    }

    #[test]
    fn angles_along_x1() {
        let v = Velocity3::new(0.6, 0.0, 0.0).unwrap();
        let a = angles_from_velocity(&v).unwrap();
        close(a.t_theta, LN_2, 1e-15);
        close(a.t_phi, FRAC_PI_2, 1e-15);
        close(a.azimuth, 0.0, 1e-15);
    }

    #[test]
    fn angles_rest_frame_is_flagged() {
        let a = angles_from_velocity(&Velocity3::zero()).unwrap();
        assert_eq!(a.t_theta, 0.0);
        assert_eq!(a.t_phi, 0.0);
        assert!(a.indeterminate);
    }

    #[test]
    fn angles_stay_in_upper_half() {
        // Negative v1: t_phi still in [0, pi], azimuth carries the sign.
        let v = Velocity3::new(-0.3, -0.4, 0.2).unwrap();
        let a = angles_from_velocity(&v).unwrap();
        assert!((0.0..=PI).contains(&a.t_phi));
        close(a.azimuth, (-0.4f64).atan2(-0.3), 1e-15);
    }

    #[test]
    fn embed_pole() {
        let c = TimeAngleCoord::from_angles(0.0, 1.234).unwrap();
        let p = embed_point(&c);
        assert_eq!(p, HyperbolicPoint { x0: 1.0, x3: 0.0, s: 0.0 });
    }

    #[test]
    fn embed_ln2_meridian() {
        let p = embed_point(&TimeAngleCoord::from_angles(LN_2, 0.0).unwrap());
        close(p.x0, 1.125, 1e-15);
        close(p.x3, 0.375, 1e-15);
        close(p.s, 0.0, 1e-15);
    }

    #[test]
    fn embed_ln2_rotated() {
        let p = embed_point(&TimeAngleCoord::from_angles(LN_2, FRAC_PI_2).unwrap());
        close(p.x0, 1.125, 1e-15);
        close(p.x3, 0.0, 1e-15);
        close(p.s, 0.375, 1e-15);
    }

    #[test]
    fn constraint_rest_spinor() {
        assert_eq!(
            hyperbolic_constraint_residual(C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
            0.0
        );
    }

    #[test]
    fn constraint_hyperbolic_pair() {
        let z1 = C64::new(0.5f64.cosh(), 0.0);
        let z2 = C64::from_polar(0.5f64.sinh(), 1.3);
        assert!(hyperbolic_constraint_residual(z1, z2).abs() < 1e-15);
    }

    #[test]
    fn constraint_off_shell_point() {
        close(
            hyperbolic_constraint_residual(C64::new(1.0, 0.0), C64::new(1.0, 0.0)),
            -1.0,
            1e-15,
        );
    }

    #[test]
    fn unit_vector_examples() {
        let n = unit_time_vector(&TimeAngleCoord::from_angles(0.0, 0.0).unwrap());
        assert_eq!(n, TimeVector { n0: 1.0, n3: 0.0, ns: 0.0 });

        let n = unit_time_vector(&TimeAngleCoord::from_angles(LN_2, 0.0).unwrap());
        close(n.n0, 1.25, 1e-15);
        close(n.n3, 0.75, 1e-15);
        close(n.ns, 0.0, 1e-15);
        close(n.minkowski_norm(), 1.0, 1e-12);
    }

    #[test]
    fn time_coord_normalizes_phi() {
        let c = TimeAngleCoord::new(1.0, 0.5, -0.25).unwrap();
        close(c.t_phi, TAU - 0.25, 1e-15);
        let c = TimeAngleCoord::new(1.0, 0.5, TAU + 0.25).unwrap();
        close(c.t_phi, 0.25, 1e-15);
    }

    #[test]
    fn time_coord_rejects_bad_fields() {
        assert!(TimeAngleCoord::new(-1.0, 0.0, 0.0).is_err());
        assert!(TimeAngleCoord::new(0.0, -0.5, 0.0).is_err());
        assert!(TimeAngleCoord::new(0.0, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn four_momentum_from_velocity_is_on_shell() {
        let v = Velocity3::new(0.1, -0.2, 0.55).unwrap();
        let p = FourMomentum::from_mass_velocity(2.5, &v).unwrap();
        let dev = (p.e * p.e - p.spatial_norm().powi(2) - p.m * p.m).abs();
        assert!(dev < MASS_SHELL_TOL * p.m * p.m.max(1.0));
        let back = p.velocity();
        close(back.v1, 0.1, 1e-14);
        close(back.v2, -0.2, 1e-14);
        close(back.v3, 0.55, 1e-14);
    }

    #[test]
    fn four_momentum_rejects_off_shell() {
        assert!(matches!(
            FourMomentum::new(2.0, 0.0, 0.0, 0.0, 1.0),
            Err(Error::OffMassShell { .. })
        ));
        assert!(matches!(
            FourMomentum::new(1.0, 0.0, 0.0, 0.0, -1.0),
            Err(Error::NonPositiveMass(_))
        ));
        assert!(FourMomentum::from_mass_velocity(0.0, &Velocity3::zero()).is_err());
    }

    #[test]
    fn velocity_rejects_superluminal() {
        assert!(Velocity3::new(0.8, 0.8, 0.0).is_err());
        assert!(Velocity3::new(1.0, 0.0, 0.0).is_err());
    }
}
