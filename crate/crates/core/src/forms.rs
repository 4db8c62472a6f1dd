//! Minkowski space `R^{3,1}`, the space `R^{4,2}`, and the two quotients of
//! the null cone of `R^{4,2}`.
//!
//! Index `k` of the coordinate arrays holds `x^{k+1}`. In particular
//! `MinkVector.0[3]` is `x^4 = ct` (units with `c = 1`) and
//! `HexVector.0[3]`, `HexVector.0[5]` are the two timelike directions
//! `x^4`, `x^6`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::tolerance;

/// Event `(x^1, x^2, x^3, x^4)` with `q(x) = x1^2 + x2^2 + x3^2 - x4^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MinkVector(pub [f64; 4]);

impl MinkVector {
    pub const fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self([x1, x2, x3, x4])
    }

    /// Event from a spatial position and a time `t` (`x^4 = t`).
    pub const fn from_space_time(x: [f64; 3], t: f64) -> Self {
        Self([x[0], x[1], x[2], t])
    }

    pub fn space(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn time(&self) -> f64 {
        self.0[3]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Squared Euclidean norm of the coordinates.
    pub fn norm_squared(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// The Minkowski quadratic form.
    pub fn q_form(&self) -> f64 {
        self.inner(self)
    }

    /// Polarization of [`q_form`](Self::q_form).
    pub fn inner(&self, other: &Self) -> f64 {
        let (a, b) = (&self.0, &other.0);
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3]
    }

    /// Inversion with respect to the origin, `x -> x / q(x)`. An involution
    /// off the light cone.
    pub fn penrose_inversion(&self) -> Result<Self> {
        self.conformal_inversion(1.0)
    }

    /// `(x, t) -> r0^2 (x, t) / (x^2 - t^2)`. The constant `r0` carries the
    /// dimension of length.
    pub fn conformal_inversion(&self, r0: f64) -> Result<Self> {
        let q = self.q_form();
        if q.abs() <= tolerance::LIGHT_CONE * self.norm_squared() {
            return Err(Error::LightConeSingular);
        }
        Ok(*self * (r0 * r0 / q))
    }
}

impl Add for MinkVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] + rhs.0[k]))
    }
}

impl Sub for MinkVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] - rhs.0[k]))
    }
}

impl Mul<f64> for MinkVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|c| c * s))
    }
}

/// Point of `R^{4,2}` with `Q(x) = x1^2 + x2^2 + x3^2 - x4^2 + x5^2 - x6^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HexVector(pub [f64; 6]);

/// Metric signature of `R^{4,2}`.
pub const HEX_METRIC: [f64; 6] = [1.0, 1.0, 1.0, -1.0, 1.0, -1.0];

impl HexVector {
    pub const fn new(x: [f64; 6]) -> Self {
        Self(x)
    }

    pub fn basis(alpha: usize) -> Self {
        let mut x = [0.0; 6];
        x[alpha] = 1.0;
        Self(x)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn norm_squared(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn q_form(&self) -> f64 {
        self.inner(self)
    }

    pub fn inner(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .zip(HEX_METRIC)
            .map(|((a, b), g)| g * a * b)
            .sum()
    }

    /// Scale-free cone test, `|Q(x)| <= 1e-9 |x|^2`.
    pub fn is_on_cone(&self) -> bool {
        self.q_form().abs() <= tolerance::CONE * self.norm_squared()
    }

    /// `x1^2 + x2^2 + x3^2 + x5^2`, the spacelike cylinder sum.
    pub fn space_sum(&self) -> f64 {
        let x = &self.0;
        x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[4] * x[4]
    }

    /// `x4^2 + x6^2`, the timelike cylinder sum.
    pub fn time_sum(&self) -> f64 {
        self.0[3] * self.0[3] + self.0[5] * self.0[5]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn checked_cone(&self) -> Result<()> {
        if self.0.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroVector);
        }
        if !self.is_on_cone() {
            return Err(Error::NotOnCone {
                residual: self.q_form().abs(),
            });
        }
        Ok(())
    }

    /// Positive rescaling onto the two unit cylinders. On the cone both sums
    /// agree; their mean is used so that small cone residuals are split
    /// evenly between the two equations.
    fn cylinder_normalized(&self) -> Self {
        let scale = ((self.space_sum() + self.time_sum()) / 2.0).sqrt();
        *self * scale.recip()
    }
}

impl Add for HexVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] + rhs.0[k]))
    }
}

impl Sub for HexVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] - rhs.0[k]))
    }
}

impl Mul<f64> for HexVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|c| c * s))
    }
}

impl Neg for HexVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

/// Class of a null vector under positive scaling (`x ≈ λx`, `λ > 0`): a
/// point of the double cover of compactified Minkowski space.
///
/// The representative lies on both unit cylinders,
/// `x1^2 + x2^2 + x3^2 + x5^2 = x4^2 + x6^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayClass(HexVector);

impl RayClass {
    pub fn new(v: HexVector) -> Result<Self> {
        v.checked_cone()?;
        Ok(Self(v.cylinder_normalized()))
    }

    pub fn representative(&self) -> HexVector {
        self.0
    }

    /// The antipodal ray `-x`, distinct under `≈`.
    pub fn antipode(&self) -> Self {
        Self(-self.0)
    }

    pub fn to_proj(&self) -> ProjClass {
        ProjClass(sign_fixed(self.0))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.max_abs_diff(&other.0) <= tol
    }
}

/// Class of a null vector under nonzero scaling (`x ~ λx`, `λ ≠ 0`): a point
/// of compactified Minkowski space as a projective quadric.
///
/// The representative is cylinder-normalized, and its first component in
/// the index order `x4, x6, x1, x2, x3, x5` that is nonzero is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjClass(HexVector);

/// Index order used to fix the sign of a projective representative.
pub const SIGN_FIX_ORDER: [usize; 6] = [3, 5, 0, 1, 2, 4];

fn sign_fixed(v: HexVector) -> HexVector {
    for k in SIGN_FIX_ORDER {
        let c = v.0[k];
        if c.abs() > tolerance::SIGN_FIX {
            return if c < 0.0 { -v } else { v };
        }
    }
    v
}

impl ProjClass {
    pub fn new(v: HexVector) -> Result<Self> {
        Ok(RayClass::new(v)?.to_proj())
    }

    pub fn representative(&self) -> HexVector {
        self.0
    }

    /// The `≈`-class of the sign-fixed representative.
    pub fn to_ray(&self) -> RayClass {
        RayClass(self.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.max_abs_diff(&other.0) <= tol
    }
}

/// Positive-scaling class of a null vector.
pub fn ray_class(v: HexVector) -> Result<RayClass> {
    RayClass::new(v)
}

/// Nonzero-scaling class of a null vector.
pub fn proj_class(v: HexVector) -> Result<ProjClass> {
    ProjClass::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-14
    }

    #[test]
    fn q_form_examples() {
        assert_eq!(MinkVector::new(0.0, 0.0, 0.0, 0.0).q_form(), 0.0);
        assert_eq!(MinkVector::new(1.0, 0.0, 0.0, 1.0).q_form(), 0.0);
        assert_eq!(MinkVector::new(1.0, 2.0, 3.0, 4.0).q_form(), -2.0);
    }

    #[test]
    fn mink_inner_examples() {
        let e1 = MinkVector::new(1.0, 0.0, 0.0, 0.0);
        let e4 = MinkVector::new(0.0, 0.0, 0.0, 1.0);
        assert_eq!(e1.inner(&e1), 1.0);
        assert_eq!(e4.inner(&e4), -1.0);
        let a = MinkVector::new(1.0, 0.0, 0.0, 1.0);
        let b = MinkVector::new(1.0, 0.0, 0.0, -1.0);
        assert_eq!(a.inner(&b), 2.0);
    }

    #[test]
    fn hex_form_examples() {
        assert_eq!(HexVector::basis(4).q_form(), 1.0);
        assert_eq!(HexVector::basis(5).q_form(), -1.0);
        assert_eq!(HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]).q_form(), 0.0);
    }

    #[test]
    fn penrose_inversion_examples() {
        let e1 = MinkVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(e1.penrose_inversion().unwrap(), e1);
        let v = MinkVector::new(2.0, 0.0, 0.0, 0.0).penrose_inversion().unwrap();
        assert_eq!(v, MinkVector::new(0.5, 0.0, 0.0, 0.0));
        assert_eq!(
            MinkVector::new(1.0, 0.0, 0.0, 1.0).penrose_inversion(),
            Err(Error::LightConeSingular)
        );
    }

    #[test]
    fn conformal_inversion_examples() {
        let e1 = MinkVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(e1.conformal_inversion(1.0).unwrap(), e1);
        assert_eq!(
            e1.conformal_inversion(2.0).unwrap(),
            MinkVector::new(4.0, 0.0, 0.0, 0.0)
        );
        assert_eq!(
            MinkVector::new(1.0, 0.0, 0.0, 1.0).conformal_inversion(1.0),
            Err(Error::LightConeSingular)
        );
    }

    #[test]
    fn ray_and_proj_class_examples() {
        let r = ray_class(HexVector::new([0.0, 0.0, 0.0, 0.0, 2.0, 2.0])).unwrap();
        assert_eq!(r.representative().0, [0.0, 0.0, 0.0, 0.0, 1.0, 1.0]);

        let r = ray_class(HexVector::new([0.0, 0.0, 0.0, 0.0, 0.5, -0.5])).unwrap();
        let x = r.representative().0;
        assert!(close(x[4], 1.0) && close(x[5], -1.0));

        let a = proj_class(HexVector::new([0.0, 0.0, 0.0, 0.0, -1.0, -1.0])).unwrap();
        let b = proj_class(HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0])).unwrap();
        assert_eq!(a, b);
        // ≈ keeps them apart
        let ra = ray_class(HexVector::new([0.0, 0.0, 0.0, 0.0, -1.0, -1.0])).unwrap();
        assert_ne!(ra, b.to_ray());
    }

    #[test]
    fn class_errors() {
        assert_eq!(ray_class(HexVector::default()), Err(Error::ZeroVector));
        assert!(matches!(
            proj_class(HexVector::basis(0)),
            Err(Error::NotOnCone { .. })
        ));
    }

    #[test]
    fn cylinder_sums_are_one() {
        let v = HexVector::new([1.0, 2.0, 2.0, 3.0, 0.0, 0.0]);
        let r = ray_class(v * 5.0).unwrap().representative();
        assert!(close(r.space_sum(), 1.0));
        assert!(close(r.time_sum(), 1.0));
    }

    #[test]
    fn sign_fix_falls_through_to_x6() {
        // x4 = 0 forces the decision onto x6
        let p = proj_class(HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, -1.0])).unwrap();
        assert!(p.representative().0[5] > 0.0);
    }
}
