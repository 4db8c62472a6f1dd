//! Compactified Minkowski space as the projective quadric `Q(x) = 0`, and
//! the explicit bijection onto `U(2)`.
//!
//! A null vector `x` is sent to
//!
//! ```text
//! U(x) = 1/(x4 + i x6) [ -x3 + i x5   -x1 + i x2 ]
//!                      [ -x1 - i x2    x3 + i x5 ]
//! ```
//!
//! which is unitary and depends only on the class of `x` under nonzero
//! scaling. `det(U(x) - I) = -2i (x5 - x6) / (x4 + i x6)`, so conformal
//! infinity is the hyperplane section `x5 = x6`.
//!
//! The two charts agree up to time reversal:
//! `U(embed_plus(x, t)) = cayley(sigma(x, -t))`.

use nalgebra::Matrix2;

use crate::error::{Error, Result};
use crate::forms::{proj_class, HexVector, MinkVector, ProjClass, RayClass};
use crate::hermitian::{cayley_inverse, is_at_infinity, sigma_inverse, Unitary2};
use crate::{max_abs_diff, tolerance, CMat2, C64, I};

/// Nonzero null vector of `R^{4,2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConePoint(HexVector);

impl ConePoint {
    pub fn new(v: HexVector) -> Result<Self> {
        if v.0.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroVector);
        }
        if !v.is_on_cone() {
            return Err(Error::NotOnCone {
                residual: v.q_form().abs(),
            });
        }
        Ok(Self(v))
    }

    pub fn vector(&self) -> HexVector {
        self.0
    }

    /// `x4 + i x6`, never zero on the cone.
    pub fn denominator(&self) -> C64 {
        C64::new(self.0 .0[3], self.0 .0[5])
    }
}

impl From<RayClass> for ConePoint {
    fn from(r: RayClass) -> Self {
        Self(r.representative())
    }
}

impl From<ProjClass> for ConePoint {
    fn from(p: ProjClass) -> Self {
        Self(p.representative())
    }
}

pub fn unitary_of_cone_point(p: &ConePoint) -> Unitary2 {
    let [x1, x2, x3, _, x5, _] = p.0 .0;
    let den = p.denominator();
    assert!(den.norm() > 0.0, "x4 + i x6 vanishes only at the origin");
    let m = Matrix2::new(
        C64::new(-x3, x5),
        C64::new(-x1, x2),
        C64::new(-x1, -x2),
        C64::new(x3, x5),
    ) / den;
    Unitary2::from_raw(m)
}

/// Closed form of `det(U(x) - I)`.
pub fn det_minus_identity_formula(p: &ConePoint) -> C64 {
    let [_, _, _, _, x5, x6] = p.0 .0;
    -(I * 2.0 * (x5 - x6)) / p.denominator()
}

/// `x5 = x6` at a scale-free tolerance matched to
/// [`hermitian::is_at_infinity`](crate::hermitian::is_at_infinity):
/// `|det(U - I)| = 2 |x5 - x6| / |x4 + i x6|`.
pub fn infinity_test(p: &ConePoint) -> bool {
    let [_, _, _, _, x5, x6] = p.0 .0;
    2.0 * (x5 - x6).abs() <= tolerance::INFINITY * p.denominator().norm()
}

/// `phi_+(x, t) = (x, t, (1 - x^2 + t^2)/2, -(1 + x^2 - t^2)/2)`, the chart
/// with `x5 - x6 = 1`.
pub fn embed_plus(v: &MinkVector) -> ConePoint {
    let [x1, x2, x3, t] = v.0;
    let r2 = x1 * x1 + x2 * x2 + x3 * x3;
    ConePoint(HexVector::new([
        x1,
        x2,
        x3,
        t,
        (1.0 - r2 + t * t) / 2.0,
        -(1.0 + r2 - t * t) / 2.0,
    ]))
}

/// `phi_-`: [`embed_plus`] with `x5, x6` negated, so `x5 - x6 = -1`.
pub fn embed_minus(v: &MinkVector) -> ConePoint {
    let mut x = embed_plus(v).0;
    x.0[4] = -x.0[4];
    x.0[5] = -x.0[5];
    ConePoint(x)
}

/// Inverse of [`unitary_of_cone_point`], total on `U(2)`.
///
/// Finite points go through the inverse Cayley transform; `U = I` is the
/// vertex `[(0,0,0,0,1,1)]`; the remaining points at infinity are planes
/// `[(n, 1, h, h)]` read off the trace and entries of `U`.
pub fn cone_point_of_unitary(u: &Unitary2) -> ProjClass {
    if !is_at_infinity(u) {
        let h = cayley_inverse(u).expect("off infinity");
        let x = sigma_inverse(&h);
        let event = MinkVector::new(x.0[0], x.0[1], x.0[2], -x.0[3]);
        return proj_class(embed_plus(&event).0).expect("embedding lies on the cone");
    }
    let m = u.matrix();
    if max_abs_diff(m, &CMat2::identity()) <= tolerance::INFINITY {
        return infinity_vertex();
    }
    let (normal, height) = plane_of_infinite_unitary(m);
    proj_class(HexVector::new([
        normal[0], normal[1], normal[2], 1.0, height, height,
    ]))
    .expect("plane vector lies on the cone")
}

/// The class `[(0,0,0,0,1,1)]`, where all null geodesics at infinity meet.
pub fn infinity_vertex() -> ProjClass {
    proj_class(HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0])).expect("null vector")
}

/// `(n, h)` with `U = U((n, 1, h, h))`.
fn plane_of_infinite_unitary(m: &CMat2) -> ([f64; 3], f64) {
    let tau = m.trace();
    let h = -I * tau / (C64::new(2.0, 0.0) - tau);
    debug_assert!(
        h.im.abs() <= 1e-8 * h.norm().max(1.0),
        "plane height must be real"
    );
    let h = h.re;
    let f = C64::new(1.0, h);
    let n3 = ((m[(1, 1)] - m[(0, 0)]) * f / 2.0).re;
    let n1 = (-(m[(0, 1)] + m[(1, 0)]) * f / 2.0).re;
    let n2 = ((m[(0, 1)] - m[(1, 0)]) * f / (I * 2.0)).re;
    let norm = (n1 * n1 + n2 * n2 + n3 * n3).sqrt();
    debug_assert!((norm - 1.0).abs() <= 1e-8, "normal drift {norm}");
    ([n1 / norm, n2 / norm, n3 / norm], h)
}

/// `y_alpha = x^alpha x^4` for `alpha = 1..5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoords(pub [f64; 5]);

impl QuadraticCoords {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Quadratic coordinates of a cylinder-normalized representative. On the
/// infinity section `x5 = x6` they identify exactly `x` and `-x`.
pub fn quadratic_coords(r: &RayClass) -> QuadraticCoords {
    let x = r.representative().0;
    QuadraticCoords(std::array::from_fn(|a| x[a] * x[3]))
}
