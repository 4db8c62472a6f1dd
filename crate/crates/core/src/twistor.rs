//! Twistor space `C^{2,2}` with the form `<v|w> = v† G w`,
//! `G = diag(1, 1, -1, -1)`.
//!
//! Totally isotropic planes are points of compactified Minkowski space and
//! isotropic lines are null geodesics. Every totally isotropic plane is
//! `{(U v, v)}` for a unique unitary `U`.

use nalgebra::{Matrix2, Matrix4, Matrix4x2, Vector2, Vector4};

use crate::error::{Error, Result};
use crate::hermitian::{unitarity_defect, Unitary2};
use crate::{re, tolerance, CMat2, C64};

/// `<v|w> = v† G w`.
pub fn twistor_inner(v: &Vector4<C64>, w: &Vector4<C64>) -> C64 {
    v[0].conj() * w[0] + v[1].conj() * w[1] - v[2].conj() * w[2] - v[3].conj() * w[3]
}

/// One-dimensional isotropic subspace, scaled so that its first
/// largest-modulus component equals 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicLine(Vector4<C64>);

impl IsotropicLine {
    pub fn new(v: Vector4<C64>) -> Result<Self> {
        let norm2 = v.norm_squared();
        if norm2 == 0.0 {
            return Err(Error::DegenerateBasis);
        }
        let deviation = twistor_inner(&v, &v).norm();
        if deviation > tolerance::ISOTROPIC * norm2 {
            return Err(Error::NotIsotropic { deviation });
        }
        let pivot = (0..4).fold(0, |best, k| if v[k].norm() > v[best].norm() { k } else { best });
        Ok(Self(v / v[pivot]))
    }

    pub fn vector(&self) -> &Vector4<C64> {
        &self.0
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.0 - other.0).iter().all(|z| z.norm() <= tol)
    }
}

/// Two-dimensional totally isotropic subspace, stored in the canonical
/// basis `[U; I]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicPlane(Matrix4x2<C64>);

impl IsotropicPlane {
    /// Plane spanned by the columns of `basis`. The lower block of a
    /// totally isotropic basis is always invertible: `Q c = 0` would make
    /// `(P c; 0)` isotropic, forcing `P c = 0`.
    pub fn from_basis(basis: Matrix4x2<C64>) -> Result<Self> {
        let gram = basis.adjoint() * basis;
        let scale = gram[(0, 0)].re.max(gram[(1, 1)].re);
        if scale == 0.0 || gram.determinant().norm() <= 1e-20 * scale * scale {
            return Err(Error::DegenerateBasis);
        }
        let g = Matrix4::from_diagonal(&Vector4::new(re(1.0), re(1.0), re(-1.0), re(-1.0)));
        let form = basis.adjoint() * g * basis;
        let deviation = form.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if deviation > tolerance::ISOTROPIC * scale {
            return Err(Error::NotIsotropic { deviation });
        }
        let upper: CMat2 = basis.fixed_view::<2, 2>(0, 0).into_owned();
        let lower: CMat2 = basis.fixed_view::<2, 2>(2, 0).into_owned();
        let inv = lower.try_inverse().ok_or(Error::DegenerateBasis)?;
        Ok(Self(stack(&(upper * inv))))
    }

    pub fn basis(&self) -> &Matrix4x2<C64> {
        &self.0
    }

    pub fn unitary(&self) -> CMat2 {
        self.0.fixed_view::<2, 2>(0, 0).into_owned()
    }
}

fn stack(u: &CMat2) -> Matrix4x2<C64> {
    let mut b = Matrix4x2::zeros();
    b.fixed_view_mut::<2, 2>(0, 0).copy_from(u);
    b.fixed_view_mut::<2, 2>(2, 0).copy_from(&CMat2::identity());
    b
}

/// The plane `{(U v, v)}`.
pub fn plane_of_unitary(u: &Unitary2) -> IsotropicPlane {
    IsotropicPlane(stack(u.matrix()))
}

/// `U = P Q^{-1}` for a plane with basis `[P; Q]`.
pub fn unitary_of_plane(p: &IsotropicPlane) -> Unitary2 {
    let u = p.unitary();
    debug_assert!(unitarity_defect(&u) < 1e-8);
    Unitary2::from_raw(u)
}

/// Least-squares residual of `v` against the span of the plane, relative to `|v|`.
pub fn line_residual(l: &IsotropicLine, p: &IsotropicPlane) -> f64 {
    let b = &p.0;
    let gram_inv = (b.adjoint() * b)
        .try_inverse()
        .expect("canonical basis has full rank");
    let v = &l.0;
    let proj = b * (gram_inv * (b.adjoint() * v));
    (v - proj).norm() / v.norm()
}

pub fn line_on_plane(l: &IsotropicLine, p: &IsotropicPlane) -> bool {
    line_residual(l, p) <= tolerance::INCIDENCE
}

/// Orthogonal isotropic vectors are intersecting null geodesics.
pub fn geodesics_intersect(l1: &IsotropicLine, l2: &IsotropicLine) -> bool {
    let (a, b) = (&l1.0, &l2.0);
    twistor_inner(a, b).norm() <= tolerance::INCIDENCE * a.norm() * b.norm()
}

/// Totally isotropic planes through `l`, one for each `theta` mod `2 pi`:
/// the points of the null geodesic `l`.
///
/// With `v = (a; b)`, `|a| = |b|`, the planes through `v` are `[U; I]` for
/// the unitaries with `U b = a`. They form a circle:
/// `U = W_a diag(1, e^{i theta}) W_b†` where `W_x = [x̂, x̂⊥]`.
pub fn planes_through_line(l: &IsotropicLine, theta: f64) -> IsotropicPlane {
    let v = &l.0;
    let a = Vector2::new(v[0], v[1]);
    let b = Vector2::new(v[2], v[3]);
    let frame = |x: &Vector2<C64>| -> CMat2 {
        let x = x / re(x.norm());
        Matrix2::new(x[0], -x[1].conj(), x[1], x[0].conj())
    };
    let wa = frame(&a);
    let wb = frame(&b);
    let phase = Matrix2::new(re(1.0), re(0.0), re(0.0), C64::from_polar(1.0, theta));
    IsotropicPlane(stack(&(wa * phase * wb.adjoint())))
}

/// Rank of the stacked 4×4 matrix `[B1 | B2]`: 2 for equal planes, 3 when
/// they meet in a line, 4 when they are disjoint.
pub fn stacked_rank(p1: &IsotropicPlane, p2: &IsotropicPlane) -> usize {
    let mut m = Matrix4::<C64>::zeros();
    m.fixed_view_mut::<4, 2>(0, 0).copy_from(&p1.0);
    m.fixed_view_mut::<4, 2>(0, 2).copy_from(&p2.0);
    m.svd(false, false).rank(1e-9)
}

/// Points joined by a null geodesic have planes sharing an isotropic line.
pub fn planes_intersect(p1: &IsotropicPlane, p2: &IsotropicPlane) -> bool {
    stacked_rank(p1, p2) < 4
}

/// The common isotropic line of two distinct planes that meet.
pub fn intersection_line(p1: &IsotropicPlane, p2: &IsotropicPlane) -> Option<IsotropicLine> {
    // [U1 - U2] c = 0 picks the shared lower vector c
    let diff = p1.unitary() - p2.unitary();
    let svd = diff.svd(false, true);
    let v_t = svd.v_t?;
    let (k, smallest) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |b, (k, &s)| if s < b.1 { (k, s) } else { b });
    let largest = svd.singular_values.max();
    if smallest > 1e-9 * largest.max(1.0) || largest <= 1e-12 {
        return None;
    }
    let c = Vector2::new(v_t[(k, 0)].conj(), v_t[(k, 1)].conj());
    let top = p1.unitary() * c;
    IsotropicLine::new(Vector4::new(top[0], top[1], c[0], c[1])).ok()
}
