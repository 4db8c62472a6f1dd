//! Hermitian 2×2 matrices as Minkowski space, and the Cayley transform
//! onto `U(2)`.
//!
//! `sigma(x) = x^mu sigma_mu` with the standard Pauli matrices and
//! `sigma_4 = I`. Note that `det sigma(x) = (x^4)^2 - |x|^2 = -q(x)`.

use nalgebra::{Matrix2, Matrix4};

use crate::error::{Error, Result};
use crate::forms::MinkVector;
use crate::{max_abs, max_abs_diff, re, tolerance, CMat2, C64, I};

/// Hermitian 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Herm2(CMat2);

impl Herm2 {
    /// Symmetrizes `(m + m†) / 2`, rejecting inputs whose anti-Hermitian
    /// part exceeds the tolerance.
    pub fn new(m: CMat2) -> Result<Self> {
        let adj = m.adjoint();
        let deviation = max_abs(&((m - adj) * re(0.5)));
        if deviation > tolerance::HERMITIAN * max_abs(&m).max(1.0) {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self((m + adj) * re(0.5)))
    }

    pub fn matrix(&self) -> &CMat2 {
        &self.0
    }
}

/// 2×2 unitary matrix; a point of compactified Minkowski space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2(CMat2);

impl Unitary2 {
    pub fn new(m: CMat2) -> Result<Self> {
        let deviation = unitarity_defect(&m);
        if deviation > tolerance::UNITARY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self(m))
    }

    /// Wraps a matrix known to be unitary up to rounding.
    pub(crate) fn from_raw(m: CMat2) -> Self {
        Self(m)
    }

    pub fn identity() -> Self {
        Self(CMat2::identity())
    }

    pub fn matrix(&self) -> &CMat2 {
        &self.0
    }

    /// `|U U† - I|_max`.
    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(&self.0)
    }

    /// `det(U - I)`.
    pub fn det_minus_identity(&self) -> C64 {
        (self.0 - CMat2::identity()).determinant()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        max_abs_diff(&self.0, &other.0) <= tol
    }
}

pub(crate) fn unitarity_defect(m: &CMat2) -> f64 {
    max_abs_diff(&(m * m.adjoint()), &CMat2::identity())
}

/// Element of `SL(2, C)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2c(CMat2);

impl Sl2c {
    pub fn new(m: CMat2) -> Result<Self> {
        let deviation = (m.determinant() - re(1.0)).norm();
        if deviation > tolerance::UNIMODULAR {
            return Err(Error::NotUnimodular { deviation });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &CMat2 {
        &self.0
    }
}

/// `sigma(x) = [[x4 + x3, x1 - i x2], [x1 + i x2, x4 - x3]]`.
pub fn sigma_of(v: &MinkVector) -> Herm2 {
    let [x1, x2, x3, x4] = v.0;
    Herm2(Matrix2::new(
        re(x4 + x3),
        C64::new(x1, -x2),
        C64::new(x1, x2),
        re(x4 - x3),
    ))
}

/// Inverse of [`sigma_of`]; reads the event off the Hermitian entries.
pub fn sigma_inverse(h: &Herm2) -> MinkVector {
    let m = &h.0;
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(1, 0)];
    MinkVector::new(b.re, b.im, (a - d) / 2.0, (a + d) / 2.0)
}

/// Cayley transform `(h - iI)(h + iI)^{-1}`. `h + iI` is invertible for
/// every Hermitian `h`, since its eigenvalues are `lambda + i`.
pub fn cayley(h: &Herm2) -> Unitary2 {
    let id = CMat2::identity();
    let num = h.0 - id * I;
    let den = h.0 + id * I;
    let inv = den
        .try_inverse()
        .expect("h + iI is invertible for Hermitian h");
    Unitary2(num * inv)
}

/// Inverse Cayley transform `i (I + u)(I - u)^{-1}`, defined off infinity.
pub fn cayley_inverse(u: &Unitary2) -> Result<Herm2> {
    let det = u.det_minus_identity().norm();
    if det <= tolerance::INFINITY {
        return Err(Error::AtInfinity { det });
    }
    let id = CMat2::identity();
    let inv = (id - u.0)
        .try_inverse()
        .ok_or(Error::AtInfinity { det })?;
    let h = (id + u.0) * inv * I;
    // Hermitian up to rounding; symmetrize without a rejection threshold
    Ok(Herm2((h + h.adjoint()) * re(0.5)))
}

/// `det(u - I) = 0` within the shared infinity tolerance.
pub fn is_at_infinity(u: &Unitary2) -> bool {
    u.det_minus_identity().norm() <= tolerance::INFINITY
}

/// Lorentz transformation `Lambda(A)` with `A sigma(x) A† = sigma(Lambda x)`.
///
/// Column `nu` is read off `A sigma(e_nu) A†`. `Lambda(-A) = Lambda(A)`.
pub fn lorentz_of(a: &Sl2c) -> Matrix4<f64> {
    let m = a.0;
    let madj = m.adjoint();
    let mut out = Matrix4::zeros();
    for nu in 0..4 {
        let mut e = [0.0; 4];
        e[nu] = 1.0;
        let s = sigma_of(&MinkVector(e));
        let image = Herm2(m * s.0 * madj);
        let x = sigma_inverse(&image);
        for mu in 0..4 {
            out[(mu, nu)] = x.0[mu];
        }
    }
    out
}

/// Minkowski metric `diag(1, 1, 1, -1)`.
pub fn eta() -> Matrix4<f64> {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0))
}
