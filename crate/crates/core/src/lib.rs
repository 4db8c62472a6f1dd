//! Compactified Minkowski space in three equivalent models.
//!
//! * the unitary group `U(2)` ([`hermitian::Unitary2`]), reached from
//!   Minkowski space through the Cayley transform of Hermitian matrices;
//! * the projective quadric `Q(x) = 0` in `R^{4,2}` ([`forms::ProjClass`]),
//!   together with its double cover under positive scaling
//!   ([`forms::RayClass`]);
//! * totally isotropic planes of the twistor space `C^{2,2}`
//!   ([`twistor::IsotropicPlane`]).
//!
//! The conversions between them are in [`quadric`] and [`twistor`]. The
//! conformal group acts by fractional linear maps on `U(2)`
//! ([`conformal`]) and linearly on `R^{4,2}` through the explicit
//! `Cl(4,2)` representation in [`clifford`]. [`lie_sphere`] reads quadric
//! rays as points, oriented spheres and planes of `R^3`. [`surface`]
//! generates the surfaces and curves that picture conformal infinity, and
//! [`export`] writes them as OBJ, CSV or PLY.

pub mod clifford;
pub mod conformal;
pub mod error;
pub mod export;
pub mod forms;
pub mod hermitian;
pub mod lie_sphere;
pub mod mesh;
pub mod quadric;
pub mod sample;
pub mod surface;
pub mod tolerance;
pub mod twistor;

pub use error::{Error, Result};

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

/// Complex scalar used throughout.
pub type C64 = Complex64;
/// 2×2 complex matrix.
pub type CMat2 = Matrix2<C64>;
/// 4×4 complex matrix.
pub type CMat4 = Matrix4<C64>;

pub(crate) const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub(crate) fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff<const R: usize, const C: usize>(
    a: &nalgebra::SMatrix<C64, R, C>,
    b: &nalgebra::SMatrix<C64, R, C>,
) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entry modulus.
pub fn max_abs<const R: usize, const C: usize>(a: &nalgebra::SMatrix<C64, R, C>) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}
