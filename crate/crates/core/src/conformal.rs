//! `U(2,2)`, `SU(2,2)` and their fractional linear action on `U(2)`.

use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::lie_basis;
use crate::error::{Error, Result};
use crate::hermitian::Unitary2;
use crate::{max_abs, max_abs_diff, re, tolerance, CMat2, CMat4, C64};

/// `G = diag(1, 1, -1, -1)`.
pub fn twistor_metric() -> CMat4 {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(re(1.0), re(1.0), re(-1.0), re(-1.0)))
}

/// Element of `U(2,2)`: `𝒰 G 𝒰† = G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoUnitary22(CMat4);

/// The 2×2 blocks `A, B, C, D` of a 4×4 matrix.
pub fn blocks(m: &CMat4) -> [CMat2; 4] {
    let b = |r: usize, c: usize| -> CMat2 { m.fixed_view::<2, 2>(r, c).into_owned() };
    [b(0, 0), b(0, 2), b(2, 0), b(2, 2)]
}

/// Checks `A†A - C†C = I`, `D†D - B†B = I` and `A†B - C†D = 0`.
pub fn check_membership(m: CMat4) -> Result<PseudoUnitary22> {
    let [a, b, c, d] = blocks(&m);
    let id = CMat2::identity();
    let checks = [
        (
            "A†A - C†C = I",
            max_abs_diff(&(a.adjoint() * a - c.adjoint() * c), &id),
        ),
        (
            "D†D - B†B = I",
            max_abs_diff(&(d.adjoint() * d - b.adjoint() * b), &id),
        ),
        (
            "A†B - C†D = 0",
            max_abs(&(a.adjoint() * b - c.adjoint() * d)),
        ),
    ];
    let scale = max_abs(&m).powi(2).max(1.0);
    let (identity, deviation) = checks
        .into_iter()
        .fold(("", 0.0), |w, c| if c.1 > w.1 { c } else { w });
    if deviation > tolerance::PSEUDO_UNITARY * scale {
        return Err(Error::NotPseudoUnitary {
            identity,
            deviation,
        });
    }
    Ok(PseudoUnitary22(m))
}

impl PseudoUnitary22 {
    pub fn new(m: CMat4) -> Result<Self> {
        check_membership(m)
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.0
    }

    /// `|𝒰 G 𝒰† - G|_max`.
    pub fn metric_defect(&self) -> f64 {
        let g = twistor_metric();
        max_abs_diff(&(self.0 * g * self.0.adjoint()), &g)
    }

    /// Group product; closure holds up to rounding.
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    /// Multiplies by a global phase `e^{i theta}`.
    pub fn with_phase(&self, theta: f64) -> Self {
        Self(self.0 * C64::from_polar(1.0, theta))
    }
}

/// Element of `SU(2,2)`: `U(2,2)` with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialPseudoUnitary22(PseudoUnitary22);

impl SpecialPseudoUnitary22 {
    pub fn new(m: CMat4) -> Result<Self> {
        let u = check_membership(m)?;
        let deviation = (m.determinant() - re(1.0)).norm();
        if deviation > tolerance::PSEUDO_UNITARY * max_abs(&m).powi(4).max(1.0) {
            return Err(Error::NotSpecial { deviation });
        }
        Ok(Self(u))
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.0 .0
    }

    pub fn as_pseudo_unitary(&self) -> &PseudoUnitary22 {
        &self.0
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0.compose(&other.0))
    }
}

impl From<SpecialPseudoUnitary22> for PseudoUnitary22 {
    fn from(s: SpecialPseudoUnitary22) -> Self {
        s.0
    }
}

/// `U ↦ (AU + B)(CU + D)^{-1}`.
///
/// `CU + D` is invertible for every group member and unitary `U`; a
/// singular denominator means a non-member slipped through.
pub fn moebius_act(g: &PseudoUnitary22, u: &Unitary2) -> Result<Unitary2> {
    let [a, b, c, d] = blocks(&g.0);
    let um = u.matrix();
    let den = c * um + d;
    let det = den.determinant().norm();
    if det < tolerance::ACTION_SINGULAR {
        return Err(Error::SingularAction { det });
    }
    let inv = den.try_inverse().ok_or(Error::SingularAction { det })?;
    Ok(Unitary2::from_raw((a * um + b) * inv))
}

/// Seeded element of `SU(2,2)`: the exponential of a random real
/// combination of the 15 Lie-algebra basis matrices, coefficients uniform
/// in `[-0.5, 0.5]`, with the determinant phase divided out by its
/// principal fourth root.
pub fn random_su22(seed: u64) -> SpecialPseudoUnitary22 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: [f64; 15] = std::array::from_fn(|_| rng.gen_range(-0.5..=0.5));
    su22_from_coefficients(&coeffs)
}

/// `exp(Σ c_k L_k)` normalized to unit determinant.
pub fn su22_from_coefficients(coeffs: &[f64; 15]) -> SpecialPseudoUnitary22 {
    let generator = lie_basis()
        .iter()
        .zip(coeffs)
        .fold(CMat4::zeros(), |acc, (l, &c)| acc + l * re(c));
    let m = generator.exp();
    let phase = m.determinant().powf(0.25);
    let m = m / phase;
    SpecialPseudoUnitary22::new(m).expect("exponential of su(2,2) lies in SU(2,2)")
}

/// Block-diagonal embedding `diag(A, D)` for unitary `A, D`.
pub fn block_diagonal(a: &CMat2, d: &CMat2) -> CMat4 {
    let mut m = CMat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}

/// Assembles `[[A, B], [C, D]]`.
pub fn from_blocks(a: &CMat2, b: &CMat2, c: &CMat2, d: &CMat2) -> CMat4 {
    let mut m = CMat4::zeros();
    m.fixed_view_mut::<2, 2>(0, 0).copy_from(a);
    m.fixed_view_mut::<2, 2>(0, 2).copy_from(b);
    m.fixed_view_mut::<2, 2>(2, 0).copy_from(c);
    m.fixed_view_mut::<2, 2>(2, 2).copy_from(d);
    m
}
