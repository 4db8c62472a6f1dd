//! The Clifford algebra `Cl(4,2)` acting antilinearly on twistor space.
//!
//! Six complex 4×4 matrices `Γ_1..Γ_6` represent an orthonormal basis of
//! `R^{4,2}`. For `x` in `R^{4,2}` set `X = Σ x^α Γ_α`; the antilinear
//! operator `X̂ v = X v̄` is a Clifford map:
//! `X Ȳ + Y X̄ = 2 <x, y> I`.
//!
//! `SU(2,2)` acts on the span of the `Γ`'s by the antilinear conjugation
//! `X ↦ R X R̄^{-1}` (conjugating `X̂` by `R`), which gives the covering
//! homomorphism onto `SO_+(4,2)`.

use std::sync::OnceLock;

use nalgebra::{Matrix6, Vector4};

use crate::conformal::{twistor_metric, SpecialPseudoUnitary22};
use crate::error::{Error, Result};
use crate::forms::{HexVector, HEX_METRIC};
use crate::{max_abs, max_abs_diff, re, tolerance, CMat4, C64};

const O: C64 = C64::new(0.0, 0.0);
const P: C64 = C64::new(1.0, 0.0);
const N: C64 = C64::new(-1.0, 0.0);
const J: C64 = C64::new(0.0, 1.0);
const K: C64 = C64::new(0.0, -1.0);

#[rustfmt::skip]
const GAMMA_ENTRIES: [[C64; 16]; 6] = [
    [O, O, J, O,
     O, O, O, K,
     J, O, O, O,
     O, K, O, O],
    [O, O, P, O,
     O, O, O, P,
     P, O, O, O,
     O, P, O, O],
    [O, O, O, K,
     O, O, K, O,
     O, K, O, O,
     K, O, O, O],
    [O, J, O, O,
     K, O, O, O,
     O, O, O, J,
     O, O, K, O],
    [O, O, O, N,
     O, O, P, O,
     O, P, O, O,
     N, O, O, O],
    [O, P, O, O,
     N, O, O, O,
     O, O, O, N,
     O, O, P, O],
];

/// The six matrices `Γ_1..Γ_6` (index 0 holds `Γ_1`).
pub fn gammas() -> &'static [CMat4; 6] {
    static GAMMAS: OnceLock<[CMat4; 6]> = OnceLock::new();
    GAMMAS.get_or_init(|| GAMMA_ENTRIES.map(|e| CMat4::from_row_slice(&e)))
}

/// `X = Σ x^α Γ_α` together with the vector it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliffordElement {
    matrix: CMat4,
    source: HexVector,
}

impl CliffordElement {
    pub fn matrix(&self) -> &CMat4 {
        &self.matrix
    }

    pub fn source(&self) -> HexVector {
        self.source
    }

    /// Entrywise complex conjugate `X̄`.
    pub fn conjugate(&self) -> CMat4 {
        self.matrix.map(|z| z.conj())
    }
}

pub fn clifford_element(v: &HexVector) -> CliffordElement {
    let matrix = gammas()
        .iter()
        .zip(v.0)
        .fold(CMat4::zeros(), |acc, (g, x)| acc + g * re(x));
    CliffordElement { matrix, source: *v }
}

/// `(X̂ v)^i = X^i_j conj(v^j)`.
pub fn apply_antilinear(x: &CliffordElement, v: &Vector4<C64>) -> Vector4<C64> {
    x.matrix * v.map(|z| z.conj())
}

/// `|G X G + X^T|_max`; zero for every Clifford element.
pub fn transpose_identity_deviation(x: &CliffordElement) -> f64 {
    let g = twistor_metric();
    max_abs(&(g * x.matrix * g + x.matrix.transpose()))
}

/// Deviation of `conj(X^i_j) = sign · ½ ε^{imnk} G_{mj} G_{nl} X^l_k`,
/// with `ε^{1234} = +1`. The identity holds for `sign = +1`.
pub fn conjugate_identity_deviation(x: &CliffordElement, sign: f64) -> f64 {
    let g = [1.0, 1.0, -1.0, -1.0];
    let m = &x.matrix;
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = C64::default();
            // G is diagonal: m = j and n = l
            for n in 0..4 {
                for k in 0..4 {
                    let e = levi_civita([i, j, n, k]);
                    if e != 0.0 {
                        acc += m[(n, k)] * (e * g[j] * g[n]);
                    }
                }
            }
            let rhs = acc * (0.5 * sign);
            worst = worst.max((m[(i, j)].conj() - rhs).norm());
        }
    }
    worst
}

fn levi_civita(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `|X Ȳ + Y X̄ - 2<x,y> I|_max`.
pub fn verify_clifford_relation(x: &HexVector, y: &HexVector) -> f64 {
    let xm = clifford_element(x);
    let ym = clifford_element(y);
    let lhs = xm.matrix * ym.conjugate() + ym.matrix * xm.conjugate();
    max_abs_diff(&lhs, &(CMat4::identity() * re(2.0 * x.inner(y))))
}

/// `(Re det X, Q(x)^2)`. The imaginary part of `det X` vanishes.
pub fn det_equals_q_squared(x: &HexVector) -> (f64, f64) {
    let d = clifford_element(x).matrix.determinant();
    (d.re, x.q_form().powi(2))
}

/// Element of `SO(4,2)` as a real 6×6 matrix acting on coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct So42Matrix(Matrix6<f64>);

/// `diag(1, 1, 1, -1, 1, -1)`.
pub fn hex_metric() -> Matrix6<f64> {
    Matrix6::from_diagonal(&HEX_METRIC.into())
}

impl So42Matrix {
    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.0
    }

    pub fn apply(&self, v: &HexVector) -> HexVector {
        let out = self.0 * nalgebra::Vector6::from(v.0);
        HexVector(out.into())
    }

    /// `|L^T G6 L - G6|_max`.
    pub fn metric_defect(&self) -> f64 {
        let g = hex_metric();
        (self.0.transpose() * g * self.0 - g).abs().max()
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    /// The minor over the two timelike axes `x4, x6`.
    pub fn timelike_minor(&self) -> f64 {
        let m = &self.0;
        m[(3, 3)] * m[(5, 5)] - m[(3, 5)] * m[(5, 3)]
    }

    /// Orientation test for the identity component: `det L = +1` and the
    /// timelike minor is positive.
    pub fn in_identity_component(&self) -> bool {
        (self.determinant() - 1.0).abs() < 1e-6 && self.timelike_minor() > 0.0
    }
}

/// `L(R)` with `R Γ_α R̄^{-1} = Γ_β L(R)^β_α`, read off by Frobenius pairing
/// `L^β_α = tr(Γ_β† R Γ_α R̄^{-1}) / 4`.
///
/// `±I` map to the identity; `±iI` map to `-I_6`.
pub fn vector_rep(r: &SpecialPseudoUnitary22) -> Result<So42Matrix> {
    let rm = r.matrix();
    let g = twistor_metric();
    // R̄^{-1} = G R^T G for R in U(2,2)
    let rbar_inv = g * rm.transpose() * g;
    let gs = gammas();
    let mut l = Matrix6::zeros();
    let mut residue: f64 = 0.0;
    for (a, ga) in gs.iter().enumerate() {
        let image = rm * ga * rbar_inv;
        let mut rebuilt = CMat4::zeros();
        for (b, gb) in gs.iter().enumerate() {
            let c = (gb.adjoint() * image).trace() / 4.0;
            residue = residue.max(c.im.abs());
            l[(b, a)] = c.re;
            rebuilt += gb * re(c.re);
        }
        residue = residue.max(max_abs_diff(&rebuilt, &image));
    }
    if residue > tolerance::VECTOR_REP_RESIDUE * max_abs(rm).powi(2).max(1.0) {
        return Err(Error::NotInGroup { residue });
    }
    Ok(So42Matrix(l))
}

/// `L_{αβ} = Γ_α Γ̄_β - Γ_β Γ̄_α` for `α < β`, in lexicographic order
/// `(1,2), (1,3), ..., (5,6)`. A real basis of `su(2,2)`.
pub fn lie_basis() -> Vec<CMat4> {
    let gs = gammas();
    let mut out = Vec::with_capacity(15);
    for a in 0..6 {
        for b in (a + 1)..6 {
            let conj = |m: &CMat4| m.map(|z| z.conj());
            out.push(gs[a] * conj(&gs[b]) - gs[b] * conj(&gs[a]));
        }
    }
    out
}

/// `|L G + G L†|_max`, zero for elements of `u(2,2)`.
pub fn algebra_defect(l: &CMat4) -> f64 {
    let g = twistor_metric();
    max_abs(&(l * g + g * l.adjoint()))
}

/// Rank over the reals of a list of complex 4×4 matrices.
pub fn real_rank(ms: &[CMat4]) -> usize {
    let rows = ms.len();
    let mut a = nalgebra::DMatrix::<f64>::zeros(rows, 32);
    for (r, m) in ms.iter().enumerate() {
        for (k, z) in m.iter().enumerate() {
            a[(r, k)] = z.re;
            a[(r, 16 + k)] = z.im;
        }
    }
    a.svd(false, false).rank(1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::{random_su22, SpecialPseudoUnitary22};

    fn e(k: usize) -> HexVector {
        HexVector::basis(k)
    }

    #[test]
    fn gammas_unitary_and_frobenius_orthogonal() {
        let gs = gammas();
        for (a, ga) in gs.iter().enumerate() {
            assert_eq!(ga * ga.adjoint(), CMat4::identity());
            for (b, gb) in gs.iter().enumerate() {
                let t = (ga.adjoint() * gb).trace();
                let expected = if a == b { 4.0 } else { 0.0 };
                assert_eq!(t, re(expected));
            }
        }
    }

    #[test]
    fn clifford_element_examples() {
        assert_eq!(*clifford_element(&e(1)).matrix(), gammas()[1]);
        assert_eq!(*clifford_element(&HexVector::default()).matrix(), CMat4::zeros());
        let x = clifford_element(&(e(0) + e(1)));
        assert_eq!(*x.matrix(), gammas()[0] + gammas()[1]);
        assert_eq!(transpose_identity_deviation(&x), 0.0);
    }

    #[test]
    fn antilinear_examples() {
        let e1 = Vector4::new(re(1.0), O, O, O);
        let e3 = Vector4::new(O, O, re(1.0), O);
        assert_eq!(apply_antilinear(&clifford_element(&e(1)), &e1), e3);
        let ie1 = Vector4::new(J, O, O, O);
        assert_eq!(apply_antilinear(&clifford_element(&e(0)), &ie1), e3);
        let zero = clifford_element(&HexVector::default());
        assert_eq!(apply_antilinear(&zero, &ie1), Vector4::zeros());
    }

    #[test]
    fn antilinear_square_is_quadratic_form() {
        let x = HexVector::new([0.3, -1.1, 0.4, 2.0, 0.5, -0.7]);
        let xe = clifford_element(&x);
        let v = Vector4::new(C64::new(0.2, 1.0), re(-0.5), C64::new(0.0, 0.3), re(1.5));
        let twice = apply_antilinear(&xe, &apply_antilinear(&xe, &v));
        let expected = v * re(x.q_form());
        assert!((twice - expected).iter().all(|z| z.norm() < 1e-13));
    }

    #[test]
    fn clifford_relation_examples() {
        assert_eq!(verify_clifford_relation(&e(0), &e(0)), 0.0);
        assert_eq!(verify_clifford_relation(&e(3), &e(4)), 0.0);
        assert_eq!(verify_clifford_relation(&e(5), &e(5)), 0.0);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_equals_q_squared(&e(5)), (1.0, 1.0));
        let (d, q2) = det_equals_q_squared(&HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]));
        assert_eq!((d, q2), (0.0, 0.0));
        assert_eq!(det_equals_q_squared(&e(0)), (1.0, 1.0));
    }

    #[test]
    fn conjugate_identity_sign() {
        let x = clifford_element(&HexVector::new([0.7, -0.2, 1.3, 0.1, -0.9, 0.4]));
        assert_eq!(conjugate_identity_deviation(&x, 1.0), 0.0);
        assert!(conjugate_identity_deviation(&x, -1.0) > 0.1);
    }

    #[test]
    fn lie_basis_properties() {
        let basis = lie_basis();
        assert_eq!(basis.len(), 15);
        for l in &basis {
            assert!(algebra_defect(l) < 1e-12);
            assert!(l.trace().norm() < 1e-12);
        }
        assert_eq!(real_rank(&basis), 15);
    }

    #[test]
    fn vector_rep_identity_and_centre() {
        let id = SpecialPseudoUnitary22::new(CMat4::identity()).unwrap();
        assert_eq!(*vector_rep(&id).unwrap().matrix(), Matrix6::identity());

        let minus = SpecialPseudoUnitary22::new(-CMat4::identity()).unwrap();
        assert_eq!(*vector_rep(&minus).unwrap().matrix(), Matrix6::identity());

        // iI acts as -1 on the gammas under antilinear conjugation
        let i = SpecialPseudoUnitary22::new(CMat4::identity() * J).unwrap();
        let l = vector_rep(&i).unwrap();
        assert_eq!(*l.matrix(), -Matrix6::identity());
        assert!(l.in_identity_component());
    }

    #[test]
    fn vector_rep_random_preserves_metric() {
        for seed in 0..20 {
            let r = random_su22(seed);
            let l = vector_rep(&r).unwrap();
            assert!(l.metric_defect() < 1e-9);
            assert!(l.in_identity_component());
        }
    }
}
