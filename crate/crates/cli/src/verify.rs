//! The identity suite run by `confinf verify`.

use std::fmt;

use conformal_core::clifford::{
    algebra_defect, clifford_element, conjugate_identity_deviation, det_equals_q_squared,
    lie_basis, real_rank, transpose_identity_deviation, vector_rep, verify_clifford_relation,
};
use conformal_core::conformal::{moebius_act, SpecialPseudoUnitary22};
use conformal_core::forms::proj_class;
use conformal_core::hermitian::is_at_infinity;
use conformal_core::quadric::{
    cone_point_of_unitary, det_minus_identity_formula, infinity_test, unitary_of_cone_point,
    ConePoint,
};
use conformal_core::sample::Sampler;
use conformal_core::twistor::{plane_of_unitary, unitary_of_plane};
use conformal_core::{max_abs_diff, CMat4, C64};
use nalgebra::Matrix6;

/// One identity with its largest observed deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(name: &str, deviation: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            deviation,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<48} max deviation {:.3e} (tolerance {:.0e})",
            if self.passed() { "ok" } else { "FAIL" },
            self.name,
            self.deviation,
            self.tolerance
        )
    }
}

fn scalar_matrix(z: C64) -> SpecialPseudoUnitary22 {
    SpecialPseudoUnitary22::new(CMat4::identity() * z).expect("fourth roots of unity lie in SU(2,2)")
}

fn max6(a: &Matrix6<f64>, b: &Matrix6<f64>) -> f64 {
    (a - b).abs().max()
}

/// Runs every check with `samples` random inputs (a tenth of that for the
/// group checks), deterministically from `seed`.
pub fn run_checks(samples: usize, seed: u64) -> Vec<Check> {
    let mut s = Sampler::new(seed);
    let mut out = Vec::new();

    let (mut d1, mut d2, mut d3, mut d4) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..samples {
        let x = s.hex_vector(2.0);
        let y = s.hex_vector(2.0);
        let xe = clifford_element(&x);
        d1 = d1.max(transpose_identity_deviation(&xe));
        d2 = d2.max(conjugate_identity_deviation(&xe, 1.0));
        d3 = d3.max(verify_clifford_relation(&x, &y));
        let (det, q2) = det_equals_q_squared(&x);
        d4 = d4.max((det - q2).abs() / q2.max(1.0));
    }
    out.push(Check::new("transpose: G X G = -X^T", d1, 1e-12));
    out.push(Check::new("conjugate: Xbar from eps^1234 = +1", d2, 1e-10));
    out.push(Check::new("Clifford: X Ybar + Y Xbar = 2<x,y> I", d3, 1e-10));
    out.push(Check::new("det X = Q(x)^2 (relative)", d4, 1e-9));

    let pairs = (samples / 10).max(1);
    let g6 = conformal_core::clifford::hex_metric();
    let (mut hom, mut metric, mut component, mut equi) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..pairs {
        let r1 = s.su22();
        let r2 = s.su22();
        let l1 = vector_rep(&r1).expect("SU(2,2) element");
        let l2 = vector_rep(&r2).expect("SU(2,2) element");
        let l12 = vector_rep(&r1.compose(&r2)).expect("SU(2,2) element");
        hom = hom.max(max6(l12.matrix(), &(l1.matrix() * l2.matrix())));
        metric = metric.max(max6(&(l1.matrix().transpose() * g6 * l1.matrix()), &g6));
        let det = (l1.determinant() - 1.0).abs();
        component = component.max(if l1.in_identity_component() { det } else { f64::INFINITY });

        let x = s.cone_point();
        let moved = ConePoint::new(l1.apply(&x.vector())).expect("SO(4,2) preserves the cone");
        let lhs = unitary_of_cone_point(&moved);
        let rhs = moebius_act(r1.as_pseudo_unitary(), &unitary_of_cone_point(&x))
            .expect("group elements act everywhere");
        equi = equi.max(max_abs_diff(lhs.matrix(), rhs.matrix()));
    }
    out.push(Check::new("vector rep: L(R1 R2) = L(R1) L(R2)", hom, 1e-8));
    out.push(Check::new("vector rep: L^T G6 L = G6", metric, 1e-9));
    out.push(Check::new("vector rep: det L = 1, identity component", component, 1e-9));

    let id6 = Matrix6::identity();
    let kernel = [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)]
        .map(|z| max6(vector_rep(&scalar_matrix(z)).expect("member").matrix(), &id6))
        .into_iter()
        .fold(0.0, f64::max);
    let centre = [C64::new(0.0, 1.0), C64::new(0.0, -1.0)]
        .map(|z| max6(vector_rep(&scalar_matrix(z)).expect("member").matrix(), &(-id6)))
        .into_iter()
        .fold(0.0, f64::max);
    out.push(Check::new("vector rep kernel: +-1 -> I6", kernel, 1e-12));
    out.push(Check::new("vector rep centre: +-i -> -I6", centre, 1e-12));

    let basis = lie_basis();
    let su = basis
        .iter()
        .map(|l| algebra_defect(l).max(l.trace().norm()))
        .fold(0.0, f64::max);
    out.push(Check::new("Lie algebra: L_ab in su(2,2)", su, 1e-12));
    out.push(Check::new(
        "Lie algebra: L_ab span 15 real dimensions",
        (real_rank(&basis) as f64 - 15.0).abs(),
        0.0,
    ));

    let (mut unitary, mut formula, mut scale, mut disagree, mut cone_rt, mut plane_rt) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..samples {
        let x = s.cone_point();
        let u = unitary_of_cone_point(&x);
        unitary = unitary.max(u.unitarity_defect());
        formula = formula.max((u.det_minus_identity() - det_minus_identity_formula(&x)).norm());
        for lambda in [-3.0, -1.0, 0.5, 7.0] {
            let y = ConePoint::new(x.vector() * lambda).expect("scaled null vector");
            scale = scale.max(max_abs_diff(unitary_of_cone_point(&y).matrix(), u.matrix()));
        }
        if infinity_test(&x) != is_at_infinity(&u) {
            disagree += 1.0;
        }
        let class = proj_class(x.vector()).expect("null vector");
        let back = cone_point_of_unitary(&u);
        cone_rt = cone_rt.max(back.representative().max_abs_diff(&class.representative()));

        let branch = s.branch();
        let v = s.unitary(branch);
        let w = unitary_of_plane(&plane_of_unitary(&v));
        plane_rt = plane_rt.max(max_abs_diff(w.matrix(), v.matrix()));
    }
    out.push(Check::new("cone -> U(2): U(x) unitary", unitary, 1e-10));
    out.push(Check::new("cone -> U(2): det(U(x) - I) closed form", formula, 1e-10));
    out.push(Check::new("cone -> U(2): U(lambda x) = U(x)", scale, 1e-10));
    out.push(Check::new("cone -> U(2): x5 = x6 iff det(U - I) = 0 (count)", disagree, 0.0));
    out.push(Check::new("roundtrip: cone -> U(2) -> cone", cone_rt, 1e-8));
    out.push(Check::new("twistor roundtrip: U(2) -> plane -> U(2)", plane_rt, 1e-12));
    out.push(Check::new("equivariance: U(L(R) x) = R . U(x)", equi, 1e-8));
    out
}
