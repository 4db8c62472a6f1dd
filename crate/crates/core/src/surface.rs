//! Parametric pictures of conformal infinity and of the `1+1`-dimensional
//! compactified Minkowski space.
//!
//! Every closed form here is also available as the composition it comes
//! from: an angle parametrization of the cylinder section
//! `x1² + x2² + x3² + x5² = x4² + x6² = 1`, `x5 = x6`, optionally followed
//! by the quadratic coordinates `y_a = x^a x^4`, and then a projection from
//! four dimensions to three. The projections are fixed:
//!
//! * light source `(2, 0, 0, 0)` onto the screen `x1 = 0`;
//! * stereographic projection from `(0, 0, 1, 0)`.

use crate::error::{Error, Result};
use crate::forms::{ray_class, HexVector};
use crate::quadric::quadratic_coords;
use crate::{tolerance, C64};

pub type Point3 = [f64; 3];

/// Polyline in `R^3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve3 {
    pub points: Vec<Point3>,
    /// The last point connects back to the first.
    pub closed: bool,
    pub name: String,
}

/// Central projection from `(2, 0, 0, 0)` onto the screen `x1 = 0`:
/// `(2 x2, 2 x3, 2 x4) / (2 - x1)`.
pub fn light_source_project(p: [f64; 4]) -> Result<Point3> {
    let [x1, a, b, c] = p;
    if x1 >= 2.0 - tolerance::SOURCE_PLANE {
        return Err(Error::SourcePlane { x1 });
    }
    let s = 2.0 / (2.0 - x1);
    Ok([s * a, s * b, s * c])
}

/// Stereographic projection of `R^4` from `(0, 0, 1, 0)`:
/// `(y1, y2, y4) / (1 - y3)`.
pub fn stereographic_project(y: [f64; 4]) -> Result<Point3> {
    let divisor = 1.0 - y[2];
    if divisor.abs() <= tolerance::PROJECTION_POLE {
        return Err(Error::ProjectionPole { divisor });
    }
    Ok([y[0] / divisor, y[1] / divisor, y[3] / divisor])
}

fn total(p: Result<Point3>) -> Point3 {
    p.expect("cylinder points satisfy x1 <= 1 < 2")
}

/// Section of the doubled infinity with `x3` suppressed:
/// `(x1, x2, x4, x5) = (cos Ψ cos Θ, sin Ψ cos Θ, sin Θ, cos Θ)`.
pub fn doubled_cylinder_point(psi: f64, theta: f64) -> [f64; 4] {
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    [cp * ct, sp * ct, st, ct]
}

/// Closed form of the doubled infinity:
/// `(2 sin Ψ cos Θ, 2 sin Θ, 2 cos Θ) / (2 - cos Ψ cos Θ)`.
pub fn doubled_cyclide(psi: f64, theta: f64) -> Point3 {
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    let d = 2.0 - cp * ct;
    [2.0 * sp * ct / d, 2.0 * st / d, 2.0 * ct / d]
}

/// [`doubled_cyclide`] computed as the projection of
/// [`doubled_cylinder_point`].
pub fn doubled_cyclide_pipeline(psi: f64, theta: f64) -> Point3 {
    total(light_source_project(doubled_cylinder_point(psi, theta)))
}

/// Quadratic coordinates `(y1, y2, y3, y4, y5)` of the point at parameter
/// `Ψ` on the null geodesic at infinity with direction `n`,
/// `x = (cos Ψ n, cos Ψ, sin Ψ, sin Ψ)`.
pub fn geodesic_quadratic_coords(n: [f64; 3], psi: f64) -> [f64; 5] {
    let (s, c) = psi.sin_cos();
    let x = HexVector::new([c * n[0], c * n[1], c * n[2], c, s, s]);
    let ray = ray_class(x).expect("geodesic vector is null");
    quadratic_coords(&ray).0
}

/// Quadratic coordinates of the simple infinity with `x3` suppressed,
/// `n = (cos Θ, sin Θ, 0)`: the four nonzero ones, `(y1, y2, y4, y5)`.
pub fn simple_quadratic_point(psi: f64, theta: f64) -> [f64; 4] {
    let y = geodesic_quadratic_coords([theta.cos(), theta.sin(), 0.0], psi);
    [y[0], y[1], y[3], y[4]]
}

/// Closed form of the simple infinity as a needle cyclide:
/// `(2 cos²Ψ, 2 cos²Ψ sin Θ, 2 cos Ψ sin Ψ) / (2 - cos²Ψ cos Θ)`.
///
/// The whole ring `Ψ = π/2` is the cusp `(0, 0, 0)`.
pub fn simple_cyclide(psi: f64, theta: f64) -> Point3 {
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    let c2 = cp * cp;
    let d = 2.0 - c2 * ct;
    [2.0 * c2 / d, 2.0 * c2 * st / d, 2.0 * cp * sp / d]
}

/// [`simple_cyclide`] as the composition: the light source sits on the
/// `y1` axis and the screen carries `(y4, y2, y5)`.
pub fn simple_cyclide_pipeline(psi: f64, theta: f64) -> Point3 {
    let [y1, y2, y4, y5] = simple_quadratic_point(psi, theta);
    total(light_source_project([y1, y4, y2, y5]))
}

/// The simple infinity as a horned torus: the roles of `y1` and `y4` are
/// exchanged, so the light source sits on the `y4` axis,
/// `(2 cos²Ψ cos Θ, 2 cos²Ψ sin Θ, 2 cos Ψ sin Ψ) / (2 - cos²Ψ)`.
///
/// The image is symmetric under rotation about the `z` axis, and the ring
/// `Ψ = π/2` is the horn at the origin.
pub fn horned_torus(psi: f64, theta: f64) -> Point3 {
    let [y1, y2, y4, y5] = simple_quadratic_point(psi, theta);
    total(light_source_project([y4, y1, y2, y5]))
}

/// Closed form of [`horned_torus`].
pub fn horned_torus_closed_form(psi: f64, theta: f64) -> Point3 {
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    let c2 = cp * cp;
    let d = 2.0 - c2;
    [2.0 * c2 * ct / d, 2.0 * c2 * st / d, 2.0 * cp * sp / d]
}

/// Quadratic coordinates of the full infinity,
/// `y = (cos²Ψ sin Θ cos Φ, cos²Ψ sin Θ sin Φ, cos²Ψ cos Θ, cos Ψ sin Ψ)`.
pub fn infinity_quadratic_point(psi: f64, theta: f64, phi: f64) -> [f64; 4] {
    let (st, ct) = theta.sin_cos();
    let (sf, cf) = phi.sin_cos();
    let y = geodesic_quadratic_coords([st * cf, st * sf, ct], psi);
    [y[0], y[1], y[2], y[4]]
}

/// Conformal infinity in `R^3`:
/// `(cos²Ψ sin Θ cos Φ, cos²Ψ sin Θ sin Φ, cos Ψ sin Ψ) / (1 - cos²Ψ cos Θ)`.
/// Only the point `Ψ ∈ {0, π}`, `Θ = 0` is missing.
pub fn infinity_r3(psi: f64, theta: f64, phi: f64) -> Result<Point3> {
    stereographic_project(infinity_quadratic_point(psi, theta, phi))
}

/// Closed form of [`infinity_r3`].
pub fn infinity_r3_closed_form(psi: f64, theta: f64, phi: f64) -> Result<Point3> {
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    let (sf, cf) = phi.sin_cos();
    let c2 = cp * cp;
    let divisor = 1.0 - c2 * ct;
    if divisor.abs() <= tolerance::PROJECTION_POLE {
        return Err(Error::ProjectionPole { divisor });
    }
    Ok([c2 * st * cf / divisor, c2 * st * sf / divisor, cp * sp / divisor])
}

/// The square map of the Clifford torus, `(z1, z2) ↦ (z1 z2, z1 z̄2)`:
/// two-to-one with fibres `±(z1, z2)`.
pub fn torus_square(z1: C64, z2: C64) -> (C64, C64) {
    (z1 * z2, z1 * z2.conj())
}

/// Unit torus coordinates `(z1, z2) = (X + iV, T + iW)` of the event
/// `(x, t)` of `1+1`-dimensional Minkowski space.
pub fn clifford_torus_coords(x: f64, t: f64) -> (C64, C64) {
    let v = (1.0 - x * x + t * t) / 2.0;
    let w = -(1.0 + x * x - t * t) / 2.0;
    let norm = t.hypot(w);
    (C64::new(x, v) / norm, C64::new(t, w) / norm)
}

/// Light-source image of a point of the Clifford torus after the square
/// map.
pub fn torus_image(z1: C64, z2: C64) -> Point3 {
    let (a, b) = torus_square(z1, z2);
    total(light_source_project([a.re, a.im, b.re, b.im]))
}

/// Event `(x, t)` drawn on the Clifford torus model of `M^c`.
pub fn clifford_torus_point(x: f64, t: f64) -> Point3 {
    let (z1, z2) = clifford_torus_coords(x, t);
    torus_image(z1, z2)
}

/// Orbit of the circle action `z1 ↦ e^{iα} z1` through `(1, z2)`, sampled
/// at `z1 = e^{2πik/n}`.
pub fn segal_orbit(z2: C64, n_samples: usize) -> Result<Curve3> {
    if n_samples < 2 {
        return Err(Error::InvalidGrid(format!(
            "an orbit needs at least 2 samples, got {n_samples}"
        )));
    }
    let z2 = z2 / z2.norm();
    let points = (0..n_samples)
        .map(|k| {
            let z1 = C64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n_samples as f64);
            torus_image(z1, z2)
        })
        .collect();
    Ok(Curve3 {
        points,
        closed: true,
        name: format!("segal-orbit z2=({}, {})", z2.re, z2.im),
    })
}

/// The trace of the null geodesic at infinity with direction `n`, sampled
/// at `Ψ_k = kπ/n_samples`, drawn on the needle cyclide (`x3` suppressed,
/// as in [`simple_cyclide_pipeline`]). It reaches the cusp at `Ψ = π/2`.
pub fn geodesic_on_cyclide(n: [f64; 3], n_samples: usize) -> Curve3 {
    let points = (0..n_samples)
        .map(|k| {
            let psi = std::f64::consts::PI * k as f64 / n_samples as f64;
            let y = geodesic_quadratic_coords(n, psi);
            total(light_source_project([y[0], y[3], y[1], y[4]]))
        })
        .collect();
    Curve3 {
        points,
        closed: true,
        name: format!("geodesic n=({}, {}, {})", n[0], n[1], n[2]),
    }
}

/// The same geodesic in the stereographic picture of [`infinity_r3`]: a
/// circle through the origin. Samples at the projection pole are skipped.
pub fn geodesic_in_r3(n: [f64; 3], n_samples: usize) -> Curve3 {
    let points = (0..n_samples)
        .filter_map(|k| {
            let psi = std::f64::consts::PI * k as f64 / n_samples as f64;
            let y = geodesic_quadratic_coords(n, psi);
            stereographic_project([y[0], y[1], y[2], y[4]]).ok()
        })
        .collect::<Vec<_>>();
    let closed = points.len() == n_samples;
    Curve3 {
        points,
        closed,
        name: format!("geodesic n=({}, {}, {})", n[0], n[1], n[2]),
    }
}
