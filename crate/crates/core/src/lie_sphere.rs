//! Lie sphere geometry: points, oriented spheres and oriented planes of
//! `R^3`, plus the point `∞`, as rays of the quadric `Q = 0`.
//!
//! | object                 | vector                                             |
//! |------------------------|----------------------------------------------------|
//! | point `x`              | `(x, 0, (1 - x²)/2, -(1 + x²)/2)`                  |
//! | sphere `(x, t)`        | `(x, t, (1 - x² + t²)/2, -(1 + x² - t²)/2)`        |
//! | plane `n·x = h`        | `(n, 1, h, h)`                                     |
//! | `∞`                    | `(0, 0, 0, 0, 1, 1)`                               |
//!
//! Conformal infinity `x5 = x6` consists of the planes and `∞`. A null
//! geodesic trapped at infinity is a pencil of parallel planes closed up by
//! `∞`.

use crate::error::{Error, Result};
use crate::forms::{proj_class, HexVector, ProjClass};
use crate::quadric::{embed_plus, infinity_test, ConePoint};
use crate::{forms::MinkVector, tolerance};

/// Largest allowed deviation of a plane normal from unit length.
pub const UNIT_NORMAL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LieObject {
    Point([f64; 3]),
    /// Oriented sphere; the sign of the radius is the orientation. A zero
    /// radius is kept as a sphere.
    Sphere { center: [f64; 3], signed_radius: f64 },
    /// Oriented plane `n·x = h` with `|n| = 1`.
    Plane { normal: [f64; 3], height: f64 },
    InfinityPoint,
}

impl LieObject {
    /// Plane with a checked unit normal.
    pub fn plane(normal: [f64; 3], height: f64) -> Result<Self> {
        check_unit(normal)?;
        Ok(Self::Plane { normal, height })
    }

    /// Agreement of kind and parameters to `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let close3 = |a: &[f64; 3], b: &[f64; 3]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);
        match (self, other) {
            (Self::Point(a), Self::Point(b)) => close3(a, b),
            (
                Self::Sphere { center: c1, signed_radius: r1 },
                Self::Sphere { center: c2, signed_radius: r2 },
            ) => close3(c1, c2) && (r1 - r2).abs() <= tol,
            (
                Self::Plane { normal: n1, height: h1 },
                Self::Plane { normal: n2, height: h2 },
            ) => close3(n1, n2) && (h1 - h2).abs() <= tol,
            (Self::InfinityPoint, Self::InfinityPoint) => true,
            _ => false,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Point(_) => "Point",
            Self::Sphere { .. } => "Sphere",
            Self::Plane { .. } => "Plane",
            Self::InfinityPoint => "InfinityPoint",
        }
    }
}

impl std::fmt::Display for LieObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Point([x, y, z]) => write!(f, "Point({x}, {y}, {z})"),
            Self::Sphere { center: [x, y, z], signed_radius } => {
                write!(f, "Sphere(center ({x}, {y}, {z}), radius {signed_radius})")
            }
            Self::Plane { normal: [x, y, z], height } => {
                write!(f, "Plane(normal ({x}, {y}, {z}), height {height})")
            }
            Self::InfinityPoint => write!(f, "InfinityPoint"),
        }
    }
}

fn check_unit(n: [f64; 3]) -> Result<()> {
    let norm = n.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > UNIT_NORMAL {
        return Err(Error::NotUnitNormal { norm });
    }
    Ok(())
}

/// Vector of a Lie object; a plane normal off the unit sphere is rejected.
pub fn lie_to_ray(obj: &LieObject) -> Result<ProjClass> {
    let v = match *obj {
        LieObject::Point(x) => embed_plus(&MinkVector::from_space_time(x, 0.0)).vector(),
        LieObject::Sphere { center, signed_radius } => {
            embed_plus(&MinkVector::from_space_time(center, signed_radius)).vector()
        }
        LieObject::Plane { normal, height } => {
            check_unit(normal)?;
            let [a, b, c] = normal;
            HexVector::new([a, b, c, 1.0, height, height])
        }
        LieObject::InfinityPoint => HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]),
    };
    proj_class(v)
}

/// Reads a quadric class as a Lie object. Total: every class is a point, a
/// sphere, a plane or `∞`.
///
/// Off infinity the representative is rescaled to `x5 - x6 = 1`; a radius
/// within [`tolerance::POINT_RADIUS`] of zero gives a point. At infinity
/// the representative is rescaled to `x4 = 1`, which fixes the plane
/// orientation with `x4 > 0`.
pub fn classify_ray(r: &ProjClass) -> LieObject {
    let p = ConePoint::from(*r);
    let x = p.vector().0;
    if !infinity_test(&p) {
        let s = x[4] - x[5];
        let center = [x[0] / s, x[1] / s, x[2] / s];
        let t = x[3] / s;
        if t.abs() <= tolerance::POINT_RADIUS {
            return LieObject::Point(center);
        }
        return LieObject::Sphere { center, signed_radius: t };
    }
    if x[3].abs() > tolerance::INFINITY {
        let n = [x[0] / x[3], x[1] / x[3], x[2] / x[3]];
        let norm = n.iter().map(|c| c * c).sum::<f64>().sqrt();
        return LieObject::Plane {
            normal: n.map(|c| c / norm),
            height: (x[4] + x[5]) / (2.0 * x[3]),
        };
    }
    LieObject::InfinityPoint
}

/// Direction `n` of a null geodesic trapped at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfinityGeodesic([f64; 3]);

impl InfinityGeodesic {
    pub fn new(n: [f64; 3]) -> Result<Self> {
        check_unit(n)?;
        Ok(Self(n))
    }

    pub fn direction(&self) -> [f64; 3] {
        self.0
    }
}

/// `γ(Ψ) = [(cos Ψ n, cos Ψ, sin Ψ, sin Ψ)]`. Every such geodesic passes
/// through `∞` at `Ψ = π/2`.
pub fn geodesic_at_infinity(g: &InfinityGeodesic, psi: f64) -> ProjClass {
    let (s, c) = psi.sin_cos();
    let [a, b, d] = g.0;
    proj_class(HexVector::new([c * a, c * b, c * d, c, s, s]))
        .expect("geodesic vector is null and nonzero")
}

/// The parallel planes `n·x = tan Ψ` swept by a geodesic at infinity.
pub fn plane_fronts(g: &InfinityGeodesic, psis: &[f64]) -> Vec<Result<LieObject>> {
    psis.iter()
        .map(|&psi| {
            if psi.cos().abs() <= tolerance::RIGHT_ANGLE {
                Err(Error::AtInfinityPoint)
            } else {
                Ok(LieObject::Plane {
                    normal: g.0,
                    height: psi.tan(),
                })
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn ray(x: [f64; 6]) -> ProjClass {
        proj_class(HexVector::new(x)).unwrap()
    }

    #[test]
    fn lie_to_ray_examples() {
        let p = lie_to_ray(&LieObject::Point([0.0; 3])).unwrap();
        assert!(p.approx_eq(&ray([0.0, 0.0, 0.0, 0.0, 1.0, -1.0]), 1e-15));
        let s = lie_to_ray(&LieObject::Sphere { center: [0.0; 3], signed_radius: 1.0 }).unwrap();
        assert!(s.approx_eq(&ray([0.0, 0.0, 0.0, 1.0, 1.0, 0.0]), 1e-15));
        let pl = lie_to_ray(&LieObject::plane([1.0, 0.0, 0.0], 0.0).unwrap()).unwrap();
        assert!(pl.approx_eq(&ray([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]), 1e-15));
        let inf = lie_to_ray(&LieObject::InfinityPoint).unwrap();
        assert!(inf.approx_eq(&ray([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]), 1e-15));
    }

    #[test]
    fn rejects_non_unit_normal() {
        assert!(matches!(
            LieObject::plane([1.0, 1.0, 0.0], 0.0),
            Err(Error::NotUnitNormal { .. })
        ));
        let bad = LieObject::Plane { normal: [2.0, 0.0, 0.0], height: 0.0 };
        assert!(lie_to_ray(&bad).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_ray(&ray([0.0, 0.0, 0.0, 0.0, 1.0, 1.0])), LieObject::InfinityPoint);
        let pl = classify_ray(&ray([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]));
        assert!(pl.approx_eq(&LieObject::Plane { normal: [1.0, 0.0, 0.0], height: 0.0 }, 1e-15));
        let sp = classify_ray(&ray([0.0, 0.0, 0.0, 2.0, 2.0, 0.0]));
        assert!(sp.approx_eq(&LieObject::Sphere { center: [0.0; 3], signed_radius: 1.0 }, 1e-15));
        let pt = classify_ray(&ray([0.0, 0.0, 0.0, 0.0, 1.0, -1.0]));
        assert!(pt.approx_eq(&LieObject::Point([0.0; 3]), 1e-15));
    }

    #[test]
    fn opposite_orientations() {
        let up = LieObject::plane([0.0, 0.0, 1.0], 2.0).unwrap();
        let down = LieObject::plane([0.0, 0.0, -1.0], -2.0).unwrap();
        // (n, 1, h, h) and (-n, 1, -h, -h) are different classes
        let (a, b) = (lie_to_ray(&up).unwrap(), lie_to_ray(&down).unwrap());
        assert!(!a.approx_eq(&b, 1e-3));
        assert!(classify_ray(&b).approx_eq(&down, 1e-14));
        let inward = LieObject::Sphere { center: [1.0, 2.0, 3.0], signed_radius: -0.5 };
        assert!(classify_ray(&lie_to_ray(&inward).unwrap()).approx_eq(&inward, 1e-13));
    }

    #[test]
    fn geodesic_examples() {
        let g = InfinityGeodesic::new([0.0, 0.0, 1.0]).unwrap();
        let inf = ray([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]);
        assert!(geodesic_at_infinity(&g, FRAC_PI_2).approx_eq(&inf, 1e-15));
        let g0 = geodesic_at_infinity(&g, 0.0);
        assert!(g0.approx_eq(&ray([0.0, 0.0, 1.0, 1.0, 0.0, 0.0]), 1e-15));
        let obj = classify_ray(&geodesic_at_infinity(&g, FRAC_PI_4));
        assert!(obj.approx_eq(&LieObject::Plane { normal: [0.0, 0.0, 1.0], height: 1.0 }, 1e-14));
        let tilted = InfinityGeodesic::new([0.6, 0.0, 0.8]).unwrap();
        assert!(geodesic_at_infinity(&tilted, FRAC_PI_2).approx_eq(&inf, 1e-15));
    }

    #[test]
    fn plane_front_examples() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let g = InfinityGeodesic::new([s, 0.0, s]).unwrap();
        let psis: Vec<f64> = (-9..=9).map(|k| k as f64 * PI / 20.0).collect();
        let fronts = plane_fronts(&g, &psis);
        assert_eq!(fronts.len(), 19);
        for (f, psi) in fronts.iter().zip(&psis) {
            let expected = LieObject::Plane { normal: [s, 0.0, s], height: psi.tan() };
            assert!(f.as_ref().unwrap().approx_eq(&expected, 1e-15));
        }
        let out = plane_fronts(&g, &[0.0, FRAC_PI_2]);
        assert_eq!(out[0], Ok(LieObject::Plane { normal: [s, 0.0, s], height: 0.0 }));
        assert_eq!(out[1], Err(Error::AtInfinityPoint));
    }
}
