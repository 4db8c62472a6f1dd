//! Seeded random inputs covering every branch of the models: finite
//! events, planes at infinity and the vertex `∞`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conformal::{random_su22, SpecialPseudoUnitary22};
use crate::forms::{HexVector, MinkVector};
use crate::hermitian::Unitary2;
use crate::lie_sphere::LieObject;
use crate::quadric::{embed_plus, unitary_of_cone_point, ConePoint};
use crate::{CMat2, C64};

/// Which part of compactified Minkowski space a sample comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Finite,
    Plane,
    Vertex,
}

/// Deterministic sampler.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn angle(&mut self) -> f64 {
        self.uniform(0.0, std::f64::consts::TAU)
    }

    /// Uniform on the unit sphere `S^{N-1}` (rejection from the cube).
    pub fn unit<const N: usize>(&mut self) -> [f64; N] {
        loop {
            let v: [f64; N] = std::array::from_fn(|_| self.uniform(-1.0, 1.0));
            let r2: f64 = v.iter().map(|c| c * c).sum();
            if (1e-6..=1.0).contains(&r2) {
                let r = r2.sqrt();
                return v.map(|c| c / r);
            }
        }
    }

    /// Entries uniform in `[-scale, scale]`.
    pub fn hex_vector(&mut self, scale: f64) -> HexVector {
        HexVector::new(std::array::from_fn(|_| self.uniform(-scale, scale)))
    }

    pub fn event(&mut self, scale: f64) -> MinkVector {
        MinkVector(std::array::from_fn(|_| self.uniform(-scale, scale)))
    }

    /// Nonzero scale with random sign, magnitude in `[0.2, 5]`.
    pub fn scale(&mut self) -> f64 {
        let m = self.uniform(0.2, 5.0);
        if self.rng.gen_bool(0.5) {
            m
        } else {
            -m
        }
    }

    /// Point of the cylinder section `x1²+x2²+x3²+x5² = x4²+x6² = 1`: a
    /// generic null vector, almost surely off infinity.
    pub fn cylinder_point(&mut self) -> HexVector {
        let [a, b, c, d] = self.unit::<4>();
        let (s, t) = self.angle().sin_cos();
        HexVector::new([a, b, c, t, d, s])
    }

    /// Null vector from the requested branch, with a random nonzero scale.
    pub fn cone_vector(&mut self, branch: Branch) -> HexVector {
        let v = match branch {
            Branch::Finite => {
                if self.rng.gen_bool(0.5) {
                    self.cylinder_point()
                } else {
                    embed_plus(&self.event(5.0)).vector()
                }
            }
            Branch::Plane => {
                let [a, b, c] = self.unit::<3>();
                let h = self.uniform(-5.0, 5.0);
                HexVector::new([a, b, c, 1.0, h, h])
            }
            Branch::Vertex => HexVector::new([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]),
        };
        v * self.scale()
    }

    /// Branch drawn with weights 8 : 3 : 1.
    pub fn branch(&mut self) -> Branch {
        match self.rng.gen_range(0..12) {
            0..=7 => Branch::Finite,
            8..=10 => Branch::Plane,
            _ => Branch::Vertex,
        }
    }

    pub fn cone_point(&mut self) -> ConePoint {
        let b = self.branch();
        ConePoint::new(self.cone_vector(b)).expect("sampled vector is null")
    }

    /// Haar-like unitary `e^{iφ} [[z1, -z̄2], [z2, z̄1]]`.
    pub fn generic_unitary(&mut self) -> Unitary2 {
        let [a, b, c, d] = self.unit::<4>();
        let (z1, z2) = (C64::new(a, b), C64::new(c, d));
        let m = CMat2::new(z1, -z2.conj(), z2, z1.conj()) * C64::from_polar(1.0, self.angle());
        Unitary2::new(m).expect("unitary by construction")
    }

    /// Unitary from the requested branch.
    pub fn unitary(&mut self, branch: Branch) -> Unitary2 {
        match branch {
            Branch::Finite => self.generic_unitary(),
            _ => {
                let v = self.cone_vector(branch);
                unitary_of_cone_point(&ConePoint::new(v).expect("null"))
            }
        }
    }

    /// Random Lie object; coordinates and radii in `[-10, 10]`.
    pub fn lie_object(&mut self) -> LieObject {
        let center: [f64; 3] = std::array::from_fn(|_| self.uniform(-10.0, 10.0));
        match self.rng.gen_range(0..4) {
            0 => LieObject::Point(center),
            1 => LieObject::Sphere {
                center,
                signed_radius: self.uniform(-10.0, 10.0),
            },
            2 => LieObject::Plane {
                normal: self.unit::<3>(),
                height: self.uniform(-10.0, 10.0),
            },
            _ => LieObject::InfinityPoint,
        }
    }

    pub fn su22(&mut self) -> SpecialPseudoUnitary22 {
        random_su22(self.rng.gen())
    }
}
