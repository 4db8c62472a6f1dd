//! Tensor-product sampling of the surface generators into meshes.
//!
//! Vertices are stored row-major in the first parameter: vertex `(i, j)`
//! has index `i * n_b + j`. Faces are quads `(i, j), (i+1, j), (i+1, j+1),
//! (i, j+1)`, wrapping around along periodic parameters. For the
//! three-parameter generator every sample of the first parameter is a
//! separate sheet over the other two.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::surface::{self, Point3};
use crate::tolerance;

/// Sampling of one parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamRange {
    pub start: f64,
    pub end: f64,
    /// `end` is identified with `start`; samples exclude `end` and the grid
    /// closes up.
    pub periodic: bool,
    /// Shifts the samples by half a cell (`t_k = start + (k + 1/2) h`).
    pub half_offset: bool,
}

impl ParamRange {
    pub const fn periodic(start: f64, end: f64) -> Self {
        Self { start, end, periodic: true, half_offset: false }
    }

    pub const fn open(start: f64, end: f64) -> Self {
        Self { start, end, periodic: false, half_offset: false }
    }

    /// Sample positions. Periodic: `start + k h`, `h = (end - start)/n`.
    /// Open: `start + k h`, `h = (end - start)/(n - 1)`, both ends
    /// included. A half offset uses `h = (end - start)/n` with cell
    /// centres in both cases.
    pub fn samples(&self, n: usize) -> Vec<f64> {
        let span = self.end - self.start;
        (0..n)
            .map(|k| {
                let k = k as f64;
                if self.half_offset {
                    self.start + (k + 0.5) * span / n as f64
                } else if self.periodic {
                    self.start + k * span / n as f64
                } else {
                    self.start + k * span / (n - 1) as f64
                }
            })
            .collect()
    }

    /// Whether the closed range contains a multiple of `period`.
    fn contains_multiple_of(&self, period: f64) -> bool {
        let (lo, hi) = if self.start <= self.end {
            (self.start, self.end)
        } else {
            (self.end, self.start)
        };
        (lo / period).ceil() * period <= hi
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}{}{}",
            self.start,
            self.end,
            if self.periodic { ")" } else { "]" },
            if self.half_offset { " offset" } else { "" }
        )
    }
}

/// Named parametric surface generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    DoubledCyclide,
    SimpleCyclide,
    HornedTorus,
    InfinityR3,
    CliffordTorus,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Self::DoubledCyclide,
        Self::SimpleCyclide,
        Self::HornedTorus,
        Self::InfinityR3,
        Self::CliffordTorus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::DoubledCyclide => "cyclide-doubled",
            Self::SimpleCyclide => "cyclide-simple",
            Self::HornedTorus => "horned-torus",
            Self::InfinityR3 => "infinity-r3",
            Self::CliffordTorus => "clifford-torus",
        }
    }

    /// Parameter names in grid order.
    pub fn parameters(&self) -> &'static [&'static str] {
        match self {
            Self::DoubledCyclide | Self::SimpleCyclide | Self::HornedTorus => &["psi", "theta"],
            Self::InfinityR3 => &["psi", "theta", "phi"],
            Self::CliffordTorus => &["x", "t"],
        }
    }

    pub fn default_ranges(&self) -> Vec<ParamRange> {
        match self {
            Self::DoubledCyclide => vec![ParamRange::periodic(0.0, TAU), ParamRange::periodic(0.0, TAU)],
            Self::SimpleCyclide | Self::HornedTorus => {
                vec![ParamRange::periodic(0.0, PI), ParamRange::periodic(0.0, TAU)]
            }
            Self::InfinityR3 => vec![
                ParamRange::periodic(0.0, PI),
                ParamRange::open(0.0, PI),
                ParamRange::periodic(0.0, TAU),
            ],
            Self::CliffordTorus => vec![ParamRange::open(-20.0, 20.0), ParamRange::open(-15.0, 15.0)],
        }
    }

    pub fn default_resolution(&self) -> Vec<usize> {
        match self {
            Self::DoubledCyclide | Self::SimpleCyclide | Self::HornedTorus => vec![64, 64],
            Self::InfinityR3 => vec![5, 16, 32],
            Self::CliffordTorus => vec![81, 61],
        }
    }

    fn eval2(&self, a: f64, b: f64) -> Point3 {
        match self {
            Self::DoubledCyclide => surface::doubled_cyclide(a, b),
            Self::SimpleCyclide => surface::simple_cyclide(a, b),
            Self::HornedTorus => surface::horned_torus(a, b),
            Self::CliffordTorus => surface::clifford_torus_point(a, b),
            Self::InfinityR3 => unreachable!("three-parameter generator"),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('_', "-");
        let alias = match key.as_str() {
            "doubled-cyclide" => "cyclide-doubled",
            "simple-cyclide" => "cyclide-simple",
            other => other,
        };
        Self::ALL
            .into_iter()
            .find(|g| g.name() == alias)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// Triangle and quad mesh with provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceMesh {
    pub vertices: Vec<Point3>,
    /// Quads, or triangles where welding merged two corners.
    pub faces: Vec<Vec<usize>>,
    pub name: String,
    pub ranges: Vec<ParamRange>,
}

impl SurfaceMesh {
    /// One-line description: generator and parameter ranges.
    pub fn description(&self) -> String {
        let ranges: Vec<String> = self.ranges.iter().map(|r| r.to_string()).collect();
        format!("{} {}", self.name, ranges.join(" x "))
    }

    pub fn is_valid(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|c| c.is_finite()))
            && self
                .faces
                .iter()
                .all(|f| f.len() >= 3 && f.iter().all(|&i| i < self.vertices.len()))
    }
}

/// Requested mesh.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshRequest {
    pub generator: Generator,
    pub resolution: Vec<usize>,
    pub ranges: Vec<ParamRange>,
    /// Collapse grid rows and columns whose samples coincide (the cusp of
    /// the needle cyclide) into single vertices.
    pub weld: bool,
}

impl MeshRequest {
    pub fn new(generator: Generator) -> Self {
        Self {
            generator,
            resolution: generator.default_resolution(),
            ranges: generator.default_ranges(),
            weld: true,
        }
    }

    pub fn with_resolution(mut self, resolution: &[usize]) -> Self {
        self.resolution = resolution.to_vec();
        self
    }

    pub fn with_ranges(mut self, ranges: Vec<ParamRange>) -> Self {
        self.ranges = ranges;
        self
    }

    pub fn with_weld(mut self, weld: bool) -> Self {
        self.weld = weld;
        self
    }
}

/// Builds the mesh of a named generator.
pub fn mesh(name: &str, resolution: &[usize], ranges: Option<Vec<ParamRange>>) -> Result<SurfaceMesh> {
    let generator: Generator = name.parse()?;
    let mut request = MeshRequest::new(generator).with_resolution(resolution);
    if let Some(r) = ranges {
        request = request.with_ranges(r);
    }
    build(&request)
}

pub fn build(req: &MeshRequest) -> Result<SurfaceMesh> {
    let dims = req.generator.parameters().len();
    if req.resolution.len() != dims || req.ranges.len() != dims {
        return Err(Error::InvalidGrid(format!(
            "{} takes {} parameters, got resolution {:?} and {} ranges",
            req.generator,
            dims,
            req.resolution,
            req.ranges.len()
        )));
    }
    if let Some(n) = req.resolution.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidGrid(format!("resolution {n} is below 2")));
    }
    let mut grid = Grid::default();
    let mut ranges = req.ranges.clone();
    if req.generator == Generator::InfinityR3 {
        let psi = ranges[0].samples(req.resolution[0]);
        // the only pole is cos²Ψ = 1, cos Θ = 1
        let hits_pole = psi.iter().any(|p| p.sin().abs() <= tolerance::PROJECTION_POLE);
        if hits_pole && ranges[1].contains_multiple_of(TAU) {
            ranges[1].half_offset = true;
        }
        let theta = ranges[1].samples(req.resolution[1]);
        let phi = ranges[2].samples(req.resolution[2]);
        let mut poles = Vec::new();
        for (i, &p) in psi.iter().enumerate() {
            let mut points = Vec::with_capacity(theta.len() * phi.len());
            for (j, &t) in theta.iter().enumerate() {
                for (k, &f) in phi.iter().enumerate() {
                    match surface::infinity_r3(p, t, f) {
                        Ok(v) => points.push(v),
                        Err(_) => {
                            poles.push(vec![i, j, k]);
                            points.push([0.0; 3]);
                        }
                    }
                }
            }
            grid.push_sheet(points, theta.len(), phi.len(), &ranges[1..], req.weld);
        }
        if !poles.is_empty() {
            return Err(Error::PoleInGrid { cells: poles });
        }
    } else {
        let a = ranges[0].samples(req.resolution[0]);
        let b = ranges[1].samples(req.resolution[1]);
        let points = a
            .iter()
            .flat_map(|&s| b.iter().map(move |&t| (s, t)))
            .map(|(s, t)| req.generator.eval2(s, t))
            .collect();
        grid.push_sheet(points, a.len(), b.len(), &ranges, req.weld);
    }
    Ok(SurfaceMesh {
        vertices: grid.vertices,
        faces: grid.faces,
        name: req.generator.name().to_string(),
        ranges,
    })
}

#[derive(Default)]
struct Grid {
    vertices: Vec<Point3>,
    faces: Vec<Vec<usize>>,
}

/// Tolerance for welding coincident grid rows and columns.
pub const WELD: f64 = 1e-12;

fn coincide(a: &Point3, b: &Point3) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= WELD)
}

impl Grid {
    fn push_sheet(&mut self, points: Vec<Point3>, na: usize, nb: usize, ranges: &[ParamRange], weld: bool) {
        // representative grid index of every sample
        let mut rep: Vec<usize> = (0..na * nb).collect();
        if weld {
            for i in 0..na {
                let row = &points[i * nb..(i + 1) * nb];
                if row.iter().all(|p| coincide(p, &row[0])) {
                    for j in 0..nb {
                        rep[i * nb + j] = rep[i * nb];
                    }
                }
            }
            for j in 0..nb {
                let first = points[j];
                if (0..na).all(|i| coincide(&points[i * nb + j], &first)) {
                    for i in 0..na {
                        rep[i * nb + j] = rep[j];
                    }
                }
            }
            // resolve chains so every sample points at a fixed point
            for s in 0..rep.len() {
                let mut r = rep[s];
                while rep[r] != r {
                    r = rep[r];
                }
                rep[s] = r;
            }
        }
        let mut index = vec![usize::MAX; na * nb];
        for s in 0..na * nb {
            if rep[s] == s {
                index[s] = self.vertices.len();
                self.vertices.push(points[s]);
            }
        }
        let vertex = |s: usize| index[rep[s]];
        let cells_a = if ranges[0].periodic { na } else { na - 1 };
        let cells_b = if ranges[1].periodic { nb } else { nb - 1 };
        for i in 0..cells_a {
            let i1 = (i + 1) % na;
            for j in 0..cells_b {
                let j1 = (j + 1) % nb;
                let corners = [i * nb + j, i1 * nb + j, i1 * nb + j1, i * nb + j1].map(vertex);
                let mut face: Vec<usize> = Vec::with_capacity(4);
                for c in corners {
                    if face.last() != Some(&c) {
                        face.push(c);
                    }
                }
                if face.len() > 1 && face.first() == face.last() {
                    face.pop();
                }
                let mut distinct = face.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct.len() == face.len() && face.len() >= 3 {
                    self.faces.push(face);
                }
            }
        }
    }
}
