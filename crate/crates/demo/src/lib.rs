//! Browser bindings: surface meshes, point conversion and geodesic traces,
//! returned as flat arrays the page can draw on a 2D canvas.

use conformal_core::forms::{HexVector, MinkVector, ProjClass};
use conformal_core::lie_sphere::{classify_ray, lie_to_ray, LieObject};
use conformal_core::mesh::{mesh, SurfaceMesh};
use conformal_core::quadric::{embed_plus, infinity_test, unitary_of_cone_point, ConePoint};
use conformal_core::surface::{geodesic_in_r3, geodesic_on_cyclide, Curve3};
use conformal_core::C64;
use wasm_bindgen::prelude::*;

/// A mesh flattened for drawing: `xyz` triples and unique edges as index
/// pairs.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Wireframe {
    positions: Vec<f64>,
    edges: Vec<u32>,
    faces: usize,
}

#[wasm_bindgen]
impl Wireframe {
    #[wasm_bindgen(getter)]
    pub fn positions(&self) -> Vec<f64> {
        self.positions.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn edges(&self) -> Vec<u32> {
        self.edges.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn vertex_count(&self) -> usize {
        self.positions.len() / 3
    }

    #[wasm_bindgen(getter)]
    pub fn face_count(&self) -> usize {
        self.faces
    }
}

impl Wireframe {
    fn from_mesh(m: &SurfaceMesh) -> Self {
        let positions = m.vertices.iter().flat_map(|p| p.iter().copied()).collect();
        let mut pairs = std::collections::BTreeSet::new();
        for f in &m.faces {
            for k in 0..f.len() {
                let (a, b) = (f[k], f[(k + 1) % f.len()]);
                if a != b {
                    pairs.insert((a.min(b) as u32, a.max(b) as u32));
                }
            }
        }
        Self {
            positions,
            edges: pairs.into_iter().flat_map(|(a, b)| [a, b]).collect(),
            faces: m.faces.len(),
        }
    }

    fn from_curve(c: &Curve3) -> Self {
        let n = c.points.len() as u32;
        let segments = if c.closed { n } else { n.saturating_sub(1) };
        Self {
            positions: c.points.iter().flat_map(|p| p.iter().copied()).collect(),
            edges: (0..segments).flat_map(|k| [k, (k + 1) % n]).collect(),
            faces: 0,
        }
    }
}

fn parse_resolution(res: &str) -> Result<Vec<usize>, String> {
    res.split('x')
        .map(|f| match f.trim().parse::<usize>() {
            Ok(n) if (2..=512).contains(&n) => Ok(n),
            _ => Err(format!("bad resolution factor `{f}` (2..=512)")),
        })
        .collect()
}

/// Meshes a named surface (`cyclide-simple`, `horned-torus`, ...) at a
/// resolution such as `"48x48"`, with default parameter ranges.
pub fn build_wireframe(name: &str, res: &str) -> Result<Wireframe, String> {
    let resolution = parse_resolution(res)?;
    let m = mesh(name, &resolution, None).map_err(|e| e.to_string())?;
    Ok(Wireframe::from_mesh(&m))
}

/// Traces the geodesic with direction `n` on the cyclide (`view = "cyclide"`)
/// or as a line through the origin of R³ (`view = "r3"`).
pub fn build_geodesic(n: [f64; 3], samples: usize, view: &str) -> Result<Wireframe, String> {
    let len = n.iter().map(|c| c * c).sum::<f64>().sqrt();
    if len < 1e-12 {
        return Err("direction must be nonzero".into());
    }
    let n = n.map(|c| c / len);
    let samples = samples.clamp(8, 4096);
    let curve = match view {
        "cyclide" => geodesic_on_cyclide(n, samples),
        "r3" => geodesic_in_r3(n, samples),
        other => return Err(format!("unknown view `{other}` (cyclide, r3)")),
    };
    Ok(Wireframe::from_curve(&curve))
}

fn fmt(v: f64) -> String {
    conformal_core::export::format_number(v, 6)
}

fn fmt_c(z: C64) -> String {
    let im = fmt(z.im.abs());
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{}{sign}{im}i", fmt(z.re))
}

fn describe(class: &ProjClass) -> String {
    let point = ConePoint::from(*class);
    let u = unitary_of_cone_point(&point);
    let m = u.matrix();
    let x = class.representative().0;
    let coords: Vec<String> = x.iter().map(|&c| fmt(c)).collect();
    format!(
        "quadric class  ({})\nU(2)           [[{}, {}], [{}, {}]]\nat infinity    {}\nLie object     {}",
        coords.join(", "),
        fmt_c(m[(0, 0)]),
        fmt_c(m[(0, 1)]),
        fmt_c(m[(1, 0)]),
        fmt_c(m[(1, 1)]),
        if infinity_test(&point) { "yes" } else { "no" },
        classify_ray(class)
    )
}

/// Describes the event `(x, y, z, t)` in every model.
pub fn describe_event(x: f64, y: f64, z: f64, t: f64) -> Result<String, String> {
    if ![x, y, z, t].iter().all(|c| c.is_finite()) {
        return Err("event coordinates must be finite".into());
    }
    let class = ProjClass::new(embed_plus(&MinkVector::new(x, y, z, t)).vector())
        .map_err(|e| e.to_string())?;
    Ok(describe(&class))
}

/// Describes a null vector of R^{4,2} in every model.
pub fn describe_cone(x: [f64; 6]) -> Result<String, String> {
    let p = ConePoint::new(HexVector::new(x)).map_err(|e| e.to_string())?;
    Ok(describe(&ProjClass::new(p.vector()).map_err(|e| e.to_string())?))
}

/// Describes the plane `n · x = h` (a point of the cone at infinity).
pub fn describe_plane(n: [f64; 3], h: f64) -> Result<String, String> {
    let obj = LieObject::plane(n, h).map_err(|e| e.to_string())?;
    Ok(describe(&lie_to_ray(&obj).map_err(|e| e.to_string())?))
}

#[wasm_bindgen]
pub fn surface_wireframe(name: &str, res: &str) -> Result<Wireframe, JsError> {
    build_wireframe(name, res).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn geodesic_wireframe(nx: f64, ny: f64, nz: f64, samples: usize, view: &str) -> Result<Wireframe, JsError> {
    build_geodesic([nx, ny, nz], samples, view).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn convert_event(x: f64, y: f64, z: f64, t: f64) -> Result<String, JsError> {
    describe_event(x, y, z, t).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn convert_cone(x1: f64, x2: f64, x3: f64, x4: f64, x5: f64, x6: f64) -> Result<String, JsError> {
    describe_cone([x1, x2, x3, x4, x5, x6]).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn convert_plane(nx: f64, ny: f64, nz: f64, h: f64) -> Result<String, JsError> {
    describe_plane([nx, ny, nz], h).map_err(|e| JsError::new(&e))
}
