//! Deterministic ASCII writers for meshes, curves and point sets.
//!
//! Numbers are written in positional notation with a fixed number of
//! significant digits (9 by default), `.` as decimal separator, trailing
//! zeros trimmed, and anything below `1e-12` in magnitude as `0`. The same
//! input always produces the same bytes.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mesh::SurfaceMesh;
use crate::surface::{Curve3, Point3};

/// Default number of significant digits.
pub const DEFAULT_PRECISION: usize = 9;

/// Environment variable overriding the number of significant digits.
pub const PRECISION_ENV: &str = "CONFINF_PRECISION";

/// Magnitudes below this are written as `0`.
pub const ZERO_CUTOFF: f64 = 1e-12;

/// Significant digits from [`PRECISION_ENV`], falling back to
/// [`DEFAULT_PRECISION`] when unset or not an integer in `1..=17`.
pub fn precision_from_env() -> usize {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|p| (1..=17).contains(p))
        .unwrap_or(DEFAULT_PRECISION)
}

/// `v` with `digits` significant digits in positional notation.
pub fn format_number(v: f64, digits: usize) -> String {
    assert!(v.is_finite(), "cannot export non-finite value {v}");
    if v.abs() < ZERO_CUTOFF {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits.max(1) - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let significand: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&significand);
    } else {
        let int_len = exp as usize + 1;
        if significand.len() <= int_len {
            out.push_str(&significand);
            out.extend(std::iter::repeat_n('0', int_len - significand.len()));
        } else {
            out.push_str(&significand[..int_len]);
            out.push('.');
            out.push_str(&significand[int_len..]);
        }
    }
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    out
}

/// Output file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Obj,
    Csv,
    Ply,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Self::Obj => "obj",
            Self::Csv => "csv",
            Self::Ply => "ply",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(Self::Obj),
            "csv" => Ok(Self::Csv),
            "ply" => Ok(Self::Ply),
            other => Err(format!("unknown format `{other}` (expected obj, csv or ply)")),
        }
    }
}

fn triple(p: &Point3, sep: &str, digits: usize) -> String {
    p.iter()
        .map(|&c| format_number(c, digits))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Writes a mesh. CSV carries the vertices only.
pub fn write_mesh<W: Write + ?Sized>(w: &mut W, m: &SurfaceMesh, format: Format, digits: usize) -> io::Result<()> {
    match format {
        Format::Obj => {
            writeln!(w, "# {}", m.description())?;
            for v in &m.vertices {
                writeln!(w, "v {}", triple(v, " ", digits))?;
            }
            for f in &m.faces {
                let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
                writeln!(w, "f {}", idx.join(" "))?;
            }
        }
        Format::Csv => write_points(w, &m.vertices, Format::Csv, digits)?,
        Format::Ply => {
            ply_header(w, &m.description(), m.vertices.len())?;
            writeln!(w, "element face {}", m.faces.len())?;
            writeln!(w, "property list uchar int vertex_indices")?;
            writeln!(w, "end_header")?;
            for v in &m.vertices {
                writeln!(w, "{}", triple(v, " ", digits))?;
            }
            for f in &m.faces {
                let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
                writeln!(w, "{} {}", f.len(), idx.join(" "))?;
            }
        }
    }
    Ok(())
}

fn ply_header<W: Write + ?Sized>(w: &mut W, comment: &str, vertices: usize) -> io::Result<()> {
    writeln!(w, "ply")?;
    writeln!(w, "format ascii 1.0")?;
    writeln!(w, "comment {comment}")?;
    writeln!(w, "element vertex {vertices}")?;
    writeln!(w, "property double x")?;
    writeln!(w, "property double y")?;
    writeln!(w, "property double z")
}

/// Segments `(a, b)` of each curve, as indices into the concatenated points.
fn segments(curves: &[Curve3]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut base = 0;
    for c in curves {
        let n = c.points.len();
        for k in 0..n.saturating_sub(1) {
            out.push((base + k, base + k + 1));
        }
        if c.closed && n > 2 {
            out.push((base + n - 1, base));
        }
        base += n;
    }
    out
}

/// Writes a set of polylines: OBJ `l` elements, PLY edges, or CSV rows
/// `curve,x,y,z` tagged with the curve index.
pub fn write_curves<W: Write + ?Sized>(w: &mut W, curves: &[Curve3], format: Format, digits: usize) -> io::Result<()> {
    let names: Vec<&str> = curves.iter().map(|c| c.name.as_str()).collect();
    let total: usize = curves.iter().map(|c| c.points.len()).sum();
    match format {
        Format::Obj => {
            writeln!(w, "# {} curve(s)", curves.len())?;
            for name in &names {
                writeln!(w, "# {name}")?;
            }
            for p in curves.iter().flat_map(|c| &c.points) {
                writeln!(w, "v {}", triple(p, " ", digits))?;
            }
            for (a, b) in segments(curves) {
                writeln!(w, "l {} {}", a + 1, b + 1)?;
            }
        }
        Format::Csv => {
            writeln!(w, "curve,x,y,z")?;
            for (k, c) in curves.iter().enumerate() {
                for p in &c.points {
                    writeln!(w, "{k},{}", triple(p, ",", digits))?;
                }
            }
        }
        Format::Ply => {
            let segs = segments(curves);
            ply_header(w, &format!("{} curve(s)", curves.len()), total)?;
            writeln!(w, "element edge {}", segs.len())?;
            writeln!(w, "property int vertex1")?;
            writeln!(w, "property int vertex2")?;
            writeln!(w, "end_header")?;
            for p in curves.iter().flat_map(|c| &c.points) {
                writeln!(w, "{}", triple(p, " ", digits))?;
            }
            for (a, b) in segs {
                writeln!(w, "{a} {b}")?;
            }
        }
    }
    Ok(())
}

/// Writes a point set: OBJ `v` lines, CSV with header `x,y,z`, or PLY
/// vertices only.
pub fn write_points<W: Write + ?Sized>(w: &mut W, points: &[Point3], format: Format, digits: usize) -> io::Result<()> {
    match format {
        Format::Obj => {
            for p in points {
                writeln!(w, "v {}", triple(p, " ", digits))?;
            }
        }
        Format::Csv => {
            writeln!(w, "x,y,z")?;
            for p in points {
                writeln!(w, "{}", triple(p, ",", digits))?;
            }
        }
        Format::Ply => {
            ply_header(w, "points", points.len())?;
            writeln!(w, "end_header")?;
            for p in points {
                writeln!(w, "{}", triple(p, " ", digits))?;
            }
        }
    }
    Ok(())
}

/// Renders into a string with the given writer.
pub fn render<F>(write: F) -> String
where
    F: FnOnce(&mut Vec<u8>) -> io::Result<()>,
{
    let mut buf = Vec::new();
    write(&mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("ASCII output")
}

/// Writes a file through `write`, attaching the path to I/O errors.
pub fn save<F>(path: &Path, write: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let io_err = |e: io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    write(&mut w).map_err(io_err)?;
    w.flush().map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::ParamRange;

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.0, 9), "0");
        assert_eq!(format_number(-0.0, 9), "0");
        assert_eq!(format_number(1e-13, 9), "0");
        assert_eq!(format_number(1.0, 9), "1");
        assert_eq!(format_number(-2.0 / 3.0, 9), "-0.666666667");
        assert_eq!(format_number(2.0000000000000004, 9), "2");
        assert_eq!(format_number(123456.789012, 9), "123456.789");
        assert_eq!(format_number(1.5e-5, 9), "0.000015");
        assert_eq!(format_number(1234567890123.0, 9), "1234567890000");
        assert_eq!(format_number(0.1 + 0.2, 9), "0.3");
        assert_eq!(format_number(std::f64::consts::PI, 4), "3.142");
    }

    fn one_vertex() -> SurfaceMesh {
        SurfaceMesh {
            vertices: vec![[1.0, 0.5, -0.25]],
            faces: vec![],
            name: "test".into(),
            ranges: vec![ParamRange::open(0.0, 1.0)],
        }
    }

    #[test]
    fn obj_one_vertex() {
        let s = render(|w| write_mesh(w, &one_vertex(), Format::Obj, 9));
        assert_eq!(s.lines().filter(|l| l.starts_with("v ")).count(), 1);
        assert!(s.contains("v 1 0.5 -0.25\n"));
    }

    #[test]
    fn csv_three_points() {
        let pts = [[0.0, 0.0, 0.0], [1.0, 2.0, 3.0], [-1.0, 0.5, 1e-3]];
        let s = render(|w| write_points(w, &pts, Format::Csv, 9));
        assert_eq!(s, "x,y,z\n0,0,0\n1,2,3\n-1,0.5,0.001\n");
    }

    #[test]
    fn ply_mesh() {
        let m = SurfaceMesh {
            vertices: vec![[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
            faces: vec![vec![0, 1, 2]],
            name: "tri".into(),
            ranges: vec![],
        };
        let s = render(|w| write_mesh(w, &m, Format::Ply, 9));
        assert!(s.starts_with("ply\nformat ascii 1.0\n"));
        assert!(s.contains("element vertex 3\n"));
        assert!(s.contains("element face 1\n"));
        assert!(s.ends_with("end_header\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n"));
    }

    #[test]
    fn curves() {
        let c = Curve3 {
            points: vec![[0.0; 3], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0]],
            closed: true,
            name: "c".into(),
        };
        let s = render(|w| write_curves(w, &[c.clone(), c.clone()], Format::Obj, 9));
        assert_eq!(s.lines().filter(|l| l.starts_with("l ")).count(), 6);
        assert!(s.contains("l 3 1\nl 4 5\n"));
        let csv = render(|w| write_curves(w, &[c], Format::Csv, 9));
        assert_eq!(csv.lines().next(), Some("curve,x,y,z"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn deterministic() {
        let m = crate::mesh::mesh("cyclide-simple", &[8, 8], None).unwrap();
        let a = render(|w| write_mesh(w, &m, Format::Obj, 9));
        let b = render(|w| write_mesh(w, &m, Format::Obj, 9));
        assert_eq!(a, b);
        assert!(a.lines().filter(|l| l.starts_with("v ")).all(|l| !l.contains('e')));
    }
}
