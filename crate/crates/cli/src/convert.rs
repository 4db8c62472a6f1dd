//! `confinf convert`: one point in every model.

use std::io::Write;

use clap::Args;
use conformal_core::export::format_number;
use conformal_core::forms::{HexVector, MinkVector, ProjClass};
use conformal_core::hermitian::Unitary2;
use conformal_core::lie_sphere::{classify_ray, lie_to_ray, LieObject};
use conformal_core::quadric::{
    cone_point_of_unitary, embed_plus, infinity_test, quadratic_coords, unitary_of_cone_point,
    ConePoint,
};
use conformal_core::twistor::plane_of_unitary;
use conformal_core::{CMat2, C64};

use crate::{parse_reals, CliError};

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ConvertArgs {
    /// Null vector x1,...,x6 of R^{4,2}
    #[arg(long, allow_hyphen_values = true)]
    cone: Option<String>,
    /// Event x,y,z,t of Minkowski space
    #[arg(long, allow_hyphen_values = true)]
    event: Option<String>,
    /// Unitary 2x2 matrix as re,im of U11, U12, U21, U22 (8 reals)
    #[arg(long, allow_hyphen_values = true)]
    unitary: Option<String>,
    /// Lie object: point:x,y,z | sphere:x,y,z,r | plane:nx,ny,nz,h | infinity
    #[arg(long, allow_hyphen_values = true)]
    lie: Option<String>,
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn reals(s: &str, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let v = crate::parse_reals(s).map_err(usage)?;
    if v.len() != n {
        return Err(usage(format!("{what} needs {n} comma-separated reals, got {}", v.len())));
    }
    Ok(v)
}

fn parse_lie(s: &str) -> Result<LieObject, CliError> {
    let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
    let obj = match kind.trim() {
        "point" => {
            let v = reals(rest, 3, "point")?;
            LieObject::Point([v[0], v[1], v[2]])
        }
        "sphere" => {
            let v = reals(rest, 4, "sphere")?;
            LieObject::Sphere {
                center: [v[0], v[1], v[2]],
                signed_radius: v[3],
            }
        }
        "plane" => {
            let v = parse_reals(rest).map_err(usage)?;
            let [a, b, c, h] = v[..] else {
                return Err(usage("plane needs nx,ny,nz,h".into()));
            };
            LieObject::plane([a, b, c], h)?
        }
        "infinity" | "inf" => LieObject::InfinityPoint,
        other => {
            return Err(usage(format!(
                "unknown Lie object `{other}` (point, sphere, plane, infinity)"
            )))
        }
    };
    Ok(obj)
}

fn num(v: f64) -> String {
    format_number(v, 9)
}

fn complex(z: C64) -> String {
    let im = num(z.im.abs());
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{}{sign}{im}i", num(z.re))
}

fn matrix_rows<const R: usize>(m: &nalgebra::SMatrix<C64, R, 2>) -> String {
    let rows: Vec<String> = (0..R)
        .map(|r| format!("[{}, {}]", complex(m[(r, 0)]), complex(m[(r, 1)])))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn vector(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|&c| num(c)).collect();
    format!("({})", parts.join(", "))
}

/// Resolves the input to a quadric class.
fn to_class(a: &ConvertArgs) -> Result<ProjClass, CliError> {
    if let Some(s) = &a.cone {
        let v = reals(s, 6, "--cone")?;
        let x = HexVector::new(v.try_into().expect("six reals"));
        return Ok(ProjClass::new(ConePoint::new(x)?.vector())?);
    }
    if let Some(s) = &a.event {
        let v = reals(s, 4, "--event")?;
        let e = MinkVector::new(v[0], v[1], v[2], v[3]);
        return Ok(ProjClass::new(embed_plus(&e).vector())?);
    }
    if let Some(s) = &a.unitary {
        let v = reals(s, 8, "--unitary")?;
        let m = CMat2::new(
            C64::new(v[0], v[1]),
            C64::new(v[2], v[3]),
            C64::new(v[4], v[5]),
            C64::new(v[6], v[7]),
        );
        return Ok(cone_point_of_unitary(&Unitary2::new(m)?));
    }
    let s = a.lie.as_deref().expect("one input is required");
    Ok(lie_to_ray(&parse_lie(s)?)?)
}

pub fn run(a: &ConvertArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let class = to_class(a)?;
    let point = ConePoint::from(class);
    let u = unitary_of_cone_point(&point);
    let plane = plane_of_unitary(&u);
    let at_infinity = infinity_test(&point);
    let object = classify_ray(&class);
    let x = class.representative().0;
    let y = quadratic_coords(&class.to_ray()).0;

    let mut lines = vec![
        format!("quadric class     {}", vector(&x)),
        format!("quadratic coords  {}", vector(&y)),
        format!("U(2)              {}", matrix_rows(u.matrix())),
        format!("twistor plane     [U; I] = {}", matrix_rows(plane.basis())),
        format!("at infinity       {}", if at_infinity { "yes" } else { "no" }),
    ];
    if !at_infinity {
        let s = x[4] - x[5];
        lines.push(format!(
            "event (x, t)      {}",
            vector(&[x[0] / s, x[1] / s, x[2] / s, x[3] / s])
        ));
    }
    lines.push(format!("classification    {}", object.kind()));
    lines.push(format!("Lie object        {object}"));
    for l in lines {
        writeln!(out, "{l}").map_err(|e| CliError::Io(format!("<stdout>: {e}")))?;
    }
    Ok(())
}
