//! `confinf`: generate pictures of conformal infinity and convert points
//! between the models of compactified Minkowski space.
//!
//! Exit codes: `0` success, `1` usage or I/O error, `2` a numerical
//! contract was violated.

mod convert;
mod verify;

use std::ffi::OsString;
use std::f64::consts::PI;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conformal_core::export::{self, Format};
use conformal_core::lie_sphere::{plane_fronts, InfinityGeodesic, LieObject};
use conformal_core::mesh::{self, Generator, MeshRequest, ParamRange, SurfaceMesh};
use conformal_core::surface::{self, Curve3};
use conformal_core::{Error, C64};

pub use verify::{run_checks, Check};

const AFTER_HELP: &str = "\
Projections are fixed: light source (2,0,0,0) onto the screen x1 = 0 for the
cyclides, the horned torus and the Clifford torus; stereographic projection
from (0,0,1,0) for infinity-r3. Ranges are written a:b, where a and b may use
the literal pi (e.g. 0:pi, -pi/2:pi/2, 0:2pi). Output goes to --out, or to
standard output when absent. The number of significant digits written can be
changed with the CONFINF_PRECISION environment variable (default 9).";

#[derive(Debug, Parser)]
#[command(name = "confinf", version, about, after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Doubled conformal infinity as an elliptic supercyclide (psi x theta)
    CyclideDoubled(SurfaceArgs),
    /// Simple conformal infinity as a needle cyclide (psi x theta)
    CyclideSimple(SurfaceArgs),
    /// Simple conformal infinity as a horned torus (psi x theta)
    HornedTorus(SurfaceArgs),
    /// Conformal infinity in R^3 by stereographic projection (psi x theta x phi)
    InfinityR3(SurfaceArgs),
    /// 1+1-dimensional Minkowski space on the Clifford torus (x x t)
    CliffordTorus(SurfaceArgs),
    /// Orbits of the circle action z1 -> e^{ia} z1 on the Clifford torus
    SegalOrbits(SegalArgs),
    /// Parallel plane fronts of a null geodesic trapped at infinity
    PlaneFronts(FrontArgs),
    /// Trace of a null geodesic trapped at infinity
    Geodesic(GeodesicArgs),
    /// Convert a point between the quadric, U(2), twistor and Lie-sphere models
    Convert(convert::ConvertArgs),
    /// Run the identity suite and print the largest deviations
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    /// Output format; defaults to the --out extension, else obj
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Output file
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct SurfaceArgs {
    /// Grid resolution AxB (AxBxC for infinity-r3), at least 2 per axis
    #[arg(long, value_parser = parse_res)]
    res: Option<Resolution>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    psi: Option<(f64, f64)>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    theta: Option<(f64, f64)>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    phi: Option<(f64, f64)>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    x: Option<(f64, f64)>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    t: Option<(f64, f64)>,
    /// Keep coincident grid rows (the cusp) as separate vertices
    #[arg(long)]
    no_weld: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
struct SegalArgs {
    /// Number of orbits x samples per orbit
    #[arg(long, value_parser = parse_res, default_value = "8x128")]
    res: Resolution,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
struct FrontArgs {
    /// Unit direction n of the geodesic
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3)]
    n: Option<[f64; 3]>,
    /// Range of k in psi = k pi / divisions
    #[arg(long, allow_hyphen_values = true, default_value = "-9:9", value_parser = parse_int_range)]
    k: (i64, i64),
    #[arg(long, default_value_t = 20)]
    divisions: u32,
    /// Half-width of each square patch
    #[arg(long, default_value_t = 3.0)]
    size: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum View {
    /// On the needle cyclide (x3 suppressed); passes the cusp at psi = pi/2
    Cyclide,
    /// In R^3 by stereographic projection; a circle through the origin
    R3,
}

#[derive(Debug, Clone, Args)]
struct GeodesicArgs {
    /// Unit direction n of the geodesic
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vec3)]
    n: Option<[f64; 3]>,
    #[arg(long, default_value_t = 256)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = View::Cyclide)]
    view: View,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
struct VerifyArgs {
    /// Random samples per identity
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Normalized request for the file-producing subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub subcommand: String,
    pub resolution: Vec<usize>,
    pub ranges: Vec<ParamRange>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub seed: Option<u64>,
    pub weld: bool,
}

/// Failure of a subcommand, mapped onto the exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Contract(Error),
    /// One or more `verify` checks exceeded their tolerance.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Io(_) => 1,
            Self::Contract(_) | Self::Failed(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) | Self::Io(m) | Self::Failed(m) => f.write_str(m),
            Self::Contract(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Self::Io(e.to_string()),
            Error::UnknownGenerator(_) | Error::InvalidGrid(_) => Self::Usage(e.to_string()),
            other => Self::Contract(other),
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns
/// the exit code. Diagnostics go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            eprintln!("confinf: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::CyclideDoubled(a) => surface_job(Generator::DoubledCyclide, a, stdout),
        Command::CyclideSimple(a) => surface_job(Generator::SimpleCyclide, a, stdout),
        Command::HornedTorus(a) => surface_job(Generator::HornedTorus, a, stdout),
        Command::InfinityR3(a) => surface_job(Generator::InfinityR3, a, stdout),
        Command::CliffordTorus(a) => surface_job(Generator::CliffordTorus, a, stdout),
        Command::SegalOrbits(a) => segal_job(a, stdout),
        Command::PlaneFronts(a) => fronts_job(a, stdout),
        Command::Geodesic(a) => geodesic_job(a, stdout),
        Command::Convert(a) => convert::run(&a, stdout),
        Command::Verify(a) => verify_job(&a, stdout),
    }
}

fn resolve_format(o: &OutputArgs) -> Result<Format, CliError> {
    if let Some(f) = o.format {
        return Ok(f);
    }
    match o.out.as_ref().and_then(|p| p.extension()) {
        Some(ext) => ext
            .to_string_lossy()
            .parse()
            .map_err(|e: String| CliError::Usage(format!("{e}; pass --format"))),
        None => Ok(Format::Obj),
    }
}

/// Builds the job for a surface generator, keeping the default closure of
/// a parameter only when its range spans the full default period.
fn surface_config(generator: Generator, a: &SurfaceArgs) -> Result<JobConfig, CliError> {
    let names = generator.parameters();
    let given = [("psi", a.psi), ("theta", a.theta), ("phi", a.phi), ("x", a.x), ("t", a.t)];
    for (name, value) in given {
        if value.is_some() && !names.contains(&name) {
            return Err(CliError::Usage(format!(
                "{generator} has no parameter --{name} (parameters: {})",
                names.join(", ")
            )));
        }
    }
    let mut ranges = generator.default_ranges();
    for (range, name) in ranges.iter_mut().zip(names) {
        let value = given.iter().find(|(n, _)| n == name).and_then(|(_, v)| *v);
        if let Some((start, end)) = value {
            let full = ((end - start) - (range.end - range.start)).abs() <= 1e-12;
            *range = ParamRange {
                start,
                end,
                periodic: range.periodic && full,
                half_offset: false,
            };
        }
    }
    let resolution = a
        .res
        .clone()
        .map_or_else(|| generator.default_resolution(), |r| r.0);
    if resolution.len() != names.len() {
        return Err(CliError::Usage(format!(
            "{generator} needs --res with {} factors",
            names.len()
        )));
    }
    Ok(JobConfig {
        subcommand: generator.name().to_string(),
        resolution,
        ranges,
        out: a.output.out.clone(),
        format: resolve_format(&a.output)?,
        seed: None,
        weld: !a.no_weld,
    })
}

/// The mesh described by a surface job.
pub fn build_mesh(job: &JobConfig) -> Result<SurfaceMesh, CliError> {
    let generator: Generator = job.subcommand.parse()?;
    let req = MeshRequest::new(generator)
        .with_resolution(&job.resolution)
        .with_ranges(job.ranges.clone())
        .with_weld(job.weld);
    Ok(mesh::build(&req)?)
}

fn emit<F>(out: &Option<PathBuf>, stdout: &mut dyn Write, write: F) -> Result<(), CliError>
where
    F: Fn(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            export::save(path, |w| write(w))?;
            Ok(())
        }
        None => write(stdout).map_err(|e| CliError::Io(format!("<stdout>: {e}"))),
    }
}

fn surface_job(generator: Generator, a: SurfaceArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let job = surface_config(generator, &a)?;
    let m = build_mesh(&job)?;
    let digits = export::precision_from_env();
    emit(&job.out, stdout, |w| export::write_mesh(w, &m, job.format, digits))
}

fn write_curves(curves: &[Curve3], o: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let format = resolve_format(o)?;
    let digits = export::precision_from_env();
    emit(&o.out, stdout, |w| export::write_curves(w, curves, format, digits))
}

fn segal_job(a: SegalArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let [orbits, samples] = a.res.0[..] else {
        return Err(CliError::Usage("segal-orbits needs --res ORBITSxSAMPLES".into()));
    };
    let curves = (0..orbits)
        .map(|j| {
            let z2 = C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / orbits as f64);
            surface::segal_orbit(z2, samples)
        })
        .collect::<Result<Vec<_>, _>>()?;
    write_curves(&curves, &a.output, stdout)
}

fn default_direction() -> [f64; 3] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [s, 0.0, s]
}

/// Square patch of half-width `size` on the plane `n·x = h`, centred at `h n`.
fn plane_patch(n: [f64; 3], h: f64, size: f64) -> [[f64; 3]; 4] {
    let axis = (0..3)
        .min_by(|&a, &b| n[a].abs().total_cmp(&n[b].abs()))
        .expect("three axes");
    let mut e = [0.0; 3];
    e[axis] = 1.0;
    let dot = e[0] * n[0] + e[1] * n[1] + e[2] * n[2];
    let u = [e[0] - dot * n[0], e[1] - dot * n[1], e[2] - dot * n[2]];
    let un = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
    let u = u.map(|c| c / un);
    let v = [
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    ];
    let c = n.map(|x| h * x);
    let corner = |a: f64, b: f64| std::array::from_fn(|k| c[k] + size * (a * u[k] + b * v[k]));
    [corner(-1.0, -1.0), corner(1.0, -1.0), corner(1.0, 1.0), corner(-1.0, 1.0)]
}

fn fronts_job(a: FrontArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let g = InfinityGeodesic::new(a.n.unwrap_or_else(default_direction))?;
    if a.divisions == 0 {
        return Err(CliError::Usage("--divisions must be positive".into()));
    }
    let (k0, k1) = a.k;
    let psis: Vec<f64> = (k0..=k1).map(|k| k as f64 * PI / a.divisions as f64).collect();
    let mut m = SurfaceMesh {
        vertices: Vec::new(),
        faces: Vec::new(),
        name: "plane-fronts".into(),
        ranges: vec![ParamRange::open(psis.first().copied().unwrap_or(0.0), psis.last().copied().unwrap_or(0.0))],
    };
    for (psi, front) in psis.iter().zip(plane_fronts(&g, &psis)) {
        match front {
            Ok(LieObject::Plane { normal, height }) => {
                let base = m.vertices.len();
                m.vertices.extend(plane_patch(normal, height, a.size));
                m.faces.push((base..base + 4).collect());
            }
            Ok(other) => unreachable!("plane fronts are planes, got {other}"),
            Err(Error::AtInfinityPoint) => {
                eprintln!("confinf: psi = {psi} is the point at infinity, skipped");
            }
            Err(e) => return Err(e.into()),
        }
    }
    let format = resolve_format(&a.output)?;
    let digits = export::precision_from_env();
    emit(&a.output.out, stdout, |w| export::write_mesh(w, &m, format, digits))
}

fn geodesic_job(a: GeodesicArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let g = InfinityGeodesic::new(a.n.unwrap_or([1.0, 0.0, 0.0]))?;
    if a.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let curve = match a.view {
        View::Cyclide => surface::geodesic_on_cyclide(g.direction(), a.samples),
        View::R3 => surface::geodesic_in_r3(g.direction(), a.samples),
    };
    write_curves(&[curve], &a.output, stdout)
}

fn verify_job(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let checks = run_checks(a.samples.max(1), a.seed);
    let io = |e: io::Error| CliError::Io(format!("<stdout>: {e}"));
    let mut failed = Vec::new();
    for c in &checks {
        writeln!(stdout, "{c}").map_err(io)?;
        if !c.passed() {
            failed.push(c.name.clone());
        }
    }
    if failed.is_empty() {
        writeln!(stdout, "all {} checks passed", checks.len()).map_err(io)?;
        Ok(())
    } else {
        Err(CliError::Failed(format!("checks failed: {}", failed.join(", "))))
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

/// Grid resolution, one factor per parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution(pub Vec<usize>);

/// `AxB` or `AxBxC`, every factor at least 2.
pub fn parse_res(s: &str) -> Result<Resolution, String> {
    let parts: Vec<usize> = s
        .split(['x', 'X'])
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad resolution `{s}`")))
        .collect::<Result<_, _>>()?;
    if !(2..=3).contains(&parts.len()) {
        return Err(format!("resolution `{s}` must look like AxB or AxBxC"));
    }
    if parts.iter().any(|&n| n < 2) {
        return Err(format!("resolution `{s}` has a factor below 2"));
    }
    Ok(Resolution(parts))
}

/// A real number, optionally a rational multiple of `pi`:
/// `1.5`, `pi`, `-pi`, `2pi`, `2*pi`, `pi/2`, `-3pi/4`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("bad number `{s}`");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim().parse::<f64>().map_err(|_| bad())?)),
        None => (s, None),
    };
    let value = if let Some(coef) = num.strip_suffix("pi") {
        let coef = coef.trim().trim_end_matches('*').trim();
        let c = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| bad())?,
        };
        c * PI
    } else {
        num.parse::<f64>().map_err(|_| bad())?
    };
    let value = match den {
        Some(d) if d != 0.0 => value / d,
        Some(_) => return Err(bad()),
        None => value,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

/// `a:b` with [`parse_angle`] endpoints.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("range `{s}` must look like a:b"))?;
    let (a, b) = (parse_angle(a)?, parse_angle(b)?);
    if a == b {
        return Err(format!("range `{s}` is empty"));
    }
    Ok((a, b))
}

fn parse_int_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("range `{s}` must look like a:b"))?;
    let p = |v: &str| v.trim().parse::<i64>().map_err(|_| format!("bad integer `{v}`"));
    let (a, b) = (p(a)?, p(b)?);
    if a > b {
        return Err(format!("range `{s}` is decreasing"));
    }
    Ok((a, b))
}

/// Comma-separated reals (with [`parse_angle`] syntax).
pub fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(parse_angle).collect()
}

fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let v = parse_reals(s)?;
    v.try_into().map_err(|_| format!("`{s}` must have three components"))
}
