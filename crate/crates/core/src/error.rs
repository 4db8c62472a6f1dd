use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point lies on the light cone, inversion is singular")]
    LightConeSingular,
    #[error("vector is not on the null cone (|Q| = {residual:e})")]
    NotOnCone { residual: f64 },
    #[error("zero vector has no ray")]
    ZeroVector,
    #[error("matrix is not Hermitian (anti-Hermitian part {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not unitary (|UU† - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("unitary is at conformal infinity (|det(U - I)| = {det:e})")]
    AtInfinity { det: f64 },
    #[error("matrix is not unimodular (|det - 1| = {deviation:e})")]
    NotUnimodular { deviation: f64 },
    #[error("matrix is not in U(2,2): {identity} violated by {deviation:e}")]
    NotPseudoUnitary {
        identity: &'static str,
        deviation: f64,
    },
    #[error("determinant of U(2,2) matrix is not 1 (|det - 1| = {deviation:e})")]
    NotSpecial { deviation: f64 },
    #[error("conjugation leaves the span of the gamma matrices (residue {residue:e})")]
    NotInGroup { residue: f64 },
    #[error("fractional linear action is singular (|det(CU + D)| = {det:e})")]
    SingularAction { det: f64 },
    #[error("twistor vector or plane is not totally isotropic (deviation {deviation:e})")]
    NotIsotropic { deviation: f64 },
    #[error("basis does not span a plane")]
    DegenerateBasis,
    #[error("plane normal must have unit length (|n| = {norm})")]
    NotUnitNormal { norm: f64 },
    #[error("psi = pi/2 is the point at infinity, not a plane")]
    AtInfinityPoint,
    #[error("point lies on or beyond the light-source plane (x1 = {x1})")]
    SourcePlane { x1: f64 },
    #[error("stereographic projection pole (divisor {divisor:e})")]
    ProjectionPole { divisor: f64 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("grid hits the projection pole in {} cell(s): {cells:?}", cells.len())]
    PoleInGrid { cells: Vec<Vec<usize>> },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
