//! Shared numerical thresholds.
//!
//! Predicates that partition a space (cone membership, the infinity
//! stratum, point versus sphere) read their threshold from here so that
//! every module branches the same way.

/// Cone membership: `|Q(x)| <= CONE * |x|^2` (Euclidean norm).
pub const CONE: f64 = 1e-9;

/// `det(U - I)` modulus at or below which a unitary is at infinity.
pub const INFINITY: f64 = 1e-9;

/// Lightcone test for the inversions, relative to the Euclidean norm squared.
pub const LIGHT_CONE: f64 = 1e-12;

/// Unitarity of a 2×2 matrix, `|U U† - I|_max`.
pub const UNITARY: f64 = 1e-10;

/// Hermiticity of a 2×2 matrix: the anti-Hermitian part is rejected above this.
pub const HERMITIAN: f64 = 1e-9;

/// `|det A - 1|` for SL(2,C).
pub const UNIMODULAR: f64 = 1e-10;

/// Block identities of U(2,2), relative to `max(1, |M|_max^2)`.
pub const PSEUDO_UNITARY: f64 = 1e-10;

/// Imaginary residue allowed when reading off `L(R)` by Frobenius pairing.
pub const VECTOR_REP_RESIDUE: f64 = 1e-9;

/// Smallest `|det(CU + D)|` accepted by the fractional linear action.
pub const ACTION_SINGULAR: f64 = 1e-12;

/// Total isotropy of twistor vectors and planes, relative to the norms.
pub const ISOTROPIC: f64 = 1e-10;

/// Line-in-plane residual and line orthogonality, relative to the norms.
pub const INCIDENCE: f64 = 1e-9;

/// Point versus sphere: `|t|` after rescaling to `x5 - x6 = 1`.
pub const POINT_RADIUS: f64 = 1e-9;

/// Sign-fix threshold for projective representatives.
pub const SIGN_FIX: f64 = 1e-12;

/// Light-source projection: points with `x1 >= 2 - SOURCE_PLANE` are rejected.
pub const SOURCE_PLANE: f64 = 1e-12;

/// Stereographic projection divisor.
pub const PROJECTION_POLE: f64 = 1e-12;

/// `|cos psi|` at or below which an angle is treated as `pi/2`.
pub const RIGHT_ANGLE: f64 = 1e-12;
