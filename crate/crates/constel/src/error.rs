//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },

    #[error("entry ({row}, {col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("{context}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix is not unitary: max |UU* - I| = {residual:.3e} exceeds {tolerance:.1e}")]
    NotUnitary { residual: f64, tolerance: f64 },

    #[error("block identity premise {identity} fails: residual {residual:.3e} exceeds {tolerance:.1e}")]
    BlockConditionNotSatisfied {
        identity: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("eigen iteration did not converge after {sweeps} sweeps: off-diagonal {residual:.3e}")]
    ConvergenceFailure { sweeps: usize, residual: f64 },

    #[error("vector is not unit length: | ||v||^2 - 1 | = {deviation:.3e}")]
    NotUnitVector { deviation: f64 },

    #[error("matrix is not idempotent: max |E^2 - E| = {residual:.3e}")]
    NotIdempotent { residual: f64 },

    #[error("matrix is not Hermitian: max |E - E*| = {residual:.3e}")]
    NotHermitian { residual: f64 },

    #[error("trace {trace} is not within {tolerance:.1e} of an integer rank")]
    NonIntegralTrace { trace: f64, tolerance: f64 },

    #[error("members {i} and {j} are not orthogonal: max |E_i E_j| = {residual:.3e}")]
    NotOrthogonal { i: usize, j: usize, residual: f64 },

    #[error("set is not complete: max |sum E_i - I| = {residual:.3e}")]
    NotComplete { residual: f64 },

    #[error("rank sum {found} does not match order {expected}")]
    RankSumMismatch { expected: usize, found: usize },

    #[error("{found} coefficients for a set of {expected} members")]
    CoefficientCountMismatch { expected: usize, found: usize },

    #[error("coefficient {index} has modulus {modulus}, expected 1")]
    NotUnitModulus { index: usize, modulus: f64 },

    #[error("coefficient {index} has modulus {modulus:.3e}; the combination is a zero divisor")]
    ZeroCoefficient { index: usize, modulus: f64 },

    #[error("labels {i} and {j} collide: {label}")]
    DuplicateLabel { i: usize, j: usize, label: String },

    #[error("members {label_a} and {label_b} coincide: max entry difference {residual:.3e}")]
    DuplicateMember {
        label_a: String,
        label_b: String,
        residual: f64,
    },

    #[error("orbit collision: {label_a} equals omega^{power}*{label_b} within {tolerance:.1e}")]
    OrbitCollision {
        label_a: String,
        label_b: String,
        power: usize,
        tolerance: f64,
    },

    #[error("member {label} is not unitary: max |UU* - I| = {residual:.3e} exceeds {tolerance:.1e}")]
    MemberNotUnitary {
        label: String,
        residual: f64,
        tolerance: f64,
    },

    #[error("constellation has {found} members, at least {required} required")]
    TooFewMembers { found: usize, required: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
