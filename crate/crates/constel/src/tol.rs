//! Numeric tolerances shared across the crate.
//!
//! These are max-entry (Chebyshev) thresholds unless stated otherwise. They
//! are sized for well-conditioned unitary inputs of order <= 16 in double
//! precision, with generous headroom above accumulated rounding.

/// Acceptance threshold for `max |U U* - I|` when a matrix must be unitary.
pub const UNITARITY: f64 = 1e-8;

/// Acceptance threshold for `max |E^2 - E|` when a matrix must be idempotent.
pub const IDEMPOTENCY: f64 = 1e-8;

/// Acceptance threshold for `max |E - E*|` when a matrix must be Hermitian.
pub const HERMITICITY: f64 = 1e-10;

/// Pairwise orthogonality threshold for `max |E_i E_j|`, i != j.
pub const ORTHOGONALITY: f64 = 1e-8;

/// Completeness threshold for `max |sum E_i - I|`.
pub const COMPLETENESS: f64 = 1e-8;

/// Relative tolerance for determinant comparisons.
pub const DET_RELATIVE: f64 = 1e-9;

/// Absolute floor under which determinant comparisons switch to absolute.
pub const DET_ABSOLUTE_FLOOR: f64 = 1e-12;

/// Unit-norm deviation allowed for vectors, `| ||v|| - 1 |`.
pub const UNIT_NORM: f64 = 1e-10;

/// Distance between a trace and the nearest integer when extracting ranks.
pub const TRACE_RANK: f64 = 1e-6;

/// Max-entry threshold below which two constellation members are duplicates.
pub const DUPLICATE: f64 = 1e-10;

/// Modulus deviation allowed for phase coefficients, `| |z| - 1 |`.
pub const UNIT_MODULUS: f64 = 1e-12;

/// Modulus deviation allowed for synthesis coefficients (unitary_from_set).
pub const COEFFICIENT_MODULUS: f64 = 1e-10;

/// Coefficients with modulus at or below this are zero divisors.
pub const ZERO_COEFFICIENT: f64 = 1e-12;

/// Premise residual allowed for the commuting block determinant identities.
pub const BLOCK_COMMUTE: f64 = 1e-8;

/// Max-entry threshold under which a block counts as the zero matrix.
pub const BLOCK_ZERO: f64 = 1e-12;

/// Decimal places used to bucket pairwise distances into a distribution.
pub const DISTRIBUTION_DECIMALS: i32 = 12;

/// Default threshold on `|det(A - B)|` for full-diversity checks.
pub const DIVERSITY: f64 = 1e-9;

/// Slack in the determinant-modulus comparison |det(A - wB)| >= |det(A - B)|.
pub const MODULUS_SLACK: f64 = 1e-9;
