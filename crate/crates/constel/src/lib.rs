//! Unitary constellations built from complete orthogonal sets of symmetric
//! idempotents (orthogonal projectors).
//!
//! A constellation is a finite set of same-order unitary matrices. Its
//! quality is the diversity product `zeta = 1/2 * min |det(A - B)|^(1/M)`
//! over distinct pairs, and its rate is `log2(L)/M`. This crate provides:
//!
//! - dense complex matrix arithmetic with LU determinants and block
//!   determinant identities ([`matrix`]);
//! - spectral decomposition of unitary matrices into unit-modulus phases and
//!   rank-1 projectors ([`spectral`]);
//! - validated symmetric idempotents and complete orthogonal sets, with all
//!   the standard rank-1 constructors ([`idempotent`]);
//! - synthesis of unitaries `sum alpha_i E_i`, exact determinants via ranks,
//!   and inverses via coefficient reciprocals ([`synthesis`]);
//! - constellation containers, quality/distance reports, the exact cyclic
//!   diversity criterion, and the five concrete families ([`constellation`],
//!   [`families`]);
//! - composition operators: negation closure, root-of-unity extension, and
//!   tangle doubling ([`extension`]);
//! - seeded random unitaries and complete sets for testing ([`random`]).

pub type Complex64 = num_complex::Complex<f64>;

pub mod constellation;
pub mod error;
pub mod extension;
pub mod families;
pub mod idempotent;
pub mod matrix;
pub mod random;
pub mod spectral;
pub mod synthesis;
pub mod tol;

pub use constellation::{distance, is_fully_diverse, quality, Constellation, DiversityCheck, FamilyMetadata, QualityReport};
pub use error::{Error, Result};
pub use extension::{negate_extend, omega_extend, tangle, tangle_extend, TangleVariant};
pub use idempotent::{CompleteOrthogonalSet, GaussianInt, SymmetricIdempotent, UnitVector};
pub use matrix::{BlockIdentity, ComplexMatrix};
pub use spectral::SpectralDecomposition;
pub use synthesis::PhaseCoefficient;
