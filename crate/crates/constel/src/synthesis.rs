//! Building unitary matrices as phase combinations over a complete orthogonal
//! set, plus the closed forms that the eigenstructure makes cheap: inverses,
//! determinants from ranks, and reflections.

use crate::error::{Error, Result};
use crate::idempotent::{CompleteOrthogonalSet, SymmetricIdempotent};
use crate::matrix::ComplexMatrix;
use crate::{tol, Complex64};

/// Unit-modulus coefficient, optionally tagged as an exact root of unity
/// e^(2*pi*i*exponent/root_order). Tags keep exponent arithmetic in the
/// integers; the float value is derived from the tag, never the reverse.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseCoefficient {
    value: Complex64,
    tag: Option<(usize, usize)>,
}

impl PhaseCoefficient {
    /// e^(2*pi*i*exponent/root_order), exponent reduced mod root_order.
    pub fn from_root(root_order: usize, exponent: usize) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::InvalidParameter("root order must be positive".into()));
        }
        let reduced = exponent % root_order;
        let angle = std::f64::consts::TAU * reduced as f64 / root_order as f64;
        Ok(Self {
            value: Complex64::from_polar(1.0, angle),
            tag: Some((root_order, reduced)),
        })
    }

    /// Untagged phase; the modulus must be 1 within `tol::UNIT_MODULUS`.
    pub fn from_value(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if !((modulus - 1.0).abs() <= tol::UNIT_MODULUS) {
            return Err(Error::NotUnitModulus { index: 0, modulus });
        }
        Ok(Self { value, tag: None })
    }

    /// The coefficient 1 (tagged as the first root of unity).
    pub fn one() -> Self {
        Self { value: Complex64::new(1.0, 0.0), tag: Some((1, 0)) }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    /// (root_order, exponent) when the phase is an exact root of unity.
    pub fn root_tag(&self) -> Option<(usize, usize)> {
        self.tag
    }

    /// Multiplies by e^(2*pi*i*shift/root_order). When self carries a tag of
    /// the same root order the exponents are added in the integers and the
    /// value is recomputed exactly; otherwise the float values multiply and
    /// the tag is dropped.
    pub fn rotated_by_root(&self, root_order: usize, shift: usize) -> Result<Self> {
        let factor = Self::from_root(root_order, shift)?;
        match self.tag {
            Some((order, exponent)) if order == root_order => {
                Self::from_root(order, exponent + shift)
            }
            _ => Ok(Self { value: self.value * factor.value, tag: None }),
        }
    }
}

fn check_counts(set: &CompleteOrthogonalSet, found: usize) -> Result<()> {
    if set.size() != found {
        return Err(Error::CoefficientCountMismatch { expected: set.size(), found });
    }
    Ok(())
}

/// sum of coefficients[i] * E_i, with no constraint on the coefficients.
pub fn linear_combination(
    set: &CompleteOrthogonalSet,
    coefficients: &[Complex64],
) -> Result<ComplexMatrix> {
    check_counts(set, coefficients.len())?;
    let n = set.order();
    let mut sum = ComplexMatrix::zeros(n, n);
    for (coefficient, member) in coefficients.iter().zip(set.members()) {
        sum = &sum + &member.matrix().scaled(*coefficient);
    }
    Ok(sum)
}

/// sum of phases[i] * E_i. Unit-modulus coefficients over a complete
/// orthogonal set always give a unitary matrix; each phase modulus is checked
/// within `tol::COEFFICIENT_MODULUS`.
pub fn unitary_from_set(
    set: &CompleteOrthogonalSet,
    phases: &[PhaseCoefficient],
) -> Result<ComplexMatrix> {
    check_counts(set, phases.len())?;
    for (index, phase) in phases.iter().enumerate() {
        let modulus = phase.value().norm();
        if !((modulus - 1.0).abs() <= tol::COEFFICIENT_MODULUS) {
            return Err(Error::NotUnitModulus { index, modulus });
        }
    }
    let values: Vec<Complex64> = phases.iter().map(|p| p.value()).collect();
    linear_combination(set, &values)
}

/// 2E - I: the unitary reflection through the range of E.
pub fn reflection_unitary(e: &SymmetricIdempotent) -> ComplexMatrix {
    let n = e.order();
    &e.matrix().scaled(2.0) - &ComplexMatrix::identity(n)
}

/// Inverse of sum a_i E_i, namely sum (1/a_i) E_i. Every coefficient must
/// stay away from zero (`tol::ZERO_COEFFICIENT`).
pub fn inverse_via_idempotents(
    set: &CompleteOrthogonalSet,
    coefficients: &[Complex64],
) -> Result<ComplexMatrix> {
    check_counts(set, coefficients.len())?;
    let mut inverted = Vec::with_capacity(coefficients.len());
    for (index, a) in coefficients.iter().enumerate() {
        let modulus = a.norm();
        if !(modulus > tol::ZERO_COEFFICIENT) {
            return Err(Error::ZeroCoefficient { index, modulus });
        }
        inverted.push(a.inv());
    }
    linear_combination(set, &inverted)
}

/// Determinant of sum a_i E_i as the product of a_i^rank(E_i): the
/// combination is diagonal in any eigenbasis of the set, with a_i appearing
/// rank(E_i) times.
pub fn det_via_ranks(set: &CompleteOrthogonalSet, coefficients: &[Complex64]) -> Result<Complex64> {
    check_counts(set, coefficients.len())?;
    let mut product = Complex64::new(1.0, 0.0);
    for (a, member) in coefficients.iter().zip(set.members()) {
        product *= a.powu(member.rank() as u32);
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotent::{complete_set_from_unitary_rows, rational_idempotent, complement};
    use crate::random::{random_complete_set, random_nonzero_coefficients, random_phases};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rotation_set() -> CompleteOrthogonalSet {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = ComplexMatrix::from_rows(&[
            vec![c(-s, 0.0), c(0.0, -s)],
            vec![c(0.0, s), c(s, 0.0)],
        ])
        .unwrap();
        complete_set_from_unitary_rows(&p).unwrap()
    }

    #[test]
    fn all_ones_reproduce_identity() {
        let set = CompleteOrthogonalSet::diagonal(4);
        let u = unitary_from_set(&set, &vec![PhaseCoefficient::one(); 4]).unwrap();
        assert!(u.max_abs_diff(&ComplexMatrix::identity(4)) <= 1e-15);
    }

    #[test]
    fn conjugate_phases_on_projector_pair_give_rotation() {
        let set = rotation_set();
        let theta = 0.7f64;
        let phases = [
            PhaseCoefficient::from_value(Complex64::from_polar(1.0, theta)).unwrap(),
            PhaseCoefficient::from_value(Complex64::from_polar(1.0, -theta)).unwrap(),
        ];
        let u = unitary_from_set(&set, &phases).unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(theta.cos(), 0.0), c(theta.sin(), 0.0)],
            vec![c(-theta.sin(), 0.0), c(theta.cos(), 0.0)],
        ])
        .unwrap();
        assert!(u.max_abs_diff(&expected) <= 1e-12);
    }

    #[test]
    fn diagonal_set_synthesizes_diagonal_unitary() {
        let set = CompleteOrthogonalSet::diagonal(3);
        let phases = [
            PhaseCoefficient::from_root(8, 1).unwrap(),
            PhaseCoefficient::from_root(8, 3).unwrap(),
            PhaseCoefficient::from_root(8, 6).unwrap(),
        ];
        let u = unitary_from_set(&set, &phases).unwrap();
        for (i, phase) in phases.iter().enumerate() {
            assert!((u[(i, i)] - phase.value()).norm() <= 1e-15);
        }
        assert!(u.unitarity_residual() <= 1e-15);
    }

    #[test]
    fn count_mismatch_and_non_unit_coefficients_rejected() {
        let set = CompleteOrthogonalSet::diagonal(2);
        let err = unitary_from_set(&set, &[PhaseCoefficient::one()]).unwrap_err();
        assert!(matches!(err, Error::CoefficientCountMismatch { expected: 2, found: 1 }));

        let err = linear_combination(&set, &[c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::CoefficientCountMismatch { .. }));
    }

    #[test]
    fn reflection_examples() {
        let set = CompleteOrthogonalSet::diagonal(2);
        let r = reflection_unitary(set.member(0));
        let expected = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        assert!(r.max_abs_diff(&expected) <= 1e-15);

        // Reflection through [[1/2, 1/2], [1/2, 1/2]] is the swap matrix.
        let half = rational_idempotent(1, 2).unwrap();
        let swap = reflection_unitary(&half);
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(swap.max_abs_diff(&expected) <= 1e-15);
    }

    #[test]
    fn reflection_agrees_with_plus_minus_synthesis() {
        let e = rational_idempotent(4, 7).unwrap();
        let set = CompleteOrthogonalSet::from_members(vec![e.clone(), complement(&e)]).unwrap();
        let phases = [
            PhaseCoefficient::from_root(2, 0).unwrap(),
            PhaseCoefficient::from_root(2, 1).unwrap(),
        ];
        let via_set = unitary_from_set(&set, &phases).unwrap();
        let direct = reflection_unitary(&e);
        assert!(via_set.max_abs_diff(&direct) <= 1e-12);
        assert!(direct.unitarity_residual() <= 1e-12);
    }

    #[test]
    fn reflection_is_an_involution() {
        let e = rational_idempotent(3, 11).unwrap();
        let r = reflection_unitary(&e);
        let square = r.mat_mul(&r).unwrap();
        assert!(square.max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-12);
    }

    #[test]
    fn inverse_of_identity_coefficients_is_identity() {
        let set = CompleteOrthogonalSet::diagonal(3);
        let inv = inverse_via_idempotents(&set, &vec![c(1.0, 0.0); 3]).unwrap();
        assert!(inv.max_abs_diff(&ComplexMatrix::identity(3)) <= 1e-15);
    }

    #[test]
    fn inverse_of_unit_phases_is_conjugate_transpose() {
        let set = rotation_set();
        let phases = [Complex64::from_polar(1.0, 1.1), Complex64::from_polar(1.0, -0.4)];
        let u = linear_combination(&set, &phases).unwrap();
        let inv = inverse_via_idempotents(&set, &phases).unwrap();
        assert!(inv.max_abs_diff(&u.conj_transpose()) <= 1e-12);
    }

    #[test]
    fn inverse_rejects_zero_coefficient() {
        let set = CompleteOrthogonalSet::diagonal(2);
        let err = inverse_via_idempotents(&set, &[c(1.0, 0.0), c(0.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::ZeroCoefficient { index: 1, .. }));
    }

    #[test]
    fn det_via_ranks_examples() {
        let set = CompleteOrthogonalSet::diagonal(3);
        assert!((det_via_ranks(&set, &vec![c(1.0, 0.0); 3]).unwrap() - c(1.0, 0.0)).norm() <= 1e-15);

        let coefficients = [c(2.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)];
        let det = det_via_ranks(&set, &coefficients).unwrap();
        assert!((det - c(0.0, -2.0)).norm() <= 1e-15);

        // A zero coefficient zeroes the determinant.
        let det = det_via_ranks(&set, &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(det.norm() <= 1e-15);
    }

    #[test]
    fn det_via_ranks_uses_rank_as_multiplicity() {
        let set = CompleteOrthogonalSet::diagonal(4);
        let e = set.member(0).clone();
        let rest = complement(&e);
        assert_eq!(rest.rank(), 3);
        let pair = CompleteOrthogonalSet::from_members(vec![e, rest]).unwrap();
        let det = det_via_ranks(&pair, &[c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert!((det - c(54.0, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn phase_coefficient_tags() {
        let p = PhaseCoefficient::from_root(8, 11).unwrap();
        assert_eq!(p.root_tag(), Some((8, 3)));
        let q = PhaseCoefficient::from_root(8, 3).unwrap();
        assert!((p.value() - q.value()).norm() <= 1e-16);

        assert!(PhaseCoefficient::from_root(0, 1).is_err());
        assert!(PhaseCoefficient::from_value(c(0.5, 0.0)).is_err());
        assert_eq!(PhaseCoefficient::one().value(), c(1.0, 0.0));
    }

    #[test]
    fn phase_rotation_stays_in_integer_arithmetic() {
        let p = PhaseCoefficient::from_root(6, 4).unwrap();
        let q = p.rotated_by_root(6, 5).unwrap();
        assert_eq!(q.root_tag(), Some((6, 3)));
        let untagged = PhaseCoefficient::from_value(Complex64::from_polar(1.0, 0.3)).unwrap();
        let rotated = untagged.rotated_by_root(4, 1).unwrap();
        assert_eq!(rotated.root_tag(), None);
        assert!((rotated.value() - untagged.value() * c(0.0, 1.0)).norm() <= 1e-15);
    }

    proptest! {
        #[test]
        fn prop_synthesized_matrices_are_unitary(seed in 0u64..500, n in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_complete_set(&mut rng, n);
            let phases = random_phases(&mut rng, set.size());
            let u = unitary_from_set(&set, &phases).unwrap();
            prop_assert!(u.unitarity_residual() <= 1e-8);
        }

        #[test]
        fn prop_members_are_eigenprojectors(seed in 0u64..300, n in 2usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_complete_set(&mut rng, n);
            let phases = random_phases(&mut rng, set.size());
            let u = unitary_from_set(&set, &phases).unwrap();
            for (phase, member) in phases.iter().zip(set.members()) {
                let left = u.mat_mul(member.matrix()).unwrap();
                let right = member.matrix().scaled(phase.value());
                prop_assert!(left.max_abs_diff(&right) <= 1e-8);
            }
        }

        #[test]
        fn prop_inverse_multiplies_to_identity(seed in 0u64..300, n in 2usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_complete_set(&mut rng, n);
            let coefficients = random_nonzero_coefficients(&mut rng, set.size());
            let m = linear_combination(&set, &coefficients).unwrap();
            let inv = inverse_via_idempotents(&set, &coefficients).unwrap();
            let product = m.mat_mul(&inv).unwrap();
            prop_assert!(product.max_abs_diff(&ComplexMatrix::identity(n)) <= 1e-8);
        }

        #[test]
        fn prop_det_via_ranks_matches_lu(seed in 0u64..400, n in 2usize..7) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_complete_set(&mut rng, n);
            let coefficients = random_nonzero_coefficients(&mut rng, set.size());
            let m = linear_combination(&set, &coefficients).unwrap();
            let fast = det_via_ranks(&set, &coefficients).unwrap();
            let slow = m.determinant();
            let scale = fast.norm().max(slow.norm()).max(1e-3);
            prop_assert!((fast - slow).norm() <= 1e-9 * scale,
                "fast {fast} vs slow {slow}");
        }

        #[test]
        fn prop_round_trip_through_spectral_decomposition(seed in 0u64..200, n in 2usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let set = random_complete_set(&mut rng, n);
            let phases = random_phases(&mut rng, set.size());
            let u = unitary_from_set(&set, &phases).unwrap();
            let decomposition = crate::spectral::spectral_decompose_unitary(&u).unwrap();
            prop_assert!(decomposition.reconstruction_residual(&u) <= 1e-8);
        }
    }
}
