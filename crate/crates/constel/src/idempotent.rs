//! Symmetric idempotents (Hermitian projectors), complete orthogonal sets of
//! them, and the constructors used to build constellation members: rank-1
//! projectors from unit vectors, rational and angle-parametrized 2x2
//! idempotents, Gaussian-integer idempotents, and sets read off the rows of a
//! unitary matrix.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::{tol, Complex64};

/// Complex vector with squared norm 1.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector {
    entries: Vec<Complex64>,
}

impl UnitVector {
    /// Validates that the squared norm is 1 within `tol::UNIT_NORM`.
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("unit vector must have at least one entry".into()));
        }
        if let Some(col) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteEntry { row: col, col: 0 });
        }
        let norm_sqr: f64 = entries.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (norm_sqr - 1.0).abs();
        if !(deviation <= tol::UNIT_NORM) {
            return Err(Error::NotUnitVector { deviation });
        }
        Ok(Self { entries })
    }

    /// Scales the input to unit norm. Errors on (numerically) zero input.
    pub fn normalized(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("unit vector must have at least one entry".into()));
        }
        if let Some(col) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFiniteEntry { row: col, col: 0 });
        }
        let norm = entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !(norm > 1e-12) {
            return Err(Error::InvalidParameter("cannot normalize a zero vector".into()));
        }
        let scaled = entries.into_iter().map(|z| z / norm).collect();
        Ok(Self { entries: scaled })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Representative of the projective class: a global phase is applied so
    /// the first entry of modulus above 1e-12 becomes real and positive.
    pub fn canonicalized(&self) -> UnitVector {
        match self.entries.iter().find(|z| z.norm() > 1e-12) {
            Some(pivot) => {
                let phase = pivot.conj() / pivot.norm();
                let entries = self.entries.iter().map(|z| z * phase).collect();
                UnitVector { entries }
            }
            None => self.clone(),
        }
    }
}

/// Hermitian idempotent matrix (E^2 = E, E* = E) with its rank recovered from
/// the trace.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricIdempotent {
    matrix: ComplexMatrix,
    rank: usize,
}

impl SymmetricIdempotent {
    /// Validates idempotency within `tol::IDEMPOTENCY`, Hermiticity within
    /// `tol::HERMITICITY`, and that the trace is within `tol::TRACE_RANK` of a
    /// nonnegative integer (the rank).
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if let Some((row, col)) = matrix.non_finite_entry() {
            return Err(Error::NonFiniteEntry { row, col });
        }
        let hermiticity = matrix.hermiticity_residual();
        if !(hermiticity <= tol::HERMITICITY) {
            return Err(Error::NotHermitian { residual: hermiticity });
        }
        let square = matrix.mat_mul(&matrix).expect("square matrix");
        let idempotency = square.max_abs_diff(&matrix);
        if !(idempotency <= tol::IDEMPOTENCY) {
            return Err(Error::NotIdempotent { residual: idempotency });
        }
        let trace = matrix.trace().re;
        let rounded = trace.round();
        if !((trace - rounded).abs() <= tol::TRACE_RANK)
            || rounded < 0.0
            || rounded > matrix.rows() as f64
        {
            return Err(Error::NonIntegralTrace { trace, tolerance: tol::TRACE_RANK });
        }
        Ok(Self { matrix, rank: rounded as usize })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.matrix.rows()
    }

    /// Rank-1 idempotents are the primitive ones.
    pub fn is_primitive(&self) -> bool {
        self.rank == 1
    }
}

/// Family of mutually orthogonal symmetric idempotents summing to the
/// identity, with ranks summing to the order.
#[derive(Clone, Debug, PartialEq)]
pub struct CompleteOrthogonalSet {
    order: usize,
    members: Vec<SymmetricIdempotent>,
}

impl CompleteOrthogonalSet {
    /// Validates pairwise orthogonality within `tol::ORTHOGONALITY`,
    /// completeness within `tol::COMPLETENESS`, and the rank sum.
    pub fn from_members(members: Vec<SymmetricIdempotent>) -> Result<Self> {
        let first = members.first().ok_or(Error::TooFewMembers { found: 0, required: 1 })?;
        let order = first.order();
        for member in &members {
            if member.order() != order {
                return Err(Error::DimensionMismatch {
                    context: "complete orthogonal set members",
                    left_rows: order,
                    left_cols: order,
                    right_rows: member.order(),
                    right_cols: member.order(),
                });
            }
        }
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let product = members[i]
                    .matrix()
                    .mat_mul(members[j].matrix())
                    .expect("members share the order");
                let residual = product.max_abs();
                if !(residual <= tol::ORTHOGONALITY) {
                    return Err(Error::NotOrthogonal { i, j, residual });
                }
            }
        }
        let mut sum = ComplexMatrix::zeros(order, order);
        for member in &members {
            sum = &sum + member.matrix();
        }
        let completeness = sum.max_abs_diff(&ComplexMatrix::identity(order));
        if !(completeness <= tol::COMPLETENESS) {
            return Err(Error::NotComplete { residual: completeness });
        }
        let rank_sum: usize = members.iter().map(|m| m.rank()).sum();
        if rank_sum != order {
            return Err(Error::RankSumMismatch { expected: order, found: rank_sum });
        }
        Ok(Self { order, members })
    }

    /// The n diagonal unit projectors diag(0, ..., 1, ..., 0).
    ///
    /// Panics if `n == 0`.
    pub fn diagonal(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        let members = (0..n)
            .map(|i| {
                let m = ComplexMatrix::from_fn(n, n, |r, c| {
                    if r == i && c == i {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                });
                SymmetricIdempotent::new(m).expect("diagonal unit projector")
            })
            .collect();
        Self { order: n, members }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[SymmetricIdempotent] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &SymmetricIdempotent {
        &self.members[i]
    }
}

/// Gaussian integer a + bi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(self) -> i128 {
        let re = self.re as i128;
        let im = self.im as i128;
        re * re + im * im
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, 1) => write!(f, "{re}+i"),
            (re, -1) => write!(f, "{re}-i"),
            (re, im) if im > 0 => write!(f, "{re}+{im}i"),
            (re, im) => write!(f, "{re}{im}i"),
        }
    }
}

impl FromStr for GaussianInt {
    type Err = Error;

    /// Accepts forms like "0", "-3", "i", "-i", "2i", "1+2i", "1-i", "-2+3i".
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let invalid = || Error::InvalidParameter(format!("cannot parse Gaussian integer from {s:?}"));
        if body.is_empty() {
            return Err(invalid());
        }
        if let Some(head) = body.strip_suffix(['i', 'I']) {
            // Split off the real part at the last interior sign.
            let split = head
                .char_indices()
                .rev()
                .find(|&(k, c)| (c == '+' || c == '-') && k > 0)
                .map(|(k, _)| k);
            let (re_part, im_part) = match split {
                Some(k) => (&head[..k], &head[k..]),
                None => ("", head),
            };
            let re = if re_part.is_empty() { 0 } else { re_part.parse().map_err(|_| invalid())? };
            let im = match im_part {
                "" | "+" => 1,
                "-" => -1,
                digits => digits.parse().map_err(|_| invalid())?,
            };
            Ok(GaussianInt::new(re, im))
        } else {
            let re = body.parse().map_err(|_| invalid())?;
            Ok(GaussianInt::new(re, 0))
        }
    }
}

/// Projector v v* onto the span of a unit vector; always rank 1.
pub fn rank1_projector(v: &UnitVector) -> SymmetricIdempotent {
    let e = v.entries();
    let n = e.len();
    let matrix = ComplexMatrix::from_fn(n, n, |j, k| e[j] * e[k].conj());
    SymmetricIdempotent::new(matrix).expect("outer product of a unit vector is a projector")
}

/// I - E, the projector onto the orthogonal complement.
pub fn complement(e: &SymmetricIdempotent) -> SymmetricIdempotent {
    let n = e.order();
    let matrix = &ComplexMatrix::identity(n) - e.matrix();
    SymmetricIdempotent::new(matrix).expect("complement of a symmetric idempotent")
}

/// One rank-1 projector per row of a unitary matrix: E_r[j][k] =
/// p[r][j] * conj(p[r][k]). The rows are orthonormal, so the projectors form
/// a complete orthogonal set.
pub fn complete_set_from_unitary_rows(p: &ComplexMatrix) -> Result<CompleteOrthogonalSet> {
    if !p.is_square() {
        return Err(Error::NotSquare { rows: p.rows(), cols: p.cols() });
    }
    let residual = p.unitarity_residual();
    if !(residual <= tol::UNITARITY) {
        return Err(Error::NotUnitary { residual, tolerance: tol::UNITARITY });
    }
    let n = p.rows();
    let mut members = Vec::with_capacity(n);
    for r in 0..n {
        let row = p.row(r);
        let matrix = ComplexMatrix::from_fn(n, n, |j, k| row[j] * row[k].conj());
        members.push(SymmetricIdempotent::new(matrix)?);
    }
    CompleteOrthogonalSet::from_members(members)
}

/// 2x2 idempotent with rational diagonal:
/// [[p/q, sqrt(p(q-p))/q], [sqrt(p(q-p))/q, (q-p)/q]] for integers 0 < p < q.
pub fn rational_idempotent(p: u64, q: u64) -> Result<SymmetricIdempotent> {
    if p == 0 {
        return Err(Error::InvalidParameter("numerator p must be positive".into()));
    }
    if p >= q {
        return Err(Error::InvalidParameter(format!("require p < q, got p = {p}, q = {q}")));
    }
    let product = p
        .checked_mul(q - p)
        .ok_or_else(|| Error::InvalidParameter(format!("p(q - p) overflows for p = {p}, q = {q}")))?;
    let qf = q as f64;
    let diag0 = p as f64 / qf;
    let diag1 = (q - p) as f64 / qf;
    let off = (product as f64).sqrt() / qf;
    let matrix = ComplexMatrix::from_rows(&[
        vec![Complex64::new(diag0, 0.0), Complex64::new(off, 0.0)],
        vec![Complex64::new(off, 0.0), Complex64::new(diag1, 0.0)],
    ])?;
    SymmetricIdempotent::new(matrix)
}

/// 2x2 idempotent [[cos^2 t, cos t sin t], [cos t sin t, sin^2 t]],
/// the projector onto the direction (cos t, sin t).
///
/// Panics on non-finite input.
pub fn angle_idempotent(theta: f64) -> SymmetricIdempotent {
    assert!(theta.is_finite(), "angle must be finite");
    let (sin, cos) = theta.sin_cos();
    let matrix = ComplexMatrix::from_rows(&[
        vec![Complex64::new(cos * cos, 0.0), Complex64::new(cos * sin, 0.0)],
        vec![Complex64::new(cos * sin, 0.0), Complex64::new(sin * sin, 0.0)],
    ])
    .expect("finite entries");
    SymmetricIdempotent::new(matrix).expect("projector onto (cos t, sin t)")
}

/// Rank-1 idempotent from a Gaussian-integer pair (a, b):
/// (1/t) [[a a*, a b*], [b a*, b b*]] with t = |a|^2 + |b|^2 computed in
/// exact integer arithmetic. Errors when a = b = 0.
pub fn gaussian_idempotent(a: GaussianInt, b: GaussianInt) -> Result<SymmetricIdempotent> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidParameter("Gaussian pair (0, 0) spans no direction".into()));
    }
    let t = (a.norm_sqr() + b.norm_sqr()) as f64;
    // a * conj(b) in exact integer arithmetic.
    let cross_re = (a.re as i128) * (b.re as i128) + (a.im as i128) * (b.im as i128);
    let cross_im = (a.im as i128) * (b.re as i128) - (a.re as i128) * (b.im as i128);
    let upper = Complex64::new(cross_re as f64 / t, cross_im as f64 / t);
    let matrix = ComplexMatrix::from_rows(&[
        vec![Complex64::new(a.norm_sqr() as f64 / t, 0.0), upper],
        vec![upper.conj(), Complex64::new(b.norm_sqr() as f64 / t, 0.0)],
    ])?;
    SymmetricIdempotent::new(matrix)
}

/// Residual-level view of a family of idempotents. Unlike the validating
/// constructors, this never fails: it reports the numbers and lets the caller
/// decide.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub order: usize,
    /// Per member: max |E^2 - E|.
    pub idempotency: Vec<f64>,
    /// Per member: max |E - E*|.
    pub hermiticity: Vec<f64>,
    /// For each pair i < j: (i, j, max |E_i E_j|).
    pub orthogonality: Vec<(usize, usize, f64)>,
    /// max |sum E_i - I|.
    pub completeness: f64,
    pub ranks: Vec<usize>,
    pub rank_sum_matches: bool,
    pub primitive: Vec<bool>,
}

impl ValidationReport {
    /// True when every residual is within the tolerances the validating
    /// constructors enforce.
    pub fn passes(&self) -> bool {
        self.idempotency.iter().all(|&r| r <= tol::IDEMPOTENCY)
            && self.hermiticity.iter().all(|&r| r <= tol::HERMITICITY)
            && self.orthogonality.iter().all(|&(_, _, r)| r <= tol::ORTHOGONALITY)
            && self.completeness <= tol::COMPLETENESS
            && self.rank_sum_matches
    }
}

/// Recomputes every defining residual of the family.
///
/// Panics if the slice is empty or the orders disagree (structural misuse,
/// not a numeric failure).
pub fn validate_set(members: &[SymmetricIdempotent]) -> ValidationReport {
    let order = members.first().expect("at least one member").order();
    assert!(
        members.iter().all(|m| m.order() == order),
        "members must share one order"
    );
    let idempotency = members
        .iter()
        .map(|m| {
            let sq = m.matrix().mat_mul(m.matrix()).expect("square");
            sq.max_abs_diff(m.matrix())
        })
        .collect();
    let hermiticity = members.iter().map(|m| m.matrix().hermiticity_residual()).collect();
    let mut orthogonality = Vec::new();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let product = members[i]
                .matrix()
                .mat_mul(members[j].matrix())
                .expect("members share the order");
            orthogonality.push((i, j, product.max_abs()));
        }
    }
    let mut sum = ComplexMatrix::zeros(order, order);
    for member in members {
        sum = &sum + member.matrix();
    }
    let completeness = sum.max_abs_diff(&ComplexMatrix::identity(order));
    let ranks: Vec<usize> = members.iter().map(|m| m.rank()).collect();
    let rank_sum_matches = ranks.iter().sum::<usize>() == order;
    let primitive = members.iter().map(|m| m.is_primitive()).collect();
    ValidationReport {
        order,
        idempotency,
        hermiticity,
        orthogonality,
        completeness,
        ranks,
        rank_sum_matches,
        primitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
        a.max_abs_diff(b) <= tol
    }

    #[test]
    fn unit_vector_accepts_unit_norm() {
        let v = UnitVector::new(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        assert_eq!(v.dimension(), 2);
    }

    #[test]
    fn unit_vector_rejects_wrong_norm() {
        let err = UnitVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotUnitVector { .. }));
    }

    #[test]
    fn normalized_scales_and_rejects_zero() {
        let v = UnitVector::normalized(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert!((v.entries()[0].re - 0.6).abs() <= 1e-15);
        assert!((v.entries()[1].im - 0.8).abs() <= 1e-15);
        assert!(UnitVector::normalized(vec![c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn canonicalized_makes_first_nonzero_entry_real_positive() {
        let phase = Complex64::from_polar(1.0, 1.234);
        let v = UnitVector::new(vec![c(0.0, 0.0), c(0.0, 0.6) * phase, c(0.8, 0.0) * phase])
            .unwrap();
        let canon = v.canonicalized();
        assert!(canon.entries()[1].im.abs() <= 1e-15);
        assert!(canon.entries()[1].re > 0.0);
        // Canonical form is a projective invariant.
        let w = UnitVector::new(vec![c(0.0, 0.0), c(0.0, 0.6), c(0.8, 0.0)]).unwrap();
        for (x, y) in canon.entries().iter().zip(w.canonicalized().entries()) {
            assert!((x - y).norm() <= 1e-12);
        }
    }

    #[test]
    fn rank1_projector_matches_definition() {
        let v = UnitVector::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let e = rank1_projector(&v);
        assert_eq!(e.rank(), 1);
        assert!(e.is_primitive());
        let expected = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(close(e.matrix(), &expected, 1e-15));
    }

    #[test]
    fn rank1_projector_on_complex_vector() {
        let scale = 10.0_f64.sqrt();
        let v = UnitVector::new(vec![c(1.0 / scale, 2.0 / scale), c(2.0 / scale, 1.0 / scale)])
            .unwrap();
        let e = rank1_projector(&v);
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.4, 0.3)],
            vec![c(0.4, -0.3), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(close(e.matrix(), &expected, 1e-15));
    }

    #[test]
    fn rank1_projector_is_projectively_invariant() {
        let base = vec![c(0.6, 0.0), c(0.0, 0.8)];
        let phase = Complex64::from_polar(1.0, -2.1);
        let rotated: Vec<Complex64> = base.iter().map(|z| z * phase).collect();
        let e1 = rank1_projector(&UnitVector::new(base).unwrap());
        let e2 = rank1_projector(&UnitVector::new(rotated).unwrap());
        assert!(close(e1.matrix(), e2.matrix(), 1e-10));
    }

    #[test]
    fn complement_swaps_diagonal_projector() {
        let v = UnitVector::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let e = rank1_projector(&v);
        let comp = complement(&e);
        assert_eq!(comp.rank(), 1);
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        assert!(close(comp.matrix(), &expected, 1e-15));
        // Involution.
        assert!(close(complement(&comp).matrix(), e.matrix(), 1e-15));
    }

    #[test]
    fn complement_rank_is_order_minus_rank() {
        let set = CompleteOrthogonalSet::diagonal(5);
        let e = set.member(2);
        assert_eq!(complement(e).rank(), 4);
    }

    #[test]
    fn projector_and_complement_form_complete_set() {
        let e = rational_idempotent(4, 7).unwrap();
        let comp = complement(&e);
        let set = CompleteOrthogonalSet::from_members(vec![e, comp]).unwrap();
        assert_eq!(set.size(), 2);
        assert_eq!(set.order(), 2);
    }

    #[test]
    fn rows_of_identity_give_diagonal_projectors() {
        let set = complete_set_from_unitary_rows(&ComplexMatrix::identity(3)).unwrap();
        let diag = CompleteOrthogonalSet::diagonal(3);
        for (a, b) in set.members().iter().zip(diag.members()) {
            assert!(close(a.matrix(), b.matrix(), 1e-15));
        }
    }

    #[test]
    fn rows_example_with_mixed_signs() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = ComplexMatrix::from_rows(&[
            vec![c(-s, 0.0), c(0.0, -s)],
            vec![c(0.0, s), c(s, 0.0)],
        ])
        .unwrap();
        let set = complete_set_from_unitary_rows(&p).unwrap();
        let first = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.0, -0.5)],
            vec![c(0.0, 0.5), c(0.5, 0.0)],
        ])
        .unwrap();
        let second = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.0, 0.5)],
            vec![c(0.0, -0.5), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(close(set.member(0).matrix(), &first, 1e-12));
        assert!(close(set.member(1).matrix(), &second, 1e-12));
    }

    #[test]
    fn rows_of_dft_form_complete_sets() {
        for n in [2, 4, 8] {
            let set = complete_set_from_unitary_rows(&ComplexMatrix::dft(n)).unwrap();
            assert_eq!(set.size(), n);
            assert!(set.members().iter().all(|e| e.rank() == 1));
        }
    }

    #[test]
    fn rows_of_non_unitary_rejected() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(
            complete_set_from_unitary_rows(&m),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn rational_idempotent_examples() {
        let half = rational_idempotent(1, 2).unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.5, 0.0)],
            vec![c(0.5, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(close(half.matrix(), &expected, 1e-15));

        let e = rational_idempotent(4, 7).unwrap();
        let off = 12.0_f64.sqrt() / 7.0;
        let expected = ComplexMatrix::from_rows(&[
            vec![c(4.0 / 7.0, 0.0), c(off, 0.0)],
            vec![c(off, 0.0), c(3.0 / 7.0, 0.0)],
        ])
        .unwrap();
        assert!(close(e.matrix(), &expected, 1e-15));
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn rational_idempotent_rejects_bad_parameters() {
        assert!(rational_idempotent(0, 3).is_err());
        assert!(rational_idempotent(3, 3).is_err());
        assert!(rational_idempotent(5, 3).is_err());
    }

    #[test]
    fn angle_idempotent_examples() {
        let at_zero = angle_idempotent(0.0);
        assert!((at_zero.matrix()[(0, 0)].re - 1.0).abs() <= 1e-15);
        assert!(at_zero.matrix()[(1, 1)].norm() <= 1e-15);

        let quarter = angle_idempotent(std::f64::consts::FRAC_PI_4);
        let halves = rational_idempotent(1, 2).unwrap();
        assert!(close(quarter.matrix(), halves.matrix(), 1e-12));
    }

    #[test]
    fn angle_and_rational_constructors_agree_on_arctan_sqrt_k() {
        for k in 1..=8u64 {
            let theta = (k as f64).sqrt().atan();
            let from_angle = angle_idempotent(theta);
            let from_rational = rational_idempotent(1, k + 1).unwrap();
            assert!(
                close(from_angle.matrix(), from_rational.matrix(), 1e-12),
                "k = {k}"
            );
        }
    }

    #[test]
    fn gaussian_idempotent_examples() {
        let e = gaussian_idempotent(GaussianInt::new(1, 3), GaussianInt::new(3, 1)).unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.3, 0.4)],
            vec![c(0.3, -0.4), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(close(e.matrix(), &expected, 1e-15));

        let e = gaussian_idempotent(GaussianInt::new(2, 3), GaussianInt::new(1, 1)).unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(13.0 / 15.0, 0.0), c(5.0 / 15.0, 1.0 / 15.0)],
            vec![c(5.0 / 15.0, -1.0 / 15.0), c(2.0 / 15.0, 0.0)],
        ])
        .unwrap();
        assert!(close(e.matrix(), &expected, 1e-15));
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn gaussian_idempotent_rejects_zero_pair() {
        assert!(gaussian_idempotent(GaussianInt::new(0, 0), GaussianInt::new(0, 0)).is_err());
    }

    #[test]
    fn gaussian_int_display_forms() {
        let cases = [
            (GaussianInt::new(0, 0), "0"),
            (GaussianInt::new(3, 0), "3"),
            (GaussianInt::new(-2, 0), "-2"),
            (GaussianInt::new(0, 1), "i"),
            (GaussianInt::new(0, -1), "-i"),
            (GaussianInt::new(0, 2), "2i"),
            (GaussianInt::new(1, 2), "1+2i"),
            (GaussianInt::new(1, -1), "1-i"),
            (GaussianInt::new(-2, 3), "-2+3i"),
            (GaussianInt::new(-2, -3), "-2-3i"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<GaussianInt>().unwrap(), value, "{text}");
        }
    }

    #[test]
    fn gaussian_int_parse_rejects_garbage() {
        for bad in ["", "x", "1+", "+", "ii", "1+2j"] {
            assert!(bad.parse::<GaussianInt>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn symmetric_idempotent_rejects_non_hermitian() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.5, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert!(matches!(SymmetricIdempotent::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn symmetric_idempotent_rejects_non_idempotent() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(0.5, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(0.5, 0.0)],
        ])
        .unwrap();
        assert!(matches!(SymmetricIdempotent::new(m), Err(Error::NotIdempotent { .. })));
    }

    #[test]
    fn complete_set_rejects_overlapping_members() {
        let e = rational_idempotent(1, 2).unwrap();
        let err = CompleteOrthogonalSet::from_members(vec![e.clone(), e]).unwrap_err();
        assert!(matches!(err, Error::NotOrthogonal { i: 0, j: 1, .. }));
    }

    #[test]
    fn complete_set_rejects_incomplete_family() {
        let set = CompleteOrthogonalSet::diagonal(3);
        let err =
            CompleteOrthogonalSet::from_members(vec![set.member(0).clone(), set.member(1).clone()])
                .unwrap_err();
        assert!(matches!(err, Error::NotComplete { .. }));
    }

    #[test]
    fn validate_set_reports_clean_diagonal_family() {
        let set = CompleteOrthogonalSet::diagonal(4);
        let report = validate_set(set.members());
        assert!(report.passes());
        assert_eq!(report.ranks, vec![1, 1, 1, 1]);
        assert!(report.primitive.iter().all(|&p| p));
        assert!(report.completeness <= 1e-15);
    }

    #[test]
    fn validate_set_flags_duplicated_member() {
        let e = rational_idempotent(1, 2).unwrap();
        let report = validate_set(&[e.clone(), e]);
        assert!(!report.passes());
        assert!(report.orthogonality[0].2 > 0.4);
        assert!(report.completeness > 0.4);
        assert!(!report.rank_sum_matches);
    }

    #[test]
    fn validate_set_accepts_projector_pair_from_rows() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = ComplexMatrix::from_rows(&[
            vec![c(-s, 0.0), c(0.0, -s)],
            vec![c(0.0, s), c(s, 0.0)],
        ])
        .unwrap();
        let set = complete_set_from_unitary_rows(&p).unwrap();
        let report = validate_set(set.members());
        assert!(report.passes());
        assert_eq!(report.ranks, vec![1, 1]);
    }

    #[test]
    fn random_unitary_rows_give_valid_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for n in 2..=6 {
            let u = crate::random::random_unitary(&mut rng, n);
            let set = complete_set_from_unitary_rows(&u).unwrap();
            assert!(validate_set(set.members()).passes());
        }
    }

    proptest! {
        #[test]
        fn prop_rational_idempotents_validate(p in 1u64..200, gap in 1u64..200) {
            let q = p + gap;
            let e = rational_idempotent(p, q).unwrap();
            let sq = e.matrix().mat_mul(e.matrix()).unwrap();
            prop_assert!(sq.max_abs_diff(e.matrix()) <= 1e-12);
            prop_assert!(e.matrix().hermiticity_residual() <= 1e-15);
            prop_assert_eq!(e.rank(), 1);
        }

        #[test]
        fn prop_angle_idempotents_validate(theta in -10.0f64..10.0) {
            let e = angle_idempotent(theta);
            let sq = e.matrix().mat_mul(e.matrix()).unwrap();
            prop_assert!(sq.max_abs_diff(e.matrix()) <= 1e-12);
            prop_assert_eq!(e.rank(), 1);
        }

        #[test]
        fn prop_gaussian_idempotents_validate(
            ar in -20i64..=20, ai in -20i64..=20,
            br in -20i64..=20, bi in -20i64..=20,
        ) {
            let a = GaussianInt::new(ar, ai);
            let b = GaussianInt::new(br, bi);
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let e = gaussian_idempotent(a, b).unwrap();
            let sq = e.matrix().mat_mul(e.matrix()).unwrap();
            prop_assert!(sq.max_abs_diff(e.matrix()) <= 1e-12);
            prop_assert!((e.matrix().trace().re - 1.0).abs() <= 1e-12);
            prop_assert_eq!(e.rank(), 1);
        }

        #[test]
        fn prop_random_projectors_validate(
            parts in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..6),
        ) {
            let entries: Vec<Complex64> = parts.iter().map(|&(re, im)| c(re, im)).collect();
            let norm = entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            prop_assume!(norm > 0.1);
            let v = UnitVector::normalized(entries).unwrap();
            let e = rank1_projector(&v);
            let sq = e.matrix().mat_mul(e.matrix()).unwrap();
            prop_assert!(sq.max_abs_diff(e.matrix()) <= 1e-12);
            prop_assert_eq!(e.rank(), 1);
            // Complement completes the family.
            let set = CompleteOrthogonalSet::from_members(vec![e.clone(), complement(&e)]);
            prop_assert!(set.is_ok());
        }

        #[test]
        fn prop_gaussian_int_round_trips(re in -999i64..=999, im in -999i64..=999) {
            let g = GaussianInt::new(re, im);
            prop_assert_eq!(g.to_string().parse::<GaussianInt>().unwrap(), g);
        }
    }
}
