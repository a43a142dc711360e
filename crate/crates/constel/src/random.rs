//! Random generation of test objects: Gaussian complex entries, Haar-style
//! unitaries via modified Gram-Schmidt, and complete orthogonal sets built
//! from unitary rows.

use rand::Rng;

use crate::idempotent::CompleteOrthogonalSet;
use crate::matrix::ComplexMatrix;
use crate::synthesis::PhaseCoefficient;
use crate::Complex64;

/// One sample of a rotation-invariant complex Gaussian (Box-Muller).
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    // 1 - u keeps the argument of ln strictly positive.
    let u: f64 = 1.0 - rng.gen::<f64>();
    let v: f64 = rng.gen();
    let radius = (-2.0 * u.ln()).sqrt();
    let angle = std::f64::consts::TAU * v;
    Complex64::new(radius * angle.cos(), radius * angle.sin())
}

/// Random n x n unitary: Gaussian matrix orthonormalized column by column.
///
/// Panics if `n == 0`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    assert!(n > 0, "order must be positive");
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while columns.len() < n {
        let mut col: Vec<Complex64> = (0..n).map(|_| random_complex(rng)).collect();
        // Modified Gram-Schmidt against the columns already accepted.
        for prev in &columns {
            let overlap: Complex64 = prev.iter().zip(&col).map(|(p, c)| p.conj() * c).sum();
            for (c, p) in col.iter_mut().zip(prev) {
                *c -= overlap * p;
            }
        }
        let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            // Degenerate draw; retry this column.
            continue;
        }
        for c in &mut col {
            *c /= norm;
        }
        columns.push(col);
    }
    ComplexMatrix::from_fn(n, n, |r, c| columns[c][r])
}

/// Complete orthogonal set of rank-1 projectors built from the rows of a
/// random unitary.
pub fn random_complete_set<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CompleteOrthogonalSet {
    let u = random_unitary(rng, n);
    crate::idempotent::complete_set_from_unitary_rows(&u)
        .expect("rows of a numerically unitary matrix form a complete set")
}

/// `n` independent phases uniform on the unit circle.
pub fn random_phases<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<PhaseCoefficient> {
    (0..n)
        .map(|_| {
            let angle = std::f64::consts::TAU * rng.gen::<f64>();
            PhaseCoefficient::from_value(Complex64::from_polar(1.0, angle))
                .expect("polar form has unit modulus")
        })
        .collect()
}

/// `n` coefficients with modulus in [0.3, 2.0], bounded away from zero.
pub fn random_nonzero_coefficients<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let modulus = 0.3 + 1.7 * rng.gen::<f64>();
            let angle = std::f64::consts::TAU * rng.gen::<f64>();
            Complex64::from_polar(modulus, angle)
        })
        .collect()
}
