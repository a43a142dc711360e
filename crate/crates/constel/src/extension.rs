//! Operators that grow a constellation: adjoining negations, multiplying by
//! the powers of a root of unity, and doubling the order with 2x2 block
//! "tangle" layouts. Each operator checks that the enlarged family stays
//! collision-free, and each has a companion closed-form quality prediction.

use crate::constellation::Constellation;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::synthesis::PhaseCoefficient;
use crate::tol;

/// The four 2n x 2n block layouts assembled from two n x n unitaries a and b,
/// all scaled by 1/sqrt(2). Named by where the repeated argument sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TangleVariant {
    /// [[a, a], [b, -b]]
    RepeatTop,
    /// [[a, b], [a, -b]]
    RepeatLeft,
    /// [[b, a], [b, -a]]
    RepeatLeftSwapped,
    /// [[b, -a], [b, a]]
    RepeatLeftSwappedNegated,
}

impl TangleVariant {
    pub const ALL: [TangleVariant; 4] = [
        TangleVariant::RepeatTop,
        TangleVariant::RepeatLeft,
        TangleVariant::RepeatLeftSwapped,
        TangleVariant::RepeatLeftSwappedNegated,
    ];
}

fn require_unitary(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let residual = m.unitarity_residual();
    if !(residual <= tol::UNITARITY) {
        return Err(Error::NotUnitary { residual, tolerance: tol::UNITARITY });
    }
    Ok(())
}

/// Builds the selected block layout from two unitaries of the same order.
/// The 1/sqrt(2) prefactor makes every layout unitary.
pub fn tangle(a: &ComplexMatrix, b: &ComplexMatrix, variant: TangleVariant) -> Result<ComplexMatrix> {
    require_unitary(a)?;
    require_unitary(b)?;
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch {
            context: "tangle blocks",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let blocks = match variant {
        TangleVariant::RepeatTop => ComplexMatrix::from_blocks(a, a, b, &b.scaled(-1.0)),
        TangleVariant::RepeatLeft => ComplexMatrix::from_blocks(a, b, a, &b.scaled(-1.0)),
        TangleVariant::RepeatLeftSwapped => ComplexMatrix::from_blocks(b, a, b, &a.scaled(-1.0)),
        TangleVariant::RepeatLeftSwappedNegated => {
            ComplexMatrix::from_blocks(b, &a.scaled(-1.0), b, a)
        }
    }?;
    Ok(blocks.scaled(std::f64::consts::FRAC_1_SQRT_2))
}

/// c together with the negation of every member. Labels of the new members
/// gain a "-" prefix. Errors when some member already equals the negation of
/// another (the doubled family would collide).
pub fn negate_extend(c: &Constellation) -> Result<Constellation> {
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            let residual = c.member(i).max_abs_diff(&c.member(j).scaled(-1.0));
            if residual <= tol::DUPLICATE {
                return Err(Error::OrbitCollision {
                    label_a: c.label(i).to_string(),
                    label_b: c.label(j).to_string(),
                    power: 1,
                    tolerance: tol::DUPLICATE,
                });
            }
        }
    }
    let mut matrices = c.matrices().to_vec();
    let mut labels = c.labels().to_vec();
    for i in 0..c.len() {
        matrices.push(c.member(i).scaled(-1.0));
        labels.push(format!("-{}", c.label(i)));
    }
    let mut metadata = c.metadata().clone();
    metadata.chain.push("negate".into());
    Constellation::new(matrices, labels, metadata)
}

/// All products w^t V for V in c and 0 <= t < k, with w = e^(2 pi i / k):
/// k orbits of the whole family, kL members. Power t >= 1 prefixes labels
/// with "w^t*". Errors when two members sit on one orbit (V_i close to
/// w^t V_j within `tol::DUPLICATE`).
pub fn omega_extend(c: &Constellation, k: usize) -> Result<Constellation> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("root order must be at least 2, got {k}")));
    }
    for i in 0..c.len() {
        for j in 0..c.len() {
            if i == j {
                continue;
            }
            for t in 1..k {
                let w = PhaseCoefficient::from_root(k, t).expect("k >= 2").value();
                let residual = c.member(i).max_abs_diff(&c.member(j).scaled(w));
                if residual <= tol::DUPLICATE {
                    return Err(Error::OrbitCollision {
                        label_a: c.label(i).to_string(),
                        label_b: c.label(j).to_string(),
                        power: t,
                        tolerance: tol::DUPLICATE,
                    });
                }
            }
        }
    }
    let mut matrices = Vec::with_capacity(k * c.len());
    let mut labels = Vec::with_capacity(k * c.len());
    for t in 0..k {
        let w = PhaseCoefficient::from_root(k, t).expect("k >= 2").value();
        for i in 0..c.len() {
            matrices.push(c.member(i).scaled(w));
            labels.push(if t == 0 {
                c.label(i).to_string()
            } else {
                format!("w^{t}*{}", c.label(i))
            });
        }
    }
    let mut metadata = c.metadata().clone();
    metadata.chain.push(format!("omega k={k}"));
    Constellation::new(matrices, labels, metadata)
}

/// min(base_quality, sin(pi/k)): within one orbit the closest pair sits at
/// |sin(pi/k)|, across orbits the base minimum is the candidate.
pub fn predicted_quality_omega(base_quality: f64, k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("root order must be at least 2, got {k}")));
    }
    if !(base_quality >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "base quality must be nonnegative, got {base_quality}"
        )));
    }
    Ok(base_quality.min((std::f64::consts::PI / k as f64).sin()))
}

/// Whether |det(a - w b)| >= |det(a - b)| - slack for the given phase w.
pub fn modulus_inequality_check(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    omega: &PhaseCoefficient,
) -> Result<bool> {
    require_unitary(a)?;
    require_unitary(b)?;
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch {
            context: "modulus comparison operands",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let rotated = (a - &b.scaled(omega.value())).determinant().norm();
    let plain = (a - b).determinant().norm();
    Ok(rotated >= plain - tol::MODULUS_SLACK)
}

/// Order-doubling extension. For a base A_1..A_L (L even) it builds, per
/// member, B_i = (1/sqrt 2)[[A_i, A_i], [A_i, -A_i]], and per consecutive
/// pair (A_i, A_j), j = i + 1 with even i, the cross blocks
/// C = (1/sqrt 2)[[A_i, -A_i], [A_j, A_j]] and
/// D = (1/sqrt 2)[[A_j, -A_j], [A_i, A_i]];
/// every block is then multiplied by w^0..w^(t-1), w = e^(2 pi i / t),
/// giving 2Lt members of doubled order. Every member is verified unitary.
pub fn tangle_extend(c: &Constellation, t: usize) -> Result<Constellation> {
    if t == 0 {
        return Err(Error::InvalidParameter("need at least one root power".into()));
    }
    if c.len() % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "tangle extension needs an even member count, got {}",
            c.len()
        )));
    }
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            let residual = c.member(i).max_abs_diff(c.member(j));
            if residual <= tol::DUPLICATE {
                return Err(Error::DuplicateMember {
                    label_a: c.label(i).to_string(),
                    label_b: c.label(j).to_string(),
                    residual,
                });
            }
            for s in 1..t {
                let w = PhaseCoefficient::from_root(t, s).expect("t >= 1").value();
                let residual = c.member(i).max_abs_diff(&c.member(j).scaled(w));
                if residual <= tol::DUPLICATE {
                    return Err(Error::OrbitCollision {
                        label_a: c.label(i).to_string(),
                        label_b: c.label(j).to_string(),
                        power: s,
                        tolerance: tol::DUPLICATE,
                    });
                }
            }
        }
    }
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut blocks: Vec<(String, ComplexMatrix)> = Vec::with_capacity(2 * c.len());
    for i in 0..c.len() {
        let a = c.member(i);
        let block = ComplexMatrix::from_blocks(a, a, a, &a.scaled(-1.0))?.scaled(scale);
        blocks.push((format!("B({})", c.label(i)), block));
    }
    for i in (0..c.len()).step_by(2) {
        let (x, y) = (c.member(i), c.member(i + 1));
        let cross = ComplexMatrix::from_blocks(x, &x.scaled(-1.0), y, y)?.scaled(scale);
        blocks.push((format!("C({},{})", c.label(i), c.label(i + 1)), cross));
        let swapped = ComplexMatrix::from_blocks(y, &y.scaled(-1.0), x, x)?.scaled(scale);
        blocks.push((format!("D({},{})", c.label(i), c.label(i + 1)), swapped));
    }
    let mut matrices = Vec::with_capacity(blocks.len() * t);
    let mut labels = Vec::with_capacity(blocks.len() * t);
    for (label, block) in &blocks {
        for s in 0..t {
            let w = PhaseCoefficient::from_root(t, s).expect("t >= 1").value();
            matrices.push(block.scaled(w));
            labels.push(if s == 0 { label.clone() } else { format!("w^{s}*{label}") });
        }
    }
    let mut metadata = c.metadata().clone();
    metadata.chain.push(format!("tangle t={t}"));
    metadata.params.insert("tangle_prefactor".into(), "1/sqrt(2)".into());
    Constellation::new(matrices, labels, metadata)
}

/// 2^(1/4) times the base quality: the candidate worst-pair distance after
/// one order doubling of a 2x2 base.
pub fn predicted_quality_tangle(base_quality: f64) -> f64 {
    2f64.powf(0.25) * base_quality
}
