//! Constellation generators: cyclic root-of-unity families over a complete
//! orthogonal set, real rank-1 reflections, rational reflections, angle
//! reflections, and Gaussian-integer reflections, together with the closed
//! forms known for their distances.

use crate::constellation::{Constellation, FamilyMetadata};
use crate::error::{Error, Result};
use crate::idempotent::{
    angle_idempotent, gaussian_idempotent, rational_idempotent, CompleteOrthogonalSet, GaussianInt,
};
use crate::synthesis::{reflection_unitary, unitary_from_set, PhaseCoefficient};

fn format_tuples(tuples: &[Vec<usize>]) -> String {
    tuples
        .iter()
        .map(|t| t.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn tuple_label(tuple: &[usize]) -> String {
    format!("({})", tuple.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
}

/// Members sum_i w^(tuple[i]) E_i over the given set, w the primitive root of
/// unity of order `root_order`. One member per tuple; labels are the tuples.
pub fn gen_cyclic(
    set: &CompleteOrthogonalSet,
    root_order: usize,
    tuples: &[Vec<usize>],
) -> Result<Constellation> {
    if root_order == 0 {
        return Err(Error::InvalidParameter("root order must be positive".into()));
    }
    let mut matrices = Vec::with_capacity(tuples.len());
    let mut labels = Vec::with_capacity(tuples.len());
    for tuple in tuples {
        let phases = tuple
            .iter()
            .map(|&e| PhaseCoefficient::from_root(root_order, e))
            .collect::<Result<Vec<_>>>()?;
        matrices.push(unitary_from_set(set, &phases)?);
        labels.push(tuple_label(tuple));
    }
    let mut metadata = FamilyMetadata::new("cyclic");
    metadata.params.insert("root_order".into(), root_order.to_string());
    metadata.params.insert("tuples".into(), format_tuples(tuples));
    Constellation::new(matrices, labels, metadata)
}

/// `gen_cyclic` over the diagonal unit projectors, the canonical choice: the
/// exponent tuples alone fix the distance spectrum, whatever the set.
pub fn gen_cyclic_diagonal(root_order: usize, tuples: &[Vec<usize>]) -> Result<Constellation> {
    let coordinates = tuples
        .first()
        .ok_or(Error::TooFewMembers { found: 0, required: 1 })?
        .len();
    if coordinates == 0 {
        return Err(Error::InvalidParameter("tuples must have at least one coordinate".into()));
    }
    let set = CompleteOrthogonalSet::diagonal(coordinates);
    let mut c = gen_cyclic(&set, root_order, tuples)?;
    c.metadata_mut().params.insert("set".into(), "diagonal".into());
    Ok(c)
}

/// A_k = 2 E_k - I where E_k is the rational idempotent with upper-left entry
/// 1/(k+1). All entries of A_k are real. Labels are "A_k".
pub fn gen_real_rank1(indices: &[u64]) -> Result<Constellation> {
    if indices.is_empty() {
        return Err(Error::TooFewMembers { found: 0, required: 1 });
    }
    for (i, &k) in indices.iter().enumerate() {
        if k == 0 {
            return Err(Error::InvalidParameter("indices must be positive".into()));
        }
        if let Some(j) = indices[..i].iter().position(|&other| other == k) {
            return Err(Error::InvalidParameter(format!(
                "index {k} appears at positions {j} and {i}"
            )));
        }
    }
    let mut matrices = Vec::with_capacity(indices.len());
    let mut labels = Vec::with_capacity(indices.len());
    for &k in indices {
        let denominator = k
            .checked_add(1)
            .ok_or_else(|| Error::InvalidParameter(format!("index {k} overflows")))?;
        let e = rational_idempotent(1, denominator)?;
        matrices.push(reflection_unitary(&e));
        labels.push(format!("A_{k}"));
    }
    let mut metadata = FamilyMetadata::new("real-rank1");
    metadata.params.insert(
        "indices".into(),
        indices.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","),
    );
    Constellation::new(matrices, labels, metadata)
}

/// Closed form for the distance between A_k and A_l:
/// |sqrt(l) - sqrt(k)| / sqrt((l+1)(k+1)).
pub fn predicted_distance_rank1(k: u64, l: u64) -> Result<f64> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter("indices must be positive".into()));
    }
    if k == l {
        return Err(Error::InvalidParameter("distinct indices required".into()));
    }
    let (k, l) = (k as f64, l as f64);
    Ok(((l.sqrt() - k.sqrt()).abs()) / ((l + 1.0) * (k + 1.0)).sqrt())
}

/// Closed form for the distance between A_k and -A_l:
/// (sqrt(l) + sqrt(k)) / sqrt((l+1)(k+1)).
pub fn predicted_sum_distance_rank1(k: u64, l: u64) -> Result<f64> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter("indices must be positive".into()));
    }
    let (k, l) = (k as f64, l as f64);
    Ok((l.sqrt() + k.sqrt()) / ((l + 1.0) * (k + 1.0)).sqrt())
}

/// U_j = 2 E(2 pi j / n) - I for j = 0..n-1: reflections through n equally
/// spaced lines. For even n opposite lines coincide, so members repeat and
/// the constellation contains zero-distance pairs; it is still built.
pub fn gen_angle(n: usize) -> Result<Constellation> {
    if n < 2 {
        return Err(Error::InvalidParameter("need at least two directions".into()));
    }
    let mut matrices = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for j in 0..n {
        let theta = std::f64::consts::TAU * j as f64 / n as f64;
        matrices.push(reflection_unitary(&angle_idempotent(theta)));
        labels.push(format!("U_{j}"));
    }
    let mut metadata = FamilyMetadata::new("angle");
    metadata.params.insert("count".into(), n.to_string());
    Constellation::new_with_duplicates(matrices, labels, metadata)
}

/// Quality of the angle family for odd n: sin(pi / n). Even n is rejected
/// (its quality is 0 by coincident members).
pub fn predicted_quality_angle(n: usize) -> Result<f64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "closed form requires odd n >= 3, got {n}"
        )));
    }
    Ok((std::f64::consts::PI / n as f64).sin())
}

/// Reflections 2 E_(p,q) - I for rational idempotent parameters; labels are
/// "(p,q)". Pairs with equal ratio p/q give the same member and are rejected.
pub fn gen_rational(pairs: &[(u64, u64)]) -> Result<Constellation> {
    if pairs.is_empty() {
        return Err(Error::TooFewMembers { found: 0, required: 1 });
    }
    let mut matrices = Vec::with_capacity(pairs.len());
    let mut labels = Vec::with_capacity(pairs.len());
    for &(p, q) in pairs {
        matrices.push(reflection_unitary(&rational_idempotent(p, q)?));
        labels.push(format!("({p},{q})"));
    }
    let mut metadata = FamilyMetadata::new("rational");
    metadata.params.insert(
        "pairs".into(),
        pairs.iter().map(|(p, q)| format!("{p},{q}")).collect::<Vec<_>>().join(";"),
    );
    Constellation::new(matrices, labels, metadata)
}

/// Reflections 2 E - I for Gaussian-integer direction pairs; labels are
/// "(a,b)". Pairs spanning the same complex line (projectively equivalent)
/// give the same member and are rejected up front.
pub fn gen_gaussian(pairs: &[(GaussianInt, GaussianInt)]) -> Result<Constellation> {
    if pairs.is_empty() {
        return Err(Error::TooFewMembers { found: 0, required: 1 });
    }
    let mut idempotents = Vec::with_capacity(pairs.len());
    let mut labels = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        idempotents.push(gaussian_idempotent(a, b)?);
        labels.push(format!("({a},{b})"));
    }
    for i in 0..idempotents.len() {
        for j in (i + 1)..idempotents.len() {
            let residual = idempotents[i].matrix().max_abs_diff(idempotents[j].matrix());
            if residual <= crate::tol::DUPLICATE {
                return Err(Error::InvalidParameter(format!(
                    "pairs {} and {} are projectively equivalent",
                    labels[i], labels[j]
                )));
            }
        }
    }
    let matrices = idempotents.iter().map(reflection_unitary).collect();
    let mut metadata = FamilyMetadata::new("gaussian");
    metadata.params.insert(
        "pairs".into(),
        pairs.iter().map(|(a, b)| format!("{a},{b}")).collect::<Vec<_>>().join(";"),
    );
    Constellation::new(matrices, labels, metadata)
}
