//! Finite families of unitary matrices and the measures on them: pairwise
//! distance from the determinant of the difference, worst-case quality, rate,
//! and full-diversity checks (numeric, and exact integer arithmetic for
//! root-of-unity diagonal families).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// Provenance of a constellation: which generator built it, with which
/// parameters, and the chain of extensions applied since.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FamilyMetadata {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub chain: Vec<String>,
}

impl FamilyMetadata {
    pub fn new(family: &str) -> Self {
        Self { family: family.to_string(), params: BTreeMap::new(), chain: Vec::new() }
    }
}

/// Finite labeled family of same-order unitary matrices.
#[derive(Clone, Debug)]
pub struct Constellation {
    order: usize,
    matrices: Vec<ComplexMatrix>,
    labels: Vec<String>,
    metadata: FamilyMetadata,
}

impl Constellation {
    /// Validates unitarity of each member within `tol::UNITARITY`, label
    /// uniqueness, and that no two members coincide within `tol::DUPLICATE`.
    pub fn new(
        matrices: Vec<ComplexMatrix>,
        labels: Vec<String>,
        metadata: FamilyMetadata,
    ) -> Result<Self> {
        let c = Self::new_with_duplicates(matrices, labels, metadata)?;
        for i in 0..c.matrices.len() {
            for j in (i + 1)..c.matrices.len() {
                let residual = c.matrices[i].max_abs_diff(&c.matrices[j]);
                if residual <= tol::DUPLICATE {
                    return Err(Error::DuplicateMember {
                        label_a: c.labels[i].clone(),
                        label_b: c.labels[j].clone(),
                        residual,
                    });
                }
            }
        }
        Ok(c)
    }

    /// Same validation except members are allowed to coincide. Some natural
    /// parameter choices produce repeated members; this constructor lets them
    /// be built and measured (their quality is 0).
    pub fn new_with_duplicates(
        matrices: Vec<ComplexMatrix>,
        labels: Vec<String>,
        metadata: FamilyMetadata,
    ) -> Result<Self> {
        let first = matrices.first().ok_or(Error::TooFewMembers { found: 0, required: 1 })?;
        if !first.is_square() {
            return Err(Error::NotSquare { rows: first.rows(), cols: first.cols() });
        }
        let order = first.rows();
        if labels.len() != matrices.len() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} members",
                labels.len(),
                matrices.len()
            )));
        }
        for m in &matrices {
            if m.rows() != order || m.cols() != order {
                return Err(Error::DimensionMismatch {
                    context: "constellation members",
                    left_rows: order,
                    left_cols: order,
                    right_rows: m.rows(),
                    right_cols: m.cols(),
                });
            }
            if let Some((row, col)) = m.non_finite_entry() {
                return Err(Error::NonFiniteEntry { row, col });
            }
        }
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                if labels[i] == labels[j] {
                    return Err(Error::DuplicateLabel { i, j, label: labels[i].clone() });
                }
            }
        }
        for (m, label) in matrices.iter().zip(&labels) {
            let residual = m.unitarity_residual();
            if !(residual <= tol::UNITARITY) {
                return Err(Error::MemberNotUnitary {
                    label: label.clone(),
                    residual,
                    tolerance: tol::UNITARITY,
                });
            }
        }
        Ok(Self { order, matrices, labels, metadata })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn matrices(&self) -> &[ComplexMatrix] {
        &self.matrices
    }

    pub fn member(&self, i: usize) -> &ComplexMatrix {
        &self.matrices[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn metadata(&self) -> &FamilyMetadata {
        &self.metadata
    }

    pub fn metadata_mut(&mut self) -> &mut FamilyMetadata {
        &mut self.metadata
    }

    /// Sub-constellation of the given member indices, keeping labels and
    /// metadata. Errors on out-of-range or repeated indices.
    pub fn select(&self, indices: &[usize]) -> Result<Constellation> {
        let mut seen = BTreeSet::new();
        for &i in indices {
            if i >= self.len() {
                return Err(Error::InvalidParameter(format!(
                    "index {i} out of range for {} members",
                    self.len()
                )));
            }
            if !seen.insert(i) {
                return Err(Error::InvalidParameter(format!("index {i} repeated")));
            }
        }
        let matrices = indices.iter().map(|&i| self.matrices[i].clone()).collect();
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Self::new_with_duplicates(matrices, labels, self.metadata.clone())
    }
}

/// (1/2) |det(a - b)|^(1/M) for M x M inputs: zero exactly when the
/// difference is singular, and at most 1 for unitary inputs.
pub fn distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            context: "distance operands",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let m = a.rows() as f64;
    let det = (a - b).determinant();
    Ok(0.5 * det.norm().powf(1.0 / m))
}

/// Worst pair and the whole distance spectrum of a constellation.
#[derive(Clone, Debug)]
pub struct QualityReport {
    /// Smallest pairwise distance.
    pub quality: f64,
    /// log2(L) / M bits per dimension.
    pub rate: f64,
    /// Labels of the first pair attaining the minimum (scan order: i < j,
    /// both ascending).
    pub min_pair: (String, String),
    /// Indices of that pair.
    pub min_indices: (usize, usize),
    /// Distinct distances (rounded to 12 decimals) with multiplicities,
    /// ascending; multiplicities sum to L(L-1)/2.
    pub distribution: Vec<(f64, usize)>,
}

/// Scans all member pairs. Needs at least two members.
pub fn quality(c: &Constellation) -> Result<QualityReport> {
    if c.len() < 2 {
        return Err(Error::TooFewMembers { found: c.len(), required: 2 });
    }
    let scale = 10f64.powi(tol::DISTRIBUTION_DECIMALS);
    let mut min = f64::INFINITY;
    let mut min_indices = (0, 0);
    let mut buckets: BTreeMap<i64, usize> = BTreeMap::new();
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            let d = distance(c.member(i), c.member(j)).expect("members share the order");
            if d < min {
                min = d;
                min_indices = (i, j);
            }
            *buckets.entry((d * scale).round() as i64).or_insert(0) += 1;
        }
    }
    let distribution = buckets.into_iter().map(|(k, count)| (k as f64 / scale, count)).collect();
    Ok(QualityReport {
        quality: min,
        rate: (c.len() as f64).log2() / c.order() as f64,
        min_pair: (c.label(min_indices.0).to_string(), c.label(min_indices.1).to_string()),
        min_indices,
        distribution,
    })
}

/// First pair (if any) whose difference is numerically singular.
#[derive(Clone, Debug)]
pub struct DiversityWitness {
    pub indices: (usize, usize),
    pub labels: (String, String),
    pub det_modulus: f64,
}

/// Outcome of a full-diversity scan.
#[derive(Clone, Debug)]
pub struct DiversityCheck {
    pub fully_diverse: bool,
    pub pairs_checked: usize,
    pub witness: Option<DiversityWitness>,
}

/// A constellation is fully diverse when every pairwise difference has
/// |det| strictly above the tolerance.
pub fn is_fully_diverse(c: &Constellation, tolerance: f64) -> DiversityCheck {
    let mut pairs_checked = 0;
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            pairs_checked += 1;
            let det = (c.member(i) - c.member(j)).determinant();
            if !(det.norm() > tolerance) {
                return DiversityCheck {
                    fully_diverse: false,
                    pairs_checked,
                    witness: Some(DiversityWitness {
                        indices: (i, j),
                        labels: (c.label(i).to_string(), c.label(j).to_string()),
                        det_modulus: det.norm(),
                    }),
                };
            }
        }
    }
    DiversityCheck { fully_diverse: true, pairs_checked, witness: None }
}

/// Exact full-diversity test for diagonal root-of-unity families: member l is
/// diag(w^t) over its tuple, w the primitive root of order `root_order`. The
/// family is fully diverse exactly when, in every coordinate, the exponents
/// are pairwise distinct mod `root_order`. Integer arithmetic only.
pub fn check_diversity_criterion(tuples: &[Vec<usize>], root_order: usize) -> Result<bool> {
    if root_order == 0 {
        return Err(Error::InvalidParameter("root order must be positive".into()));
    }
    let coordinates = match tuples.first() {
        Some(t) => t.len(),
        None => return Ok(true),
    };
    for t in tuples {
        if t.len() != coordinates {
            return Err(Error::InvalidParameter(format!(
                "tuple length {} differs from {}",
                t.len(),
                coordinates
            )));
        }
    }
    for coord in 0..coordinates {
        let mut seen = BTreeSet::new();
        for tuple in tuples {
            if !seen.insert(tuple[coord] % root_order) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
