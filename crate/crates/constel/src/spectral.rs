//! Spectral decomposition of unitary matrices into unit-modulus phases and
//! rank-1 orthogonal projectors.
//!
//! A unitary U equals sum alpha_i P_i with |alpha_i| = 1 and {P_i} a complete
//! orthogonal set of rank-1 symmetric idempotents. The decomposition here
//! diagonalizes the commuting Hermitian pair H1 = (U + U*)/2 and
//! H2 = (U - U*)/(2i) with a joint Jacobi sweep: each plane rotation is
//! chosen to minimize the combined off-diagonal energy of both matrices at
//! once (dominant eigenvector of the 3x3 accumulation of their Jacobi
//! g-vectors). A joint rotation needs no degeneracy clustering: conjugate
//! eigenvalue pairs collide in H1 alone and antipodal ones in H2 alone, but
//! never in both.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;
use crate::Complex64;

const MAX_SWEEPS: usize = 64;

/// Phases and rank-1 projectors of a unitary matrix, phases sorted by
/// principal argument in [0, 2*pi) with the pre-sort index as tie-break.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub phases: Vec<Complex64>,
    pub projectors: Vec<ComplexMatrix>,
}

impl SpectralDecomposition {
    /// Resynthesizes sum phases[i] * projectors[i].
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.projectors[0].order();
        let mut out = ComplexMatrix::zeros(n, n);
        for (alpha, p) in self.phases.iter().zip(&self.projectors) {
            out = &out + &p.scaled(*alpha);
        }
        out
    }

    /// Max-entry difference between the resynthesis and `u`.
    pub fn reconstruction_residual(&self, u: &ComplexMatrix) -> f64 {
        self.reconstruct().max_abs_diff(u)
    }
}

/// Decomposes a unitary matrix into phases and rank-1 projectors.
///
/// Errors with [`Error::NotUnitary`] when `max |UU* - I|` exceeds the
/// unitarity tolerance and with [`Error::ConvergenceFailure`] if the sweep
/// budget runs out before the off-diagonal energy goes stationary.
pub fn spectral_decompose_unitary(u: &ComplexMatrix) -> Result<SpectralDecomposition> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
    }
    let residual = u.unitarity_residual();
    if residual > tol::UNITARITY {
        return Err(Error::NotUnitary { residual, tolerance: tol::UNITARITY });
    }
    let n = u.order();
    let ut = u.conj_transpose();

    // H1 = (U + U*)/2 and H2 = (U - U*)/(2i); both Hermitian, commuting.
    let half = Complex64::new(0.5, 0.0);
    let neg_half_i = Complex64::new(0.0, -0.5);
    let mut h1: Vec<Complex64> = Vec::with_capacity(n * n);
    let mut h2: Vec<Complex64> = Vec::with_capacity(n * n);
    for (x, y) in u.as_slice().iter().zip(ut.as_slice()) {
        h1.push((x + y) * half);
        h2.push((x - y) * neg_half_i);
    }

    let mut v: Vec<Complex64> = ComplexMatrix::identity(n).as_slice().to_vec();

    let mut prev_off = f64::INFINITY;
    let mut stationary = n < 2;
    let mut sweeps_used = 0;
    for _ in 0..MAX_SWEEPS {
        let off = off_energy(&h1, n) + off_energy(&h2, n);
        if off <= (n * n) as f64 * 1e-30 || off >= prev_off * (1.0 - 1e-6) {
            stationary = true;
            break;
        }
        prev_off = off;
        sweeps_used += 1;
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate_pair(&mut h1, &mut h2, &mut v, n, p, q);
            }
        }
    }
    if !stationary {
        let off = (off_energy(&h1, n) + off_energy(&h2, n)).sqrt();
        return Err(Error::ConvergenceFailure { sweeps: sweeps_used, residual: off });
    }

    // Diagonal entries of the pair are the cosine and sine of each phase.
    let mut order: Vec<usize> = (0..n).collect();
    let phases_raw: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(h1[i * n + i].re, h2[i * n + i].re))
        .collect();
    let keys: Vec<f64> = phases_raw
        .iter()
        .map(|alpha| {
            let mut key = alpha.arg();
            if key < 0.0 {
                key += 2.0 * std::f64::consts::PI;
            }
            // An argument within rounding of 2*pi is the same angle as 0.
            if key > 2.0 * std::f64::consts::PI - 1e-9 {
                key -= 2.0 * std::f64::consts::PI;
            }
            key
        })
        .collect();
    order.sort_by(|&a, &b| keys[a].partial_cmp(&keys[b]).expect("finite keys").then(a.cmp(&b)));

    let phases: Vec<Complex64> = order.iter().map(|&i| phases_raw[i]).collect();
    let projectors: Vec<ComplexMatrix> = order
        .iter()
        .map(|&i| {
            ComplexMatrix::from_fn(n, n, |r, c| v[r * n + i] * v[c * n + i].conj())
        })
        .collect();
    Ok(SpectralDecomposition { phases, projectors })
}

fn off_energy(h: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                sum += h[r * n + c].norm_sqr();
            }
        }
    }
    sum
}

/// One joint Jacobi rotation on the (p, q) plane of both Hermitian matrices,
/// accumulated into the eigenvector columns of `v`.
fn rotate_pair(
    h1: &mut [Complex64],
    h2: &mut [Complex64],
    v: &mut [Complex64],
    n: usize,
    p: usize,
    q: usize,
) {
    let pq_energy = h1[p * n + q].norm_sqr() + h2[p * n + q].norm_sqr();
    if pq_energy <= 1e-32 {
        return;
    }

    // Accumulate the rank-<=2 quadric of the two g-vectors
    // g = (h_pp - h_qq, 2 Re h_pq, 2 Im h_pq).
    let mut g = [[0.0f64; 3]; 3];
    for h in [&*h1, &*h2] {
        let d = h[p * n + p].re - h[q * n + q].re;
        let o = h[p * n + q];
        let gv = [d, 2.0 * o.re, 2.0 * o.im];
        for r in 0..3 {
            for c in 0..3 {
                g[r][c] += gv[r] * gv[c];
            }
        }
    }
    let mut w = dominant_unit_eigenvector(g);
    // Deterministic orientation: first nonzero of (x, y, z) made positive.
    let flip = if w[0] != 0.0 {
        w[0] < 0.0
    } else if w[1] != 0.0 {
        w[1] < 0.0
    } else {
        w[2] < 0.0
    };
    if flip {
        for t in &mut w {
            *t = -*t;
        }
    }

    let c = ((w[0] + 1.0) / 2.0).sqrt();
    let s = Complex64::new(w[1], -w[2]) / (2.0 * c);
    // Skip the no-op rotation the dominant direction (1, 0, 0) encodes.
    if s.norm_sqr() <= 1e-32 {
        return;
    }

    for h in [&mut *h1, &mut *h2] {
        for j in 0..n {
            let hp = h[p * n + j];
            let hq = h[q * n + j];
            h[p * n + j] = c * hp + s.conj() * hq;
            h[q * n + j] = -s * hp + c * hq;
        }
        for j in 0..n {
            let hp = h[j * n + p];
            let hq = h[j * n + q];
            h[j * n + p] = c * hp + s * hq;
            h[j * n + q] = -s.conj() * hp + c * hq;
        }
    }
    for j in 0..n {
        let vp = v[j * n + p];
        let vq = v[j * n + q];
        v[j * n + p] = c * vp + s * vq;
        v[j * n + q] = -s.conj() * vp + c * vq;
    }
}

/// Unit eigenvector for the largest eigenvalue of a 3x3 symmetric PSD matrix,
/// by cyclic Jacobi.
fn dominant_unit_eigenvector(mut g: [[f64; 3]; 3]) -> [f64; 3] {
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let scale = (0..3).map(|i| g[i][i].abs()).fold(0.0f64, f64::max).max(1e-300);
    for _ in 0..32 {
        let off = g[0][1] * g[0][1] + g[0][2] * g[0][2] + g[1][2] * g[1][2];
        if off <= scale * scale * 1e-30 {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let apq = g[p][q];
            if apq == 0.0 {
                continue;
            }
            let tau = (g[q][q] - g[p][p]) / (2.0 * apq);
            let t = if tau >= 0.0 {
                1.0 / (tau + (1.0 + tau * tau).sqrt())
            } else {
                1.0 / (tau - (1.0 + tau * tau).sqrt())
            };
            let c = 1.0 / (1.0 + t * t).sqrt();
            let s = t * c;
            for j in 0..3 {
                let gjp = g[j][p];
                let gjq = g[j][q];
                g[j][p] = c * gjp - s * gjq;
                g[j][q] = s * gjp + c * gjq;
            }
            for j in 0..3 {
                let gpj = g[p][j];
                let gqj = g[q][j];
                g[p][j] = c * gpj - s * gqj;
                g[q][j] = s * gpj + c * gqj;
            }
            for row in &mut v {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    let mut best = 0;
    for i in 1..3 {
        if g[i][i] > g[best][best] {
            best = i;
        }
    }
    let w = [v[0][best], v[1][best], v[2][best]];
    let norm = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    [w[0] / norm, w[1] / norm, w[2] / norm]
}
