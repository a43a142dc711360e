//! Dense complex matrices: arithmetic, LU determinants, block identities.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::tol;
use crate::Complex64;

/// Dense row-major complex matrix.
///
/// Entries are finite by construction: every public constructor rejects NaN
/// and infinite components.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

/// Which block determinant identity to apply in [`det_block_2x2`].
///
/// For M = [[A, B], [C, D]] with same-order square blocks:
///
/// - [`AnyZeroBlock`]: some block is zero; det M = det(AD - BC).
/// - [`LowerPairCommutes`]: DC = CD; det M = det(AD - BC).
/// - [`LeftPairCommutes`]: AC = CA; det M = det(AD - CB).
/// - [`RightPairCommutes`]: BD = DB; det M = det(DA - BC).
/// - [`UpperPairCommutes`]: AB = BA; det M = det(DA - CB).
///
/// [`AnyZeroBlock`]: BlockIdentity::AnyZeroBlock
/// [`LowerPairCommutes`]: BlockIdentity::LowerPairCommutes
/// [`LeftPairCommutes`]: BlockIdentity::LeftPairCommutes
/// [`RightPairCommutes`]: BlockIdentity::RightPairCommutes
/// [`UpperPairCommutes`]: BlockIdentity::UpperPairCommutes
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockIdentity {
    AnyZeroBlock,
    LowerPairCommutes,
    LeftPairCommutes,
    RightPairCommutes,
    UpperPairCommutes,
}

impl ComplexMatrix {
    /// Builds a matrix from rows, rejecting ragged or non-finite input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidParameter("matrix needs at least one entry".into()));
        }
        let cols = rows[0].len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows { row: r, expected: cols, found: row.len() });
            }
        }
        let nrows = rows.len();
        let data: Vec<Complex64> = rows.iter().flatten().copied().collect();
        for (k, z) in data.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry { row: k / cols, col: k % cols });
            }
        }
        Ok(Self { rows: nrows, cols, data })
    }

    /// Builds an `rows x cols` matrix from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix needs at least one entry");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Complex64::new(0.0, 0.0))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }
        })
    }

    /// Unitary discrete Fourier matrix: entry (j, k) = e^(-2 pi i jk/n) / sqrt(n).
    pub fn dft(n: usize) -> Self {
        assert!(n > 0, "dft order must be positive");
        let scale = 1.0 / (n as f64).sqrt();
        Self::from_fn(n, n, |j, k| {
            let angle = -2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64;
            Complex64::from_polar(scale, angle)
        })
    }

    /// Assembles [[a, b], [c, d]] from four conforming blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || a.cols != c.cols {
            return Err(Error::DimensionMismatch {
                context: "block assembly (top row / left column)",
                left_rows: a.rows,
                left_cols: a.cols,
                right_rows: b.rows,
                right_cols: c.cols,
            });
        }
        if d.rows != c.rows || d.cols != b.cols {
            return Err(Error::DimensionMismatch {
                context: "block assembly (bottom row / right column)",
                left_rows: c.rows,
                left_cols: b.cols,
                right_rows: d.rows,
                right_cols: d.cols,
            });
        }
        let out = Self::from_fn(a.rows + c.rows, a.cols + b.cols, |r, col| {
            match (r < a.rows, col < a.cols) {
                (true, true) => a[(r, col)],
                (true, false) => b[(r, col - a.cols)],
                (false, true) => c[(r - a.rows, col)],
                (false, false) => d[(r - a.rows, col - a.cols)],
            }
        });
        Ok(out)
    }

    pub(crate) fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    ///
    /// Panics if the matrix is not square.
    pub fn order(&self) -> usize {
        assert!(self.is_square(), "order() on a {}x{} matrix", self.rows, self.cols);
        self.rows
    }

    pub(crate) fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Conjugate transpose: result[i][j] = conj(self[j][i]).
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// Checked matrix product.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let f = self[(r, k)];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = rhs[(k, c)];
                    out[(r, c)] += f * v;
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: impl Into<Complex64>) -> Self {
        let factor = factor.into();
        Self::from_vec(self.rows, self.cols, self.data.iter().map(|z| z * factor).collect())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace() on a {}x{} matrix", self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    // NaN entries must poison residuals (plain f64::max would drop them), so
    // validation sites can reject with !(residual <= tolerance).
    fn nan_max(acc: f64, v: f64) -> f64 {
        if acc.is_nan() || v.is_nan() {
            f64::NAN
        } else {
            acc.max(v)
        }
    }

    /// Largest entry modulus; NaN if any entry is NaN.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, Self::nan_max)
    }

    /// Largest entry modulus of the difference; NaN if any entry is NaN.
    ///
    /// Panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "max_abs_diff shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, Self::nan_max)
    }

    /// Location of the first non-finite entry, if any.
    pub fn non_finite_entry(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Max-entry residual of U U* - I.
    pub fn unitarity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let prod = self.mat_mul(&self.conj_transpose()).expect("square product");
        prod.max_abs_diff(&Self::identity(self.rows))
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_residual() <= tolerance
    }

    /// Max-entry residual of M - M*.
    pub fn hermiticity_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.max_abs_diff(&self.conj_transpose())
    }

    /// Determinant: closed form for orders 1 and 2, LU with partial pivoting
    /// above. det(I) = 1; singular input yields 0 within rounding.
    ///
    /// Panics if the matrix is not square.
    pub fn determinant(&self) -> Complex64 {
        let n = self.order();
        match n {
            1 => self[(0, 0)],
            2 => self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)],
            _ => self.lu_determinant(),
        }
    }

    fn lu_determinant(&self) -> Complex64 {
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let mut pivot_row = k;
            let mut best = a[k * n + k].norm_sqr();
            for r in k + 1..n {
                let m = a[r * n + k].norm_sqr();
                if m > best {
                    best = m;
                    pivot_row = r;
                }
            }
            if best == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if pivot_row != k {
                for c in 0..n {
                    a.swap(k * n + c, pivot_row * n + c);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for r in k + 1..n {
                let f = a[r * n + k] / pivot;
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in k + 1..n {
                    let v = a[k * n + c];
                    a[r * n + c] -= f * v;
                }
            }
        }
        det
    }
}

/// Determinant of the 2n x 2n block matrix [[a, b], [c, d]] via the identity
/// the caller selects. The premise is verified numerically first; a violated
/// premise is an error rather than a wrong answer.
pub fn det_block_2x2(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
    identity: BlockIdentity,
) -> Result<Complex64> {
    let n = a.order();
    for (block, name) in [(b, "b"), (c, "c"), (d, "d")] {
        if !block.is_square() || block.rows() != n {
            return Err(Error::DimensionMismatch {
                context: match name {
                    "b" => "block determinant (block b)",
                    "c" => "block determinant (block c)",
                    _ => "block determinant (block d)",
                },
                left_rows: n,
                left_cols: n,
                right_rows: block.rows(),
                right_cols: block.cols(),
            });
        }
    }
    let commute_residual = |x: &ComplexMatrix, y: &ComplexMatrix| -> f64 {
        let xy = x.mat_mul(y).expect("conforming blocks");
        let yx = y.mat_mul(x).expect("conforming blocks");
        xy.max_abs_diff(&yx)
    };
    let check = |name: &'static str, residual: f64, tolerance: f64| -> Result<()> {
        if !(residual <= tolerance) {
            return Err(Error::BlockConditionNotSatisfied { identity: name, residual, tolerance });
        }
        Ok(())
    };
    let inner = match identity {
        BlockIdentity::AnyZeroBlock => {
            let residual = a.max_abs().min(b.max_abs()).min(c.max_abs()).min(d.max_abs());
            check("some zero block", residual, tol::BLOCK_ZERO)?;
            &(a * d) - &(b * c)
        }
        BlockIdentity::LowerPairCommutes => {
            check("DC = CD", commute_residual(d, c), tol::BLOCK_COMMUTE)?;
            &(a * d) - &(b * c)
        }
        BlockIdentity::LeftPairCommutes => {
            check("AC = CA", commute_residual(a, c), tol::BLOCK_COMMUTE)?;
            &(a * d) - &(c * b)
        }
        BlockIdentity::RightPairCommutes => {
            check("BD = DB", commute_residual(b, d), tol::BLOCK_COMMUTE)?;
            &(d * a) - &(b * c)
        }
        BlockIdentity::UpperPairCommutes => {
            check("AB = BA", commute_residual(a, b), tol::BLOCK_COMMUTE)?;
            &(d * a) - &(c * b)
        }
    };
    Ok(inner.determinant())
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        ComplexMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(x, y)| x + y).collect(),
        )
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        ComplexMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(x, y)| x - y).collect(),
        )
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        ComplexMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|z| -z).collect())
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.mat_mul(rhs).expect("mul shape mismatch")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = f.precision().unwrap_or(6);
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, "  ")?;
                }
                let z = self[(r, c)];
                write!(f, "{:+.prec$}{:+.prec$}i", z.re, z.im, prec = prec)?;
            }
        }
        Ok(())
    }
}
