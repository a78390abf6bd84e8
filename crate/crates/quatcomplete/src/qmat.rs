//! Dense quaternion matrices.
//!
//! [`QMatrix`] stores entries row-major as interleaved four-component
//! quaternions, which keeps the inner loops of the dense products — the
//! dominant cost of the completion solvers — cache friendly.
//!
//! The module also provides
//!
//! * the Cayley–Dickson split `Q = Q_a + Q_b·j` and the *equivalent complex
//!   matrix* (complex adjoint) `Q_c = [[Q_a, Q_b], [−Q_b*, Q_a*]]`, which is
//!   the bridge to classical complex linear algebra,
//! * [`ObservationMask`], the index set Ω of observed entries together with
//!   the projection `P_Ω`, and
//! * [`hermitian_solve`], right-division by a Hermitian positive definite
//!   matrix via a complex Cholesky factorization (never an explicit inverse).

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::Quaternion;

/// Dense `rows × cols` quaternion matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    /// Rectangular identity: ones on the leading diagonal, zero elsewhere.
    pub fn eye(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for d in 0..rows.min(cols) {
            m[(d, d)] = Quaternion::one();
        }
        m
    }

    /// Square identity of order `n`.
    pub fn identity(n: usize) -> Self {
        Self::eye(n, n)
    }

    /// Square matrix with the given real values on the diagonal.
    pub fn diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (d, &v) in diag.iter().enumerate() {
            m[(d, d)] = Quaternion::from_real(v);
        }
        m
    }

    /// Builds a matrix by evaluating `f(row, col)` for every entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Wraps a row-major entry buffer. `data.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "buffer of {} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Matrix with all four components of every entry drawn from the standard
    /// normal distribution.
    pub fn random_normal(rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        Self::from_fn(rows, cols, |_, _| {
            Quaternion::new(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            )
        })
    }

    /// Number of rows.
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(rows, cols)`.
    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry at `(row, col)` (copied).
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Quaternion {
        self.data[row * self.cols + col]
    }

    /// Row-major entry slice.
    #[inline]
    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    /// Mutable row-major entry slice.
    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [Quaternion] {
        &mut self.data
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }

    /// Multiplies every entry by the real scalar `s`.
    pub fn scale(&self, s: f64) -> Self {
        self.map(|q| q.scale(s))
    }

    /// `true` when every component of every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(Quaternion::is_finite)
    }

    /// Checked entrywise sum.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b, "add")
    }

    /// Checked entrywise difference.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b, "subtract")
    }

    fn zip_with(
        &self,
        rhs: &Self,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
        what: &str,
    ) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "cannot {what} {}x{} and {}x{} matrices",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Quaternion matrix product `self · rhs`.
    ///
    /// Quaternion multiplication is non-commutative, so the factor order is
    /// preserved entry by entry: `(AB)_{mn} = Σ_k A_{mk} · B_{kn}`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        let n = rhs.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose `Aᴴ`: `(Aᴴ)_{nm} = conj(A_{mn})`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    /// Squared Frobenius norm `Σ |a_{mn}|²`.
    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.data.iter().map(Quaternion::norm_sqr).sum()
    }

    /// Frobenius norm `sqrt(Σ |a_{mn}|²)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sqr().sqrt()
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Quaternion {
        let mut t = Quaternion::zero();
        for d in 0..self.rows.min(self.cols) {
            t += self.get(d, d);
        }
        t
    }

    /// Real inner product `⟨A, B⟩ = ℜ tr(Aᴴ B)`, the Euclidean dot product of
    /// the component buffers.
    pub fn real_inner(&self, rhs: &Self) -> Result<f64> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch(format!(
                "inner product of {}x{} and {}x{} matrices",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z)
            .sum())
    }

    /// The first `k` columns as a new matrix.
    pub fn left_columns(&self, k: usize) -> Self {
        assert!(k <= self.cols, "cannot take {k} of {} columns", self.cols);
        Self::from_fn(self.rows, k, |r, c| self.get(r, c))
    }

    /// Equivalent complex matrix (complex adjoint).
    ///
    /// With the Cayley–Dickson split `Q = Q_a + Q_b·j`, where
    /// `Q_a = Q_0 + Q_1·i` and `Q_b = Q_2 + Q_3·i`, the adjoint is the
    /// `2M × 2N` complex block matrix `[[Q_a, Q_b], [−Q_b*, Q_a*]]`.
    pub fn complex_adjoint(&self) -> ComplexAdjoint {
        let (m, n) = self.shape();
        let mut mat = DMatrix::<Complex64>::zeros(2 * m, 2 * n);
        for r in 0..m {
            for c in 0..n {
                let q = self.get(r, c);
                let qa = Complex64::new(q.w, q.x);
                let qb = Complex64::new(q.y, q.z);
                mat[(r, c)] = qa;
                mat[(r, c + n)] = qb;
                mat[(r + m, c)] = -qb.conj();
                mat[(r + m, c + n)] = qa.conj();
            }
        }
        ComplexAdjoint {
            mat,
            qrows: m,
            qcols: n,
        }
    }

    /// Inverse of [`QMatrix::complex_adjoint`]: validates the block layout and
    /// reads the quaternion entries back out of the `Q_a` and `Q_b` blocks.
    pub fn from_complex_adjoint(adj: &ComplexAdjoint) -> Result<Self> {
        let (m, n) = (adj.qrows, adj.qcols);
        let mat = &adj.mat;
        // Structural check: block (2,2) conjugates block (1,1) and block
        // (2,1) is the negated conjugate of block (1,2).
        let mut residual_sqr = 0.0f64;
        for r in 0..m {
            for c in 0..n {
                let d1 = mat[(r + m, c + n)] - mat[(r, c)].conj();
                let d2 = mat[(r + m, c)] + mat[(r, c + n)].conj();
                residual_sqr += d1.norm_sqr() + d2.norm_sqr();
            }
        }
        let tol = 1e-10 * mat.norm().max(1.0);
        if residual_sqr.sqrt() > tol {
            return Err(Error::BlockStructure(format!(
                "residual {:.3e} exceeds tolerance {:.3e}",
                residual_sqr.sqrt(),
                tol
            )));
        }
        Ok(Self::read_adjoint_blocks(mat, m, n))
    }

    /// Reads quaternion entries from the `Q_a`/`Q_b` blocks without checking
    /// the layout; used internally where the structure holds by construction.
    pub(crate) fn read_adjoint_blocks(mat: &DMatrix<Complex64>, m: usize, n: usize) -> Self {
        Self::from_fn(m, n, |r, c| {
            let qa = mat[(r, c)];
            let qb = mat[(r, c + n)];
            Quaternion::new(qa.re, qa.im, qb.re, qb.im)
        })
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        &mut self.data[r * self.cols + c]
    }
}

// Operator sugar on references. These panic on shape mismatch (the checked
// variants return errors instead), mirroring the convention of dense linear
// algebra crates.

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: Self) -> QMatrix {
        self.checked_add(rhs).expect("matrix addition")
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: Self) -> QMatrix {
        self.checked_sub(rhs).expect("matrix subtraction")
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: Self) -> QMatrix {
        self.matmul(rhs).expect("matrix product")
    }
}

impl Mul<f64> for &QMatrix {
    type Output = QMatrix;
    fn mul(self, s: f64) -> QMatrix {
        self.scale(s)
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(-1.0)
    }
}

/// The `2M × 2N` equivalent complex matrix of an `M × N` quaternion matrix.
///
/// Every quaternion entry appears twice in this representation, hence
/// `‖Q‖_F = ‖Q_c‖_F / √2`.
#[derive(Clone, Debug)]
pub struct ComplexAdjoint {
    mat: DMatrix<Complex64>,
    qrows: usize,
    qcols: usize,
}

impl ComplexAdjoint {
    /// The underlying complex matrix.
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    /// Consumes the wrapper and returns the complex matrix.
    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    /// Wraps an existing complex matrix. Fails unless both dimensions are
    /// even; the block-structure check happens in
    /// [`QMatrix::from_complex_adjoint`].
    pub fn from_matrix(mat: DMatrix<Complex64>) -> Result<Self> {
        if !mat.nrows().is_multiple_of(2) || !mat.ncols().is_multiple_of(2) {
            return Err(Error::BlockStructure(format!(
                "{}x{} matrix cannot split into 2x2 blocks of equal size",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let (qrows, qcols) = (mat.nrows() / 2, mat.ncols() / 2);
        Ok(Self { mat, qrows, qcols })
    }

    /// Rows of the complex matrix (`2M`).
    pub fn rows(&self) -> usize {
        2 * self.qrows
    }

    /// Columns of the complex matrix (`2N`).
    pub fn cols(&self) -> usize {
        2 * self.qcols
    }

    /// Shape `(M, N)` of the underlying quaternion matrix.
    pub fn quaternion_shape(&self) -> (usize, usize) {
        (self.qrows, self.qcols)
    }
}

/// Observation index set Ω over an `M × N` grid with the projection `P_Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationMask {
    rows: usize,
    cols: usize,
    observed: Vec<bool>,
}

impl ObservationMask {
    /// Mask with every entry observed.
    pub fn full(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            observed: vec![true; rows * cols],
        }
    }

    /// Mask with no entry observed.
    pub fn empty(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            observed: vec![false; rows * cols],
        }
    }

    /// Builds a mask from a predicate over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut observed = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                observed.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            observed,
        }
    }

    /// Wraps a row-major boolean grid (`true` = observed).
    pub fn from_grid(rows: usize, cols: usize, observed: Vec<bool>) -> Result<Self> {
        if observed.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "grid of {} flags cannot fill a {rows}x{cols} mask",
                observed.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            observed,
        })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `true` when `(row, col)` is in Ω.
    #[inline]
    pub fn is_observed(&self, row: usize, col: usize) -> bool {
        self.observed[row * self.cols + col]
    }

    /// Row-major flag grid (`true` = observed).
    pub fn as_slice(&self) -> &[bool] {
        &self.observed
    }

    /// Number of observed entries `|Ω|`.
    pub fn observed_count(&self) -> usize {
        self.observed.iter().filter(|&&o| o).count()
    }

    /// Number of missing entries `|Ωᶜ|`.
    pub fn missing_count(&self) -> usize {
        self.observed.len() - self.observed_count()
    }

    /// Missing ratio `MR = 1 − |Ω| / (M·N)`.
    pub fn missing_ratio(&self) -> f64 {
        if self.observed.is_empty() {
            0.0
        } else {
            self.missing_count() as f64 / self.observed.len() as f64
        }
    }

    /// The complementary mask over Ωᶜ.
    pub fn complement(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            observed: self.observed.iter().map(|&o| !o).collect(),
        }
    }

    /// Projection `P_Ω(A)`: entries in Ω are copied, the rest are zeroed.
    pub fn project(&self, a: &QMatrix) -> Result<QMatrix> {
        if a.shape() != (self.rows, self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "cannot project {}x{} matrix through {}x{} mask",
                a.rows(),
                a.cols(),
                self.rows,
                self.cols
            )));
        }
        let data = a
            .as_slice()
            .iter()
            .zip(&self.observed)
            .map(|(&q, &o)| if o { q } else { Quaternion::zero() })
            .collect();
        QMatrix::from_vec(self.rows, self.cols, data)
    }

    /// Projection onto the complement, `P_Ωᶜ(A)`.
    pub fn project_complement(&self, a: &QMatrix) -> Result<QMatrix> {
        self.complement().project(a)
    }
}

/// Solves `X · H = B` for `X`, where `H` is `d × d` Hermitian positive
/// definite and `B` is `n × d`.
///
/// Right-division by the shifted Gram matrices of the ADMM factor updates.
/// Using `H = Hᴴ`, the system transposes to `H · Xᴴ = Bᴴ`, which is solved by
/// a Cholesky factorization of the `2d × 2d` complex adjoint of `H`; no
/// explicit inverse is ever formed.
pub fn hermitian_solve(h: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    let d = h.rows();
    if h.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "H must be square, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    if b.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "B has {} columns but H is {d}x{d}",
            b.cols()
        )));
    }
    let herm_residual = (h - &h.conj_transpose()).frobenius_norm();
    if herm_residual > 1e-10 * h.frobenius_norm().max(1.0) {
        return Err(Error::NotPositiveDefinite(format!(
            "H is not Hermitian: ‖H − Hᴴ‖ = {herm_residual:.3e}"
        )));
    }

    let hc = h.complex_adjoint().into_matrix();
    let chol = hc.clone().cholesky().ok_or_else(|| {
        // A cheap conditioning hint: the PD diagonal bounds the spectrum from
        // above, so a tiny or negative real diagonal entry names the culprit.
        let min_diag = (0..2 * d)
            .map(|i| hc[(i, i)].re)
            .fold(f64::INFINITY, f64::min);
        Error::NotPositiveDefinite(format!(
            "Cholesky failed for {d}x{d} quaternion H (min adjoint diagonal {min_diag:.3e})"
        ))
    })?;
    // The generic complex Cholesky takes complex square roots instead of
    // failing on an indefinite diagonal, so insist on a real positive factor
    // diagonal — the defining property of a valid Hermitian PD factorization.
    for i in 0..2 * d {
        let l_ii = chol.l_dirty()[(i, i)];
        if !(l_ii.re.is_finite() && l_ii.re > 0.0) || l_ii.im.abs() > 1e-8 * l_ii.re {
            return Err(Error::NotPositiveDefinite(format!(
                "H is indefinite or singular: factor diagonal {i} is {l_ii}"
            )));
        }
    }

    // H · Xᴴ = Bᴴ in the adjoint domain, then transpose back.
    let b_adj_t = b.complex_adjoint().into_matrix().adjoint();
    let y = chol.solve(&b_adj_t); // y = adjoint(X)ᴴ, shape 2d × 2n
    let x_adj = y.adjoint();
    Ok(QMatrix::read_adjoint_blocks(&x_adj, b.rows(), d))
}
