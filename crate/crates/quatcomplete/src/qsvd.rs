//! Quaternion singular value decomposition and derived operations.
//!
//! The QSVD of `A ∈ H^{M×N}` is `A = U · D · Vᴴ` with unitary quaternion `U`,
//! `V` and a real nonnegative diagonal `D`. It is computed from the complex
//! SVD of the equivalent complex matrix `A_c = Ũ · Ď · Ṽᴴ`: the singular
//! values of `A_c` appear in duplicated pairs, and the quaternion factors are
//! recovered by taking the odd-positioned columns (1st, 3rd, …) of `Ũ`, `Ṽ`
//! and reading each complex column `[a; b]` back as the quaternion column
//! `a − conj(b)·j`.
//!
//! For degenerate spectra a complex SVD routine may mix the paired singular
//! subspaces, in which case the plainly extracted factors fail unitarity.
//! [`qsvd`] detects that and rebuilds the affected factor columns with a
//! quaternion Gram–Schmidt pass over the full candidate pool, so the result
//! invariants hold for every input.
//!
//! On top of the decomposition this module provides the quaternion singular
//! value thresholding operator [`qsvt`] (the proximal map of the quaternion
//! nuclear norm), numerical rank, and the rank-`d` bilinear factorization
//! `A = U·Vᴴ` with `U = Â·[D_d^{1/2}; 0]`, `V = B̂·[D_d^{1/2}; 0]`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::Quaternion;

/// How many singular vectors [`qsvd`] returns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvdMode {
    /// `U: M × k`, `V: N × k` with `k = min(M, N)`. All solver paths use this.
    Thin,
    /// `U: M × M`, `V: N × N`, completed to full unitary bases.
    Full,
}

/// Result of [`qsvd`]: `A = U · diag(singulars) · Vᴴ`.
#[derive(Clone, Debug)]
pub struct QsvdResult {
    /// Left singular vectors (`M × k` thin, `M × M` full).
    pub u: QMatrix,
    /// Singular values, nonincreasing, all `≥ 0`; length `min(M, N)`.
    pub singulars: Vec<f64>,
    /// Right singular vectors (`N × k` thin, `N × N` full).
    pub v: QMatrix,
}

impl QsvdResult {
    /// Rebuilds `U · diag(singulars) · Vᴴ` (the diagonal is rectangular when
    /// the factors are full).
    pub fn reconstruct(&self) -> QMatrix {
        let scaled = QMatrix::from_fn(self.u.rows(), self.singulars.len(), |r, c| {
            self.u.get(r, c).scale(self.singulars[c])
        });
        let v_lead = self.v.left_columns(self.singulars.len());
        scaled.matmul(&v_lead.conj_transpose()).expect("shapes agree")
    }
}

/// Relative rank tolerance used where no explicit tolerance is supplied:
/// `max(M, N) · ε`, the customary dense-linear-algebra default.
pub fn default_rank_tol(rows: usize, cols: usize) -> f64 {
    rows.max(cols) as f64 * f64::EPSILON
}

/// Quaternion singular value decomposition.
///
/// The zero matrix yields all-zero singular values with identity-padded
/// (orthonormal) factors rather than an error, since solver iterates can
/// transiently vanish.
pub fn qsvd(a: &QMatrix, mode: SvdMode) -> QsvdResult {
    let (m, n) = a.shape();
    let k = m.min(n);

    if a.frobenius_norm_sqr() == 0.0 {
        let (ucols, vcols) = match mode {
            SvdMode::Thin => (k, k),
            SvdMode::Full => (m, n),
        };
        return QsvdResult {
            u: QMatrix::eye(m, ucols),
            singulars: vec![0.0; k],
            v: QMatrix::eye(n, vcols),
        };
    }

    let adjoint = a.complex_adjoint().into_matrix();
    let svd = adjoint.svd(true, true);
    let cu = svd.u.as_ref().expect("left vectors requested");
    let cv = svd.v_t.as_ref().expect("right vectors requested").adjoint();
    let sv = &svd.singular_values;

    // The adjoint's singular values come in duplicated pairs; entry 2t of the
    // sorted complex spectrum is quaternion singular value t. When the backend
    // resolves a tight cluster inexactly the pairs can interleave, which
    // perturbs the reported values by no more than the backend error itself;
    // the orthonormality check below catches any vector-level fallout.
    let singulars: Vec<f64> = (0..k).map(|t| sv[2 * t]).collect();

    let mut u_cols: Vec<Vec<Quaternion>> = (0..k)
        .map(|t| quaternion_column(cu, 2 * t, m))
        .collect();
    let mut v_cols: Vec<Vec<Quaternion>> = (0..k)
        .map(|t| quaternion_column(&cv, 2 * t, n))
        .collect();

    // Degenerate spectra can leave the plainly extracted columns
    // non-orthonormal; rebuild from the full candidate pool if so.
    let tol = 1e-11 * (1.0 + (k as f64).sqrt());
    if unitarity_defect(&u_cols) > tol || unitarity_defect(&v_cols) > tol {
        rebuild_degenerate(a, cu, &cv, &singulars, &mut u_cols, &mut v_cols);
        debug_assert!(unitarity_defect(&u_cols) <= tol && unitarity_defect(&v_cols) <= tol);
    }

    if mode == SvdMode::Full {
        complete_basis(&mut u_cols, m);
        complete_basis(&mut v_cols, n);
    }

    QsvdResult {
        u: columns_to_matrix(m, &u_cols),
        singulars,
        v: columns_to_matrix(n, &v_cols),
    }
}

/// Quaternion singular value thresholding `D_δ(M) = P·diag(max(σ_i − δ, 0))·Qᴴ`,
/// the proximal operator of `δ‖·‖_*`.
pub fn qsvt(m: &QMatrix, delta: f64) -> Result<QMatrix> {
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "qsvt threshold must be nonnegative, got {delta}"
        )));
    }
    let dec = qsvd(m, SvdMode::Thin);
    let kept = dec.singulars.iter().take_while(|&&s| s > delta).count();
    if kept == 0 {
        return Ok(QMatrix::zeros(m.rows(), m.cols()));
    }
    let scaled = QMatrix::from_fn(m.rows(), kept, |r, c| {
        dec.u.get(r, c).scale(dec.singulars[c] - delta)
    });
    let v_kept = dec.v.left_columns(kept);
    scaled.matmul(&v_kept.conj_transpose())
}

/// Number of singular values exceeding `tol · σ₁` (0 for the zero matrix).
///
/// `tol` must be positive; see [`default_rank_tol`] for the customary choice.
pub fn quaternion_rank(a: &QMatrix, tol: f64) -> usize {
    assert!(tol > 0.0, "rank tolerance must be positive, got {tol}");
    let singulars = qsvd(a, SvdMode::Thin).singulars;
    match singulars.first() {
        None | Some(0.0) => 0,
        Some(&s1) => singulars.iter().filter(|&&s| s > tol * s1).count(),
    }
}

/// Rank-`d` bilinear factorization `A = U·Vᴴ` with `U ∈ H^{M×d}`,
/// `V ∈ H^{N×d}`.
///
/// From the QSVD `A = Â·D·B̂ᴴ`, the factors are `U = Â·[D_r^{1/2}; 0]` and
/// `V = B̂·[D_r^{1/2}; 0]` where `r` is the numerical rank of `A`; columns
/// past `r` are exactly zero, so both factors inherit the rank of `A` and
/// carry no square-rooted noise from trailing singular values. Fails when
/// `d < r`.
pub fn low_rank_factorize(a: &QMatrix, d: usize) -> Result<(QMatrix, QMatrix)> {
    let (m, n) = a.shape();
    let dec = qsvd(a, SvdMode::Thin);
    let rank = match dec.singulars.first() {
        None | Some(0.0) => 0,
        Some(&s1) => {
            let tol = default_rank_tol(m, n);
            dec.singulars.iter().filter(|&&s| s > tol * s1).count()
        }
    };
    if d < rank {
        return Err(Error::RankInfeasible(format!(
            "requested d = {d} columns but the matrix has rank {rank}"
        )));
    }
    let u = QMatrix::from_fn(m, d, |r, c| {
        if c < rank {
            dec.u.get(r, c).scale(dec.singulars[c].sqrt())
        } else {
            Quaternion::zero()
        }
    });
    let v = QMatrix::from_fn(n, d, |r, c| {
        if c < rank {
            dec.v.get(r, c).scale(dec.singulars[c].sqrt())
        } else {
            Quaternion::zero()
        }
    });
    Ok((u, v))
}

/// Reads complex column `col` of `mat` (stacked halves of height `half`) as a
/// quaternion column: `[a; b] ↦ a − conj(b)·j`.
fn quaternion_column(mat: &DMatrix<Complex64>, col: usize, half: usize) -> Vec<Quaternion> {
    (0..half)
        .map(|r| {
            let a = mat[(r, col)];
            let b = mat[(r + half, col)];
            Quaternion::new(a.re, a.im, -b.re, b.im)
        })
        .collect()
}

fn columns_to_matrix(rows: usize, cols: &[Vec<Quaternion>]) -> QMatrix {
    QMatrix::from_fn(rows, cols.len(), |r, c| cols[c][r])
}

/// Quaternion inner product of columns, `⟨a, b⟩ = Σ conj(a_i)·b_i`.
fn col_inner(a: &[Quaternion], b: &[Quaternion]) -> Quaternion {
    let mut acc = Quaternion::zero();
    for (&x, &y) in a.iter().zip(b) {
        acc += x.conj() * y;
    }
    acc
}

fn col_norm(a: &[Quaternion]) -> f64 {
    a.iter().map(Quaternion::norm_sqr).sum::<f64>().sqrt()
}

/// `‖Cᴴ·C − I‖_F` for a set of columns.
fn unitarity_defect(cols: &[Vec<Quaternion>]) -> f64 {
    let mut defect = 0.0;
    for (i, a) in cols.iter().enumerate() {
        for (j, b) in cols.iter().enumerate().skip(i) {
            let mut g = col_inner(a, b);
            if i == j {
                g.w -= 1.0;
            }
            let w = if i == j { 1.0 } else { 2.0 };
            defect += w * g.norm_sqr();
        }
    }
    defect.sqrt()
}

/// Projects `candidate` against `accepted` columns (right-module Gram–Schmidt,
/// coefficients multiply from the right) and normalizes it. Returns the
/// residual norm before normalization.
fn orthonormalize_against(accepted: &[Vec<Quaternion>], candidate: &mut [Quaternion]) -> f64 {
    // Two projection passes counter the usual Gram–Schmidt cancellation.
    for _ in 0..2 {
        for basis in accepted {
            let coeff = col_inner(basis, candidate);
            for (c, &b) in candidate.iter_mut().zip(basis.iter()) {
                *c -= b * coeff;
            }
        }
    }
    let norm = col_norm(candidate);
    if norm > 0.0 {
        let inv = 1.0 / norm;
        for c in candidate.iter_mut() {
            *c = c.scale(inv);
        }
    }
    norm
}

/// Rebuilds the factor columns of a degenerate decomposition.
///
/// Within each group of (numerically) equal singular values the complex SVD
/// is free to mix the duplicated pair subspaces, so the odd-column rule can
/// return quaternion-collinear candidates. All `2g` complex columns of a
/// group quaternion-span exactly the `g`-dimensional singular subspace, so a
/// quaternion Gram–Schmidt over that pool recovers an orthonormal `V` block.
/// Each matching `U` column is the normalized image `A·v / ‖A·v‖`, itself
/// re-orthonormalized: for well-separated or exactly repeated spectra that is
/// a no-op, while for singular values at the noise floor (where the images
/// are unreliable) it restores orthonormality at a reconstruction cost no
/// larger than those singular values themselves. Zero groups take any
/// orthonormal completion on both sides.
fn rebuild_degenerate(
    a: &QMatrix,
    cu: &DMatrix<Complex64>,
    cv: &DMatrix<Complex64>,
    singulars: &[f64],
    u_cols: &mut [Vec<Quaternion>],
    v_cols: &mut [Vec<Quaternion>],
) {
    let (m, n) = a.shape();
    let k = singulars.len();
    let s1 = singulars[0];
    let zero_tol = default_rank_tol(m, n) * s1;
    let group_tol = (1e-8 * s1).max(zero_tol);

    let mut accepted_v: Vec<Vec<Quaternion>> = Vec::with_capacity(k);
    let mut accepted_u: Vec<Vec<Quaternion>> = Vec::with_capacity(k);

    let mut start = 0;
    while start < k {
        let mut end = start + 1;
        while end < k && singulars[end - 1] - singulars[end] <= group_tol {
            end += 1;
        }
        let group_len = end - start;
        let is_zero_group = singulars[start] <= zero_tol;

        // Candidate pool: every complex column of the group (both partners).
        let pool: Vec<usize> = (2 * start..2 * end).collect();
        let mut taken = 0;
        for &col in &pool {
            if taken == group_len {
                break;
            }
            let mut cand = quaternion_column(cv, col, n);
            if orthonormalize_against(&accepted_v, &mut cand) < 1e-3 {
                continue; // quaternion-collinear with an accepted column
            }
            if !is_zero_group {
                push_left_image(a, &cand, &mut accepted_u);
            }
            accepted_v.push(cand);
            taken += 1;
        }
        // Numerically exhausted pool: fall back to canonical axes. For a
        // nonzero group this can only happen at the noise floor.
        for _ in taken..group_len {
            fill_from_canonical(&mut accepted_v, n, 1);
            if !is_zero_group {
                let cand = accepted_v.last().expect("just pushed").clone();
                push_left_image(a, &cand, &mut accepted_u);
            }
        }

        if is_zero_group {
            // Left columns of a zero group are any orthonormal completion.
            let mut needed = group_len;
            for &col in &pool {
                if needed == 0 {
                    break;
                }
                let mut cand = quaternion_column(cu, col, m);
                if orthonormalize_against(&accepted_u, &mut cand) >= 1e-3 {
                    accepted_u.push(cand);
                    needed -= 1;
                }
            }
            fill_from_canonical(&mut accepted_u, m, needed);
        }
        start = end;
    }

    u_cols.clone_from_slice(&accepted_u);
    v_cols.clone_from_slice(&accepted_v);
}

/// Appends the orthonormalized image `A·v / ‖A·v‖` to `accepted`, falling
/// back to a canonical completion when the image carries no new direction.
fn push_left_image(a: &QMatrix, v: &[Quaternion], accepted: &mut Vec<Vec<Quaternion>>) {
    let mut image = apply_to_column(a, v);
    let pre = col_norm(&image);
    if pre > 0.0 && orthonormalize_against(accepted, &mut image) >= 1e-6 * pre {
        accepted.push(image);
    } else {
        fill_from_canonical(accepted, a.rows(), 1);
    }
}

/// Appends `count` canonical-basis completions orthonormal to `accepted`.
fn fill_from_canonical(accepted: &mut Vec<Vec<Quaternion>>, dim: usize, count: usize) {
    let mut added = 0;
    for axis in 0..dim {
        if added == count {
            break;
        }
        let mut cand = vec![Quaternion::zero(); dim];
        cand[axis] = Quaternion::one();
        if orthonormalize_against(accepted, &mut cand) >= 0.5 {
            accepted.push(cand);
            added += 1;
        }
    }
    assert!(added == count, "failed to complete an orthonormal basis");
}

/// Extends `cols` to a full orthonormal basis of `H^dim`.
fn complete_basis(cols: &mut Vec<Vec<Quaternion>>, dim: usize) {
    let missing = dim - cols.len();
    if missing > 0 {
        // Canonical candidates suffice: at most `cols.len()` of them can be
        // (numerically) inside the current span.
        let mut added = 0;
        for axis in 0..dim {
            if added == missing {
                break;
            }
            let mut cand = vec![Quaternion::zero(); dim];
            cand[axis] = Quaternion::one();
            if orthonormalize_against(cols, &mut cand) >= 1e-3 {
                cols.push(cand);
                added += 1;
            }
        }
        assert!(added == missing, "failed to complete an orthonormal basis");
    }
}

/// `A · v` for a column vector `v` of length `cols(A)`.
fn apply_to_column(a: &QMatrix, v: &[Quaternion]) -> Vec<Quaternion> {
    let (m, n) = a.shape();
    let mut out = vec![Quaternion::zero(); m];
    debug_assert_eq!(v.len(), n);
    for (r, o) in out.iter_mut().enumerate() {
        let mut acc = Quaternion::zero();
        for (c, &vc) in v.iter().enumerate() {
            acc += a.get(r, c) * vc;
        }
        *o = acc;
    }
    out
}
