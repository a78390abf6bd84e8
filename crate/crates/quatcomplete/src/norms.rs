//! Schatten-`p` norms of quaternion matrices and the three bilinear-factor
//! norm objectives built on them.
//!
//! For a quaternion matrix with singular values `σ_1 ≥ σ_2 ≥ …`, the
//! Schatten-`p` norm is `(Σ_k σ_k^p)^{1/p}`. The three factor objectives
//! evaluated on a pair `(U, V)` with `U ∈ H^{M×d}`, `V ∈ H^{N×d}` are
//!
//! * double Frobenius: `½‖U‖_F² + ½‖V‖_F²`,
//! * double nuclear: `¼(‖U‖_* + ‖V‖_*)²`,
//! * Frobenius/nuclear: `[(‖U‖_F² + 2‖V‖_*)/3]^{3/2}`.
//!
//! Minimized over all factorizations `U·Vᴴ = X` with enough columns, these
//! equal the Schatten-1 (nuclear), Schatten-1/2, and Schatten-2/3 norms of
//! `X` respectively; [`optimal_factors`] constructs the minimizing pair in
//! closed form from the QSVD, and [`sv_product_bound`] exposes the singular
//! value product inequality that underlies the equivalences.

use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::qsvd::{default_rank_tol, qsvd, SvdMode};
use crate::quat::Quaternion;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The three bilinear-factor norm models.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum NormVariant {
    /// Double Frobenius norm: `½‖U‖_F² + ½‖V‖_F²`, equal to the nuclear norm.
    Qdfn,
    /// Double nuclear norm: `¼(‖U‖_* + ‖V‖_*)²`, equal to the Schatten-1/2
    /// quasi-norm.
    Qdnn,
    /// Frobenius/nuclear norm: `[(‖U‖_F² + 2‖V‖_*)/3]^{3/2}`, equal to the
    /// Schatten-2/3 quasi-norm.
    Qfnn,
}

impl fmt::Display for NormVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            NormVariant::Qdfn => "qdfn",
            NormVariant::Qdnn => "qdnn",
            NormVariant::Qfnn => "qfnn",
        };
        f.write_str(name)
    }
}

/// Schatten-`p` norm `(Σ_k σ_k^p)^{1/p}` over all singular values of `a`.
///
/// For `p ≥ 1` this is a norm; for `0 < p < 1` it is a quasi-norm and the
/// triangle inequality is not guaranteed. `p = 1` gives the nuclear norm and
/// `p = 2` the Frobenius norm.
///
/// # Panics
///
/// Panics if `p ≤ 0`.
pub fn q_schatten_p(a: &QMatrix, p: f64) -> f64 {
    assert!(p > 0.0, "Schatten exponent must be positive, got {p}");
    let sum: f64 = qsvd(a, SvdMode::Thin)
        .singulars
        .iter()
        .map(|s| s.powf(p))
        .sum();
    sum.powf(1.0 / p)
}

/// Nuclear norm `Σ_k σ_k` (Schatten-1).
pub fn q_nuclear_norm(a: &QMatrix) -> f64 {
    qsvd(a, SvdMode::Thin).singulars.iter().sum()
}

/// Evaluates the `variant` objective on a factor pair sharing `d` columns.
///
/// Errors if `U` and `V` disagree on the number of columns.
pub fn factor_objective(u: &QMatrix, v: &QMatrix, variant: NormVariant) -> Result<f64> {
    if u.cols() != v.cols() {
        return Err(Error::DimensionMismatch(format!(
            "factor pair must share a column count, got {}x{} and {}x{}",
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let value = match variant {
        NormVariant::Qdfn => 0.5 * u.frobenius_norm_sqr() + 0.5 * v.frobenius_norm_sqr(),
        NormVariant::Qdnn => {
            let s = q_nuclear_norm(u) + q_nuclear_norm(v);
            0.25 * s * s
        }
        NormVariant::Qfnn => {
            let s = (u.frobenius_norm_sqr() + 2.0 * q_nuclear_norm(v)) / 3.0;
            s.powf(1.5)
        }
    };
    Ok(value)
}

/// Closed-form minimizer of [`factor_objective`] over factorizations
/// `U·Vᴴ = A` with `d` columns.
///
/// With the QSVD `A = Â·D·B̂ᴴ`, the double Frobenius and double nuclear
/// models are minimized by `U★ = Â·D^{1/2}`, `V★ = B̂·D^{1/2}`; the
/// Frobenius/nuclear model by `U★ = Â·D^{1/3}`, `V★ = B̂·D^{2/3}`. Columns
/// past the numerical rank are zero. At the result, the objective equals the
/// Schatten-`p` norm of `A` with `p = 1`, `1/2`, `2/3` respectively.
///
/// Errors if `d` is less than the numerical rank of `A`.
pub fn optimal_factors(a: &QMatrix, d: usize, variant: NormVariant) -> Result<(QMatrix, QMatrix)> {
    let (m, n) = a.shape();
    let dec = qsvd(a, SvdMode::Thin);
    let rank = match dec.singulars.first() {
        None | Some(0.0) => 0,
        Some(&s1) => {
            let tol = default_rank_tol(m, n) * s1;
            dec.singulars.iter().filter(|&&s| s > tol).count()
        }
    };
    if d < rank {
        return Err(Error::RankInfeasible(format!(
            "requested d = {d} columns but the matrix has rank {rank}"
        )));
    }
    let (eu, ev) = match variant {
        NormVariant::Qdfn | NormVariant::Qdnn => (0.5, 0.5),
        NormVariant::Qfnn => (1.0 / 3.0, 2.0 / 3.0),
    };
    let u = QMatrix::from_fn(m, d, |r, c| {
        if c < rank {
            dec.u.get(r, c).scale(dec.singulars[c].powf(eu))
        } else {
            Quaternion::zero()
        }
    });
    let v = QMatrix::from_fn(n, d, |r, c| {
        if c < rank {
            dec.v.get(r, c).scale(dec.singulars[c].powf(ev))
        } else {
            Quaternion::zero()
        }
    });
    Ok((u, v))
}

/// Both sides of the singular value product inequality
/// `Σ_{k≤K} σ_k^p(U·Vᴴ) ≤ Σ_{k≤K} σ_k^p(U)·σ_k^p(V)` with
/// `K = min(M, N, d)`.
///
/// Returns `(lhs, rhs)`; callers assert `lhs ≤ rhs` up to round-off. Errors
/// if the factors disagree on the number of columns.
pub fn sv_product_bound(u: &QMatrix, v: &QMatrix, p: f64) -> Result<(f64, f64)> {
    assert!(p > 0.0, "exponent must be positive, got {p}");
    if u.cols() != v.cols() {
        return Err(Error::DimensionMismatch(format!(
            "factor pair must share a column count, got {}x{} and {}x{}",
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let product = u.matmul(&v.conj_transpose())?;
    let k = u.rows().min(v.rows()).min(u.cols());
    let sp = qsvd(&product, SvdMode::Thin).singulars;
    let su = qsvd(u, SvdMode::Thin).singulars;
    let sv = qsvd(v, SvdMode::Thin).singulars;
    let lhs = sp.iter().take(k).map(|s| s.powf(p)).sum();
    let rhs = (0..k)
        .map(|i| {
            let a = su.get(i).copied().unwrap_or(0.0);
            let b = sv.get(i).copied().unwrap_or(0.0);
            a.powf(p) * b.powf(p)
        })
        .sum();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    fn real_diag(values: &[f64]) -> QMatrix {
        QMatrix::diagonal(values)
    }

    fn random_rank(m: usize, n: usize, r: usize, rng: &mut ChaCha8Rng) -> QMatrix {
        let a = QMatrix::random_normal(m, r, rng);
        let b = QMatrix::random_normal(n, r, rng);
        a.matmul(&b.conj_transpose()).unwrap()
    }

    #[test]
    fn schatten_p_examples() {
        assert!(rel_close(q_schatten_p(&real_diag(&[3.0, 1.0]), 1.0), 4.0, 1e-12));
        assert!(rel_close(q_schatten_p(&real_diag(&[4.0, 1.0]), 0.5), 9.0, 1e-12));

        // A rank-one matrix with unit singular value scores 1 for every p.
        // Exponents below one amplify round-off in the trailing singular
        // values ((1e-16)^{1/2} = 1e-8), hence the looser tolerance there.
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let u = QMatrix::random_normal(5, 1, &mut rng);
        let v = QMatrix::random_normal(4, 1, &mut rng);
        let scale = 1.0 / (u.frobenius_norm() * v.frobenius_norm());
        let unit = u.matmul(&v.conj_transpose()).unwrap().scale(scale);
        for p in [0.5, 2.0 / 3.0, 1.0, 2.0] {
            let tol = if p < 1.0 { 1e-6 } else { 1e-12 };
            assert!(rel_close(q_schatten_p(&unit, p), 1.0, tol));
        }

        assert_eq!(q_schatten_p(&QMatrix::zeros(3, 4), 0.5), 0.0);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn schatten_p_rejects_nonpositive_exponent() {
        q_schatten_p(&QMatrix::identity(2), 0.0);
    }

    #[test]
    fn factor_objective_examples() {
        let z5 = QMatrix::zeros(5, 2);
        let z4 = QMatrix::zeros(4, 2);
        for variant in [NormVariant::Qdfn, NormVariant::Qdnn, NormVariant::Qfnn] {
            assert_eq!(factor_objective(&z5, &z4, variant).unwrap(), 0.0);
        }

        let eye = QMatrix::identity(2);
        assert!(rel_close(
            factor_objective(&eye, &eye, NormVariant::Qdfn).unwrap(),
            2.0,
            1e-12
        ));

        let u = real_diag(&[4.0]);
        let v = real_diag(&[1.0]);
        assert!(rel_close(
            factor_objective(&u, &v, NormVariant::Qdnn).unwrap(),
            6.25,
            1e-12
        ));

        let narrow = QMatrix::zeros(5, 3);
        assert!(matches!(
            factor_objective(&narrow, &z4, NormVariant::Qdfn),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn optimal_factors_examples() {
        // Zero matrix: zero factors and zero objective.
        let zero = QMatrix::zeros(4, 3);
        for variant in [NormVariant::Qdfn, NormVariant::Qdnn, NormVariant::Qfnn] {
            let (u, v) = optimal_factors(&zero, 2, variant).unwrap();
            assert_eq!(u, QMatrix::zeros(4, 2));
            assert_eq!(v, QMatrix::zeros(3, 2));
            assert_eq!(factor_objective(&u, &v, variant).unwrap(), 0.0);
        }

        // diag(4, 1) under the double nuclear model: objective (√4 + √1)² = 9.
        let a = real_diag(&[4.0, 1.0]);
        let (u, v) = optimal_factors(&a, 2, NormVariant::Qdnn).unwrap();
        let objective = factor_objective(&u, &v, NormVariant::Qdnn).unwrap();
        assert!(rel_close(objective, 9.0, 1e-12));
        assert!(rel_close(q_schatten_p(&a, 0.5), 9.0, 1e-12));

        // Random rank-3: each variant's objective equals the matching
        // Schatten-p norm of A, and the product reconstructs A.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let a = random_rank(5, 4, 3, &mut rng);
        for (variant, p) in [
            (NormVariant::Qdfn, 1.0),
            (NormVariant::Qdnn, 0.5),
            (NormVariant::Qfnn, 2.0 / 3.0),
        ] {
            let (u, v) = optimal_factors(&a, 3, variant).unwrap();
            let recon = u.matmul(&v.conj_transpose()).unwrap();
            assert!((&recon - &a).frobenius_norm() <= 1e-9 * a.frobenius_norm());
            let objective = factor_objective(&u, &v, variant).unwrap();
            let schatten = q_schatten_p(&a, p);
            assert!(
                rel_close(objective, schatten, 1e-8),
                "{variant}: objective {objective} vs Schatten {schatten}"
            );
        }

        assert!(matches!(
            optimal_factors(&a, 2, NormVariant::Qdfn),
            Err(Error::RankInfeasible(_))
        ));
    }

    #[test]
    fn optimal_factors_minimize_over_feasible_pairs() {
        // Any factorization A = U·Vᴴ can be reparameterized by an invertible
        // G as (U★·G, V★·G⁻ᴴ); the closed-form pair must score no worse.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a = random_rank(6, 5, 3, &mut rng);
        for variant in [NormVariant::Qdfn, NormVariant::Qdnn, NormVariant::Qfnn] {
            let (us, vs) = optimal_factors(&a, 3, variant).unwrap();
            let best = factor_objective(&us, &vs, variant).unwrap();
            for _ in 0..20 {
                // G = W·diag(r) with W unitary and r positive keeps the
                // inverse transpose available in closed form: G⁻ᴴ = W·diag(1/r).
                let w = qsvd(&QMatrix::random_normal(3, 3, &mut rng), SvdMode::Thin).u;
                let radii: Vec<f64> = (0..3).map(|_| 0.25 + 2.0 * rng.random::<f64>()).collect();
                let g = w
                    .matmul(&real_diag(&radii))
                    .unwrap();
                let g_inv_h = w
                    .matmul(&real_diag(
                        &radii.iter().map(|r| 1.0 / r).collect::<Vec<_>>(),
                    ))
                    .unwrap();
                let u = us.matmul(&g).unwrap();
                let v = vs.matmul(&g_inv_h).unwrap();
                let product = u.matmul(&v.conj_transpose()).unwrap();
                assert!((&product - &a).frobenius_norm() <= 1e-9 * a.frobenius_norm());
                let objective = factor_objective(&u, &v, variant).unwrap();
                assert!(
                    objective >= best - 1e-9 * best,
                    "{variant}: feasible pair scored {objective} below optimum {best}"
                );
            }
        }
    }

    #[test]
    fn schatten_is_unitarily_invariant_and_homogeneous() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let a = QMatrix::random_normal(5, 4, &mut rng);
        let p_full = qsvd(&QMatrix::random_normal(5, 5, &mut rng), SvdMode::Thin).u;
        let q_full = qsvd(&QMatrix::random_normal(4, 4, &mut rng), SvdMode::Thin).u;
        let rotated = p_full.matmul(&a).unwrap().matmul(&q_full.conj_transpose()).unwrap();
        for p in [0.5, 1.0, 2.0] {
            assert!(rel_close(q_schatten_p(&a, p), q_schatten_p(&rotated, p), 1e-10));
            let c = 3.7;
            assert!(rel_close(
                q_schatten_p(&a.scale(c), p),
                c * q_schatten_p(&a, p),
                1e-10
            ));
        }
    }

    #[test]
    fn schatten_one_matches_double_frobenius_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let a = random_rank(6, 4, 2, &mut rng);
        let (u, v) = optimal_factors(&a, 2, NormVariant::Qdfn).unwrap();
        let objective = 0.5 * (u.frobenius_norm_sqr() + v.frobenius_norm_sqr());
        assert!(rel_close(q_schatten_p(&a, 1.0), objective, 1e-10));
    }

    #[test]
    fn sv_product_bound_examples() {
        let eye = QMatrix::identity(3);
        let (lhs, rhs) = sv_product_bound(&eye, &eye, 1.0).unwrap();
        assert!(rel_close(lhs, rhs, 1e-12));

        let u = QMatrix::random_normal(4, 2, &mut ChaCha8Rng::seed_from_u64(45));
        let zero = QMatrix::zeros(5, 2);
        let (lhs, rhs) = sv_product_bound(&u, &zero, 0.5).unwrap();
        assert_eq!((lhs, rhs), (0.0, 0.0));

        assert!(matches!(
            sv_product_bound(&u, &QMatrix::zeros(5, 3), 1.0),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn sv_product_bound_holds_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        for trial in 0..50 {
            let m = 1 + (trial % 20);
            let n = 1 + ((trial * 7) % 20);
            let d = 1 + (trial % 8);
            let u = QMatrix::random_normal(m, d, &mut rng);
            let v = QMatrix::random_normal(n, d, &mut rng);
            for p in [0.5, 2.0 / 3.0, 1.0, 2.0] {
                let (lhs, rhs) = sv_product_bound(&u, &v, p).unwrap();
                assert!(
                    lhs <= rhs + 1e-9 * rhs.max(1.0),
                    "violated at {m}x{n} d={d} p={p}: {lhs} > {rhs}"
                );
            }
        }
    }
}
