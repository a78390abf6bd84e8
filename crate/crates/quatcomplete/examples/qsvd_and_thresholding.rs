//! Quaternion SVD, soft singular-value thresholding, numerical rank, and
//! low-rank factorization.
//!
//! A quaternion matrix is factored through its complex adjoint: the adjoint's
//! singular values come in duplicated pairs, one copy per quaternion singular
//! value, and the quaternion singular vectors fold back out of the complex
//! ones.
//!
//! Run with `cargo run --example qsvd_and_thresholding`.

use quatcomplete::qsvd::{low_rank_factorize, quaternion_rank, default_rank_tol};
use quatcomplete::{qsvd, qsvt, QMatrix, SvdMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // A seeded random 8×6 quaternion matrix of exact rank 3: A = B·Cᴴ.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let b = QMatrix::random_normal(8, 3, &mut rng);
    let c = QMatrix::random_normal(6, 3, &mut rng);
    let a = b.matmul(&c.conj_transpose()).unwrap();

    // Thin QSVD: A = U·diag(σ)·Vᴴ with U: 8×6, V: 6×6, six singular values.
    let svd = qsvd(&a, SvdMode::Thin);
    println!("singular values:");
    for (t, s) in svd.singulars.iter().enumerate() {
        println!("  σ_{t} = {s:.6}");
    }

    // The factorization reconstructs A and the factors are unitary.
    let err = (&svd.reconstruct() - &a).frobenius_norm() / a.frobenius_norm();
    println!("reconstruction error = {err:.3e}");
    assert!(err < 1e-12);
    let gram = svd.u.conj_transpose().matmul(&svd.u).unwrap();
    let defect = (&gram - &QMatrix::identity(gram.rows())).frobenius_norm();
    println!("‖UᴴU − I‖ = {defect:.3e}");
    assert!(defect < 1e-12);

    // Exactly three singular values are nonzero: the numerical rank is 3.
    let rank = quaternion_rank(&a, default_rank_tol(a.rows(), a.cols()));
    println!("numerical rank = {rank}");
    assert_eq!(rank, 3);

    // Soft thresholding shrinks every singular value by δ and drops the ones
    // below it; it is the proximal step behind nuclear-norm models.
    let delta = 0.5 * svd.singulars[2];
    let shrunk = qsvt(&a, delta).unwrap();
    let shrunk_svd = qsvd(&shrunk, SvdMode::Thin);
    println!("after qsvt(δ = {delta:.4}):");
    for (t, s) in shrunk_svd.singulars.iter().take(4).enumerate() {
        let expect = (svd.singulars[t] - delta).max(0.0);
        println!("  σ_{t} = {s:.6} (expected {expect:.6})");
        assert!((s - expect).abs() < 1e-9);
    }

    // low_rank_factorize splits A into balanced U·Vᴴ factors of width d ≥
    // rank(A); completion solvers start from exactly this shape.
    let (u, v) = low_rank_factorize(&a, 4).unwrap();
    let refactored = u.matmul(&v.conj_transpose()).unwrap();
    let err = (&refactored - &a).frobenius_norm() / a.frobenius_norm();
    println!("rank-4 refactorization error = {err:.3e}");
    assert!(err < 1e-12);
}
