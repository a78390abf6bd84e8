//! The three bilinear-factor objectives and the Schatten norms they induce.
//!
//! Minimizing each factor objective over all factorizations `U·Vᴴ = A` with
//! enough columns yields a Schatten norm of `A`:
//!
//! * double Frobenius  `½‖U‖_F² + ½‖V‖_F²`        → Schatten-1 (nuclear),
//! * double nuclear    `¼(‖U‖_* + ‖V‖_*)²`        → Schatten-1/2,
//! * Frobenius/nuclear `[(‖U‖_F² + 2‖V‖_*)/3]^1.5` → Schatten-2/3.
//!
//! The sub-1 exponents penalize small singular values more gently than the
//! nuclear norm does, which is why the corresponding completion models
//! recover low-rank structure more aggressively.
//!
//! Run with `cargo run --example norm_equivalences`.

use quatcomplete::norms::{factor_objective, optimal_factors, q_schatten_p, sv_product_bound};
use quatcomplete::{NormVariant, QMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // A seeded random 10×7 quaternion matrix of exact rank 4.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let b = QMatrix::random_normal(10, 4, &mut rng);
    let c = QMatrix::random_normal(7, 4, &mut rng);
    let a = b.matmul(&c.conj_transpose()).unwrap();

    println!("{:<22} {:>14} {:>14} {:>11}", "model", "min objective", "Schatten norm", "gap");
    for (variant, p) in [
        (NormVariant::Qdfn, 1.0),
        (NormVariant::Qdnn, 0.5),
        (NormVariant::Qfnn, 2.0 / 3.0),
    ] {
        // Closed-form minimizer over factor pairs with d = 5 ≥ rank columns.
        let (u, v) = optimal_factors(&a, 5, variant).unwrap();

        // The pair actually factors A …
        let err = (&u.matmul(&v.conj_transpose()).unwrap() - &a).frobenius_norm();
        assert!(err < 1e-9 * a.frobenius_norm());

        // … and its objective equals the Schatten-p norm of A.
        let objective = factor_objective(&u, &v, variant).unwrap();
        let norm = q_schatten_p(&a, p);
        println!(
            "{:<22} {:>14.6} {:>14.6} {:>11.3e}",
            format!("{variant} (p = {p:.3})"),
            objective,
            norm,
            (objective - norm).abs()
        );
        assert!((objective - norm).abs() < 1e-6 * norm);

        // Any other factorization of A can only do worse: rebalancing the
        // pair as (2U, V/2) keeps the product U·Vᴴ but raises the objective.
        let unbalanced =
            factor_objective(&u.scale(2.0), &v.scale(0.5), variant).unwrap();
        assert!(unbalanced > objective);
    }

    // The equivalences rest on a product inequality for singular values:
    // Σ_k σ_k^p(U·Vᴴ) ≤ Σ_k σ_k^p(U)·σ_k^p(V) for every factor pair.
    println!("\nsingular value product bound (random pairs):");
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for p in [0.5, 2.0 / 3.0, 1.0] {
        let u = QMatrix::random_normal(9, 4, &mut rng);
        let v = QMatrix::random_normal(6, 4, &mut rng);
        let (lhs, rhs) = sv_product_bound(&u, &v, p).unwrap();
        println!("  p = {p:.3}: {lhs:.6} ≤ {rhs:.6}");
        assert!(lhs <= rhs * (1.0 + 1e-12));
    }
}
