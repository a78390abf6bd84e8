//! Adaptive rank estimation from a factor's Gram spectrum.
//!
//! The completion solvers start from a deliberately overestimated working
//! rank `d⁰` and, once per run, look for a cliff in the spectrum of `UᴴU`:
//! if one quotient `σ_m/σ_{m+1}` towers over the rest, everything past
//! position `m` is treated as noise and both factors are truncated to the
//! leading block. This example drives [`estimate_rank`] directly and then
//! watches the same decision fire inside a solve.
//!
//! Run with `cargo run --example rank_estimation`.

use quatcomplete::imaging::{random_mask, MaskSpec};
use quatcomplete::pipeline::synthetic_truth;
use quatcomplete::solver::{estimate_rank, solve_with_progress, SolverConfig};
use quatcomplete::{NormVariant, QMatrix};

/// A factor whose Gram spectrum is exactly `gram_spectrum`: the square roots
/// go on the diagonal.
fn factor_with_spectrum(gram_spectrum: &[f64]) -> QMatrix {
    QMatrix::diagonal(
        &gram_spectrum
            .iter()
            .map(|s| s.sqrt())
            .collect::<Vec<_>>(),
    )
}

fn main() {
    // A clean cliff: quotients 2, 50, 2.5 — position 2 dominates, so the
    // estimate is rank 2 (indices are 1-based in the report below).
    let spectra: [(&str, &[f64]); 4] = [
        ("cliff after two", &[100.0, 50.0, 1.0, 0.4]),
        ("no dominant drop", &[8.0, 4.0, 2.0, 1.0]),
        ("already rank one", &[9.0, 1e-15, 1e-16, 0.0]),
        ("dead tail only", &[5.0, 1.0, 0.0, 0.0]),
    ];
    let threshold = 20.0;
    println!("threshold δ = {threshold}");
    for (label, spectrum) in spectra {
        let u = factor_with_spectrum(spectrum);
        let (rank, should_truncate) = estimate_rank(&u, spectrum.len(), threshold);
        println!(
            "{label:<18} Gram spectrum {spectrum:?} → rank {rank}, truncate: {should_truncate}"
        );
    }

    // The same machinery inside a run: a 60×60 rank-3 completion started at
    // working rank 12. The one-shot adjustment appears as a drop in the `d`
    // column (it is deferred past the first iterations, whose spectra still
    // reflect the random initialization).
    println!("\n60×60 rank-3 completion, d⁰ = 12:");
    let truth = synthetic_truth(60, 60, 3, 5);
    let mask = random_mask(
        60,
        60,
        &MaskSpec {
            missing_ratio: 0.4,
            seed: 5,
        },
    )
    .unwrap();
    let config = SolverConfig {
        d0: 12,
        ..SolverConfig::for_problem(NormVariant::Qdfn, 60, 60)
    };
    let mut last_d = config.d0;
    let result = solve_with_progress(&truth, &mask, &config, NormVariant::Qdfn, |p| {
        if p.d != last_d {
            println!(
                "  iteration {:>3}: working rank {} → {}",
                p.iteration, last_d, p.d
            );
            last_d = p.d;
        }
    })
    .unwrap();
    let err = (&result.x_hat - &truth).frobenius_norm() / truth.frobenius_norm();
    println!(
        "  finished after {} iterations: final rank {}, recovery error {:.3e}",
        result.iters, result.final_rank, err
    );
    assert_eq!(result.final_rank, 3);
}
