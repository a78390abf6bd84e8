//! Acceptance suite: one test per shipped guarantee, each printing a
//! `ACCEPTANCE <n> <name> ... PASS`/`FAIL` line.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see every line.
//! The heavy criteria are serialized behind a global lock so their wall-clock
//! bounds are measured without interference.

use quatcomplete::imaging::{
    image_to_qmatrix, psnr, qmatrix_to_image, random_mask, save_png, synthetic_test_image,
    MaskSpec,
};
use quatcomplete::norms::{factor_objective, optimal_factors, q_schatten_p, sv_product_bound};
use quatcomplete::pipeline::synthetic_truth;
use quatcomplete::quat::basis;
use quatcomplete::solver::{estimate_rank, SolverState};
use quatcomplete::{
    qsvd, qsvt, solve, NormVariant, ObservationMask, QMatrix, Quaternion, SolverConfig, SvdMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

static GATE: Mutex<()> = Mutex::new(());

/// Runs one criterion under the global lock and prints its verdict line.
fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    let _guard = GATE.lock().unwrap_or_else(|e| e.into_inner());
    match body() {
        Ok(()) => println!("ACCEPTANCE {number} {name} ... PASS"),
        Err(msg) => {
            println!("ACCEPTANCE {number} {name} ... FAIL ({msg})");
            panic!("acceptance criterion {number} ({name}) failed: {msg}");
        }
    }
}

macro_rules! ensure {
    // NaN comparisons land in the failure arm, as they should.
    ($cond:expr, $($arg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($arg)+));
        }
    };
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn criterion_1_algebra() {
    criterion(1, "quaternion algebra and complex adjoint", || {
        let start = Instant::now();

        // Full 16-entry multiplication table of {1, i, j, k}.
        let units = [basis(0), basis(1), basis(2), basis(3)];
        #[rustfmt::skip]
        let table: [[(f64, usize); 4]; 4] = [
            [(1.0, 0), (1.0, 1),  (1.0, 2),  (1.0, 3)],
            [(1.0, 1), (-1.0, 0), (1.0, 3),  (-1.0, 2)],
            [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
            [(1.0, 3), (1.0, 2),  (-1.0, 1), (-1.0, 0)],
        ];
        for (r, row) in table.iter().enumerate() {
            for (c, &(sign, unit)) in row.iter().enumerate() {
                let expected = units[unit] * sign;
                ensure!(
                    units[r] * units[c] == expected,
                    "multiplication table broken at e{r}·e{c}"
                );
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for trial in 0..100 {
            // |pq| = |p||q| on random scalars.
            let p = random_quaternion(&mut rng);
            let q = random_quaternion(&mut rng);
            ensure!(
                rel_close((p * q).norm(), p.norm() * q.norm(), 1e-12),
                "modulus multiplicativity violated at trial {trial}"
            );

            // The complex adjoint is a *-homomorphism: it carries quaternion
            // products and conjugate-transposes to their complex versions.
            let a = QMatrix::random_normal(3, 4, &mut rng);
            let b = QMatrix::random_normal(4, 2, &mut rng);
            let lhs = a.matmul(&b).unwrap().complex_adjoint().into_matrix();
            let rhs = a.complex_adjoint().matrix() * b.complex_adjoint().matrix();
            let scale = lhs.norm().max(1.0);
            ensure!(
                (&lhs - &rhs).norm() <= 1e-12 * scale,
                "adjoint product homomorphism violated at trial {trial}"
            );
            let lhs = a.conj_transpose().complex_adjoint().into_matrix();
            let rhs = a.complex_adjoint().into_matrix().adjoint();
            ensure!(
                (&lhs - &rhs).norm() <= 1e-12 * scale,
                "adjoint conjugate-transpose homomorphism violated at trial {trial}"
            );
        }

        let elapsed = start.elapsed().as_secs_f64();
        ensure!(elapsed < 1.0, "algebra suite took {elapsed:.2}s (bound 1s)");
        Ok(())
    });
}

#[test]
fn criterion_2_qsvd() {
    criterion(2, "QSVD reconstruction, unitarity, pairing", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(200);
        for trial in 0..100 {
            let m = rng.random_range(1..=64);
            let n = rng.random_range(1..=48);
            let a = QMatrix::random_normal(m, n, &mut rng);
            let dec = qsvd(&a, SvdMode::Thin);
            let scale = a.frobenius_norm().max(1.0);

            let recon = (&dec.reconstruct() - &a).frobenius_norm();
            ensure!(
                recon <= 1e-10 * scale,
                "reconstruction error {recon:.3e} at trial {trial} ({m}x{n})"
            );
            for (factor, label) in [(&dec.u, "U"), (&dec.v, "V")] {
                let gram = factor.conj_transpose().matmul(factor).unwrap();
                let defect = (&gram - &QMatrix::identity(gram.rows())).frobenius_norm();
                ensure!(
                    defect <= 1e-10,
                    "{label} unitarity defect {defect:.3e} at trial {trial}"
                );
            }

            // The adjoint's complex spectrum must consist of duplicated
            // pairs, and the quaternion singular values must match it.
            let complex_sv = a.complex_adjoint().into_matrix().svd(false, false).singular_values;
            let sv_scale = complex_sv[0].max(1.0);
            for (t, &s) in dec.singulars.iter().enumerate() {
                ensure!(
                    (complex_sv[2 * t] - complex_sv[2 * t + 1]).abs() <= 1e-8 * sv_scale,
                    "pair {t} split by {:.3e} at trial {trial}",
                    (complex_sv[2 * t] - complex_sv[2 * t + 1]).abs()
                );
                ensure!(
                    (s - complex_sv[2 * t]).abs() <= 1e-8 * sv_scale,
                    "singular value {t} off by {:.3e} at trial {trial}",
                    (s - complex_sv[2 * t]).abs()
                );
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        ensure!(elapsed < 10.0, "QSVD suite took {elapsed:.2}s (bound 10s)");
        Ok(())
    });
}

#[test]
fn criterion_3_norm_equivalences() {
    criterion(3, "factor objectives equal Schatten norms", || {
        let mut rng = ChaCha8Rng::seed_from_u64(300);
        for trial in 0..50 {
            let m = rng.random_range(2..=20);
            let n = rng.random_range(2..=16);
            let a = QMatrix::random_normal(m, n, &mut rng);
            let d = m.min(n);
            for (variant, p) in [
                (NormVariant::Qdfn, 1.0),
                (NormVariant::Qdnn, 0.5),
                (NormVariant::Qfnn, 2.0 / 3.0),
            ] {
                let (u, v) = optimal_factors(&a, d, variant).unwrap();
                let product = u.matmul(&v.conj_transpose()).unwrap();
                ensure!(
                    (&product - &a).frobenius_norm() <= 1e-9 * a.frobenius_norm(),
                    "optimal factors fail to factor A at trial {trial} ({variant})"
                );
                let objective = factor_objective(&u, &v, variant).unwrap();
                let norm = q_schatten_p(&a, p);
                ensure!(
                    rel_close(objective, norm, 1e-8),
                    "{variant} objective {objective:.12} != Schatten-{p:.3} {norm:.12} \
                     at trial {trial}"
                );
            }
        }

        // Singular-value product inequality on 200 random factor pairs.
        let ps = [0.5, 2.0 / 3.0, 1.0];
        for trial in 0..200 {
            let d = rng.random_range(1..=6);
            let u = QMatrix::random_normal(rng.random_range(1..=12), d, &mut rng);
            let v = QMatrix::random_normal(rng.random_range(1..=10), d, &mut rng);
            let p = ps[trial % ps.len()];
            let (lhs, rhs) = sv_product_bound(&u, &v, p).unwrap();
            ensure!(
                lhs <= rhs + 1e-9 * rhs.max(1.0),
                "product bound violated at trial {trial}: {lhs} > {rhs} (p = {p})"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_4_stationarity() {
    criterion(4, "closed-form updates are stationary and optimal", || {
        let mut rng = ChaCha8Rng::seed_from_u64(400);
        for trial in 0..10 {
            stationarity_round(&mut rng).map_err(|msg| format!("trial {trial}: {msg}"))?;
        }

        // The two proximal updates beat random perturbations of scale 1e-3.
        let mut rng = ChaCha8Rng::seed_from_u64(401);
        let target = QMatrix::random_normal(8, 6, &mut rng);
        let delta = 0.4;
        let shrunk = qsvt(&target, delta).unwrap();
        let qsvt_objective = |z: &QMatrix| {
            let nuclear: f64 = qsvd(z, SvdMode::Thin).singulars.iter().sum();
            delta * nuclear + 0.5 * (z - &target).frobenius_norm_sqr()
        };
        let base = qsvt_objective(&shrunk);
        for trial in 0..50 {
            let perturbed = shrunk
                .checked_add(&QMatrix::random_normal(8, 6, &mut rng).scale(1e-3))
                .unwrap();
            ensure!(
                qsvt_objective(&perturbed) >= base,
                "QSVT beaten by perturbation {trial}"
            );
        }

        let (m, n) = (7, 6);
        let t = QMatrix::random_normal(m, n, &mut rng);
        let mask = ObservationMask::from_fn(m, n, |_, _| rng.random::<f64>() < 0.6);
        let mut state = random_state(NormVariant::Qdfn, m, n, 3, &mut rng);
        let product = state.product().unwrap();
        state.update_x(&product, &t, &mask);
        let x_objective = |x: &QMatrix| {
            let residual = x - &product;
            0.5 * mask.project(&(x - &t)).unwrap().frobenius_norm_sqr()
                + state.f_cpl.real_inner(&residual).unwrap()
                + 0.5 * state.mu * residual.frobenius_norm_sqr()
        };
        let base = x_objective(&state.x);
        for trial in 0..50 {
            let perturbed = state
                .x
                .checked_add(&QMatrix::random_normal(m, n, &mut rng).scale(1e-3))
                .unwrap();
            ensure!(
                x_objective(&perturbed) >= base,
                "completion update beaten by perturbation {trial}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_5_synthetic_recovery() {
    criterion(5, "synthetic recovery grid", || {
        let start = Instant::now();
        let (m, n, true_rank) = (100, 100, 5);
        let variants = [NormVariant::Qdfn, NormVariant::Qdnn, NormVariant::Qfnn];
        let mut half_mr_successes = 0;
        for &mr in &[0.5, 0.7] {
            for seed in 1..=5u64 {
                let truth = synthetic_truth(m, n, true_rank, seed);
                let mask = random_mask(
                    m,
                    n,
                    &MaskSpec {
                        missing_ratio: mr,
                        seed,
                    },
                )
                .unwrap();
                for variant in variants {
                    let cfg = SolverConfig {
                        seed,
                        ..SolverConfig::for_problem(variant, m, n)
                    };
                    let result = solve(&truth, &mask, &cfg, variant)
                        .map_err(|e| format!("{variant} mr={mr} seed={seed}: {e}"))?;
                    ensure!(
                        result.converged(cfg.tol),
                        "{variant} mr={mr} seed={seed} ended at RE {:.3e} > tol",
                        result.re_trace.last().copied().unwrap_or(f64::NAN)
                    );
                    if mr == 0.5 {
                        let err = (&result.x_hat - &truth).frobenius_norm()
                            / truth.frobenius_norm();
                        if err <= 1e-2 && result.final_rank == true_rank {
                            half_mr_successes += 1;
                        }
                    }
                }
            }
        }
        ensure!(
            half_mr_successes >= 14,
            "only {half_mr_successes}/15 runs at mr=0.5 recovered rank {true_rank} \
             within 1e-2"
        );
        let elapsed = start.elapsed().as_secs_f64();
        ensure!(
            elapsed < 120.0,
            "recovery grid took {elapsed:.1}s (bound 120s)"
        );
        Ok(())
    });
}

#[test]
fn criterion_6_rank_estimation() {
    criterion(6, "rank estimation pinned examples", || {
        let cliff = factor_with_gram_spectrum(&[10.0, 9.0, 8.0, 1e-4, 1e-4]);
        ensure!(
            estimate_rank(&cliff, 5, 20.0) == (3, true),
            "plunge after three values must truncate to rank 3"
        );
        let geometric = factor_with_gram_spectrum(&[8.0, 4.0, 2.0, 1.0]);
        ensure!(
            estimate_rank(&geometric, 4, 20.0) == (4, false),
            "uniform geometric decay must not trigger"
        );
        let two_point = factor_with_gram_spectrum(&[1.0, 1e-9]);
        ensure!(
            estimate_rank(&two_point, 2, 20.0) == (1, true),
            "two-point spectrum with a huge drop must truncate to rank 1"
        );
        Ok(())
    });
}

#[test]
fn criterion_7_image_inpainting() {
    criterion(7, "image inpainting gain and missing-ratio trend", || {
        let (h, w) = (256, 256);
        let variant = NormVariant::Qfnn;
        for seed in 1..=3u64 {
            let image = synthetic_test_image(h, w, seed);
            let truth = image_to_qmatrix(&image);
            let mut psnr_by_mr = Vec::new();
            for &mr in &[0.5, 0.85] {
                let mask = random_mask(
                    h,
                    w,
                    &MaskSpec {
                        missing_ratio: mr,
                        seed,
                    },
                )
                .unwrap();
                let cfg = SolverConfig {
                    seed,
                    ..SolverConfig::for_problem(variant, h, w)
                };
                let result = solve(&truth, &mask, &cfg, variant)
                    .map_err(|e| format!("mr={mr} seed={seed}: {e}"))?;
                ensure!(
                    result.iters <= 500 && result.converged(cfg.tol),
                    "mr={mr} seed={seed} failed to converge within 500 iterations"
                );
                let masked = qmatrix_to_image(&mask.project(&truth).unwrap());
                let completed = qmatrix_to_image(&result.x_hat);
                let baseline = psnr(&image, &masked).unwrap();
                let quality = psnr(&image, &completed).unwrap();
                if mr == 0.5 {
                    ensure!(
                        quality >= baseline + 10.0,
                        "mr=0.5 seed={seed}: completed {quality:.2} dB vs masked \
                         {baseline:.2} dB, gain < 10 dB"
                    );
                }
                psnr_by_mr.push(quality);
            }
            ensure!(
                psnr_by_mr[0] > psnr_by_mr[1],
                "seed={seed}: PSNR at mr=0.5 ({:.2}) not above mr=0.85 ({:.2})",
                psnr_by_mr[0],
                psnr_by_mr[1]
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_8_determinism() {
    criterion(8, "reports are byte-identical modulo elapsed time", || {
        let bin = env!("CARGO_BIN_EXE_quatcomplete");
        let base = std::env::temp_dir().join(format!(
            "quatcomplete-acceptance-{}",
            std::process::id()
        ));

        // Two identical synthetic runs: JSON reports equal once the
        // wall-clock field is zeroed.
        let mut reports = Vec::new();
        for run in 0..2 {
            let out = base.join(format!("synth-{run}"));
            let status = Command::new(bin)
                .args([
                    "synth", "--rows", "30", "--cols", "30", "--rank", "3", "--variant",
                    "qdfn", "--mr", "0.4", "--d0", "10", "--seed", "2", "--out",
                ])
                .arg(&out)
                .status()
                .map_err(|e| format!("cannot spawn {bin}: {e}"))?;
            ensure!(status.success(), "synth run {run} exited with {status}");
            reports.push(normalized_json(&out.join("report.json"), "elapsed_seconds")?);
        }
        ensure!(
            reports[0] == reports[1],
            "synthetic JSON reports differ beyond elapsed_seconds"
        );

        // Two identical benchmark grids: CSV equal once the seconds column
        // is dropped.
        let image_path = base.join("bench-input.png");
        std::fs::create_dir_all(&base).map_err(|e| e.to_string())?;
        save_png(&synthetic_test_image(24, 24, 5), &image_path).map_err(|e| e.to_string())?;
        let mut tables = Vec::new();
        for run in 0..2 {
            let out = base.join(format!("bench-{run}"));
            let status = Command::new(bin)
                .args(["bench", "--image"])
                .arg(&image_path)
                .args([
                    "--mr", "0.3", "--mr", "0.5", "--variant", "qdfn", "--variant", "qfnn",
                    "--d0", "8", "--seed", "3", "--jobs", "1", "--out",
                ])
                .arg(&out)
                .status()
                .map_err(|e| format!("cannot spawn {bin}: {e}"))?;
            ensure!(status.success(), "bench run {run} exited with {status}");
            tables.push(csv_without_seconds(&out.join("results.csv"))?);
        }
        ensure!(
            tables[0] == tables[1],
            "benchmark CSVs differ beyond the seconds column"
        );
        Ok(())
    });
}

fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

/// A factor whose Gram matrix `UᴴU` has exactly the given spectrum.
fn factor_with_gram_spectrum(spectrum: &[f64]) -> QMatrix {
    let d = spectrum.len();
    QMatrix::from_fn(d + 1, d, |r, c| {
        if r == c {
            Quaternion::from_real(spectrum[c].sqrt())
        } else {
            Quaternion::zero()
        }
    })
}

/// A filled-in solver state with the auxiliaries `variant` needs.
fn random_state(
    variant: NormVariant,
    m: usize,
    n: usize,
    d: usize,
    rng: &mut impl Rng,
) -> SolverState {
    let needs_u_aux = variant == NormVariant::Qdnn;
    let needs_v_aux = variant != NormVariant::Qdfn;
    SolverState {
        u: QMatrix::random_normal(m, d, rng),
        v: QMatrix::random_normal(n, d, rng),
        x: QMatrix::random_normal(m, n, rng),
        a_u: needs_u_aux.then(|| QMatrix::random_normal(m, d, rng)),
        a_v: needs_v_aux.then(|| QMatrix::random_normal(n, d, rng)),
        f_u: needs_u_aux.then(|| QMatrix::random_normal(m, d, rng).scale(0.1)),
        f_v: needs_v_aux.then(|| QMatrix::random_normal(n, d, rng).scale(0.1)),
        f_cpl: QMatrix::random_normal(m, n, rng).scale(0.1),
        mu: 1.3,
        d,
        tau: 0,
        rank_adjusted: false,
    }
}

/// One stationarity check of every variant's factor updates on a fresh
/// random state: each update must zero its subproblem gradient.
fn stationarity_round(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (m, n, d) = (7, 6, 3);
    let lambda = 0.45;

    // Double Frobenius: U(VᴴV + (λ/μ)I) = C₁V and V(UᴴU + (λ/μ)I) = C₁ᴴU.
    let mut state = random_state(NormVariant::Qdfn, m, n, d, rng);
    let cfg = SolverConfig {
        lambda,
        ..SolverConfig::for_problem(NormVariant::Qdfn, m, n)
    };
    let ridge = lambda / state.mu;
    let c1 = state
        .x
        .checked_add(&state.f_cpl.scale(1.0 / state.mu))
        .unwrap();
    let v_seen = state.v.clone();
    state.qdfn_update_uv(&cfg).unwrap();
    check_ridge_identity(&state.u, &v_seen, &c1.matmul(&v_seen).unwrap(), ridge, "qdfn U")?;
    check_ridge_identity(
        &state.v,
        &state.u,
        &c1.conj_transpose().matmul(&state.u).unwrap(),
        ridge,
        "qdfn V",
    )?;

    // Double nuclear: U(I + VᴴV) = A_U − F₁/μ + S₂V, and symmetrically.
    let mut state = random_state(NormVariant::Qdnn, m, n, d, rng);
    let cfg = SolverConfig {
        lambda,
        ..SolverConfig::for_problem(NormVariant::Qdnn, m, n)
    };
    let inv_mu = 1.0 / state.mu;
    let s2 = state.x.checked_add(&state.f_cpl.scale(inv_mu)).unwrap();
    let s1 = state
        .a_u
        .as_ref()
        .unwrap()
        .checked_sub(&state.f_u.as_ref().unwrap().scale(inv_mu))
        .unwrap();
    let t1 = state
        .a_v
        .as_ref()
        .unwrap()
        .checked_sub(&state.f_v.as_ref().unwrap().scale(inv_mu))
        .unwrap();
    let v_seen = state.v.clone();
    state.qdnn_update_uv(&cfg).unwrap();
    check_ridge_identity(
        &state.u,
        &v_seen,
        &s1.checked_add(&s2.matmul(&v_seen).unwrap()).unwrap(),
        1.0,
        "qdnn U",
    )?;
    check_ridge_identity(
        &state.v,
        &state.u,
        &t1.checked_add(&s2.conj_transpose().matmul(&state.u).unwrap())
            .unwrap(),
        1.0,
        "qdnn V",
    )?;

    // Frobenius/nuclear: U((2λ/3)I + μVᴴV) = (μX + F₂)V, then the V update
    // with the fresh U.
    let mut state = random_state(NormVariant::Qfnn, m, n, d, rng);
    let cfg = SolverConfig {
        lambda,
        ..SolverConfig::for_problem(NormVariant::Qfnn, m, n)
    };
    let mu = state.mu;
    let rhs_u = state
        .x
        .scale(mu)
        .checked_add(&state.f_cpl)
        .unwrap()
        .matmul(&state.v)
        .unwrap()
        .scale(1.0 / mu);
    let t1 = state
        .a_v
        .as_ref()
        .unwrap()
        .checked_sub(&state.f_v.as_ref().unwrap().scale(1.0 / mu))
        .unwrap();
    let s2 = state.x.checked_add(&state.f_cpl.scale(1.0 / mu)).unwrap();
    let v_seen = state.v.clone();
    state.qfnn_update_all(&cfg).unwrap();
    check_ridge_identity(
        &state.u,
        &v_seen,
        &rhs_u,
        2.0 * lambda / (3.0 * mu),
        "qfnn U",
    )?;
    check_ridge_identity(
        &state.v,
        &state.u,
        &t1.checked_add(&s2.conj_transpose().matmul(&state.u).unwrap())
            .unwrap(),
        1.0,
        "qfnn V",
    )?;
    Ok(())
}

/// Verifies the normal-equation residual `Y(GᴴG + ridge·I) − RHS = 0` that a
/// ridge-type factor update must satisfy.
fn check_ridge_identity(
    y: &QMatrix,
    basis: &QMatrix,
    rhs: &QMatrix,
    ridge: f64,
    label: &str,
) -> Result<(), String> {
    let gram = basis.conj_transpose().matmul(basis).unwrap();
    let lhs = y
        .matmul(&gram)
        .unwrap()
        .checked_add(&y.scale(ridge))
        .unwrap();
    let defect = (&lhs - rhs).frobenius_norm();
    let scale = y.frobenius_norm().max(1.0);
    if defect <= 1e-8 * scale {
        Ok(())
    } else {
        Err(format!("{label} gradient defect {defect:.3e}"))
    }
}

/// Parses a JSON report and zeroes `field` so byte comparison ignores it.
fn normalized_json(path: &Path, field: &str) -> Result<String, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    value[field] = serde_json::Value::from(0.0);
    Ok(value.to_string())
}

/// Reads a benchmark CSV and drops the trailing seconds column of each row.
fn csv_without_seconds(path: &Path) -> Result<String, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(text
        .lines()
        .map(|line| match line.rsplit_once(',') {
            Some((rest, _seconds)) => rest.to_string(),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n"))
}
