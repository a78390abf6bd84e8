//! End-to-end run orchestration: manifests, inpainting and synthetic runs,
//! benchmark grids, and their on-disk reports.
//!
//! Every run is described by a [`RunManifest`] that is also serialized (as
//! TOML) next to the produced artifacts, so any result can be reproduced by
//! re-running its manifest: all randomness flows from the recorded seed, and
//! reports are byte-identical apart from elapsed wall-clock fields.

use crate::error::{Error, Result};
use crate::imaging::{
    image_to_qmatrix, load_png, psnr, qmatrix_to_image, random_mask, save_png, ssim,
    write_mask_text, MaskSpec,
};
use crate::norms::NormVariant;
use crate::qmat::QMatrix;
use crate::solver::{solve, SolverConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

/// Solver knobs as recorded in a manifest.
///
/// `lambda` and `mu0` may be left unset to request the dimension- and
/// variant-dependent defaults (`0.05·√max(M,N)` and `1e-3`, or `1e-2` for
/// the double nuclear model); [`SolverOverrides::resolve`] turns the record
/// into a concrete [`SolverConfig`] deterministically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverOverrides {
    /// Regularization weight; unset means the dimension default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    /// Initial penalty; unset means the variant default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu0: Option<f64>,
    /// Penalty ceiling.
    pub mu_max: f64,
    /// Penalty growth factor.
    pub beta: f64,
    /// Initial working rank.
    pub d0: usize,
    /// Stopping tolerance.
    pub tol: f64,
    /// Iteration cap.
    pub max_iters: usize,
    /// Rank-drop sensitivity threshold.
    pub rank_drop_threshold: f64,
    /// Seed driving the mask draw and the factor initialization.
    pub seed: u64,
}

impl Default for SolverOverrides {
    fn default() -> Self {
        Self {
            lambda: None,
            mu0: None,
            mu_max: 1e20,
            beta: 1.03,
            d0: 40,
            tol: 1e-4,
            max_iters: 500,
            rank_drop_threshold: 20.0,
            seed: 0,
        }
    }
}

impl SolverOverrides {
    /// Concrete configuration for a `rows × cols` problem under `variant`.
    pub fn resolve(&self, variant: NormVariant, rows: usize, cols: usize) -> SolverConfig {
        let defaults = SolverConfig::for_problem(variant, rows, cols);
        SolverConfig {
            lambda: self.lambda.unwrap_or(defaults.lambda),
            mu0: self.mu0.unwrap_or(defaults.mu0),
            mu_max: self.mu_max,
            beta: self.beta,
            d0: self.d0,
            tol: self.tol,
            max_iters: self.max_iters,
            rank_drop_threshold: self.rank_drop_threshold,
            seed: self.seed,
        }
    }
}

/// Inpainting run: mask a real image, complete it, score the result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InpaintManifest {
    /// Input PNG.
    pub input: PathBuf,
    /// Completion model.
    pub variant: NormVariant,
    /// Fraction of pixels to hide.
    pub mr: f64,
    /// Solver parameters.
    pub config: SolverOverrides,
    /// Artifact directory.
    pub out_dir: PathBuf,
}

/// Synthetic recovery run on a seeded random low-rank matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthManifest {
    /// Problem height.
    pub rows: usize,
    /// Problem width.
    pub cols: usize,
    /// Rank of the generated ground truth.
    pub true_rank: usize,
    /// Completion model.
    pub variant: NormVariant,
    /// Fraction of entries to hide.
    pub mr: f64,
    /// Solver parameters.
    pub config: SolverOverrides,
    /// Artifact directory.
    pub out_dir: PathBuf,
}

/// Benchmark grid: every image × missing ratio × variant cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchManifest {
    /// Input PNGs.
    pub images: Vec<PathBuf>,
    /// Missing ratios to sweep.
    pub mrs: Vec<f64>,
    /// Models to sweep.
    pub variants: Vec<NormVariant>,
    /// Solver parameters shared by all cells.
    pub config: SolverOverrides,
    /// Parallel cell evaluations (1 = sequential).
    pub jobs: usize,
    /// Artifact directory.
    pub out_dir: PathBuf,
}

/// Any runnable manifest, tagged by command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum RunManifest {
    /// See [`InpaintManifest`].
    Inpaint(InpaintManifest),
    /// See [`SynthManifest`].
    Synth(SynthManifest),
    /// See [`BenchManifest`].
    Bench(BenchManifest),
}

impl RunManifest {
    /// Parses a TOML manifest.
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))
    }

    /// Serializes to TOML.
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Manifest(e.to_string()))
    }

    /// Loads a manifest file.
    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&fs::read_to_string(path)?)
    }

    /// The run's output directory.
    pub fn out_dir(&self) -> &Path {
        match self {
            RunManifest::Inpaint(m) => &m.out_dir,
            RunManifest::Synth(m) => &m.out_dir,
            RunManifest::Bench(m) => &m.out_dir,
        }
    }
}

/// Metrics written by an inpainting run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InpaintReport {
    /// Peak signal-to-noise ratio of the completed image against the input.
    pub psnr: f64,
    /// Structural similarity of the completed image against the input.
    pub ssim: f64,
    /// Solver iterations.
    pub iters: usize,
    /// Working rank at termination.
    pub final_rank: usize,
    /// Solver wall-clock time.
    pub elapsed_seconds: f64,
    /// Relative error after each iteration.
    pub re_trace: Vec<f64>,
}

/// Metrics written by a synthetic run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthReport {
    /// `‖X̂ − X‖_F / ‖X‖_F`, or the absolute error for a zero ground truth.
    pub recovery_error: f64,
    /// Solver iterations.
    pub iters: usize,
    /// Working rank at termination.
    pub final_rank: usize,
    /// Solver wall-clock time.
    pub elapsed_seconds: f64,
    /// Relative error after each iteration.
    pub re_trace: Vec<f64>,
}

/// One benchmark grid cell.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    /// Image label (file stem).
    pub image: String,
    /// Missing ratio of this cell.
    pub mr: f64,
    /// Model of this cell.
    pub variant: NormVariant,
    /// Completed-image quality, NaN if the cell failed.
    pub psnr: f64,
    /// Completed-image similarity, NaN if the cell failed.
    pub ssim: f64,
    /// Solver iterations (0 if the cell failed).
    pub iters: usize,
    /// Working rank at termination (0 if the cell failed).
    pub final_rank: usize,
    /// Solver wall-clock time.
    pub seconds: f64,
    /// Whether the cell converged within tolerance.
    pub converged: bool,
}

/// Outcome of a benchmark run.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    /// One row per grid cell, in grid order.
    pub rows: Vec<BenchRow>,
    /// Whether every cell converged.
    pub all_converged: bool,
}

/// Exact column header of the benchmark CSV.
pub const BENCH_CSV_HEADER: &str = "image,mr,variant,psnr,ssim,iters,final_rank,seconds";

/// Runs an inpainting manifest.
///
/// Writes `masked.png`, `completed.png`, `mask.txt`, `report.json`, and
/// `manifest.toml` into the output directory. Returns the report and whether
/// the solver converged within tolerance.
pub fn run_inpaint(manifest: &InpaintManifest) -> Result<(InpaintReport, bool)> {
    let image = load_png(&manifest.input)?;
    let (h, w) = image.shape();
    let cfg = manifest.config.resolve(manifest.variant, h, w);
    let mask = random_mask(
        h,
        w,
        &MaskSpec {
            missing_ratio: manifest.mr,
            seed: cfg.seed,
        },
    )?;

    fs::create_dir_all(&manifest.out_dir)?;
    let truth = image_to_qmatrix(&image);
    let observed = mask.project(&truth)?;
    save_png(
        &qmatrix_to_image(&observed),
        &manifest.out_dir.join("masked.png"),
    )?;
    write_mask_text(&mask, &manifest.out_dir.join("mask.txt"))?;

    let result = solve(&truth, &mask, &cfg, manifest.variant)?;
    let completed = qmatrix_to_image(&result.x_hat);
    save_png(&completed, &manifest.out_dir.join("completed.png"))?;

    let report = InpaintReport {
        psnr: psnr(&image, &completed)?,
        ssim: ssim(&image, &completed)?,
        iters: result.iters,
        final_rank: result.final_rank,
        elapsed_seconds: result.elapsed,
        re_trace: result.re_trace.clone(),
    };
    write_report(&manifest.out_dir, &report)?;
    write_manifest(
        &manifest.out_dir,
        &RunManifest::Inpaint(manifest.clone()),
    )?;
    Ok((report, result.converged(cfg.tol)))
}

/// Runs a synthetic-recovery manifest.
///
/// The ground truth is a product of seeded Gaussian quaternion factors (on a
/// separate random stream from the solver's initialization). Writes
/// `report.json` and `manifest.toml`. Returns the report and whether the
/// solver converged.
pub fn run_synth(manifest: &SynthManifest) -> Result<(SynthReport, bool)> {
    let (m, n, r) = (manifest.rows, manifest.cols, manifest.true_rank);
    if r > m.min(n) {
        return Err(Error::InvalidArgument(format!(
            "true rank {r} exceeds min({m}, {n})"
        )));
    }
    let cfg = manifest.config.resolve(manifest.variant, m, n);
    let truth = synthetic_truth(m, n, r, cfg.seed);
    let mask = random_mask(
        m,
        n,
        &MaskSpec {
            missing_ratio: manifest.mr,
            seed: cfg.seed,
        },
    )?;
    let result = solve(&truth, &mask, &cfg, manifest.variant)?;
    let diff = (&result.x_hat - &truth).frobenius_norm();
    let denom = truth.frobenius_norm();
    let report = SynthReport {
        recovery_error: if denom > 0.0 { diff / denom } else { diff },
        iters: result.iters,
        final_rank: result.final_rank,
        elapsed_seconds: result.elapsed,
        re_trace: result.re_trace.clone(),
    };
    fs::create_dir_all(&manifest.out_dir)?;
    write_report(&manifest.out_dir, &report)?;
    write_manifest(&manifest.out_dir, &RunManifest::Synth(manifest.clone()))?;
    Ok((report, result.converged(cfg.tol)))
}

/// Seeded random rank-`r` ground truth, `m × n`.
pub fn synthetic_truth(m: usize, n: usize, r: usize, seed: u64) -> QMatrix {
    if r == 0 {
        return QMatrix::zeros(m, n);
    }
    // Stream 1 keeps the truth independent of the solver's stream-0 draws.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let a = QMatrix::random_normal(m, r, &mut rng);
    let b = QMatrix::random_normal(n, r, &mut rng);
    a.matmul(&b.conj_transpose()).expect("conformable factors")
}

/// Runs a benchmark manifest.
///
/// Evaluates every (image, missing ratio, variant) cell — in parallel when
/// `jobs > 1` — and writes `results.csv` plus `manifest.toml`. A failing
/// cell contributes a row with NaN metrics instead of aborting the grid.
pub fn run_bench(manifest: &BenchManifest) -> Result<BenchSummary> {
    let mut grid = Vec::new();
    for image in &manifest.images {
        for &mr in &manifest.mrs {
            for &variant in &manifest.variants {
                grid.push((image.clone(), mr, variant));
            }
        }
    }
    let jobs = manifest.jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot build a {jobs}-thread pool: {e}")))?;
    let rows: Vec<BenchRow> = pool.install(|| {
        grid.par_iter()
            .map(|(image, mr, variant)| bench_cell(image, *mr, *variant, &manifest.config))
            .collect()
    });

    fs::create_dir_all(&manifest.out_dir)?;
    let mut csv = String::from(BENCH_CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.image,
            row.mr,
            row.variant,
            fmt_metric(row.psnr),
            fmt_metric(row.ssim),
            row.iters,
            row.final_rank,
            format_args!("{:.3}", row.seconds),
        ));
    }
    fs::write(manifest.out_dir.join("results.csv"), csv)?;
    write_manifest(&manifest.out_dir, &RunManifest::Bench(manifest.clone()))?;

    let all_converged = rows.iter().all(|r| r.converged);
    Ok(BenchSummary {
        rows,
        all_converged,
    })
}

/// Evaluates one grid cell, folding any error into a NaN row.
fn bench_cell(
    image_path: &Path,
    mr: f64,
    variant: NormVariant,
    overrides: &SolverOverrides,
) -> BenchRow {
    let label = image_label(image_path);
    match bench_cell_inner(image_path, mr, variant, overrides) {
        Ok(row) => row,
        Err(_) => BenchRow {
            image: label,
            mr,
            variant,
            psnr: f64::NAN,
            ssim: f64::NAN,
            iters: 0,
            final_rank: 0,
            seconds: 0.0,
            converged: false,
        },
    }
}

fn bench_cell_inner(
    image_path: &Path,
    mr: f64,
    variant: NormVariant,
    overrides: &SolverOverrides,
) -> Result<BenchRow> {
    let image = load_png(image_path)?;
    let (h, w) = image.shape();
    let cfg = overrides.resolve(variant, h, w);
    let mask = random_mask(
        h,
        w,
        &MaskSpec {
            missing_ratio: mr,
            seed: cfg.seed,
        },
    )?;
    let truth = image_to_qmatrix(&image);
    let result = solve(&truth, &mask, &cfg, variant)?;
    let completed = qmatrix_to_image(&result.x_hat);
    Ok(BenchRow {
        image: image_label(image_path),
        mr,
        variant,
        psnr: psnr(&image, &completed)?,
        ssim: ssim(&image, &completed)?,
        iters: result.iters,
        final_rank: result.final_rank,
        seconds: result.elapsed,
        converged: result.converged(cfg.tol),
    })
}

/// CSV label of an input image: its file stem.
fn image_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}

/// Metric formatting for CSV cells: finite values to four decimals,
/// otherwise `nan`/`inf`.
fn fmt_metric(value: f64) -> String {
    if value.is_nan() {
        "nan".to_string()
    } else if value.is_infinite() {
        if value > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{value:.4}")
    }
}

fn write_report<T: Serialize>(dir: &Path, report: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    fs::write(dir.join("report.json"), json)?;
    Ok(())
}

fn write_manifest(dir: &Path, manifest: &RunManifest) -> Result<()> {
    fs::write(dir.join("manifest.toml"), manifest.to_toml()?)?;
    Ok(())
}
