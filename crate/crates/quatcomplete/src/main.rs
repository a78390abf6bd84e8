//! Thin command-line front end over the library pipeline.
//!
//! Every subcommand assembles a [`RunManifest`] and hands it to the library;
//! the manifest is also written next to the artifacts so `rerun` can
//! reproduce any result byte-for-byte (apart from elapsed-time fields).
//!
//! Exit codes: 0 when every requested run converged, 1 on a run failure or
//! non-convergence, 2 on a usage error.

use clap::{Args, Parser, Subcommand};
use quatcomplete::pipeline::{
    run_bench, run_inpaint, run_synth, BenchManifest, InpaintManifest, RunManifest,
    SolverOverrides, SynthManifest,
};
use quatcomplete::{NormVariant, Result};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "quatcomplete",
    version,
    about = "Low-rank quaternion matrix completion for color-image inpainting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mask a PNG, complete it, and score the result against the original.
    Inpaint(InpaintArgs),
    /// Recover a seeded synthetic low-rank matrix and report the error.
    Synth(SynthArgs),
    /// Sweep an (image × missing-ratio × variant) grid into a CSV table.
    Bench(BenchArgs),
    /// Re-run a recorded manifest file.
    Rerun(RerunArgs),
}

/// Solver knobs shared by all run kinds.
#[derive(Args)]
struct SolverFlags {
    /// Seed driving the mask draw and the factor initialization.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Initial working rank.
    #[arg(long, default_value_t = 40)]
    d0: usize,
    /// Regularization weight [default: 0.05·sqrt(max(M, N))].
    #[arg(long)]
    lambda: Option<f64>,
    /// Initial penalty [default: 1e-3, or 1e-2 for qdnn].
    #[arg(long)]
    mu0: Option<f64>,
    /// Penalty ceiling.
    #[arg(long, default_value_t = 1e20)]
    mu_max: f64,
    /// Penalty growth factor.
    #[arg(long, default_value_t = 1.03)]
    beta: f64,
    /// Stopping tolerance on the relative error.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Iteration cap.
    #[arg(long, default_value_t = 500)]
    max_iters: usize,
    /// Rank-drop sensitivity threshold.
    #[arg(long, default_value_t = 20.0)]
    rank_drop_threshold: f64,
}

impl SolverFlags {
    fn to_overrides(&self) -> SolverOverrides {
        SolverOverrides {
            lambda: self.lambda,
            mu0: self.mu0,
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

#[derive(Args)]
struct InpaintArgs {
    /// Input PNG.
    #[arg(long)]
    input: PathBuf,
    /// Completion model.
    #[arg(long, value_enum)]
    variant: NormVariant,
    /// Fraction of pixels to hide.
    #[arg(long, default_value_t = 0.5)]
    mr: f64,
    #[command(flatten)]
    solver: SolverFlags,
    /// Artifact directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SynthArgs {
    /// Problem height.
    #[arg(long, default_value_t = 100)]
    rows: usize,
    /// Problem width.
    #[arg(long, default_value_t = 100)]
    cols: usize,
    /// Rank of the generated ground truth.
    #[arg(long)]
    rank: usize,
    /// Completion model.
    #[arg(long, value_enum)]
    variant: NormVariant,
    /// Fraction of entries to hide.
    #[arg(long, default_value_t = 0.5)]
    mr: f64,
    #[command(flatten)]
    solver: SolverFlags,
    /// Artifact directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Input PNGs (repeatable).
    #[arg(long = "image", required = true)]
    images: Vec<PathBuf>,
    /// Missing ratios to sweep (repeatable).
    #[arg(long = "mr", required = true)]
    mrs: Vec<f64>,
    /// Models to sweep (repeatable) [default: all three].
    #[arg(long = "variant", value_enum)]
    variants: Vec<NormVariant>,
    /// Parallel cell evaluations.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    solver: SolverFlags,
    /// Artifact directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RerunArgs {
    /// Manifest file recorded by a previous run.
    manifest: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let manifest = match build_manifest(cli.command) {
        Ok(manifest) => manifest,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    match execute(&manifest) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("error: run did not converge within tolerance");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn build_manifest(command: Command) -> Result<RunManifest> {
    Ok(match command {
        Command::Inpaint(args) => RunManifest::Inpaint(InpaintManifest {
            input: args.input,
            variant: args.variant,
            mr: args.mr,
            config: args.solver.to_overrides(),
            out_dir: args.out,
        }),
        Command::Synth(args) => RunManifest::Synth(SynthManifest {
            rows: args.rows,
            cols: args.cols,
            true_rank: args.rank,
            variant: args.variant,
            mr: args.mr,
            config: args.solver.to_overrides(),
            out_dir: args.out,
        }),
        Command::Bench(args) => RunManifest::Bench(BenchManifest {
            images: args.images,
            mrs: args.mrs,
            variants: if args.variants.is_empty() {
                vec![NormVariant::Qdfn, NormVariant::Qdnn, NormVariant::Qfnn]
            } else {
                args.variants
            },
            config: args.solver.to_overrides(),
            jobs: args.jobs,
            out_dir: args.out,
        }),
        Command::Rerun(args) => RunManifest::load(&args.manifest)?,
    })
}

/// Runs the manifest and reports to stdout; returns whether every run
/// converged.
fn execute(manifest: &RunManifest) -> Result<bool> {
    match manifest {
        RunManifest::Inpaint(m) => {
            let (report, converged) = run_inpaint(m)?;
            println!(
                "inpaint {} mr={} {}: psnr {:.4} dB, ssim {:.4}, {} iters, rank {}, {:.2}s",
                m.input.display(),
                m.mr,
                m.variant,
                report.psnr,
                report.ssim,
                report.iters,
                report.final_rank,
                report.elapsed_seconds,
            );
            println!("artifacts: {}", m.out_dir.display());
            Ok(converged)
        }
        RunManifest::Synth(m) => {
            let (report, converged) = run_synth(m)?;
            println!(
                "synth {}x{} rank {} mr={} {}: recovery error {:.3e}, {} iters, rank {}, {:.2}s",
                m.rows,
                m.cols,
                m.true_rank,
                m.mr,
                m.variant,
                report.recovery_error,
                report.iters,
                report.final_rank,
                report.elapsed_seconds,
            );
            println!("artifacts: {}", m.out_dir.display());
            Ok(converged)
        }
        RunManifest::Bench(m) => {
            let summary = run_bench(m)?;
            for row in &summary.rows {
                println!(
                    "bench {} mr={} {}: psnr {:.4} dB, ssim {:.4}, {} iters, rank {}, {:.2}s{}",
                    row.image,
                    row.mr,
                    row.variant,
                    row.psnr,
                    row.ssim,
                    row.iters,
                    row.final_rank,
                    row.seconds,
                    if row.converged { "" } else { " (not converged)" },
                );
            }
            println!(
                "{} cells; results at {}",
                summary.rows.len(),
                m.out_dir.join("results.csv").display()
            );
            Ok(summary.all_converged)
        }
    }
}
