//! Quaternion linear algebra and low-rank quaternion matrix completion.
//!
//! A color image maps naturally onto a pure-quaternion matrix — one
//! quaternion per pixel, the three imaginary axes carrying the RGB channels —
//! so
//! recovering an image from scattered observed pixels becomes a low-rank
//! quaternion matrix completion problem that treats the channels jointly
//! instead of splitting them apart.
//!
//! The crate provides the algebra and the solvers for that problem:
//!
//! * [`quat`] — scalar quaternion arithmetic (Hamilton product, conjugation,
//!   modulus).
//! * [`qmat`] — dense quaternion matrices, their complex adjoint
//!   representation, and observation masks.
//! * [`qsvd`] — quaternion SVD through the complex adjoint, singular-value
//!   thresholding, rank, and low-rank factorization.
//! * [`norms`] — the three bilinear factor objectives (double Frobenius, double
//!   nuclear, Frobenius/nuclear) and the Schatten-p quasi-norms they induce
//!   on the product matrix.
//! * [`solver`] — alternating-direction solvers that minimize each factor
//!   objective subject to the observed entries, with one-shot adaptive rank
//!   estimation.
//! * [`imaging`] — PNG I/O, the image↔matrix bridge, random masks, PSNR and
//!   SSIM.
//! * [`pipeline`] — reproducible end-to-end runs (inpainting, synthetic
//!   recovery, benchmark grids) driven by serialized manifests.
//!
//! The `examples/` directory walks each layer; the `quatcomplete` binary is a
//! thin front end over [`pipeline`].
//!
//! ```
//! use quatcomplete::{solve, NormVariant, SolverConfig};
//! use quatcomplete::imaging::{random_mask, MaskSpec};
//! use quatcomplete::pipeline::synthetic_truth;
//!
//! // A 30×30 rank-2 quaternion matrix with 40 % of its entries hidden…
//! let truth = synthetic_truth(30, 30, 2, 7);
//! let mask = random_mask(30, 30, &MaskSpec { missing_ratio: 0.4, seed: 7 }).unwrap();
//! let config = SolverConfig {
//!     d0: 10,
//!     ..SolverConfig::for_problem(NormVariant::Qdfn, 30, 30)
//! };
//!
//! // …is recovered from the observed part alone.
//! let result = solve(&truth, &mask, &config, NormVariant::Qdfn).unwrap();
//! let err = (&result.x_hat - &truth).frobenius_norm() / truth.frobenius_norm();
//! assert!(err < 1e-2);
//! assert_eq!(result.final_rank, 2);
//! ```

pub mod error;
pub mod imaging;
pub mod norms;
pub mod pipeline;
pub mod qmat;
pub mod qsvd;
pub mod quat;
pub mod solver;

pub use error::{Error, Result};
pub use norms::NormVariant;
pub use qmat::{ComplexAdjoint, ObservationMask, QMatrix};
pub use qsvd::{qsvd, qsvt, QsvdResult, SvdMode};
pub use quat::Quaternion;
pub use solver::{solve, solve_with_progress, CompletionResult, SolverConfig};
