//! ADMM solvers for low-rank quaternion matrix completion.
//!
//! Given observed entries `P_Ω(T)` of a quaternion matrix, each solver seeks
//! a low-rank `X ≈ U·Vᴴ` by alternating closed-form updates of the factors,
//! the completed matrix, and the Lagrange multipliers, with a growing penalty
//! `μ`. The three variants differ in the factor regularizer (see
//! [`NormVariant`]): double Frobenius ([`NormVariant::Qdfn`]) promotes small
//! nuclear norm, double nuclear ([`NormVariant::Qdnn`]) the Schatten-1/2
//! quasi-norm, and Frobenius/nuclear ([`NormVariant::Qfnn`]) the Schatten-2/3
//! quasi-norm.
//!
//! The working rank `d` starts at an overestimate and is reduced at most once
//! per solve when the spectrum of `UᴴU` shows one dominant drop
//! ([`estimate_rank`]). Iterations stop when the relative error
//! `‖U·Vᴴ − X‖_F / ‖T‖_F` falls below the configured tolerance.

use crate::error::{Error, Result};
use crate::norms::NormVariant;
use crate::qmat::{hermitian_solve, ObservationMask, QMatrix};
use crate::qsvd::{qsvd, qsvt, SvdMode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Iterations to wait before the first rank-drop check. Factor spectra from
/// the first iterations reflect the initialization, not the data, and firing
/// the one-shot rank adjustment on them can truncate to a nonsense rank.
pub const RANK_CHECK_BURN_IN: usize = 20;

/// Tunable parameters shared by the three solvers.
#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    /// Regularization weight `λ`.
    pub lambda: f64,
    /// Initial penalty `μ⁰`.
    pub mu0: f64,
    /// Penalty ceiling.
    pub mu_max: f64,
    /// Penalty growth factor per iteration (`μ ← min(βμ, μ_max)`).
    pub beta: f64,
    /// Initial (overestimated) working rank `d⁰`.
    pub d0: usize,
    /// Stopping tolerance on the relative error.
    pub tol: f64,
    /// Iteration cap.
    pub max_iters: usize,
    /// Rank-drop sensitivity `δ` threshold; larger is more conservative.
    pub rank_drop_threshold: f64,
    /// Seed for the random factor initialization.
    pub seed: u64,
}

impl SolverConfig {
    /// Customary defaults for an `M×N` problem: `λ = 0.05·√max(M,N)`,
    /// `μ⁰ = 1e-3` (`1e-2` for the double nuclear model), `μ_max = 1e20`,
    /// `β = 1.03`, `d⁰ = 40`, `tol = 1e-4`, 500 iterations, drop threshold
    /// 20.
    pub fn for_problem(variant: NormVariant, rows: usize, cols: usize) -> Self {
        let mu0 = match variant {
            NormVariant::Qdnn => 1e-2,
            NormVariant::Qdfn | NormVariant::Qfnn => 1e-3,
        };
        Self {
            lambda: 0.05 * (rows.max(cols) as f64).sqrt(),
            mu0,
            mu_max: 1e20,
            beta: 1.03,
            d0: 40,
            tol: 1e-4,
            max_iters: 500,
            rank_drop_threshold: 20.0,
            seed: 0,
        }
    }

    /// Checks the configuration invariants.
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.lambda >= 0.0, "lambda must be nonnegative"),
            (self.mu0 > 0.0, "mu0 must be positive"),
            (self.mu_max >= self.mu0, "mu_max must be at least mu0"),
            (self.beta >= 1.0, "beta must be at least 1"),
            (self.d0 >= 1, "d0 must be at least 1"),
            (self.tol > 0.0, "tol must be positive"),
            (self.max_iters >= 1, "max_iters must be at least 1"),
            (
                self.rank_drop_threshold > 0.0,
                "rank_drop_threshold must be positive",
            ),
        ];
        for (ok, message) in checks {
            if !ok {
                return Err(Error::InvalidConfig(message.to_string()));
            }
        }
        for (value, name) in [
            (self.lambda, "lambda"),
            (self.mu0, "mu0"),
            (self.mu_max, "mu_max"),
            (self.beta, "beta"),
            (self.tol, "tol"),
            (self.rank_drop_threshold, "rank_drop_threshold"),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidConfig(format!("{name} must be finite")));
            }
        }
        Ok(())
    }
}

/// All iterates of one ADMM run.
///
/// The auxiliary factors and their multipliers exist only for the variants
/// that use them: `a_u`/`f_u` for the double nuclear model, `a_v`/`f_v` for
/// the double nuclear and Frobenius/nuclear models. `f_cpl` is the multiplier
/// of the coupling constraint `X = U·Vᴴ` common to all variants.
#[derive(Clone, Debug)]
pub struct SolverState {
    /// Left factor, `M×d`.
    pub u: QMatrix,
    /// Right factor, `N×d`.
    pub v: QMatrix,
    /// Current completed matrix, `M×N`.
    pub x: QMatrix,
    /// Auxiliary nuclear-norm copy of `U` (double nuclear model).
    pub a_u: Option<QMatrix>,
    /// Auxiliary nuclear-norm copy of `V`.
    pub a_v: Option<QMatrix>,
    /// Multiplier for `U = A_U`.
    pub f_u: Option<QMatrix>,
    /// Multiplier for `V = A_V`.
    pub f_v: Option<QMatrix>,
    /// Multiplier for the coupling constraint `X = U·Vᴴ`, `M×N`.
    pub f_cpl: QMatrix,
    /// Current penalty.
    pub mu: f64,
    /// Current working rank.
    pub d: usize,
    /// Completed iterations.
    pub tau: usize,
    /// Whether the one-shot rank adjustment has fired.
    pub rank_adjusted: bool,
}

impl SolverState {
    /// Initial iterates: `X⁰ = P_Ω(T)`, `V⁰` seeded Gaussian scaled by
    /// `1/√d`, `U⁰ = 0` (the first factor update overwrites it), auxiliary
    /// factors at the rectangular identity, multipliers at zero.
    pub fn new_initial(
        t: &QMatrix,
        mask: &ObservationMask,
        cfg: &SolverConfig,
        variant: NormVariant,
    ) -> Result<Self> {
        let (m, n) = t.shape();
        let d = cfg.d0;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let v = QMatrix::random_normal(n, d, &mut rng).scale(1.0 / (d as f64).sqrt());
        let (a_u, f_u) = match variant {
            NormVariant::Qdnn => (Some(QMatrix::eye(m, d)), Some(QMatrix::zeros(m, d))),
            _ => (None, None),
        };
        let (a_v, f_v) = match variant {
            NormVariant::Qdnn | NormVariant::Qfnn => {
                (Some(QMatrix::eye(n, d)), Some(QMatrix::zeros(n, d)))
            }
            NormVariant::Qdfn => (None, None),
        };
        Ok(Self {
            u: QMatrix::zeros(m, d),
            v,
            x: mask.project(t)?,
            a_u,
            a_v,
            f_u,
            f_v,
            f_cpl: QMatrix::zeros(m, n),
            mu: cfg.mu0,
            d,
            tau: 0,
            rank_adjusted: false,
        })
    }

    /// Current product `U·Vᴴ`.
    pub fn product(&self) -> Result<QMatrix> {
        self.u.matmul(&self.v.conj_transpose())
    }

    /// Factor updates of the double Frobenius model. With `C₁ = X + F/μ`:
    /// `U ← C₁·V·(VᴴV + (λ/μ)I)⁻¹`, then `V ← C₁ᴴ·U·(UᴴU + (λ/μ)I)⁻¹`
    /// using the fresh `U`.
    pub fn qdfn_update_uv(&mut self, cfg: &SolverConfig) -> Result<()> {
        let ridge = cfg.lambda / self.mu;
        let c1 = self.x.checked_add(&self.f_cpl.scale(1.0 / self.mu))?;
        self.u = ridge_solve(&c1.matmul(&self.v)?, &self.v, ridge)?;
        self.v = ridge_solve(&c1.conj_transpose().matmul(&self.u)?, &self.u, ridge)?;
        Ok(())
    }

    /// Factor updates of the double nuclear model:
    /// `U ← (A_U − F₁/μ + (X + F₃/μ)V)(I + VᴴV)⁻¹`, then the symmetric `V`
    /// update with the fresh `U`.
    pub fn qdnn_update_uv(&mut self, cfg: &SolverConfig) -> Result<()> {
        let _ = cfg;
        let (a_u, a_v, f_u, f_v) = self.aux_refs("double nuclear factor update")?;
        let inv_mu = 1.0 / self.mu;
        let s2 = self.x.checked_add(&self.f_cpl.scale(inv_mu))?;
        let b_u = a_u
            .checked_sub(&f_u.scale(inv_mu))?
            .checked_add(&s2.matmul(&self.v)?)?;
        let u_new = unit_ridge_solve(&b_u, &self.v)?;
        let b_v = a_v
            .checked_sub(&f_v.scale(inv_mu))?
            .checked_add(&s2.conj_transpose().matmul(&u_new)?)?;
        self.v = unit_ridge_solve(&b_v, &u_new)?;
        self.u = u_new;
        Ok(())
    }

    /// Auxiliary updates of the double nuclear model: singular value
    /// thresholding of `U + F₁/μ` and `V + F₂/μ` at level `λ/(2μ)`.
    pub fn qdnn_update_aux(&mut self, cfg: &SolverConfig) -> Result<()> {
        let delta = cfg.lambda / (2.0 * self.mu);
        let inv_mu = 1.0 / self.mu;
        {
            let (_, _, f_u, f_v) = self.aux_refs("double nuclear auxiliary update")?;
            let target_u = self.u.checked_add(&f_u.scale(inv_mu))?;
            let target_v = self.v.checked_add(&f_v.scale(inv_mu))?;
            self.a_u = Some(qsvt(&target_u, delta)?);
            self.a_v = Some(qsvt(&target_v, delta)?);
        }
        Ok(())
    }

    /// Combined factor and auxiliary updates of the Frobenius/nuclear model:
    /// `U ← ((μX + F₂)V)((2λ/3)I + μVᴴV)⁻¹`, the `V` update with the fresh
    /// `U`, then `A_V ←` thresholding of `V + F₁/μ` at level `2λ/(3μ)`.
    pub fn qfnn_update_all(&mut self, cfg: &SolverConfig) -> Result<()> {
        let mu = self.mu;
        let inv_mu = 1.0 / mu;
        let a_v = self
            .a_v
            .as_ref()
            .ok_or_else(|| missing_aux("Frobenius/nuclear update"))?;
        let f_v = self
            .f_v
            .as_ref()
            .ok_or_else(|| missing_aux("Frobenius/nuclear update"))?;
        // U·((2λ/3)I + μVᴴV) = (μX + F₂)V, scaled by 1/μ into ridge form.
        let rhs = self
            .x
            .scale(mu)
            .checked_add(&self.f_cpl)?
            .matmul(&self.v)?
            .scale(inv_mu);
        let u_new = ridge_solve(&rhs, &self.v, 2.0 * cfg.lambda / (3.0 * mu))?;
        let s2 = self.x.checked_add(&self.f_cpl.scale(inv_mu))?;
        let b_v = a_v
            .checked_sub(&f_v.scale(inv_mu))?
            .checked_add(&s2.conj_transpose().matmul(&u_new)?)?;
        let v_new = unit_ridge_solve(&b_v, &u_new)?;
        let target = v_new.checked_add(&f_v.scale(inv_mu))?;
        self.a_v = Some(qsvt(&target, 2.0 * cfg.lambda / (3.0 * mu))?);
        self.u = u_new;
        self.v = v_new;
        Ok(())
    }

    /// Completion update given the current product `P = U·Vᴴ`:
    /// `X ← P_Ωᶜ(P − F/μ) + P_Ω((μP − F + T)/(1 + μ))`.
    pub fn update_x(&mut self, product: &QMatrix, t: &QMatrix, mask: &ObservationMask) {
        debug_assert_eq!(product.shape(), self.x.shape());
        debug_assert_eq!(t.shape(), self.x.shape());
        let mu = self.mu;
        let inv_mu = 1.0 / mu;
        let shrink = 1.0 / (1.0 + mu);
        let observed = mask.as_slice();
        let ps = product.as_slice();
        let fs = self.f_cpl.as_slice();
        let ts = t.as_slice();
        for (idx, x) in self.x.as_mut_slice().iter_mut().enumerate() {
            *x = if observed[idx] {
                (ps[idx].scale(mu) - fs[idx] + ts[idx]).scale(shrink)
            } else {
                ps[idx] - fs[idx].scale(inv_mu)
            };
        }
    }

    /// Multiplier ascent with the current `μ`, then `μ ← min(βμ, μ_max)`.
    ///
    /// `product` must be the same `U·Vᴴ` passed to [`SolverState::update_x`].
    pub fn update_multipliers_and_mu(&mut self, product: &QMatrix, cfg: &SolverConfig) {
        let mu = self.mu;
        if let (Some(f_u), Some(a_u)) = (self.f_u.as_mut(), self.a_u.as_ref()) {
            add_scaled_difference(f_u, &self.u, a_u, mu);
        }
        if let (Some(f_v), Some(a_v)) = (self.f_v.as_mut(), self.a_v.as_ref()) {
            add_scaled_difference(f_v, &self.v, a_v, mu);
        }
        add_scaled_difference(&mut self.f_cpl, &self.x, product, mu);
        self.mu = (cfg.beta * mu).min(cfg.mu_max);
    }

    /// Shrinks every `d`-column iterate to `new_d` columns, keeping the
    /// dominant directions of `U`.
    ///
    /// With the thin QSVD `U = P·Σ·Wᴴ`, both factors (and the auxiliary
    /// factors and their multipliers) are right-multiplied by the first
    /// `new_d` columns of `W`; when the discarded singular values of `U` are
    /// negligible this leaves the product `U·Vᴴ` unchanged. The coupling
    /// multiplier is `M×N` and unaffected.
    pub fn truncate_factors(&mut self, new_d: usize) -> Result<()> {
        if new_d >= self.d || new_d == 0 {
            return Err(Error::InvalidArgument(format!(
                "truncation target {new_d} must be in 1..{d}",
                d = self.d
            )));
        }
        let w = qsvd(&self.u, SvdMode::Thin).v.left_columns(new_d);
        self.u = self.u.matmul(&w)?;
        self.v = self.v.matmul(&w)?;
        for mat in [&mut self.a_u, &mut self.a_v, &mut self.f_u, &mut self.f_v]
            .into_iter()
            .flatten()
        {
            *mat = mat.matmul(&w)?;
        }
        self.d = new_d;
        Ok(())
    }

    /// Borrows the four auxiliary matrices, erroring if any is absent.
    fn aux_refs(&self, what: &str) -> Result<(&QMatrix, &QMatrix, &QMatrix, &QMatrix)> {
        match (&self.a_u, &self.a_v, &self.f_u, &self.f_v) {
            (Some(a_u), Some(a_v), Some(f_u), Some(f_v)) => {
                for (mat, template) in [(a_u, &self.u), (a_v, &self.v), (f_u, &self.u), (f_v, &self.v)] {
                    if mat.shape() != template.shape() {
                        return Err(Error::DimensionMismatch(format!(
                            "{what}: auxiliary shape {:?} does not match factor shape {:?}",
                            mat.shape(),
                            template.shape()
                        )));
                    }
                }
                Ok((a_u, a_v, f_u, f_v))
            }
            _ => Err(missing_aux(what)),
        }
    }

    fn is_finite(&self) -> bool {
        self.u.is_finite()
            && self.v.is_finite()
            && self.x.is_finite()
            && self.a_u.as_ref().is_none_or(QMatrix::is_finite)
            && self.a_v.as_ref().is_none_or(QMatrix::is_finite)
            && self.f_u.as_ref().is_none_or(QMatrix::is_finite)
            && self.f_v.as_ref().is_none_or(QMatrix::is_finite)
            && self.f_cpl.is_finite()
    }
}

fn missing_aux(what: &str) -> Error {
    Error::InvalidArgument(format!(
        "{what} requires the auxiliary factors of this variant"
    ))
}

/// Solves `Z·(GᴴG + ridge·I) = B` for `Z`, the common right-ridge system.
fn ridge_solve(b: &QMatrix, g: &QMatrix, ridge: f64) -> Result<QMatrix> {
    let d = g.cols();
    let gram = g.conj_transpose().matmul(g)?;
    let h = gram.checked_add(&QMatrix::identity(d).scale(ridge))?;
    hermitian_solve(&h, b)
}

/// Solves `Z·(I + GᴴG) = B` for `Z`.
fn unit_ridge_solve(b: &QMatrix, g: &QMatrix) -> Result<QMatrix> {
    ridge_solve(b, g, 1.0)
}

/// `f += μ·(a − b)`, elementwise.
fn add_scaled_difference(f: &mut QMatrix, a: &QMatrix, b: &QMatrix, mu: f64) {
    debug_assert_eq!(a.shape(), b.shape());
    debug_assert_eq!(f.shape(), a.shape());
    let av = a.as_slice();
    let bv = b.as_slice();
    for (idx, entry) in f.as_mut_slice().iter_mut().enumerate() {
        *entry += (av[idx] - bv[idx]).scale(mu);
    }
}

/// One-dominant-drop rank estimator.
///
/// Computes the singular values `σ₁ ≥ … ≥ σ_k` of the Gram matrix `UᴴU`
/// restricted to its numerically positive part (`k ≤ d`), the successive
/// quotients `σ̂_m = σ_m / σ_{m+1}`, and the dominance score
/// `δ = (k−1)·σ̂_p / Σ_{m≠p} σ̂_m` at the largest quotient `p` (smallest
/// index on ties; when `p` is the only quotient, `δ = σ̂_p` itself).
/// Returns `(p, true)` when `δ > threshold`.
///
/// Directions whose Gram values have underflowed to the numerical floor are
/// already dead, so a drop into them carries no information about the signal
/// boundary; they are excluded from the score, and only when no interior
/// drop dominates does the estimator fall back to truncating at the last
/// live index, `(k, true)`. With a fully live spectrum and no dominant drop
/// the result is `(d, false)`.
///
/// # Panics
///
/// Panics if `d` does not match the column count of `u`.
pub fn estimate_rank(u: &QMatrix, d: usize, threshold: f64) -> (usize, bool) {
    assert_eq!(d, u.cols(), "estimate_rank: d must equal the column count");
    if d < 2 {
        return (d, false);
    }
    let gram = u
        .conj_transpose()
        .matmul(u)
        .expect("conformable by construction");
    let sigma = qsvd(&gram, SvdMode::Thin).singulars;
    if sigma[0] <= 0.0 {
        return (d, false); // zero factor carries no spectral signal
    }
    let zero_tol = d as f64 * f64::EPSILON * sigma[0];
    let k = sigma.iter().take_while(|&&s| s > zero_tol).count();
    if k == 1 {
        return (1, true); // one live direction; the rest have vanished
    }
    let quotients: Vec<f64> = (0..k - 1).map(|m| sigma[m] / sigma[m + 1]).collect();
    let mut p = 0;
    for (m, &q) in quotients.iter().enumerate() {
        if q > quotients[p] {
            p = m;
        }
    }
    let top = quotients[p];
    let rest: f64 = quotients
        .iter()
        .enumerate()
        .filter(|&(m, _)| m != p)
        .map(|(_, &q)| q)
        .sum();
    let delta = if rest > 0.0 {
        (k - 1) as f64 * top / rest
    } else {
        top // single quotient: the drop speaks for itself
    };
    if delta > threshold {
        (p + 1, true)
    } else if k < d {
        (k, true) // no dominant interior drop, but the tail is already dead
    } else {
        (d, false)
    }
}

/// Relative error `‖U·Vᴴ − X‖_F / ‖T‖_F` of the current iterates.
///
/// Errors if `T` is the zero matrix.
pub fn relative_error(u: &QMatrix, v: &QMatrix, x: &QMatrix, t: &QMatrix) -> Result<f64> {
    let denom = t.frobenius_norm();
    if denom == 0.0 {
        return Err(Error::InvalidArgument(
            "relative error is undefined for a zero reference matrix".to_string(),
        ));
    }
    let product = u.matmul(&v.conj_transpose())?;
    Ok((&product - x).frobenius_norm() / denom)
}

/// Per-iteration progress snapshot passed to the [`solve_with_progress`]
/// callback.
#[derive(Copy, Clone, Debug)]
pub struct Progress {
    /// Completed iteration count (1-based).
    pub iteration: usize,
    /// Relative error after this iteration's completion update.
    pub re: f64,
    /// Current working rank.
    pub d: usize,
    /// Penalty value used by this iteration.
    pub mu: f64,
}

/// Outcome of a completion run.
#[derive(Clone, Debug)]
pub struct CompletionResult {
    /// Recovered matrix.
    pub x_hat: QMatrix,
    /// Final left factor.
    pub u: QMatrix,
    /// Final right factor.
    pub v: QMatrix,
    /// Iterations performed; equals `re_trace.len()`.
    pub iters: usize,
    /// Relative error after each iteration.
    pub re_trace: Vec<f64>,
    /// Working rank at termination.
    pub final_rank: usize,
    /// Wall-clock seconds spent inside the solver.
    pub elapsed: f64,
}

impl CompletionResult {
    /// Whether the run stopped by reaching the tolerance rather than the
    /// iteration cap.
    pub fn converged(&self, tol: f64) -> bool {
        self.re_trace.last().is_some_and(|&re| re <= tol)
    }
}

/// Completes `T` from the entries observed in `mask`.
///
/// Unobserved entries of `T` are ignored (the input is projected onto the
/// mask on entry). See [`solve_with_progress`] for the iteration schedule.
pub fn solve(
    t: &QMatrix,
    mask: &ObservationMask,
    cfg: &SolverConfig,
    variant: NormVariant,
) -> Result<CompletionResult> {
    solve_with_progress(t, mask, cfg, variant, |_| {})
}

/// [`solve`] with a per-iteration observer.
///
/// Each iteration runs the variant's factor and auxiliary updates, the
/// completion update, the multiplier ascent, the penalty growth, and — until
/// it fires once — the rank re-estimation. The run stops as soon as the
/// relative error reaches `cfg.tol`, or after `cfg.max_iters` iterations.
pub fn solve_with_progress(
    t: &QMatrix,
    mask: &ObservationMask,
    cfg: &SolverConfig,
    variant: NormVariant,
    mut progress: impl FnMut(Progress),
) -> Result<CompletionResult> {
    cfg.validate()?;
    let (m, n) = t.shape();
    if (mask.rows(), mask.cols()) != (m, n) {
        return Err(Error::DimensionMismatch(format!(
            "mask is {}x{} but the data is {m}x{n}",
            mask.rows(),
            mask.cols()
        )));
    }
    if cfg.d0 > m.min(n) {
        return Err(Error::InvalidConfig(format!(
            "d0 = {} exceeds min(M, N) = {}",
            cfg.d0,
            m.min(n)
        )));
    }

    let start = Instant::now();
    let t = mask.project(t)?;
    let t_norm = t.frobenius_norm();
    // A fully unobserved problem has no data term; fall back to an absolute
    // residual scale so the run still terminates cleanly.
    let re_denom = if t_norm > 0.0 { t_norm } else { 1.0 };

    let mut state = SolverState::new_initial(&t, mask, cfg, variant)?;
    let mut re_trace = Vec::new();
    loop {
        match variant {
            NormVariant::Qdfn => state.qdfn_update_uv(cfg)?,
            NormVariant::Qdnn => {
                state.qdnn_update_uv(cfg)?;
                state.qdnn_update_aux(cfg)?;
            }
            NormVariant::Qfnn => state.qfnn_update_all(cfg)?,
        }
        let product = state.product()?;
        state.update_x(&product, &t, mask);
        let re = (&product - &state.x).frobenius_norm() / re_denom;
        re_trace.push(re);
        if !re.is_finite() || !state.is_finite() {
            return Err(Error::Diverged {
                iteration: state.tau + 1,
                message: "non-finite iterate; the input may be badly scaled".to_string(),
            });
        }
        let mu_used = state.mu;
        state.update_multipliers_and_mu(&product, cfg);
        // The drop statistic is meaningless while the factors still carry the
        // initialization transient (the first iterations mix the random V⁰,
        // the identity-padded auxiliaries, and a tiny penalty); checking too
        // early can latch onto a spurious drop and waste the one-shot
        // adjustment. A short burn-in clears that window.
        if !state.rank_adjusted && state.d >= 2 && state.tau >= RANK_CHECK_BURN_IN {
            let (new_d, triggered) = estimate_rank(&state.u, state.d, cfg.rank_drop_threshold);
            if triggered {
                state.truncate_factors(new_d)?;
                state.rank_adjusted = true;
            }
        }
        state.tau += 1;
        progress(Progress {
            iteration: state.tau,
            re,
            d: state.d,
            mu: mu_used,
        });
        if re <= cfg.tol || state.tau >= cfg.max_iters {
            break;
        }
    }

    Ok(CompletionResult {
        iters: re_trace.len(),
        final_rank: state.d,
        re_trace,
        elapsed: start.elapsed().as_secs_f64(),
        x_hat: state.x,
        u: state.u,
        v: state.v,
    })
}
