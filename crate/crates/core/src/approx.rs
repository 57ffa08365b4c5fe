//! Gamma approximation to the shape full conditional by derivative matching.
//!
//! Starting from a guess `(A, B)`, each iteration sets `a = A/B` and picks the
//! gamma distribution whose log density has the same first and second
//! derivatives as `log f` at `a`:
//!
//! ```text
//! A = a0 + n (a^2 psi'(a) - a)
//! B = b0 + (A - a0)/a - n (log a - psi(a)) + T
//! ```
//!
//! The loop stops once the mean `A/B` moves by less than a relative `epsilon`.

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, Error, Result};
use crate::model::{GammaParams, ShapePosterior, SufficientStats};
use crate::specfun::{a_sq_trigamma_minus_a_raw, log_minus_digamma_raw};

/// Stopping rule for [`approximate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgoConfig {
    epsilon: f64,
    max_iters: usize,
}

impl AlgoConfig {
    pub const DEFAULT_EPSILON: f64 = 1e-8;
    pub const DEFAULT_MAX_ITERS: usize = 10;

    pub fn new(epsilon: f64, max_iters: usize) -> Result<Self> {
        check_positive("AlgoConfig", "epsilon", epsilon)?;
        if max_iters == 0 {
            return Err(Error::domain("AlgoConfig", "max_iters", 0.0, "must be >= 1"));
        }
        Ok(AlgoConfig { epsilon, max_iters })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn max_iters(&self) -> usize {
        self.max_iters
    }
}

impl Default for AlgoConfig {
    fn default() -> Self {
        AlgoConfig {
            epsilon: Self::DEFAULT_EPSILON,
            max_iters: Self::DEFAULT_MAX_ITERS,
        }
    }
}

/// Output of [`approximate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxResult {
    /// The fitted `Gamma(A, B)`.
    pub params: GammaParams,
    /// Number of refinement steps performed (at least 1).
    pub iterations: usize,
    pub converged: bool,
    /// `a * dlog_f(a) + 1` at `a = A/B`; zero at an exact fixed point.
    pub residual: f64,
}

/// `(a0 + n/2, b0 + T)`, from Stirling's approximation to `log Gamma`.
pub fn init_stirling(stats: &SufficientStats, prior: &GammaParams) -> GammaParams {
    let n = stats.n() as f64;
    GammaParams::new(prior.shape() + 0.5 * n, prior.rate() + stats.t())
        .expect("prior and stats are valid, so both entries are positive")
}

/// `(a0 + n, b0 + T + n)`, from the small-`a` behaviour of `log Gamma`.
pub fn init_small_a(stats: &SufficientStats, prior: &GammaParams) -> GammaParams {
    let n = stats.n() as f64;
    GammaParams::new(prior.shape() + n, prior.rate() + stats.t() + n)
        .expect("prior and stats are valid, so both entries are positive")
}

/// One derivative-matching step at the point `a`.
pub fn refine_once(a: f64, stats: &SufficientStats, prior: &GammaParams) -> Result<GammaParams> {
    check_positive("refine_once", "a", a)?;
    let (a0, b0) = (prior.shape(), prior.rate());
    if stats.n() == 0 {
        return Ok(*prior);
    }
    let n = stats.n() as f64;
    let shape = a0 + n * a_sq_trigamma_minus_a_raw(a);
    let rate = b0 + (shape - a0) / a - n * log_minus_digamma_raw(a) + stats.t();
    if !(shape > 0.0 && shape.is_finite() && rate > 0.0 && rate.is_finite()) {
        return Err(Error::numerical(
            "refine_once",
            format!(
                "non-positive update A = {shape}, B = {rate} at a = {a} \
                 (n = {}, T = {}, a0 = {a0}, b0 = {b0})",
                stats.n(),
                stats.t()
            ),
        ));
    }
    GammaParams::new(shape, rate)
}

/// Fits `Gamma(A, B)` to the full conditional.
///
/// Reaching `max_iters` without meeting the tolerance is not an error; the
/// last iterate is returned with `converged = false`.
pub fn approximate(
    stats: &SufficientStats,
    prior: &GammaParams,
    cfg: &AlgoConfig,
) -> Result<ApproxResult> {
    approximate_from(init_stirling(stats, prior), stats, prior, cfg)
}

/// [`approximate`] with an explicit starting point such as [`init_small_a`].
pub fn approximate_from(
    init: GammaParams,
    stats: &SufficientStats,
    prior: &GammaParams,
    cfg: &AlgoConfig,
) -> Result<ApproxResult> {
    let mut params = init;
    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iters() {
        let a = params.mean();
        params = refine_once(a, stats, prior)?;
        iterations += 1;
        if (a / params.mean() - 1.0).abs() < cfg.epsilon() {
            converged = true;
            break;
        }
    }
    Ok(ApproxResult {
        params,
        iterations,
        converged,
        residual: residual_at(params.mean(), stats, prior),
    })
}

/// `a * dlog_f(a) + 1` at `a = shape / rate`.
pub fn fixed_point_residual(params: &GammaParams, post: &ShapePosterior) -> Result<f64> {
    let a = params.mean();
    check_positive("fixed_point_residual", "a", a)?;
    Ok(residual_at(a, post.stats(), &post.prior()))
}

fn residual_at(a: f64, stats: &SufficientStats, prior: &GammaParams) -> f64 {
    // Expanded so that no term is divided by `a`.
    let data_part = if stats.n() == 0 {
        0.0
    } else {
        a * (stats.n() as f64 * log_minus_digamma_raw(a) - stats.t())
    };
    data_part + (prior.shape() - 1.0) - prior.rate() * a + 1.0
}
