//! Random variates and the MCMC updates built on the gamma approximation.
//!
//! The shape parameter can be updated either approximately (draw straight from
//! the fitted `Gamma(A, B)`) or exactly (use the fit as an independence
//! proposal in a Metropolis-Hastings step). The mean `mu` has an inverse-gamma
//! conditional and is updated exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::approx::{approximate, AlgoConfig};
use crate::error::{check_positive, Error, Result};
use crate::model::{compute_stats, GammaParams, ShapePosterior};

/// Seedable generator. The same seed yields the same stream on every platform.
#[derive(Debug, Clone)]
pub struct RngState {
    inner: ChaCha20Rng,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState {
            inner: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    /// Uniform on the open interval `(0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        loop {
            let u: f64 = self.inner.random();
            if u > 0.0 {
                return u;
            }
        }
    }

    pub fn standard_normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }
}

/// Draws `ln X` for `X ~ Gamma(shape, rate)`.
///
/// Uses Marsaglia and Tsang's squeeze method. Shapes below one are boosted:
/// `X = Y U^(1/shape)` with `Y ~ Gamma(shape + 1)`, combined in log space so
/// that shapes near `1e-6` (whose draws are far below the smallest double)
/// still give a finite result.
pub fn sample_log_gamma(rng: &mut RngState, params: &GammaParams) -> f64 {
    let shape = params.shape();
    let log_rate = params.rate().ln();
    if shape < 1.0 {
        let ln_y = marsaglia_tsang(rng, shape + 1.0);
        ln_y + rng.uniform().ln() / shape - log_rate
    } else {
        marsaglia_tsang(rng, shape) - log_rate
    }
}

/// Returns `ln X` for `X ~ Gamma(shape, 1)`, `shape >= 1`.
fn marsaglia_tsang(rng: &mut RngState, shape: f64) -> f64 {
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = rng.standard_normal();
        let t = 1.0 + c * x;
        if t <= 0.0 {
            continue;
        }
        let v = t * t * t;
        let u = rng.uniform();
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 {
            return d.ln() + v.ln();
        }
        let ln_v = v.ln();
        if u.ln() < 0.5 * x2 + d * (1.0 - v + ln_v) {
            return d.ln() + ln_v;
        }
    }
}

/// Number of fresh draws attempted when a draw underflows to zero.
const UNDERFLOW_RETRIES: usize = 16;

/// Draws `X ~ Gamma(shape, rate)` as a plain double.
///
/// For very small shapes the draw may be below the smallest positive double.
/// Such draws are repeated a bounded number of times and then floored at
/// `f64::MIN_POSITIVE`; use [`sample_log_gamma`] when that matters.
pub fn sample_gamma(rng: &mut RngState, params: &GammaParams) -> f64 {
    for _ in 0..UNDERFLOW_RETRIES {
        let x = sample_log_gamma(rng, params).exp();
        if x > 0.0 {
            return x.min(f64::MAX);
        }
    }
    f64::MIN_POSITIVE
}

/// One approximate Gibbs update of the shape: fit `Gamma(A, B)` and draw.
pub fn gibbs_update_shape(
    rng: &mut RngState,
    data: &[f64],
    mu: f64,
    prior: &GammaParams,
    cfg: &AlgoConfig,
) -> Result<f64> {
    let stats = compute_stats(data, mu)?;
    let fit = approximate(&stats, prior, cfg)?;
    Ok(sample_gamma(rng, &fit.params))
}

/// Result of one Metropolis-Hastings update.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MhOutcome {
    /// The new state: the proposed value if accepted, the old one otherwise.
    pub value: f64,
    pub accepted: bool,
    /// `min(0, log acceptance ratio)`.
    pub log_accept_prob: f64,
    pub proposal: GammaParams,
}

/// One exact Metropolis-Hastings update of the shape.
///
/// The fitted `Gamma(A, B)` is used as an independence proposal. It is
/// recomputed on every call from the current data, `mu` and prior.
pub fn mh_update_shape(
    rng: &mut RngState,
    a_current: f64,
    data: &[f64],
    mu: f64,
    prior: &GammaParams,
    cfg: &AlgoConfig,
) -> Result<MhOutcome> {
    let post = ShapePosterior::from_data(data, mu, *prior)?;
    mh_step(rng, a_current, &post, cfg)
}

/// [`mh_update_shape`] for a posterior whose statistics are already reduced.
pub fn mh_step(
    rng: &mut RngState,
    a_current: f64,
    post: &ShapePosterior,
    cfg: &AlgoConfig,
) -> Result<MhOutcome> {
    check_positive("mh_update_shape", "a_current", a_current)?;
    let proposal = approximate(post.stats(), &post.prior(), cfg)?.params;
    let ln_new = sample_log_gamma(rng, &proposal);
    let a_new = ln_new.exp().clamp(f64::MIN_POSITIVE, f64::MAX);
    let log_ratio = log_ratio_ln(post, &proposal, a_current, a_current.ln(), a_new, ln_new);
    let log_accept_prob = log_ratio.min(0.0);
    let accepted = log_accept_prob == 0.0 || rng.uniform().ln() < log_accept_prob;
    Ok(MhOutcome {
        value: if accepted { a_new } else { a_current },
        accepted,
        log_accept_prob,
        proposal,
    })
}

/// Log acceptance ratio for moving from `a_current` to `a_new` under the
/// independence proposal `proposal`. Normalizing constants cancel and are
/// left out.
pub fn mh_log_accept_ratio(
    post: &ShapePosterior,
    proposal: &GammaParams,
    a_current: f64,
    a_new: f64,
) -> Result<f64> {
    check_positive("mh_log_accept_ratio", "a_current", a_current)?;
    check_positive("mh_log_accept_ratio", "a_new", a_new)?;
    Ok(log_ratio_ln(post, proposal, a_current, a_current.ln(), a_new, a_new.ln()))
}

fn log_ratio_ln(
    post: &ShapePosterior,
    proposal: &GammaParams,
    a: f64,
    ln_a: f64,
    a_new: f64,
    ln_new: f64,
) -> f64 {
    let target = post.log_f_ln(a_new, ln_new) - post.log_f_ln(a, ln_a);
    let reverse = proposal.log_kernel_ln(a, ln_a) - proposal.log_kernel_ln(a_new, ln_new);
    target + reverse
}

/// Parameters `(shape, scale)` of the inverse-gamma conditional of `mu`
/// given the data and the shape `a`, under the prior `InvGamma(alpha0, beta0)`.
pub fn mean_posterior(data: &[f64], a: f64, alpha0: f64, beta0: f64) -> Result<(f64, f64)> {
    check_positive("gibbs_update_mean", "a", a)?;
    check_positive("gibbs_update_mean", "mean_prior_shape", alpha0)?;
    check_positive("gibbs_update_mean", "mean_prior_scale", beta0)?;
    let mut sum = 0.0;
    for &x in data {
        check_positive("gibbs_update_mean", "x", x)?;
        sum += x;
    }
    let shape = alpha0 + data.len() as f64 * a;
    let scale = beta0 + a * sum;
    if !(shape.is_finite() && scale.is_finite()) {
        return Err(Error::numerical(
            "gibbs_update_mean",
            format!("posterior parameters overflow: shape = {shape}, scale = {scale}"),
        ));
    }
    Ok((shape, scale))
}

/// Draws `mu ~ InvGamma(alpha0 + n a, beta0 + a S)` as the reciprocal of a
/// gamma draw with that shape and rate.
pub fn gibbs_update_mean(
    rng: &mut RngState,
    data: &[f64],
    a: f64,
    mean_prior_shape: f64,
    mean_prior_scale: f64,
) -> Result<f64> {
    let (shape, scale) = mean_posterior(data, a, mean_prior_shape, mean_prior_scale)?;
    let g = GammaParams::new(shape, scale)?;
    let ln_mu = -sample_log_gamma(rng, &g);
    Ok(ln_mu.exp().clamp(f64::MIN_POSITIVE, f64::MAX))
}

/// Sample mean and unbiased sample variance.
pub fn mean_and_variance(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, ss / (n - 1.0))
}

/// Effective sample size of a chain from its autocorrelations, truncated by
/// Geyer's initial monotone sequence rule.
pub fn effective_sample_size(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 4 {
        return n as f64;
    }
    let (mean, _) = mean_and_variance(xs);
    let centered: Vec<f64> = xs.iter().map(|x| x - mean).collect();
    let autocov = |lag: usize| -> f64 {
        centered[..n - lag]
            .iter()
            .zip(&centered[lag..])
            .map(|(a, b)| a * b)
            .sum::<f64>()
            / n as f64
    };
    let c0 = autocov(0);
    if c0 <= 0.0 {
        return n as f64;
    }
    // Sum of consecutive pairs rho(2k) + rho(2k+1), kept positive and
    // non-increasing.
    let mut tau = -1.0;
    let mut prev_pair = f64::INFINITY;
    let mut lag = 0;
    while lag + 1 < n {
        let pair = (autocov(lag) + autocov(lag + 1)) / c0;
        if pair <= 0.0 {
            break;
        }
        let pair = pair.min(prev_pair);
        tau += 2.0 * pair;
        prev_pair = pair;
        lag += 2;
    }
    n as f64 / tau.max(1.0 / n as f64)
}
