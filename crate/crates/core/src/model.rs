//! The exact full conditional of the gamma shape parameter.
//!
//! Data `x_1..x_n ~ Gamma(shape = a, rate = a / mu)` with prior
//! `a ~ Gamma(a0, b0)` give, up to an additive constant,
//!
//! ```text
//! log f(a) = n a log a - n log Gamma(a) - (T + n) a + (a0 - 1) log a - b0 a
//! ```
//!
//! with `T = sum_i (x_i/mu - log(x_i/mu) - 1) >= 0`. The additive constant is
//! fixed at zero throughout the crate.

use serde::{Deserialize, Serialize};

use crate::error::{check_positive, Error, Result};
use crate::specfun::{
    a_log_a_minus_a_minus_log_gamma, a_sq_trigamma_minus_a_raw, exp_m1_minus_x,
    log1p_minus_x, log_gamma_raw, log_minus_digamma_raw,
};

/// A gamma distribution in the shape/rate parameterization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaParams {
    shape: f64,
    rate: f64,
}

impl GammaParams {
    pub fn new(shape: f64, rate: f64) -> Result<Self> {
        check_positive("GammaParams", "shape", shape)?;
        check_positive("GammaParams", "rate", rate)?;
        Ok(GammaParams { shape, rate })
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn mean(&self) -> f64 {
        self.shape / self.rate
    }

    pub fn variance(&self) -> f64 {
        self.shape / (self.rate * self.rate)
    }

    /// `(shape - 1) ln a - rate a`, taking `ln a` separately.
    #[inline]
    pub(crate) fn log_kernel_ln(&self, a: f64, ln_a: f64) -> f64 {
        (self.shape - 1.0) * ln_a - self.rate * a
    }

    /// Log density without the normalizing constant.
    pub fn log_kernel(&self, a: f64) -> f64 {
        self.log_kernel_ln(a, a.ln())
    }

    /// `shape ln rate - ln Gamma(shape)`.
    pub fn log_normalizer(&self) -> f64 {
        self.shape * self.rate.ln() - log_gamma_raw(self.shape)
    }

    pub fn log_density(&self, a: f64) -> f64 {
        self.log_kernel(a) + self.log_normalizer()
    }

    pub fn cdf(&self, a: f64) -> Result<f64> {
        crate::specfun::reg_lower_inc_gamma(self.shape, self.rate * a)
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        crate::specfun::gamma_quantile(p, self.shape, self.rate)
    }
}

/// The reduction `(n, R, S, T)` of a data set given `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SufficientStats {
    n: usize,
    log_sum: f64,
    sum: f64,
    t: f64,
}

impl SufficientStats {
    /// Builds statistics directly, validating their invariants.
    pub fn new(n: usize, log_sum: f64, sum: f64, t: f64) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::domain("SufficientStats", "T", t, "must be finite and >= 0"));
        }
        if !(sum >= 0.0 && sum.is_finite()) {
            return Err(Error::domain("SufficientStats", "S", sum, "must be finite and >= 0"));
        }
        if !log_sum.is_finite() {
            return Err(Error::domain("SufficientStats", "R", log_sum, "must be finite"));
        }
        if n == 0 && (log_sum != 0.0 || sum != 0.0 || t != 0.0) {
            return Err(Error::domain(
                "SufficientStats",
                "n",
                0.0,
                "empty data requires R = S = T = 0",
            ));
        }
        Ok(SufficientStats { n, log_sum, sum, t })
    }

    pub fn empty() -> Self {
        SufficientStats {
            n: 0,
            log_sum: 0.0,
            sum: 0.0,
            t: 0.0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `R = sum_i ln x_i`.
    pub fn log_sum(&self) -> f64 {
        self.log_sum
    }

    /// `S = sum_i x_i`.
    pub fn sum(&self) -> f64 {
        self.sum
    }

    /// `T = sum_i (x_i/mu - ln(x_i/mu) - 1)`.
    pub fn t(&self) -> f64 {
        self.t
    }
}

/// Computes `(n, R, S, T)`. `T` is accumulated from the per-observation terms
/// `x/mu - ln(x/mu) - 1`, each of which is nonnegative.
pub fn compute_stats(data: &[f64], mu: f64) -> Result<SufficientStats> {
    check_positive("compute_stats", "mu", mu)?;
    let mut log_sum = 0.0;
    let mut sum = 0.0;
    let mut t = 0.0;
    for &x in data {
        check_positive("compute_stats", "x", x)?;
        log_sum += x.ln();
        sum += x;
        let ratio = x / mu;
        let d = ratio - 1.0;
        t += if d.abs() < 0.5 {
            -log1p_minus_x(d)
        } else {
            d - ratio.ln()
        };
    }
    finish_stats(data.len(), log_sum, sum, t)
}

/// Same as [`compute_stats`] but from `ln x_i`. Data drawn with very small
/// shape routinely underflow as plain doubles; their logs do not.
pub fn compute_stats_from_logs(log_data: &[f64], mu: f64) -> Result<SufficientStats> {
    check_positive("compute_stats", "mu", mu)?;
    let ln_mu = mu.ln();
    let mut log_sum = 0.0;
    let mut sum = 0.0;
    let mut t = 0.0;
    for &lx in log_data {
        if !lx.is_finite() {
            return Err(Error::domain("compute_stats", "ln x", lx, "must be finite"));
        }
        log_sum += lx;
        sum += lx.exp();
        t += exp_m1_minus_x(lx - ln_mu);
    }
    finish_stats(log_data.len(), log_sum, sum, t)
}

fn finish_stats(n: usize, log_sum: f64, sum: f64, t: f64) -> Result<SufficientStats> {
    if !t.is_finite() || !sum.is_finite() {
        return Err(Error::numerical(
            "compute_stats",
            format!("overflow in sufficient statistics (S = {sum}, T = {t})"),
        ));
    }
    // Each term is >= 0, so anything negative here is rounding residue.
    let t = if t < 0.0 { 0.0 } else { t };
    Ok(SufficientStats { n, log_sum, sum, t })
}

/// The full conditional `p(a | x, mu, a0, b0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapePosterior {
    stats: SufficientStats,
    prior: GammaParams,
    mu: f64,
}

impl ShapePosterior {
    pub fn new(stats: SufficientStats, prior: GammaParams, mu: f64) -> Result<Self> {
        check_positive("ShapePosterior", "mu", mu)?;
        Ok(ShapePosterior { stats, prior, mu })
    }

    pub fn from_data(data: &[f64], mu: f64, prior: GammaParams) -> Result<Self> {
        Self::new(compute_stats(data, mu)?, prior, mu)
    }

    pub fn stats(&self) -> &SufficientStats {
        &self.stats
    }

    pub fn prior(&self) -> GammaParams {
        self.prior
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Unnormalized log density of the full conditional.
    pub fn log_f(&self, a: f64) -> Result<f64> {
        check_positive("log_f", "a", a)?;
        Ok(self.log_f_ln(a, a.ln()))
    }

    /// `log_f` given `ln a`; used where `a` comes from log-space quadrature
    /// nodes.
    pub(crate) fn log_f_ln(&self, a: f64, ln_a: f64) -> f64 {
        let prior = self.prior.log_kernel_ln(a, ln_a);
        if self.stats.n == 0 {
            return prior;
        }
        let n = self.stats.n as f64;
        n * a_log_a_minus_a_minus_log_gamma(a, ln_a) - self.stats.t * a + prior
    }

    /// First derivative of [`log_f`](Self::log_f).
    pub fn dlog_f(&self, a: f64) -> Result<f64> {
        check_positive("dlog_f", "a", a)?;
        Ok(self.dlog_f_raw(a))
    }

    pub(crate) fn dlog_f_raw(&self, a: f64) -> f64 {
        let n = self.stats.n as f64;
        let data_part = if self.stats.n == 0 {
            0.0
        } else {
            n * log_minus_digamma_raw(a) - self.stats.t
        };
        data_part + (self.prior.shape - 1.0) / a - self.prior.rate
    }

    /// Second derivative of [`log_f`](Self::log_f).
    pub fn d2log_f(&self, a: f64) -> Result<f64> {
        check_positive("d2log_f", "a", a)?;
        let n = self.stats.n as f64;
        let data_part = if self.stats.n == 0 {
            0.0
        } else {
            n * a_sq_trigamma_minus_a_raw(a)
        };
        Ok(-(data_part + (self.prior.shape - 1.0)) / (a * a))
    }
}
