//! Deterministic importance quadrature against a gamma reference density.
//!
//! With nodes `a_i` at the quantiles `(i - 0.5)/N` of `g`, integrals under the
//! exact full conditional `f` are estimated by averaging `f(a_i)/g(a_i)`. This
//! yields the normalizing constant, the total variation distance, both
//! Kullback-Leibler divergences and the moments of `f`.
//!
//! All weights are kept in log space. Node positions are kept as `ln a_i`,
//! because the lower quantiles of a gamma with small shape are far below the
//! smallest double.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{GammaParams, ShapePosterior};
use crate::specfun::QuantileSweep;

/// Number of quadrature nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadConfig {
    num_points: usize,
}

impl QuadConfig {
    pub const DEFAULT_POINTS: usize = 100_000;

    pub fn new(num_points: usize) -> Result<Self> {
        if num_points < 2 {
            return Err(Error::domain(
                "QuadConfig",
                "num_points",
                num_points as f64,
                "must be >= 2",
            ));
        }
        Ok(QuadConfig { num_points })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            num_points: Self::DEFAULT_POINTS,
        }
    }
}

/// Quadrature estimates for a target `f` against a reference `g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    /// Log of the estimated normalizing constant of `f`.
    pub log_z_hat: f64,
    /// Total variation distance, in `[0, 1]`.
    pub tv: f64,
    /// `KL(f || g)`, clamped at zero.
    pub kl_fg: f64,
    /// `KL(g || f)`, clamped at zero.
    pub kl_gf: f64,
    /// `KL(f || g)` before clamping.
    pub kl_fg_raw: f64,
    /// `KL(g || f)` before clamping.
    pub kl_gf_raw: f64,
    pub mean_f: f64,
    pub var_f: f64,
    pub num_points: usize,
}

impl DiscrepancyReport {
    /// The normalizing constant, when it is representable as a double.
    pub fn z_hat(&self) -> Option<f64> {
        let z = self.log_z_hat.exp();
        (z > 0.0 && z.is_finite()).then_some(z)
    }
}

/// Importance ratios `f/g` at the quadrature nodes, normalized to mean one.
#[derive(Debug, Clone, PartialEq)]
pub struct ImportanceWeights {
    /// `ln a_i`, increasing.
    pub log_nodes: Vec<f64>,
    /// `ln r_i` with `r_i = f(a_i) / (Z g(a_i))`.
    pub log_ratios: Vec<f64>,
    pub log_z_hat: f64,
}

/// `ln a_i` for `a_i` the `(i - 0.5)/N` quantiles of `g`, `i = 1..N`.
pub fn quad_log_nodes(g: &GammaParams, num_points: usize) -> Result<Vec<f64>> {
    if num_points == 0 {
        return Err(Error::domain("quad_nodes", "num_points", 0.0, "must be >= 1"));
    }
    let mut sweep = QuantileSweep::new(g.shape());
    let ln_rate = g.rate().ln();
    let n = num_points as f64;
    (1..=num_points)
        .map(|i| Ok(sweep.log_quantile((i as f64 - 0.5) / n)? - ln_rate))
        .collect()
}

/// The nodes themselves. Nodes of small-shape gammas may underflow to zero;
/// use [`quad_log_nodes`] for those.
pub fn quad_nodes(g: &GammaParams, num_points: usize) -> Result<Vec<f64>> {
    Ok(quad_log_nodes(g, num_points)?.into_iter().map(f64::exp).collect())
}

/// Computes `ln r_i` and `ln Z` for the target `post` against `g`.
pub fn importance_weights(
    post: &ShapePosterior,
    g: &GammaParams,
    cfg: &QuadConfig,
) -> Result<ImportanceWeights> {
    let log_nodes = quad_log_nodes(g, cfg.num_points())?;
    let log_norm_g = g.log_normalizer();
    let mut log_w = Vec::with_capacity(log_nodes.len());
    for (i, &y) in log_nodes.iter().enumerate() {
        let a = y.exp();
        let lw = (post.log_f_ln(a, y) - g.log_kernel_ln(a, y)) - log_norm_g;
        if !lw.is_finite() {
            return Err(Error::numerical(
                "discrepancy",
                format!("non-finite log weight {lw} at node {} (a = {a:e})", i + 1),
            ));
        }
        log_w.push(lw);
    }
    let shift = log_w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let scaled: Vec<f64> = log_w.iter().map(|lw| (lw - shift).exp()).collect();
    let log_z_hat = shift + (pairwise_sum(&scaled) / scaled.len() as f64).ln();
    let log_ratios = log_w.iter().map(|lw| lw - log_z_hat).collect();
    Ok(ImportanceWeights {
        log_nodes,
        log_ratios,
        log_z_hat,
    })
}

/// Discrepancies between the full conditional `post` and the gamma `g`.
pub fn discrepancy(
    post: &ShapePosterior,
    g: &GammaParams,
    cfg: &QuadConfig,
) -> Result<DiscrepancyReport> {
    let w = importance_weights(post, g, cfg)?;
    let n = w.log_ratios.len() as f64;
    let mean = |terms: Vec<f64>| pairwise_sum(&terms) / n;

    let ratios: Vec<f64> = w.log_ratios.iter().map(|lr| lr.exp()).collect();
    let tv = mean(ratios.iter().map(|r| 0.5 * (r - 1.0).abs()).collect());
    let kl_fg_raw = mean(ratios.iter().zip(&w.log_ratios).map(|(r, lr)| r * lr).collect());
    let kl_gf_raw = -mean(w.log_ratios.clone());

    let nodes: Vec<f64> = w.log_nodes.iter().map(|y| y.exp()).collect();
    let mean_f = mean(ratios.iter().zip(&nodes).map(|(r, a)| r * a).collect());
    let var_f = mean(
        ratios
            .iter()
            .zip(&nodes)
            .map(|(r, a)| r * (a - mean_f) * (a - mean_f))
            .collect(),
    );
    Ok(DiscrepancyReport {
        log_z_hat: w.log_z_hat,
        tv: tv.clamp(0.0, 1.0),
        kl_fg: kl_fg_raw.max(0.0),
        kl_gf: kl_gf_raw.max(0.0),
        kl_fg_raw,
        kl_gf_raw,
        mean_f,
        var_f,
        num_points: cfg.num_points(),
    })
}

/// Pairwise summation; the result depends only on the order of `xs`.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if xs.len() <= BLOCK {
        xs.iter().sum()
    } else {
        let (lo, hi) = xs.split_at(xs.len() / 2);
        pairwise_sum(lo) + pairwise_sum(hi)
    }
}
