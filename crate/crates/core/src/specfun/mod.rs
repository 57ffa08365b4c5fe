//! Scalar special functions: log-gamma, digamma, trigamma, the two
//! cancellation-safe composites used by the shape update, and the regularized
//! incomplete gamma function with its quantile.
//!
//! Digamma and trigamma shift the argument upward with the recurrences
//! `psi(x) = psi(x + 1) - 1/x` and `psi'(x) = psi'(x + 1) + 1/x^2` until it is
//! at least [`ASYMPTOTIC_CUTOFF`], then sum the Bernoulli asymptotic series.
//! Digamma additionally uses a Taylor expansion about its positive root so
//! that relative accuracy holds where the function crosses zero.
//!
//! The checked public functions return [`Error::Domain`](crate::error::Error::Domain) for non-positive or
//! non-finite input. The unchecked `*_raw` versions are used on hot paths
//! inside the crate where the argument is already known to be valid.

mod incgamma;

pub use incgamma::{
    gamma_log_quantile, gamma_quantile, reg_lower_inc_gamma, reg_upper_inc_gamma,
};
pub(crate) use incgamma::QuantileSweep;

use crate::error::{check_positive, Result};
use std::f64::consts::PI;

/// Arguments at or above this use the asymptotic series directly.
pub const ASYMPTOTIC_CUTOFF: f64 = 10.0;

pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub(crate) const LN_2PI: f64 = 1.837_877_066_409_345_5;

// Positive root of digamma split into two doubles.
const DIGAMMA_ROOT_HI: f64 = 1.461_632_144_968_362_2;
const DIGAMMA_ROOT_LO: f64 = 9.549_995_429_965_697e-17;
const DIGAMMA_ROOT_RADIUS: f64 = 0.2;

// psi^(k)(x0) / k! for k = 1..=25, x0 the digamma root.
const DIGAMMA_ROOT_TAYLOR: [f64; 25] = [
    0.967_672_245_447_621_2,
    -0.442_763_168_983_592_1,
    0.258_499_760_955_651,
    -0.163_942_705_442_406_52,
    0.107_824_050_691_262_37,
    -0.072_199_561_256_454_71,
    0.048_804_288_164_143_11,
    -0.033_161_126_474_847_36,
    0.022_597_648_232_218_104,
    -0.015_424_765_904_948_96,
    0.010_538_791_616_612_175,
    -0.007_204_534_386_356_869,
    0.004_926_781_395_729_853,
    -0.003_369_801_655_439_328,
    0.002_305_126_326_734_928,
    -0.001_576_936_771_430_197_2,
    0.001_078_825_201_916_296_7,
    -0.000_738_070_938_996_005_2,
    0.000_504_953_265_834_602,
    -0.000_345_468_025_106_307_7,
    0.000_236_356_015_640_270_53,
    -0.000_161_706_220_919_748_03,
    0.000_110_633_727_687_474_1,
    -7.569_179_582_195_066e-5,
    5.178_575_795_222_081e-5,
];

/// `ln Gamma(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    check_positive("log_gamma", "x", x)?;
    Ok(log_gamma_raw(x))
}

/// Digamma `psi(x) = d/dx ln Gamma(x)` for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    check_positive("digamma", "x", x)?;
    Ok(digamma_raw(x))
}

/// Trigamma `psi'(x)` for `x > 0`.
pub fn trigamma(x: f64) -> Result<f64> {
    check_positive("trigamma", "x", x)?;
    Ok(trigamma_raw(x))
}

/// `ln(a) - psi(a)`, strictly positive and evaluated without cancellation for
/// large `a` (where it behaves like `1/(2a)`).
pub fn log_minus_digamma(a: f64) -> Result<f64> {
    check_positive("log_minus_digamma", "a", a)?;
    Ok(log_minus_digamma_raw(a))
}

/// `a^2 psi'(a) - a`. Tends to 1 as `a -> 0` and to 1/2 as `a -> inf`.
pub fn a_sq_trigamma_minus_a(a: f64) -> Result<f64> {
    check_positive("a_sq_trigamma_minus_a", "a", a)?;
    Ok(a_sq_trigamma_minus_a_raw(a))
}

#[inline]
pub(crate) fn log_gamma_raw(x: f64) -> f64 {
    libm::lgamma(x)
}

pub(crate) fn digamma_raw(x: f64) -> f64 {
    if (x - DIGAMMA_ROOT_HI).abs() < DIGAMMA_ROOT_RADIUS {
        digamma_near_root(x)
    } else {
        digamma_shifted(x)
    }
}

fn digamma_near_root(x: f64) -> f64 {
    let dx = (x - DIGAMMA_ROOT_HI) - DIGAMMA_ROOT_LO;
    let poly = DIGAMMA_ROOT_TAYLOR
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * dx + c);
    poly * dx
}

fn digamma_shifted(x: f64) -> f64 {
    let mut z = x;
    let mut shift = 0.0;
    while z < ASYMPTOTIC_CUTOFF {
        shift += 1.0 / z;
        z += 1.0;
    }
    digamma_asymptotic(z) - shift
}

fn digamma_asymptotic(z: f64) -> f64 {
    let w = 1.0 / (z * z);
    // sum_k B_{2k} / (2k) * w^k, k = 1..7
    let series = w
        * (1.0 / 12.0
            + w * (-1.0 / 120.0
                + w * (1.0 / 252.0
                    + w * (-1.0 / 240.0
                        + w * (1.0 / 132.0 + w * (-691.0 / 32760.0 + w * (1.0 / 12.0)))))));
    z.ln() - 0.5 / z - series
}

pub(crate) fn trigamma_raw(x: f64) -> f64 {
    let mut z = x;
    let mut shift = 0.0;
    while z < ASYMPTOTIC_CUTOFF {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    trigamma_asymptotic(z) + shift
}

fn trigamma_asymptotic(z: f64) -> f64 {
    let r = 1.0 / z;
    let w = r * r;
    // sum_k B_{2k} w^k, k = 1..8
    let series = w
        * (1.0 / 6.0
            + w * (-1.0 / 30.0
                + w * (1.0 / 42.0
                    + w * (-1.0 / 30.0
                        + w * (5.0 / 66.0
                            + w * (-691.0 / 2730.0 + w * (7.0 / 6.0 + w * (-3617.0 / 510.0))))))));
    r + 0.5 * w + r * series
}

pub(crate) fn log_minus_digamma_raw(a: f64) -> f64 {
    if a >= ASYMPTOTIC_CUTOFF {
        let w = 1.0 / (a * a);
        let series = w
            * (1.0 / 12.0
                + w * (-1.0 / 120.0
                    + w * (1.0 / 252.0
                        + w * (-1.0 / 240.0
                            + w * (1.0 / 132.0 + w * (-691.0 / 32760.0 + w * (1.0 / 12.0)))))));
        0.5 / a + series
    } else {
        a.ln() - digamma_raw(a)
    }
}

pub(crate) fn a_sq_trigamma_minus_a_raw(a: f64) -> f64 {
    if a >= ASYMPTOTIC_CUTOFF {
        let r = 1.0 / a;
        let w = r * r;
        // 1/2 + sum_k B_{2k} a^{1-2k}
        let series = 1.0 / 6.0
            + w * (-1.0 / 30.0
                + w * (1.0 / 42.0
                    + w * (-1.0 / 30.0
                        + w * (5.0 / 66.0
                            + w * (-691.0 / 2730.0 + w * (7.0 / 6.0 + w * (-3617.0 / 510.0)))))));
        0.5 + r * series
    } else if a < 1.0 {
        // a^2 psi'(a) = 1 + a^2 psi'(a + 1)
        (1.0 - a) + a * a * trigamma_raw(a + 1.0)
    } else {
        a * a * trigamma_raw(a) - a
    }
}

/// Stirling remainder `ln Gamma(a) - [(a - 1/2) ln a - a + ln(2 pi)/2]`, valid
/// for `a >= ASYMPTOTIC_CUTOFF`.
pub(crate) fn stirling_correction(a: f64) -> f64 {
    let r = 1.0 / a;
    let w = r * r;
    r * (1.0 / 12.0
        + w * (-1.0 / 360.0
            + w * (1.0 / 1260.0
                + w * (-1.0 / 1680.0
                    + w * (1.0 / 1188.0
                        + w * (-691.0 / 360_360.0 + w * (1.0 / 156.0 + w * (-3617.0 / 122_400.0))))))))
}

/// `a ln a - a - ln Gamma(a)`, given `ln_a` separately so that it stays
/// meaningful when `a` itself has underflowed.
pub(crate) fn a_log_a_minus_a_minus_log_gamma(a: f64, ln_a: f64) -> f64 {
    if a >= ASYMPTOTIC_CUTOFF {
        0.5 * ln_a - 0.5 * LN_2PI - stirling_correction(a)
    } else if a < 1e-8 {
        // ln Gamma(a) = -ln a - gamma a + (pi^2/12) a^2 + O(a^3)
        a * ln_a - a + ln_a + EULER_GAMMA * a - PI * PI / 12.0 * a * a
    } else {
        a * ln_a - a - log_gamma_raw(a)
    }
}

/// `ln(1 + d) - d` without cancellation for small `|d|`.
pub(crate) fn log1p_minus_x(d: f64) -> f64 {
    if d.abs() < 0.5 {
        // ln(1+d) = 2 atanh(v), v = d / (2 + d); d - 2v = d v
        let v = d / (2.0 + d);
        let v2 = v * v;
        let mut term = v * v2;
        let mut sum = 0.0;
        let mut k = 3.0;
        loop {
            let next = term / k;
            sum += next;
            if next.abs() <= 1e-17 * sum.abs() {
                break;
            }
            term *= v2;
            k += 2.0;
        }
        2.0 * sum - d * v
    } else {
        d.ln_1p() - d
    }
}

/// `e^d - 1 - d` without cancellation for small `|d|`.
pub(crate) fn exp_m1_minus_x(d: f64) -> f64 {
    if d.abs() < 0.5 {
        let mut term = 0.5 * d * d;
        let mut sum = term;
        let mut k = 3.0;
        while term.abs() > 1e-17 * sum.abs() {
            term *= d / k;
            sum += term;
            k += 1.0;
        }
        sum
    } else {
        d.exp_m1() - d
    }
}
