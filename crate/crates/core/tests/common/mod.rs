//! Reference computations shared by the integration tests. They use only
//! closed-form gamma densities and plain quadrature rules, never the crate's
//! own incomplete gamma or quantile code.

#![allow(dead_code)]

/// Log density of `Gamma(shape, rate)`.
pub fn gamma_log_density(x: f64, shape: f64, rate: f64) -> f64 {
    shape * rate.ln() - libm::lgamma(shape) + (shape - 1.0) * x.ln() - rate * x
}

/// `(tv, kl_fg, kl_gf)` between two gamma densities by the trapezoid rule in
/// `t = ln x` on `[-60, ln 400]`.
pub fn trapezoid_discrepancy(f: (f64, f64), g: (f64, f64), panels: usize) -> (f64, f64, f64) {
    let (lo, hi) = (-60.0f64, 400f64.ln());
    let dt = (hi - lo) / panels as f64;
    let (mut tv, mut kl_fg, mut kl_gf) = (0.0, 0.0, 0.0);
    for i in 0..=panels {
        let t = lo + i as f64 * dt;
        let x = t.exp();
        let lf = gamma_log_density(x, f.0, f.1) + t;
        let lg = gamma_log_density(x, g.0, g.1) + t;
        let (fx, gx) = (lf.exp(), lg.exp());
        let w = if i == 0 || i == panels { 0.5 } else { 1.0 };
        tv += w * 0.5 * (fx - gx).abs();
        kl_fg += w * fx * (lf - lg);
        kl_gf += w * gx * (lg - lf);
    }
    (tv * dt, kl_fg * dt, kl_gf * dt)
}

/// Mean and variance of a density known up to a constant, by the trapezoid
/// rule in `t = ln x` on `[t_lo, t_hi]`.
pub fn trapezoid_moments(log_f: impl Fn(f64) -> f64, t_lo: f64, t_hi: f64, panels: usize) -> (f64, f64) {
    let dt = (t_hi - t_lo) / panels as f64;
    let logs: Vec<f64> = (0..=panels)
        .map(|i| {
            let t = t_lo + i as f64 * dt;
            log_f(t.exp()) + t
        })
        .collect();
    let m = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (mut z, mut s1, mut s2) = (0.0, 0.0, 0.0);
    for (i, l) in logs.iter().enumerate() {
        let x = (t_lo + i as f64 * dt).exp();
        let w = if i == 0 || i == panels { 0.5 } else { 1.0 } * (l - m).exp();
        z += w;
        s1 += w * x;
        s2 += w * x * x;
    }
    let mean = s1 / z;
    (mean, s2 / z - mean * mean)
}

/// Kolmogorov-Smirnov statistic of `xs` against the continuous CDF `cdf`.
pub fn ks_statistic(xs: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let c = cdf(x);
            (c - i as f64 / n).abs().max((((i + 1) as f64) / n - c).abs())
        })
        .fold(0.0, f64::max)
}

/// Critical value of the KS statistic at level 0.01 for large samples.
pub fn ks_critical_001(n: usize) -> f64 {
    1.6276 / (n as f64).sqrt()
}

/// Target and reference pairs, as (shape, rate), where the reference has the
/// heavier tail so that `f/g` stays bounded.
pub const ORACLE_CASES: [((f64, f64), (f64, f64)); 5] = [
    ((2.0, 2.0), (2.0, 1.0)),
    ((3.0, 2.0), (3.0, 1.5)),
    ((2.0, 1.0), (2.5, 1.1)),
    ((1.5, 1.0), (1.2, 0.8)),
    ((5.0, 3.0), (4.0, 2.0)),
];
