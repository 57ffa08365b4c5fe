//! Regularized incomplete gamma functions and the gamma quantile.
//!
//! Everything is computed in log space from `ln x`, so quantiles of gamma
//! distributions with very small shape (whose lower quantiles underflow a
//! double) remain well defined through [`gamma_log_quantile`].

use super::{
    log1p_minus_x, log_gamma_raw, stirling_correction, ASYMPTOTIC_CUTOFF, LN_2PI,
};
use crate::error::{check_positive, Error, Result};

const SERIES_EPS: f64 = 1e-17;
const CF_TINY: f64 = 1e-300;

/// `P(shape, x)`, the regularized lower incomplete gamma function.
pub fn reg_lower_inc_gamma(shape: f64, x: f64) -> Result<f64> {
    check_positive("reg_lower_inc_gamma", "shape", shape)?;
    check_nonnegative("reg_lower_inc_gamma", x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == f64::INFINITY {
        return Ok(1.0);
    }
    let (lp, _) = log_pq(shape, x.ln(), x)?;
    Ok(lp.exp())
}

/// `Q(shape, x) = 1 - P(shape, x)`.
pub fn reg_upper_inc_gamma(shape: f64, x: f64) -> Result<f64> {
    check_positive("reg_upper_inc_gamma", "shape", shape)?;
    check_nonnegative("reg_upper_inc_gamma", x)?;
    if x == 0.0 {
        return Ok(1.0);
    }
    if x == f64::INFINITY {
        return Ok(0.0);
    }
    let (_, lq) = log_pq(shape, x.ln(), x)?;
    Ok(lq.exp())
}

/// Quantile of `Gamma(shape, rate)`: the `a` with `P(shape, rate * a) = p`.
pub fn gamma_quantile(p: f64, shape: f64, rate: f64) -> Result<f64> {
    Ok(gamma_log_quantile(p, shape, rate)?.exp())
}

/// Natural log of [`gamma_quantile`]. Finite even when the quantile itself
/// underflows.
pub fn gamma_log_quantile(p: f64, shape: f64, rate: f64) -> Result<f64> {
    check_positive("gamma_quantile", "shape", shape)?;
    check_positive("gamma_quantile", "rate", rate)?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(
            "gamma_quantile",
            "p",
            p,
            "must lie strictly inside (0, 1)",
        ));
    }
    let mut sweep = QuantileSweep::new(shape);
    Ok(sweep.log_quantile(p)? - rate.ln())
}

fn check_nonnegative(routine: &'static str, x: f64) -> Result<()> {
    if x >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(routine, "x", x, "must be nonnegative"))
    }
}

/// `ln(x^shape e^-x / Gamma(shape))`, i.e. `ln(x * density)` for the
/// unit-rate gamma. For large shape the Stirling form avoids the
/// cancellation between `shape ln x`, `x` and `ln Gamma(shape)`.
fn log_x_density(shape: f64, lgamma_shape: f64, ln_x: f64, x: f64) -> f64 {
    if shape >= ASYMPTOTIC_CUTOFF {
        let d = (x - shape) / shape;
        shape * log1p_minus_x(d) + 0.5 * (shape.ln() - LN_2PI) - stirling_correction(shape)
    } else {
        shape * ln_x - x - lgamma_shape
    }
}

/// Returns `(ln P, ln Q)`.
fn log_pq(shape: f64, ln_x: f64, x: f64) -> Result<(f64, f64)> {
    let lgs = log_gamma_raw(shape);
    let lxd = log_x_density(shape, lgs, ln_x, x);
    log_pq_with(shape, x, lxd)
}

fn log_pq_with(shape: f64, x: f64, lxd: f64) -> Result<(f64, f64)> {
    let max_iter = 1000 + (50.0 * shape.sqrt()) as usize;
    if x < shape + 1.0 {
        // P = x^s e^-x / Gamma(s + 1) * sum_k x^k / ((s+1)...(s+k))
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut denom = shape;
        let mut converged = false;
        for _ in 0..max_iter {
            denom += 1.0;
            term *= x / denom;
            sum += term;
            if term < sum * SERIES_EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::numerical(
                "reg_lower_inc_gamma",
                format!("series did not converge for shape = {shape}, x = {x}"),
            ));
        }
        let lp = lxd - shape.ln() + sum.ln();
        let lq = (-lp.exp()).ln_1p();
        Ok((lp, lq))
    } else {
        // Modified Lentz evaluation of the continued fraction for Q.
        let mut b = x + 1.0 - shape;
        let mut c = 1.0 / CF_TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        let mut converged = false;
        for i in 1..max_iter {
            let fi = i as f64;
            let an = -fi * (fi - shape);
            b += 2.0;
            d = an * d + b;
            if d.abs() < CF_TINY {
                d = CF_TINY;
            }
            c = b + an / c;
            if c.abs() < CF_TINY {
                c = CF_TINY;
            }
            d = 1.0 / d;
            let delta = d * c;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::numerical(
                "reg_upper_inc_gamma",
                format!("continued fraction did not converge for shape = {shape}, x = {x}"),
            ));
        }
        let lq = lxd + h.ln();
        let lp = (-lq.exp()).ln_1p();
        Ok((lp, lq))
    }
}

/// Acklam's rational approximation to the standard normal quantile. Only used
/// to seed the root solve, so its ~1e-9 accuracy is ample.
fn normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    if p < 0.02425 {
        tail((-2.0 * p.ln()).sqrt())
    } else if p > 1.0 - 0.02425 {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    } else {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    }
}

/// Which tail the root solve works on: `ln P = ln p` for `p <= 1/2`,
/// `ln Q = ln(1 - p)` otherwise.
#[derive(Clone, Copy, PartialEq, Debug)]
enum Tail {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug)]
struct Eval {
    /// residual `ln P(y) - ln p` (or the upper-tail analogue)
    h: f64,
    dh: f64,
    d2h: f64,
}

#[derive(Clone, Copy, Debug)]
struct Solution {
    y: f64,
    tail: Tail,
    target: f64,
    dh: f64,
    d2h: f64,
}

/// Solves for `ln x` with `P(shape, x) = p`, on the unit-rate scale.
///
/// Successive calls with increasing `p` reuse the previous root as a second
/// order predictor, which is what makes generating 1e5 quadrature nodes cheap.
/// The corrector is Halley's method in `y = ln x` on the log-CDF, safeguarded
/// by a bracket and bisection.
pub(crate) struct QuantileSweep {
    shape: f64,
    lgamma_shape: f64,
    last: Option<Solution>,
}

impl QuantileSweep {
    pub(crate) fn new(shape: f64) -> Self {
        QuantileSweep {
            shape,
            lgamma_shape: log_gamma_raw(shape),
            last: None,
        }
    }

    fn eval(&self, y: f64, tail: Tail, target: f64) -> Result<Eval> {
        let x = y.exp();
        let lxd = log_x_density(self.shape, self.lgamma_shape, y, x);
        let (lp, lq) = if x == 0.0 {
            // P ~ x^s / Gamma(s + 1) as x -> 0
            let lp = self.shape * y - log_gamma_raw(self.shape + 1.0);
            (lp, (-lp.exp()).ln_1p())
        } else if x.is_infinite() {
            (0.0, f64::NEG_INFINITY)
        } else {
            log_pq_with(self.shape, x, lxd)?
        };
        let slope = self.shape - x;
        Ok(match tail {
            Tail::Lower => {
                let d = (lxd - lp).exp();
                Eval {
                    h: lp - target,
                    dh: d,
                    d2h: d * slope - d * d,
                }
            }
            Tail::Upper => {
                let e = (lxd - lq).exp();
                Eval {
                    h: lq - target,
                    dh: -e,
                    d2h: -e * slope - e * e,
                }
            }
        })
    }

    /// Picks the better of the small-x expansion and Wilson-Hilferty.
    fn initial_guess(&self, p: f64, tail: Tail, target: f64) -> f64 {
        let s = self.shape;
        // P ~ x^s / Gamma(s + 1) for small x
        let small = (p.ln() + log_gamma_raw(s + 1.0)) / s;
        let z = normal_quantile(p);
        let c = 1.0 / (9.0 * s);
        let wh = s * (1.0 - c + z * c.sqrt()).powi(3);
        let residual = |y: f64| {
            self.eval(y, tail, target)
                .map(|ev| ev.h.abs())
                .unwrap_or(f64::INFINITY)
        };
        if wh > 0.0 && residual(wh.ln()) < residual(small) {
            wh.ln()
        } else {
            small
        }
    }

    pub(crate) fn log_quantile(&mut self, p: f64) -> Result<f64> {
        let (tail, target) = if p <= 0.5 {
            (Tail::Lower, p.ln())
        } else {
            (Tail::Upper, (1.0 - p).ln())
        };
        let y0 = match self.last {
            Some(prev) if prev.tail == tail => {
                // y(t) with t the target; dy/dt = 1/h', d2y/dt2 = -h''/h'^3
                let dt = target - prev.target;
                let inv = 1.0 / prev.dh;
                prev.y + dt * inv - 0.5 * prev.d2h * dt * dt * inv * inv * inv
            }
            Some(prev) => prev.y,
            None => self.initial_guess(p, tail, target),
        };
        let y0 = if y0.is_finite() {
            y0
        } else {
            self.initial_guess(p, tail, target)
        };
        let sol = self.solve(y0, tail, target, p)?;
        self.last = Some(sol);
        Ok(sol.y)
    }

    fn solve(&self, y0: f64, tail: Tail, target: f64, p: f64) -> Result<Solution> {
        // h is increasing in y on the lower tail, decreasing on the upper.
        let sign = if tail == Tail::Lower { 1.0 } else { -1.0 };
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        let mut y = y0;
        for _ in 0..200 {
            let ev = self.eval(y, tail, target)?;
            if ev.h == 0.0 {
                return Ok(self.solution(y, tail, target, ev));
            }
            if sign * ev.h < 0.0 {
                lo = y;
            } else {
                hi = y;
            }
            // Far from the root the curvature term dominates and Halley's step
            // shrinks towards zero, so fall back to Newton plus bisection.
            let mut step = if (ev.h * ev.d2h).abs() < ev.dh * ev.dh {
                2.0 * ev.h * ev.dh / (2.0 * ev.dh * ev.dh - ev.h * ev.d2h)
            } else {
                ev.h / ev.dh
            };
            if !step.is_finite() || (step * ev.h * ev.dh) < 0.0 {
                step = ev.h / ev.dh;
            }
            let mut next = y - step;
            if !(next >= lo && next <= hi) || !next.is_finite() {
                next = match (lo.is_finite(), hi.is_finite()) {
                    (true, true) => 0.5 * (lo + hi),
                    (true, false) => lo + (y - lo).abs().max(1.0),
                    (false, true) => hi - (hi - y).abs().max(1.0),
                    (false, false) => unreachable!(),
                };
            } else {
                // Halley's error after a step is ~ step^3 / l^2, with l the
                // length over which h' changes (1/sqrt(shape) for large shape).
                // The residual in h must also be small, since h can be nearly
                // flat in y (slope = shape for tiny shapes).
                let l = (ev.dh / ev.d2h).abs().min(y.abs().max(1.0));
                if step.abs() <= 1e-5 * l && ev.h.abs() <= 1e-5 {
                    return Ok(self.solution(next, tail, target, ev));
                }
            }
            if (hi - lo) <= 4.0 * f64::EPSILON * y.abs().max(1.0) {
                return Ok(self.solution(next, tail, target, ev));
            }
            y = next;
        }
        Err(Error::numerical(
            "gamma_quantile",
            format!(
                "root solve did not converge: p = {p}, shape = {}, bracket = [{lo}, {hi}]",
                self.shape
            ),
        ))
    }

    fn solution(&self, y: f64, tail: Tail, target: f64, ev: Eval) -> Solution {
        Solution {
            y,
            tail,
            target,
            dh: ev.dh,
            d2h: ev.d2h,
        }
    }
}
