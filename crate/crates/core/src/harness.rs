//! The simulation study: a grid of synthetic data sets, one approximation and
//! one discrepancy report per data set, and the summaries built from them.
//!
//! Every case carries its own seed, derived by hashing its coordinates with a
//! master seed, so results do not depend on enumeration or scheduling order.

use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approx::{approximate, AlgoConfig, ApproxResult};
use crate::error::{Error, Result};
use crate::model::{compute_stats_from_logs, GammaParams, ShapePosterior};
use crate::quadrature::{discrepancy, importance_weights, DiscrepancyReport, QuadConfig};
use crate::sampler::{effective_sample_size, mean_and_variance, mh_step, sample_log_gamma, RngState};
use crate::specfun::reg_lower_inc_gamma;

pub const DEFAULT_MASTER_SEED: u64 = 20_240_601;
pub const N_VALUES: [usize; 3] = [1, 10, 100];
pub const R_VALUES: [f64; 3] = [0.5, 1.0, 2.0];
pub const A0_VALUES: [f64; 3] = [1.0, 0.1, 0.01];
pub const REPLICATES: u32 = 5;

/// `1e-6, 1e-5, ..., 1e6`, each the double nearest the decimal value.
pub fn decade_values() -> Vec<f64> {
    (-6..=6)
        .map(|k| format!("1e{k}").parse().expect("valid literal"))
        .collect()
}

/// One synthetic data set: `n` draws from `Gamma(a_true, a_true/mu_true)`,
/// analysed with `mu = r * mu_true` and prior `Gamma(a0, a0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridCase {
    pub n: usize,
    pub r: f64,
    pub a_true: f64,
    pub mu_true: f64,
    pub a0: f64,
    pub replicate: u32,
    pub seed: u64,
}

impl GridCase {
    pub fn new(
        master_seed: u64,
        n: usize,
        r: f64,
        a_true: f64,
        mu_true: f64,
        a0: f64,
        replicate: u32,
    ) -> Self {
        GridCase {
            n,
            r,
            a_true,
            mu_true,
            a0,
            replicate,
            seed: case_seed(master_seed, n, r, a_true, mu_true, a0, replicate),
        }
    }

    /// The prior `Gamma(a0, b0)` with `b0 = a0`, so the prior mean is one.
    pub fn prior(&self) -> Result<GammaParams> {
        GammaParams::new(self.a0, self.a0)
    }

    /// The value of `mu` conditioned on.
    pub fn mu(&self) -> f64 {
        self.r * self.mu_true
    }

    /// `ln x_i` of the case's data set.
    pub fn log_data(&self) -> Result<Vec<f64>> {
        let g = GammaParams::new(self.a_true, self.a_true / self.mu_true)?;
        let mut rng = RngState::new(self.seed);
        Ok((0..self.n).map(|_| sample_log_gamma(&mut rng, &g)).collect())
    }

    /// The full conditional of the shape for this case.
    pub fn posterior(&self) -> Result<ShapePosterior> {
        let stats = compute_stats_from_logs(&self.log_data()?, self.mu())?;
        ShapePosterior::new(stats, self.prior()?, self.mu())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable 64-bit hash of the case coordinates and the master seed.
pub fn case_seed(
    master_seed: u64,
    n: usize,
    r: f64,
    a_true: f64,
    mu_true: f64,
    a0: f64,
    replicate: u32,
) -> u64 {
    let words = [
        n as u64,
        r.to_bits(),
        a_true.to_bits(),
        mu_true.to_bits(),
        a0.to_bits(),
        replicate as u64,
    ];
    words
        .iter()
        .fold(splitmix64(master_seed), |h, &w| splitmix64(h ^ w))
}

/// Restricts the grid. `None` keeps every value of that coordinate.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridFilter {
    pub a0: Option<Vec<f64>>,
    pub n: Option<Vec<usize>>,
    pub r: Option<Vec<f64>>,
    pub a_true: Option<Vec<f64>>,
    pub mu_true: Option<Vec<f64>>,
    pub replicates: Option<Vec<u32>>,
}

fn keep<T: PartialEq>(allowed: &Option<Vec<T>>, v: &T) -> bool {
    allowed.as_ref().is_none_or(|list| list.contains(v))
}

/// All grid cases passing `filter`, ordered by `a0`, `n`, `r`, `a_true`,
/// `mu_true`, replicate.
pub fn enumerate_grid(master_seed: u64, filter: &GridFilter) -> Vec<GridCase> {
    let decades = decade_values();
    let mut cases = Vec::new();
    for a0 in A0_VALUES.iter().filter(|v| keep(&filter.a0, v)) {
        for n in N_VALUES.iter().filter(|v| keep(&filter.n, v)) {
            for r in R_VALUES.iter().filter(|v| keep(&filter.r, v)) {
                for a_true in decades.iter().filter(|v| keep(&filter.a_true, v)) {
                    for mu_true in decades.iter().filter(|v| keep(&filter.mu_true, v)) {
                        for rep in (1..=REPLICATES).filter(|v| keep(&filter.replicates, v)) {
                            cases.push(GridCase::new(
                                master_seed, *n, *r, *a_true, *mu_true, *a0, rep,
                            ));
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Approximation and discrepancy report of one case.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: GridCase,
    pub approx: ApproxResult,
    pub report: DiscrepancyReport,
}

pub fn run_case(case: &GridCase, cfg: &AlgoConfig, qcfg: &QuadConfig) -> Result<CaseResult> {
    let post = case.posterior()?;
    let approx = approximate(post.stats(), &post.prior(), cfg)?;
    let report = discrepancy(&post, &approx.params, qcfg)?;
    Ok(CaseResult {
        case: *case,
        approx,
        report,
    })
}

/// One line of the grid output. Failed cases keep their coordinates, carry
/// the error message in `status` and leave the numeric fields empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridRow {
    pub a0: f64,
    pub n: usize,
    pub r: f64,
    pub a_true: f64,
    pub mu_true: f64,
    pub replicate: u32,
    pub seed: u64,
    #[serde(rename = "A")]
    pub shape: Option<f64>,
    #[serde(rename = "B")]
    pub rate: Option<f64>,
    pub iterations: Option<usize>,
    pub converged: Option<bool>,
    pub residual: Option<f64>,
    pub tv: Option<f64>,
    pub kl_fg: Option<f64>,
    pub kl_gf: Option<f64>,
    pub status: String,
}

pub const CSV_HEADER: [&str; 16] = [
    "a0", "n", "r", "a_true", "mu_true", "replicate", "seed", "A", "B", "iterations",
    "converged", "residual", "tv", "kl_fg", "kl_gf", "status",
];

impl GridRow {
    pub fn from_outcome(case: &GridCase, outcome: &Result<CaseResult>) -> Self {
        let mut row = GridRow {
            a0: case.a0,
            n: case.n,
            r: case.r,
            a_true: case.a_true,
            mu_true: case.mu_true,
            replicate: case.replicate,
            seed: case.seed,
            shape: None,
            rate: None,
            iterations: None,
            converged: None,
            residual: None,
            tv: None,
            kl_fg: None,
            kl_gf: None,
            status: String::new(),
        };
        match outcome {
            Ok(res) => {
                row.shape = Some(res.approx.params.shape());
                row.rate = Some(res.approx.params.rate());
                row.iterations = Some(res.approx.iterations);
                row.converged = Some(res.approx.converged);
                row.residual = Some(res.approx.residual);
                row.tv = Some(res.report.tv);
                row.kl_fg = Some(res.report.kl_fg);
                row.kl_gf = Some(res.report.kl_gf);
                row.status = "ok".into();
            }
            Err(e) => row.status = format!("error: {e}"),
        }
        row
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    fn record(&self) -> Vec<String> {
        let f = |x: f64| format!("{x:e}");
        let opt = |x: Option<f64>| x.map(f).unwrap_or_default();
        vec![
            f(self.a0),
            self.n.to_string(),
            f(self.r),
            f(self.a_true),
            f(self.mu_true),
            self.replicate.to_string(),
            self.seed.to_string(),
            opt(self.shape),
            opt(self.rate),
            self.iterations.map(|k| k.to_string()).unwrap_or_default(),
            self.converged.map(|c| c.to_string()).unwrap_or_default(),
            opt(self.residual),
            opt(self.tv),
            opt(self.kl_fg),
            opt(self.kl_gf),
            self.status.clone(),
        ]
    }
}

/// Runs every case passing `filter`, in parallel. Output order is the
/// enumeration order; a failing case becomes an error row.
pub fn run_grid(
    master_seed: u64,
    cfg: &AlgoConfig,
    qcfg: &QuadConfig,
    filter: &GridFilter,
) -> Vec<(GridCase, Result<CaseResult>)> {
    enumerate_grid(master_seed, filter)
        .into_par_iter()
        .map(|case| {
            let outcome = run_case(&case, cfg, qcfg);
            (case, outcome)
        })
        .collect()
}

/// [`run_grid`] flattened to output rows.
pub fn run_grid_rows(
    master_seed: u64,
    cfg: &AlgoConfig,
    qcfg: &QuadConfig,
    filter: &GridFilter,
) -> Vec<GridRow> {
    run_grid(master_seed, cfg, qcfg, filter)
        .iter()
        .map(|(case, outcome)| GridRow::from_outcome(case, outcome))
        .collect()
}

pub fn write_rows<W: Write>(out: W, rows: &[GridRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<GridRow>> {
    let mut rdr = csv::Reader::from_reader(input);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_owned).collect();
    if header != CSV_HEADER {
        return Err(Error::Parse(format!("unexpected header: {}", header.join(","))));
    }
    rdr.deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

pub fn read_rows_from_path(path: &Path) -> Result<Vec<GridRow>> {
    read_rows(std::fs::File::open(path)?)
}

/// Counts of runs needing `k = 1, 2, 3, 4, >= 5` iterations, per `a0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationTable {
    /// `a0` values in first-seen order.
    pub a0: Vec<f64>,
    /// `counts[j][k]` for `a0[j]`, bucket `k` meaning `k + 1` iterations.
    pub counts: Vec<[usize; 5]>,
    pub not_converged: Vec<usize>,
    pub errors: Vec<usize>,
}

impl IterationTable {
    fn column(&mut self, a0: f64) -> usize {
        match self.a0.iter().position(|&v| v == a0) {
            Some(j) => j,
            None => {
                self.a0.push(a0);
                self.counts.push([0; 5]);
                self.not_converged.push(0);
                self.errors.push(0);
                self.a0.len() - 1
            }
        }
    }

    /// Runs counted for column `j`, including failed ones.
    pub fn total(&self, j: usize) -> usize {
        self.counts[j].iter().sum::<usize>() + self.errors[j]
    }

    /// The table as CSV text, one row per bucket and one column per `a0`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("iterations");
        for a0 in &self.a0 {
            s.push_str(&format!(",a0={a0}"));
        }
        s.push('\n');
        let labels = ["1", "2", "3", "4", ">=5"];
        for (k, label) in labels.iter().enumerate() {
            s.push_str(label);
            for c in &self.counts {
                s.push_str(&format!(",{}", c[k]));
            }
            s.push('\n');
        }
        for (label, v) in [("not_converged", &self.not_converged), ("errors", &self.errors)] {
            s.push_str(label);
            for c in v.iter() {
                s.push_str(&format!(",{c}"));
            }
            s.push('\n');
        }
        s
    }
}

pub fn iteration_table(rows: &[GridRow]) -> IterationTable {
    let mut table = IterationTable {
        a0: Vec::new(),
        counts: Vec::new(),
        not_converged: Vec::new(),
        errors: Vec::new(),
    };
    for row in rows {
        let j = table.column(row.a0);
        match (row.is_ok(), row.iterations) {
            (true, Some(k)) => {
                table.counts[j][k.clamp(1, 5) - 1] += 1;
                if row.converged == Some(false) {
                    table.not_converged[j] += 1;
                }
            }
            _ => table.errors[j] += 1,
        }
    }
    table
}

/// Largest replicate-averaged discrepancies for one `(a0, n)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorstCase {
    pub a0: f64,
    pub n: usize,
    pub tv: f64,
    pub kl_fg: f64,
    pub kl_gf: f64,
    /// Number of `(r, a_true, mu_true)` combinations averaged over.
    pub combos: usize,
}

/// For each `(a0, n)`: average each metric over the replicates of every
/// combination, then take the maximum over combinations. Error rows are
/// skipped. Groups appear in first-seen order.
pub fn worst_case(rows: &[GridRow]) -> Vec<WorstCase> {
    type Key = (u64, usize, u64, u64, u64);
    let mut combos: Vec<(Key, [f64; 3], usize)> = Vec::new();
    for row in rows.iter().filter(|r| r.is_ok()) {
        let key = (
            row.a0.to_bits(),
            row.n,
            row.r.to_bits(),
            row.a_true.to_bits(),
            row.mu_true.to_bits(),
        );
        let metrics = [
            row.tv.unwrap_or(f64::NAN),
            row.kl_fg.unwrap_or(f64::NAN),
            row.kl_gf.unwrap_or(f64::NAN),
        ];
        match combos.iter_mut().find(|c| c.0 == key) {
            Some(c) => {
                for (acc, m) in c.1.iter_mut().zip(metrics) {
                    *acc += m;
                }
                c.2 += 1;
            }
            None => combos.push((key, metrics, 1)),
        }
    }
    let mut out: Vec<WorstCase> = Vec::new();
    for (key, sums, count) in combos {
        let avg = sums.map(|s| s / count as f64);
        let a0 = f64::from_bits(key.0);
        match out.iter_mut().find(|w| w.a0 == a0 && w.n == key.1) {
            Some(w) => {
                w.tv = w.tv.max(avg[0]);
                w.kl_fg = w.kl_fg.max(avg[1]);
                w.kl_gf = w.kl_gf.max(avg[2]);
                w.combos += 1;
            }
            None => out.push(WorstCase {
                a0,
                n: key.1,
                tv: avg[0],
                kl_fg: avg[1],
                kl_gf: avg[2],
                combos: 1,
            }),
        }
    }
    out
}

pub fn write_worst<W: Write>(out: W, worst: &[WorstCase]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["a0", "n", "tv", "kl_fg", "kl_gf", "combos"])?;
    for c in worst {
        w.write_record([
            format!("{:e}", c.a0),
            c.n.to_string(),
            format!("{:e}", c.tv),
            format!("{:e}", c.kl_fg),
            format!("{:e}", c.kl_gf),
            c.combos.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// One point of a CDF comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdfPoint {
    pub a: f64,
    pub true_cdf: f64,
    pub approx_cdf: f64,
}

/// The exact and approximate CDFs of one case at `points` of the quadrature
/// nodes. The exact CDF accumulates the normalized quadrature weights, each
/// node carrying the probability `1/N` of `g` around it.
pub fn cdf_dump(
    case: &GridCase,
    cfg: &AlgoConfig,
    qcfg: &QuadConfig,
    points: usize,
) -> Result<Vec<CdfPoint>> {
    if points == 0 {
        return Err(Error::domain("cdf_dump", "points", 0.0, "must be >= 1"));
    }
    let post = case.posterior()?;
    let g = approximate(post.stats(), &post.prior(), cfg)?.params;
    let w = importance_weights(&post, &g, qcfg)?;
    let n = w.log_ratios.len();
    let mut cumulative = Vec::with_capacity(n);
    let mut acc = 0.0;
    for lr in &w.log_ratios {
        let r = lr.exp();
        cumulative.push((acc + 0.5 * r) / n as f64);
        acc += r;
    }
    let points = points.min(n);
    (0..points)
        .map(|k| {
            let i = (((k as f64 + 0.5) / points as f64) * n as f64) as usize;
            let i = i.min(n - 1);
            let ln_a = w.log_nodes[i];
            let x = (ln_a + g.rate().ln()).exp();
            Ok(CdfPoint {
                a: ln_a.exp(),
                true_cdf: cumulative[i].min(1.0),
                approx_cdf: reg_lower_inc_gamma(g.shape(), x)?,
            })
        })
        .collect()
}

pub fn write_cdf<W: Write>(out: W, points: &[CdfPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["a", "true_cdf", "approx_cdf"])?;
    for p in points {
        w.write_record([
            format!("{:e}", p.a),
            format!("{:e}", p.true_cdf),
            format!("{:e}", p.approx_cdf),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads one positive decimal per line; blank lines are ignored.
pub fn read_data<R: Read>(mut input: R) -> Result<Vec<f64>> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut data = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let x: f64 = line
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: not a number: {line:?}", lineno + 1)))?;
        if !(x > 0.0 && x.is_finite()) {
            return Err(Error::Parse(format!(
                "line {}: data must be positive and finite, got {x}",
                lineno + 1
            )));
        }
        data.push(x);
    }
    Ok(data)
}

pub fn read_data_from_path(path: &Path) -> Result<Vec<f64>> {
    read_data(std::fs::File::open(path)?)
}

/// Output of a single fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitSummary {
    #[serde(rename = "A")]
    pub shape: f64,
    #[serde(rename = "B")]
    pub rate: f64,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
}

impl From<&ApproxResult> for FitSummary {
    fn from(r: &ApproxResult) -> Self {
        FitSummary {
            shape: r.params.shape(),
            rate: r.params.rate(),
            iterations: r.iterations,
            converged: r.converged,
            residual: r.residual,
        }
    }
}

/// Fits the approximation to a data set.
pub fn fit(data: &[f64], mu: f64, prior: &GammaParams, cfg: &AlgoConfig) -> Result<FitSummary> {
    let post = ShapePosterior::from_data(data, mu, *prior)?;
    Ok(FitSummary::from(&approximate(post.stats(), prior, cfg)?))
}

/// A Metropolis-Hastings chain compared with quadrature moments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MhCheck {
    pub steps: u64,
    pub seed: u64,
    pub chain_mean: f64,
    pub chain_variance: f64,
    pub acceptance_rate: f64,
    pub effective_sample_size: f64,
    /// Monte Carlo standard error of `chain_mean`.
    pub mean_std_error: f64,
    pub quad_mean: f64,
    pub quad_variance: f64,
}

/// Runs `steps` exact MH updates of the shape, starting at the mean of the
/// approximation, and reports chain and quadrature moments.
pub fn mh_check(
    post: &ShapePosterior,
    steps: u64,
    seed: u64,
    cfg: &AlgoConfig,
    qcfg: &QuadConfig,
) -> Result<MhCheck> {
    if steps < 2 {
        return Err(Error::domain("mh_check", "steps", steps as f64, "must be >= 2"));
    }
    let mut rng = RngState::new(seed);
    let g = approximate(post.stats(), &post.prior(), cfg)?.params;
    let mut a = g.mean();
    let mut accepted = 0u64;
    let mut chain = Vec::with_capacity(steps as usize);
    for _ in 0..steps {
        let step = mh_step(&mut rng, a, post, cfg)?;
        accepted += step.accepted as u64;
        a = step.value;
        chain.push(a);
    }
    let (chain_mean, chain_variance) = mean_and_variance(&chain);
    let ess = effective_sample_size(&chain);
    let quad = discrepancy(post, &g, qcfg)?;
    Ok(MhCheck {
        steps,
        seed,
        chain_mean,
        chain_variance,
        acceptance_rate: accepted as f64 / steps as f64,
        effective_sample_size: ess,
        mean_std_error: (chain_variance / ess).sqrt(),
        quad_mean: quad.mean_f,
        quad_variance: quad.var_f,
    })
}
