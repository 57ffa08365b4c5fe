// Exact and approximate CDFs of one grid case, written as CSV to stdout.
//
// $ cargo run --release --example cdf_comparison > cdf.csv

use gamma_shape::approx::AlgoConfig;
use gamma_shape::harness::{cdf_dump, write_cdf, GridCase, DEFAULT_MASTER_SEED};
use gamma_shape::quadrature::QuadConfig;

fn main() -> Result<(), gamma_shape::error::Error> {
    let case = GridCase::new(DEFAULT_MASTER_SEED, 100, 1.0, 1.0, 1.0, 1.0, 1);
    let points = cdf_dump(&case, &AlgoConfig::default(), &QuadConfig::default(), 64)?;
    let gap = points
        .iter()
        .map(|p| (p.true_cdf - p.approx_cdf).abs())
        .fold(0.0, f64::max);
    eprintln!("largest CDF gap {gap:.2e}");
    write_cdf(std::io::stdout(), &points)
}
