// Run part of the simulation grid and print the iteration-count table and the
// worst-case discrepancies. Pass `full` to run all 22815 cases.
//
// $ cargo run --release --example simulation_grid
// $ cargo run --release --example simulation_grid -- full

use std::time::Instant;

use gamma_shape::approx::AlgoConfig;
use gamma_shape::harness::{
    iteration_table, run_grid_rows, worst_case, write_worst, GridFilter, DEFAULT_MASTER_SEED,
};
use gamma_shape::quadrature::QuadConfig;

fn main() -> Result<(), gamma_shape::error::Error> {
    let filter = if std::env::args().any(|a| a == "full") {
        GridFilter::default()
    } else {
        GridFilter {
            r: Some(vec![1.0]),
            ..Default::default()
        }
    };
    let start = Instant::now();
    let rows = run_grid_rows(
        DEFAULT_MASTER_SEED,
        &AlgoConfig::default(),
        &QuadConfig::new(10_000)?,
        &filter,
    );
    println!("{} runs in {:.1?}\n", rows.len(), start.elapsed());
    print!("{}", iteration_table(&rows).to_csv());
    println!();
    write_worst(std::io::stdout(), &worst_case(&rows))?;
    Ok(())
}
