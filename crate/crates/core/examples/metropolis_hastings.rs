// Exact updates of the shape: the fitted gamma as an independence proposal,
// compared with the posterior moments from quadrature.
//
// $ cargo run --release --example metropolis_hastings

use gamma_shape::approx::AlgoConfig;
use gamma_shape::harness::mh_check;
use gamma_shape::model::{GammaParams, ShapePosterior};
use gamma_shape::quadrature::QuadConfig;

fn main() -> Result<(), gamma_shape::error::Error> {
    let prior = GammaParams::new(1.0, 1.0)?;
    let post = ShapePosterior::from_data(&[0.5, 1.5, 2.5], 1.0, prior)?;
    let check = mh_check(&post, 200_000, 7, &AlgoConfig::default(), &QuadConfig::default())?;

    println!("acceptance rate  {:.4}", check.acceptance_rate);
    println!("chain mean       {:.5} +/- {:.5}", check.chain_mean, check.mean_std_error);
    println!("quadrature mean  {:.5}", check.quad_mean);
    println!("chain variance   {:.5}", check.chain_variance);
    println!("quadrature var.  {:.5}", check.quad_variance);
    Ok(())
}
