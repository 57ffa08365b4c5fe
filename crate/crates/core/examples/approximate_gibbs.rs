// Approximate Gibbs updates of the shape: draw straight from the fitted gamma.
//
// $ cargo run --release --example approximate_gibbs

use gamma_shape::approx::AlgoConfig;
use gamma_shape::model::GammaParams;
use gamma_shape::sampler::{gibbs_update_shape, mean_and_variance, RngState};

fn main() -> Result<(), gamma_shape::error::Error> {
    let data = [0.5, 1.5, 2.5];
    let prior = GammaParams::new(1.0, 1.0)?;
    let cfg = AlgoConfig::default();
    let mut rng = RngState::new(2024);

    let draws: Vec<f64> = (0..100_000)
        .map(|_| gibbs_update_shape(&mut rng, &data, 1.0, &prior, &cfg))
        .collect::<Result<_, _>>()?;
    let (mean, var) = mean_and_variance(&draws);
    println!("100000 draws: mean {mean:.4}, variance {var:.4}");
    Ok(())
}
