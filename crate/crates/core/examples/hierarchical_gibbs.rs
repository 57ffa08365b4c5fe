// A two-parameter Gibbs sampler for gamma data with unknown shape and mean:
// exact Metropolis-Hastings for the shape, conjugate inverse-gamma for the mean.
//
// $ cargo run --release --example hierarchical_gibbs

use gamma_shape::approx::AlgoConfig;
use gamma_shape::model::GammaParams;
use gamma_shape::sampler::{
    gibbs_update_mean, mean_and_variance, mh_update_shape, sample_gamma, RngState,
};

fn main() -> Result<(), gamma_shape::error::Error> {
    // Simulated data with shape 4 and mean 2.5.
    let mut rng = RngState::new(11);
    let truth = GammaParams::new(4.0, 4.0 / 2.5)?;
    let data: Vec<f64> = (0..200).map(|_| sample_gamma(&mut rng, &truth)).collect();

    let shape_prior = GammaParams::new(1.0, 1.0)?;
    let (alpha0, beta0) = (2.0, 1.0);
    let cfg = AlgoConfig::default();

    let (mut a, mut mu) = (1.0, 1.0);
    let mut accepted = 0;
    let (mut shapes, mut means) = (Vec::new(), Vec::new());
    for step in 0..20_000 {
        let out = mh_update_shape(&mut rng, a, &data, mu, &shape_prior, &cfg)?;
        accepted += out.accepted as usize;
        a = out.value;
        mu = gibbs_update_mean(&mut rng, &data, a, alpha0, beta0)?;
        if step >= 1000 {
            shapes.push(a);
            means.push(mu);
        }
    }
    let (a_mean, a_var) = mean_and_variance(&shapes);
    let (mu_mean, mu_var) = mean_and_variance(&means);
    println!("shape: {a_mean:.3} (sd {:.3})", a_var.sqrt());
    println!("mean:  {mu_mean:.3} (sd {:.3})", mu_var.sqrt());
    println!("shape acceptance rate {:.3}", accepted as f64 / 20_000.0);
    Ok(())
}
