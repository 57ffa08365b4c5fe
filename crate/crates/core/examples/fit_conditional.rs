// Fit the gamma approximation to the full conditional of a shape parameter.
//
// $ cargo run --example fit_conditional

use gamma_shape::approx::{approximate, refine_once, AlgoConfig};
use gamma_shape::model::{compute_stats, GammaParams};

fn main() -> Result<(), gamma_shape::error::Error> {
    let data = [0.5, 1.5, 2.5];
    let mu = 1.0;
    let prior = GammaParams::new(1.0, 1.0)?;

    let stats = compute_stats(&data, mu)?;
    println!("n = {}, T = {:.6}", stats.n(), stats.t());

    let fit = approximate(&stats, &prior, &AlgoConfig::default())?;
    println!(
        "Gamma(A = {:.6}, B = {:.6}), mean {:.6}, {} iterations, residual {:e}",
        fit.params.shape(),
        fit.params.rate(),
        fit.params.mean(),
        fit.iterations,
        fit.residual
    );

    // One more step from the fitted mean changes nothing.
    let again = refine_once(fit.params.mean(), &stats, &prior)?;
    println!("refit mean {:.12} vs {:.12}", again.mean(), fit.params.mean());
    Ok(())
}
