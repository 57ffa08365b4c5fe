// Distance between the exact full conditional and its gamma approximation,
// by deterministic importance quadrature.
//
// $ cargo run --release --example quadrature_discrepancy

use gamma_shape::approx::{approximate, AlgoConfig};
use gamma_shape::model::{GammaParams, ShapePosterior};
use gamma_shape::quadrature::{discrepancy, quad_nodes, QuadConfig};

fn main() -> Result<(), gamma_shape::error::Error> {
    let exp = GammaParams::new(1.0, 1.0)?;
    println!("4 nodes of Exp(1): {:?}", quad_nodes(&exp, 4)?);

    let prior = GammaParams::new(0.1, 0.1)?;
    for data in [vec![0.8], vec![0.2, 0.9, 3.1, 7.5], vec![1.1; 50]] {
        let post = ShapePosterior::from_data(&data, 1.3, prior)?;
        let fit = approximate(post.stats(), &prior, &AlgoConfig::default())?;
        let r = discrepancy(&post, &fit.params, &QuadConfig::default())?;
        println!(
            "n = {:3}: tv {:.3e}  KL(f,g) {:.3e}  KL(g,f) {:.3e}  mean {:.4} vs A/B {:.4}",
            data.len(),
            r.tv,
            r.kl_fg,
            r.kl_gf,
            r.mean_f,
            fit.params.mean()
        );
    }
    Ok(())
}
