// The scalar special functions, including the composites that stay accurate
// where the naive differences cancel.
//
// $ cargo run --example special_functions

use gamma_shape::specfun::{
    a_sq_trigamma_minus_a, digamma, gamma_log_quantile, gamma_quantile, log_gamma,
    log_minus_digamma, reg_lower_inc_gamma, trigamma,
};

fn main() -> Result<(), gamma_shape::error::Error> {
    println!("{:>8} {:>22} {:>22} {:>22}", "x", "lgamma", "digamma", "trigamma");
    for x in [1e-6, 0.5, 1.0, 10.5, 1e6] {
        println!("{x:>8} {:>22.15e} {:>22.15e} {:>22.15e}", log_gamma(x)?, digamma(x)?, trigamma(x)?);
    }

    println!("\n{:>8} {:>22} {:>22} {:>22}", "a", "log a - psi(a)", "naive", "a^2 psi'(a) - a");
    for a in [1e-8_f64, 1.0, 1e4, 1e8] {
        let naive = a.ln() - digamma(a)?;
        println!(
            "{a:>8} {:>22.15e} {naive:>22.15e} {:>22.15e}",
            log_minus_digamma(a)?,
            a_sq_trigamma_minus_a(a)?
        );
    }

    let q = gamma_quantile(0.975, 2.0, 3.0)?;
    println!("\n97.5% quantile of Gamma(2, 3): {q:.12}");
    println!("CDF there: {:.12}", reg_lower_inc_gamma(2.0, 3.0 * q)?);
    println!("ln of the 5e-6 quantile of Gamma(0.01, 3): {:.3}", gamma_log_quantile(5e-6, 0.01, 3.0)?);
    Ok(())
}
