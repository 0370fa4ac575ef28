//! theta = 0 removes the amplifier entirely and everything collapses to
//! closed forms: c0 = 1/120, c1(nu) = (nu^2 - 2 nu + 7/6)/120, so the
//! implied kappa is sqrt(6) at the optimal nu = 1 and sqrt(6/7) at nu = 0.

use zeta_gaps::eigen::optimize;
use zeta_gaps::functional::{AmplifierConfig, GapFunctional};
use zeta_gaps::poly::big_rational;

fn main() -> zeta_gaps::Result<()> {
    let config = AmplifierConfig::new(big_rational(0, 1), 1, 0, None)?;
    let f = GapFunctional::assemble(config)?.to_f64();

    println!("  nu     kappa(nu)   closed form");
    for k in 0..=8 {
        let nu = 0.25 * k as f64;
        let kappa = (f.c0_value(&[1.0]) / f.c1_value(nu, &[1.0])).sqrt();
        let closed = (1.0 / (nu * nu - 2.0 * nu + 7.0 / 6.0)).sqrt();
        println!("  {nu:4.2}   {kappa:.8}  {closed:.8}");
    }

    let best = optimize(&f, (0.0, 3.0), 1e-9)?;
    println!();
    println!("optimum: kappa = {:.12} at nu = {:.9}", best.kappa, best.nu);
    println!("sqrt(6) = {:.12}", 6.0f64.sqrt());
    Ok(())
}
