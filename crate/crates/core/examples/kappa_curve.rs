//! The certified kappa as a function of nu, coefficients re-optimized at
//! every grid point. Single-peaked with the maximum near nu = 1.28.

use zeta_gaps::eigen::kappa_curve;
use zeta_gaps::functional::{reference_config, GapFunctional};

fn main() -> zeta_gaps::Result<()> {
    let f = GapFunctional::assemble(reference_config())?.to_f64();
    let points = kappa_curve(&f, (0.6, 2.0), 0.05)?;

    let max = points.iter().map(|p| p.kappa).fold(f64::MIN, f64::max);
    let min = points.iter().map(|p| p.kappa).fold(f64::MAX, f64::min);
    println!("  nu     kappa");
    for p in &points {
        let fill = ((p.kappa - min) / (max - min) * 40.0).round() as usize;
        println!(
            "  {:4.2}   {:.8}  {}",
            p.nu,
            p.kappa,
            "*".repeat(fill.max(1))
        );
    }

    let peak = points
        .iter()
        .max_by(|a, b| a.kappa.total_cmp(&b.kappa))
        .expect("nonempty grid");
    println!();
    println!(
        "peak on the grid: kappa = {:.8} at nu = {}",
        peak.kappa, peak.nu
    );
    Ok(())
}
