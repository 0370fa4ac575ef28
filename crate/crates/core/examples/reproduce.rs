//! Re-derive the reported gap certificate at the recorded configuration.

use zeta_gaps::functional::{
    reference_config, GapFunctional, REFERENCE_COEFFS, REFERENCE_KAPPA, REFERENCE_NU,
};

fn main() -> zeta_gaps::Result<()> {
    let functional = GapFunctional::assemble(reference_config())?;
    let result = functional.evaluate(&REFERENCE_COEFFS, REFERENCE_NU, Some(REFERENCE_KAPPA))?;

    println!("configuration: theta = 1/4, r = 1, degree 4");
    println!("nu            = {}", result.nu);
    println!("c0            = {:.12e}", result.c0_value);
    println!("c1(nu)        = {:.12e}", result.c1_value);
    println!(
        "h(kappa={REFERENCE_KAPPA})  = {:.10}",
        result.h.expect("kappa was supplied")
    );
    println!("implied kappa = {:.7}", result.kappa);
    println!();
    println!("h > 1 certifies a normalized gap larger than {REFERENCE_KAPPA}; the implied");
    println!("kappa = sqrt(c0/c1) is the largest multiplier this vector certifies.");
    Ok(())
}
