//! Arithmetic inputs per discriminant: conductor, L(1, chi_D), the
//! Euler-product constant A_1 scaling the amplified mean square, and the
//! average zero gap at height 10^6.

use zeta_gaps::field::FieldParams;
use zeta_gaps::functional::{mean_square_main_term, reference_config, REFERENCE_COEFFS};

fn main() -> zeta_gaps::Result<()> {
    println!("    D     q  type  L(1,chi)      A_1           avg gap");
    for d in [-3i64, -4, 5, 8, 13, -163] {
        let field = FieldParams::new(d)?;
        let l1 = field.dirichlet_l1(1e-12)?;
        let a1 = field.arithmetic_factor(1, 100_000)?;
        let stats = field.density_stats(1e6)?;
        let kind = if field.imaginary { "imag" } else { "real" };
        println!(
            " {d:>4}  {:>4}  {kind}  {l1:.10}  {a1:.10}  {:.8}",
            field.q, stats.avg_gap
        );
    }

    // Scale of the certified object itself: the leading term of the
    // amplified second moment for Q(i) at height 10^6.
    let field = FieldParams::new(-4)?;
    let a1 = field.arithmetic_factor(1, 100_000)?;
    let main = mean_square_main_term(1e6, &field, &reference_config(), &REFERENCE_COEFFS, a1)?;
    println!();
    println!("amplified mean square main term, D = -4, T = 10^6: {main:.6e}");
    Ok(())
}
