//! Exact values of the conjectured moment-method limit (4k^2 - 1)/(4k^4)
//! and the gap multipliers they would imply.

use zeta_gaps::functional::hall_conjecture_ratio;
use zeta_gaps::poly::rational_to_f64;
use zeta_gaps::report::rational_str;

fn main() {
    println!(" k   ratio        value         implied multiplier");
    for k in 1..=8 {
        let ratio = hall_conjecture_ratio(k);
        let value = rational_to_f64(&ratio);
        println!(
            " {k}   {:<10}  {value:.10}  {:.10}",
            rational_str(&ratio),
            (1.0 / value).sqrt()
        );
    }
    println!();
    println!("the implied multiplier grows like k / sqrt(1 - 1/(4k^2)) ~ k + 1/(8k)");
}
