//! Scan theta x degree and watch the certified kappa grow in both: longer
//! amplifiers (larger theta) and richer weights (larger degree) can only
//! enlarge the feasible set.

use zeta_gaps::eigen::scan;
use zeta_gaps::poly::big_rational;
use zeta_gaps::report::rational_str;

fn main() {
    let thetas = [big_rational(0, 1), big_rational(1, 8), big_rational(1, 4)];
    let rows = scan(&thetas, &[1], &[0, 1, 2, 3, 4], (0.5, 2.0), 1e-7);

    println!("theta  degree  kappa          nu*");
    for row in &rows {
        match &row.outcome {
            Ok(res) => println!(
                "{:<5}  {:<6}  {:<13.10}  {:.6}",
                rational_str(&row.theta),
                row.degree,
                res.kappa,
                res.nu
            ),
            Err(message) => println!(
                "{:<5}  {:<6}  failed: {message}",
                rational_str(&row.theta),
                row.degree
            ),
        }
    }
}
