//! The variational inequality underneath the gap argument: a function
//! vanishing at both endpoints of [a, b] satisfies
//! int f^2 <= ((b-a)/pi)^2 int f'^2, with equality exactly for the sine arch.

use std::f64::consts::PI;
use zeta_gaps::oracle::wirtinger_ratio;

type Curve = fn(f64) -> f64;

fn grid(n: usize, a: f64, b: f64, f: impl Fn(f64) -> f64) -> Vec<f64> {
    (0..n)
        .map(|i| f(a + (b - a) * i as f64 / (n - 1) as f64))
        .collect()
}

fn main() -> zeta_gaps::Result<()> {
    let (a, b) = (0.0, PI);
    let bound = ((b - a) / PI).powi(2);
    println!("interval [0, pi], bound ((b-a)/pi)^2 = {bound}");
    println!();

    let cases: [(&str, Curve); 4] = [
        ("sin x (extremal)", |x| x.sin()),
        ("sin 2x", |x| (2.0 * x).sin()),
        ("x (pi - x)", |x| x * (PI - x)),
        ("sin x + 0.2 sin 3x", |x| x.sin() + 0.2 * (3.0 * x).sin()),
    ];
    for (name, f) in cases {
        let ratio = wirtinger_ratio(&grid(20_001, a, b, f), a, b)?;
        println!(
            "{name:<20} ratio = {ratio:.8}   slack = {:+.2e}",
            bound - ratio
        );
    }

    println!();
    println!("non-vanishing endpoints are rejected:");
    let err = wirtinger_ratio(&grid(20_001, a, b, |x| x.cos()), a, b).unwrap_err();
    println!("  cos x -> {err}");
    Ok(())
}
