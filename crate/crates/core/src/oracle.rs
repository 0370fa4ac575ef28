//! Numerical check of the Wirtinger-type inequality behind the gap argument:
//! for smooth f vanishing at both ends of [a, b],
//! integral of f^2 <= ((b-a)/pi)^2 integral of f'^2.

use crate::error::{Error, Result};

const MIN_POINTS: usize = 1_000;

/// Composite Simpson on a uniform grid; a 3/8 block absorbs the last three
/// intervals when their count is odd.
fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    assert!(n >= 4, "simpson needs at least four points");
    let intervals = n - 1;
    let (even_part, tail) = if intervals % 2 == 0 {
        (n, 0.0)
    } else {
        // 3/8 rule over the last three intervals.
        let t = &values[n - 4..];
        (
            n - 3,
            3.0 * h / 8.0 * (t[0] + 3.0 * t[1] + 3.0 * t[2] + t[3]),
        )
    };
    let mut acc = values[0] + values[even_part - 1];
    for (i, v) in values[1..even_part - 1].iter().enumerate() {
        acc += if i % 2 == 0 { 4.0 * v } else { 2.0 * v };
    }
    h / 3.0 * acc + tail
}

/// [integral f^2] / [integral f'^2] from samples of f on a uniform grid over
/// [a, b], with f' by central differences (second-order one-sided at the
/// ends). For admissible f the result is at most ((b-a)/pi)^2 up to
/// discretization error.
pub fn wirtinger_ratio(samples: &[f64], a: f64, b: f64) -> Result<f64> {
    if samples.len() < MIN_POINTS {
        return Err(Error::TooFewPoints(samples.len(), MIN_POINTS));
    }
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::InvalidInterval(a, b));
    }
    let scale = samples.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return Err(Error::Usage("samples are identically zero".into()));
    }
    let first = samples[0].abs();
    let last = samples[samples.len() - 1].abs();
    if first > 1e-9 * scale || last > 1e-9 * scale {
        return Err(Error::EndpointNotZero);
    }
    let n = samples.len();
    let h = (b - a) / (n - 1) as f64;
    let mut deriv = vec![0.0; n];
    deriv[0] = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * h);
    deriv[n - 1] = (3.0 * samples[n - 1] - 4.0 * samples[n - 2] + samples[n - 3]) / (2.0 * h);
    for i in 1..n - 1 {
        deriv[i] = (samples[i + 1] - samples[i - 1]) / (2.0 * h);
    }
    let squares: Vec<f64> = samples.iter().map(|v| v * v).collect();
    let deriv_squares: Vec<f64> = deriv.iter().map(|v| v * v).collect();
    Ok(simpson(&squares, h) / simpson(&deriv_squares, h))
}
