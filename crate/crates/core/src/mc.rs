//! Monte Carlo cross-checks of the exact assembly: uniform sampling of the
//! integration region, direct estimates of c0, c1 and the shifted integral,
//! and a finite-difference check of the identity that differentiating the
//! shifted integral at zero shifts reproduces c1.
//!
//! Reproducibility contract: ChaCha8 keyed by the user seed, one substream
//! per 65536-sample chunk (stream id = chunk index), chunk results merged in
//! ascending index order. Estimates are bit-identical for a given (seed, n)
//! no matter how many worker threads run the chunks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functional::{AmplifierConfig, GapFunctional, ShiftedPoint, Shifts};

pub const CHUNK: u64 = 65536;
const MIN_SAMPLES: u64 = 1_000;

/// A point of the region: (x, x1, x2, x3, x4) with x + x1 + x2 <= 1 and
/// x + x3 + x4 <= 1.
pub type RegionPoint = [f64; 5];

/// Rejection sampling from the unit 5-cube; exactly uniform on the region.
/// Draw order is x, x1, x2, x3, x4 per proposal (the determinism tests pin
/// this). Expected proposals per sample: 20 (the region has volume 1/20).
pub fn sample_region<R: Rng>(rng: &mut R) -> RegionPoint {
    loop {
        let p: RegionPoint = [rng.gen(), rng.gen(), rng.gen(), rng.gen(), rng.gen()];
        if p[0] + p[1] + p[2] <= 1.0 && p[0] + p[3] + p[4] <= 1.0 {
            return p;
        }
    }
}

/// Which integral to estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Target {
    /// B C core P(Qa) P(Qb) over the region.
    C0,
    /// The same weight times (nu - theta S - t1 B - t2 C)^2, with t1, t2
    /// drawn uniformly per sample: checks the closed-form t-integration
    /// as well as the assembled matrices.
    C1 { nu: f64 },
    /// The shift-perturbed integrand at fixed shifts.
    Shifted { shifts: Shifts },
}

/// Estimate plus its certification data. `mean` includes the 1/20 volume
/// factor, so it estimates the integral itself; `stderr` is the standard
/// deviation of the per-sample contribution over sqrt(n).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n: u64,
    pub seed: u64,
}

/// Streaming (count, mean, M2) with deterministic merge order.
#[derive(Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.count += 1;
        let delta = v - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (v - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        Moments {
            count,
            mean: self.mean + delta * other.count as f64 / count as f64,
            m2: self.m2
                + other.m2
                + delta * delta * self.count as f64 * other.count as f64 / count as f64,
        }
    }
}

/// Run `g` over n samples split into substream chunks; merge ascending.
fn chunked_moments<G>(n: u64, seed: u64, g: G) -> Moments
where
    G: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let take = CHUNK.min(n - chunk * CHUNK);
            let mut acc = Moments::default();
            for _ in 0..take {
                acc.push(g(&mut rng));
            }
            acc
        })
        .collect::<Vec<_>>() // indexed collect keeps ascending chunk order
        .into_iter()
        .fold(Moments::default(), Moments::merge)
}

fn finish(moments: Moments, seed: u64) -> McEstimate {
    let n = moments.count;
    let variance = if n > 1 {
        moments.m2 / (n - 1) as f64
    } else {
        0.0
    };
    McEstimate {
        mean: moments.mean / 20.0,
        stderr: (variance / n as f64).sqrt() / 20.0,
        n,
        seed,
    }
}

pub fn mc_estimate(
    target: Target,
    config: &AmplifierConfig,
    b: &[f64],
    n: u64,
    seed: u64,
) -> Result<McEstimate> {
    config.validate()?;
    if b.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidAmplifier("coefficient vector is zero".into()));
    }
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples(n, MIN_SAMPLES));
    }
    let theta = config.theta_f64();
    let moments = chunked_moments(n, seed, |rng| {
        let p = sample_region(rng);
        let point = ShiftedPoint::new(config, b, &p);
        match target {
            Target::C0 => point.weight,
            Target::C1 { nu } => {
                let t1: f64 = rng.gen();
                let t2: f64 = rng.gen();
                let s: f64 = p.iter().sum();
                let a = nu - theta * s;
                let lin = a - t1 * point.b_factor - t2 * point.c_factor;
                point.weight * lin * lin
            }
            Target::Shifted { shifts } => point.value(&shifts),
        }
    });
    Ok(finish(moments, seed))
}

/// Monte Carlo image of one raw monomial over the region (no amplifier
/// weight); cross-checks the closed-form moment formula.
pub fn mc_monomial(exponents: [u16; 5], n: u64, seed: u64) -> Result<McEstimate> {
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples(n, MIN_SAMPLES));
    }
    let moments = chunked_moments(n, seed, |rng| {
        let p = sample_region(rng);
        p.iter()
            .zip(exponents)
            .map(|(x, e)| x.powi(e as i32))
            .product()
    });
    Ok(finish(moments, seed))
}

/// Finite-difference residual of the derivative identity: applying
/// (nu + sum_i d/dA_i)(nu + sum_j d/dB_j) to the shifted integral at zero
/// shifts must reproduce c1(nu).
#[derive(Clone, Copy, Debug)]
pub struct OperatorCheck {
    /// The finite-difference estimate of the operator image.
    pub fd_value: f64,
    /// Exactly assembled c1(nu, b).
    pub exact_c1: f64,
    /// |fd_value - exact_c1| / |exact_c1|.
    pub residual: f64,
    /// Standard error of fd_value (common random numbers across the
    /// stencil, so this is the error of the combined estimate).
    pub stderr: f64,
    pub n: u64,
    pub seed: u64,
}

/// The 49-point stencil: origin, 12 single-direction central differences,
/// 36 corner points for the 9 mixed second derivatives.
fn stencil(nu: f64, h: f64) -> Vec<(Shifts, f64)> {
    let unit = |k: usize, v: f64| {
        let mut s = Shifts::default();
        if k < 3 {
            s.a[k] = v;
        } else {
            s.b[k - 3] = v;
        }
        s
    };
    let mut points = vec![(Shifts::default(), nu * nu)];
    for k in 0..6 {
        points.push((unit(k, h), nu / (2.0 * h)));
        points.push((unit(k, -h), -nu / (2.0 * h)));
    }
    for i in 0..3 {
        for j in 0..3 {
            for (sa, sb) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut s = Shifts::default();
                s.a[i] = sa * h;
                s.b[j] = sb * h;
                points.push((s, sa * sb / (4.0 * h * h)));
            }
        }
    }
    points
}

pub fn operator_identity_check(
    config: &AmplifierConfig,
    b: &[f64],
    nu: f64,
    fd_step: f64,
    n: u64,
    seed: u64,
) -> Result<OperatorCheck> {
    config.validate()?;
    if !(0.001..=0.1).contains(&fd_step) {
        return Err(Error::InvalidStep(fd_step));
    }
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples(n, MIN_SAMPLES));
    }
    let exact_c1 = GapFunctional::assemble(config.clone())?.c1_value(nu, b);
    let points = stencil(nu, fd_step);
    let moments = chunked_moments(n, seed, |rng| {
        let p = sample_region(rng);
        let point = ShiftedPoint::new(config, b, &p);
        points.iter().map(|(s, w)| w * point.value(s)).sum()
    });
    let estimate = finish(moments, seed);
    Ok(OperatorCheck {
        fd_value: estimate.mean,
        exact_c1,
        residual: (estimate.mean - exact_c1).abs() / exact_c1.abs(),
        stderr: estimate.stderr,
        n,
        seed,
    })
}
