//! The two gap functionals as exact quadratic forms in the amplifier
//! coefficients b.
//!
//! With S = x + x1 + x2 + x3 + x4, B = 1 - theta(x1 + x3),
//! C = 1 - theta(x2 + x4), core = x^(2r^2-1) (x1 x2 x3 x4)^(r-1),
//! Qa = 1 - x - x1 - x2 and Qb = 1 - x - x3 - x4:
//!
//!   c0(b)      = integral over R of  B C core P(Qa) P(Qb)
//!   c1(nu, b)  = integral over R x [0,1]^2 of
//!                B C core (nu - theta S - t1 B - t2 C)^2 P(Qa) P(Qb)
//!
//! The t1, t2 square integrates in closed form,
//!
//!   int int (A - B t1 - C t2)^2 dt1 dt2
//!     = A^2 - A (B + C) + B^2/3 + C^2/3 + B C / 2,   A = nu - theta S,
//!
//! so c1 is a quadratic polynomial in nu whose coefficient matrices
//! (K2, K1, K0) are assembled exactly; K2 must coincide with C0 entrywise.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{big_rational, rational_to_f64, SparsePoly};
use crate::region::integrate;

pub type RationalMatrix = Vec<Vec<BigRational>>;

/// Parameters of the amplifier: exponent fraction theta = log y / log T,
/// divisor order r, polynomial degree, and optionally the coefficients of P.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplifierConfig {
    pub theta: BigRational,
    pub r: u32,
    pub degree: usize,
    pub coeffs: Option<Vec<f64>>,
}

impl AmplifierConfig {
    pub fn new(
        theta: BigRational,
        r: u32,
        degree: usize,
        coeffs: Option<Vec<f64>>,
    ) -> Result<Self> {
        let config = AmplifierConfig {
            theta,
            r,
            degree,
            coeffs,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta.is_negative() || self.theta > big_rational(1, 4) {
            return Err(Error::InvalidTheta);
        }
        if self.r < 1 {
            return Err(Error::InvalidAmplifier("r must be at least 1".into()));
        }
        if let Some(b) = &self.coeffs {
            if b.len() != self.degree + 1 {
                return Err(Error::InvalidAmplifier(format!(
                    "coefficient vector has length {}, expected degree + 1 = {}",
                    b.len(),
                    self.degree + 1
                )));
            }
            if b.iter().all(|&v| v == 0.0) {
                return Err(Error::InvalidAmplifier("coefficient vector is zero".into()));
            }
            if b.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidAmplifier(
                    "coefficients must be finite".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn coeffs_or_err(&self) -> Result<&[f64]> {
        self.coeffs
            .as_deref()
            .ok_or_else(|| Error::InvalidAmplifier("coefficient vector required".into()))
    }

    pub fn theta_f64(&self) -> f64 {
        rational_to_f64(&self.theta)
    }

    /// x^(2r^2-1) (x1 x2 x3 x4)^(r-1)
    fn core(&self) -> SparsePoly {
        let mut exps = [0u16; 5];
        exps[0] = (2 * self.r * self.r - 1) as u16;
        for e in exps.iter_mut().skip(1) {
            *e = (self.r - 1) as u16;
        }
        SparsePoly::from_term(crate::poly::Monomial(exps), BigRational::one())
    }
}

fn var_sum(indices: &[usize]) -> SparsePoly {
    let mut p = SparsePoly::zero();
    for &i in indices {
        p = p.add(&SparsePoly::var(i));
    }
    p
}

/// The recurring linear forms of the integrands for one config.
struct Forms {
    b_factor: SparsePoly, // 1 - theta (x1 + x3)
    c_factor: SparsePoly, // 1 - theta (x2 + x4)
    s_sum: SparsePoly,    // x + x1 + x2 + x3 + x4
    qa: SparsePoly,       // 1 - x - x1 - x2
    qb: SparsePoly,       // 1 - x - x3 - x4
    core: SparsePoly,
}

impl Forms {
    fn build(config: &AmplifierConfig) -> Forms {
        let theta = &config.theta;
        let one = SparsePoly::one();
        Forms {
            b_factor: one.sub(&var_sum(&[1, 3]).scale(theta)),
            c_factor: one.sub(&var_sum(&[2, 4]).scale(theta)),
            s_sum: var_sum(&[0, 1, 2, 3, 4]),
            qa: one.sub(&var_sum(&[0, 1, 2])),
            qb: one.sub(&var_sum(&[0, 3, 4])),
            core: config.core(),
        }
    }
}

/// Powers Qa^i (and Qb^j) for i, j = 0..=degree, precomputed once.
fn bracket_powers(base: &SparsePoly, degree: usize) -> Result<Vec<SparsePoly>> {
    let mut powers = Vec::with_capacity(degree + 1);
    powers.push(SparsePoly::one());
    for _ in 0..degree {
        let next = powers.last().unwrap().mul(base)?;
        powers.push(next);
    }
    Ok(powers)
}

fn weighted_matrix(
    weight: &SparsePoly,
    qa_pows: &[SparsePoly],
    qb_pows: &[SparsePoly],
) -> Result<RationalMatrix> {
    let n = qa_pows.len();
    let mut rows = Vec::with_capacity(n);
    for qa_i in qa_pows {
        let row_weight = weight.mul(qa_i)?;
        let mut row = Vec::with_capacity(n);
        for qb_j in qb_pows {
            row.push(integrate(&row_weight.mul(qb_j)?));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// C0[i][j] = integral of B C core Qa^i Qb^j.
pub fn assemble_c0(config: &AmplifierConfig) -> Result<RationalMatrix> {
    config.validate()?;
    let f = Forms::build(config);
    let weight = f.b_factor.mul(&f.c_factor)?.mul(&f.core)?;
    let qa_pows = bracket_powers(&f.qa, config.degree)?;
    let qb_pows = bracket_powers(&f.qb, config.degree)?;
    weighted_matrix(&weight, &qa_pows, &qb_pows)
}

/// A polynomial of degree <= 2 in nu with SparsePoly coefficients; just
/// enough algebra to expand the t-integrated square symbolically in nu.
#[derive(Clone)]
struct NuQuadratic {
    c: [SparsePoly; 3],
}

impl NuQuadratic {
    fn linear(constant: SparsePoly) -> Self {
        // nu + constant
        NuQuadratic {
            c: [constant, SparsePoly::one(), SparsePoly::zero()],
        }
    }

    fn from_poly(p: SparsePoly) -> Self {
        NuQuadratic {
            c: [p, SparsePoly::zero(), SparsePoly::zero()],
        }
    }

    fn mul(&self, other: &NuQuadratic) -> Result<NuQuadratic> {
        let mut out = [SparsePoly::zero(), SparsePoly::zero(), SparsePoly::zero()];
        for i in 0..3 {
            for j in 0..3 {
                if self.c[i].is_zero() || other.c[j].is_zero() {
                    continue;
                }
                let prod = self.c[i].mul(&other.c[j])?;
                assert!(i + j < 3, "nu-degree overflow in square expansion");
                out[i + j] = out[i + j].add(&prod);
            }
        }
        Ok(NuQuadratic { c: out })
    }

    fn sub(&self, other: &NuQuadratic) -> NuQuadratic {
        NuQuadratic {
            c: [
                self.c[0].sub(&other.c[0]),
                self.c[1].sub(&other.c[1]),
                self.c[2].sub(&other.c[2]),
            ],
        }
    }

    fn add_poly(&self, p: &SparsePoly) -> NuQuadratic {
        let mut out = self.clone();
        out.c[0] = out.c[0].add(p);
        out
    }
}

/// The t-integrated square as a nu-quadratic with polynomial coefficients:
/// (nu - theta S)^2 - (nu - theta S)(B + C) + B^2/3 + C^2/3 + BC/2.
fn t_square_weights(f: &Forms, theta: &BigRational) -> Result<NuQuadratic> {
    let a = NuQuadratic::linear(f.s_sum.scale(theta).neg()); // nu - theta S
    let bc_sum = NuQuadratic::from_poly(f.b_factor.add(&f.c_factor));
    let third = big_rational(1, 3);
    let half = big_rational(1, 2);
    let tail = f
        .b_factor
        .mul(&f.b_factor)?
        .scale(&third)
        .add(&f.c_factor.mul(&f.c_factor)?.scale(&third))
        .add(&f.b_factor.mul(&f.c_factor)?.scale(&half));
    Ok(a.mul(&a)?.sub(&a.mul(&bc_sum)?).add_poly(&tail))
}

/// (K2, K1, K0) with c1(nu, b) = b^T (nu^2 K2 + nu K1 + K0) b.
pub fn assemble_c1(
    config: &AmplifierConfig,
) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
    config.validate()?;
    let f = Forms::build(config);
    let base = f.b_factor.mul(&f.c_factor)?.mul(&f.core)?;
    let square = t_square_weights(&f, &config.theta)?;
    let qa_pows = bracket_powers(&f.qa, config.degree)?;
    let qb_pows = bracket_powers(&f.qb, config.degree)?;
    let k2 = weighted_matrix(&square.c[2].mul(&base)?, &qa_pows, &qb_pows)?;
    let k1 = weighted_matrix(&square.c[1].mul(&base)?, &qa_pows, &qb_pows)?;
    let k0 = weighted_matrix(&square.c[0].mul(&base)?, &qa_pows, &qb_pows)?;
    Ok((k2, k1, k0))
}

/// Both functionals for one config, assembled exactly.
#[derive(Clone, Debug)]
pub struct GapFunctional {
    pub config: AmplifierConfig,
    pub c0: RationalMatrix,
    pub k2: RationalMatrix,
    pub k1: RationalMatrix,
    pub k0: RationalMatrix,
}

impl GapFunctional {
    pub fn assemble(config: AmplifierConfig) -> Result<Self> {
        let c0 = assemble_c0(&config)?;
        let (k2, k1, k0) = assemble_c1(&config)?;
        Ok(GapFunctional {
            config,
            c0,
            k2,
            k1,
            k0,
        })
    }

    pub fn order(&self) -> usize {
        self.config.degree + 1
    }

    /// Double-precision images of the four matrices (contraction with b
    /// happens in floating point; the rationals stay the source of truth).
    pub fn to_f64(&self) -> FunctionalF64 {
        FunctionalF64 {
            c0: matrix_to_f64(&self.c0),
            k2: matrix_to_f64(&self.k2),
            k1: matrix_to_f64(&self.k1),
            k0: matrix_to_f64(&self.k0),
        }
    }

    pub fn c0_value(&self, b: &[f64]) -> f64 {
        quad_form(&matrix_to_f64(&self.c0), b)
    }

    pub fn c1_value(&self, nu: f64, b: &[f64]) -> f64 {
        self.to_f64().c1_value(nu, b)
    }

    /// Evaluate the decision quantities at (b, nu), optionally against a
    /// candidate kappa.
    pub fn evaluate(&self, b: &[f64], nu: f64, kappa_input: Option<f64>) -> Result<BoundResult> {
        self.to_f64().evaluate(b, nu, kappa_input)
    }
}

/// Floating image of a GapFunctional; cheap to evaluate repeatedly.
#[derive(Clone, Debug)]
pub struct FunctionalF64 {
    pub c0: Vec<Vec<f64>>,
    pub k2: Vec<Vec<f64>>,
    pub k1: Vec<Vec<f64>>,
    pub k0: Vec<Vec<f64>>,
}

impl FunctionalF64 {
    pub fn order(&self) -> usize {
        self.c0.len()
    }

    /// Leading sub-block view for a smaller polynomial degree.
    pub fn truncate(&self, degree: usize) -> FunctionalF64 {
        let cut = |m: &Vec<Vec<f64>>| {
            m.iter()
                .take(degree + 1)
                .map(|r| r[..=degree].to_vec())
                .collect()
        };
        FunctionalF64 {
            c0: cut(&self.c0),
            k2: cut(&self.k2),
            k1: cut(&self.k1),
            k0: cut(&self.k0),
        }
    }

    pub fn c1_matrix(&self, nu: f64) -> Vec<Vec<f64>> {
        let n = self.order();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = nu * nu * self.k2[i][j] + nu * self.k1[i][j] + self.k0[i][j];
            }
        }
        m
    }

    pub fn c0_value(&self, b: &[f64]) -> f64 {
        quad_form(&self.c0, b)
    }

    pub fn c1_value(&self, nu: f64, b: &[f64]) -> f64 {
        nu * nu * quad_form(&self.k2, b) + nu * quad_form(&self.k1, b) + quad_form(&self.k0, b)
    }

    pub fn evaluate(&self, b: &[f64], nu: f64, kappa_input: Option<f64>) -> Result<BoundResult> {
        if b.iter().all(|&v| v == 0.0) {
            return Err(Error::InvalidAmplifier("coefficient vector is zero".into()));
        }
        let c0 = self.c0_value(b);
        let c1 = self.c1_value(nu, b);
        if c1 <= 0.0 {
            return Err(Error::NonPositiveC1(c1));
        }
        if c0 <= 0.0 {
            return Err(Error::NonPositiveC1(c0));
        }
        let kappa = (c0 / c1).sqrt();
        let h = kappa_input.map(|k| c0 / (k * k * c1));
        Ok(BoundResult {
            kappa,
            nu,
            coefficients: b.to_vec(),
            h,
            kappa_input,
            c0_value: c0,
            c1_value: c1,
        })
    }
}

/// One evaluation or optimization outcome. `kappa` is always the implied
/// value sqrt(c0/c1); `h` is defined only when a candidate kappa was given.
#[derive(Clone, Debug)]
pub struct BoundResult {
    pub kappa: f64,
    pub nu: f64,
    pub coefficients: Vec<f64>,
    pub h: Option<f64>,
    pub kappa_input: Option<f64>,
    pub c0_value: f64,
    pub c1_value: f64,
}

pub fn matrix_to_f64(m: &RationalMatrix) -> Vec<Vec<f64>> {
    m.iter()
        .map(|row| row.iter().map(rational_to_f64).collect())
        .collect()
}

pub fn quad_form(m: &[Vec<f64>], b: &[f64]) -> f64 {
    let n = m.len();
    assert_eq!(b.len(), n, "coefficient vector length mismatch");
    let mut total = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += m[i][j] * b[j];
        }
        total += b[i] * row;
    }
    total
}

/// The configuration behind the reported bound: theta = 1/4, r = 1, the
/// degree-4 coefficient vector below, nu = 1.2773, candidate kappa = 2.866.
pub const REFERENCE_COEFFS: [f64; 5] = [1.0, -10.8998, 28.9444, -22.1343, 0.6148];
pub const REFERENCE_NU: f64 = 1.2773;
pub const REFERENCE_KAPPA: f64 = 2.866;

pub fn reference_config() -> AmplifierConfig {
    AmplifierConfig::new(big_rational(1, 4), 1, 4, Some(REFERENCE_COEFFS.to_vec()))
        .expect("the reference configuration is valid")
}

/// Dimensionless shifts (A1, A2, A3, B1, B2, B3) of the six L-function
/// arguments, scaled by the log of the main parameter.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Shifts {
    pub a: [f64; 3],
    pub b: [f64; 3],
}

impl Shifts {
    pub fn swapped(&self) -> Shifts {
        Shifts {
            a: self.b,
            b: self.a,
        }
    }
}

/// (1 - e^{-w}) / w, continuously extended: phi(0) = 1. This is the exact
/// t-integral of w e^{-w t} over [0,1] divided by w, the shape in which the
/// shifted integrand absorbs its t1, t2 integrations.
pub fn phi(w: f64) -> f64 {
    if w == 0.0 {
        1.0
    } else {
        -f64::exp_m1(-w) / w
    }
}

/// Per-point state for evaluating the shifted integrand at many shift
/// vectors: everything shift-independent is computed once.
pub struct ShiftedPoint {
    pub weight: f64,   // B C core P(Qa) P(Qb)
    pub b_factor: f64, // 1 - theta (x1 + x3)
    pub c_factor: f64, // 1 - theta (x2 + x4)
    x: f64,
    pair_a: f64, // x1 + x2
    pair_b: f64, // x3 + x4
    x1: f64,
    x2: f64,
    x3: f64,
    x4: f64,
    theta: f64,
}

impl ShiftedPoint {
    pub fn new(config: &AmplifierConfig, coeffs: &[f64], p: &[f64; 5]) -> ShiftedPoint {
        let theta = config.theta_f64();
        let [x, x1, x2, x3, x4] = *p;
        let b_factor = 1.0 - theta * (x1 + x3);
        let c_factor = 1.0 - theta * (x2 + x4);
        let r = config.r;
        let core = x.powi((2 * r * r - 1) as i32) * (x1 * x2 * x3 * x4).powi((r - 1) as i32);
        let pa = horner(coeffs, 1.0 - x - x1 - x2);
        let pb = horner(coeffs, 1.0 - x - x3 - x4);
        ShiftedPoint {
            weight: b_factor * c_factor * core * pa * pb,
            b_factor,
            c_factor,
            x,
            pair_a: x1 + x2,
            pair_b: x3 + x4,
            x1,
            x2,
            x3,
            x4,
            theta,
        }
    }

    /// Integrand value at this point for one shift vector.
    pub fn value(&self, s: &Shifts) -> f64 {
        let [a1, a2, a3] = s.a;
        let [b1, b2, b3] = s.b;
        let lin = (a3 + b3) * self.x
            + a3 * self.pair_a
            + b3 * self.pair_b
            + b1 * self.x1
            + b2 * self.x2
            + a1 * self.x3
            + a2 * self.x4;
        (-self.theta * lin).exp()
            * phi((a1 + b1) * self.b_factor)
            * phi((a2 + b2) * self.c_factor)
            * self.weight
    }
}

pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// The conjectural limit of the analogous ratio when the k-th moment of the
/// Riemann zeta function is emulated instead: (4k^2 - 1) / (4k^4).
pub fn hall_conjecture_ratio(k: u64) -> BigRational {
    assert!(k >= 1, "k must be positive");
    let k = k as i64;
    big_rational(4 * k * k - 1, 4 * k * k * k * k)
}

/// Leading term of the amplified mean square at height T: c0(b) times the
/// arithmetic factor and the normalization powers, sharp-window convention
/// (smoothing transform normalized to 1 at 0).
pub fn mean_square_main_term(
    t: f64,
    field: &crate::field::FieldParams,
    config: &AmplifierConfig,
    b: &[f64],
    a_value: f64,
) -> Result<f64> {
    config.validate()?;
    if b.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidAmplifier("coefficient vector is zero".into()));
    }
    let stats = field.density_stats(t)?;
    let l_norm = stats.l_norm;
    let r = config.r;
    let power = 2 * r * r + 4 * r;
    let c0 = GapFunctional::assemble(config.clone())?.c0_value(b);
    let fact = |n: u32| (1..=n.max(1)).map(f64::from).product::<f64>();
    let denom = fact(2 * r * r - 1) * fact(r - 1).powi(4);
    Ok(
        c0 * a_value * (config.theta_f64() * l_norm).powi(power as i32) * l_norm * l_norm * t
            / denom,
    )
}
