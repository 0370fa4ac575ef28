//! Sparse exact-rational polynomials in the five region variables
//! (x, x1, x2, x3, x4).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const NVARS: usize = 5;

/// Assembly guard: no intermediate polynomial may exceed this total degree.
/// r <= 3 with deg P <= 12 stays far below; the guard catches runaway expansion.
pub const MAX_TOTAL_DEGREE: u32 = 64;

/// Exponent tuple (a, b, c, d, e) for x^a x1^b x2^c x3^d x4^e.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Monomial {
        let mut e = [0u16; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut e = [0u16; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        let m = Monomial(e);
        let degree = m.total_degree();
        if degree > MAX_TOTAL_DEGREE {
            return Err(Error::DegreeOverflow {
                degree,
                max: MAX_TOTAL_DEGREE,
            });
        }
        Ok(m)
    }
}

// Graded lexicographic order: total degree first, then exponents. Fixing one
// canonical order makes every term iteration (and thus every report built
// from one) deterministic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Term map with exact rational coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = SparsePoly::default();
        p.add_term(Monomial::ONE, c);
        p
    }

    /// The i-th variable as a polynomial (0 -> x, 1..4 -> x1..x4).
    pub fn var(i: usize) -> Self {
        SparsePoly::from_term(Monomial::var(i), BigRational::one())
    }

    pub fn from_term(m: Monomial, c: BigRational) -> Self {
        let mut p = SparsePoly::default();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, s: &BigRational) -> SparsePoly {
        if s.is_zero() {
            return SparsePoly::zero();
        }
        let mut out = SparsePoly::default();
        for (m, c) in &self.terms {
            out.terms.insert(*m, c * s);
        }
        out
    }

    /// Exact product; fails if any term would exceed the degree guard.
    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        let mut out = SparsePoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<SparsePoly> {
        let mut out = SparsePoly::one();
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..NVARS {
                for _ in 0..m.0[i] {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    pub fn eval_f64(&self, point: &[f64; NVARS]) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut v = rational_to_f64(c);
            for i in 0..NVARS {
                v *= point[i].powi(i32::from(m.0[i]));
            }
            total += v;
        }
        total
    }
}

/// Product of an arbitrary factor list. Linear forms like (1 - x - x1 - x2)
/// are ordinary inputs; an overlong product trips the degree guard.
pub fn expand_product(factors: &[SparsePoly]) -> Result<SparsePoly> {
    let mut out = SparsePoly::one();
    for f in factors {
        out = out.mul(f)?;
    }
    Ok(out)
}

/// Nearest double. Large numerators/denominators are handled by the bigint
/// conversion, so ratios of factorials stay representable.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fallback for extreme magnitudes: scale both parts down together.
        let n = q.numer().to_f64().unwrap_or(if q.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn big_rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}
