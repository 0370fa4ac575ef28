//! Exact integration over the region
//! R = {0 <= x, x1..x4 <= 1,  x + x1 + x2 <= 1,  x + x3 + x4 <= 1}.
//!
//! For fixed x the two pairs (x1, x2) and (x3, x4) range over independent
//! triangles of side 1 - x, so a monomial integral reduces to two Beta-type
//! triangle factors and one outer Beta integral in x:
//!
//!   integral x^a x1^b x2^c x3^d x4^e dV
//!     = [b! c! / (b+c+2)!] [d! e! / (d+e+2)!] [a! (b+c+d+e+4)! / (a+b+c+d+e+5)!]

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Monomial, SparsePoly};

const FACT_TABLE: usize = 2 * crate::poly::MAX_TOTAL_DEGREE as usize + 8;

fn factorial(n: u32) -> BigInt {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(FACT_TABLE);
        t.push(BigInt::one());
        for k in 1..FACT_TABLE {
            let prev = t[k - 1].clone();
            t.push(prev * k);
        }
        t
    });
    let n = n as usize;
    if n < table.len() {
        table[n].clone()
    } else {
        let mut v = table[table.len() - 1].clone();
        for k in table.len()..=n {
            v *= k;
        }
        v
    }
}

/// Exact value of the monomial integral over R by the closed form above.
pub fn monomial_region_integral(m: &Monomial) -> BigRational {
    let [a, b, c, d, e] = m.0.map(u32::from);
    let tri = |u: u32, v: u32| BigRational::new(factorial(u) * factorial(v), factorial(u + v + 2));
    let outer = BigRational::new(
        factorial(a) * factorial(b + c + d + e + 4),
        factorial(a + b + c + d + e + 5),
    );
    tri(b, c) * tri(d, e) * outer
}

/// Linear extension to polynomials: sum of coefficient times monomial value.
pub fn integrate(p: &SparsePoly) -> BigRational {
    let mut total = BigRational::zero();
    for (m, c) in p.terms() {
        total += c * monomial_region_integral(m);
    }
    total
}
