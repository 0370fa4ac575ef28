//! Exact assembly, evaluation, and optimization of the quadratic forms that
//! certify large gaps between consecutive critical-line zeros of Dedekind
//! zeta functions of quadratic number fields.
//!
//! The zeta function of a quadratic field factors as zeta(s) L(s, chi_D), and
//! the gap machinery reduces to two quadratic forms in the amplifier
//! coefficients: `c0` (the amplified mean square) and `c1(nu)` (the same mean
//! square twisted by a short shift average). A candidate gap multiplier kappa
//! is certified when h = c0 / (kappa^2 c1) exceeds 1, and the best implied
//! multiplier is sqrt(c0 / c1). Both forms are five-fold moment integrals
//! over a product of two simplex conditions; [`region`] integrates monomials
//! there in closed form, [`functional`] assembles the forms exactly over the
//! rationals, [`eigen`] turns them into generalized eigenproblems and
//! optimizes, and [`mc`] re-derives everything by Monte Carlo as an
//! independent check. [`field`] supplies the arithmetic of the character
//! chi_D: L-values, splitting data, and the Euler-product constant that
//! scales the mean square.
//!
//! Start with [`functional::reference_config`] and [`eigen::optimize`], or
//! run the `zeta-gaps` binary; each subcommand maps onto one library entry
//! point and every example in `examples/` is a complete workflow.

pub mod cli;
pub mod eigen;
pub mod error;
pub mod field;
pub mod functional;
pub mod mc;
pub mod oracle;
pub mod poly;
pub mod region;
pub mod report;

pub use error::{Error, Result};
pub use functional::{AmplifierConfig, BoundResult, GapFunctional};
