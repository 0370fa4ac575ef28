//! Maximizing kappa(nu, b) = sqrt(b'C0b / b'C1(nu)b): for fixed nu this is a
//! generalized symmetric eigenproblem, solved globally by Cholesky reduction
//! plus a cyclic Jacobi sweep; the outer nu search is a coarse grid with
//! golden-section refinement.

use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functional::{AmplifierConfig, BoundResult, FunctionalF64, GapFunctional};

const MAX_ORDER: usize = 64;
const JACOBI_SWEEP_CAP: usize = 64;
const RESIDUAL_SCALE: f64 = 1e-10;

/// Dense symmetric matrix; symmetry is checked on construction and the
/// stored entries are the symmetrized averages.
#[derive(Clone, Debug)]
pub struct SymMatrix {
    n: usize,
    a: Vec<Vec<f64>>,
}

impl SymMatrix {
    pub fn new(entries: Vec<Vec<f64>>) -> Result<SymMatrix> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::NotSymmetric);
        }
        if n > MAX_ORDER {
            return Err(Error::MatrixTooLarge(n, MAX_ORDER));
        }
        let scale: f64 = entries
            .iter()
            .flatten()
            .fold(0.0f64, |acc, &v| acc.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                if !entries[i][j].is_finite()
                    || (entries[i][j] - entries[j][i]).abs() > 1e-12 * scale
                {
                    return Err(Error::NotSymmetric);
                }
                a[i][j] = 0.5 * (entries[i][j] + entries[j][i]);
            }
        }
        Ok(SymMatrix { n, a })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.a[i][j]
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        self.a.iter().map(|row| dot(row, x)).collect()
    }

    pub fn frobenius(&self) -> f64 {
        self.a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Lower-triangular L with L L' = A.
    pub fn cholesky(&self) -> Result<Vec<Vec<f64>>> {
        let n = self.n;
        let mut l = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
                if i == j {
                    let pivot = self.a[i][i] - s;
                    if !(pivot > 0.0) {
                        return Err(Error::NotPositiveDefinite);
                    }
                    l[i][j] = pivot.sqrt();
                } else {
                    l[i][j] = (self.a[i][j] - s) / l[j][j];
                }
            }
        }
        Ok(l)
    }

    /// All eigenvalues and eigenvectors by cyclic Jacobi rotations.
    /// Returned as (values, vectors) with vectors[k] the unit eigenvector
    /// for values[k]; no ordering guarantee.
    pub fn jacobi(&self) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut v = vec![vec![0.0; n]; n];
        for (i, row) in v.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        let norm = self.frobenius().max(f64::MIN_POSITIVE);
        for _ in 0..JACOBI_SWEEP_CAP {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| a[i][j] * a[i][j])
                .sum();
            if off.sqrt() <= 1e-15 * norm {
                let values = (0..n).map(|i| a[i][i]).collect();
                let vectors = (0..n).map(|k| (0..n).map(|i| v[i][k]).collect()).collect();
                return Ok((values, vectors));
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    if a[p][q] == 0.0 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    for row in v.iter_mut() {
                        let (vp, vq) = (row[p], row[q]);
                        row[p] = c * vp - s * vq;
                        row[q] = s * vp + c * vq;
                    }
                }
            }
        }
        Err(Error::NoConvergence)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solve L y = rhs for lower-triangular L.
fn forward_solve(l: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut y = vec![0.0; n];
    for i in 0..n {
        y[i] = (rhs[i] - dot(&l[i][..i], &y[..i])) / l[i][i];
    }
    y
}

/// Solve L' x = rhs for lower-triangular L.
fn backward_solve(l: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| l[k][i] * x[k]).sum();
        x[i] = (rhs[i] - s) / l[i][i];
    }
    x
}

/// Largest lambda with C0 b = lambda C1 b, and its eigenvector (unit norm).
/// C1 must be positive definite; the solve is rejected unless the residual
/// satisfies |C0 b - lambda C1 b| <= 1e-10 |C0|_F |b|.
pub fn rayleigh_max(c0: &SymMatrix, c1: &SymMatrix) -> Result<(f64, Vec<f64>)> {
    assert_eq!(c0.order(), c1.order(), "matrix orders differ");
    let n = c0.order();
    let l = c1.cholesky()?;
    // M = L^{-1} C0 L^{-T}, formed column by column and symmetrized.
    let mut half = Vec::with_capacity(n); // L^{-1} C0 (by columns)
    for j in 0..n {
        let col: Vec<f64> = (0..n).map(|i| c0.entry(i, j)).collect();
        half.push(forward_solve(&l, &col));
    }
    // column j of M = L^{-1} (row j of half-transpose) = forward_solve over rows
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        let row: Vec<f64> = (0..n).map(|j| half[j][i]).collect();
        let sol = forward_solve(&l, &row);
        m[i].copy_from_slice(&sol);
    }
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (m[i][j] + m[j][i]);
            m[i][j] = avg;
            m[j][i] = avg;
        }
    }
    let (values, vectors) = SymMatrix::new(m)?.jacobi()?;
    let best = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("nonempty spectrum");
    let lambda = values[best];
    let mut b = backward_solve(&l, &vectors[best]);
    let scale = norm2(&b);
    for v in &mut b {
        *v /= scale;
    }
    let mut residual = c0.matvec(&b);
    let c1b = c1.matvec(&b);
    for i in 0..n {
        residual[i] -= lambda * c1b[i];
    }
    let bound = RESIDUAL_SCALE * c0.frobenius() * norm2(&b);
    if norm2(&residual) > bound {
        return Err(Error::ResidualTooLarge {
            residual: norm2(&residual),
            bound,
        });
    }
    Ok((lambda, b))
}

/// Best kappa at fixed nu, with the optimizing coefficient vector
/// normalized to constant term 1 (largest-magnitude entry 1 when the
/// constant term is degenerate).
pub fn kappa_of_nu(f: &FunctionalF64, nu: f64) -> Result<(f64, Vec<f64>)> {
    let c0 = SymMatrix::new(f.c0.clone())?;
    let c1 = SymMatrix::new(f.c1_matrix(nu))?;
    let (lambda, mut b) = rayleigh_max(&c0, &c1)?;
    let pivot = if b[0].abs() < 1e-8 {
        b.iter()
            .copied()
            .max_by(|x, y| x.abs().total_cmp(&y.abs()))
            .unwrap()
    } else {
        b[0]
    };
    for v in &mut b {
        *v /= pivot;
    }
    Ok((lambda.sqrt(), b))
}

fn check_interval(nu_range: (f64, f64)) -> Result<()> {
    let (lo, hi) = nu_range;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidInterval(lo, hi));
    }
    Ok(())
}

const GRID_STEP: f64 = 0.05;

/// Maximize kappa over nu in nu_range: 0.05-step grid, then golden-section
/// refinement around the best grid point down to nu_tol.
pub fn optimize(f: &FunctionalF64, nu_range: (f64, f64), nu_tol: f64) -> Result<BoundResult> {
    check_interval(nu_range)?;
    if !(nu_tol > 0.0) {
        return Err(Error::InvalidStep(nu_tol));
    }
    let (lo, hi) = nu_range;
    let steps = ((hi - lo) / GRID_STEP).ceil() as usize;
    let mut best = (lo, kappa_of_nu(f, lo)?.0);
    for k in 1..=steps {
        let nu = (lo + k as f64 * GRID_STEP).min(hi);
        let (kappa, _) = kappa_of_nu(f, nu)?;
        if kappa > best.1 {
            best = (nu, kappa);
        }
    }
    let mut a = (best.0 - GRID_STEP).max(lo);
    let mut b = (best.0 + GRID_STEP).min(hi);
    let ratio = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - ratio * (b - a);
    let mut x2 = a + ratio * (b - a);
    let mut f1 = kappa_of_nu(f, x1)?.0;
    let mut f2 = kappa_of_nu(f, x2)?.0;
    while b - a > nu_tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = kappa_of_nu(f, x2)?.0;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = kappa_of_nu(f, x1)?.0;
        }
    }
    let nu = 0.5 * (a + b);
    let (kappa, coefficients) = kappa_of_nu(f, nu)?;
    Ok(BoundResult {
        kappa,
        nu,
        c0_value: f.c0_value(&coefficients),
        c1_value: f.c1_value(nu, &coefficients),
        coefficients,
        h: None,
        kappa_input: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub nu: f64,
    pub kappa: f64,
}

/// kappa(nu) sampled on a uniform grid, b re-optimized at every point.
pub fn kappa_curve(f: &FunctionalF64, nu_range: (f64, f64), step: f64) -> Result<Vec<CurvePoint>> {
    check_interval(nu_range)?;
    if !(step > 0.0) {
        return Err(Error::InvalidStep(step));
    }
    let (lo, hi) = nu_range;
    // The 1e-9 slack keeps a grid whose step exactly divides the range from
    // losing its endpoint to rounding.
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    let mut points = Vec::with_capacity(count + 1);
    for k in 0..=count {
        let nu = lo + k as f64 * step;
        points.push(CurvePoint {
            nu,
            kappa: kappa_of_nu(f, nu)?.0,
        });
    }
    Ok(points)
}

/// One row of a parameter scan. Failures are recorded, not propagated, so
/// one bad combination cannot abort the rest of the table.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub theta: BigRational,
    pub r: u32,
    pub degree: usize,
    pub outcome: std::result::Result<BoundResult, String>,
}

/// Cartesian scan in input order over theta x r x degree. For each (theta, r)
/// the functional is assembled once at the largest requested degree; smaller
/// degrees reuse its leading sub-blocks (the matrices are nested).
pub fn scan(
    thetas: &[BigRational],
    rs: &[u32],
    degrees: &[usize],
    nu_range: (f64, f64),
    nu_tol: f64,
) -> Vec<ScanRow> {
    scan_with(thetas, rs, degrees, nu_range, nu_tol, |_| {})
}

/// `scan` with a callback invoked after each finished row, in row order.
pub fn scan_with(
    thetas: &[BigRational],
    rs: &[u32],
    degrees: &[usize],
    nu_range: (f64, f64),
    nu_tol: f64,
    mut on_row: impl FnMut(&ScanRow),
) -> Vec<ScanRow> {
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let groups: Vec<(BigRational, u32, std::result::Result<FunctionalF64, String>)> = thetas
        .iter()
        .flat_map(|theta| rs.iter().map(move |&r| (theta.clone(), r)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(theta, r)| {
            let assembled = AmplifierConfig::new(theta.clone(), r, max_degree, None)
                .and_then(GapFunctional::assemble)
                .map(|g| g.to_f64())
                .map_err(|e| e.to_string());
            (theta, r, assembled)
        })
        .collect();
    let mut rows = Vec::new();
    for (theta, r, assembled) in &groups {
        for &degree in degrees {
            let outcome = match assembled {
                Err(message) => Err(message.clone()),
                Ok(full) => {
                    optimize(&full.truncate(degree), nu_range, nu_tol).map_err(|e| e.to_string())
                }
            };
            rows.push(ScanRow {
                theta: theta.clone(),
                r: *r,
                degree,
                outcome,
            });
            on_row(rows.last().expect("row just pushed"));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::big_rational as q;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::sync::OnceLock;

    fn reference_functional() -> &'static FunctionalF64 {
        static CELL: OnceLock<FunctionalF64> = OnceLock::new();
        CELL.get_or_init(|| {
            let config = AmplifierConfig::new(q(1, 4), 1, 4, None).unwrap();
            GapFunctional::assemble(config).unwrap().to_f64()
        })
    }

    fn identity(n: usize) -> SymMatrix {
        let mut a = vec![vec![0.0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        SymMatrix::new(a).unwrap()
    }

    #[test]
    fn identical_forms_give_lambda_one() {
        let (lambda, b) = rayleigh_max(&identity(3), &identity(3)).unwrap();
        assert!((lambda - 1.0).abs() < 1e-12);
        assert!((norm2(&b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_case() {
        let c0 = SymMatrix::new(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (lambda, b) = rayleigh_max(&c0, &identity(2)).unwrap();
        assert!((lambda - 2.0).abs() < 1e-12);
        assert!((b[0].abs() - 1.0).abs() < 1e-10 && b[1].abs() < 1e-10);
    }

    fn random_pd(rng: &mut ChaCha8Rng, n: usize, shift: f64) -> SymMatrix {
        let g: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .collect();
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                a[i][j] = (0..n).map(|k| g[k][i] * g[k][j]).sum::<f64>()
                    + if i == j { shift } else { 0.0 };
            }
        }
        SymMatrix::new(a).unwrap()
    }

    #[test]
    fn random_search_never_beats_the_eigenvalue() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c0 = random_pd(&mut rng, 4, 0.0);
        let c1 = random_pd(&mut rng, 4, 0.5);
        let (lambda, v) = rayleigh_max(&c0, &c1).unwrap();
        let quotient = |x: &[f64]| dot(x, &c0.matvec(x)) / dot(x, &c1.matvec(x));
        for _ in 0..200_000 {
            let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
            if norm2(&x) < 1e-3 {
                continue;
            }
            assert!(quotient(&x) <= lambda * (1.0 + 1e-12));
        }
        // Perturbing the maximizer only lowers the quotient, and only at
        // second order in the perturbation.
        for _ in 0..500 {
            let x: Vec<f64> = v
                .iter()
                .map(|&vi| vi + 1e-3 * rng.gen_range(-1.0..1.0))
                .collect();
            let q = quotient(&x);
            assert!(q <= lambda * (1.0 + 1e-12), "{q} above {lambda}");
            assert!(q >= lambda * (1.0 - 1e-4), "{q} too far below {lambda}");
        }
    }

    #[test]
    fn jacobi_recovers_a_known_spectrum() {
        // Eigenvalues of [[2,1,0],[1,2,1],[0,1,2]] are 2 and 2 +- sqrt(2).
        let a = SymMatrix::new(vec![
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0],
            vec![0.0, 1.0, 2.0],
        ])
        .unwrap();
        let (values, vectors) = a.jacobi().unwrap();
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        let expect = [2.0 - 2.0f64.sqrt(), 2.0, 2.0 + 2.0f64.sqrt()];
        for (v, e) in sorted.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }
        for (lambda, vec) in values.iter().zip(&vectors) {
            let av = a.matvec(vec);
            for i in 0..3 {
                assert!((av[i] - lambda * vec[i]).abs() < 1e-12);
            }
            assert!((norm2(vec) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn construction_guards() {
        assert!(matches!(
            SymMatrix::new(vec![vec![1.0, 2.0], vec![0.0, 1.0]]),
            Err(Error::NotSymmetric)
        ));
        assert!(matches!(
            SymMatrix::new(vec![vec![0.0; 65]; 65]),
            Err(Error::MatrixTooLarge(65, 64))
        ));
        let indefinite = SymMatrix::new(vec![vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap();
        assert!(matches!(
            indefinite.cholesky(),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn trivial_amplifier_curve_is_the_closed_form() {
        // kappa(nu)^2 = 1 / (nu^2 - 2 nu + 7/6) at theta = 0, r = 1, d = 0.
        let config = AmplifierConfig::new(q(0, 1), 1, 0, None).unwrap();
        let f = GapFunctional::assemble(config).unwrap().to_f64();
        for nu in [0.0, 0.3, 1.0, 1.7, 2.5] {
            let (kappa, b) = kappa_of_nu(&f, nu).unwrap();
            let expect = (1.0 / (nu * nu - 2.0 * nu + 7.0 / 6.0)).sqrt();
            assert!((kappa - expect).abs() < 1e-12, "nu={nu}");
            assert_eq!(b, vec![1.0]);
        }
        let (kappa, _) = kappa_of_nu(&f, 1.0).unwrap();
        assert!((kappa - 6.0f64.sqrt()).abs() < 1e-12);
        let (kappa0, _) = kappa_of_nu(&f, 0.0).unwrap();
        assert!((kappa0 - (6.0f64 / 7.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn optimizer_finds_the_closed_form_maximum() {
        let config = AmplifierConfig::new(q(0, 1), 1, 0, None).unwrap();
        let f = GapFunctional::assemble(config).unwrap().to_f64();
        let best = optimize(&f, (0.0, 4.0), 1e-6).unwrap();
        assert!((best.nu - 1.0).abs() < 1e-3);
        assert!((best.kappa - 6.0f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn reference_point_beats_the_reported_bound() {
        let f = reference_functional();
        let (kappa, _) = kappa_of_nu(f, 1.2773).unwrap();
        assert!(kappa > 2.866, "{kappa}");
        let best = optimize(f, (0.5, 2.0), 1e-6).unwrap();
        assert!(best.kappa >= kappa - 1e-12);
        assert!((best.nu - 1.28).abs() < 0.05, "nu* = {}", best.nu);
    }

    #[test]
    fn optimum_dominates_grid_queries() {
        let f = reference_functional();
        let best = optimize(f, (0.8, 1.8), 1e-6).unwrap();
        for nu in [0.8, 1.0, 1.2773, 1.5, 1.8] {
            assert!(best.kappa >= kappa_of_nu(f, nu).unwrap().0 - 1e-12);
        }
    }

    #[test]
    fn kappa_is_continuous_in_nu() {
        let f = reference_functional();
        for point in kappa_curve(f, (0.6, 2.0), 0.1).unwrap() {
            let (bumped, _) = kappa_of_nu(f, point.nu + 1e-6).unwrap();
            assert!((bumped - point.kappa).abs() <= 1e-3);
        }
    }

    #[test]
    fn normalization_does_not_move_kappa() {
        let f = reference_functional();
        let (kappa, b) = kappa_of_nu(f, 1.2773).unwrap();
        let ratio = |v: &[f64]| (f.c0_value(v) / f.c1_value(1.2773, v)).sqrt();
        // Rescaling the vector leaves the quotient fixed up to roundoff
        // amplified by the cancellation inside the forms (terms of order
        // 1e-1 summing to 5e-5).
        let scaled: Vec<f64> = b.iter().map(|v| v * -3.7).collect();
        assert!(
            (ratio(&b) - ratio(&scaled)).abs() < 1e-10 * kappa,
            "{} vs {}",
            ratio(&b),
            ratio(&scaled)
        );
        // The eigenvalue route and the direct quotient at the returned
        // vector agree to solver accuracy, which is looser than roundoff.
        assert!(
            (kappa - ratio(&b)).abs() < 1e-9 * kappa,
            "{kappa} vs {}",
            ratio(&b)
        );
        assert_eq!(b[0], 1.0);
    }

    #[test]
    fn scan_rows_cover_the_product_in_order() {
        let rows = scan(&[q(0, 1), q(1, 4)], &[1], &[0, 1], (0.5, 1.5), 1e-4);
        assert_eq!(rows.len(), 4);
        assert_eq!(
            rows.iter()
                .map(|r| (r.theta.clone(), r.degree))
                .collect::<Vec<_>>(),
            vec![(q(0, 1), 0), (q(0, 1), 1), (q(1, 4), 0), (q(1, 4), 1)]
        );
        // Degenerate scan row equals a direct optimize call.
        let config = AmplifierConfig::new(q(1, 4), 1, 1, None).unwrap();
        let f = GapFunctional::assemble(config).unwrap().to_f64();
        let direct = optimize(&f, (0.5, 1.5), 1e-4).unwrap();
        let row = rows[3].outcome.as_ref().unwrap();
        assert!((row.kappa - direct.kappa).abs() < 1e-10);
    }

    #[test]
    fn kappa_grows_with_degree() {
        let rows = scan(&[q(1, 4)], &[1], &[0, 1, 2, 3, 4], (0.5, 2.0), 1e-6);
        let kappas: Vec<f64> = rows
            .iter()
            .map(|r| r.outcome.as_ref().unwrap().kappa)
            .collect();
        for pair in kappas.windows(2) {
            assert!(pair[1] >= pair[0] - 1e-9, "{kappas:?}");
        }
    }
}
