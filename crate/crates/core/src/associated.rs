//! kth associated polynomials and measures.
//!
//! The kth associated system runs the Szegő recurrences with the shifted
//! coefficients `a_{n+k}`. Its measure `sigma_k` is the one whose Schur
//! function is the kth Schur iterate `f_k`, and its Carathéodory function is
//!
//! ```text
//! F_k = [F (Phi_k + Phi*_k) + Psi_k - Psi*_k] / [F (Phi_k - Phi*_k) + Psi_k + Psi*_k].
//! ```
//!
//! Numerator and denominator both vanish to order exactly `k` at the origin;
//! the common factor `z^k` is removed before dividing.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{OpucError, Result};
use crate::opuc::{reflection_from_moments, OpucFamily, ReflectionCoeffs};
use crate::schur::{schur_parameters, schur_run, wall_polynomials, wall_sequence, SchurParams};
use crate::series::{circle_grid, Poly, Series, Z_DIV_TOL};
use crate::transforms::{
    caratheodory_from_coefficients, caratheodory_to_schur, extreme_point_report, measure_moments,
    moments_to_caratheodory, CaratheodoryFn, ExtremeVerdict, MeasureSpec, SchurSource,
};

/// Polynomials of the kth associated system up to degree `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociatedSystem {
    pub k: usize,
    pub base: ReflectionCoeffs,
    pub family: OpucFamily,
}

/// Runs the recurrences with `a_{n+k}`; needs `k + n <= a.len()`.
pub fn associated_polynomials(
    a: &ReflectionCoeffs,
    k: usize,
    n: usize,
) -> Result<AssociatedSystem> {
    if k + n > a.len() {
        return Err(OpucError::IndexOutOfRange {
            index: k + n,
            len: a.len(),
        });
    }
    Ok(AssociatedSystem {
        k,
        base: a.clone(),
        family: OpucFamily::from_coefficients(&a.as_slice()[k..], n),
    })
}

fn check_k(a: &ReflectionCoeffs, k: usize) -> Result<()> {
    if k > a.len() {
        return Err(OpucError::IndexOutOfRange {
            index: k,
            len: a.len(),
        });
    }
    Ok(())
}

/// `F_k` as a truncated series of length `F.len() - k`.
pub fn associated_caratheodory(
    big_f: &CaratheodoryFn,
    a: &ReflectionCoeffs,
    k: usize,
) -> Result<CaratheodoryFn> {
    check_k(a, k)?;
    let len = big_f.len();
    if len <= k {
        return Err(OpucError::SeriesExhausted {
            needed: k + 1,
            available: len,
        });
    }
    let family = OpucFamily::from_coefficients(a.as_slice(), k);
    let d = family.degree(k);
    let f = big_f.taylor();
    let num = &f.mul_poly(&(&d.phi + &d.phi_star)) + &(&d.psi - &d.psi_star).to_series(len);
    let den = &f.mul_poly(&(&d.phi - &d.phi_star)) + &(&d.psi + &d.psi_star).to_series(len);
    let quotient = num.div_z_pow(k)?.div(&den.div_z_pow(k)?)?;
    CaratheodoryFn::new(quotient)
}

/// `c_0 ..= c_count` of `sigma_k`.
pub fn associated_moments(
    big_f: &CaratheodoryFn,
    a: &ReflectionCoeffs,
    k: usize,
    count: usize,
) -> Result<Vec<Complex64>> {
    let fk = associated_caratheodory(big_f, a, k)?;
    if fk.len() < count + 1 {
        return Err(OpucError::SeriesExhausted {
            needed: count + 1,
            available: fk.len(),
        });
    }
    let mut c = fk.moments();
    c.truncate(count + 1);
    Ok(c)
}

/// Reflection coefficients of `sigma_k` against the shifted originals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftReport {
    pub k: usize,
    /// `a_{j+k}(sigma)` for `j <= n`, from the moments of `F`.
    pub shifted: Vec<Complex64>,
    /// `gamma_j(f_k)` for `j <= n`, through `F_k -> f_k -> Schur`.
    pub associated: Vec<Complex64>,
    pub max_deviation: f64,
}

/// Compares `a_j(sigma_k)` with `a_{j+k}(sigma)` for `j <= n`. `F` needs at
/// least `n + k + 3` terms.
pub fn shift_property_check(big_f: &CaratheodoryFn, k: usize, n: usize) -> Result<ShiftReport> {
    let needed = n + k + 3;
    if big_f.len() < needed {
        return Err(OpucError::SeriesExhausted {
            needed,
            available: big_f.len(),
        });
    }
    let a = reflection_from_moments(&big_f.moments(), n + k + 1)?;
    let fk = associated_caratheodory(big_f, &a, k)?;
    let gk = schur_parameters(&caratheodory_to_schur(&fk)?, n + 1)?;
    if gk.len() < n + 1 {
        return Err(OpucError::UnimodularParameter {
            index: gk.len(),
            modulus: gk.termination().map_or(1.0, |t| t.value.norm()),
        });
    }
    let shifted = a.as_slice()[k..=k + n].to_vec();
    let associated = gk.gammas().to_vec();
    let max_deviation = max_pairwise(&shifted, &associated);
    Ok(ShiftReport {
        k,
        shifted,
        associated,
        max_deviation,
    })
}

/// [`shift_property_check`] on the exact moments `c_0 ..= c_count` of a measure.
pub fn shift_property_check_measure(
    mu: &MeasureSpec,
    k: usize,
    n: usize,
    count: usize,
) -> Result<ShiftReport> {
    let big_f = moments_to_caratheodory(&measure_moments(mu, count)?)?;
    shift_property_check(&big_f, k, n)
}

fn max_pairwise(x: &[Complex64], y: &[Complex64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(p, q)| (p - q).norm())
        .fold(0.0, f64::max)
}

/// Entrywise residual of
///
/// ```text
/// 2 z^k prod_{j<k}(1-|a_j|^2) [Phi^(k)_n  Psi^(k)_n; Phi^(k)*_n  -Psi^(k)*_n]
///   = [Phi_{n+k}  Psi_{n+k}; Phi*_{n+k}  -Psi*_{n+k}]
///     [Psi*_k + Psi_k  Psi*_k - Psi_k; Phi*_k - Phi_k  Phi*_k + Phi_k]
/// ```
///
/// over the grid.
pub fn theorem14_residual(
    a: &ReflectionCoeffs,
    k: usize,
    n: usize,
    grid: &[Complex64],
) -> Result<f64> {
    let assoc = associated_polynomials(a, k, n)?;
    let base = OpucFamily::from_coefficients(a.as_slice(), n + k);
    let weight: f64 = a.as_slice()[..k]
        .iter()
        .map(|v| 1.0 - v.norm_sqr())
        .product();
    let (dk, dnk, an) = (base.degree(k), base.degree(n + k), assoc.family.degree(n));
    let mut worst = 0.0f64;
    for &z in grid {
        let s = z.powu(k as u32) * 2.0 * weight;
        let lhs = [
            [s * an.phi.eval(z), s * an.psi.eval(z)],
            [s * an.phi_star.eval(z), -s * an.psi_star.eval(z)],
        ];
        let left = [
            [dnk.phi.eval(z), dnk.psi.eval(z)],
            [dnk.phi_star.eval(z), -dnk.psi_star.eval(z)],
        ];
        let (phik, phik_s, psik, psik_s) = (
            dk.phi.eval(z),
            dk.phi_star.eval(z),
            dk.psi.eval(z),
            dk.psi_star.eval(z),
        );
        let right = [
            [psik_s + psik, psik_s - psik],
            [phik_s - phik, phik_s + phik],
        ];
        for i in 0..2 {
            for j in 0..2 {
                let rhs = left[i][0] * right[0][j] + left[i][1] * right[1][j];
                worst = worst.max((lhs[i][j] - rhs).norm());
            }
        }
    }
    Ok(worst)
}

/// Schur parameters against Levinson reflection coefficients, and the
/// closed-form iterates `f_n = (F Phi*_n - Psi*_n) / (z (F Phi_n + Psi_n))`
/// against the iterates of Schur's algorithm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeronimusReport {
    pub gammas: Vec<Complex64>,
    pub levinson: Vec<Complex64>,
    pub max_coefficient_deviation: f64,
    pub max_iterate_deviation: f64,
}

/// Needs `depth + 1 < F.len()`.
pub fn geronimus_check(big_f: &CaratheodoryFn, depth: usize) -> Result<GeronimusReport> {
    let f = caratheodory_to_schur(big_f)?;
    let (params, iterates) = schur_run(&f, depth)?;
    if params.len() < depth {
        return Err(OpucError::UnimodularParameter {
            index: params.len(),
            modulus: params.termination().map_or(1.0, |t| t.value.norm()),
        });
    }
    let a = reflection_from_moments(&big_f.moments(), depth)?;
    let family = OpucFamily::from_coefficients(a.as_slice(), depth);
    let big = big_f.taylor();
    let mut iterate_dev = 0.0f64;
    for (n, fn_iter) in iterates.iter().enumerate().take(depth) {
        let d = family.degree(n);
        // F Phi*_n - Psi*_n = O(z^{n+1}) and F Phi_n + Psi_n = O(z^n)
        let num = &big.mul_poly(&d.phi_star) - &d.psi_star.to_series(big.len());
        let den = &big.mul_poly(&d.phi) + &d.psi.to_series(big.len());
        let closed = num.div_z_pow(n + 1)?.div(&den.div_z_pow(n)?)?;
        let common = closed.len().min(fn_iter.len());
        iterate_dev = iterate_dev.max(
            closed
                .truncate(common)
                .max_deviation(&fn_iter.truncate(common)),
        );
    }
    let gammas = params.gammas().to_vec();
    let levinson = a.as_slice().to_vec();
    Ok(GeronimusReport {
        max_coefficient_deviation: max_pairwise(&gammas, &levinson),
        gammas,
        levinson,
        max_iterate_deviation: iterate_dev,
    })
}

/// [`geronimus_check`] on the exact moments `c_0 ..= c_count` of a measure.
pub fn geronimus_check_measure(
    mu: &MeasureSpec,
    depth: usize,
    count: usize,
) -> Result<GeronimusReport> {
    geronimus_check(
        &moments_to_caratheodory(&measure_moments(mu, count)?)?,
        depth,
    )
}

/// `p = q z + c`, returning `(q, c)`.
fn split_z(p: &Poly) -> (Poly, Complex64) {
    let c = p.coeff(0);
    let mut q = p.coeffs()[1..].to_vec();
    if q.is_empty() {
        q.push(Complex64::new(0.0, 0.0));
    }
    (Poly::new(q), c)
}

/// Largest deviation in the Wall/OPUC relations
///
/// ```text
/// A_n  = (Psi*_{n+1} - Phi*_{n+1}) / (2z)     B_n  = (Psi*_{n+1} + Phi*_{n+1}) / 2
/// A*_n = (Psi_{n+1} - Phi_{n+1}) / 2          B*_n = (Psi_{n+1} + Phi_{n+1}) / (2z)
/// ```
///
/// with `a_k = gamma_k`. The divisions by `z` are exact polynomial divisions;
/// the constant terms they drop (zero in exact arithmetic) count toward the residual.
pub fn theorem5_residual(g: &SchurParams, n: usize, grid: &[Complex64]) -> Result<f64> {
    let w = wall_polynomials(g, n)?;
    let family = OpucFamily::from_coefficients(g.gammas(), n + 1);
    if family.max_degree() < n + 1 {
        return Err(OpucError::IndexOutOfRange {
            index: n + 1,
            len: g.len(),
        });
    }
    let d = family.degree(n + 1);
    let half = Complex64::new(0.5, 0.0);
    let (a_rel, a_drop) = split_z(&(&d.psi_star - &d.phi_star).scale(half));
    let b_rel = (&d.psi_star + &d.phi_star).scale(half);
    let a_star_rel = (&d.psi - &d.phi).scale(half);
    let (b_star_rel, b_star_drop) = split_z(&(&d.psi + &d.phi).scale(half));
    let mut worst = a_drop.norm().max(b_star_drop.norm());
    for &z in grid {
        for (lhs, rhs) in [
            (&w.a, &a_rel),
            (&w.b, &b_rel),
            (&w.a_star, &a_star_rel),
            (&w.b_star, &b_star_rel),
        ] {
            worst = worst.max((lhs.eval(z) - rhs.eval(z)).norm());
        }
    }
    Ok(worst)
}

/// One row of [`BoydReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoydRow {
    pub n: usize,
    pub a_minus_bf: f64,
    pub a_star: f64,
    pub b_star: f64,
}

/// Sups over `|z| <= 1/2` of `|A_n - B_n f|`, `|A*_n|`, `|B*_n|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoydReport {
    pub rows: Vec<BoydRow>,
    pub hypothesis_met: bool,
    pub warning: Option<String>,
    pub a_minus_bf_nonincreasing: bool,
    pub a_star_nonincreasing: bool,
    pub b_star_nonincreasing: bool,
}

impl BoydReport {
    pub fn last(&self) -> Option<&BoydRow> {
        self.rows.last()
    }
}

/// Points on `|z| = 1/2`; by the maximum principle the sups over the closed
/// disk are attained there.
pub const BOYD_RADIUS: f64 = 0.5;
const BOYD_SAMPLES: usize = 256;

pub fn boyd_convergence_report(g: &SchurParams, f: &Series, n_max: usize) -> Result<BoydReport> {
    let walls = wall_sequence(g, n_max)?;
    let extreme = extreme_point_report(SchurSource::Params(g), g.len())?;
    let hypothesis_met = extreme.verdict == ExtremeVerdict::NotExtremeLikely;
    let warning = (!hypothesis_met).then(|| {
        format!(
            "hypothesis not met: extreme-point verdict is {:?}",
            extreme.verdict
        )
    });
    let grid = circle_grid(BOYD_RADIUS, BOYD_SAMPLES);
    let f_vals: Vec<Complex64> = grid.iter().map(|&z| f.eval(z)).collect();
    let rows: Vec<BoydRow> = walls
        .iter()
        .map(|w| {
            let mut row = BoydRow {
                n: w.n,
                a_minus_bf: 0.0,
                a_star: 0.0,
                b_star: 0.0,
            };
            for (&z, &fz) in grid.iter().zip(&f_vals) {
                row.a_minus_bf = row.a_minus_bf.max((w.a.eval(z) - w.b.eval(z) * fz).norm());
                row.a_star = row.a_star.max(w.a_star.eval(z).norm());
                row.b_star = row.b_star.max(w.b_star.eval(z).norm());
            }
            row
        })
        .collect();
    let nonincreasing = |pick: fn(&BoydRow) -> f64| {
        rows.windows(2)
            .all(|p| pick(&p[1]) <= pick(&p[0]) * (1.0 + 1e-9) + 1e-15)
    };
    Ok(BoydReport {
        a_minus_bf_nonincreasing: nonincreasing(|r| r.a_minus_bf),
        a_star_nonincreasing: nonincreasing(|r| r.a_star),
        b_star_nonincreasing: nonincreasing(|r| r.b_star),
        rows,
        hypothesis_met,
        warning,
    })
}

/// The three candidates for the Carathéodory function of the kth associated
/// measure of the second kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Remark13Report {
    pub k: usize,
    /// `[F(Psi_k + Psi*_k) + Phi_k - Phi*_k] / [F(Psi_k - Psi*_k) + Phi_k + Phi*_k]`
    /// after removing the common power of `z`; `None` when the quotient has a pole at 0.
    pub display: Option<Vec<Complex64>>,
    /// `1 / F_k`.
    pub reciprocal: Vec<Complex64>,
    /// Built from the coefficients `-a_{n+k}`.
    pub negated_shift: Vec<Complex64>,
    pub display_vs_reciprocal: Option<f64>,
    pub display_vs_negated: Option<f64>,
    pub reciprocal_vs_negated: f64,
}

fn leading_order(s: &Series) -> usize {
    let tol = Z_DIV_TOL * s.max_abs().max(1.0);
    s.coeffs()
        .iter()
        .position(|c| c.norm() > tol)
        .unwrap_or(s.len())
}

fn coeff_deviation(x: &[Complex64], y: &[Complex64]) -> f64 {
    max_pairwise(x, y)
}

pub fn remark13_comparison(
    big_f: &CaratheodoryFn,
    a: &ReflectionCoeffs,
    k: usize,
) -> Result<Remark13Report> {
    let fk = associated_caratheodory(big_f, a, k)?;
    let reciprocal = fk.reciprocal()?.taylor().coeffs().to_vec();

    let shifted = a.shifted(k).negated();
    let len = reciprocal.len().min(shifted.len() + 1);
    let negated_shift = caratheodory_from_coefficients(&shifted, len)
        .taylor()
        .coeffs()
        .to_vec();

    let family = OpucFamily::from_coefficients(a.as_slice(), k);
    let d = family.degree(k);
    let f = big_f.taylor();
    let n = f.len();
    let num = &f.mul_poly(&(&d.psi + &d.psi_star)) + &(&d.phi - &d.phi_star).to_series(n);
    let den = &f.mul_poly(&(&d.psi - &d.psi_star)) + &(&d.phi + &d.phi_star).to_series(n);
    let order = leading_order(&den);
    let display = if order < n && leading_order(&num) >= order {
        let q = num.div_z_pow(order)?.div(&den.div_z_pow(order)?)?;
        Some(q.into_coeffs())
    } else {
        None
    };
    let display_vs_reciprocal = display.as_ref().map(|d| coeff_deviation(d, &reciprocal));
    let display_vs_negated = display.as_ref().map(|d| coeff_deviation(d, &negated_shift));
    Ok(Remark13Report {
        k,
        reciprocal_vs_negated: coeff_deviation(&reciprocal, &negated_shift),
        display,
        reciprocal,
        negated_shift,
        display_vs_reciprocal,
        display_vs_negated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::disk_grid;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn mixture_f(len: usize) -> CaratheodoryFn {
        CaratheodoryFn::new(Series::from_real(&vec![1.0; len])).unwrap()
    }

    fn mixture_a(n: usize) -> ReflectionCoeffs {
        ReflectionCoeffs::from_real(&(0..n).map(|j| 1.0 / (j as f64 + 2.0)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn associated_polynomial_examples() {
        let a = mixture_a(10);
        let s0 = associated_polynomials(&a, 0, 6).unwrap();
        assert_eq!(s0.family, OpucFamily::from_coefficients(a.as_slice(), 6));

        let zeros = ReflectionCoeffs::from_real(&[0.0; 8]).unwrap();
        let s = associated_polynomials(&zeros, 3, 5).unwrap();
        assert_eq!(s.family.degree(5).phi, Poly::monomial(5));

        let s = associated_polynomials(&a, 1, 1).unwrap();
        assert!(
            s.family
                .degree(1)
                .phi
                .max_deviation(&Poly::from_real(&[-1.0 / 3.0, 1.0]))
                < 1e-16
        );

        assert!(associated_polynomials(&a, 5, 6).is_err());
    }

    #[test]
    fn associated_caratheodory_examples() {
        let f = mixture_f(40);
        let a = mixture_a(40);
        assert_eq!(associated_caratheodory(&f, &a, 0).unwrap(), f);

        let one = CaratheodoryFn::new(Series::one(20)).unwrap();
        let zeros = ReflectionCoeffs::from_real(&[0.0; 10]).unwrap();
        assert!(
            associated_caratheodory(&one, &zeros, 4)
                .unwrap()
                .taylor()
                .max_deviation(&Series::one(16))
                < 1e-15
        );

        // (k + 2 - k z) / ((k + 2)(1 - z)) = 1 + (2/(k+2)) sum z^n
        for k in 1..=5 {
            let fk = associated_caratheodory(&f, &a, k).unwrap();
            assert_eq!(fk.len(), 40 - k);
            for n in 1..fk.len() {
                assert!((fk.taylor().coeff(n) - c(2.0 / (k as f64 + 2.0))).norm() < 1e-12);
            }
            let m = associated_moments(&f, &a, k, 20).unwrap();
            assert_eq!(m.len(), 21);
            assert!((m[7] - c(1.0 / (k as f64 + 2.0))).norm() < 1e-12);
        }
    }

    #[test]
    fn shift_property_examples() {
        let rep = shift_property_check(&mixture_f(64), 2, 10).unwrap();
        for (n, v) in rep.associated.iter().enumerate() {
            assert!((v - c(1.0 / (n as f64 + 4.0))).norm() < 1e-9);
        }
        assert!(rep.max_deviation < 1e-9);

        let one = CaratheodoryFn::new(Series::one(32)).unwrap();
        assert_eq!(shift_property_check(&one, 3, 8).unwrap().max_deviation, 0.0);
        let rep = shift_property_check_measure(&MeasureSpec::lebesgue(128), 3, 8, 40).unwrap();
        assert!(rep.max_deviation < 1e-15);
    }

    #[test]
    fn theorem14_examples() {
        let grid = disk_grid(&[0.5, 1.0], 64);
        let zeros = ReflectionCoeffs::from_real(&[0.0; 10]).unwrap();
        assert!(theorem14_residual(&zeros, 3, 4, &grid).unwrap() < 1e-14);
        assert!(theorem14_residual(&mixture_a(10), 1, 2, &grid).unwrap() < 1e-11);
        let a = ReflectionCoeffs::new(vec![
            Complex64::new(0.3, -0.4),
            Complex64::new(-0.5, 0.1),
            Complex64::new(0.2, 0.7),
            Complex64::new(0.0, -0.6),
            Complex64::new(0.8, 0.1),
        ])
        .unwrap();
        for k in 0..=3 {
            assert!(theorem14_residual(&a, k, 5 - k, &grid).unwrap() < 1e-12);
        }
    }

    #[test]
    fn geronimus_examples() {
        let rep = geronimus_check(&CaratheodoryFn::new(Series::one(32)).unwrap(), 20).unwrap();
        assert_eq!(rep.max_coefficient_deviation, 0.0);
        assert_eq!(rep.max_iterate_deviation, 0.0);

        let rep =
            geronimus_check_measure(&MeasureSpec::mixture(0.5, 128).unwrap(), 21, 50).unwrap();
        for (n, (g, a)) in rep.gammas.iter().zip(&rep.levinson).enumerate() {
            assert!((g - c(1.0 / (n as f64 + 2.0))).norm() < 1e-9);
            assert!((a - c(1.0 / (n as f64 + 2.0))).norm() < 1e-9);
        }
        assert!(rep.max_iterate_deviation < 1e-9);
    }

    #[test]
    fn theorem5_examples() {
        let grid = disk_grid(&[0.5, 1.0], 64);
        assert_eq!(
            theorem5_residual(&SchurParams::from_real(&[0.0; 6]).unwrap(), 4, &grid).unwrap(),
            0.0
        );
        assert!(
            theorem5_residual(&SchurParams::from_real(&[0.5]).unwrap(), 0, &grid).unwrap() < 1e-16
        );
        let g = SchurParams::new(vec![
            Complex64::new(0.3, -0.4),
            Complex64::new(-0.5, 0.1),
            Complex64::new(0.2, 0.7),
        ])
        .unwrap();
        assert!(theorem5_residual(&g, 2, &grid).unwrap() < 1e-14);
    }

    #[test]
    fn boyd_zero_function() {
        let g = SchurParams::from_real(&[0.0; 12]).unwrap();
        let rep = boyd_convergence_report(&g, &Series::zeros(16), 10).unwrap();
        assert!(rep.hypothesis_met);
        for row in &rep.rows {
            assert_eq!(row.a_minus_bf, 0.0);
            assert_eq!(row.a_star, 0.0);
            assert!((row.b_star - 0.5f64.powi(row.n as i32)).abs() < 1e-15);
        }
        assert!(rep.b_star_nonincreasing);
    }

    #[test]
    fn boyd_geometric_parameters() {
        let gammas: Vec<f64> = (0..40).map(|n| 0.5 * 0.5f64.powi(n)).collect();
        let g = SchurParams::from_real(&gammas).unwrap();
        let f = crate::schur::wall_polynomials(&g, 39).unwrap();
        // a long Wall approximant stands in for f
        let fs = f.a.to_series(128).div(&f.b.to_series(128)).unwrap();
        let rep = boyd_convergence_report(&g, &fs, 20).unwrap();
        assert!(rep.hypothesis_met);
        assert!(rep.rows[20].a_minus_bf < 1e-10);
    }

    #[test]
    fn remark13_examples() {
        let one = CaratheodoryFn::new(Series::one(16)).unwrap();
        let zeros = ReflectionCoeffs::from_real(&[0.0; 16]).unwrap();
        let rep = remark13_comparison(&one, &zeros, 0).unwrap();
        assert_eq!(rep.display_vs_reciprocal, Some(0.0));
        assert_eq!(rep.reciprocal_vs_negated, 0.0);

        let f = mixture_f(40);
        let a = mixture_a(40);
        let rep = remark13_comparison(&f, &a, 0).unwrap();
        let display = rep.display.unwrap();
        // the display reduces to F = 1/(1 - z), while 1/F = 1 - z
        assert!(display.iter().all(|v| (v - c(1.0)).norm() < 1e-12));
        assert!((rep.reciprocal[1] - c(-1.0)).norm() < 1e-12);
        assert!(rep.reciprocal[2..].iter().all(|v| v.norm() < 1e-12));
        assert!(rep.reciprocal_vs_negated < 1e-12);

        for k in 1..=4 {
            let rep = remark13_comparison(&f, &a, k).unwrap();
            assert!(
                rep.reciprocal_vs_negated < 1e-10,
                "k = {k}: {}",
                rep.reciprocal_vs_negated
            );
        }
    }
}
