//! Schur's algorithm on truncated Taylor series and the Wall polynomials.
//!
//! Starting from a Schur function `f` (analytic, `|f| < 1` on the disk) the
//! algorithm produces `f_0 = f`, `gamma_n = f_n(0)` and
//!
//! ```text
//! f_{n+1}(z) = (f_n(z) - gamma_n) / (z (1 - conj(gamma_n) f_n(z)))
//! ```
//!
//! The Wall polynomials `A_n`, `B_n` are the numerators and denominators of
//! the rational approximants `A_n / B_n` obtained by stopping the algorithm
//! with `f_{n+1} = 0`. They obey
//!
//! ```text
//! A_n  = A_{n-1} + z gamma_n B*_{n-1}     A*_n = z A*_{n-1} + conj(gamma_n) B_{n-1}
//! B_n  = B_{n-1} + z gamma_n A*_{n-1}     B*_n = z B*_{n-1} + conj(gamma_n) A_{n-1}
//! ```
//!
//! with `A_0 = gamma_0`, `B_0 = 1`, and the determinant identity
//! `B_n B*_n - A_n A*_n = z^n omega_n`, `omega_n = prod_{k<=n} (1 - |gamma_k|^2)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{OpucError, Result};
use crate::precise::{dd, defect_product, to_f64, Dd};
use crate::series::{Poly, Series};

/// `|gamma| >= 1 - UNIMODULAR_TOL` terminates the parameter stream.
pub const UNIMODULAR_TOL: f64 = 1e-10;

/// Past this index `omega_n` is accumulated in log space.
const OMEGA_LOG_SPACE_AFTER: usize = 100;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Where and with which value the algorithm met a unimodular parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Termination {
    pub index: usize,
    pub value: Complex64,
}

/// Schur parameters `gamma_0, ..., gamma_{m-1}`, all strictly inside the disk.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParams {
    gammas: Vec<Complex64>,
    termination: Option<Termination>,
}

impl SchurParams {
    /// Wraps a parameter list, rejecting any entry with `|gamma| >= 1`.
    pub fn new(gammas: Vec<Complex64>) -> Result<Self> {
        for (index, g) in gammas.iter().enumerate() {
            if !(g.norm() < 1.0) {
                return Err(OpucError::InvalidCoefficient {
                    index,
                    modulus: g.norm(),
                });
            }
        }
        Ok(Self {
            gammas,
            termination: None,
        })
    }

    pub fn from_real(gammas: &[f64]) -> Result<Self> {
        Self::new(gammas.iter().map(|&g| Complex64::new(g, 0.0)).collect())
    }

    pub fn gammas(&self) -> &[Complex64] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn terminated_at(&self) -> Option<usize> {
        self.termination.map(|t| t.index)
    }

    pub fn termination(&self) -> Option<Termination> {
        self.termination
    }
}

/// One step of Schur's algorithm. The returned series is one term shorter.
pub fn schur_step(f: &Series) -> Result<(Complex64, Series)> {
    if f.len() < 2 {
        return Err(OpucError::SeriesExhausted {
            needed: 2,
            available: f.len(),
        });
    }
    let gamma = f.coeff(0);
    if gamma.norm() >= 1.0 - UNIMODULAR_TOL {
        return Err(OpucError::UnimodularParameter {
            index: 0,
            modulus: gamma.norm(),
        });
    }
    let mut num = f.add_constant(-gamma);
    // the constant term is gamma - gamma; pin it so div_z is exact
    num = {
        let mut c = num.into_coeffs();
        c[0] = ZERO;
        Series::new(c)
    };
    let den = f.scale(-gamma.conj()).add_constant(ONE);
    let next = num.div(&den)?.div_z()?;
    Ok((gamma, next))
}

/// Runs the algorithm for up to `count` steps and also returns the iterates
/// `f_0, ..., f_m` where `m` is the number of parameters produced.
pub fn schur_run(f: &Series, count: usize) -> Result<(SchurParams, Vec<Series>)> {
    if count + 1 > f.len() {
        return Err(OpucError::SeriesExhausted {
            needed: count + 1,
            available: f.len(),
        });
    }
    let mut gammas = Vec::with_capacity(count);
    let mut iterates = vec![f.clone()];
    let mut termination = None;
    for index in 0..count {
        let current = iterates.last().expect("iterates start non-empty");
        match schur_step(current) {
            Ok((gamma, next)) => {
                gammas.push(gamma);
                iterates.push(next);
            }
            Err(OpucError::UnimodularParameter { .. }) => {
                termination = Some(Termination {
                    index,
                    value: current.coeff(0),
                });
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok((
        SchurParams {
            gammas,
            termination,
        },
        iterates,
    ))
}

/// `gamma_k = f_k(0)` for `k < count`, or fewer with the termination marker set.
pub fn schur_parameters(f: &Series, count: usize) -> Result<SchurParams> {
    schur_run(f, count).map(|(params, _)| params)
}

/// Wall polynomials of index `n` and their reversals.
#[derive(Debug, Clone, PartialEq)]
pub struct WallPair {
    pub a: Poly,
    pub b: Poly,
    pub a_star: Poly,
    pub b_star: Poly,
    pub n: usize,
    pub omega: f64,
    pub log_omega: f64,
    gammas: Vec<Complex64>,
}

impl WallPair {
    fn initial(gamma0: Complex64) -> Self {
        let log_omega = (-gamma0.norm_sqr()).ln_1p();
        Self {
            a: Poly::constant(gamma0),
            b: Poly::one(),
            a_star: Poly::constant(gamma0.conj()),
            b_star: Poly::one(),
            n: 0,
            omega: 1.0 - gamma0.norm_sqr(),
            log_omega,
            gammas: vec![gamma0],
        }
    }

    fn advance(&self, gamma: Complex64) -> Self {
        let n = self.n + 1;
        let a = &self.a.with_degree(n) + &self.b_star.mul_z().scale(gamma);
        let b = &self.b.with_degree(n) + &self.a_star.mul_z().scale(gamma);
        let a_star = &self.a_star.mul_z() + &self.b.with_degree(n).scale(gamma.conj());
        let b_star = &self.b_star.mul_z() + &self.a.with_degree(n).scale(gamma.conj());
        let factor = 1.0 - gamma.norm_sqr();
        let log_omega = self.log_omega + (-gamma.norm_sqr()).ln_1p();
        let omega = if n > OMEGA_LOG_SPACE_AFTER {
            log_omega.exp()
        } else {
            self.omega * factor
        };
        let mut gammas = self.gammas.clone();
        gammas.push(gamma);
        Self {
            a,
            b,
            a_star,
            b_star,
            n,
            omega,
            log_omega,
            gammas,
        }
    }

    /// `A_n(z) / B_n(z)` for `|z| < 1`.
    pub fn approximant(&self, z: Complex64) -> Result<Complex64> {
        if !(z.norm() < 1.0) {
            return Err(OpucError::DomainError(format!(
                "approximant needs |z| < 1, got {}",
                z.norm()
            )));
        }
        let den = self.b.eval(z);
        if den.norm() < 1e-12 {
            return Err(OpucError::NumericalPoleDetected {
                modulus: den.norm(),
            });
        }
        Ok(self.a.eval(z) / den)
    }
}

/// All Wall pairs `0..=n`.
pub fn wall_sequence(g: &SchurParams, n: usize) -> Result<Vec<WallPair>> {
    if n >= g.len() {
        return Err(OpucError::IndexOutOfRange {
            index: n,
            len: g.len(),
        });
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(WallPair::initial(g.gammas[0]));
    for k in 1..=n {
        let next = out[k - 1].advance(g.gammas[k]);
        out.push(next);
    }
    Ok(out)
}

pub fn wall_polynomials(g: &SchurParams, n: usize) -> Result<WallPair> {
    wall_sequence(g, n).map(|mut v| v.pop().expect("sequence is non-empty"))
}

/// `max |B_n B*_n - A_n A*_n - z^n omega_n|` over the grid.
///
/// On the unit circle `|B_n|^2` can exceed `|omega_n|` by many orders of
/// magnitude, so double-precision coefficients alone would leave a residual
/// of order `eps |B_n|^2`. The values are instead produced by running the
/// recurrence pointwise from the parameters in double-double arithmetic.
pub fn det_identity_residual(w: &WallPair, grid: &[Complex64]) -> f64 {
    let gammas: Vec<Dd> = w.gammas.iter().map(|&g| dd(g)).collect();
    let one = dd(ONE);
    let omega = defect_product(&gammas);
    grid.iter()
        .map(|&zf| {
            let z = dd(zf);
            let g0 = gammas[0];
            let (mut a, mut b, mut a_s, mut b_s) = (g0, one, g0.conj(), one);
            let mut zn = one;
            for g in &gammas[1..] {
                let zg = z * g;
                let gc = g.conj();
                (a, b, a_s, b_s) = (
                    a + zg * b_s,
                    b + zg * a_s,
                    z * a_s + gc * b,
                    z * b_s + gc * a,
                );
                zn *= z;
            }
            let r = b * b_s - a * a_s - zn.scale(omega);
            to_f64(r).norm()
        })
        .fold(0.0, f64::max)
}

/// Same residual from the stored double-precision coefficients.
pub fn det_identity_coefficient_residual(w: &WallPair, grid: &[Complex64]) -> f64 {
    grid.iter()
        .map(|&z| {
            let lhs = w.b.eval(z) * w.b_star.eval(z) - w.a.eval(z) * w.a_star.eval(z);
            (lhs - z.powu(w.n as u32) * w.omega).norm()
        })
        .fold(0.0, f64::max)
}

pub fn approximant(w: &WallPair, z: Complex64) -> Result<Complex64> {
    w.approximant(z)
}

/// Uniform bound `2 (1 - eps)^{n+1} / eps` on `|f - A_n/B_n|` over `|z| <= 1 - eps`.
pub fn theorem1_error_bound(epsilon: f64, n: usize) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(OpucError::DomainError(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    Ok(2.0 * (1.0 - epsilon).powi(n as i32 + 1) / epsilon)
}

/// `|A_m(z)/B_m(z) - A_n(z)/B_n(z)|` for `n = 0..=n_max`, with the Wall
/// recurrence and the cross-multiplied difference run in double-double
/// arithmetic. Gaps far below `f64` resolution of the approximants themselves
/// come out accurately.
pub fn approximant_gaps(g: &SchurParams, m: usize, n_max: usize, z: Complex64) -> Result<Vec<f64>> {
    if m >= g.len() {
        return Err(OpucError::IndexOutOfRange {
            index: m,
            len: g.len(),
        });
    }
    if n_max > m {
        return Err(OpucError::IndexOutOfRange {
            index: n_max,
            len: m + 1,
        });
    }
    let z = dd(z);
    let g0 = dd(g.gammas()[0]);
    let one = dd(ONE);
    let (mut a, mut b, mut a_s, mut b_s) = (g0, one, g0.conj(), one);
    let mut early = Vec::with_capacity(n_max + 1);
    early.push((a, b));
    for &gf in &g.gammas()[1..=m] {
        let gk = dd(gf);
        let zg = z * gk;
        let gc = gk.conj();
        (a, b, a_s, b_s) = (
            a + zg * b_s,
            b + zg * a_s,
            z * a_s + gc * b,
            z * b_s + gc * a,
        );
        if early.len() <= n_max {
            early.push((a, b));
        }
    }
    Ok(early
        .into_iter()
        .map(|(an, bn)| {
            let num = to_f64(a * bn - an * b).norm();
            num / (to_f64(b).norm() * to_f64(bn).norm())
        })
        .collect())
}

/// The first `m` convergents of Wall's continued fraction
///
/// ```text
/// gamma_0 + (1-|gamma_0|^2) z / (conj(gamma_0) z + 1 / (gamma_1 + (1-|gamma_1|^2) z / ...))
/// ```
///
/// as (numerator, denominator) pairs from the Wallis recurrence.
pub fn wall_cf_convergents(g: &SchurParams, m: usize) -> Result<Vec<(Poly, Poly)>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    let needed = (m - 1) / 2;
    if needed >= g.len() {
        return Err(OpucError::IndexOutOfRange {
            index: needed,
            len: g.len(),
        });
    }
    let mut out = Vec::with_capacity(m);
    let (mut p_prev, mut q_prev) = (Poly::one(), Poly::zero(0));
    let (mut p, mut q) = (Poly::constant(g.gammas[0]), Poly::one());
    out.push((p.clone(), q.clone()));
    for j in 1..m {
        let i = j / 2;
        let gamma = g.gammas[i];
        let (partial_num, partial_den) = if j % 2 == 1 {
            (
                Poly::new(vec![ZERO, Complex64::new(1.0 - gamma.norm_sqr(), 0.0)]),
                Poly::new(vec![ZERO, gamma.conj()]),
            )
        } else {
            (Poly::one(), Poly::constant(gamma))
        };
        let p_next = &(&partial_den * &p) + &(&partial_num * &p_prev);
        let q_next = &(&partial_den * &q) + &(&partial_num * &q_prev);
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push((p.clone(), q.clone()));
    }
    Ok(out)
}

/// Cross-multiplied agreement of the continued-fraction convergents with the
/// Wall approximants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergentReport {
    /// `max |P_{2n} B_n - A_n Q_{2n}|`
    pub even_residual: f64,
    /// `max |P_{2n+1} A*_n - B*_n Q_{2n+1}|`, compared against `z B*_n / (z A*_n)`.
    pub odd_residual: f64,
}

pub fn convergent_report(
    g: &SchurParams,
    n_max: usize,
    grid: &[Complex64],
) -> Result<ConvergentReport> {
    let walls = wall_sequence(g, n_max)?;
    let convergents = wall_cf_convergents(g, 2 * n_max + 2)?;
    let mut even = 0.0f64;
    let mut odd = 0.0f64;
    for (n, w) in walls.iter().enumerate() {
        let (pe, qe) = &convergents[2 * n];
        let (po, qo) = &convergents[2 * n + 1];
        for &z in grid {
            even = even.max((pe.eval(z) * w.b.eval(z) - w.a.eval(z) * qe.eval(z)).norm());
            odd = odd.max((po.eval(z) * w.a_star.eval(z) - w.b_star.eval(z) * qo.eval(z)).norm());
        }
    }
    Ok(ConvergentReport {
        even_residual: even,
        odd_residual: odd,
    })
}

/// Residuals of the error representation
/// `f - A_n/B_n = z^{n+1} f_{n+1} omega_n / (B_n (B_n + z A*_n f_{n+1}))`
/// and the product formula `B_n + z A*_n f_{n+1} = prod_{k<=n} (1 + z conj(gamma_k) f_{k+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProofIdentityReport {
    pub error_formula_residual: f64,
    pub product_formula_residual: f64,
}

pub fn proof_identity_checks(
    f: &Series,
    g: &SchurParams,
    n: usize,
    grid: &[Complex64],
) -> Result<ProofIdentityReport> {
    let (params, iterates) = schur_run(f, n + 1)?;
    if params.len() < n + 1 {
        return Err(OpucError::UnimodularParameter {
            index: params.len(),
            modulus: 1.0,
        });
    }
    let w = wall_polynomials(g, n)?;
    let mut err9 = 0.0f64;
    let mut err12 = 0.0f64;
    for &z in grid {
        let f_next = iterates[n + 1].eval(z);
        let b = w.b.eval(z);
        let a = w.a.eval(z);
        let denom = b + z * w.a_star.eval(z) * f_next;

        let lhs9 = f.eval(z) - a / b;
        let rhs9 = z.powu(n as u32 + 1) * f_next * w.omega / (b * denom);
        err9 = err9.max((lhs9 - rhs9).norm());

        let product = (0..=n).fold(ONE, |acc, k| {
            acc * (ONE + z * g.gammas[k].conj() * iterates[k + 1].eval(z))
        });
        err12 = err12.max((denom - product).norm());
    }
    Ok(ProofIdentityReport {
        error_formula_residual: err9,
        product_formula_residual: err12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::circle_grid;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Series of 1/(2 - z).
    fn half_geometric(len: usize) -> Series {
        Series::new((0..len).map(|k| c(0.5f64.powi(k as i32 + 1))).collect())
    }

    #[test]
    fn step_fixed_points() {
        let (g, next) = schur_step(&Series::zeros(5)).unwrap();
        assert_eq!(g, ZERO);
        assert_eq!(next, Series::zeros(4));

        let gamma = Complex64::new(0.3, -0.4);
        let (g, next) = schur_step(&Series::constant(gamma, 5)).unwrap();
        assert_eq!(g, gamma);
        assert!(next.max_abs() < 1e-15);

        let (g, next) = schur_step(&Series::from_real(&[0.0, 0.5, 0.0, 0.0])).unwrap();
        assert_eq!(g, ZERO);
        assert!(next.max_deviation(&Series::constant(c(0.5), 3)) < 1e-15);
    }

    #[test]
    fn step_errors() {
        assert!(matches!(
            schur_step(&Series::constant(c(0.5), 1)),
            Err(OpucError::SeriesExhausted { .. })
        ));
        assert!(matches!(
            schur_step(&Series::constant(c(1.0), 4)),
            Err(OpucError::UnimodularParameter { .. })
        ));
    }

    #[test]
    fn parameters_of_zero_and_geometric() {
        let p = schur_parameters(&Series::zeros(8), 5).unwrap();
        assert_eq!(p.gammas(), &[ZERO; 5]);
        assert_eq!(p.terminated_at(), None);

        let p = schur_parameters(&half_geometric(5), 4).unwrap();
        for (k, g) in p.gammas().iter().enumerate() {
            assert!((g - c(1.0 / (k as f64 + 2.0))).norm() < 1e-14, "k={k}");
        }
        assert!(matches!(
            schur_parameters(&half_geometric(4), 4),
            Err(OpucError::SeriesExhausted { .. })
        ));
    }

    #[test]
    fn inner_function_terminates() {
        let p = schur_parameters(&Series::z(6), 3).unwrap();
        assert_eq!(p.gammas(), &[ZERO]);
        assert_eq!(p.terminated_at(), Some(1));
        assert!((p.termination().unwrap().value.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wall_initial_and_free_case() {
        let g0 = Complex64::new(0.3, 0.4);
        let w = wall_polynomials(&SchurParams::new(vec![g0]).unwrap(), 0).unwrap();
        assert_eq!(w.a, Poly::constant(g0));
        assert_eq!(w.b, Poly::one());
        assert!((w.omega - (1.0 - g0.norm_sqr())).abs() < 1e-16);

        let zeros = SchurParams::new(vec![ZERO; 7]).unwrap();
        let w = wall_polynomials(&zeros, 6).unwrap();
        assert_eq!(w.a, Poly::zero(6));
        assert_eq!(w.b.coeff(0), ONE);
        assert_eq!(w.b.max_deviation(&Poly::one()), 0.0);
        assert_eq!(w.omega, 1.0);
        assert_eq!(w.a.degree(), 6);
    }

    #[test]
    fn wall_one_step_expansion() {
        let g0 = Complex64::new(0.2, -0.5);
        let g1 = Complex64::new(-0.6, 0.1);
        let w = wall_polynomials(&SchurParams::new(vec![g0, g1]).unwrap(), 1).unwrap();
        assert!(w.a.max_deviation(&Poly::new(vec![g0, g1])) < 1e-16);
        assert!(w.b.max_deviation(&Poly::new(vec![ONE, g1 * g0.conj()])) < 1e-16);
        assert!(matches!(
            wall_polynomials(&SchurParams::new(vec![g0, g1]).unwrap(), 2),
            Err(OpucError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn stars_match_reversal() {
        let g = SchurParams::new(
            (0..12)
                .map(|k| Complex64::from_polar(0.8 / (k as f64 + 1.0).sqrt(), 0.7 * k as f64))
                .collect(),
        )
        .unwrap();
        for w in wall_sequence(&g, 11).unwrap() {
            assert!(w.a.star().max_deviation(&w.a_star) < 1e-14);
            assert!(w.b.star().max_deviation(&w.b_star) < 1e-14);
        }
    }

    #[test]
    fn determinant_identity_examples() {
        let zeros = SchurParams::new(vec![ZERO; 4]).unwrap();
        let grid = circle_grid(1.0, 64);
        assert_eq!(
            det_identity_residual(&wall_polynomials(&zeros, 3).unwrap(), &grid),
            0.0
        );

        let half = SchurParams::from_real(&[0.5, 0.0]).unwrap();
        let w = wall_polynomials(&half, 1).unwrap();
        assert!(det_identity_residual(&w, &grid) <= 1e-12);
    }

    #[test]
    fn approximant_examples() {
        let zeros = SchurParams::new(vec![ZERO; 3]).unwrap();
        let w = wall_polynomials(&zeros, 2).unwrap();
        assert_eq!(w.approximant(Complex64::new(0.3, 0.2)).unwrap(), ZERO);

        let w = wall_polynomials(&SchurParams::from_real(&[0.5]).unwrap(), 0).unwrap();
        assert_eq!(w.approximant(ZERO).unwrap(), c(0.5));

        let g = schur_parameters(&half_geometric(32), 11).unwrap();
        let w = wall_polynomials(&g, 10).unwrap();
        let err = (w.approximant(c(0.3)).unwrap() - c(1.0 / 1.7)).norm();
        assert!(err <= theorem1_error_bound(0.7, 10).unwrap());

        assert!(matches!(
            w.approximant(c(1.0)),
            Err(OpucError::DomainError(_))
        ));
    }

    #[test]
    fn error_bound_values() {
        assert!((theorem1_error_bound(0.5, 0).unwrap() - 2.0).abs() < 1e-15);
        assert!((theorem1_error_bound(0.5, 3).unwrap() - 0.25).abs() < 1e-15);
        let expected = 2.0 * 0.1f64.powi(11) / 0.9;
        assert!((theorem1_error_bound(0.9, 10).unwrap() - expected).abs() < 1e-25);
        assert!(theorem1_error_bound(0.0, 1).is_err());
        assert!(theorem1_error_bound(1.0, 1).is_err());
    }

    #[test]
    fn convergents_basic() {
        let g = SchurParams::new(vec![Complex64::new(0.25, 0.5), c(-0.3), c(0.1)]).unwrap();
        let cv = wall_cf_convergents(&g, 5).unwrap();
        assert_eq!(cv[0].0, Poly::constant(g.gammas()[0]));
        assert_eq!(cv[0].1, Poly::one());
        assert!(wall_cf_convergents(&g, 7).is_err());

        let zeros = SchurParams::new(vec![ZERO; 4]).unwrap();
        // odd convergents are z / 0 here, matching B*_n / A*_n = z^n / 0
        for (j, (p, q)) in wall_cf_convergents(&zeros, 7)
            .unwrap()
            .into_iter()
            .enumerate()
        {
            if j % 2 == 0 {
                assert_eq!(p.max_abs(), 0.0);
            } else {
                assert_eq!(q.max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn convergents_match_wall_approximants() {
        let g = SchurParams::new(
            (0..10)
                .map(|k| Complex64::from_polar(0.9 / (k as f64 + 1.5), 1.3 * k as f64))
                .collect(),
        )
        .unwrap();
        let report = convergent_report(&g, 8, &circle_grid(1.0, 64)).unwrap();
        assert!(report.even_residual < 1e-10, "{report:?}");
        assert!(report.odd_residual < 1e-10, "{report:?}");
    }

    #[test]
    fn proof_identities() {
        let grid: Vec<Complex64> = [0.1, 0.3, 0.5]
            .iter()
            .flat_map(|&r| circle_grid(r, 32))
            .collect();

        let f = Series::zeros(16);
        let g = schur_parameters(&f, 4).unwrap();
        let rep = proof_identity_checks(&f, &g, 2, &grid).unwrap();
        assert_eq!(rep.error_formula_residual, 0.0);
        assert_eq!(rep.product_formula_residual, 0.0);

        let f = Series::constant(Complex64::new(0.4, -0.3), 16);
        let g = schur_parameters(&f, 6).unwrap();
        let rep = proof_identity_checks(&f, &g, 4, &grid).unwrap();
        assert!(rep.error_formula_residual <= 1e-10 && rep.product_formula_residual <= 1e-10);

        let f = half_geometric(96);
        let g = schur_parameters(&f, 7).unwrap();
        let rep = proof_identity_checks(&f, &g, 5, &grid).unwrap();
        assert!(rep.error_formula_residual <= 1e-9, "{rep:?}");
        assert!(rep.product_formula_residual <= 1e-9, "{rep:?}");
    }

    #[test]
    fn omega_switches_to_log_space() {
        let g = SchurParams::new(vec![c(0.9); 400]).unwrap();
        let w = wall_polynomials(&g, 399).unwrap();
        let expected = (400.0 * (1.0f64 - 0.81).ln()).exp();
        assert!(w.omega > 0.0);
        assert!(((w.omega - expected) / expected).abs() < 1e-10);
    }

    #[test]
    fn approximant_gaps_resolve_below_f64() {
        let g = SchurParams::from_real(
            &(0..=120)
                .map(|n| 1.0 / (n as f64 + 2.0))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let z = Complex64::new(0.3, 0.0);
        let gaps = approximant_gaps(&g, 120, 40, z).unwrap();
        let deep = wall_polynomials(&g, 120).unwrap().approximant(z).unwrap();
        for n in [0, 3, 6] {
            let direct = (deep - wall_polynomials(&g, n).unwrap().approximant(z).unwrap()).norm();
            assert!((gaps[n] - direct).abs() < 1e-14);
        }
        // the gap for f = 1/(2-z) decays like 0.3^{n+1}, far past double resolution
        assert!(gaps[40] > 0.0 && gaps[40] < 1e-20);
        assert!(approximant_gaps(&g, 121, 40, z).is_err());
        assert!(approximant_gaps(&g, 30, 40, z).is_err());
    }
}
