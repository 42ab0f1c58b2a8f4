//! Monic orthogonal polynomials on the unit circle.
//!
//! The family is generated from reflection coefficients `a_n` by the Szegő
//! recurrences
//!
//! ```text
//! Phi_{n+1} = z Phi_n - conj(a_n) Phi*_n      Phi*_{n+1} = Phi*_n - z a_n Phi_n
//! Psi_{n+1} = z Psi_n + conj(a_n) Psi*_n      Psi*_{n+1} = Psi*_n + z a_n Psi_n
//! ```
//!
//! with `Phi_0 = Psi_0 = 1`. Measures are normalized so that `sigma / 2pi`
//! is a probability measure, hence `kappa_0 = 1` and
//! `kappa_{n+1} = kappa_n / sqrt(1 - |a_n|^2)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::diagnostics::{SquareSumTrend, Trend};
use crate::error::{OpucError, Result};
use crate::precise::{dd, defect_product, real, recip, to_f64, Dd};
use crate::series::Poly;
use crate::transforms::MeasureSpec;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Reflection (Verblunsky) coefficients, all strictly inside the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionCoeffs(Vec<Complex64>);

impl ReflectionCoeffs {
    pub fn new(a: Vec<Complex64>) -> Result<Self> {
        for (index, v) in a.iter().enumerate() {
            if !(v.norm() < 1.0) {
                return Err(OpucError::InvalidCoefficient {
                    index,
                    modulus: v.norm(),
                });
            }
        }
        Ok(Self(a))
    }

    pub fn from_real(a: &[f64]) -> Result<Self> {
        Self::new(a.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficients `a_k, a_{k+1}, ...`.
    pub fn shifted(&self, k: usize) -> ReflectionCoeffs {
        ReflectionCoeffs(self.0[k.min(self.0.len())..].to_vec())
    }

    /// Coefficients `-a_n`, the second-kind system.
    pub fn negated(&self) -> ReflectionCoeffs {
        ReflectionCoeffs(self.0.iter().map(|a| -a).collect())
    }

    pub fn truncated(&self, len: usize) -> ReflectionCoeffs {
        ReflectionCoeffs(self.0[..len.min(self.0.len())].to_vec())
    }
}

/// `Phi_n`, `Psi_n`, their reversals and `kappa_n` at one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct OpucDegree {
    pub phi: Poly,
    pub psi: Poly,
    pub phi_star: Poly,
    pub psi_star: Poly,
    pub kappa: f64,
}

/// Monic OPUC and second-kind polynomials for degrees `0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct OpucFamily {
    degrees: Vec<OpucDegree>,
}

impl OpucFamily {
    pub(crate) fn from_coefficients(a: &[Complex64], n: usize) -> Self {
        let mut degrees = Vec::with_capacity(n + 1);
        degrees.push(OpucDegree {
            phi: Poly::one(),
            psi: Poly::one(),
            phi_star: Poly::one(),
            psi_star: Poly::one(),
            kappa: 1.0,
        });
        for (k, &ak) in a.iter().enumerate().take(n) {
            let d = &degrees[k];
            let next = OpucDegree {
                phi: &d.phi.mul_z() - &d.phi_star.with_degree(k + 1).scale(ak.conj()),
                phi_star: &d.phi_star.with_degree(k + 1) - &d.phi.mul_z().scale(ak),
                psi: &d.psi.mul_z() + &d.psi_star.with_degree(k + 1).scale(ak.conj()),
                psi_star: &d.psi_star.with_degree(k + 1) + &d.psi.mul_z().scale(ak),
                kappa: d.kappa / (1.0 - ak.norm_sqr()).sqrt(),
            };
            degrees.push(next);
        }
        Self { degrees }
    }

    /// Highest degree stored.
    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degree(&self, n: usize) -> &OpucDegree {
        &self.degrees[n]
    }

    pub fn degrees(&self) -> &[OpucDegree] {
        &self.degrees
    }
}

/// Runs the Szegő recurrences up to degree `n`; needs `n <= a.len()`.
pub fn szego_recurrence(a: &ReflectionCoeffs, n: usize) -> Result<OpucFamily> {
    if n > a.len() {
        return Err(OpucError::IndexOutOfRange {
            index: n,
            len: a.len(),
        });
    }
    Ok(OpucFamily::from_coefficients(a.as_slice(), n))
}

/// `kappa_0 ..= kappa_n`.
pub fn kappa_sequence(a: &ReflectionCoeffs, n: usize) -> Result<Vec<f64>> {
    if n > a.len() {
        return Err(OpucError::IndexOutOfRange {
            index: n,
            len: a.len(),
        });
    }
    let mut out = Vec::with_capacity(n + 1);
    let mut kappa = 1.0f64;
    out.push(kappa);
    for ak in &a.as_slice()[..n] {
        kappa /= (1.0 - ak.norm_sqr()).sqrt();
        out.push(kappa);
    }
    Ok(out)
}

/// `|sum_{k<=n} |kappa_k Phi_k(0)|^2 - kappa_n^2|`, accumulated in
/// double-double since `kappa_n^2` may be large.
pub fn eq16_residual(a: &ReflectionCoeffs, n: usize) -> Result<f64> {
    let family = szego_recurrence(a, n)?;
    let mut kappa_sq = real(1.0);
    let mut sum = real(0.0);
    for (k, d) in family.degrees().iter().enumerate() {
        if k > 0 {
            kappa_sq *= recip(real(1.0) - dd(a.as_slice()[k - 1]).norm_sqr());
        }
        sum += dd(d.phi.coeff(0)).norm_sqr() * kappa_sq;
    }
    Ok((sum - kappa_sq).hi().abs())
}

/// `max |Phi_n Psi*_n + Psi_n Phi*_n - 2 z^n / kappa_n^2|` over the grid.
///
/// Both products are of order `|Phi*_n|^2` on the unit circle while the
/// right side carries `1/kappa_n^2`, so the values are produced by running
/// the recurrences pointwise in double-double arithmetic.
pub fn identity24_residual(a: &ReflectionCoeffs, n: usize, grid: &[Complex64]) -> Result<f64> {
    if n > a.len() {
        return Err(OpucError::IndexOutOfRange {
            index: n,
            len: a.len(),
        });
    }
    let coeffs: Vec<Dd> = a.as_slice()[..n].iter().map(|&v| dd(v)).collect();
    let scale = defect_product(&coeffs) * real(2.0);
    let one = dd(ONE);
    Ok(grid
        .iter()
        .map(|&zf| {
            let z = dd(zf);
            let (mut phi, mut phi_s, mut psi, mut psi_s) = (one, one, one, one);
            let mut zn = one;
            for ak in &coeffs {
                let ac = ak.conj();
                (phi, phi_s, psi, psi_s) = (
                    z * phi - ac * phi_s,
                    phi_s - z * ak * phi,
                    z * psi + ac * psi_s,
                    psi_s + z * ak * psi,
                );
                zn *= z;
            }
            to_f64(phi * psi_s + psi * phi_s - zn.scale(scale)).norm()
        })
        .fold(0.0, f64::max))
}

/// Quadrature of `(1/2pi) int (e^{it}+z)/(e^{it}-z) (Phi_n(e^{it}) - Phi_n(z)) dsigma(t)`,
/// which reproduces `Psi_n(z)` for `n >= 1` when `mu` is the orthogonality
/// measure of `a`. At `n = 0` the integrand vanishes identically.
///
/// The density part is integrated by the trapezoid rule on the measure's
/// grid (exact for trigonometric polynomials of degree below half the grid
/// size); atoms are summed exactly.
pub fn second_kind_integral(
    a: &ReflectionCoeffs,
    mu: &MeasureSpec,
    n: usize,
    z: Complex64,
) -> Result<Complex64> {
    check_inside(z)?;
    let m = mu.grid_size();
    if 2 * n >= m {
        return Err(OpucError::QuadratureBudgetExceeded { degree: n, grid: m });
    }
    let phi = szego_recurrence(a, n)?.degree(n).phi.clone();
    let phi_z = phi.eval(z);
    let integrand = |t: f64| {
        let e = Complex64::from_polar(1.0, t);
        (e + z) / (e - z) * (phi.eval(e) - phi_z)
    };
    let dens: Complex64 = mu
        .density()
        .iter()
        .enumerate()
        .filter(|(_, w)| **w != 0.0)
        .map(|(j, &w)| integrand(mu.theta(j)) * w)
        .sum::<Complex64>()
        / m as f64;
    let atoms: Complex64 = mu
        .atoms()
        .iter()
        .map(|at| integrand(at.theta) * (at.mass / (2.0 * std::f64::consts::PI)))
        .sum();
    Ok(dens + atoms)
}

/// The same integral evaluated exactly from the moments `c_0 ..= c_n` of the
/// measure: the integrand is a polynomial of degree `n` in `e^{it}`, and
/// `(1/2pi) int e^{ijt} dsigma = conj(c_j)`.
pub fn second_kind_from_moments(
    a: &ReflectionCoeffs,
    moments: &[Complex64],
    n: usize,
    z: Complex64,
) -> Result<Complex64> {
    check_inside(z)?;
    if moments.len() < n + 1 {
        return Err(OpucError::IndexOutOfRange {
            index: n,
            len: moments.len(),
        });
    }
    let phi = szego_recurrence(a, n)?.degree(n).phi.clone();
    if n == 0 {
        return Ok(ZERO);
    }
    // (Phi(w) - Phi(z)) / (w - z) by synthetic division
    let p = phi.coeffs();
    let mut q = vec![ZERO; n];
    q[n - 1] = p[n];
    for k in (1..n).rev() {
        q[k - 1] = p[k] + z * q[k];
    }
    let quotient = Poly::new(q);
    let integrand = &Poly::new(vec![z, ONE]) * &quotient;
    Ok(integrand
        .coeffs()
        .iter()
        .zip(moments)
        .map(|(r, c)| r * c.conj())
        .sum())
}

/// `Psi*_n(z) / Phi*_n(z)`, the degree-`n` approximant of the Carathéodory function.
pub fn caratheodory_approx(a: &ReflectionCoeffs, n: usize, z: Complex64) -> Result<Complex64> {
    check_inside(z)?;
    let family = szego_recurrence(a, n)?;
    let d = family.degree(n);
    let den = d.phi_star.eval(z);
    if den.norm() < 1e-12 {
        return Err(OpucError::NumericalPoleDetected {
            modulus: den.norm(),
        });
    }
    Ok(d.psi_star.eval(z) / den)
}

fn check_inside(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(OpucError::DomainError(format!(
            "need |z| < 1, got {}",
            z.norm()
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SzegoVerdict {
    SzegoClassLikely,
    DivergentLikely,
    Inconclusive,
}

/// Partial sums, products and `kappa_n` for the Szegő condition, with a
/// heuristic verdict at the available depth.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SzegoReport {
    pub partial_sums: Vec<f64>,
    pub partial_products: Vec<f64>,
    pub kappa: Vec<f64>,
    pub half_tail: f64,
    pub last_quarter_growth: f64,
    pub verdict: SzegoVerdict,
}

pub fn szego_condition_report(a: &ReflectionCoeffs) -> SzegoReport {
    let trend = SquareSumTrend::new(a.as_slice());
    let kappa = trend
        .log_products
        .iter()
        .map(|l| (-0.5 * l).exp())
        .collect::<Vec<_>>();
    let verdict = match trend.combined() {
        Trend::Converges => SzegoVerdict::SzegoClassLikely,
        Trend::Diverges => SzegoVerdict::DivergentLikely,
        Trend::Inconclusive => SzegoVerdict::Inconclusive,
    };
    let mut kappa_all = vec![1.0];
    kappa_all.extend(kappa);
    SzegoReport {
        partial_products: trend.partial_products(),
        partial_sums: trend.partial_sums,
        kappa: kappa_all,
        half_tail: trend.half_tail,
        last_quarter_growth: trend.sum_growth,
        verdict,
    }
}

/// Roots of a polynomial via the eigenvalues of its companion matrix.
/// Leading coefficients below `1e-14` times the largest one are dropped
/// (they correspond to roots at infinity).
pub fn poly_roots(p: &Poly) -> Result<Vec<Complex64>> {
    let scale = p.max_abs();
    if scale == 0.0 {
        return Err(OpucError::DegenerateLeadingCoefficient);
    }
    let coeffs = p.coeffs();
    let mut deg = p.degree();
    while deg > 0 && coeffs[deg].norm() <= 1e-14 * scale {
        deg -= 1;
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[deg];
    let companion = DMatrix::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -coeffs[i] / lead
        } else if i == j + 1 {
            ONE
        } else {
            ZERO
        }
    });
    let eig = companion
        .schur()
        .eigenvalues()
        .ok_or(OpucError::DegenerateLeadingCoefficient)?;
    Ok(eig.iter().copied().collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootReport {
    pub roots: Vec<Complex64>,
    pub max_modulus: f64,
    pub all_inside: bool,
}

/// Checks that all zeros of `p` (exact degree >= 1) lie strictly inside the unit circle.
pub fn roots_in_disk_check(p: &Poly) -> Result<RootReport> {
    if p.degree() == 0 || p.leading().norm() < 1e-14 * p.max_abs().max(1.0) {
        return Err(OpucError::DegenerateLeadingCoefficient);
    }
    let roots = poly_roots(p)?;
    let max_modulus = roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    Ok(RootReport {
        all_inside: max_modulus < 1.0,
        max_modulus,
        roots,
    })
}

/// Levinson-type orthogonalization against the moments `c_0 ..= c_count`:
/// returns `a_0 .. a_{count-1}` with `a_n = -conj(Phi_{n+1}(0))`.
///
/// Each step picks `conj(a_n) = <z Phi_n, 1> / <Phi*_n, 1>` so that
/// `Phi_{n+1} = z Phi_n - conj(a_n) Phi*_n` is orthogonal to `1`, where
/// `<g, 1> = sum_j g_j conj(c_j)`.
pub fn reflection_from_moments(moments: &[Complex64], count: usize) -> Result<ReflectionCoeffs> {
    if moments.len() < count + 1 {
        return Err(OpucError::IndexOutOfRange {
            index: count,
            len: moments.len(),
        });
    }
    let c0 = moments[0].re;
    if !(c0 > 0.0) {
        return Err(OpucError::DomainError(format!(
            "moment c_0 = {c0} is not positive"
        )));
    }
    let mut phi = vec![ONE];
    let mut norm = c0;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let inner: Complex64 = phi
            .iter()
            .enumerate()
            .map(|(j, p)| p * moments[j + 1].conj())
            .sum();
        let a_conj = inner / norm;
        let a = a_conj.conj();
        if !(a.norm() < 1.0) {
            return Err(OpucError::InvalidCoefficient {
                index: n,
                modulus: a.norm(),
            });
        }
        let star: Vec<Complex64> = phi.iter().rev().map(|c| c.conj()).collect();
        let mut next = vec![ZERO; n + 2];
        for j in 0..=n {
            next[j + 1] += phi[j];
            next[j] -= a_conj * star[j];
        }
        phi = next;
        norm *= 1.0 - a.norm_sqr();
        out.push(a);
    }
    ReflectionCoeffs::new(out)
}
