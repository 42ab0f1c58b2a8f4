//! Bridges between measures, Carathéodory functions and Schur functions.
//!
//! A probability-normalized measure `sigma` on `[0, 2pi)` (total mass `2pi`)
//! has moments `c_n = (1/2pi) int e^{-int} dsigma(t)` and Carathéodory function
//!
//! ```text
//! F(z) = (1/2pi) int (e^{it} + z) / (e^{it} - z) dsigma(t) = 1 + 2 sum_{n>=1} c_n z^n.
//! ```
//!
//! The Schur function of `F` is `f = (F - 1) / (z (F + 1))`, and conversely
//! `F = (1 + z f) / (1 - z f)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::diagnostics::{SquareSumTrend, Trend};
use crate::error::{OpucError, Result};
use crate::opuc::{OpucFamily, ReflectionCoeffs};
use crate::schur::{schur_parameters, wall_polynomials, SchurParams};
use crate::series::{Poly, Series};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const TWO_PI: f64 = 2.0 * PI;

/// Allowed deviation of the total mass from `2pi`.
pub const MASS_TOL: f64 = 1e-8;

/// Radius offset used for the boundary proxy in [`extreme_point_report`].
pub const BOUNDARY_MARGIN: f64 = 1e-3;

/// Samples at or below this value make `log g` singular.
pub const UNDERFLOW_FLOOR: f64 = 1e-300;

/// A point mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub theta: f64,
    pub mass: f64,
}

/// Positive measure on `[0, 2pi)`: density samples on `t_j = 2 pi j / M`
/// plus finitely many atoms, with total mass `2pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureSpec {
    density: Vec<f64>,
    atoms: Vec<Atom>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MeasureSpecJson {
    grid_size: usize,
    density: DensityJson,
    #[serde(default)]
    atoms: Vec<Atom>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DensityJson {
    Samples(Vec<f64>),
    Preset {
        preset: String,
        #[serde(default)]
        scale: Option<f64>,
    },
}

#[derive(Serialize)]
struct MeasureSpecOut<'a> {
    grid_size: usize,
    density: &'a [f64],
    atoms: &'a [Atom],
}

impl MeasureSpec {
    /// Validates samples and atoms; the total mass must be `2pi` within [`MASS_TOL`].
    pub fn new(density: Vec<f64>, atoms: Vec<Atom>) -> Result<Self> {
        if density.len() < 2 {
            return Err(OpucError::InvalidMeasure(
                "grid size must be at least 2".into(),
            ));
        }
        if let Some(j) = density.iter().position(|w| !w.is_finite() || *w < 0.0) {
            return Err(OpucError::InvalidMeasure(format!(
                "density sample {j} is negative or not finite"
            )));
        }
        for (i, at) in atoms.iter().enumerate() {
            if !(at.theta >= 0.0 && at.theta < TWO_PI) {
                return Err(OpucError::InvalidMeasure(format!(
                    "atom {i} has theta {} outside [0, 2pi)",
                    at.theta
                )));
            }
            if !(at.mass > 0.0 && at.mass.is_finite()) {
                return Err(OpucError::InvalidMeasure(format!(
                    "atom {i} has non-positive mass {}",
                    at.mass
                )));
            }
        }
        let spec = Self { density, atoms };
        let mass = spec.total_mass();
        if (mass - TWO_PI).abs() > MASS_TOL {
            return Err(OpucError::MassNormalization { mass });
        }
        Ok(spec)
    }

    /// Parses the JSON form
    /// `{ "grid_size": M, "density": [..] | {"preset": "lebesgue"|"constant", "scale": s}, "atoms": [..] }`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MeasureSpecJson =
            serde_json::from_str(text).map_err(|e| OpucError::InvalidMeasure(e.to_string()))?;
        let density = match raw.density {
            DensityJson::Samples(v) => {
                if v.len() != raw.grid_size {
                    return Err(OpucError::InvalidMeasure(format!(
                        "density has {} samples, grid_size is {}",
                        v.len(),
                        raw.grid_size
                    )));
                }
                v
            }
            DensityJson::Preset { preset, scale } => match preset.as_str() {
                "lebesgue" | "constant" => vec![scale.unwrap_or(1.0); raw.grid_size],
                other => {
                    return Err(OpucError::InvalidMeasure(format!(
                        "unknown density preset {other:?}"
                    )))
                }
            },
        };
        Self::new(density, raw.atoms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MeasureSpecOut {
            grid_size: self.grid_size(),
            density: &self.density,
            atoms: &self.atoms,
        })
        .expect("measure serialization cannot fail")
    }

    /// Normalized arc length, density 1.
    pub fn lebesgue(grid_size: usize) -> Self {
        Self::new(vec![1.0; grid_size], Vec::new()).expect("lebesgue measure is valid")
    }

    /// `(1 - t) * Lebesgue + t * (atom at 0)`.
    pub fn mixture(t: f64, grid_size: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(OpucError::InvalidMeasure(format!(
                "mixture weight {t} outside [0, 1]"
            )));
        }
        let atoms = if t > 0.0 {
            vec![Atom {
                theta: 0.0,
                mass: TWO_PI * t,
            }]
        } else {
            Vec::new()
        };
        Self::new(vec![1.0 - t; grid_size], atoms)
    }

    /// Single atom of mass `2pi`; the density grid is all zeros.
    pub fn atom(theta: f64, grid_size: usize) -> Result<Self> {
        Self::new(
            vec![0.0; grid_size],
            vec![Atom {
                theta: theta.rem_euclid(TWO_PI),
                mass: TWO_PI,
            }],
        )
    }

    pub fn grid_size(&self) -> usize {
        self.density.len()
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn theta(&self, j: usize) -> f64 {
        TWO_PI * j as f64 / self.grid_size() as f64
    }

    /// Trapezoid mass of the density plus the atom masses.
    pub fn total_mass(&self) -> f64 {
        let m = self.grid_size() as f64;
        self.density.iter().sum::<f64>() * TWO_PI / m
            + self.atoms.iter().map(|a| a.mass).sum::<f64>()
    }

    /// Whether the measure can carry orthogonal polynomials up to `degree`.
    pub fn supports_degree(&self, degree: usize) -> bool {
        self.density.iter().any(|&w| w > 0.0) || self.atoms.len() > degree
    }

    /// Carathéodory function with the density part expanded up to the
    /// Nyquist frequency and the atoms kept in closed form.
    pub fn caratheodory_evaluator(&self) -> MeasureCaratheodory {
        let nyquist = self.grid_size() / 2;
        let density_moments = density_moments(&self.density, nyquist.max(1));
        MeasureCaratheodory {
            density_moments,
            atoms: self.atoms.clone(),
        }
    }
}

/// `d_n = (1/M) sum_j w_j e^{-i n t_j}` for `n < count`.
fn density_moments(density: &[f64], count: usize) -> Vec<Complex64> {
    let m = density.len();
    let twiddle: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(1.0, -TWO_PI * k as f64 / m as f64))
        .collect();
    (0..count)
        .map(|n| {
            density
                .iter()
                .enumerate()
                .filter(|(_, w)| **w != 0.0)
                .map(|(j, &w)| twiddle[(n * j) % m] * w)
                .sum::<Complex64>()
                / m as f64
        })
        .collect()
}

/// `c_0 ..= c_count` of a measure. Requires `count < M/2`.
pub fn measure_moments(mu: &MeasureSpec, count: usize) -> Result<Vec<Complex64>> {
    let m = mu.grid_size();
    if 2 * count >= m {
        return Err(OpucError::ResolutionExceeded {
            requested: count,
            grid: m,
        });
    }
    let mut c = density_moments(&mu.density, count + 1);
    for (n, cn) in c.iter_mut().enumerate() {
        for at in &mu.atoms {
            *cn += Complex64::from_polar(at.mass / TWO_PI, -(n as f64) * at.theta);
        }
    }
    c[0] = ONE;
    Ok(c)
}

/// Carathéodory function stored by its Taylor coefficients; `F(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryFn {
    taylor: Series,
}

impl CaratheodoryFn {
    /// Accepts a series whose constant term is 1 within `1e-10`; the
    /// constant term is then pinned to exactly 1.
    pub fn new(taylor: Series) -> Result<Self> {
        let c0 = taylor.coeff(0);
        if (c0 - ONE).norm() > 1e-10 {
            return Err(OpucError::DomainError(format!(
                "Carathéodory function needs F(0) = 1, got {c0}"
            )));
        }
        let mut coeffs = taylor.into_coeffs();
        coeffs[0] = ONE;
        Ok(Self {
            taylor: Series::new(coeffs),
        })
    }

    pub fn taylor(&self) -> &Series {
        &self.taylor
    }

    pub fn len(&self) -> usize {
        self.taylor.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c_0 = 1`, `c_n = F_n / 2`.
    pub fn moments(&self) -> Vec<Complex64> {
        self.taylor
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, &v)| if n == 0 { ONE } else { v / 2.0 })
            .collect()
    }

    /// `min Re F` over a circle; positive for a genuine Carathéodory function.
    pub fn min_real_part(&self, radius: f64, count: usize) -> f64 {
        crate::series::circle_grid(radius, count)
            .into_iter()
            .map(|z| self.taylor.eval(z).re)
            .fold(f64::INFINITY, f64::min)
    }

    /// `1 / F`, the Carathéodory function of the second-kind system.
    pub fn reciprocal(&self) -> Result<CaratheodoryFn> {
        CaratheodoryFn::new(self.taylor.recip()?)
    }
}

/// Anything that can evaluate a Carathéodory function inside the disk.
pub trait HerglotzEval {
    fn eval(&self, z: Complex64) -> Complex64;

    /// `(1/2pi) int_0^theta Re F(r e^{it}) dt` at each of the ascending,
    /// non-negative angles in `thetas`.
    ///
    /// The default integrates with 5-point Gauss-Legendre on panels no wider
    /// than `(1 - r) / 2`, which resolves the Poisson peaks of atoms.
    fn cumulative_real_part(&self, r: f64, thetas: &[f64]) -> Vec<f64> {
        const NODES: [f64; 5] = [
            -0.906_179_845_938_664,
            -0.538_469_310_105_683_1,
            0.0,
            0.538_469_310_105_683_1,
            0.906_179_845_938_664,
        ];
        const WEIGHTS: [f64; 5] = [
            0.236_926_885_056_189_1,
            0.478_628_670_499_366_5,
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_5,
            0.236_926_885_056_189_1,
        ];
        let panel = 0.5 * (1.0 - r);
        let mut out = Vec::with_capacity(thetas.len());
        let (mut acc, mut prev) = (0.0f64, 0.0f64);
        for &t in thetas {
            let width = t - prev;
            let pieces = ((width / panel).ceil() as usize).max(1);
            let h = width / pieces as f64;
            for p in 0..pieces {
                let mid = prev + (p as f64 + 0.5) * h;
                for (x, w) in NODES.iter().zip(WEIGHTS) {
                    let z = Complex64::from_polar(r, mid + 0.5 * h * x);
                    acc += 0.5 * h * w * self.eval(z).re;
                }
            }
            out.push(acc / TWO_PI);
            prev = t;
        }
        out
    }
}

impl HerglotzEval for CaratheodoryFn {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.taylor.eval(z)
    }

    /// Term-by-term integration of the truncated series.
    fn cumulative_real_part(&self, r: f64, thetas: &[f64]) -> Vec<f64> {
        series_cumulative(self.taylor.coeffs(), r, thetas)
    }
}

fn series_cumulative(coeffs: &[Complex64], r: f64, thetas: &[f64]) -> Vec<f64> {
    let scaled: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * r.powi(n as i32) / Complex64::new(0.0, n as f64))
        .collect();
    thetas
        .iter()
        .map(|&t| {
            let step = Complex64::from_polar(1.0, t);
            let mut e = step;
            let mut acc = coeffs[0].re * t;
            for s in &scaled {
                acc += (s * (e - ONE)).re;
                e *= step;
            }
            acc / TWO_PI
        })
        .collect()
}

/// Closed-form `F` of a [`MeasureSpec`]: Fourier-expanded density plus
/// exact Herglotz kernels for the atoms.
#[derive(Debug, Clone)]
pub struct MeasureCaratheodory {
    density_moments: Vec<Complex64>,
    atoms: Vec<Atom>,
}

impl MeasureCaratheodory {
    fn density_series(&self) -> Vec<Complex64> {
        self.density_moments
            .iter()
            .enumerate()
            .map(|(n, &d)| if n == 0 { d } else { d * 2.0 })
            .collect()
    }
}

impl HerglotzEval for MeasureCaratheodory {
    fn eval(&self, z: Complex64) -> Complex64 {
        let dens = self
            .density_series()
            .iter()
            .rev()
            .fold(ZERO, |acc, &c| acc * z + c);
        let atoms: Complex64 = self
            .atoms
            .iter()
            .map(|at| {
                let e = Complex64::from_polar(1.0, at.theta);
                (e + z) / (e - z) * (at.mass / TWO_PI)
            })
            .sum();
        dens + atoms
    }

    fn cumulative_real_part(&self, r: f64, thetas: &[f64]) -> Vec<f64> {
        let mut out = series_cumulative(&self.density_series(), r, thetas);
        // antiderivative of the Poisson kernel, continued across multiples of 2pi
        let c = (1.0 + r) / (1.0 - r);
        let g = |u: f64| {
            let k = ((u + PI) / TWO_PI).floor();
            let v = u - TWO_PI * k;
            2.0 * (c * (0.5 * v).tan()).atan() + TWO_PI * k
        };
        for at in &self.atoms {
            let w = at.mass / (TWO_PI * TWO_PI);
            let base = g(-at.theta);
            for (v, &t) in out.iter_mut().zip(thetas) {
                *v += w * (g(t - at.theta) - base);
            }
        }
        out
    }
}

/// `F = P / Q` for polynomials, e.g. `Psi*_m / Phi*_m` of a Bernstein-Szegő measure.
#[derive(Debug, Clone)]
pub struct RationalCaratheodory {
    pub numerator: Poly,
    pub denominator: Poly,
}

impl HerglotzEval for RationalCaratheodory {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.numerator.eval(z) / self.denominator.eval(z)
    }
}

impl RationalCaratheodory {
    /// Exact `F` for the coefficient sequence `a` followed by zeros.
    pub fn from_coefficients(a: &ReflectionCoeffs) -> Self {
        let m = a.len();
        let fam = OpucFamily::from_coefficients(a.as_slice(), m);
        let d = fam.degree(m);
        Self {
            numerator: d.psi_star.clone(),
            denominator: d.phi_star.clone(),
        }
    }
}

/// Truncated series of `F = Psi*_m / Phi*_m` with `m = a.len()`. This is the
/// exact Carathéodory function when the coefficients vanish beyond `m`, and
/// agrees with the one of any continuation through order `m`.
pub fn caratheodory_from_coefficients(a: &ReflectionCoeffs, len: usize) -> CaratheodoryFn {
    let rational = RationalCaratheodory::from_coefficients(a);
    let num = rational.numerator.to_series(len);
    let den = rational.denominator.to_series(len);
    // Phi*_m(0) = 1
    CaratheodoryFn::new(num.div(&den).expect("Phi*(0) = 1")).expect("Psi*(0) = 1")
}

/// `F = (1 + z f) / (1 - z f)`, same length as `f`.
pub fn schur_to_caratheodory(f: &Series) -> Result<CaratheodoryFn> {
    if !(f.coeff(0).norm() < 1.0) {
        return Err(OpucError::DomainError(format!(
            "Schur function needs |f(0)| < 1, got {}",
            f.coeff(0).norm()
        )));
    }
    let zf = f.shift_up(1);
    let num = zf.add_constant(ONE);
    let den = zf.scale(-ONE).add_constant(ONE);
    CaratheodoryFn::new(num.div(&den)?)
}

/// `f = (F - 1) / (z (F + 1))`; the result is one term shorter than `F`.
pub fn caratheodory_to_schur(big_f: &CaratheodoryFn) -> Result<Series> {
    let taylor = big_f.taylor();
    if taylor.len() < 2 {
        return Err(OpucError::SeriesExhausted {
            needed: 2,
            available: taylor.len(),
        });
    }
    let mut num = taylor.add_constant(-ONE).into_coeffs();
    num[0] = ZERO;
    let den = taylor.add_constant(ONE);
    Series::new(num).div(&den)?.div_z()
}

/// `F = 1 + 2 sum c_n z^n` from moments with `c_0 = 1`.
pub fn moments_to_caratheodory(c: &[Complex64]) -> Result<CaratheodoryFn> {
    if c.is_empty() || (c[0] - ONE).norm() > 1e-12 {
        return Err(OpucError::DomainError(
            "moment sequence must start with c_0 = 1".into(),
        ));
    }
    CaratheodoryFn::new(Series::new(
        c.iter()
            .enumerate()
            .map(|(n, &v)| if n == 0 { ONE } else { v * 2.0 })
            .collect(),
    ))
}

/// Samples of the recovered distribution function on `t_j = 2 pi j / M`,
/// `j = 0..=M`, normalized so that `nu(0) = 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CdfSamples {
    pub thetas: Vec<f64>,
    pub values: Vec<f64>,
}

impl CdfSamples {
    pub fn total(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    pub fn is_nondecreasing(&self, tol: f64) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0] - tol)
    }

    /// Linear interpolation, extended periodically with period `2pi` and
    /// increment [`total`](Self::total) per period.
    pub fn value_at(&self, theta: f64) -> f64 {
        let periods = (theta / TWO_PI).floor();
        let t = theta - periods * TWO_PI;
        let m = self.thetas.len() - 1;
        let h = TWO_PI / m as f64;
        let j = ((t / h).floor() as usize).min(m - 1);
        let frac = (t - self.thetas[j]) / h;
        let v = self.values[j] + frac * (self.values[j + 1] - self.values[j]);
        v + periods * self.total()
    }

    /// Mass recovered in `[center - half_width, center + half_width]`.
    pub fn mass_in_window(&self, center: f64, half_width: f64) -> f64 {
        self.value_at(center + half_width) - self.value_at(center - half_width)
    }

    pub fn max_deviation(&self, reference: &[f64]) -> f64 {
        self.values
            .iter()
            .zip(reference)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `nu(theta) = (1/2pi) int_0^theta Re F(r e^{it}) dt` on an `M`-interval grid.
pub fn stieltjes_invert<E: HerglotzEval + ?Sized>(f: &E, r: f64, m: usize) -> Result<CdfSamples> {
    if !(r > 0.0 && r < 1.0) {
        return Err(OpucError::DomainError(format!(
            "inversion radius {r} outside (0, 1)"
        )));
    }
    if m == 0 {
        return Err(OpucError::DomainError(
            "grid must have at least one interval".into(),
        ));
    }
    let thetas: Vec<f64> = (0..=m).map(|j| TWO_PI * j as f64 / m as f64).collect();
    let values = f.cumulative_real_part(r, &thetas);
    Ok(CdfSamples { thetas, values })
}

/// `exp((1/2pi) int (e^{it}+z)/(e^{it}-z) log g(t) dt)` from equispaced
/// boundary samples of `g`.
pub fn outer_function(g_boundary: &[f64], z: Complex64) -> Result<Complex64> {
    if !(z.norm() < 1.0) {
        return Err(OpucError::DomainError(format!(
            "need |z| < 1, got {}",
            z.norm()
        )));
    }
    if g_boundary.is_empty() {
        return Err(OpucError::DomainError("no boundary samples".into()));
    }
    if let Some(index) = g_boundary.iter().position(|&g| !(g > UNDERFLOW_FLOOR)) {
        return Err(OpucError::LogSingularity { index });
    }
    let m = g_boundary.len();
    let sum: Complex64 = g_boundary
        .iter()
        .enumerate()
        .map(|(j, &g)| {
            let e = Complex64::from_polar(1.0, TWO_PI * j as f64 / m as f64);
            (e + z) / (e - z) * g.ln()
        })
        .sum();
    Ok((sum / m as f64).exp())
}

/// Input of [`extreme_point_report`].
#[derive(Debug, Clone, Copy)]
pub enum SchurSource<'a> {
    Params(&'a SchurParams),
    Function(&'a Series),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremeVerdict {
    ExtremeLikely,
    NotExtremeLikely,
    Inconclusive,
}

impl From<Trend> for ExtremeVerdict {
    fn from(t: Trend) -> Self {
        match t {
            Trend::Converges => ExtremeVerdict::NotExtremeLikely,
            Trend::Diverges => ExtremeVerdict::ExtremeLikely,
            Trend::Inconclusive => ExtremeVerdict::Inconclusive,
        }
    }
}

/// Finite-depth evidence on whether `f` is an extreme point of the unit
/// ball: `sum |gamma_k|^2 = inf`, `prod (1 - |gamma_k|^2) = 0`, and the radial
/// proxy `int log(1 - |f(rho e^{it})|) dt` at `rho = 1 - BOUNDARY_MARGIN`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremeReport {
    pub depth: usize,
    pub partial_sums: Vec<f64>,
    pub partial_products: Vec<f64>,
    pub log_product: f64,
    pub product_limit_estimate: Option<f64>,
    pub boundary_log_integral: f64,
    pub terminated_at: Option<usize>,
    pub sum_verdict: ExtremeVerdict,
    pub product_verdict: ExtremeVerdict,
    pub verdict: ExtremeVerdict,
}

pub fn extreme_point_report(source: SchurSource<'_>, depth: usize) -> Result<ExtremeReport> {
    let params = match source {
        SchurSource::Params(g) => {
            let take = depth.min(g.len());
            let mut p = SchurParams::new(g.gammas()[..take].to_vec())?;
            if take == g.len() {
                p = g.clone();
            }
            p
        }
        SchurSource::Function(f) => schur_parameters(f, depth.min(f.len().saturating_sub(1)))?,
    };
    let trend = SquareSumTrend::new(params.gammas());
    let rho = 1.0 - BOUNDARY_MARGIN;
    let samples = 2048;
    let boundary_value = |z: Complex64| -> Result<Complex64> {
        match source {
            SchurSource::Function(f) => Ok(f.eval(z)),
            SchurSource::Params(_) if params.is_empty() => Ok(ZERO),
            SchurSource::Params(_) => wall_polynomials(&params, params.len() - 1)?.approximant(z),
        }
    };
    let wall = if params.is_empty() {
        None
    } else {
        Some(wall_polynomials(&params, params.len() - 1)?)
    };
    let mut log_integral = 0.0;
    for z in crate::series::circle_grid(rho, samples) {
        let v = match (&source, &wall) {
            (SchurSource::Params(_), Some(w)) => w.approximant(z)?,
            _ => boundary_value(z)?,
        };
        log_integral += (1.0 - v.norm()).max(UNDERFLOW_FLOOR).ln();
    }
    log_integral *= TWO_PI / samples as f64;

    let (sum_verdict, product_verdict, verdict) = if params.terminated_at().is_some() {
        // finite Blaschke product: unimodular on the circle
        (
            ExtremeVerdict::ExtremeLikely,
            ExtremeVerdict::ExtremeLikely,
            ExtremeVerdict::ExtremeLikely,
        )
    } else {
        (
            trend.sum_trend.into(),
            trend.product_trend.into(),
            trend.combined().into(),
        )
    };
    Ok(ExtremeReport {
        depth: params.len(),
        partial_products: trend.partial_products(),
        log_product: trend.log_products.last().copied().unwrap_or(0.0),
        product_limit_estimate: trend.product_limit_estimate(),
        partial_sums: trend.partial_sums,
        boundary_log_integral: log_integral,
        terminated_at: params.terminated_at(),
        sum_verdict,
        product_verdict,
        verdict,
    })
}
