//! Complex polynomials with an explicit nominal degree, and truncated
//! power series on the unit disk.
//!
//! Every recurrence in the crate is built from these two value types. A
//! [`Poly`] keeps its nominal degree even when the leading coefficient
//! vanishes, so that the `*`-reversal `p*(z) = z^n conj(p(1/conj z))` is
//! always taken with respect to the intended degree. A [`Series`] is a
//! Taylor prefix of fixed length; binary operations truncate to the
//! shorter operand.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{OpucError, Result};

/// Base scalar type.
pub type ComplexVal = Complex64;

/// Default truncation order for series computations.
pub const DEFAULT_TRUNCATION: usize = 128;

/// Below this modulus a divisor's constant term is treated as zero.
pub const DIV_FLOOR: f64 = 1e-12;

/// Largest constant term accepted by a structural division by `z`.
pub const Z_DIV_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn all_finite(c: &[Complex64]) -> bool {
    c.iter().all(|v| v.re.is_finite() && v.im.is_finite())
}

/// Polynomial with ascending coefficients and nominal degree `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    /// Builds a polynomial whose nominal degree is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a polynomial needs at least one coefficient"
        );
        debug_assert!(all_finite(&coeffs), "non-finite polynomial coefficient");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    /// Identically zero polynomial of nominal degree `degree`.
    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![ZERO; degree + 1],
        }
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![ZERO; n + 1];
        coeffs[n] = ONE;
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    /// Conjugate-reversed polynomial with respect to the nominal degree.
    pub fn star(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().rev().map(|c| c.conj()).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Multiplies by `z`, raising the nominal degree by one.
    pub fn mul_z(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Structural division by `z`: the constant term must vanish to within
    /// [`Z_DIV_TOL`]; the nominal degree drops by one.
    pub fn div_z(&self) -> Result<Poly> {
        let c0 = self.coeffs[0].norm();
        if c0 > Z_DIV_TOL {
            return Err(OpucError::NonZeroConstantTerm { modulus: c0 });
        }
        if self.coeffs.len() == 1 {
            return Ok(Poly::zero(0));
        }
        Ok(Poly {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn scale(&self, c: Complex64) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&v| v * c).collect(),
        }
    }

    /// Raises the nominal degree to `degree` by padding with zeros.
    pub fn with_degree(&self, degree: usize) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < degree + 1 {
            coeffs.resize(degree + 1, ZERO);
        }
        Poly { coeffs }
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficientwise deviation, padding the shorter operand with zeros.
    pub fn max_deviation(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    pub fn to_series(&self, len: usize) -> Series {
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().take(len).copied().collect();
        coeffs.resize(len, ZERO);
        Series::new(coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly {
            coeffs: (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly {
            coeffs: (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(-ONE)
    }
}

/// Truncated Taylor series `sum_{k < N} c_k z^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    coeffs: Vec<Complex64>,
}

impl Series {
    /// # Panics
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        debug_assert!(all_finite(&coeffs), "non-finite series coefficient");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![ZERO; len])
    }

    pub fn constant(c: Complex64, len: usize) -> Self {
        let mut coeffs = vec![ZERO; len];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn one(len: usize) -> Self {
        Self::constant(ONE, len)
    }

    /// The series of `z`, truncated to `len` terms.
    pub fn z(len: usize) -> Self {
        let mut coeffs = vec![ZERO; len];
        if len > 1 {
            coeffs[1] = ONE;
        }
        Self::new(coeffs)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn truncate(&self, len: usize) -> Series {
        Series::new(self.coeffs[..len.min(self.len())].to_vec())
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn scale(&self, c: Complex64) -> Series {
        Series::new(self.coeffs.iter().map(|&v| v * c).collect())
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: Complex64) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += c;
        Series::new(coeffs)
    }

    /// Multiplies by `z^k`, keeping the length.
    pub fn shift_up(&self, k: usize) -> Series {
        let n = self.len();
        let mut coeffs = vec![ZERO; n];
        if k < n {
            coeffs[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        Series::new(coeffs)
    }

    /// Structural division by `z^k`; the length shrinks by `k`.
    pub fn div_z_pow(&self, k: usize) -> Result<Series> {
        if k >= self.len() {
            return Err(OpucError::SeriesExhausted {
                needed: k + 1,
                available: self.len(),
            });
        }
        let scale = self.max_abs().max(1.0);
        for c in &self.coeffs[..k] {
            if c.norm() > Z_DIV_TOL * scale {
                return Err(OpucError::NonZeroConstantTerm { modulus: c.norm() });
            }
        }
        Ok(Series::new(self.coeffs[k..].to_vec()))
    }

    pub fn div_z(&self) -> Result<Series> {
        self.div_z_pow(1)
    }

    /// Cauchy product truncated to the shorter operand.
    pub fn mul(&self, rhs: &Series) -> Series {
        let n = self.len().min(rhs.len());
        let mut coeffs = vec![ZERO; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a == ZERO {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Series::new(coeffs)
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        self.mul(&p.to_series(self.len()))
    }

    /// Series quotient `self / rhs`, truncated to the shorter operand.
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        let b0 = rhs.coeffs[0];
        if b0.norm() <= DIV_FLOOR {
            return Err(OpucError::DivisionBySmallConstantTerm { modulus: b0.norm() });
        }
        let n = self.len().min(rhs.len());
        let inv_b0 = b0.inv();
        let mut out: Vec<Complex64> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= rhs.coeffs[j] * out[k - j];
            }
            out.push(acc * inv_b0);
        }
        Ok(Series::new(out))
    }

    pub fn recip(&self) -> Result<Series> {
        Series::one(self.len()).div(self)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficientwise deviation over the common length.
    pub fn max_deviation(&self, other: &Series) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

/// `star_reverse` in free-function form.
pub fn star_reverse(p: &Poly) -> Poly {
    p.star()
}

pub fn series_mul(a: &Series, b: &Series) -> Series {
    a.mul(b)
}

pub fn series_div(a: &Series, b: &Series) -> Result<Series> {
    a.div(b)
}

pub fn poly_eval(p: &Poly, z: Complex64) -> Complex64 {
    p.eval(z)
}

/// `count` equispaced points on the circle of the given radius, starting at angle 0.
pub fn circle_grid(radius: f64, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|j| {
            Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * j as f64 / count as f64)
        })
        .collect()
}

/// Union of circle grids at several radii.
pub fn disk_grid(radii: &[f64], count: usize) -> Vec<Complex64> {
    radii.iter().flat_map(|&r| circle_grid(r, count)).collect()
}
