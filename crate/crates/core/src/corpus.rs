//! Named test measures with independent closed forms.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{OpucError, Result};
use crate::opuc::{OpucFamily, ReflectionCoeffs};
use crate::series::Series;
use crate::transforms::{caratheodory_from_coefficients, CaratheodoryFn, MeasureSpec};

/// Density `prod (1 - |a_j|^2) / |Phi*_m(e^{it})|^2` of the measure whose
/// coefficients are `a` followed by zeros.
pub fn bernstein_szego_density(a: &ReflectionCoeffs, theta: f64) -> f64 {
    let m = a.len();
    let fam = OpucFamily::from_coefficients(a.as_slice(), m);
    bs_density_with(&fam, a, theta)
}

fn bs_density_with(fam: &OpucFamily, a: &ReflectionCoeffs, theta: f64) -> f64 {
    let weight: f64 = a.as_slice().iter().map(|v| 1.0 - v.norm_sqr()).product();
    let d = fam.degree(fam.max_degree());
    weight
        / d.phi_star
            .eval(Complex64::from_polar(1.0, theta))
            .norm_sqr()
}

/// Bernstein-Szegő measure sampled on an `M`-point grid.
pub fn bernstein_szego_measure(a: &ReflectionCoeffs, grid_size: usize) -> Result<MeasureSpec> {
    let fam = OpucFamily::from_coefficients(a.as_slice(), a.len());
    let density = (0..grid_size)
        .map(|j| bs_density_with(&fam, a, 2.0 * PI * j as f64 / grid_size as f64))
        .collect();
    MeasureSpec::new(density, Vec::new())
}

#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    Lebesgue,
    /// `(1 - t) Lebesgue + t (atom at 0)`.
    Mixture(f64),
    /// Constant coefficients `a_n = a`.
    Geronimus(Complex64),
    BernsteinSzego(ReflectionCoeffs),
    /// Unit atom at `theta`.
    Atom(f64),
}

impl FromStr for Preset {
    type Err = OpucError;

    /// `lebesgue`, `mixture[:t]`, `geronimus:a`, `bernstein-szego:a0,a1,..`, `atom[:theta]`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        let num = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| OpucError::InvalidMeasure(format!("bad number {v:?} in preset {s:?}")))
        };
        let preset = match (name, arg) {
            ("lebesgue", None) => Preset::Lebesgue,
            ("mixture", None) => Preset::Mixture(0.5),
            ("mixture", Some(t)) => {
                let t = num(t)?;
                if !(0.0..1.0).contains(&t) {
                    return Err(OpucError::InvalidMeasure(format!(
                        "mixture weight {t} outside [0, 1)"
                    )));
                }
                Preset::Mixture(t)
            }
            ("geronimus", Some(v)) => {
                let a = num(v)?;
                if !(a.abs() < 1.0) {
                    return Err(OpucError::InvalidCoefficient {
                        index: 0,
                        modulus: a.abs(),
                    });
                }
                Preset::Geronimus(Complex64::new(a, 0.0))
            }
            ("bernstein-szego", Some(list)) => {
                let vals = list.split(',').map(num).collect::<Result<Vec<_>>>()?;
                Preset::BernsteinSzego(ReflectionCoeffs::from_real(&vals)?)
            }
            ("atom", None) => Preset::Atom(0.0),
            ("atom", Some(t)) => Preset::Atom(num(t)?.rem_euclid(2.0 * PI)),
            _ => return Err(OpucError::InvalidMeasure(format!("unknown preset {s:?}"))),
        };
        Ok(preset)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Lebesgue => write!(f, "lebesgue"),
            Preset::Mixture(t) => write!(f, "mixture:{t}"),
            Preset::Geronimus(a) => write!(f, "geronimus:{}", a.re),
            Preset::BernsteinSzego(a) => {
                let list: Vec<String> = a.as_slice().iter().map(|v| v.re.to_string()).collect();
                write!(f, "bernstein-szego:{}", list.join(","))
            }
            Preset::Atom(t) => write!(f, "atom:{t}"),
        }
    }
}

impl Preset {
    /// The measure on an `M`-point grid. Geronimus measures have no sampled
    /// form here and return `None`.
    pub fn measure(&self, grid_size: usize) -> Option<Result<MeasureSpec>> {
        match self {
            Preset::Lebesgue => Some(Ok(MeasureSpec::lebesgue(grid_size))),
            Preset::Mixture(t) => Some(MeasureSpec::mixture(*t, grid_size)),
            Preset::Geronimus(_) => None,
            Preset::BernsteinSzego(a) => Some(bernstein_szego_measure(a, grid_size)),
            Preset::Atom(t) => Some(MeasureSpec::atom(*t, grid_size)),
        }
    }

    /// `a_0 .. a_{n-1}` in closed form. Atoms have no infinite sequence.
    pub fn coefficients(&self, n: usize) -> Result<ReflectionCoeffs> {
        let v: Vec<Complex64> = match self {
            Preset::Lebesgue => vec![Complex64::new(0.0, 0.0); n],
            Preset::Mixture(t) => (0..n)
                .map(|k| Complex64::new(t / (1.0 + k as f64 * t), 0.0))
                .collect(),
            Preset::Geronimus(a) => vec![*a; n],
            Preset::BernsteinSzego(a) => {
                let mut v = a.as_slice().to_vec();
                v.resize(n, Complex64::new(0.0, 0.0));
                v.truncate(n);
                v
            }
            Preset::Atom(_) => {
                return Err(OpucError::UnimodularParameter {
                    index: 0,
                    modulus: 1.0,
                });
            }
        };
        ReflectionCoeffs::new(v)
    }

    /// Taylor coefficients `F_0 .. F_{len-1}`.
    pub fn caratheodory(&self, len: usize) -> Result<CaratheodoryFn> {
        let len = len.max(1);
        match self {
            Preset::Lebesgue => CaratheodoryFn::new(Series::one(len)),
            Preset::Mixture(t) => {
                let mut v = vec![Complex64::new(2.0 * t, 0.0); len];
                v[0] = Complex64::new(1.0, 0.0);
                CaratheodoryFn::new(Series::new(v))
            }
            Preset::Geronimus(_) | Preset::BernsteinSzego(_) => Ok(caratheodory_from_coefficients(
                &self.coefficients(len)?,
                len,
            )),
            Preset::Atom(t) => {
                let v = (0..len)
                    .map(|n| {
                        if n == 0 {
                            Complex64::new(1.0, 0.0)
                        } else {
                            Complex64::from_polar(2.0, -(n as f64) * t)
                        }
                    })
                    .collect();
                CaratheodoryFn::new(Series::new(v))
            }
        }
    }
}
