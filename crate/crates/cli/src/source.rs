//! Where the measure comes from: a JSON file, a preset, or a seeded draw.

use std::path::Path;

use opuc_core::transforms::MeasureCaratheodory;
use opuc_core::{
    caratheodory_from_coefficients, measure_moments, moments_to_caratheodory,
    reflection_from_moments, CaratheodoryFn, Complex64, HerglotzEval, MeasureSpec, OpucError,
    Preset, RationalCaratheodory, ReflectionCoeffs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::CliError;

/// Grid for the density part of presets whose density is constant.
const PRESET_GRID: usize = 64;

#[derive(Debug, Clone)]
pub enum Source {
    Measure(MeasureSpec),
    /// A finite list; every later coefficient is zero.
    Coefficients(ReflectionCoeffs),
    /// `c_0, c_1, ...` with `c_0 = 1`.
    Moments(Vec<Complex64>),
    Preset(Preset),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComplexJson {
    Pair {
        re: f64,
        #[serde(default)]
        im: f64,
    },
    Real(f64),
}

impl From<ComplexJson> for Complex64 {
    fn from(v: ComplexJson) -> Self {
        match v {
            ComplexJson::Pair { re, im } => Complex64::new(re, im),
            ComplexJson::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientFile {
    coefficients: Vec<ComplexJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MomentFile {
    moments: Vec<ComplexJson>,
}

fn complex_vec(v: Vec<ComplexJson>) -> Vec<Complex64> {
    v.into_iter().map(Complex64::from).collect()
}

impl Source {
    /// Reads a measure spec, `{"coefficients": [..]}`, `{"moments": [..]}`
    /// or a bare array of moments.
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Schema(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| CliError::Schema(format!("invalid JSON: {e}")))?;
        let schema = |e: serde_json::Error| CliError::Schema(e.to_string());
        if value.is_array() {
            let m: Vec<ComplexJson> = serde_json::from_value(value).map_err(schema)?;
            return Self::moments(complex_vec(m));
        }
        if value.get("coefficients").is_some() {
            let f: CoefficientFile = serde_json::from_value(value).map_err(schema)?;
            return Ok(Source::Coefficients(ReflectionCoeffs::new(complex_vec(
                f.coefficients,
            ))?));
        }
        if value.get("moments").is_some() {
            let f: MomentFile = serde_json::from_value(value).map_err(schema)?;
            return Self::moments(complex_vec(f.moments));
        }
        Ok(Source::Measure(MeasureSpec::from_json(text)?))
    }

    fn moments(m: Vec<Complex64>) -> Result<Self, CliError> {
        match m.first() {
            None => Err(CliError::Schema("moment list is empty".into())),
            Some(c0) if (c0 - Complex64::new(1.0, 0.0)).norm() > 1e-10 => Err(
                CliError::Normalization(format!("moment c_0 = {c0} must equal 1")),
            ),
            Some(_) => Ok(Source::Moments(m)),
        }
    }

    pub fn preset(name: &str) -> Result<Self, CliError> {
        Ok(Source::Preset(name.parse()?))
    }

    /// `count` coefficients drawn with uniform modulus in `[0, 0.9)` and uniform phase.
    pub fn random(seed: u64, count: usize) -> Result<Self, CliError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = (0..count)
            .map(|_| {
                Complex64::from_polar(
                    rng.random_range(0.0..0.9),
                    rng.random_range(0.0..std::f64::consts::TAU),
                )
            })
            .collect();
        Ok(Source::Coefficients(ReflectionCoeffs::new(a)?))
    }

    /// `F_0 .. F_{len-1}`.
    pub fn caratheodory(&self, len: usize) -> Result<CaratheodoryFn, CliError> {
        match self {
            Source::Measure(mu) => Ok(moments_to_caratheodory(&measure_moments(mu, len - 1)?)?),
            Source::Coefficients(a) => Ok(caratheodory_from_coefficients(a, len)),
            Source::Moments(m) => {
                if m.len() < len {
                    return Err(CliError::Resolution(format!(
                        "{len} moments requested, the file has {}",
                        m.len()
                    )));
                }
                Ok(moments_to_caratheodory(&m[..len])?)
            }
            Source::Preset(p) => Ok(p.caratheodory(len)?),
        }
    }

    /// `a_0 .. a_{count-1}`.
    pub fn coefficients(&self, count: usize) -> Result<ReflectionCoeffs, CliError> {
        let from_moments = |m: &[Complex64]| match reflection_from_moments(m, count) {
            Err(OpucError::InvalidCoefficient { index, .. }) => Err(CliError::Resolution(format!(
                "the measure carries orthogonal polynomials only up to degree {index}"
            ))),
            other => Ok(other?),
        };
        match self {
            Source::Coefficients(a) => {
                let mut v = a.as_slice().to_vec();
                v.resize(count.max(v.len()), Complex64::new(0.0, 0.0));
                v.truncate(count);
                Ok(ReflectionCoeffs::new(v)?)
            }
            Source::Preset(Preset::Atom(_)) => Err(CliError::Resolution(
                "a single atom carries no orthogonal polynomials beyond degree 0".into(),
            )),
            Source::Preset(p) => Ok(p.coefficients(count)?),
            Source::Measure(mu) => from_moments(&measure_moments(mu, count)?),
            Source::Moments(_) => from_moments(&self.caratheodory(count + 1)?.moments()),
        }
    }

    /// An evaluator of `F` inside the disk, exact where the source allows.
    pub fn herglotz(&self, len: usize) -> Result<Box<dyn HerglotzEval>, CliError> {
        let measure = |mu: MeasureSpec| -> Box<dyn HerglotzEval> {
            let eval: MeasureCaratheodory = mu.caratheodory_evaluator();
            Box::new(eval)
        };
        Ok(match self {
            Source::Measure(mu) => measure(mu.clone()),
            Source::Coefficients(a) => Box::new(RationalCaratheodory::from_coefficients(a)),
            Source::Moments(m) => Box::new(moments_to_caratheodory(m)?),
            Source::Preset(Preset::BernsteinSzego(a)) => {
                Box::new(RationalCaratheodory::from_coefficients(a))
            }
            Source::Preset(p) => match p.measure(PRESET_GRID) {
                Some(mu) => measure(mu?),
                None => Box::new(p.caratheodory(len)?),
            },
        })
    }
}
