//! One function per subcommand. Each returns the bytes to write and whether
//! the run counts as passing.

use opuc_core::{
    associated_caratheodory, associated_polynomials, caratheodory_to_schur, circle_grid,
    det_identity_residual, disk_grid, eq16_residual, geronimus_check, identity24_residual,
    kappa_sequence, reflection_from_moments, schur_parameters, shift_property_check,
    stieltjes_invert, szego_recurrence, theorem14_residual, theorem5_residual, wall_sequence,
    Complex64, Poly, SchurParams,
};
use serde::Serialize;

use crate::error::CliError;
use crate::output::{cx_list, fmt_f64, to_json, Cx, Table};
use crate::source::Source;
use crate::{Config, Format};

/// Tolerance of the algebraic identities.
const IDENTITY_TOL: f64 = 1e-10;

/// Tolerance of the checks that go through series division.
const PIPELINE_TOL: f64 = 1e-8;

pub struct Outcome {
    pub bytes: Vec<u8>,
    pub pass: bool,
}

fn done(bytes: Vec<u8>) -> Result<Outcome, CliError> {
    Ok(Outcome { bytes, pass: true })
}

fn render<T: Serialize>(
    format: Format,
    json: &T,
    table: impl FnOnce() -> Table,
) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => to_json(json),
        Format::Csv => table().to_csv(),
    }
}

fn complex_cells(z: Complex64) -> [String; 2] {
    [fmt_f64(z.re), fmt_f64(z.im)]
}

pub fn moments(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let c = src.caratheodory(cfg.n + 1)?.moments();
    done(render(cfg.format(), &cx_list(&c), || {
        let mut t = Table::new(vec!["n", "re", "im"]);
        for (n, &v) in c.iter().enumerate() {
            let [re, im] = complex_cells(v);
            t.push(vec![n.to_string(), re, im]);
        }
        t
    })?)
}

#[derive(Serialize)]
struct SchurOut {
    gammas: Vec<Cx>,
    terminated_at: Option<usize>,
    termination_value: Option<Cx>,
    termination_modulus: Option<f64>,
}

fn schur_params_of(cfg: &Config, src: &Source) -> Result<SchurParams, CliError> {
    let f = caratheodory_to_schur(&src.caratheodory(cfg.n + 1)?)?;
    Ok(schur_parameters(&f, cfg.depth)?)
}

pub fn schur_params(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let g = schur_params_of(cfg, src)?;
    let term = g.termination();
    let out = SchurOut {
        gammas: cx_list(g.gammas()),
        terminated_at: term.map(|t| t.index),
        termination_value: term.map(|t| t.value.into()),
        termination_modulus: term.map(|t| t.value.norm()),
    };
    done(render(cfg.format(), &out, || {
        let mut t = Table::new(vec!["n", "re", "im", "modulus"]);
        for (n, &v) in g.gammas().iter().enumerate() {
            let [re, im] = complex_cells(v);
            t.push(vec![n.to_string(), re, im, fmt_f64(v.norm())]);
        }
        t
    })?)
}

fn poly_list(p: &Poly) -> Vec<Cx> {
    cx_list(p.coeffs())
}

#[derive(Serialize)]
struct OpucDegreeOut {
    n: usize,
    kappa: f64,
    phi: Vec<Cx>,
    phi_star: Vec<Cx>,
    psi: Vec<Cx>,
    psi_star: Vec<Cx>,
}

#[derive(Serialize)]
struct OpucOut {
    coefficients: Vec<Cx>,
    degrees: Vec<OpucDegreeOut>,
}

pub fn opuc(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let a = src.coefficients(cfg.depth)?;
    let fam = szego_recurrence(&a, cfg.depth)?;
    let kappa = kappa_sequence(&a, cfg.depth)?;
    let out = OpucOut {
        coefficients: cx_list(a.as_slice()),
        degrees: fam
            .degrees()
            .iter()
            .zip(&kappa)
            .enumerate()
            .map(|(n, (d, &kappa))| OpucDegreeOut {
                n,
                kappa,
                phi: poly_list(&d.phi),
                phi_star: poly_list(&d.phi_star),
                psi: poly_list(&d.psi),
                psi_star: poly_list(&d.psi_star),
            })
            .collect(),
    };
    done(render(cfg.format(), &out, || {
        let mut t = Table::new(vec!["n", "j", "phi_re", "phi_im", "psi_re", "psi_im"]);
        for (n, d) in fam.degrees().iter().enumerate() {
            for j in 0..=n {
                let [pr, pi] = complex_cells(d.phi.coeff(j));
                let [sr, si] = complex_cells(d.psi.coeff(j));
                t.push(vec![n.to_string(), j.to_string(), pr, pi, sr, si]);
            }
        }
        t
    })?)
}

#[derive(Serialize)]
struct WallOut {
    n: usize,
    omega: f64,
    a: Vec<Cx>,
    b: Vec<Cx>,
    a_star: Vec<Cx>,
    b_star: Vec<Cx>,
}

#[derive(Serialize)]
struct WallFileOut {
    gammas: Vec<Cx>,
    terminated_at: Option<usize>,
    pairs: Vec<WallOut>,
}

pub fn wall(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let g = schur_params_of(cfg, src)?;
    if g.is_empty() {
        return Err(CliError::Resolution(
            "no Schur parameters before termination".into(),
        ));
    }
    let pairs = wall_sequence(&g, g.len() - 1)?;
    let out = WallFileOut {
        gammas: cx_list(g.gammas()),
        terminated_at: g.terminated_at(),
        pairs: pairs
            .iter()
            .map(|w| WallOut {
                n: w.n,
                omega: w.omega,
                a: poly_list(&w.a),
                b: poly_list(&w.b),
                a_star: poly_list(&w.a_star),
                b_star: poly_list(&w.b_star),
            })
            .collect(),
    };
    done(render(cfg.format(), &out, || {
        let mut t = Table::new(vec![
            "n",
            "j",
            "a_re",
            "a_im",
            "b_re",
            "b_im",
            "a_star_re",
            "a_star_im",
            "b_star_re",
            "b_star_im",
        ]);
        for w in &pairs {
            for j in 0..=w.n {
                let mut row = vec![w.n.to_string(), j.to_string()];
                for p in [&w.a, &w.b, &w.a_star, &w.b_star] {
                    row.extend(complex_cells(p.coeff(j)));
                }
                t.push(row);
            }
        }
        t
    })?)
}

#[derive(Serialize)]
struct AssociatedOut {
    k: usize,
    phi: Vec<Vec<Cx>>,
    psi: Vec<Vec<Cx>>,
    caratheodory: Vec<Cx>,
    moments: Vec<Cx>,
    coefficients: Vec<Cx>,
    shifted_base_coefficients: Vec<Cx>,
}

pub fn associated(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let k = cfg.k;
    if k > cfg.depth {
        return Err(CliError::Resolution(format!(
            "k = {k} exceeds depth {}",
            cfg.depth
        )));
    }
    let a = src.coefficients(cfg.depth)?;
    let degree = cfg.depth - k;
    let sys = associated_polynomials(&a, k, degree)?;
    let big_f = src.caratheodory(cfg.n + 1)?;
    let fk = associated_caratheodory(&big_f, &a, k)?;
    let moments = fk.moments();
    let coefficients = reflection_from_moments(&moments, degree)?;
    let out = AssociatedOut {
        k,
        phi: sys
            .family
            .degrees()
            .iter()
            .map(|d| poly_list(&d.phi))
            .collect(),
        psi: sys
            .family
            .degrees()
            .iter()
            .map(|d| poly_list(&d.psi))
            .collect(),
        caratheodory: cx_list(fk.taylor().coeffs()),
        moments: cx_list(&moments),
        coefficients: cx_list(coefficients.as_slice()),
        shifted_base_coefficients: cx_list(&a.as_slice()[k..]),
    };
    done(render(cfg.format(), &out, || {
        let mut t = Table::new(vec![
            "n",
            "moment_re",
            "moment_im",
            "coefficient_re",
            "coefficient_im",
        ]);
        for (n, &c) in moments.iter().enumerate() {
            let mut row = vec![n.to_string()];
            row.extend(complex_cells(c));
            match coefficients.as_slice().get(n) {
                Some(&v) => row.extend(complex_cells(v)),
                None => row.extend([String::new(), String::new()]),
            }
            t.push(row);
        }
        t
    })?)
}

#[derive(Serialize)]
struct CdfOut {
    r: f64,
    thetas: Vec<f64>,
    values: Vec<f64>,
}

pub fn recover(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let f = src.herglotz(cfg.n + 1)?;
    let cdf = stieltjes_invert(f.as_ref(), cfg.r, cfg.grid)?;
    let out = CdfOut {
        r: cfg.r,
        thetas: cdf.thetas.clone(),
        values: cdf.values.clone(),
    };
    done(render(cfg.format(), &out, || {
        let mut t = Table::new(vec!["theta", "nu"]);
        for (&th, &v) in cdf.thetas.iter().zip(&cdf.values) {
            t.push(vec![fmt_f64(th), fmt_f64(v)]);
        }
        t
    })?)
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    residual: f64,
    tolerance: f64,
    pass: bool,
}

#[derive(Serialize)]
struct Summary {
    pass: bool,
}

#[derive(Serialize)]
struct Report {
    checks: Vec<Check>,
    summary: Summary,
}

fn check(name: &'static str, residual: f64, tolerance: f64) -> Check {
    Check {
        name,
        residual,
        tolerance,
        pass: residual <= tolerance,
    }
}

fn max_of(values: impl IntoIterator<Item = Result<f64, CliError>>) -> Result<f64, CliError> {
    values
        .into_iter()
        .try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}

/// Identity suites on the coefficients `a_0 .. a_{depth-1}` of the source
/// and on its Carathéodory function `F_0 .. F_N`.
pub fn verify(cfg: &Config, src: &Source) -> Result<Outcome, CliError> {
    let depth = cfg.depth;
    if depth == 0 {
        return Err(CliError::Resolution("verify needs depth >= 1".into()));
    }
    let a = src.coefficients(depth)?;
    let big_f = src.caratheodory(cfg.n + 1)?;
    let g = SchurParams::new(a.as_slice().to_vec())?;
    let circle = circle_grid(1.0, 256);
    let disk = disk_grid(&[0.5, 1.0], 128);
    let k_max = depth.min(5);

    let det = wall_sequence(&g, depth - 1)?
        .iter()
        .map(|w| det_identity_residual(w, &circle))
        .fold(0.0, f64::max);
    let wall_opuc = max_of((0..depth).map(|n| Ok(theorem5_residual(&g, n, &disk)?)))?;
    let kappa = eq16_residual(&a, depth)?;
    let second_kind = identity24_residual(&a, depth, &disk)?;
    let matrix =
        max_of((0..=k_max).map(|k| Ok(theorem14_residual(&a, k, (depth - k).min(20), &disk)?)))?;
    let shift = max_of((0..=k_max).map(|k| {
        let n = (cfg.n + 1).saturating_sub(k + 3).min(10);
        Ok(shift_property_check(&big_f, k, n)?.max_deviation)
    }))?;
    let geronimus = geronimus_check(&big_f, depth)?;
    let against_source = geronimus
        .gammas
        .iter()
        .zip(a.as_slice())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);

    let checks = vec![
        check("determinant_identity", det, IDENTITY_TOL),
        check("wall_opuc_relations", wall_opuc, IDENTITY_TOL),
        check("kappa_sum_identity", kappa, IDENTITY_TOL),
        check("second_kind_wronskian", second_kind, IDENTITY_TOL),
        check("associated_matrix_identity", matrix, IDENTITY_TOL),
        check("associated_shift_law", shift, PIPELINE_TOL),
        check(
            "geronimus_coefficients",
            geronimus.max_coefficient_deviation,
            PIPELINE_TOL,
        ),
        check(
            "geronimus_iterates",
            geronimus.max_iterate_deviation,
            PIPELINE_TOL,
        ),
        check(
            "schur_parameters_match_source",
            against_source,
            PIPELINE_TOL,
        ),
    ];
    let pass = checks.iter().all(|c| c.pass);
    let report = Report {
        checks,
        summary: Summary { pass },
    };
    let bytes = render(cfg.format(), &report, || {
        let mut t = Table::new(vec!["name", "residual", "tolerance", "pass"]);
        for c in &report.checks {
            t.push(vec![
                c.name.to_string(),
                fmt_f64(c.residual),
                fmt_f64(c.tolerance),
                c.pass.to_string(),
            ]);
        }
        t
    })?;
    Ok(Outcome { bytes, pass })
}
