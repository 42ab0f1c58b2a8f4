//! Schur functions, orthogonal polynomials on the unit circle and the
//! transforms between measures, Carathéodory functions and Schur functions.
//!
//! All computations work on truncated Taylor series ([`Series`]) and
//! polynomials ([`Poly`]) with `Complex64` coefficients.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod associated;
pub mod corpus;
pub mod diagnostics;
pub mod error;
pub mod opuc;
mod precise;
pub mod schur;
pub mod series;
pub mod transforms;

pub use num_complex::Complex64;

/// Complex scalar used throughout.
pub type ComplexVal = Complex64;

pub use associated::{
    associated_caratheodory, associated_moments, associated_polynomials, boyd_convergence_report,
    geronimus_check, geronimus_check_measure, remark13_comparison, shift_property_check,
    shift_property_check_measure, theorem14_residual, theorem5_residual, AssociatedSystem,
};
pub use corpus::{bernstein_szego_density, bernstein_szego_measure, Preset};
pub use diagnostics::{SquareSumTrend, Trend};
pub use error::{OpucError, Result};
pub use opuc::{
    caratheodory_approx, eq16_residual, identity24_residual, kappa_sequence, poly_roots,
    reflection_from_moments, roots_in_disk_check, second_kind_from_moments, second_kind_integral,
    szego_condition_report, szego_recurrence, OpucDegree, OpucFamily, ReflectionCoeffs,
    SzegoVerdict,
};
pub use schur::{
    approximant, approximant_gaps, det_identity_residual, schur_parameters, schur_run, schur_step,
    theorem1_error_bound, wall_cf_convergents, wall_polynomials, wall_sequence, SchurParams,
    WallPair,
};
pub use series::{circle_grid, disk_grid, star_reverse, Poly, Series, DEFAULT_TRUNCATION};
pub use transforms::{
    caratheodory_from_coefficients, caratheodory_to_schur, extreme_point_report, measure_moments,
    moments_to_caratheodory, outer_function, schur_to_caratheodory, stieltjes_invert, Atom,
    CaratheodoryFn, CdfSamples, ExtremeVerdict, HerglotzEval, MeasureSpec, RationalCaratheodory,
    SchurSource,
};
