//! Double-double complex arithmetic for residuals that cancel catastrophically in `f64`.

use num_complex::{Complex, Complex64};
use twofloat::TwoFloat;

pub(crate) type Dd = Complex<TwoFloat>;

pub(crate) fn dd(v: Complex64) -> Dd {
    Dd::new(TwoFloat::from(v.re), TwoFloat::from(v.im))
}

pub(crate) fn real(v: f64) -> TwoFloat {
    TwoFloat::from(v)
}

/// `prod (1 - |v|^2)`.
pub(crate) fn defect_product(values: &[Dd]) -> TwoFloat {
    values
        .iter()
        .fold(real(1.0), |acc, v| acc * (real(1.0) - v.norm_sqr()))
}

pub(crate) fn to_f64(v: Dd) -> Complex64 {
    Complex64::new(v.re.hi(), v.im.hi())
}

/// `1 / x` to double-double accuracy; `TwoFloat` division alone is only
/// accurate to about `f64` precision.
pub(crate) fn recip(x: TwoFloat) -> TwoFloat {
    let y = real(1.0 / x.hi());
    y + y * (real(1.0) - x * y)
}
