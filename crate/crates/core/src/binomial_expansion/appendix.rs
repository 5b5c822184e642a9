use crate::error::{Error, Result};
use crate::numerics::{
    hermite_poly, integrate_gaussian_tail, norm_cdf, norm_pdf, Quadrature, QuadratureSpec,
};
use std::f64::consts::PI;

/// Both sides of a Gaussian Fourier-transform identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppendixCheck {
    pub m: u32,
    pub y: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub quadrature: Quadrature,
}

/// For m >= 1, (1/pi) int_0^inf x^m e^{-x^2/2} trig(yx) dx with trig = sin for odd m and
/// cos for even m, against (-1)^{floor(m/2)} phi(y) He_m(y).
///
/// For m = 0 the left side is the sine transform of e^{-x^2/2}/x, which equals Phi(y) - 1/2.
pub fn appendix_identity_check(m: u32, y: f64, spec: &QuadratureSpec) -> Result<AppendixCheck> {
    if m > 11 {
        return Err(Error::domain(format!("m must be in 0..=11, got {m}")));
    }
    if !y.is_finite() {
        return Err(Error::domain("y must be finite"));
    }
    let gauss = |x: f64| (-0.5 * x * x).exp() / PI;
    let quadrature = if m == 0 {
        let f = |x: f64| {
            if x == 0.0 {
                y / PI
            } else {
                (y * x).sin() / x * gauss(x)
            }
        };
        integrate_gaussian_tail(f, -1, 1.0 / PI, 0.0, spec)?
    } else if m % 2 == 1 {
        integrate_gaussian_tail(
            |x| x.powi(m as i32) * (y * x).sin() * gauss(x),
            m as i32,
            1.0 / PI,
            0.0,
            spec,
        )?
    } else {
        integrate_gaussian_tail(
            |x| x.powi(m as i32) * (y * x).cos() * gauss(x),
            m as i32,
            1.0 / PI,
            0.0,
            spec,
        )?
    };
    let rhs = if m == 0 {
        norm_cdf(y) - 0.5
    } else {
        let sign = if (m / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * norm_pdf(y) * hermite_poly(m, y)?
    };
    Ok(AppendixCheck {
        m,
        y,
        lhs: quadrature.value,
        rhs,
        quadrature,
    })
}
