//! Special functions and quadrature shared by the pricing and expansion code.

mod binomial;
mod hermite;
mod normal;
mod quadrature;

pub use binomial::{binom_ccdf, binom_cdf, binom_cdf_exact, binom_pmf, binom_pmf_log, ln_choose};
pub use hermite::{hermite, hermite_poly};
pub use normal::{norm_cdf, norm_pdf, std_normal_cdf};
pub use quadrature::{
    gaussian_tail_bound, integrate_adaptive, integrate_gaussian_tail, Quadrature, QuadratureSpec,
};

use crate::error::{Error, Result};

/// A real number in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::domain(format!("probability out of range: {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}
