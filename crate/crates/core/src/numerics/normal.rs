use super::Probability;
use crate::error::{Error, Result};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// Standard normal CDF.
///
/// The smaller tail is taken from `erfc` and the other side is its complement,
/// so `norm_cdf(y) + norm_cdf(-y) == 1.0` holds exactly.
pub fn norm_cdf(y: f64) -> f64 {
    let tail = 0.5 * libm::erfc(y.abs() * FRAC_1_SQRT_2);
    if y < 0.0 {
        tail
    } else {
        1.0 - tail
    }
}

pub fn norm_pdf(y: f64) -> f64 {
    (-0.5 * y * y).exp() / (2.0 * PI).sqrt()
}

/// Checked form of [`norm_cdf`].
pub fn std_normal_cdf(y: f64) -> Result<Probability> {
    if !y.is_finite() {
        return Err(Error::domain(format!(
            "normal cdf needs a finite argument, got {y}"
        )));
    }
    Ok(Probability(norm_cdf(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centre_and_reflection() {
        assert_eq!(norm_cdf(0.0), 0.5);
        for y in [0.3, 1.84, 5.0] {
            assert!((norm_cdf(y) - (1.0 - norm_cdf(-y))).abs() < 1e-16);
        }
    }

    #[test]
    fn reflection_is_exact_on_grid() {
        for i in -800..=800 {
            let y = i as f64 / 100.0;
            assert_eq!(norm_cdf(y) + norm_cdf(-y), 1.0, "y = {y}");
        }
    }

    #[test]
    fn ninety_fifth_percentile() {
        assert!((norm_cdf(1.6448536269514722) - 0.95).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(std_normal_cdf(f64::NAN).is_err());
        assert!(std_normal_cdf(f64::INFINITY).is_err());
    }

    #[test]
    fn monotone_on_fine_grid() {
        let mut prev = 0.0;
        for i in -4000..=4000 {
            let v = norm_cdf(i as f64 / 500.0);
            assert!(v >= prev);
            prev = v;
        }
    }
}
