use crate::error::{Error, Result};

/// Limit of Bin_{n,p0}(j_ratio * n) as n grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CdfLimit {
    TendsToZero,
    TendsToOne,
    Central,
}

pub fn cdf_limit_classifier(p0: f64, j_ratio: f64) -> Result<CdfLimit> {
    if !(p0 > 0.0 && p0 < 1.0) || !(0.0..=1.0).contains(&j_ratio) {
        return Err(Error::domain(format!(
            "need 0 < p0 < 1 and 0 <= j_ratio <= 1, got p0 = {p0}, j_ratio = {j_ratio}"
        )));
    }
    Ok(if j_ratio < p0 {
        CdfLimit::TendsToZero
    } else if j_ratio > p0 {
        CdfLimit::TendsToOne
    } else {
        CdfLimit::Central
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::binom_cdf;

    #[test]
    fn classes() {
        assert_eq!(cdf_limit_classifier(0.5, 0.4).unwrap(), CdfLimit::TendsToZero);
        assert_eq!(cdf_limit_classifier(0.5, 0.6).unwrap(), CdfLimit::TendsToOne);
        assert_eq!(cdf_limit_classifier(0.5, 0.5).unwrap(), CdfLimit::Central);
        assert!(cdf_limit_classifier(1.0, 0.5).is_err());
    }

    #[test]
    fn limits_visible_at_ten_thousand() {
        let n = 10_000u64;
        assert!(binom_cdf(n, 0.5, (0.4 * n as f64) as i64) < 1e-8);
        assert!(binom_cdf(n, 0.5, (0.6 * n as f64) as i64) > 1.0 - 1e-8);
    }
}
