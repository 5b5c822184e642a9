use crate::error::{Error, Result};

/// Probabilists' Hermite polynomial He_m(y) by the three-term recurrence. Any `m` is accepted.
pub fn hermite(m: u32, y: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, y);
    if m == 0 {
        return h0;
    }
    for k in 1..m {
        let h2 = y * h1 - k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Probabilists' Hermite polynomial for `1 <= m <= 11`.
pub fn hermite_poly(m: u32, y: f64) -> Result<f64> {
    if !(1..=11).contains(&m) {
        return Err(Error::domain(format!(
            "hermite degree must be in 1..=11, got {m}"
        )));
    }
    Ok(hermite(m, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn horner(coeffs: &[f64], x: f64) -> f64 {
        coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    #[test]
    fn explicit_polynomials() {
        let h8 = [105.0, -420.0, 210.0, -28.0, 1.0];
        let h9 = [945.0, -1260.0, 378.0, -36.0, 1.0];
        let h11 = [-10395.0, 17325.0, -6930.0, 990.0, -55.0, 1.0];
        for i in -20..=20 {
            let y = i as f64 * 0.25;
            let y2 = y * y;
            let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1.0);
            assert!(rel(hermite(8, y), horner(&h8, y2)) < 1e-12);
            assert!(rel(hermite(9, y), y * horner(&h9, y2)) < 1e-12);
            assert!(rel(hermite(11, y), y * horner(&h11, y2)) < 1e-12);
        }
    }

    #[test]
    fn anchors() {
        assert_eq!(hermite_poly(8, 0.0).unwrap(), 105.0);
        assert_eq!(hermite_poly(9, 0.0).unwrap(), 0.0);
        assert_eq!(hermite_poly(11, 1.0).unwrap(), 936.0);
    }

    #[test]
    fn degree_range() {
        assert!(hermite_poly(0, 1.0).is_err());
        assert!(hermite_poly(12, 1.0).is_err());
    }
}
