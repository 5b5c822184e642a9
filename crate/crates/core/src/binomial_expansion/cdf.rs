use crate::error::{Error, Result};
use crate::numerics::{binom_ccdf, binom_cdf, norm_cdf, norm_pdf};

/// Normal approximation of Bin_{n,p}(j) with four correction orders in V^{-1/2}, V = npq.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdfExpansion {
    pub n: u64,
    pub p: f64,
    pub j: i64,
    /// (j - np + 1/2)/sqrt(V).
    pub y: f64,
    pub v: f64,
    pub phi_term: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub value: f64,
}

fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

/// P1..P4 at y; the polynomials are odd or even in y and evaluated in z = y^2.
fn correction_polys(p: f64, y: f64) -> [f64; 4] {
    let q_minus_p = 1.0 - 2.0 * p;
    let pq = p * (1.0 - p);
    let z = y * y;
    let p1 = q_minus_p * (1.0 - z) / 6.0;
    let p2 = y * (horner(&[-3.0, 7.0, -1.0], z) / 72.0 - pq / 36.0 * horner(&[-3.0, 11.0, -2.0], z));
    let p3 = q_minus_p
        * (horner(&[123.0, 129.0, -384.0, 95.0, -5.0], z) / 6480.0
            - pq / 3240.0 * horner(&[3.0, 69.0, -399.0, 145.0, -10.0], z));
    let p4 = y
        * (horner(&[-4293.0, -1359.0, 6165.0, -1971.0, 185.0, -5.0], z) / 155_520.0
            + pq / 38_880.0 * horner(&[3105.0, 1395.0, -7794.0, 2979.0, -325.0, 10.0], z)
            + pq * pq / 38_880.0 * horner(&[135.0, -1035.0, 7947.0, -4167.0, 560.0, -20.0], z));
    [p1, p2, p3, p4]
}

impl CdfExpansion {
    /// Sum of the first `orders` corrections P_k / V^{k/2}, without the density factor.
    pub fn correction(&self, orders: usize) -> f64 {
        let s = self.v.sqrt();
        let terms = [
            self.p1 / s,
            self.p2 / self.v,
            self.p3 / (self.v * s),
            self.p4 / (self.v * self.v),
        ];
        terms.iter().take(orders.min(4)).sum()
    }

    /// Approximation truncated after `orders` corrections (4 gives `value`).
    pub fn value_with_orders(&self, orders: usize) -> f64 {
        self.phi_term + norm_pdf(self.y) * self.correction(orders)
    }

    /// The same approximation for the upper tail P[X > j], formed without subtracting from one.
    pub fn upper_with_orders(&self, orders: usize) -> f64 {
        norm_cdf(-self.y) - norm_pdf(self.y) * self.correction(orders)
    }
}

pub fn cdf_expansion(n: u64, p: f64, j: i64) -> Result<CdfExpansion> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!("p must lie in (0,1), got {p}")));
    }
    if n < 2 {
        return Err(Error::domain("expansion needs n >= 2"));
    }
    if j < 0 || j as u64 > n {
        return Err(Error::domain(format!("j = {j} outside [0, {n}]")));
    }
    let nf = n as f64;
    let v = nf * p * (1.0 - p);
    let y = (j as f64 - nf * p + 0.5) / v.sqrt();
    let [p1, p2, p3, p4] = correction_polys(p, y);
    let mut e = CdfExpansion {
        n,
        p,
        j,
        y,
        v,
        phi_term: norm_cdf(y),
        p1,
        p2,
        p3,
        p4,
        value: 0.0,
    };
    e.value = e.value_with_orders(4);
    Ok(e)
}

/// |Bin_{n,p}(j) - expansion| using `orders` corrections. The difference is taken on
/// whichever tail is smaller so errors far below machine epsilon stay visible.
pub fn expansion_error(n: u64, p: f64, j: i64, orders: usize) -> Result<f64> {
    let e = cdf_expansion(n, p, j)?;
    Ok(if e.y > 0.0 {
        (binom_ccdf(n, p, j) - e.upper_with_orders(orders)).abs()
    } else {
        (binom_cdf(n, p, j) - e.value_with_orders(orders)).abs()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_median_is_half() {
        for n in [3u64, 51, 1001] {
            let e = cdf_expansion(n, 0.5, (n as i64 - 1) / 2).unwrap();
            assert_eq!(e.y, 0.0);
            assert_eq!(e.value, 0.5);
            assert!((binom_cdf(n, 0.5, (n as i64 - 1) / 2) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn against_exact() {
        let e = cdf_expansion(200, 0.5, 110).unwrap();
        assert!((e.value - binom_cdf(200, 0.5, 110)).abs() < 2e-7);
        let e = cdf_expansion(10_000, 0.45, 4600).unwrap();
        assert!((e.value - binom_cdf(10_000, 0.45, 4600)).abs() < 1e-10);
    }

    #[test]
    fn domain() {
        assert!(cdf_expansion(10, 0.5, 11).is_err());
        assert!(cdf_expansion(10, 0.5, -1).is_err());
        assert!(cdf_expansion(1, 0.5, 0).is_err());
        assert!(cdf_expansion(10, 1.0, 3).is_err());
    }
}
