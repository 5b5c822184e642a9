use crate::error::{Error, Result};
use crate::numerics::{integrate_adaptive, QuadratureSpec};
use std::f64::consts::PI;

/// Pieces of the exact integral representation Bin_{n,p}(j) = J(y) - J(y').
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UspenskyContext {
    pub n: u64,
    pub p: f64,
    pub q: f64,
    pub sqrt_v: f64,
}

impl UspenskyContext {
    pub fn new(n: u64, p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::domain(format!("p must lie in (0,1), got {p}")));
        }
        if n == 0 {
            return Err(Error::domain("n must be at least 1"));
        }
        let q = 1.0 - p;
        Ok(UspenskyContext {
            n,
            p,
            q,
            sqrt_v: (n as f64 * p * q).sqrt(),
        })
    }

    /// |p e^{i phi} + q|.
    pub fn rho(&self, phi: f64) -> f64 {
        let s = (0.5 * phi).sin();
        (1.0 - 4.0 * self.p * self.q * s * s).sqrt()
    }

    /// arg(p e^{i phi} + q).
    pub fn omega(&self, phi: f64) -> f64 {
        (self.p * phi.sin()).atan2(self.q + self.p * phi.cos())
    }

    /// n omega - n p phi.
    pub fn chi(&self, phi: f64) -> f64 {
        let n = self.n as f64;
        n * self.omega(phi) - n * self.p * phi
    }

    /// -(np + 1/2)/sqrt(V).
    pub fn y_prime(&self) -> f64 {
        -(self.n as f64 * self.p + 0.5) / self.sqrt_v
    }

    /// (j - np + 1/2)/sqrt(V).
    pub fn y_of(&self, j: i64) -> f64 {
        (j as f64 - self.n as f64 * self.p + 0.5) / self.sqrt_v
    }

    /// rho^n sin(y sqrt(V) phi - chi)/sin(phi/2), equal to 2 y sqrt(V) at phi = 0.
    pub fn integrand(&self, y: f64, phi: f64) -> f64 {
        let t = y * self.sqrt_v;
        if phi == 0.0 {
            return 2.0 * t;
        }
        let s = (0.5 * phi).sin();
        let rho_n = (0.5 * self.n as f64 * (-4.0 * self.p * self.q * s * s).ln_1p()).exp();
        rho_n * (t * phi - self.chi(phi)).sin() / s
    }
}

/// J(y) = (1/2 pi) int_0^pi rho^n sin(y sqrt(V) phi - chi)/sin(phi/2) d phi.
pub fn uspensky_j(y: f64, n: u64, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    let ctx = UspenskyContext::new(n, p)?;
    let q = integrate_adaptive(|phi| ctx.integrand(y, phi), 0.0, PI, spec)?;
    Ok(q.value / (2.0 * PI))
}

/// Bin_{n,p}(j) as J(y) - J(y').
pub fn uspensky_cdf(n: u64, p: f64, j: i64, spec: &QuadratureSpec) -> Result<f64> {
    let ctx = UspenskyContext::new(n, p)?;
    Ok(uspensky_j(ctx.y_of(j), n, p, spec)? - uspensky_j(ctx.y_prime(), n, p, spec)?)
}
