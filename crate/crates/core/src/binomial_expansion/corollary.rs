use crate::error::{Error, Result};
use crate::numerics::{norm_cdf, norm_pdf};
use std::fmt;
use std::sync::Arc;

/// Expansion coefficients of p and j in powers of n^{-1/2}:
///
/// p = 1/2 + alpha/sqrt(n) + beta/n + gamma/n^{3/2} + delta/n^2 + epsilon/n^{5/2},
/// j = n/2 + a sqrt(n) + 1/2 + b_n + c/sqrt(n) + d/n + e/n^{3/2},
///
/// where `b_n` is any bounded sequence.
#[derive(Clone)]
pub struct SequenceCoeffs {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub a: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub b_n: Arc<dyn Fn(u64) -> f64 + Send + Sync>,
}

impl fmt::Debug for SequenceCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceCoeffs")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .field("gamma", &self.gamma)
            .field("delta", &self.delta)
            .field("epsilon", &self.epsilon)
            .field("a", &self.a)
            .field("c", &self.c)
            .field("d", &self.d)
            .field("e", &self.e)
            .finish_non_exhaustive()
    }
}

impl Default for SequenceCoeffs {
    fn default() -> Self {
        SequenceCoeffs {
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
            delta: 0.0,
            epsilon: 0.0,
            a: 0.0,
            c: 0.0,
            d: 0.0,
            e: 0.0,
            b_n: Arc::new(|_| 0.0),
        }
    }
}

impl SequenceCoeffs {
    pub fn with_b_n(mut self, b: impl Fn(u64) -> f64 + Send + Sync + 'static) -> Self {
        self.b_n = Arc::new(b);
        self
    }

    /// p_n from the expansion (the O(n^{-3}) remainder taken as zero).
    pub fn p_at(&self, n: u64) -> f64 {
        let s = (n as f64).sqrt();
        0.5 + self.alpha / s
            + self.beta / (s * s)
            + self.gamma / (s * s * s)
            + self.delta / (s * s * s * s)
            + self.epsilon / (s * s * s * s * s)
    }

    /// n/2 + a sqrt(n) + b_n + c/sqrt(n) + d/n + e/n^{3/2}, without the +-1/2 shift.
    fn j_core(&self, n: u64) -> f64 {
        let nf = n as f64;
        let s = nf.sqrt();
        nf / 2.0 + self.a * s + (self.b_n)(n) + self.c / s + self.d / nf + self.e / (nf * s)
    }

    /// Lower summation index j of the upper tail sum_{k >= j}.
    pub fn j_upper_tail(&self, n: u64) -> f64 {
        self.j_core(n) + 0.5
    }

    /// Index j of the CDF sum_{k <= j} in the CDF variant.
    pub fn j_cdf(&self, n: u64) -> f64 {
        self.j_core(n) - 0.5
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorollaryCoeffs {
    pub a_cap: f64,
    pub b_cap: f64,
    pub c_cap: f64,
    pub d_cap: f64,
    pub e_cap: f64,
    pub c0: f64,
    pub c2: f64,
    pub d0: f64,
    pub d1: f64,
    pub d3: f64,
    pub e0: f64,
    pub e1: f64,
    pub e2: f64,
    pub e4: f64,
}

pub fn corollary_coeffs(seq: &SequenceCoeffs, n: u64) -> CorollaryCoeffs {
    let (al, be, ga) = (seq.alpha, seq.beta, seq.gamma);
    let a = 2.0 * (al - seq.a);
    let b = 2.0 * (be - (seq.b_n)(n));
    let c = 2.0 * (ga - seq.c);
    let d = 2.0 * (seq.delta - seq.d);
    let e = 2.0 * (seq.epsilon - seq.e);
    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a4 * a2;
    let (al2, al3) = (al * al, al * al * al);

    let c0 = 2.0 * al2 * a - (1.0 - a2) * (a - 8.0 * al) / 12.0 + c;
    let c2 = a / 2.0;
    let d0 = 4.0 * al * be * a + 2.0 * (1.0 - a2) * be / 3.0 + d;
    let d1 = (8.0 * al * a - 1.0) / 6.0 - (1.0 - a2) * (a2 - 8.0 * al * a + 24.0 * al2 - 3.0) / 12.0 + a * c;
    let d3 = (1.0 - a2) / 6.0;
    let e0 = 2.0 * (be * be + 2.0 * al * ga) * a
        + (1.0 - a2) * (6.0 * al2 * c + 2.0 * ga) / 3.0
        + (3.0 - a2) * (6.0 * al3 - 2.0 * c) * al * a / 3.0
        + (a4 - 4.0 * a2 + 1.0) * (16.0 * al3 - c) / 12.0
        - (5.0 * a6 - 53.0 * a4 + 33.0 * a2 + 171.0) * a / 1440.0
        + (5.0 * a6 - 41.0 * a4 + 21.0 * a2 + 27.0) * al / 90.0
        - (7.0 * a4 - 40.0 * a2 + 15.0) * al2 * a / 18.0
        - a * c * c / 2.0
        + e;
    let e1 = 4.0 * be * a / 3.0 + (1.0 - a2) * (2.0 * a - 12.0 * al) * be / 3.0 + a * d;
    let e2 = 2.0 * al2 * a + (1.0 - a2) * (c + 2.0 * al2 * a) / 2.0 - (a4 - 8.0 * a2 + 9.0) * a / 24.0
        + (a4 - 6.0 * a2 + 3.0) * al / 3.0;
    let e4 = (3.0 - a2) * a / 24.0;
    CorollaryCoeffs {
        a_cap: a,
        b_cap: b,
        c_cap: c,
        d_cap: d,
        e_cap: e,
        c0,
        c2,
        d0,
        d1,
        d3,
        e0,
        e1,
        e2,
        e4,
    }
}

impl CorollaryCoeffs {
    /// Bracketed correction series in n^{-1/2}.
    pub fn series(&self, n: u64) -> f64 {
        let nf = n as f64;
        let s = nf.sqrt();
        let b = self.b_cap;
        b / s
            + (self.c0 - self.c2 * b * b) / nf
            + (self.d0 - self.d1 * b - self.d3 * b * b * b) / (nf * s)
            + (self.e0 - self.e1 * b - self.e2 * b * b + self.e4 * b * b * b * b) / (nf * nf)
    }
}

/// Approximation of sum_{k >= j} C(n,k) p^k (1-p)^{n-k} for p and j given by `seq`.
pub fn complementary_expansion(seq: &SequenceCoeffs, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("expansion needs n >= 2"));
    }
    let cc = corollary_coeffs(seq, n);
    Ok(norm_cdf(cc.a_cap) + norm_pdf(cc.a_cap) * cc.series(n))
}

/// Approximation of sum_{k <= j} with j = `seq.j_cdf(n)`: one minus the upper-tail result.
pub fn cdf_variant_expansion(seq: &SequenceCoeffs, n: u64) -> Result<f64> {
    Ok(1.0 - complementary_expansion(seq, n)?)
}
