//! Continuous-monitoring lookback prices: Goldman-Sosin-Gatto for r > 0, Babbs for r = 0.

use crate::error::Result;
use crate::market::{MarketState, Side};
use crate::numerics::{norm_cdf, norm_pdf};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DValues {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
}

/// d1..d4 with L = ln(S/M): d1 = (L + (r + s^2/2) tau)/(s sqrt tau), d2 = d1 - s sqrt tau,
/// d3 = (-L + (r - s^2/2) tau)/(s sqrt tau), d4 = d3 + s sqrt tau.
pub fn d_values(market: &MarketState, side: Side) -> Result<DValues> {
    market.validate(side)?;
    Ok(d_values_unchecked(market))
}

pub(crate) fn d_values_unchecked(m: &MarketState) -> DValues {
    let st = m.sigma_sqrt_tau();
    let l = m.log_moneyness();
    let half_var = 0.5 * m.sigma * m.sigma * m.tau;
    let d1 = (l + m.rate * m.tau + half_var) / st;
    let d3 = (-l + m.rate * m.tau - half_var) / st;
    DValues {
        d1,
        d2: d1 - st,
        d3,
        d4: d3 + st,
    }
}

/// The B-terms entering both the prices and the expansion coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BsTerms {
    pub d: DValues,
    /// 1 + s^2/(2r) and 1 - s^2/(2r); NaN when r = 0.
    pub theta1: f64,
    pub theta2: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b3_star: f64,
    pub b4_star: f64,
    /// ln(S/M), negative or zero for a put.
    pub log_sm: f64,
}

/// Side-specific B-terms: the call takes B1 = Phi(-d1), B2 = e^{-r tau} Phi(d2),
/// B3 = e^{-r tau} (S/M)^{-2r/s^2} Phi(d3); the put flips every Phi argument.
pub fn bs_terms(market: &MarketState, side: Side) -> Result<BsTerms> {
    market.validate(side)?;
    Ok(bs_terms_unchecked(market, side))
}

pub(crate) fn bs_terms_unchecked(m: &MarketState, side: Side) -> BsTerms {
    let d = d_values_unchecked(m);
    let s = match side {
        Side::Call => 1.0,
        Side::Put => -1.0,
    };
    let l = m.log_moneyness();
    let disc = (-m.rate * m.tau).exp();
    let var = m.sigma * m.sigma;
    let (theta1, theta2) = if m.rate > 0.0 {
        (1.0 + var / (2.0 * m.rate), 1.0 - var / (2.0 * m.rate))
    } else {
        (f64::NAN, f64::NAN)
    };
    BsTerms {
        d,
        theta1,
        theta2,
        b1: norm_cdf(-s * d.d1),
        b2: disc * norm_cdf(s * d.d2),
        b3: disc * (-(2.0 * m.rate / var) * l).exp() * norm_cdf(s * d.d3),
        b3_star: (l + 0.5 * var * m.tau) * norm_cdf(-s * d.d1),
        b4_star: m.sigma_sqrt_tau() * norm_pdf(d.d1),
        log_sm: l,
    }
}

/// Continuous-time floating-strike lookback price.
pub fn bs_price(market: &MarketState, side: Side) -> Result<f64> {
    let b = bs_terms(market, side)?;
    let (s, m) = (market.spot, market.extremum);
    Ok(if market.rate == 0.0 {
        match side {
            Side::Call => s - s * b.b1 - m * b.b2 - s * (b.b3_star - b.b4_star),
            Side::Put => -s + s * b.b1 + m * b.b2 + s * (b.b3_star + b.b4_star),
        }
    } else {
        let c = s - s * b.theta1 * b.b1 - m * b.b2 + s * (1.0 - b.theta2) * b.b3;
        match side {
            Side::Call => c,
            Side::Put => -c,
        }
    })
}
