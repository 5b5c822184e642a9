//! Large-n expansion of the lattice price: C_n = C_BS + C1/sqrt(n) + C2(n)/n + O(n^{-3/2}).

use crate::continuous_bs::{bs_price, bs_terms_unchecked};
use crate::cv_tree::{initial_level, price_closed_reduced};
use crate::error::Result;
use crate::market::{MarketState, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateBranch {
    Positive,
    Zero,
}

/// Expansion coefficients for one market and side.
///
/// C2 depends on n only through kappa_n = {j0}(1 - {j0}), and affinely, so it is
/// stored as `c2_const + c2_kappa * kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceExpansion {
    pub market: MarketState,
    pub side: Side,
    pub rate_branch: RateBranch,
    pub c0: f64,
    pub c1: f64,
    pub c2_const: f64,
    pub c2_kappa: f64,
}

impl PriceExpansion {
    /// kappa_n for the n-period tree of this market.
    pub fn kappa_at(&self, n: u64) -> f64 {
        initial_level(&self.market, n, self.side).kappa()
    }

    pub fn c2_with_kappa(&self, kappa: f64) -> f64 {
        self.c2_const + self.c2_kappa * kappa
    }

    pub fn c2_at(&self, n: u64) -> f64 {
        self.c2_with_kappa(self.kappa_at(n))
    }
}

/// C2 as a function of kappa, straight from the coefficient formulas.
fn c2_formula(m: &MarketState, side: Side, kappa: f64) -> f64 {
    let b = bs_terms_unchecked(m, side);
    let (s, big_m) = (m.spot, m.extremum);
    let var = m.sigma * m.sigma;
    let st = m.sigma_sqrt_tau();
    let l = b.log_sm;
    let sign = match side {
        Side::Call => -1.0,
        Side::Put => 1.0,
    };
    if m.rate > 0.0 {
        let r = m.rate;
        let b4 =
            st * ((1.0 - 2.0 * r / var) / 2.0 * l).exp() * (-(b.d.d1 * b.d.d1 + b.d.d4 * b.d.d4) / 4.0).exp()
                / (2.0 * std::f64::consts::PI).sqrt();
        let t1 = 12.0 * r / var * b.theta2 * kappa - (1.0 + 4.0 * r * r / (var * var)) * l;
        let t2 = 0.5 + kappa + b.d.d4 / (6.0 * st) * l;
        let bracket = s * var * m.tau / 12.0 * ((b.theta1 + 2.0) * b.b1 + (b.theta2 + 2.0 - t1) * b.b3);
        sign * (bracket + sign * big_m * t2 * b4)
    } else {
        let t2s = 0.5 + kappa + var * m.tau / 12.0 - b.d.d2 / (6.0 * st) * l;
        let bracket = s * var * m.tau / 6.0 * ((3.0 + 3.0 * kappa - var * m.tau / 4.0) * b.b1 + b.b3_star);
        sign * (bracket + sign * s * t2s * b.b4_star)
    }
}

pub fn expansion_coeffs(market: &MarketState, side: Side) -> Result<PriceExpansion> {
    let c0 = bs_price(market, side)?;
    let b = bs_terms_unchecked(market, side);
    let half = market.spot * market.sigma_sqrt_tau() / 2.0;
    let (rate_branch, c1) = if market.rate > 0.0 {
        (RateBranch::Positive, -half * (b.theta1 * b.b1 + b.theta2 * b.b3))
    } else {
        let c1 = match side {
            Side::Call => -half * (2.0 * b.b1 + b.b3_star - b.b4_star),
            Side::Put => -half * (2.0 * b.b1 + b.b3_star + b.b4_star),
        };
        (RateBranch::Zero, c1)
    };
    let c2_const = c2_formula(market, side, 0.0);
    let c2_kappa = c2_formula(market, side, 1.0) - c2_const;
    Ok(PriceExpansion {
        market: *market,
        side,
        rate_branch,
        c0,
        c1,
        c2_const,
        c2_kappa,
    })
}

/// c0 + c1/sqrt(n) + c2(n)/n.
pub fn expansion_price(exp: &PriceExpansion, n: u64) -> f64 {
    let nf = n as f64;
    exp.c0 + exp.c1 / nf.sqrt() + exp.c2_at(n) / nf
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualRow {
    pub n: u64,
    pub price_n: f64,
    pub c0: f64,
    /// (price_n - c0) sqrt(n).
    pub scaled1: f64,
    /// (price_n - c0 - c1/sqrt(n)) n.
    pub scaled2: f64,
}

pub fn residual_row(exp: &PriceExpansion, n: u64) -> Result<ResidualRow> {
    let price_n = price_closed_reduced(&exp.market, n, exp.side)?;
    let nf = n as f64;
    Ok(ResidualRow {
        n,
        price_n,
        c0: exp.c0,
        scaled1: (price_n - exp.c0) * nf.sqrt(),
        scaled2: (price_n - exp.c0 - exp.c1 / nf.sqrt()) * nf,
    })
}

/// Scaled residuals of the reduced-form lattice price against the expansion.
pub fn residual_scan(market: &MarketState, side: Side, n_list: &[u64]) -> Result<Vec<ResidualRow>> {
    let exp = expansion_coeffs(market, side)?;
    n_list.iter().map(|&n| residual_row(&exp, n)).collect()
}
