use crate::error::{Error, Result};
use crate::market::{MarketState, Side};

/// Distance below which a computed level is snapped to the nearest integer.
pub(crate) const INTEGER_SNAP: f64 = 1e-9;

/// Initial level j0 split into integer and fractional parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialLevel {
    pub j0: f64,
    pub floor: u64,
    pub frac: f64,
    pub is_integer: bool,
}

impl InitialLevel {
    pub fn from_value(j0: f64) -> Self {
        let j0 = j0.max(0.0);
        let r = j0.round();
        if (j0 - r).abs() < INTEGER_SNAP {
            InitialLevel {
                j0: r,
                floor: r as u64,
                frac: 0.0,
                is_integer: true,
            }
        } else {
            let f = j0.floor();
            InitialLevel {
                j0,
                floor: f as u64,
                frac: j0 - f,
                is_integer: false,
            }
        }
    }

    pub fn kappa(&self) -> f64 {
        self.frac * (1.0 - self.frac)
    }
}

/// j0 for the n-period tree: ln(S/M)/h for calls, ln(M/S)/h for puts, with h = sigma sqrt(tau/n).
pub fn initial_level(market: &MarketState, n: u64, side: Side) -> InitialLevel {
    let h = market.sigma * (market.tau / n as f64).sqrt();
    let gap = match side {
        Side::Call => (market.spot / market.extremum).ln(),
        Side::Put => (market.extremum / market.spot).ln(),
    };
    InitialLevel::from_value(gap / h)
}

/// Lattice quantities for a given number of periods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeParams {
    pub n: u64,
    /// Log step sigma sqrt(tau/n).
    pub h: f64,
    pub u: f64,
    pub d: f64,
    /// Risk-neutral up probability.
    pub p_up: f64,
    /// p u e^{-r tau/n}, the up weight of the level tree.
    pub q_adj: f64,
    pub j0: f64,
    pub j0_floor: u64,
    pub j0_frac: f64,
    pub j0_is_integer: bool,
    pub kappa: f64,
    /// 2p - 1 and 2q - 1 without cancellation.
    pub two_p_minus_1: f64,
    pub two_q_minus_1: f64,
}

pub fn tree_params(market: &MarketState, n: u64, side: Side) -> Result<TreeParams> {
    market.validate(side)?;
    if n == 0 {
        return Err(Error::domain("number of periods must be at least 1"));
    }
    let dt = market.tau / n as f64;
    let h = market.sigma * dt.sqrt();
    let u = h.exp();
    let d = (-h).exp();
    let rdt = market.rate * dt;
    let width = 2.0 * h.sinh();
    // p = (e^{r dt} - d)/(u - d), q = (u - e^{-r dt})/(u - d), both free of 1 - 1 cancellation
    let p_up = (rdt.exp_m1() - (-h).exp_m1()) / width;
    let q_adj = (h.exp_m1() - (-rdt).exp_m1()) / width;
    let cosh_m1 = 2.0 * (0.5 * h).sinh().powi(2);
    let two_p_minus_1 = 2.0 * (rdt.exp_m1() - cosh_m1) / width;
    let two_q_minus_1 = 2.0 * (cosh_m1 - (-rdt).exp_m1()) / width;
    let ok = |x: f64| x > 0.0 && x < 1.0;
    if !ok(p_up) || !ok(q_adj) {
        return Err(Error::Model(format!(
            "n = {n} too small for r = {}, sigma = {}, tau = {} (p = {p_up}, q = {q_adj})",
            market.rate, market.sigma, market.tau
        )));
    }
    let lvl = initial_level(market, n, side);
    Ok(TreeParams {
        n,
        h,
        u,
        d,
        p_up,
        q_adj,
        j0: lvl.j0,
        j0_floor: lvl.floor,
        j0_frac: lvl.frac,
        j0_is_integer: lvl.is_integer,
        kappa: lvl.kappa(),
        two_p_minus_1,
        two_q_minus_1,
    })
}

impl TreeParams {
    pub fn level(&self) -> InitialLevel {
        InitialLevel {
            j0: self.j0,
            floor: self.j0_floor,
            frac: self.j0_frac,
            is_integer: self.j0_is_integer,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table1() -> MarketState {
        MarketState::new(80.0, 60.0, 0.2, 0.08, 1.27).unwrap()
    }

    #[test]
    fn emission_level_is_zero() {
        let m = MarketState::new(80.0, 80.0, 0.2, 0.08, 1.27).unwrap();
        for side in [Side::Call, Side::Put] {
            let t = tree_params(&m, 17, side).unwrap();
            assert_eq!(t.j0, 0.0);
            assert_eq!(t.j0_frac, 0.0);
            assert_eq!(t.kappa, 0.0);
        }
    }

    #[test]
    fn algebraic_identities() {
        let m = table1();
        for n in [1, 2, 7, 100, 1000, 100_000] {
            let t = tree_params(&m, n, Side::Call).unwrap();
            assert!((t.u * t.d - 1.0).abs() < 1e-15);
            let q = (t.u - (-m.rate * m.tau / n as f64).exp()) / (t.u - t.d);
            assert!((t.q_adj - q).abs() < 1e-12);
            let pu = t.p_up * t.u * (-m.rate * m.tau / n as f64).exp();
            assert!((t.q_adj - pu).abs() < 1e-14);
            assert!((t.two_q_minus_1 - (2.0 * t.q_adj - 1.0)).abs() < 1e-15);
            assert!((t.two_p_minus_1 - (2.0 * t.p_up - 1.0)).abs() < 1e-15);
            assert!((0.0..=0.25).contains(&t.kappa));
            assert_eq!(t.j0, t.j0_floor as f64 + t.j0_frac);
        }
    }

    #[test]
    fn table_market_n1000() {
        let t = tree_params(&table1(), 1000, Side::Call).unwrap();
        let h = 0.2 * 0.00127f64.sqrt();
        assert!((t.u - h.exp()).abs() < 1e-15);
        assert!((t.j0 - (4.0f64 / 3.0).ln() / h).abs() < 1e-11);
    }

    #[test]
    fn small_n_with_large_rate_fails() {
        let m = MarketState::new(80.0, 60.0, 0.01, 0.5, 10.0).unwrap();
        assert!(matches!(tree_params(&m, 1, Side::Call), Err(Error::Model(_))));
    }

    #[test]
    fn side_checks() {
        let m = table1();
        assert!(tree_params(&m, 10, Side::Put).is_err());
    }

    #[test]
    fn snapping() {
        let l = InitialLevel::from_value(3.0 - 1e-12);
        assert!(l.is_integer);
        assert_eq!(l.floor, 3);
        let l = InitialLevel::from_value(3.0 - 1e-6);
        assert!(!l.is_integer);
        assert_eq!(l.floor, 2);
    }
}
