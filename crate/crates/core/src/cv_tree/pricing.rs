use super::params::{tree_params, TreeParams};
use crate::error::{Error, Result};
use crate::market::{MarketState, Side};
use crate::numerics::{binom_ccdf, binom_cdf, binom_pmf, binom_pmf_log};

/// Work limit for the quadratic-cost routes (direct double sum, backward induction).
pub const MAX_DIRECT_PERIODS: u64 = 5000;

fn check_budget(n: u64, what: &str) -> Result<()> {
    if n > MAX_DIRECT_PERIODS {
        return Err(Error::Budget(format!(
            "{what} is limited to n <= {MAX_DIRECT_PERIODS}, got {n}"
        )));
    }
    Ok(())
}

/// Up weight of the level tree. For a put a level gain is a price fall.
fn level_up_weight(t: &TreeParams, side: Side) -> f64 {
    match side {
        Side::Call => t.q_adj,
        Side::Put => 1.0 - t.q_adj,
    }
}

/// Terminal payoff per unit of S_t at level `lev`: 1 - u^{-lev} for calls, u^{lev} - 1 for puts.
fn payoff(h: f64, side: Side, lev: f64) -> f64 {
    match side {
        Side::Call => -(-h * lev).exp_m1(),
        Side::Put => (h * lev).exp_m1(),
    }
}

/// Price as S_t (V1 - V2 + V3) with all three terms summed term by term over the path counts.
pub fn price_closed(market: &MarketState, n: u64, side: Side) -> Result<f64> {
    check_budget(n, "direct summation")?;
    let t = tree_params(market, n, side)?;
    let a = level_up_weight(&t, side);
    let (n_i, f) = (n as i64, t.j0_floor as i64);
    let lpmf: Vec<f64> = (0..=n).map(|k| binom_pmf_log(n, a, k)).collect::<Result<_>>()?;
    let ln_ratio = a.ln() - (-a).ln_1p();
    let shifted = |k: i64| payoff(t.h, side, t.j0 + (2 * k - n_i) as f64);

    let k_min = (n_i - (n_i + f).div_euclid(2)).max(0);
    let v1: f64 = (k_min..=n_i).map(|k| shifted(k) * lpmf[k as usize].exp()).sum();

    let mut v2 = 0.0;
    for k in k_min..=(n_i - f - 1) {
        let m = (k + f + 1) as usize;
        v2 += shifted(k) * (lpmf[m] - (f + 1) as f64 * ln_ratio).exp();
    }

    let last = n_i - f - 1;
    let mut v3 = 0.0;
    for j in 0..=last {
        let mut s = 0.0;
        for k in j..=(last + j).div_euclid(2) {
            let m = (k - j) as usize;
            s += (lpmf[m] + j as f64 * ln_ratio).exp();
            if m >= 1 {
                s -= (lpmf[m - 1] + (j + 1) as f64 * ln_ratio).exp();
            }
        }
        v3 += payoff(t.h, side, j as f64) * s;
    }
    Ok(market.spot * (v1 - v2 + v3))
}

/// Backward induction on the level tree, with the fractional levels j0 + i and the
/// integer levels below them kept in separate columns.
pub fn price_backward_induction(market: &MarketState, n: u64, side: Side) -> Result<f64> {
    check_budget(n, "backward induction")?;
    let t = tree_params(market, n, side)?;
    let w = level_up_weight(&t, side);
    let (n_i, f) = (n as i64, t.j0_floor as i64);
    let off = n_i;
    // leaving j0 + i downwards lands on the floor once the target is at or below zero
    let absorbed = |i: i64| {
        if t.j0_is_integer {
            f + i - 1 <= 0
        } else {
            f + i - 1 < 0
        }
    };

    let mut shifted: Vec<f64> = (-n_i..=n_i).map(|i| payoff(t.h, side, t.j0 + i as f64)).collect();
    let mut integer: Vec<f64> = (0..=n + 1).map(|l| payoff(t.h, side, l as f64)).collect();
    let mut next_s = shifted.clone();
    let mut next_i = integer.clone();

    for m in (0..n_i).rev() {
        for i in -m..=m {
            let up = shifted[(i + 1 + off) as usize];
            let down = if absorbed(i) {
                integer[0]
            } else {
                shifted[(i - 1 + off) as usize]
            };
            next_s[(i + off) as usize] = w * up + (1.0 - w) * down;
        }
        for l in 0..=m as usize {
            next_i[l] = w * integer[l + 1] + (1.0 - w) * integer[l.saturating_sub(1)];
        }
        std::mem::swap(&mut shifted, &mut next_s);
        std::mem::swap(&mut integer, &mut next_i);
    }
    Ok(market.spot * shifted[off as usize])
}

/// Inputs of the reduced form. The call uses (q, p, u, d); the put uses
/// (1-q, 1-p, d, u) and an overall sign flip.
struct Reduced {
    n: u64,
    f: i64,
    a: f64,
    b: f64,
    /// 2a - 1 and 2b - 1.
    am1: f64,
    bm1: f64,
    up: f64,
    up_m1: f64,
    dn: f64,
    /// Q dn - 1 with Q = a/(1-a); zero exactly when r = 0.
    qd_m1: f64,
    /// (M/S) e^{-r tau}.
    ke: f64,
    disc: f64,
    rate_zero: bool,
}

impl Reduced {
    fn eval(&self) -> f64 {
        let (n, f) = (self.n, self.f);
        let n_i = n as i64;
        let (a, b) = (self.a, self.b);
        let (ca, cb) = (1.0 - a, 1.0 - b);
        let j1 = n_i - (n_i + f).div_euclid(2);
        let j2 = j1 + f + 1;
        let j3 = j1 - 1;
        let e = (f + 1) as f64;

        let ln_big_a = a.ln() - ca.ln();
        let ln_big_b = b.ln() - cb.ln();
        let v1 = binom_ccdf(n, a, j1 - 1) - self.ke * binom_ccdf(n, b, j1 - 1);
        let v2 = (-e * ln_big_a).exp() * binom_ccdf(n, a, j2 - 1)
            - self.ke * (-e * ln_big_b).exp() * binom_ccdf(n, b, j2 - 1);

        let pa = binom_pmf(n, a, j3);
        let ba = binom_cdf(n, a, j3 - 1);
        let pca = binom_pmf(n, ca, j3);
        let bca = binom_cdf(n, ca, j3 - 1);

        let v3 = if !self.rate_zero {
            let q = ln_big_a.exp();
            let q_m1 = self.am1 / ca;
            let big_b = ln_big_b.exp();
            let b_m1 = self.bm1 / cb;
            let pcb = binom_pmf(n, cb, j3);
            let bcb = binom_cdf(n, cb, j3 - 1);
            let t1 = q * (1.0 - self.dn) / (q_m1 * self.qd_m1) * (pa - q_m1 * ba);
            let t2 = (-e * ln_big_a).exp() * (q * pca / q_m1 + bca);
            let t3 = self.disc * (-e * self.qd_m1.ln_1p()).exp() / (self.dn * -self.qd_m1)
                * (big_b * pcb + b_m1 * bcb);
            t1 + t2 + t3
        } else {
            // The printed r = 0 form has terms of size n Bin(.) that cancel down to O(sqrt n).
            // With n a C(n-1, k-1) = k C(n, k) they regroup into
            //   (f - n + 2 j3) pmf(j3) + (u - 1) sum_{k < j3} (n - f - 2k) pmf(k)
            // whose summands are all positive.
            let (up, um1) = (self.up, self.up_m1);
            let lead = (f - n_i + 2 * j3) as f64 * pa;
            let weighted = weighted_lower_tail(n, a, j3 - 1, |k| (n_i - f - 2 * k) as f64);
            lead - pa / um1
                + um1 * weighted
                + (1.0 - 2.0 * up) * ba
                + (-e * up.ln()).exp() * (up * pca / um1 + bca)
        };
        v1 - v2 + v3
    }
}

/// sum_{k <= j} weight(k) pmf(k), for weights that stay positive and grow at most
/// polynomially as k falls; summed from j downwards until the terms stop mattering.
fn weighted_lower_tail(n: u64, p: f64, j: i64, weight: impl Fn(i64) -> f64) -> f64 {
    if j < 0 {
        return 0.0;
    }
    let mut terms = Vec::new();
    let mut total = 0.0;
    for k in (0..=j.min(n as i64)).rev() {
        let t = weight(k) * binom_pmf(n, p, k);
        terms.push(t);
        total += t;
        if t <= total * 1e-18 && (k as f64) < n as f64 * p {
            break;
        }
    }
    let (mut s, mut c) = (0.0f64, 0.0f64);
    for &t in terms.iter().rev() {
        let s1 = s + t;
        if s.abs() >= t.abs() {
            c += (s - s1) + t;
        } else {
            c += (t - s1) + s;
        }
        s = s1;
    }
    s + c
}

/// Same price as [`price_closed`], rewritten as a combination of binomial CDFs; O(n).
pub fn price_closed_reduced(market: &MarketState, n: u64, side: Side) -> Result<f64> {
    let t = tree_params(market, n, side)?;
    let rdt = market.rate * market.tau / n as f64;
    let width = t.u - t.d;
    let disc = (-market.rate * market.tau).exp();
    let ke = market.extremum / market.spot * disc;
    let rate_zero = market.rate == 0.0;
    let (q, p) = (t.q_adj, t.p_up);
    let r = match side {
        Side::Call => Reduced {
            n,
            f: t.j0_floor as i64,
            a: q,
            b: p,
            am1: t.two_q_minus_1,
            bm1: t.two_p_minus_1,
            up: t.u,
            up_m1: t.h.exp_m1(),
            dn: t.d,
            qd_m1: -(1.0 + t.d) * (-rdt).exp_m1() / (width * (1.0 - q)),
            ke,
            disc,
            rate_zero,
        },
        Side::Put => Reduced {
            n,
            f: t.j0_floor as i64,
            a: 1.0 - q,
            b: 1.0 - p,
            am1: -t.two_q_minus_1,
            bm1: -t.two_p_minus_1,
            up: t.d,
            up_m1: (-t.h).exp_m1(),
            dn: t.u,
            qd_m1: (1.0 + t.u) * (-rdt).exp_m1() / (width * q),
            ke,
            disc,
            rate_zero,
        },
    };
    let v = r.eval();
    Ok(match side {
        Side::Call => market.spot * v,
        Side::Put => -market.spot * v,
    })
}
