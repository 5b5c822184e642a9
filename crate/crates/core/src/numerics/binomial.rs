//! Binomial probabilities via Loader's saddle-point decomposition.
//!
//! `ln pmf = stirlerr(n) - stirlerr(k) - stirlerr(n-k) - bd0(k, np) - bd0(n-k, nq) - ln(2 pi k (n-k) / n) / 2`
//! keeps full relative accuracy far into the tails for n in the millions.

use super::Probability;
use crate::error::{Error, Result};
use std::f64::consts::{LN_2, PI};

/// ln(k!) - [(k + 1/2) ln k - k + ln(2 pi)/2] for k = 0..=15.
#[allow(clippy::excessive_precision)]
const STIRLERR_SMALL: [f64; 16] = [
    0.0,
    0.081_061_466_795_327_258_22,
    0.041_340_695_955_409_294_094,
    0.027_677_925_684_998_339_149,
    0.020_790_672_103_765_093_112,
    0.016_644_691_189_821_192_163,
    0.013_876_128_823_070_747_999,
    0.011_896_709_945_891_770_095,
    0.010_411_265_261_972_096_497,
    0.009_255_462_182_712_732_917_7,
    0.008_330_563_433_362_871_256_5,
    0.007_573_675_487_951_840_795,
    0.006_942_840_107_209_529_865_7,
    0.006_408_994_188_004_207_068_4,
    0.005_951_370_112_758_847_735_6,
    0.005_554_733_551_962_801_371,
];

fn stirlerr(k: u64) -> f64 {
    if k <= 15 {
        return STIRLERR_SMALL[k as usize];
    }
    const S0: f64 = 1.0 / 12.0;
    const S1: f64 = 1.0 / 360.0;
    const S2: f64 = 1.0 / 1260.0;
    const S3: f64 = 1.0 / 1680.0;
    const S4: f64 = 1.0 / 1188.0;
    let x = k as f64;
    let xx = x * x;
    if k > 500 {
        (S0 - S1 / xx) / x
    } else if k > 80 {
        (S0 - (S1 - S2 / xx) / xx) / x
    } else if k > 35 {
        (S0 - (S1 - (S2 - S3 / xx) / xx) / xx) / x
    } else {
        (S0 - (S1 - (S2 - (S3 - S4 / xx) / xx) / xx) / xx) / x
    }
}

/// Deviance term x ln(x/m) + m - x, with a series near x = m.
fn bd0(x: f64, m: f64) -> f64 {
    if (x - m).abs() < 0.1 * (x + m) {
        let mut v = (x - m) / (x + m);
        let mut s = (x - m) * v;
        let mut ej = 2.0 * x * v;
        v *= v;
        for j in 1..1000 {
            ej *= v;
            let s1 = s + ej / (2 * j + 1) as f64;
            if s1 == s {
                return s1;
            }
            s = s1;
        }
        s
    } else {
        x * (x / m).ln() + m - x
    }
}

fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "binomial parameter must lie in (0,1), got {p}"
        )))
    }
}

fn pmf_log_unchecked(n: u64, p: f64, k: u64) -> f64 {
    let q = 1.0 - p;
    if k == 0 {
        return n as f64 * (-p).ln_1p();
    }
    if k == n {
        return n as f64 * p.ln();
    }
    let (nf, kf) = (n as f64, k as f64);
    let lc = stirlerr(n) - stirlerr(k) - stirlerr(n - k) - bd0(kf, nf * p) - bd0(nf - kf, nf * q);
    let lf = (2.0 * PI).ln() + kf.ln() + (-kf / nf).ln_1p();
    lc - 0.5 * lf
}

/// ln[C(n,k) p^k (1-p)^(n-k)].
pub fn binom_pmf_log(n: u64, p: f64, k: u64) -> Result<f64> {
    check_p(p)?;
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(pmf_log_unchecked(n, p, k))
}

/// Binomial pmf; zero for `k` outside `0..=n`. `p` must lie in (0,1).
pub fn binom_pmf(n: u64, p: f64, k: i64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    if k < 0 || k as u64 > n {
        return 0.0;
    }
    pmf_log_unchecked(n, p, k as u64).exp()
}

/// ln C(n,k).
pub fn ln_choose(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    pmf_log_unchecked(n, 0.5, k) + n as f64 * LN_2
}

/// Neumaier-compensated sum of terms given largest first; adds them smallest first.
fn sum_small_first(terms: &[f64]) -> f64 {
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

/// Sum of pmf terms starting at `start` and walking away from the mode, stopping once
/// the terms can no longer affect the total.
fn tail_from(n: u64, p: f64, start: u64, downward: bool) -> f64 {
    let mut terms = Vec::new();
    let mut total = 0.0;
    let mut k = start;
    loop {
        let t = pmf_log_unchecked(n, p, k).exp();
        terms.push(t);
        total += t;
        if t <= total * 1e-18 || t == 0.0 {
            break;
        }
        if downward {
            if k == 0 {
                break;
            }
            k -= 1;
        } else {
            if k == n {
                break;
            }
            k += 1;
        }
    }
    sum_small_first(&terms)
}

fn mode(n: u64, p: f64) -> u64 {
    (((n + 1) as f64 * p).floor() as u64).min(n)
}

/// P[X <= j] for X ~ Bin(n, p). Zero for `j < 0`, one for `j >= n`.
pub fn binom_cdf(n: u64, p: f64, j: i64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    if j < 0 {
        return 0.0;
    }
    let j = j as u64;
    if j >= n {
        return 1.0;
    }
    if j < mode(n, p) {
        tail_from(n, p, j, true)
    } else {
        1.0 - tail_from(n, p, j + 1, false)
    }
}

/// P[X > j] for X ~ Bin(n, p). One for `j < 0`, zero for `j >= n`.
pub fn binom_ccdf(n: u64, p: f64, j: i64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    if j < 0 {
        return 1.0;
    }
    let j = j as u64;
    if j >= n {
        return 0.0;
    }
    if j < mode(n, p) {
        1.0 - tail_from(n, p, j, true)
    } else {
        tail_from(n, p, j + 1, false)
    }
}

/// Checked binomial CDF, summed from the smaller tail with compensation.
pub fn binom_cdf_exact(n: u64, p: f64, j: i64) -> Result<Probability> {
    check_p(p)?;
    Ok(Probability(binom_cdf(n, p, j)))
}
