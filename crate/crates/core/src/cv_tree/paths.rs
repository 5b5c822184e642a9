use super::params::{InitialLevel, INTEGER_SNAP};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Largest n for which path counts fit in `u128`.
pub const MAX_COUNT_PERIODS: u64 = 120;

/// Largest n accepted by [`path_count_enumerate`].
pub const MAX_ENUMERATION_PERIODS: u64 = 22;

/// Which branch of the counting formula produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    /// Paths that can never reach level zero: C(n,k).
    Binomial,
    /// Shifted levels reachable after reflection at zero: C(n,k) - C(n,k+f+1).
    PartialBinomial,
    /// Integer levels below the shifted lattice: C(n,k-j) - C(n,k-j-1).
    InnerCv,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathCount {
    /// Terminal level.
    pub j: f64,
    /// Number of up moves.
    pub k: u64,
    pub count: u128,
    /// `None` when the count is zero.
    pub class_tag: Option<PathClass>,
}

fn choose(n: u64, k: i64) -> u128 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let k = (k as u64).min(n - k as u64);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c
}

fn near_int(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < INTEGER_SNAP).then_some(r as i64)
}

/// Number of up/down words of length `n` that start at level `j0` and end at level `j`
/// after exactly `k` up moves. Levels move up by one, or down by one with a floor at zero.
pub fn path_count(j0: f64, j: f64, k: i64, n: u64) -> Result<PathCount> {
    if n == 0 {
        return Err(Error::domain("number of periods must be at least 1"));
    }
    if n > MAX_COUNT_PERIODS {
        return Err(Error::Budget(format!(
            "exact path counts limited to n <= {MAX_COUNT_PERIODS}, got {n}"
        )));
    }
    let zero = |k: i64| PathCount {
        j,
        k: k.max(0) as u64,
        count: 0,
        class_tag: None,
    };
    if k < 0 || k as u64 > n {
        return Ok(zero(k));
    }
    let lvl = InitialLevel::from_value(j0);
    let (n_i, f) = (n as i64, lvl.floor as i64);
    let tagged = |count: u128, class: PathClass| PathCount {
        j,
        k: k as u64,
        count,
        class_tag: (count > 0).then_some(class),
    };

    if let Some(jj) = near_int(j) {
        let last = n_i - f - 1;
        if jj >= 0 && jj <= last && jj <= k && k <= (last + jj).div_euclid(2) {
            let c = choose(n, k - jj) - choose(n, k - jj - 1);
            return Ok(tagged(c, PathClass::InnerCv));
        }
    }
    let shifted = lvl.j0 + (2 * k - n_i) as f64;
    if (j - shifted).abs() < INTEGER_SNAP {
        if k >= n_i - f {
            return Ok(tagged(choose(n, k), PathClass::Binomial));
        }
        let k_min = n_i - (n_i + f).div_euclid(2);
        if k >= k_min {
            let c = choose(n, k) - choose(n, k + f + 1);
            return Ok(tagged(c, PathClass::PartialBinomial));
        }
    }
    Ok(zero(k))
}

/// Every nonzero count for the given start level, from the closed formula.
pub fn path_counts(j0: f64, n: u64) -> Result<Vec<PathCount>> {
    let lvl = InitialLevel::from_value(j0);
    let (n_i, f) = (n as i64, lvl.floor as i64);
    let mut out = Vec::new();
    for k in 0..=n_i {
        let c = path_count(lvl.j0, lvl.j0 + (2 * k - n_i) as f64, k, n)?;
        if c.count > 0 {
            out.push(c);
        }
    }
    let last = n_i - f - 1;
    for jj in 0..=last.max(-1) {
        for k in jj..=(last + jj).div_euclid(2) {
            let c = path_count(lvl.j0, jj as f64, k, n)?;
            if c.count > 0 && c.class_tag == Some(PathClass::InnerCv) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Level in the enumeration: `Shifted(i)` is j0 + i for fractional j0, `Integer(l)` is l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Shifted(i64),
    Integer(u64),
}

impl Level {
    pub fn value(self, j0: f64) -> f64 {
        match self {
            Level::Shifted(i) => InitialLevel::from_value(j0).j0 + i as f64,
            Level::Integer(l) => l as f64,
        }
    }
}

fn walk(level: Level, ups: u64, left: u64, floor: i64, tally: &mut BTreeMap<(Level, u64), u64>) {
    if left == 0 {
        *tally.entry((level, ups)).or_insert(0) += 1;
        return;
    }
    let (up, down) = match level {
        Level::Shifted(i) => {
            let down = if floor + i - 1 < 0 {
                Level::Integer(0)
            } else {
                Level::Shifted(i - 1)
            };
            (Level::Shifted(i + 1), down)
        }
        Level::Integer(l) => (Level::Integer(l + 1), Level::Integer(l.saturating_sub(1))),
    };
    walk(up, ups + 1, left - 1, floor, tally);
    walk(down, ups, left - 1, floor, tally);
}

/// Tallies terminal (level, ups) pairs over all 2^n up/down words by direct simulation.
pub fn path_count_enumerate(j0: f64, n: u64) -> Result<BTreeMap<(Level, u64), u64>> {
    if n > MAX_ENUMERATION_PERIODS {
        return Err(Error::Budget(format!(
            "enumeration limited to n <= {MAX_ENUMERATION_PERIODS}, got {n}"
        )));
    }
    let lvl = InitialLevel::from_value(j0);
    let start = if lvl.is_integer {
        Level::Integer(lvl.floor)
    } else {
        Level::Shifted(0)
    };
    let mut tally = BTreeMap::new();
    walk(start, 0, n, lvl.floor as i64, &mut tally);
    Ok(tally)
}
