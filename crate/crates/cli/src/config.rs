use crate::error::CliError;
use lookback_core::cv_tree::MAX_DIRECT_PERIODS;
use lookback_core::{MarketState, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closed,
    Reduced,
    Tree,
    Expansion,
    Bs,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Reduced => "reduced",
            Method::Tree => "tree",
            Method::Expansion => "expansion",
            Method::Bs => "bs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything `price` needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub market: MarketState,
    pub side: Side,
    pub n_values: Vec<u64>,
    pub method: Method,
    pub output_format: OutputFormat,
    pub output_path: Option<std::path::PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        self.market.validate(self.side)?;
        check_increasing(&self.n_values)?;
        let max = *self.n_values.last().expect("nonempty");
        if matches!(self.method, Method::Closed | Method::Tree) && max > MAX_DIRECT_PERIODS {
            return Err(CliError::Budget(format!(
                "method {} allows n <= {MAX_DIRECT_PERIODS}, got {max}",
                self.method.as_str()
            )));
        }
        Ok(())
    }
}

pub fn check_increasing(ns: &[u64]) -> Result<(), CliError> {
    if ns.is_empty() {
        return Err(CliError::Domain("the n list is empty".into()));
    }
    if ns[0] == 0 {
        return Err(CliError::Domain("n must be at least 1".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Domain("the n list must be strictly increasing".into()));
    }
    Ok(())
}

/// Parses `1000,5000`, `2..400` (inclusive) or a mix such as `2..10,50`.
pub fn parse_n_list(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = |part: &str| CliError::Domain(format!("cannot read `{part}` as n or a..b"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad(part))?;
            let b: u64 = b.trim().parse().map_err(|_| bad(part))?;
            if a > b {
                return Err(bad(part));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    check_increasing(&out)?;
    Ok(out)
}
