use crate::error::{Error, Result};

/// Option side. The running extremum is a minimum for calls and a maximum for puts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Call,
    Put,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Call => "call",
            Side::Put => "put",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "call" => Ok(Side::Call),
            "put" => Ok(Side::Put),
            other => Err(Error::domain(format!("unknown side `{other}`"))),
        }
    }
}

/// Market data at the valuation date.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarketState {
    /// Underlying value S_t.
    pub spot: f64,
    /// Running extremum M_t: minimum so far for a call, maximum so far for a put.
    pub extremum: f64,
    /// Volatility per square-root year.
    pub sigma: f64,
    /// Continuously compounded spot rate per year.
    pub rate: f64,
    /// Remaining time to maturity in years.
    pub tau: f64,
}

impl MarketState {
    pub fn new(spot: f64, extremum: f64, sigma: f64, rate: f64, tau: f64) -> Result<Self> {
        let m = MarketState {
            spot,
            extremum,
            sigma,
            rate,
            tau,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let fields = [
            ("spot", self.spot),
            ("extremum", self.extremum),
            ("sigma", self.sigma),
            ("rate", self.rate),
            ("tau", self.tau),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::domain(format!("{name} must be finite, got {v}")));
            }
        }
        if self.spot <= 0.0 || self.extremum <= 0.0 {
            return Err(Error::domain("spot and extremum must be positive"));
        }
        if self.sigma <= 0.0 {
            return Err(Error::domain("sigma must be positive"));
        }
        if self.rate < 0.0 {
            return Err(Error::domain("rate must be non-negative"));
        }
        if self.tau <= 0.0 {
            return Err(Error::domain("tau must be positive"));
        }
        Ok(())
    }

    /// Checks the field constraints plus the side-specific ordering of spot and extremum.
    pub fn validate(&self, side: Side) -> Result<()> {
        self.check()?;
        match side {
            Side::Call if self.extremum > self.spot => Err(Error::domain(format!(
                "call needs extremum <= spot (running minimum), got {} > {}",
                self.extremum, self.spot
            ))),
            Side::Put if self.extremum < self.spot => Err(Error::domain(format!(
                "put needs extremum >= spot (running maximum), got {} < {}",
                self.extremum, self.spot
            ))),
            _ => Ok(()),
        }
    }

    /// ln(S_t / M_t).
    pub fn log_moneyness(&self) -> f64 {
        (self.spot / self.extremum).ln()
    }

    pub fn sigma_sqrt_tau(&self) -> f64 {
        self.sigma * self.tau.sqrt()
    }

    pub fn with_rate(&self, rate: f64) -> Self {
        MarketState { rate, ..*self }
    }
}
