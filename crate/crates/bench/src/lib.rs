//! Benchmark fixtures shared by the criterion benches.

use lookback_core::{MarketState, Side};

/// Call on S = 80, M = 60, sigma = 0.2, r = 0.08, tau = 1.27.
pub fn reference_call() -> (MarketState, Side) {
    (
        MarketState::new(80.0, 60.0, 0.2, 0.08, 1.27).expect("valid"),
        Side::Call,
    )
}

/// Put on S = 80, M = 100, sigma = 0.2, r = 0, tau = 1.27.
pub fn reference_put() -> (MarketState, Side) {
    (
        MarketState::new(80.0, 100.0, 0.2, 0.0, 1.27).expect("valid"),
        Side::Put,
    )
}
