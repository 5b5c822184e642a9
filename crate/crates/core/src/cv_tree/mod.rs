//! The n-period lattice for floating-strike lookbacks: level tree parameters,
//! path counts and the three pricing routes (direct sums, reduced CDF form, backward induction).

mod params;
mod paths;
mod pricing;

pub use params::{initial_level, tree_params, InitialLevel, TreeParams};
pub use paths::{path_count, path_count_enumerate, path_counts, Level, PathClass, PathCount};
pub use pricing::{price_backward_induction, price_closed, price_closed_reduced, MAX_DIRECT_PERIODS};
