//! Floating-strike lookback options on the Cheuk-Vorst binomial lattice.
//!
//! Prices are available three ways (direct path-count sums, an O(n) form built from
//! binomial CDFs, and backward induction), together with the continuous-time limit,
//! the n^{-1/2} and n^{-1} correction coefficients, and a refined asymptotic expansion
//! of the binomial CDF used to derive them.

pub mod binomial_expansion;
pub mod continuous_bs;
pub mod cv_tree;
pub mod error;
pub mod market;
pub mod numerics;
pub mod price_asymptotics;

pub use binomial_expansion::{
    appendix_identity_check, cdf_expansion, cdf_limit_classifier, complementary_expansion, uspensky_j,
    AppendixCheck, CdfExpansion, CdfLimit, CorollaryCoeffs, SequenceCoeffs, UspenskyContext,
};
pub use continuous_bs::{bs_price, bs_terms, d_values, BsTerms, DValues};
pub use cv_tree::{
    path_count, path_count_enumerate, price_backward_induction, price_closed, price_closed_reduced,
    tree_params, PathClass, PathCount, TreeParams,
};
pub use error::{Error, Result};
pub use market::{MarketState, Side};
pub use numerics::{Probability, Quadrature, QuadratureSpec};
pub use price_asymptotics::{
    expansion_coeffs, expansion_price, residual_scan, PriceExpansion, RateBranch, ResidualRow,
};
