//! Asymptotic expansion of the binomial CDF with O(n^{-5/2}) remainder, its
//! reparametrised form for p and j drifting with n, and exact integral representations
//! used to check it.

mod appendix;
mod cdf;
mod classifier;
mod corollary;
mod uspensky;

pub use appendix::{appendix_identity_check, AppendixCheck};
pub use cdf::{cdf_expansion, expansion_error, CdfExpansion};
pub use classifier::{cdf_limit_classifier, CdfLimit};
pub use corollary::{
    cdf_variant_expansion, complementary_expansion, corollary_coeffs, CorollaryCoeffs, SequenceCoeffs,
};
pub use uspensky::{uspensky_cdf, uspensky_j, UspenskyContext};
