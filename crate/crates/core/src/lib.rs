//! Non-linear traces of Choquet and Sugeno type on Hermitian matrices.
//!
//! A monotone weight vector `alpha(0) = 0 <= alpha(1) <= ... <= alpha(n)`
//! defines the symmetric measure `mu(A) = alpha(|A|)` on `{1..n}` and, through
//! the decreasing eigenvalue list of a PSD matrix, the traces
//!
//! * `phi_alpha(a) = sum_i (alpha(i) - alpha(i-1)) lambda_i(a)` (Choquet),
//! * `psi_alpha(a) = max_i min(lambda_i(a), alpha(i))` (Sugeno).
//!
//! `phi_alpha(|a|)` is a unitarily invariant norm exactly when `alpha` is
//! concave, and in that case it is also 2-positive.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod choquet;
pub mod error;
pub mod io;
pub mod majorization;
pub mod matrix;
pub mod measures;
pub mod norms;
pub mod random;
pub mod spectral;
pub mod suite;
pub mod sugeno;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, HermitianMatrix};
pub use measures::{AlphaWeights, CoefficientVector, MonotoneMeasure};
pub use spectral::{eig_desc, SpectrumDecomposition};
