//! Discrete Sugeno integral and the Sugeno type trace
//! `psi_alpha(a) = max_i min(lambda_i(a), alpha(i))`.

use crate::choquet::ValueVector;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::measures::{AlphaWeights, MonotoneMeasure};
use crate::spectral::{clamp_psd, eig_desc, psd_eigenvalues};

pub fn sugeno_integral(f: &ValueVector, mu: &MonotoneMeasure) -> Result<f64> {
    if f.len() != mu.n() {
        return Err(Error::DimensionMismatch {
            expected: mu.n(),
            got: f.len(),
        });
    }
    let x = f.values();
    let mut level_set = 0u32;
    let mut best = 0.0f64;
    for s in f.descending_order() {
        level_set |= 1 << s;
        best = best.max(x[s].min(mu.value(level_set)));
    }
    Ok(best)
}

/// Max-min over an already decreasing list.
pub fn sugeno_of_decreasing(lambda: &[f64], alpha: &AlphaWeights) -> f64 {
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l.min(alpha.get(i + 1)))
        .fold(0.0, f64::max)
}

pub fn sugeno_trace(a: &HermitianMatrix, alpha: &AlphaWeights) -> Result<f64> {
    if alpha.n() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: alpha.n(),
        });
    }
    Ok(sugeno_of_decreasing(&psd_eigenvalues(a)?, alpha))
}

/// `kI ∧ a`: the functional calculus of `x -> min(k, x)`.
pub fn fuzzy_meet_scalar(a: &HermitianMatrix, k: f64) -> Result<HermitianMatrix> {
    if !(k >= 0.0) {
        return Err(Error::Precondition(format!("meet level must be >= 0, got {k}")));
    }
    let spec = eig_desc(a)?;
    let capped: Vec<f64> = clamp_psd(spec.eigenvalues())?
        .into_iter()
        .map(|x| x.min(k))
        .collect();
    Ok(spec.synthesize(&capped))
}
