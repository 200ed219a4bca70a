//! Discrete Choquet integral and the Choquet type trace
//! `phi_alpha(a) = sum_{i<n} (lambda_i - lambda_{i+1}) alpha(i) + lambda_n alpha(n)`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::measures::{AlphaWeights, MonotoneMeasure};
use crate::random::rng_from_seed;
use crate::spectral::{psd_eigenvalues, SpectralFunction, CLUSTER_TOL};

/// Tolerance below zero still accepted as comonotonic.
pub const COMONOTONIC_TOL: f64 = 1e-12;

/// Nonnegative finite vector `(x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueVector(Vec<f64>);

impl ValueVector {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidVector(
                "values must be finite and nonnegative".into(),
            ));
        }
        Ok(Self(x))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Stable descending sort permutation.
    pub(crate) fn descending_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.0.len()).collect();
        order.sort_by(|&i, &j| self.0[j].total_cmp(&self.0[i]));
        order
    }
}

pub fn choquet_integral(f: &ValueVector, mu: &MonotoneMeasure) -> Result<f64> {
    if f.len() != mu.n() {
        return Err(Error::DimensionMismatch {
            expected: mu.n(),
            got: f.len(),
        });
    }
    let x = f.values();
    let order = f.descending_order();
    let mut level_set = 0u32;
    let mut total = 0.0;
    for (i, &s) in order.iter().enumerate() {
        level_set |= 1 << s;
        let next = order.get(i + 1).map_or(0.0, |&t| x[t]);
        total += (x[s] - next) * mu.value(level_set);
    }
    Ok(total)
}

/// Choquet sum over an already decreasing list.
pub fn choquet_of_decreasing(lambda: &[f64], alpha: &AlphaWeights) -> f64 {
    let n = lambda.len();
    (0..n)
        .map(|i| {
            let next = if i + 1 < n { lambda[i + 1] } else { 0.0 };
            (lambda[i] - next) * alpha.get(i + 1)
        })
        .sum()
}

pub fn choquet_trace(a: &HermitianMatrix, alpha: &AlphaWeights) -> Result<f64> {
    if alpha.n() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: alpha.n(),
        });
    }
    let lambda = psd_eigenvalues(a)?;
    Ok(choquet_of_decreasing(&lambda, alpha))
}

/// `(f(s) - f(t)) (g(s) - g(t)) >= -1e-12` for every pair of clusters.
pub fn are_comonotonic(f: &SpectralFunction, g: &SpectralFunction) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::Alignment {
            expected: f.len(),
            got: g.len(),
        });
    }
    let (f, g) = (f.values(), g.values());
    for s in 0..f.len() {
        for t in (s + 1)..f.len() {
            if (f[s] - f[t]) * (g[s] - g[t]) < -COMONOTONIC_TOL {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Random nondecreasing map `[0, 1] -> [0, inf)`:
/// `x -> c0 + c1 x + c2 x^3 + c3 [x > tau]`.
struct MonotoneProfile {
    coeffs: [f64; 4],
    tau: f64,
}

impl MonotoneProfile {
    fn draw<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut coeffs = [0.0; 4];
        for c in &mut coeffs {
            *c = if rng.random_bool(0.25) { 0.0 } else { 3.0 * rng.random::<f64>() };
        }
        Self {
            coeffs,
            tau: rng.random(),
        }
    }

    fn eval(&self, x: f64) -> f64 {
        let [c0, c1, c2, c3] = self.coeffs;
        c0 + c1 * x + c2 * x * x * x + if x > self.tau { c3 } else { 0.0 }
    }
}

/// Comonotonic pair `(p(h), q(h))` for a random sequence `h` on `clusters`
/// points and random nondecreasing `p`, `q`.
pub fn random_comonotonic_pair_with<R: Rng + ?Sized>(
    rng: &mut R,
    clusters: usize,
) -> (SpectralFunction, SpectralFunction) {
    assert!(clusters >= 1, "need at least one cluster");
    let mut h: Vec<f64> = (0..clusters).map(|_| rng.random()).collect();
    if clusters > 1 && rng.random_bool(0.2) {
        let i = rng.random_range(0..clusters);
        let j = rng.random_range(0..clusters);
        h[j] = h[i];
    }
    let p = MonotoneProfile::draw(rng);
    let q = MonotoneProfile::draw(rng);
    let f = h.iter().map(|&x| p.eval(x)).collect();
    let g = h.iter().map(|&x| q.eval(x)).collect();
    (
        SpectralFunction::new(f, CLUSTER_TOL).expect("finite values"),
        SpectralFunction::new(g, CLUSTER_TOL).expect("finite values"),
    )
}

pub fn random_comonotonic_pair(clusters: usize, seed: u64) -> (SpectralFunction, SpectralFunction) {
    random_comonotonic_pair_with(&mut rng_from_seed(seed), clusters)
}
