//! Monotone measures on `{1, ..., n}`, alpha weight sequences and the
//! coefficient cone they parametrize.
//!
//! A permutation invariant monotone measure is determined by
//! `alpha(k) = mu(A)` for `|A| = k`. The Choquet trace of such a measure is
//! the nonnegative combination `sum_i c_i lambda_i` with `c_i = alpha(i) -
//! alpha(i-1)`, so alpha sequences and nonnegative coefficient vectors are
//! two coordinates for the same cone.

use crate::error::{Error, Result};

/// Absolute tolerance for monotonicity and concavity checks.
pub const INVARIANT_TOL: f64 = 1e-12;
/// Largest ground set with an explicit subset table.
pub const MAX_GROUND_SET: usize = 20;

/// `0 = alpha(0) <= alpha(1) <= ... <= alpha(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaWeights(Vec<f64>);

impl AlphaWeights {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidAlpha(
                "need alpha(0..n) with n >= 1".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidAlpha("entries must be finite".into()));
        }
        if values[0] != 0.0 {
            return Err(Error::InvalidAlpha(format!(
                "alpha(0) must be 0, got {}",
                values[0]
            )));
        }
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < w[0] - INVARIANT_TOL {
                return Err(Error::InvalidAlpha(format!(
                    "not monotone: alpha({}) = {} > alpha({}) = {}",
                    i,
                    w[0],
                    i + 1,
                    w[1]
                )));
            }
        }
        Ok(Self(values))
    }

    /// Size of the ground set, i.e. the matrix dimension.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> f64 {
        self.0[k]
    }

    /// `alpha(0..=n) = (0, 1, ..., n)`: the linear trace.
    pub fn trace(n: usize) -> Self {
        Self((0..=n).map(|k| k as f64).collect())
    }

    /// `(0, 1, 2, ..., k, k, ..., k)`: the Ky Fan `k`-norm weights.
    pub fn ky_fan(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Range(format!("Ky Fan index {k} outside 1..={n}")));
        }
        Ok(Self((0..=n).map(|j| j.min(k) as f64).collect()))
    }

    /// Zero up to `i - 1`, one from `i` on; its Choquet trace is `lambda_i`.
    pub fn indicator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Range(format!("eigenvalue index {i} outside 1..={n}")));
        }
        Ok(Self((0..=n).map(|j| if j >= i { 1.0 } else { 0.0 }).collect()))
    }

    pub fn to_coeffs(&self) -> CoefficientVector {
        alpha_to_coeffs(self)
    }

    pub fn is_concave(&self) -> bool {
        is_concave(self)
    }
}

/// Nonnegative coefficients `(c_1, ..., c_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientVector(Vec<f64>);

impl CoefficientVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidVector("coefficient vector is empty".into()));
        }
        if values.iter().any(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::InvalidVector(
                "coefficients must be finite and nonnegative".into(),
            ));
        }
        Ok(Self(values))
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

    pub fn to_alpha(&self) -> AlphaWeights {
        coeffs_to_alpha(self)
    }

    /// `c_1 >= c_2 >= ... >= c_n` up to [`INVARIANT_TOL`].
    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[1] <= w[0] + INVARIANT_TOL)
    }

    /// `sum_i c_i x_i`.
    pub fn dot(&self, x: &[f64]) -> f64 {
        self.0.iter().zip(x).map(|(c, x)| c * x).sum()
    }
}

/// Successive differences; tiny negative differences from rounding become 0.
pub fn alpha_to_coeffs(alpha: &AlphaWeights) -> CoefficientVector {
    CoefficientVector(
        alpha
            .0
            .windows(2)
            .map(|w| (w[1] - w[0]).max(0.0))
            .collect(),
    )
}

/// Prefix sums, accumulated left to right.
pub fn coeffs_to_alpha(c: &CoefficientVector) -> AlphaWeights {
    let mut alpha = Vec::with_capacity(c.len() + 1);
    let mut acc = 0.0;
    alpha.push(acc);
    for &ci in &c.0 {
        acc += ci;
        alpha.push(acc);
    }
    AlphaWeights(alpha)
}

/// `alpha(i+1) + alpha(i-1) <= 2 alpha(i)` for `i = 1, ..., n-1`.
pub fn is_concave(alpha: &AlphaWeights) -> bool {
    alpha
        .0
        .windows(3)
        .all(|w| w[2] + w[0] <= 2.0 * w[1] + INVARIANT_TOL)
}

/// Set function on subsets of `{1, ..., n}`, stored as a table indexed by
/// bit mask (bit `j` set means element `j + 1` is in the subset).
#[derive(Clone, Debug, PartialEq)]
pub struct MonotoneMeasure {
    n: usize,
    values: Vec<f64>,
}

impl MonotoneMeasure {
    /// `values[mask]` for every mask in `0..2^n`; `values[0]` must be 0.
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMeasure("ground set must be non-empty".into()));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::Size(n));
        }
        if values.len() != 1 << n {
            return Err(Error::InvalidMeasure(format!(
                "expected {} subset values, got {}",
                1usize << n,
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidMeasure(
                "values must be finite and nonnegative".into(),
            ));
        }
        if values[0] != 0.0 {
            return Err(Error::InvalidMeasure("value of the empty set must be 0".into()));
        }
        // single-element extensions suffice: monotonicity then follows by chaining
        for mask in 0..values.len() {
            for j in 0..n {
                let bit = 1 << j;
                if mask & bit == 0 && values[mask | bit] < values[mask] - INVARIANT_TOL {
                    return Err(Error::InvalidMeasure(format!(
                        "not monotone: mu({:#b}) = {} > mu({:#b}) = {}",
                        mask,
                        values[mask],
                        mask | bit,
                        values[mask | bit]
                    )));
                }
            }
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(u32) -> f64) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::Size(n));
        }
        let values = (0..1u32 << n).map(f).collect();
        Self::new(n, values)
    }

    /// `mu(A) = |A|`.
    pub fn counting(n: usize) -> Result<Self> {
        Self::from_fn(n, |mask| mask.count_ones() as f64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mask: u32) -> f64 {
        self.values[mask as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value of the full ground set.
    pub fn total(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// True if the value only depends on subset size.
    pub fn is_permutation_invariant(&self) -> bool {
        let mut by_size = vec![None; self.n + 1];
        self.values.iter().enumerate().all(|(mask, &v)| {
            let k = (mask as u32).count_ones() as usize;
            match by_size[k] {
                None => {
                    by_size[k] = Some(v);
                    true
                }
                Some(w) => (w - v).abs() <= INVARIANT_TOL,
            }
        })
    }
}

/// `mu_alpha(A) = alpha(|A|)`.
pub fn measure_from_alpha(alpha: &AlphaWeights) -> Result<MonotoneMeasure> {
    let n = alpha.n();
    if n > MAX_GROUND_SET {
        return Err(Error::Size(n));
    }
    MonotoneMeasure::from_fn(n, |mask| alpha.get(mask.count_ones() as usize))
}

/// `alpha(i) = mu({1, ..., i})`.
pub fn alpha_from_measure(mu: &MonotoneMeasure) -> AlphaWeights {
    // monotone along the chain {1} ⊂ {1,2} ⊂ ... because mu is monotone
    AlphaWeights(
        (0..=mu.n())
            .map(|i| mu.value(((1u64 << i) - 1) as u32))
            .collect(),
    )
}
