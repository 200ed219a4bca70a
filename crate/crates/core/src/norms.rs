//! Alpha-norms `|||a|||_alpha = phi_alpha(|a|)`, Ky Fan norms, positivity
//! of 2x2 operator blocks and 2-positivity of matrix functionals.
//!
//! 2-positivity is checked by sampling. A sampled pass is evidence only; a
//! violation is a certified counterexample and the offending block is kept
//! in the report so it can be re-verified independently. The negative
//! results for non-concave alpha are produced by explicit constructions
//! ([`non_two_positive_witness`], [`triangle_construction`]) rather than by
//! search.

use num_complex::Complex64;
use rand::Rng;

use crate::choquet::choquet_of_decreasing;
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::measures::{AlphaWeights, CoefficientVector, INVARIANT_TOL};
use crate::random::{
    gaussian_complex, gaussian_matrix, random_contraction, random_psd, random_unitary, sample_rng,
};
use crate::spectral::{eig_desc, psd_floor, psd_sqrt, singular_values};

/// Tolerance for the 2x2 value-matrix tests and norm axioms.
pub const FUNCTIONAL_TOL: f64 = 1e-8;
/// Relative eigenvalue cut for the pseudo-inverse in [`block2_contraction`].
pub const PINV_CUT: f64 = 1e-10;
/// Accepted norm excess and reconstruction error in [`block2_contraction`].
pub const CONTRACTION_TOL: f64 = 1e-7;

fn check_alpha_dim(a: &ComplexMatrix, alpha: &AlphaWeights) -> Result<()> {
    if alpha.n() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: alpha.n(),
        });
    }
    Ok(())
}

/// `phi_alpha(|a|) = sum_i c_i s_i(a)`.
pub fn alpha_norm(a: &ComplexMatrix, alpha: &AlphaWeights) -> Result<f64> {
    check_alpha_dim(a, alpha)?;
    Ok(choquet_of_decreasing(&singular_values(a)?, alpha))
}

/// Sum of the `k` largest singular values.
pub fn ky_fan_norm(a: &ComplexMatrix, k: usize) -> Result<f64> {
    if k == 0 || k > a.dim() {
        return Err(Error::Range(format!(
            "Ky Fan index {k} outside 1..={}",
            a.dim()
        )));
    }
    Ok(singular_values(a)?.iter().take(k).sum())
}

/// Weights `w` with `|||a|||_alpha = sum_k w_k ||a||_(k)`:
/// `w_k = c_k - c_{k+1}` and `w_n = c_n`.
pub fn ky_fan_decomposition(alpha: &AlphaWeights) -> Result<Vec<f64>> {
    let c = alpha.to_coeffs();
    let c = c.values();
    let n = c.len();
    (0..n)
        .map(|k| {
            let w = if k + 1 < n { c[k] - c[k + 1] } else { c[k] };
            if w < -INVARIANT_TOL {
                Err(Error::NotConcave { index: k + 1, weight: w })
            } else {
                Ok(w.max(0.0))
            }
        })
        .collect()
}

/// Operator matrix `[[a, c], [c*, b]]` with Hermitian diagonal blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct Block2 {
    pub a: HermitianMatrix,
    pub b: HermitianMatrix,
    pub c: ComplexMatrix,
}

impl Block2 {
    pub fn new(a: HermitianMatrix, b: HermitianMatrix, c: ComplexMatrix) -> Result<Self> {
        let n = a.dim();
        for got in [b.dim(), c.dim()] {
            if got != n {
                return Err(Error::DimensionMismatch { expected: n, got });
            }
        }
        Ok(Self { a, b, c })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }
}

pub fn block2_assemble(blk: &Block2) -> HermitianMatrix {
    let n = blk.dim();
    let (a, b, c) = (blk.a.as_matrix(), blk.b.as_matrix(), &blk.c);
    let m = ComplexMatrix::from_fn(2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j),
        (true, false) => c.get(i, j - n),
        (false, true) => c.get(j, i - n).conj(),
        (false, false) => b.get(i - n, j - n),
    });
    HermitianMatrix::symmetrize(&m)
}

fn block2_min_margin(blk: &Block2) -> Result<(f64, f64)> {
    let spec = eig_desc(&block2_assemble(blk))?;
    let ev = spec.eigenvalues();
    Ok((ev[ev.len() - 1], psd_floor(ev)))
}

/// `lambda_min >= -1e-9 (1 + lambda_max)` for the assembled `2n x 2n` matrix.
pub fn block2_is_positive(blk: &Block2) -> Result<bool> {
    let (min, floor) = block2_min_margin(blk)?;
    Ok(min >= floor)
}

/// `x^{+1/2}`: inverse square root on eigenvalues above `PINV_CUT lambda_max`,
/// zero on the rest.
fn pinv_sqrt(x: &HermitianMatrix) -> Result<HermitianMatrix> {
    let spec = eig_desc(x)?;
    let top = spec.eigenvalues()[0].max(0.0);
    let cut = PINV_CUT * top;
    let inv: Vec<f64> = spec
        .eigenvalues()
        .iter()
        .map(|&l| if l > cut && l > 0.0 { 1.0 / l.sqrt() } else { 0.0 })
        .collect();
    Ok(spec.synthesize(&inv))
}

/// Contraction `k` with `c = a^{1/2} k b^{1/2}`, namely
/// `k = pinv(a^{1/2}) c pinv(b^{1/2})`.
pub fn block2_contraction(blk: &Block2) -> Result<ComplexMatrix> {
    let (min, floor) = block2_min_margin(blk)?;
    if min < floor {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    let k = &(pinv_sqrt(&blk.a)?.as_matrix() * &blk.c) * pinv_sqrt(&blk.b)?.as_matrix();
    let norm = singular_values(&k)?[0];
    let recon = &(psd_sqrt(&blk.a)?.as_matrix() * &k) * psd_sqrt(&blk.b)?.as_matrix();
    let residual = (&blk.c - &recon).frobenius_norm();
    if norm > 1.0 + CONTRACTION_TOL || residual > CONTRACTION_TOL * (1.0 + blk.c.frobenius_norm()) {
        return Err(Error::FactorizationFailed { norm, residual });
    }
    Ok(k)
}

/// A (generally non-linear) functional `M_n -> C`.
pub trait MatrixFunctional: Sync {
    fn name(&self) -> &str;
    fn dim(&self) -> usize;
    fn eval(&self, a: &ComplexMatrix) -> Result<Complex64>;
}

/// `a -> |||a|||_alpha`.
#[derive(Clone, Debug)]
pub struct AlphaNorm {
    alpha: AlphaWeights,
    name: String,
}

impl AlphaNorm {
    pub fn new(alpha: AlphaWeights) -> Self {
        let name = format!("alpha_norm{:?}", alpha.values());
        Self { alpha, name }
    }

    pub fn from_coeffs(c: &CoefficientVector) -> Self {
        Self::new(c.to_alpha())
    }

    pub fn alpha(&self) -> &AlphaWeights {
        &self.alpha
    }
}

impl MatrixFunctional for AlphaNorm {
    fn name(&self) -> &str {
        &self.name
    }

    fn dim(&self) -> usize {
        self.alpha.n()
    }

    fn eval(&self, a: &ComplexMatrix) -> Result<Complex64> {
        alpha_norm(a, &self.alpha).map(|v| Complex64::new(v, 0.0))
    }
}

type EvalFn = dyn Fn(&ComplexMatrix) -> Complex64 + Send + Sync;

/// Functional backed by a closure.
pub struct FnFunctional {
    name: String,
    n: usize,
    f: Box<EvalFn>,
}

impl FnFunctional {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        f: impl Fn(&ComplexMatrix) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            n,
            f: Box::new(f),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::new("zero", n, |_| Complex64::new(0.0, 0.0))
    }
}

impl MatrixFunctional for FnFunctional {
    fn name(&self) -> &str {
        &self.name
    }

    fn dim(&self) -> usize {
        self.n
    }

    fn eval(&self, a: &ComplexMatrix) -> Result<Complex64> {
        Ok((self.f)(a))
    }
}

/// `|phi(a* b)|^2 <= phi(a* a) phi(b* b)` with slack `1e-8 (1 + rhs)`.
pub fn schwartz_check(phi: &dyn MatrixFunctional, a: &ComplexMatrix, b: &ComplexMatrix) -> Result<bool> {
    let lhs = phi.eval(&(&a.adjoint() * b))?.norm_sqr();
    let rhs = phi.eval(&(&a.adjoint() * a))?.re * phi.eval(&(&b.adjoint() * b))?.re;
    Ok(lhs <= rhs + FUNCTIONAL_TOL * (1.0 + rhs.abs()))
}

/// The four values of `[[phi(a), phi(c)], [phi(c*), phi(b)]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValueMatrix {
    pub phi_a: Complex64,
    pub phi_b: Complex64,
    pub phi_c: Complex64,
    pub phi_c_adj: Complex64,
}

impl ValueMatrix {
    pub fn of(phi: &dyn MatrixFunctional, blk: &Block2) -> Result<Self> {
        Ok(Self {
            phi_a: phi.eval(blk.a.as_matrix())?,
            phi_b: phi.eval(blk.b.as_matrix())?,
            phi_c: phi.eval(&blk.c)?,
            phi_c_adj: phi.eval(&blk.c.adjoint())?,
        })
    }

    pub fn determinant(&self) -> f64 {
        self.phi_a.re * self.phi_b.re - self.phi_c.norm_sqr()
    }

    /// Determinant divided by `1 + phi(a) phi(b)`; a violation is below `-1e-8`.
    pub fn normalized_determinant(&self) -> f64 {
        self.determinant() / (1.0 + (self.phi_a.re * self.phi_b.re).abs())
    }

    /// True if the value matrix is positive within [`FUNCTIONAL_TOL`].
    pub fn is_positive(&self) -> bool {
        let hermitian = (self.phi_c_adj - self.phi_c.conj()).norm() <= FUNCTIONAL_TOL;
        let diagonal = [self.phi_a, self.phi_b]
            .iter()
            .all(|z| z.re >= -FUNCTIONAL_TOL && z.im.abs() <= FUNCTIONAL_TOL);
        hermitian && diagonal && self.normalized_determinant() >= -FUNCTIONAL_TOL
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoPositivityReport {
    pub samples: usize,
    pub violations: usize,
    /// Normalized determinant of `worst_block` (0 without violations).
    pub worst_margin: f64,
    pub worst_block: Option<Block2>,
    /// Samples that passed the value-matrix test and were then checked
    /// against the Schwartz inequality.
    pub schwartz_checked: usize,
    pub schwartz_failures: usize,
}

/// Draws a block-positive `[[a, c], [c*, b]]` with `c = a^{1/2} k b^{1/2}`.
/// Returns the block and the factors `(a^{1/2}, k b^{1/2})`.
pub fn random_positive_block<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<(Block2, ComplexMatrix, ComplexMatrix)> {
    let (a, b, k) = if rng.random_bool(0.25) {
        // commuting diagonal case with k = I, optionally with a permuted b
        let da: Vec<f64> = (0..n).map(|_| 4.0 * rng.random::<f64>()).collect();
        let mut db: Vec<f64> = (0..n).map(|_| 4.0 * rng.random::<f64>()).collect();
        if rng.random_bool(0.5) {
            db.sort_by(|x, y| x.total_cmp(y));
        }
        (
            HermitianMatrix::from_diagonal(&da),
            HermitianMatrix::from_diagonal(&db),
            ComplexMatrix::identity(n),
        )
    } else {
        (random_psd(rng, n), random_psd(rng, n), random_contraction(rng, n))
    };
    let ra = psd_sqrt(&a)?;
    let kb = &k * psd_sqrt(&b)?.as_matrix();
    let c = ra.as_matrix() * &kb;
    Ok((Block2::new(a, b, c)?, ra.into_matrix(), kb))
}

/// Sampled 2-positivity test; see [`two_positivity_test_with`].
pub fn two_positivity_sample_test(
    phi: &dyn MatrixFunctional,
    n: usize,
    samples: usize,
    seed: u64,
) -> TwoPositivityReport {
    two_positivity_test_with(phi, &[], n, samples, seed)
}

/// Evaluates `phi` on every block in `forced` and then on `samples` random
/// block-positive inputs. Each random sample uses its own stream of `seed`.
pub fn two_positivity_test_with(
    phi: &dyn MatrixFunctional,
    forced: &[Block2],
    n: usize,
    samples: usize,
    seed: u64,
) -> TwoPositivityReport {
    let mut report = TwoPositivityReport {
        samples: 0,
        violations: 0,
        worst_margin: 0.0,
        worst_block: None,
        schwartz_checked: 0,
        schwartz_failures: 0,
    };
    let record = |report: &mut TwoPositivityReport, blk: &Block2, factors: Option<(&ComplexMatrix, &ComplexMatrix)>| {
        report.samples += 1;
        let values = ValueMatrix::of(phi, blk);
        let (positive, margin) = match &values {
            Ok(v) => (v.is_positive(), v.normalized_determinant()),
            Err(_) => (false, f64::NEG_INFINITY),
        };
        if !positive {
            report.violations += 1;
            if report.worst_block.is_none() || margin < report.worst_margin {
                report.worst_margin = margin;
                report.worst_block = Some(blk.clone());
            }
        }
        if positive {
            if let Some((x, y)) = factors {
                report.schwartz_checked += 1;
                if !schwartz_check(phi, x, y).unwrap_or(false) {
                    report.schwartz_failures += 1;
                }
            }
        }
    };

    for blk in forced {
        record(&mut report, blk, None);
    }
    for i in 0..samples {
        let mut rng = sample_rng(seed, "two_positivity", i as u64);
        match random_positive_block(&mut rng, n) {
            Ok((blk, x, y)) => record(&mut report, &blk, Some((&x, &y))),
            Err(_) => {
                report.samples += 1;
                report.violations += 1;
            }
        }
    }
    report
}

/// Diagonal counterexample to 2-positivity of `s(x) = sum_i c_i s_i(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessReport {
    pub a: HermitianMatrix,
    pub b: HermitianMatrix,
    pub c: HermitianMatrix,
    pub s_a: f64,
    pub s_b: f64,
    pub s_c: f64,
    pub determinant: f64,
    /// Block positivity and `determinant < 0` were re-checked numerically.
    pub verified: bool,
}

impl WitnessReport {
    /// Evaluates `s = sum_i c_i s_i(.)` on explicit diagonal blocks.
    pub fn from_diagonals(coeffs: &CoefficientVector, a: &[f64], b: &[f64], c: &[f64]) -> Result<Self> {
        let n = coeffs.len();
        for got in [a.len(), b.len(), c.len()] {
            if got != n {
                return Err(Error::DimensionMismatch { expected: n, got });
            }
        }
        let alpha = coeffs.to_alpha();
        let (a, b, c) = (
            HermitianMatrix::from_diagonal(a),
            HermitianMatrix::from_diagonal(b),
            HermitianMatrix::from_diagonal(c),
        );
        let s_a = alpha_norm(a.as_matrix(), &alpha)?;
        let s_b = alpha_norm(b.as_matrix(), &alpha)?;
        let s_c = alpha_norm(c.as_matrix(), &alpha)?;
        let determinant = s_a * s_b - s_c * s_c;
        let blk = Block2::new(a.clone(), b.clone(), c.as_matrix().clone())?;
        let verified = block2_is_positive(&blk)? && determinant < 0.0;
        Ok(Self {
            a,
            b,
            c,
            s_a,
            s_b,
            s_c,
            determinant,
            verified,
        })
    }

    pub fn block(&self) -> Block2 {
        Block2 {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.as_matrix().clone(),
        }
    }

    /// Stored determinant agrees with `s_a s_b - s_c^2` within 1e-12.
    pub fn determinant_consistent(&self) -> bool {
        (self.determinant - (self.s_a * self.s_b - self.s_c * self.s_c)).abs() <= 1e-12
    }
}

/// The `M_3` witness that `s_2` is not 2-positive:
/// `a = diag(1, 1, 3)`, `b = diag(3, 1, 1)`, `c = diag(√3, 1, √3)`.
pub fn second_singular_value_witness() -> WitnessReport {
    let r3 = 3f64.sqrt();
    let coeffs = CoefficientVector::new(vec![0.0, 1.0, 0.0]).expect("valid coefficients");
    WitnessReport::from_diagonals(&coeffs, &[1.0, 1.0, 3.0], &[3.0, 1.0, 1.0], &[r3, 1.0, r3])
        .expect("fixed 3x3 witness")
}

/// A valid `t` for index `k`: needs `t > 1` and `c_{k+1} > √t c_k`.
pub fn choose_witness_t(c_k: f64, c_k1: f64) -> Option<f64> {
    if !(c_k < c_k1) {
        return None;
    }
    if c_k == 0.0 {
        return Some(4.0);
    }
    let root = 0.5 * (1.0 + c_k1 / c_k);
    Some(root * root)
}

/// Diagonal blocks showing that `s(x) = sum_i c_i s_i(x)` is not 2-positive
/// when `c_k < c_{k+1}` (`k` is 1-indexed).
///
/// Entries before `k` are `t`, entries after `k + 1` are `1`, and
/// `(a_k, a_{k+1}) = (t, 1)`, `(b_k, b_{k+1}) = (1, t)`,
/// `(c_k, c_{k+1}) = (√t, √t)`, so `c = √a √b`.
pub fn non_two_positive_witness(coeffs: &CoefficientVector, k: usize, t: f64) -> Result<WitnessReport> {
    let n = coeffs.len();
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("k = {k} must satisfy 1 <= k <= n - 1 = {}", n.saturating_sub(1))));
    }
    let c = coeffs.values();
    let (ck, ck1) = (c[k - 1], c[k]);
    if !(ck < ck1) {
        return Err(Error::Precondition(format!(
            "need c_k < c_(k+1), got c_{k} = {ck} and c_{} = {ck1}",
            k + 1
        )));
    }
    if !(t > 1.0) || !t.is_finite() {
        return Err(Error::Precondition(format!("need t > 1, got {t}")));
    }
    if !(ck1 > t.sqrt() * ck) {
        return Err(Error::Precondition(format!(
            "need c_(k+1) > sqrt(t) c_k, got {ck1} <= {}",
            t.sqrt() * ck
        )));
    }
    let fill = |i: usize, at_k: f64, at_k1: f64| {
        if i + 1 < k {
            t
        } else if i + 1 == k {
            at_k
        } else if i == k {
            at_k1
        } else {
            1.0
        }
    };
    let a: Vec<f64> = (0..n).map(|i| fill(i, t, 1.0)).collect();
    let b: Vec<f64> = (0..n).map(|i| fill(i, 1.0, t)).collect();
    let cm: Vec<f64> = (0..n).map(|i| fill(i, t.sqrt(), t.sqrt())).collect();
    WitnessReport::from_diagonals(coeffs, &a, &b, &cm)
}

/// `|||x + y||| <= |||x||| + |||y|||` evaluated on projection sums.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleWitness {
    pub index: usize,
    pub x: ComplexMatrix,
    pub y: ComplexMatrix,
    /// `|||x + y|||`, which equals `alpha(i+1) + alpha(i-1)`.
    pub lhs: f64,
    /// `|||x||| + |||y|||`, which equals `2 alpha(i)`.
    pub rhs: f64,
}

impl TriangleWitness {
    pub fn violates(&self) -> bool {
        self.lhs > self.rhs + FUNCTIONAL_TOL * (1.0 + self.rhs)
    }
}

/// For `1 <= i <= n-1`: `x = p_1 + p_3 + ... + p_{i+1}` and
/// `y = p_2 + p_3 + ... + p_{i+1}` with `p_j` the diagonal matrix units,
/// so `x + y = p_1 + p_2 + 2(p_3 + ... + p_{i+1})`.
pub fn triangle_construction(alpha: &AlphaWeights, i: usize) -> Result<TriangleWitness> {
    let n = alpha.n();
    if i == 0 || i >= n {
        return Err(Error::Range(format!("index {i} outside 1..={}", n.saturating_sub(1))));
    }
    let common = |j: usize| (2..=i).contains(&j);
    let dx: Vec<f64> = (0..n).map(|j| if j == 0 || common(j) { 1.0 } else { 0.0 }).collect();
    let dy: Vec<f64> = (0..n).map(|j| if j == 1 || common(j) { 1.0 } else { 0.0 }).collect();
    let x = ComplexMatrix::from_diagonal(&dx);
    let y = ComplexMatrix::from_diagonal(&dy);
    let lhs = alpha_norm(&(&x + &y), alpha)?;
    let rhs = alpha_norm(&x, alpha)? + alpha_norm(&y, alpha)?;
    Ok(TriangleWitness { index: i, x, y, lhs, rhs })
}

/// First index whose projection construction breaks the triangle inequality.
pub fn find_triangle_violation(alpha: &AlphaWeights) -> Result<Option<TriangleWitness>> {
    for i in 1..alpha.n() {
        let w = triangle_construction(alpha, i)?;
        if w.violates() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct NormAxiomReport {
    pub samples: usize,
    pub triangle_violations: usize,
    pub homogeneity_violations: usize,
    pub definiteness_violations: usize,
    pub unitary_invariance_violations: usize,
    /// Largest `(|||a+b||| - |||a||| - |||b|||) / scale` seen.
    pub worst_triangle_excess: f64,
}

impl NormAxiomReport {
    pub fn total_violations(&self) -> usize {
        self.triangle_violations
            + self.homogeneity_violations
            + self.definiteness_violations
            + self.unitary_invariance_violations
    }
}

fn random_norm_input<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let scale = (2.0 * rng.random::<f64>() - 1.0).exp2() * 2.0;
    if rng.random_bool(0.2) {
        let d: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        ComplexMatrix::from_diagonal(&d).scale_real(scale)
    } else {
        gaussian_matrix(rng, n).scale_real(scale)
    }
}

/// Checks the norm axioms of `|||.|||_alpha` on random inputs, after first
/// running the projection construction for every `i = 1..n-1`.
pub fn norm_axiom_check(alpha: &AlphaWeights, n_samples: usize, seed: u64) -> Result<NormAxiomReport> {
    let n = alpha.n();
    if !(alpha.get(1) > 0.0) {
        return Err(Error::Precondition("norm axioms need alpha(1) > 0".into()));
    }
    let mut report = NormAxiomReport::default();
    for i in 1..n {
        let w = triangle_construction(alpha, i)?;
        report.samples += 1;
        let excess = (w.lhs - w.rhs) / (1.0 + w.rhs);
        report.worst_triangle_excess = report.worst_triangle_excess.max(excess);
        if w.violates() {
            report.triangle_violations += 1;
        }
    }
    for s in 0..n_samples {
        let mut rng = sample_rng(seed, "norm_axioms", s as u64);
        report.samples += 1;
        let a = random_norm_input(&mut rng, n);
        let b = if rng.random_bool(0.1) {
            a.scale_real(rng.random())
        } else {
            random_norm_input(&mut rng, n)
        };
        let na = alpha_norm(&a, alpha)?;
        let nb = alpha_norm(&b, alpha)?;
        let nab = alpha_norm(&(&a + &b), alpha)?;
        let scale = 1.0 + na + nb;
        let excess = (nab - na - nb) / scale;
        report.worst_triangle_excess = report.worst_triangle_excess.max(excess);
        if excess > FUNCTIONAL_TOL {
            report.triangle_violations += 1;
        }

        let z = gaussian_complex(&mut rng) * 3.0;
        let nz = alpha_norm(&a.scale(z), alpha)?;
        if (nz - z.norm() * na).abs() > FUNCTIONAL_TOL * (1.0 + z.norm() * na) {
            report.homogeneity_violations += 1;
        }

        if a.frobenius_norm() > 0.0 && !(na > 0.0) {
            report.definiteness_violations += 1;
        }

        let u = random_unitary(&mut rng, n);
        let v = random_unitary(&mut rng, n);
        let nuav = alpha_norm(&(&(&u * &a) * &v), alpha)?;
        if (nuav - na).abs() > FUNCTIONAL_TOL * (1.0 + na) {
            report.unitary_invariance_violations += 1;
        }
    }
    Ok(report)
}
