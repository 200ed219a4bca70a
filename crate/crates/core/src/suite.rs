//! Seeded property suites for the trace characterizations, eigenvalue
//! dominance and the alpha-norm equivalences, with JSON-serializable
//! reports.
//!
//! Sample `i` of property `p` in suite `s` draws from
//! `sample_rng(seed, "s/p", i)` and works in dimension `2 + i % (max_n - 1)`,
//! so reports depend only on the configuration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::choquet::{choquet_integral, choquet_trace, random_comonotonic_pair_with, ValueVector};
use crate::error::{Error, Result};
use crate::majorization::{
    contraction_factor, contraction_norm, eigen_dominates, factorization_residual, majorizes,
    weak_majorizes, DOMINANCE_TOL,
};
use crate::matrix::HermitianMatrix;
use crate::measures::{measure_from_alpha, AlphaWeights, MonotoneMeasure};
use crate::norms::{
    alpha_norm, block2_contraction, block2_is_positive, choose_witness_t, find_triangle_violation,
    ky_fan_decomposition, ky_fan_norm, non_two_positive_witness, norm_axiom_check,
    random_positive_block, two_positivity_sample_test, two_positivity_test_with, AlphaNorm,
    CONTRACTION_TOL, FUNCTIONAL_TOL,
};
use crate::random::{
    gaussian_matrix, random_alpha, random_concave_alpha, random_contraction, random_non_concave_alpha,
    random_psd, random_psd_mixed, random_unitary, sample_rng, SampleRng,
};
use crate::spectral::{
    apply_spectral_function, distinct_clusters, eig_desc, psd_eigenvalues, CLUSTER_TOL,
};
use crate::sugeno::{fuzzy_meet_scalar, sugeno_integral, sugeno_trace};

use rand::Rng;

/// Default comparison tolerance of the suites.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Concave and non-concave weights in the norm panel (each).
pub const PANEL_SIZE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Choquet,
    Sugeno,
    Majorization,
    Norms,
    All,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Choquet => "choquet",
            Self::Sugeno => "sugeno",
            Self::Majorization => "majorization",
            Self::Norms => "norms",
            Self::All => "all",
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "choquet" => Self::Choquet,
            "sugeno" => Self::Sugeno,
            "majorization" => Self::Majorization,
            "norms" => Self::Norms,
            "all" => Self::All,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Largest dimension; samples cycle through `2..=max_n`.
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Tolerance for the properties whose nominal slack is `1e-8`.
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: 6,
            samples: 200,
            seed: 42,
            tol: DEFAULT_TOL,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if !(2..=8).contains(&self.max_n) {
            return Err(Error::Range(format!("n must be in 2..=8, got {}", self.max_n)));
        }
        if self.samples == 0 {
            return Err(Error::Range("samples must be at least 1".into()));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::Range(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn dim(&self, i: usize) -> usize {
        2 + i % (self.max_n - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub pass: bool,
    /// Counterexamples that the property expects to find, each verified.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified_violations: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub max_n: usize,
    pub samples: usize,
    pub properties: Vec<PropertyResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
}

/// Residual given to a failed boolean check; above every tolerance in use.
const BROKEN: f64 = 1.0;

struct Tally {
    name: String,
    tol: f64,
    seed: u64,
    instances: usize,
    failures: usize,
    worst: f64,
    certified: Option<usize>,
}

impl Tally {
    fn new(name: &str, tol: f64, seed: u64) -> Self {
        Self {
            name: name.to_string(),
            tol,
            seed,
            instances: 0,
            failures: 0,
            worst: 0.0,
            certified: None,
        }
    }

    fn record(&mut self, residual: Result<f64>) {
        self.instances += 1;
        match residual {
            Ok(r) if r.is_finite() => {
                self.worst = self.worst.max(r);
                if r > self.tol {
                    self.failures += 1;
                }
            }
            _ => self.failures += 1,
        }
    }

    fn certify(&mut self) {
        *self.certified.get_or_insert(0) += 1;
    }

    fn finish(self) -> PropertyResult {
        PropertyResult {
            name: self.name,
            instances: self.instances,
            failures: self.failures,
            worst_residual: self.worst,
            tolerance: self.tol,
            seed: self.seed,
            pass: self.failures == 0,
            certified_violations: self.certified,
        }
    }
}

fn check(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        BROKEN
    }
}

/// Runs `f` once per sample with its own generator and dimension.
fn property(
    cfg: &SuiteConfig,
    suite: &str,
    name: &str,
    tol: f64,
    f: impl Fn(&mut SampleRng, usize) -> Result<f64>,
) -> PropertyResult {
    let tag = format!("{suite}/{name}");
    let mut tally = Tally::new(name, tol, cfg.seed);
    for i in 0..cfg.samples {
        let mut rng = sample_rng(cfg.seed, &tag, i as u64);
        tally.record(f(&mut rng, cfg.dim(i)));
    }
    tally.finish()
}

fn random_values<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n).map(|_| 3.0 * rng.random::<f64>()).collect();
    if n > 1 && rng.random_bool(0.3) {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        x[j] = x[i];
    }
    if rng.random_bool(0.1) {
        x[0] = 0.0;
    }
    x
}

/// `(f(a), g(a), (f op g)(a))` for a random comonotonic pair on the spectrum of `a`.
fn comonotonic_images<R: Rng + ?Sized>(
    rng: &mut R,
    a: &HermitianMatrix,
    op: impl Fn(f64, f64) -> f64,
) -> Result<[HermitianMatrix; 3]> {
    let spec = eig_desc(a)?;
    let clusters = distinct_clusters(&spec, CLUSTER_TOL).len();
    let (f, g) = random_comonotonic_pair_with(rng, clusters);
    let h = f.zip_with(&g, op)?;
    Ok([
        apply_spectral_function(&spec, &f)?,
        apply_spectral_function(&spec, &g)?,
        apply_spectral_function(&spec, &h)?,
    ])
}

fn choquet_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    let s = "choquet";
    vec![
        property(cfg, s, "comonotonic_additivity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let [fa, ga, ha] = comonotonic_images(rng, &a, |x, y| x + y)?;
            let (pf, pg) = (choquet_trace(&fa, &alpha)?, choquet_trace(&ga, &alpha)?);
            let ph = choquet_trace(&ha, &alpha)?;
            Ok((ph - pf - pg).abs() / (1.0 + pf.abs() + pg.abs()))
        }),
        property(cfg, s, "unitary_invariance", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let u = random_unitary(rng, n);
            let p = choquet_trace(&a, &alpha)?;
            Ok((choquet_trace(&a.conjugate_by(&u), &alpha)? - p).abs() / (1.0 + p))
        }),
        property(cfg, s, "monotonicity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let p = random_psd(rng, n).scale(rng.random());
            let alpha = random_alpha(rng, n);
            Ok((choquet_trace(&a, &alpha)? - choquet_trace(&(&a + &p), &alpha)?).max(0.0))
        }),
        property(cfg, s, "positive_homogeneity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let k = 10.0 * rng.random::<f64>();
            let p = choquet_trace(&a, &alpha)?;
            Ok((choquet_trace(&a.scale(k), &alpha)? - k * p).abs() / (1.0 + k * p))
        }),
        property(cfg, s, "cone_identity", 1e-9, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            // layer-cake form sum_i (lambda_i - lambda_{i+1}) alpha(i)
            let l = psd_eigenvalues(&a)?;
            let layers: f64 = (0..n)
                .map(|i| (l[i] - l.get(i + 1).copied().unwrap_or(0.0)) * alpha.get(i + 1))
                .sum();
            Ok((choquet_trace(&a, &alpha)? - layers).abs() / (1.0 + layers.abs()))
        }),
        property(cfg, s, "scalar_consistency", 1e-10, |rng, n| {
            let x = random_values(rng, n);
            let alpha = random_alpha(rng, n);
            let integral = choquet_integral(&ValueVector::new(x.clone())?, &measure_from_alpha(&alpha)?)?;
            let trace = choquet_trace(&HermitianMatrix::from_diagonal(&x), &alpha)?;
            Ok((trace - integral).abs() / (1.0 + integral.abs()))
        }),
        property(cfg, s, "counting_reduction", 1e-12, |rng, n| {
            let x = random_values(rng, n);
            let sum: f64 = x.iter().sum();
            let v = choquet_integral(&ValueVector::new(x)?, &MonotoneMeasure::counting(n)?)?;
            Ok((v - sum).abs() / (1.0 + sum))
        }),
    ]
}

fn sugeno_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    let s = "sugeno";
    vec![
        property(cfg, s, "comonotonic_f_additivity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let [fa, ga, ha] = comonotonic_images(rng, &a, f64::max)?;
            let joined = sugeno_trace(&fa, &alpha)?.max(sugeno_trace(&ga, &alpha)?);
            Ok((sugeno_trace(&ha, &alpha)? - joined).abs())
        }),
        property(cfg, s, "unitary_invariance", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let u = random_unitary(rng, n);
            Ok((sugeno_trace(&a.conjugate_by(&u), &alpha)? - sugeno_trace(&a, &alpha)?).abs())
        }),
        property(cfg, s, "monotonicity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let p = random_psd(rng, n).scale(rng.random());
            let alpha = random_alpha(rng, n);
            Ok((sugeno_trace(&a, &alpha)? - sugeno_trace(&(&a + &p), &alpha)?).max(0.0))
        }),
        property(cfg, s, "f_homogeneity", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let k = if rng.random_bool(0.1) { 0.0 } else { 4.0 * rng.random::<f64>() };
            let met = sugeno_trace(&fuzzy_meet_scalar(&a, k)?, &alpha)?;
            Ok((met - k.min(sugeno_trace(&a, &alpha)?)).abs())
        }),
        property(cfg, s, "saturation", cfg.tol, |rng, n| {
            let alpha = random_alpha(rng, n);
            let top = alpha.get(n);
            let c = match rng.random_range(0..4) {
                0 => 0.0,
                1 => top * (1.0 + 10.0 * rng.random::<f64>()),
                _ => (2.0 * top + 1.0) * rng.random::<f64>(),
            };
            let v = sugeno_trace(&HermitianMatrix::identity(n).scale(c), &alpha)?;
            Ok((v - c.min(top)).abs())
        }),
        property(cfg, s, "scalar_consistency", 1e-10, |rng, n| {
            let x = random_values(rng, n);
            let alpha = random_alpha(rng, n);
            let integral = sugeno_integral(&ValueVector::new(x.clone())?, &measure_from_alpha(&alpha)?)?;
            let trace = sugeno_trace(&HermitianMatrix::from_diagonal(&x), &alpha)?;
            Ok((trace - integral).abs())
        }),
        property(cfg, s, "bound", cfg.tol, |rng, n| {
            let a = random_psd_mixed(rng, n);
            let alpha = random_alpha(rng, n);
            let v = sugeno_trace(&a, &alpha)?;
            let cap = psd_eigenvalues(&a)?[0].min(alpha.get(n));
            Ok((-v).max(v - cap).max(0.0))
        }),
    ]
}

/// `(a, b)` with `lambda_i(a) <= lambda_i(b)`: either `a = c b c*` for a
/// contraction `c`, or `a` with eigenvalues `r_i lambda_i(b)`, `r_i in [0, 1]`,
/// in an unrelated eigenbasis.
fn dominated_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<(HermitianMatrix, HermitianMatrix)> {
    let b = random_psd_mixed(rng, n);
    let a = if rng.random_bool(0.5) {
        let c = random_contraction(rng, n);
        HermitianMatrix::symmetrize(&(&(&c * b.as_matrix()) * &c.adjoint()))
    } else {
        let scaled: Vec<f64> = psd_eigenvalues(&b)?
            .iter()
            .map(|l| l * if rng.random_bool(0.2) { 1.0 } else { rng.random::<f64>() })
            .collect();
        HermitianMatrix::from_diagonal(&scaled).conjugate_by(&random_unitary(rng, n))
    };
    Ok((a, b))
}

fn majorization_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    let s = "majorization";
    vec![
        property(cfg, s, "contraction_implies_dominance", DOMINANCE_TOL, |rng, n| {
            let b = random_psd_mixed(rng, n);
            let c = random_contraction(rng, n);
            let a = HermitianMatrix::symmetrize(&(&(&c * b.as_matrix()) * &c.adjoint()));
            let (la, lb) = (psd_eigenvalues(&a)?, psd_eigenvalues(&b)?);
            let excess = la.iter().zip(&lb).map(|(x, y)| x - y).fold(0.0, f64::max);
            let r = excess / (1.0 + lb[0]);
            Ok(if eigen_dominates(&b, &a)? { r } else { r.max(BROKEN) })
        }),
        property(cfg, s, "factorization_residual", CONTRACTION_TOL, |rng, n| {
            let (a, b) = dominated_pair(rng, n)?;
            let c = contraction_factor(&a, &b)?;
            Ok(factorization_residual(&a, &b, &c) / (1.0 + b.as_matrix().frobenius_norm()))
        }),
        property(cfg, s, "contraction_norm", DOMINANCE_TOL, |rng, n| {
            let (a, b) = dominated_pair(rng, n)?;
            Ok((contraction_norm(&contraction_factor(&a, &b)?)? - 1.0).max(0.0))
        }),
        property(cfg, s, "spanning_family", 0.0, |rng, n| {
            let (a, b) = if rng.random_bool(0.5) {
                dominated_pair(rng, n)?
            } else {
                (random_psd_mixed(rng, n), random_psd_mixed(rng, n))
            };
            let slack = DOMINANCE_TOL * (1.0 + psd_eigenvalues(&b)?[0]);
            let mut all = true;
            for i in 1..=n {
                let e = AlphaWeights::indicator(n, i)?;
                all &= choquet_trace(&a, &e)? <= choquet_trace(&b, &e)? + slack;
            }
            Ok(check(all == eigen_dominates(&b, &a)?))
        }),
        property(cfg, s, "dominance_random_alpha", cfg.tol, |rng, n| {
            let (a, b) = dominated_pair(rng, n)?;
            let alpha = random_alpha(rng, n);
            Ok((choquet_trace(&a, &alpha)? - choquet_trace(&b, &alpha)?).max(0.0))
        }),
        property(cfg, s, "order_chain", 0.0, |rng, n| {
            // a <= b gives dominance, and dominance gives weak majorization
            let a = random_psd_mixed(rng, n);
            let b = &a + &random_psd(rng, n);
            let dominated = eigen_dominates(&b, &a)?;
            let weak = weak_majorizes(&psd_eigenvalues(&b)?, &psd_eigenvalues(&a)?)?;
            // x = T y for a product of T-transforms, so x is majorized by y
            let y: Vec<f64> = (0..n).map(|_| 2.0 * rng.random::<f64>() - 0.5).collect();
            let mut x = y.clone();
            for _ in 0..n {
                let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
                let t: f64 = rng.random();
                let (xi, xj) = (x[i], x[j]);
                x[i] = t * xi + (1.0 - t) * xj;
                x[j] = t * xj + (1.0 - t) * xi;
            }
            let strong = majorizes(&y, &x)?;
            let strong_weak = weak_majorizes(&y, &x)?;
            Ok(check(dominated && weak && strong && strong_weak))
        }),
    ]
}

struct Panel {
    concave: Vec<AlphaWeights>,
    non_concave: Vec<AlphaWeights>,
}

/// Weights for the norm-equivalence panel, dimensions cycling over
/// `min(3, max_n)..=max_n`.
fn norm_panel(cfg: &SuiteConfig) -> Panel {
    let lo = cfg.max_n.min(3);
    let span = cfg.max_n - lo + 1;
    let draw = |kind: &str, j: usize| {
        let mut rng = sample_rng(cfg.seed, &format!("norms/panel/{kind}"), j as u64);
        let n = lo + j % span;
        if kind == "concave" {
            random_concave_alpha(&mut rng, n)
        } else {
            random_non_concave_alpha(&mut rng, n)
        }
    };
    Panel {
        concave: (0..PANEL_SIZE).map(|j| draw("concave", j)).collect(),
        non_concave: (0..PANEL_SIZE).map(|j| draw("non_concave", j)).collect(),
    }
}

/// Index `k` (1-based) of the first strict increase `c_k < c_{k+1}`.
fn first_increase(alpha: &AlphaWeights) -> Option<usize> {
    let c = alpha.to_coeffs();
    c.values().windows(2).position(|w| w[0] < w[1]).map(|k| k + 1)
}

fn norms_suite(cfg: &SuiteConfig) -> Vec<PropertyResult> {
    let s = "norms";
    let panel = norm_panel(cfg);
    let mut out = Vec::new();

    out.push(property(cfg, s, "concave_iff_non_increasing", 0.0, |rng, n| {
        let alpha = match rng.random_range(0..3) {
            0 => random_alpha(rng, n),
            1 => random_concave_alpha(rng, n),
            _ => random_non_concave_alpha(rng, n),
        };
        Ok(check(alpha.is_concave() == alpha.to_coeffs().is_non_increasing()))
    }));

    let mut axioms = Tally::new("concave_norm_axioms", FUNCTIONAL_TOL, cfg.seed);
    let mut positive = Tally::new("concave_two_positive", FUNCTIONAL_TOL, cfg.seed);
    let mut schwartz = Tally::new("schwartz_consistency", 0.0, cfg.seed);
    for (j, alpha) in panel.concave.iter().enumerate() {
        let sub_seed = cfg.seed.wrapping_add(j as u64);
        let panel_ok = alpha.is_concave();
        match norm_axiom_check(alpha, cfg.samples, sub_seed) {
            Ok(r) => {
                axioms.instances += r.samples;
                axioms.failures += r.total_violations() + usize::from(!panel_ok);
                axioms.worst = axioms.worst.max(r.worst_triangle_excess);
            }
            Err(_) => axioms.record(Err(Error::Precondition("panel weight".into()))),
        }
        let phi = AlphaNorm::new(alpha.clone());
        let r = two_positivity_sample_test(&phi, alpha.n(), cfg.samples, sub_seed);
        positive.instances += r.samples;
        positive.failures += r.violations;
        if -r.worst_margin > positive.worst {
            positive.worst = -r.worst_margin;
        }
        schwartz.instances += r.schwartz_checked;
        schwartz.failures += r.schwartz_failures;
    }
    out.extend([axioms.finish(), positive.finish(), schwartz.finish()]);

    let mut witness = Tally::new("non_concave_witness", 0.0, cfg.seed);
    let mut triangle = Tally::new("non_concave_triangle", 0.0, cfg.seed);
    for alpha in &panel.non_concave {
        let certified = (|| -> Result<bool> {
            let k = first_increase(alpha).ok_or_else(|| Error::Precondition("no increase".into()))?;
            let c = alpha.to_coeffs();
            let t = choose_witness_t(c.values()[k - 1], c.values()[k])
                .ok_or_else(|| Error::Precondition("no admissible t".into()))?;
            let w = non_two_positive_witness(&c, k, t)?;
            // the tester must flag the witness block as a violation
            let phi = AlphaNorm::new(alpha.clone());
            let flagged = two_positivity_test_with(&phi, &[w.block()], alpha.n(), 0, cfg.seed).violations == 1;
            Ok(w.verified && w.determinant_consistent() && flagged)
        })();
        witness.record(certified.clone().map(|ok| check(ok && !alpha.is_concave())));
        if matches!(certified, Ok(true)) {
            witness.certify();
        }

        let found = find_triangle_violation(alpha).map(|w| w.is_some());
        triangle.record(found.clone().map(check));
        if matches!(found, Ok(true)) {
            triangle.certify();
        }
    }
    out.extend([witness.finish(), triangle.finish()]);

    out.push(property(cfg, s, "block_factorization", CONTRACTION_TOL, |rng, n| {
        let (blk, _, _) = random_positive_block(rng, n)?;
        if !block2_is_positive(&blk)? {
            return Ok(BROKEN);
        }
        let k = block2_contraction(&blk)?;
        Ok((contraction_norm(&k)? - 1.0).max(0.0))
    }));

    out.push(property(cfg, s, "ky_fan_decomposition", cfg.tol, |rng, n| {
        let alpha = random_concave_alpha(rng, n);
        let a = gaussian_matrix(rng, n).scale_real(2.0 * rng.random::<f64>());
        let w = ky_fan_decomposition(&alpha)?;
        let norm = alpha_norm(&a, &alpha)?;
        let mut combo = 0.0;
        for (k, wk) in w.iter().enumerate() {
            combo += wk * ky_fan_norm(&a, k + 1)?;
        }
        Ok((norm - combo).abs() / (1.0 + norm))
    }));

    out
}

/// Runs one suite, or all of them in the order choquet, sugeno,
/// majorization, norms.
pub fn run_suite(kind: SuiteKind, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let properties = match kind {
        SuiteKind::Choquet => choquet_suite(cfg),
        SuiteKind::Sugeno => sugeno_suite(cfg),
        SuiteKind::Majorization => majorization_suite(cfg),
        SuiteKind::Norms => norms_suite(cfg),
        SuiteKind::All => {
            let mut all = Vec::new();
            for (prefix, part) in [
                ("choquet", choquet_suite(cfg)),
                ("sugeno", sugeno_suite(cfg)),
                ("majorization", majorization_suite(cfg)),
                ("norms", norms_suite(cfg)),
            ] {
                all.extend(part.into_iter().map(|mut p| {
                    p.name = format!("{prefix}.{}", p.name);
                    p
                }));
            }
            all
        }
    };
    let pass = properties.iter().all(|p| p.pass);
    Ok(SuiteReport {
        suite: kind.name().to_string(),
        seed: cfg.seed,
        max_n: cfg.max_n,
        samples: cfg.samples,
        properties,
        pass,
    })
}
