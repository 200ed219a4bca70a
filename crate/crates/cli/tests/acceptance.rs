//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nltrace_core::choquet::{choquet_integral, choquet_trace, ValueVector};
use nltrace_core::measures::measure_from_alpha;
use nltrace_core::norms::{
    alpha_norm, block2_is_positive, ky_fan_decomposition, ky_fan_norm, Block2,
};
use nltrace_core::random::{
    gaussian_matrix, random_alpha, random_concave_alpha, random_hermitian, random_unitary,
    sample_rng,
};
use nltrace_core::suite::{run_suite, SuiteConfig, SuiteKind, SuiteReport, PANEL_SIZE};
use nltrace_core::sugeno::{sugeno_integral, sugeno_trace};
use nltrace_core::{eig_desc, AlphaWeights, ComplexMatrix, HermitianMatrix};
use rand::Rng;

const SEED: u64 = 42;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn alpha(v: &[f64]) -> AlphaWeights {
    AlphaWeights::new(v.to_vec()).expect("valid alpha")
}

fn suite_cfg(samples: usize) -> SuiteConfig {
    SuiteConfig {
        max_n: 6,
        samples,
        seed: SEED,
        ..SuiteConfig::default()
    }
}

/// All listed properties present and passing; returns a short summary.
fn properties_pass(report: &SuiteReport, names: &[&str], min_instances: usize) -> Outcome {
    let mut bad = Vec::new();
    for name in names {
        match report.property(name) {
            Some(p) if p.pass && p.failures == 0 && p.instances >= min_instances => {}
            Some(p) => bad.push(format!("{name}: {} failures / {} instances", p.failures, p.instances)),
            None => bad.push(format!("{name}: missing")),
        }
    }
    if bad.is_empty() {
        let worst = names
            .iter()
            .filter_map(|n| report.property(n))
            .map(|p| p.worst_residual)
            .fold(0.0, f64::max);
        outcome(true, format!("{} properties, worst residual {worst:e}", names.len()))
    } else {
        outcome(false, bad.join("; "))
    }
}

fn counterexample_reproduction() -> Outcome {
    let r3 = 3f64.sqrt();
    let a = HermitianMatrix::from_diagonal(&[1.0, 1.0, 3.0]);
    let b = HermitianMatrix::from_diagonal(&[3.0, 1.0, 1.0]);
    let c = ComplexMatrix::from_diagonal(&[r3, 1.0, r3]);
    let s2 = alpha(&[0.0, 0.0, 1.0, 1.0]);
    let blk = Block2::new(a.clone(), b.clone(), c.clone()).unwrap();
    let positive = block2_is_positive(&blk).unwrap();
    let sa = alpha_norm(a.as_matrix(), &s2).unwrap();
    let sb = alpha_norm(b.as_matrix(), &s2).unwrap();
    let sc = alpha_norm(&c, &s2).unwrap();
    let det = sa * sb - sc * sc;
    let ok = positive
        && (sa - 1.0).abs() <= 1e-10
        && (sb - 1.0).abs() <= 1e-10
        && (sc - r3).abs() <= 1e-10
        && (det + 2.0).abs() <= 1e-10;
    outcome(ok, format!("block positive {positive}, s2 = ({sa}, {sb}, {sc}), det = {det}"))
}

fn cone_table() -> Outcome {
    let a = HermitianMatrix::from_diagonal(&[3.0, 2.0, 1.0]);
    let rows = [
        ([0.0, 1.0, 2.0, 3.0], 6.0),
        ([0.0, 1.0, 1.0, 1.0], 3.0),
        ([0.0, 0.0, 1.0, 1.0], 2.0),
        ([0.0, 0.0, 0.0, 1.0], 1.0),
    ];
    let mut got = Vec::new();
    let mut ok = true;
    for (al, want) in rows {
        let v = choquet_trace(&a, &alpha(&al)).unwrap();
        ok &= (v - want).abs() <= 1e-12;
        got.push(v);
    }
    outcome(ok, format!("values {got:?}"))
}

fn choquet_suite() -> Outcome {
    let r = run_suite(SuiteKind::Choquet, &suite_cfg(200)).unwrap();
    properties_pass(
        &r,
        &["comonotonic_additivity", "unitary_invariance", "monotonicity", "positive_homogeneity"],
        200,
    )
}

fn sugeno_suite() -> Outcome {
    let r = run_suite(SuiteKind::Sugeno, &suite_cfg(200)).unwrap();
    properties_pass(
        &r,
        &["comonotonic_f_additivity", "unitary_invariance", "monotonicity", "f_homogeneity", "saturation"],
        200,
    )
}

fn dominance_suite() -> Outcome {
    let r = run_suite(SuiteKind::Majorization, &suite_cfg(200)).unwrap();
    properties_pass(
        &r,
        &[
            "contraction_implies_dominance",
            "factorization_residual",
            "contraction_norm",
            "spanning_family",
        ],
        200,
    )
}

fn norm_panel() -> Outcome {
    let r = run_suite(SuiteKind::Norms, &suite_cfg(500)).unwrap();
    let base = properties_pass(
        &r,
        &[
            "concave_iff_non_increasing",
            "concave_norm_axioms",
            "concave_two_positive",
            "non_concave_witness",
            "non_concave_triangle",
        ],
        1,
    );
    let axioms = r.property("concave_norm_axioms").unwrap();
    let positive = r.property("concave_two_positive").unwrap();
    let witness = r.property("non_concave_witness").unwrap();
    let triangle = r.property("non_concave_triangle").unwrap();
    let counts_ok = axioms.instances >= 500 * PANEL_SIZE
        && positive.instances >= 500 * PANEL_SIZE
        && witness.certified_violations == Some(PANEL_SIZE)
        && triangle.certified_violations == Some(PANEL_SIZE);
    outcome(
        base.pass && counts_ok,
        format!(
            "{}; {} concave / {} non-concave weights, {} witnesses and {} triangle violations certified",
            base.detail,
            PANEL_SIZE,
            PANEL_SIZE,
            witness.certified_violations.unwrap_or(0),
            triangle.certified_violations.unwrap_or(0)
        ),
    )
}

fn scalar_consistency() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..200u64 {
        let mut rng = sample_rng(SEED, "acceptance/scalar", i);
        let n = 1 + (i as usize) % 6;
        let x: Vec<f64> = (0..n)
            .map(|_| if rng.random_bool(0.15) { 0.0 } else { 5.0 * rng.random::<f64>() })
            .collect();
        let al = random_alpha(&mut rng, n);
        let mu = measure_from_alpha(&al).unwrap();
        let f = ValueVector::new(x.clone()).unwrap();
        let d = HermitianMatrix::from_diagonal(&x);
        let c = (choquet_trace(&d, &al).unwrap() - choquet_integral(&f, &mu).unwrap()).abs();
        let s = (sugeno_trace(&d, &al).unwrap() - sugeno_integral(&f, &mu).unwrap()).abs();
        worst = worst.max(c).max(s);
    }
    outcome(worst <= 1e-10, format!("200 vectors, worst difference {worst:e}"))
}

fn ky_fan() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..100u64 {
        let mut rng = sample_rng(SEED, "acceptance/kyfan", i);
        let n = 2 + (i as usize) % 7;
        let al = random_concave_alpha(&mut rng, n);
        let a = gaussian_matrix(&mut rng, n);
        let w = ky_fan_decomposition(&al).unwrap();
        let norm = alpha_norm(&a, &al).unwrap();
        let combo: f64 = (1..=n).map(|k| w[k - 1] * ky_fan_norm(&a, k).unwrap()).sum();
        worst = worst.max((norm - combo).abs() / (1.0 + norm));
    }
    outcome(worst <= 1e-8, format!("100 matrices, worst relative gap {worst:e}"))
}

fn eigensolver() -> Outcome {
    let mut recon = 0.0f64;
    let mut unitarity = 0.0f64;
    for i in 0..500u64 {
        let mut rng = sample_rng(SEED, "acceptance/eig", i);
        let n = 1 + (i as usize) % 8;
        let a = random_hermitian(&mut rng, n);
        let spec = eig_desc(&a).unwrap();
        let scale = 1.0 + a.as_matrix().frobenius_norm();
        recon = recon.max((a.as_matrix() - spec.reconstruct().as_matrix()).frobenius_norm() / scale);
        let u = spec.unitary();
        let gram = &u.adjoint() * u;
        unitarity = unitarity.max((&gram - &ComplexMatrix::identity(n)).frobenius_norm());
    }
    let mut known = 0.0f64;
    for i in 0..100u64 {
        let mut rng = sample_rng(SEED, "acceptance/known", i);
        let n = 1 + (i as usize) % 8;
        let mut lambda: Vec<f64> = (0..n).map(|_| 10.0 * rng.random::<f64>() - 5.0).collect();
        if n > 2 {
            lambda[1] = lambda[0];
        }
        let u = random_unitary(&mut rng, n);
        let a = HermitianMatrix::from_diagonal(&lambda).conjugate_by(&u);
        lambda.sort_by(|x, y| y.total_cmp(x));
        let got = eig_desc(&a).unwrap();
        for (x, y) in got.eigenvalues().iter().zip(&lambda) {
            known = known.max((x - y).abs());
        }
    }
    outcome(
        recon <= 1e-9 && unitarity <= 1e-9 && known <= 1e-9,
        format!("reconstruction {recon:e}, unitarity {unitarity:e}, known spectra {known:e}"),
    )
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nltrace"))
            .args(["suite", "--seed", "42"])
            .env_remove("NLTRACE_TOL")
            .output()
            .expect("nltrace runs")
    };
    let (first, second) = (run(), run());
    let same = first.stdout == second.stdout && !first.stdout.is_empty();
    let exit_ok = first.status.success() && second.status.success();
    outcome(
        same && exit_ok,
        format!("{} bytes, identical: {same}, exit 0: {exit_ok}", first.stdout.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("2x2 counterexample for s2 on M3", Some(Duration::from_secs(1)), counterexample_reproduction),
        ("Choquet trace of diag(3,2,1) for the extreme alphas", None, cone_table),
        ("Choquet trace characterization suite", Some(Duration::from_secs(60)), choquet_suite),
        ("Sugeno trace characterization suite", Some(Duration::from_secs(60)), sugeno_suite),
        ("eigenvalue dominance and contraction factorization suite", None, dominance_suite),
        ("alpha-norm equivalence panel", None, norm_panel),
        ("scalar and matrix integrals agree", None, scalar_consistency),
        ("Ky Fan decomposition of concave alpha-norms", None, ky_fan),
        ("eigensolver quality gate", None, eigensolver),
        ("suite --seed 42 is byte-for-byte reproducible", None, determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = check();
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            if elapsed > *limit {
                out.pass = false;
                out.detail.push_str(&format!("; exceeded {limit:?}"));
            }
        }
        if !out.pass {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {name} ({}; {:.2?})",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
