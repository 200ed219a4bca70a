//! Cross-module checks through the public API: the concavity equivalences
//! for alpha-norms, dominance chains and the measure/weight correspondence.

use nltrace_core::choquet::{choquet_integral, choquet_trace, ValueVector};
use nltrace_core::majorization::{
    contraction_factor, eigen_dominates, factorization_residual, weak_majorizes,
};
use nltrace_core::measures::{alpha_from_measure, measure_from_alpha};
use nltrace_core::norms::{
    alpha_norm, block2_is_positive, choose_witness_t, find_triangle_violation,
    non_two_positive_witness, norm_axiom_check, two_positivity_sample_test,
    two_positivity_test_with, AlphaNorm, ValueMatrix,
};
use nltrace_core::random::{
    random_alpha, random_concave_alpha, random_non_concave_alpha, random_psd, random_psd_mixed,
    random_unitary, sample_rng,
};
use nltrace_core::spectral::psd_eigenvalues;
use nltrace_core::suite::{run_suite, SuiteConfig, SuiteKind};
use nltrace_core::sugeno::sugeno_trace;
use nltrace_core::{AlphaWeights, ComplexMatrix, HermitianMatrix};

#[test]
fn non_concave_weights_yield_both_counterexamples() {
    for i in 0..40 {
        let mut rng = sample_rng(101, "non_concave", i);
        let n = 2 + (i as usize) % 5;
        let alpha = random_non_concave_alpha(&mut rng, n);
        assert!(!alpha.is_concave());

        let c = alpha.to_coeffs();
        let k = c.values().windows(2).position(|w| w[0] < w[1]).unwrap() + 1;
        let t = choose_witness_t(c.values()[k - 1], c.values()[k]).unwrap();
        let w = non_two_positive_witness(&c, k, t).unwrap();
        assert!(w.verified && w.determinant < 0.0);
        assert!(block2_is_positive(&w.block()).unwrap());

        // the witness values agree with a direct evaluation of the norm
        let phi = AlphaNorm::new(alpha.clone());
        let v = ValueMatrix::of(&phi, &w.block()).unwrap();
        assert!((v.determinant() - w.determinant).abs() <= 1e-9 * (1.0 + w.s_c * w.s_c));
        let r = two_positivity_test_with(&phi, &[w.block()], n, 0, 1);
        assert_eq!(r.violations, 1);

        let tri = find_triangle_violation(&alpha).unwrap().unwrap();
        assert!(tri.lhs > tri.rhs);
        let report = norm_axiom_check(&alpha, 5, i).unwrap();
        assert!(report.triangle_violations >= 1);
    }
}

#[test]
fn concave_weights_pass_the_sampled_tests() {
    for i in 0..6 {
        let mut rng = sample_rng(202, "concave", i);
        let n = 3 + (i as usize) % 4;
        let alpha = random_concave_alpha(&mut rng, n);
        assert!(alpha.is_concave());
        assert!(find_triangle_violation(&alpha).unwrap().is_none());
        assert_eq!(norm_axiom_check(&alpha, 100, i).unwrap().total_violations(), 0);
        let r = two_positivity_sample_test(&AlphaNorm::new(alpha), n, 100, i);
        assert_eq!(r.violations, 0);
        assert_eq!(r.schwartz_failures, 0);
    }
}

#[test]
fn alpha_norm_of_psd_is_the_choquet_trace() {
    for i in 0..30 {
        let mut rng = sample_rng(303, "psd_norm", i);
        let n = 1 + (i as usize) % 6;
        let a = random_psd_mixed(&mut rng, n);
        let alpha = random_alpha(&mut rng, n);
        let norm = alpha_norm(a.as_matrix(), &alpha).unwrap();
        let trace = choquet_trace(&a, &alpha).unwrap();
        assert!((norm - trace).abs() <= 1e-9 * (1.0 + trace));
    }
}

#[test]
fn loewner_order_implies_dominance_and_factorization() {
    for i in 0..30 {
        let mut rng = sample_rng(404, "loewner", i);
        let n = 1 + (i as usize) % 6;
        let a = random_psd_mixed(&mut rng, n);
        let b = &a + &random_psd(&mut rng, n);
        assert!(eigen_dominates(&b, &a).unwrap());
        let (la, lb) = (psd_eigenvalues(&a).unwrap(), psd_eigenvalues(&b).unwrap());
        assert!(weak_majorizes(&lb, &la).unwrap());
        let c = contraction_factor(&a, &b).unwrap();
        assert!(factorization_residual(&a, &b, &c) <= 1e-7 * (1.0 + b.as_matrix().frobenius_norm()));
        // phi_alpha is monotone along the order for every alpha
        let alpha = random_alpha(&mut rng, n);
        assert!(choquet_trace(&a, &alpha).unwrap() <= choquet_trace(&b, &alpha).unwrap() + 1e-8);
        assert!(sugeno_trace(&a, &alpha).unwrap() <= sugeno_trace(&b, &alpha).unwrap() + 1e-8);
    }
}

#[test]
fn weights_and_symmetric_measures_correspond() {
    for i in 0..30 {
        let mut rng = sample_rng(505, "measures", i);
        let n = 1 + (i as usize) % 7;
        let alpha = random_alpha(&mut rng, n);
        let mu = measure_from_alpha(&alpha).unwrap();
        assert!(mu.is_permutation_invariant());
        assert_eq!(alpha_from_measure(&mu), alpha);

        // the trace of a diagonal matrix is the integral of its diagonal
        let x: Vec<f64> = psd_eigenvalues(&random_psd(&mut rng, n)).unwrap();
        let u = random_unitary(&mut rng, n);
        let a = HermitianMatrix::from_diagonal(&x).conjugate_by(&u);
        let integral = choquet_integral(&ValueVector::new(x).unwrap(), &mu).unwrap();
        assert!((choquet_trace(&a, &alpha).unwrap() - integral).abs() <= 1e-9 * (1.0 + integral));
    }
}

#[test]
fn unitary_conjugation_leaves_norms_unchanged() {
    let mut rng = sample_rng(606, "unitary", 0);
    let alpha = AlphaWeights::new(vec![0.0, 2.0, 3.0, 3.5, 3.75]).unwrap();
    let d = ComplexMatrix::from_diagonal(&[4.0, -1.0, 0.5, 0.0]);
    let u = random_unitary(&mut rng, 4);
    let v = random_unitary(&mut rng, 4);
    let rotated = &(&u * &d) * &v;
    // singular values of d are (4, 1, 0.5, 0)
    let want = 2.0 * 4.0 + 1.0 + 0.5 * 0.5;
    assert!((alpha_norm(&rotated, &alpha).unwrap() - want).abs() < 1e-12);
}

#[test]
fn full_suite_passes_at_the_largest_dimension() {
    let cfg = SuiteConfig {
        max_n: 8,
        samples: 60,
        seed: 9,
        ..SuiteConfig::default()
    };
    let r = run_suite(SuiteKind::All, &cfg).unwrap();
    let failing: Vec<_> = r.properties.iter().filter(|p| !p.pass).collect();
    assert!(failing.is_empty(), "{failing:?}");
    assert_eq!(r, run_suite(SuiteKind::All, &cfg).unwrap());
}
