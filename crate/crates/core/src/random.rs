//! Seeded generators for test inputs.
//!
//! All randomness comes from ChaCha8. A run seed plus a property tag fixes the
//! key; the sample index selects the ChaCha stream, so sample `i` of a
//! property sees the same numbers whether samples run serially or in
//! parallel.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::measures::{AlphaWeights, CoefficientVector};
use crate::spectral::operator_norm;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for sample `index` of the property identified by `tag`.
pub fn sample_rng(seed: u64, tag: &str, index: u64) -> SampleRng {
    // FNV-1a over the tag keeps distinct properties on distinct keys.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(index);
    rng
}

pub fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Ginibre matrix with standard complex normal entries.
pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| gaussian_complex(rng))
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// `diag(R)` moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n).into_dmatrix();
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    ComplexMatrix::from_fn(n, |i, j| {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        q[(i, j)] * phase
    })
}

pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    HermitianMatrix::symmetrize(&gaussian_matrix(rng, n))
}

/// `g g*` for a Ginibre `g`; one draw in four has a rank-deficient `g`.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    let rank = if n > 1 && rng.random_bool(0.25) {
        rng.random_range(1..n)
    } else {
        n
    };
    let g = gaussian_matrix(rng, n);
    let g = ComplexMatrix::from_fn(n, |i, j| {
        if j < rank {
            g.get(i, j)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    HermitianMatrix::symmetrize(&(&g * &g.adjoint()))
}

/// PSD matrix `u diag(values) u*` whose spectrum is drawn from a small set
/// of levels, so repeated eigenvalues are common.
pub fn random_psd_with_ties<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    let levels = rng.random_range(1..=n);
    let palette: Vec<f64> = (0..levels).map(|_| 3.0 * rng.random::<f64>()).collect();
    let mut values: Vec<f64> = (0..n)
        .map(|_| palette[rng.random_range(0..levels)])
        .collect();
    if rng.random_bool(0.2) {
        values[0] = 0.0;
    }
    let u = random_unitary(rng, n);
    HermitianMatrix::from_diagonal(&values).conjugate_by(&u)
}

/// Either a generic PSD matrix or one with a repeated spectrum.
pub fn random_psd_mixed<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    if rng.random_bool(0.5) {
        random_psd(rng, n)
    } else {
        random_psd_with_ties(rng, n)
    }
}

/// Ginibre matrix scaled to unit operator norm and then by a uniform factor
/// in `[0, 1]`.
pub fn random_contraction<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = gaussian_matrix(rng, n);
    let top = operator_norm(&g).expect("Ginibre matrix has a finite spectrum");
    let factor: f64 = rng.random();
    if top == 0.0 {
        return ComplexMatrix::zeros(n);
    }
    g.scale_real(factor / top)
}

/// Monotone alpha with `alpha(1) > 0`; increments are sometimes zero.
pub fn random_alpha<R: Rng + ?Sized>(rng: &mut R, n: usize) -> AlphaWeights {
    let coeffs: Vec<f64> = (0..n)
        .map(|i| {
            if i > 0 && rng.random_bool(0.2) {
                0.0
            } else {
                0.1 + 2.0 * rng.random::<f64>()
            }
        })
        .collect();
    CoefficientVector::new(coeffs)
        .expect("nonnegative coefficients")
        .to_alpha()
}

/// Concave alpha: non-increasing positive coefficients.
pub fn random_concave_alpha<R: Rng + ?Sized>(rng: &mut R, n: usize) -> AlphaWeights {
    let mut coeffs: Vec<f64> = (0..n).map(|_| 2.0 * rng.random::<f64>()).collect();
    coeffs.sort_by(|a, b| b.total_cmp(a));
    coeffs[0] += 0.1;
    if rng.random_bool(0.3) {
        // plateau
        let k = rng.random_range(0..n);
        let v = coeffs[k];
        for c in coeffs.iter_mut().skip(k).take(2) {
            *c = v;
        }
    }
    CoefficientVector::new(coeffs)
        .expect("nonnegative coefficients")
        .to_alpha()
}

/// Non-concave alpha with `alpha(1) > 0`: at least one strict increase
/// `c_k + 0.1 <= c_{k+1}` in the coefficients. Requires `n >= 2`.
pub fn random_non_concave_alpha<R: Rng + ?Sized>(rng: &mut R, n: usize) -> AlphaWeights {
    assert!(n >= 2, "a non-concave alpha needs n >= 2");
    let mut coeffs: Vec<f64> = (0..n).map(|_| 0.1 + 2.0 * rng.random::<f64>()).collect();
    let k = rng.random_range(0..n - 1);
    if coeffs[k] >= coeffs[k + 1] {
        coeffs.swap(k, k + 1);
    }
    // keep the increase well above comparison tolerances
    if coeffs[k + 1] < coeffs[k] + 0.1 {
        coeffs[k + 1] = coeffs[k] + 0.1;
    }
    if k == 0 && rng.random_bool(0.3) {
        coeffs[0] = 0.05;
    }
    CoefficientVector::new(coeffs)
        .expect("nonnegative coefficients")
        .to_alpha()
}
