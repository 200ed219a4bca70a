//! Weak and strong majorization of real vectors, eigenvalue dominance
//! between PSD matrices and the contraction factorization `a = c b c*`.

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::spectral::{clamp_psd, eig_desc, psd_floor, singular_values};

/// Slack on partial sums.
pub const MAJORIZATION_TOL: f64 = 1e-10;
/// Relative slack `1e-8 (1 + lambda_1(b))` for eigenvalue dominance.
pub const DOMINANCE_TOL: f64 = 1e-8;

pub fn decreasing_rearrangement(x: &[f64]) -> Vec<f64> {
    let mut out = x.to_vec();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

fn check_same_len(y: &[f64], x: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: y.len(),
            got: x.len(),
        });
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::InvalidVector("entries must be finite".into()));
    }
    Ok(())
}

/// Tests `x ≺_w y`: every partial sum of `x↓` is bounded by that of `y↓`.
pub fn weak_majorizes(y: &[f64], x: &[f64]) -> Result<bool> {
    check_same_len(y, x)?;
    let xs = decreasing_rearrangement(x);
    let ys = decreasing_rearrangement(y);
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sx > sy + MAJORIZATION_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tests `x ≺ y`: weak majorization plus equal totals.
pub fn majorizes(y: &[f64], x: &[f64]) -> Result<bool> {
    if !weak_majorizes(y, x)? {
        return Ok(false);
    }
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    Ok((sx - sy).abs() <= MAJORIZATION_TOL * (1.0 + sy.abs()))
}

fn check_dims(b: &HermitianMatrix, a: &HermitianMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: a.dim(),
        });
    }
    Ok(())
}

/// First index with `lambda_i(a) > lambda_i(b) + tol`, if any.
fn dominance_violation(lb: &[f64], la: &[f64]) -> Option<usize> {
    let tol = DOMINANCE_TOL * (1.0 + lb[0]);
    la.iter().zip(lb).position(|(x, y)| *x > y + tol)
}

/// `lambda_i(a) <= lambda_i(b)` for every `i` (both PSD).
pub fn eigen_dominates(b: &HermitianMatrix, a: &HermitianMatrix) -> Result<bool> {
    check_dims(b, a)?;
    let la = clamp_psd(eig_desc(a)?.eigenvalues())?;
    let lb = clamp_psd(eig_desc(b)?.eigenvalues())?;
    Ok(dominance_violation(&lb, &la).is_none())
}

/// Contraction `c` with `a = c b c*`, built as `c = U_a d U_b*` where `U_a`,
/// `U_b` are the eigenvector matrices of `a`, `b` and
/// `d_i = sqrt(lambda_i(a) / lambda_i(b))`.
///
/// Where `lambda_i(b)` sits at the PSD floor, dominance forces
/// `lambda_i(a)` there too and `d_i = 0`.
pub fn contraction_factor(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<ComplexMatrix> {
    check_dims(b, a)?;
    let sa = eig_desc(a)?;
    let sb = eig_desc(b)?;
    let la = clamp_psd(sa.eigenvalues())?;
    let lb = clamp_psd(sb.eigenvalues())?;
    if let Some(index) = dominance_violation(&lb, &la) {
        return Err(Error::NotDominated {
            index,
            a_value: la[index],
            b_value: lb[index],
        });
    }
    let floor = -psd_floor(&lb);
    let tol = DOMINANCE_TOL * (1.0 + lb[0]);
    let d: Vec<f64> = la
        .iter()
        .zip(&lb)
        .enumerate()
        .map(|(index, (&x, &y))| {
            if y > floor {
                Ok((x / y).sqrt().min(1.0))
            } else if x <= y + tol {
                Ok(0.0)
            } else {
                Err(Error::DegenerateRatio { index })
            }
        })
        .collect::<Result<_>>()?;

    let d_mat = ComplexMatrix::from_diagonal(&d);
    Ok(&(sa.unitary() * &d_mat) * &sb.unitary().adjoint())
}

/// `||a - c b c*||_F`.
pub fn factorization_residual(a: &HermitianMatrix, b: &HermitianMatrix, c: &ComplexMatrix) -> f64 {
    let cbc = &(c * b.as_matrix()) * &c.adjoint();
    (a.as_matrix() - &cbc).frobenius_norm()
}

/// Operator norm of `c` (largest singular value).
pub fn contraction_norm(c: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(c)?[0])
}
