//! Hermitian eigendecomposition by cyclic complex Jacobi rotations, plus the
//! functional calculus built on it: square roots, absolute values, singular
//! values and `f(a)` for functions on the spectrum.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianMatrix};

/// Jacobi stops once the off-diagonal Frobenius norm is below
/// `JACOBI_TOL * (1 + ||a||_F)`.
pub const JACOBI_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues in `[-PSD_FLOOR (1 + lambda_1), 0)` are clamped to zero.
pub const PSD_FLOOR: f64 = 1e-9;
/// Default relative tolerance for merging eigenvalues into clusters.
pub const CLUSTER_TOL: f64 = 1e-8;

/// `a = u diag(eigenvalues) u*` with eigenvalues in decreasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumDecomposition {
    eigenvalues: Vec<f64>,
    unitary: ComplexMatrix,
}

impl SpectrumDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Columns are orthonormal eigenvectors, aligned with [`Self::eigenvalues`].
    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `u diag(values) u*` for an arbitrary per-eigenvalue list.
    pub fn synthesize(&self, values: &[f64]) -> HermitianMatrix {
        assert_eq!(values.len(), self.dim());
        let u = self.unitary.as_dmatrix();
        let n = self.dim();
        let out = ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| u[(i, k)] * values[k] * u[(j, k)].conj())
                .sum::<Complex64>()
        });
        HermitianMatrix::symmetrize(&out)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.synthesize(&self.eigenvalues)
    }

    pub fn clusters(&self, tol: f64) -> Vec<Cluster> {
        distinct_clusters(self, tol)
    }
}

/// A group of numerically equal eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues decreasing.
///
/// Cyclic Jacobi with complex rotations. Each rotation first removes the
/// phase of the pivot `a_pq` and then applies a real Givens rotation that
/// zeroes it. Ties keep the order in which the solver produced them.
pub fn eig_desc(a: &HermitianMatrix) -> Result<SpectrumDecomposition> {
    let n = a.dim();
    let mut m = a.as_matrix().as_dmatrix().clone();
    let mut v = ComplexMatrix::identity(n).into_dmatrix();
    let threshold = JACOBI_TOL * (1.0 + a.as_matrix().frobenius_norm());

    let off_norm = |m: &nalgebra::DMatrix<Complex64>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&m) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // J restricted to (p, q): [[c, s], [-s e^{-i theta}, c e^{-i theta}]]
                let jpp = Complex64::new(c, 0.0);
                let jpq = Complex64::new(s, 0.0);
                let jqp = -phase.conj() * s;
                let jqq = phase.conj() * c;

                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * jpp + mkq * jqp;
                    m[(k, q)] = mkp * jpq + mkq * jqq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = jpp.conj() * mpk + jqp.conj() * mqk;
                    m[(q, k)] = jpq.conj() * mpk + jqq.conj() * mqk;
                }
                m[(p, q)] = Complex64::new(0.0, 0.0);
                m[(q, p)] = Complex64::new(0.0, 0.0);
                m[(p, p)] = Complex64::new(app - t * r, 0.0);
                m[(q, q)] = Complex64::new(aqq + t * r, 0.0);

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * jpp + vkq * jqp;
                    v[(k, q)] = vkp * jpq + vkq * jqq;
                }
            }
        }
        converged = off_norm(&m) <= threshold;
    }
    if !converged {
        return Err(Error::NonConvergence {
            sweeps,
            off_norm: off_norm(&m),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(j, j)].re.total_cmp(&m[(i, i)].re));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let unitary = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(SpectrumDecomposition {
        eigenvalues,
        unitary,
    })
}

/// Groups consecutive eigenvalues closer than `tol (1 + |lambda_1|)`.
/// Each cluster reports the mean of its members.
pub fn distinct_clusters(spec: &SpectrumDecomposition, tol: f64) -> Vec<Cluster> {
    let ev = spec.eigenvalues();
    let Some(&first) = ev.first() else {
        return Vec::new();
    };
    let gap = tol * (1.0 + first.abs());
    let mut out = Vec::new();
    let mut sum = first;
    let mut count = 1usize;
    for w in ev.windows(2) {
        if (w[0] - w[1]).abs() <= gap {
            sum += w[1];
            count += 1;
        } else {
            out.push(Cluster {
                value: sum / count as f64,
                multiplicity: count,
            });
            sum = w[1];
            count = 1;
        }
    }
    out.push(Cluster {
        value: sum / count as f64,
        multiplicity: count,
    });
    out
}

/// A real function on the finite spectrum of some matrix, stored as one value
/// per eigenvalue cluster (decreasing cluster order).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralFunction {
    values: Vec<f64>,
    cluster_tolerance: f64,
}

impl SpectralFunction {
    pub fn new(values: Vec<f64>, cluster_tolerance: f64) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidVector(
                "spectral function values must be finite".into(),
            ));
        }
        if !(cluster_tolerance >= 0.0) {
            return Err(Error::InvalidVector(
                "cluster tolerance must be nonnegative".into(),
            ));
        }
        Ok(Self {
            values,
            cluster_tolerance,
        })
    }

    /// Samples `f` at the cluster values of `spec`.
    pub fn from_fn(spec: &SpectrumDecomposition, tol: f64, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = distinct_clusters(spec, tol)
            .iter()
            .map(|c| f(c.value))
            .collect();
        Self::new(values, tol)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn cluster_tolerance(&self) -> f64 {
        self.cluster_tolerance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise combination; both functions must live on the same clusters.
    pub fn zip_with(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Alignment {
                expected: self.len(),
                got: other.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&x, &y)| op(x, y))
            .collect();
        Self::new(values, self.cluster_tolerance)
    }
}

/// Functional calculus `f(a) = u diag(f(lambda_1), ..., f(lambda_n)) u*`.
pub fn apply_spectral_function(
    spec: &SpectrumDecomposition,
    f: &SpectralFunction,
) -> Result<HermitianMatrix> {
    let clusters = distinct_clusters(spec, f.cluster_tolerance);
    if clusters.len() != f.len() {
        return Err(Error::Alignment {
            expected: clusters.len(),
            got: f.len(),
        });
    }
    let per_eigenvalue: Vec<f64> = clusters
        .iter()
        .zip(f.values())
        .flat_map(|(c, &v)| std::iter::repeat_n(v, c.multiplicity))
        .collect();
    Ok(spec.synthesize(&per_eigenvalue))
}

/// Clamping floor `-PSD_FLOOR (1 + max(lambda_1, 0))` for a decreasing list.
pub fn psd_floor(eigenvalues: &[f64]) -> f64 {
    let top = eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    -PSD_FLOOR * (1.0 + top)
}

/// Clamps tiny negative eigenvalues to zero; fails on genuinely negative ones.
pub fn clamp_psd(eigenvalues: &[f64]) -> Result<Vec<f64>> {
    let floor = psd_floor(eigenvalues);
    if let Some(&min) = eigenvalues.last() {
        if min < floor {
            return Err(Error::NotPsd {
                min_eigenvalue: min,
                floor,
            });
        }
    }
    Ok(eigenvalues.iter().map(|&x| x.max(0.0)).collect())
}

/// Decreasing eigenvalues of a PSD matrix after clamping.
pub fn psd_eigenvalues(a: &HermitianMatrix) -> Result<Vec<f64>> {
    clamp_psd(eig_desc(a)?.eigenvalues())
}

pub fn psd_sqrt(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let spec = eig_desc(a)?;
    let roots: Vec<f64> = clamp_psd(spec.eigenvalues())?
        .into_iter()
        .map(f64::sqrt)
        .collect();
    Ok(spec.synthesize(&roots))
}

/// Eigen-decomposition of the Hermitian dilation `[[0, a], [a*, 0]]`, whose
/// spectrum is `±s_i(a)`.
///
/// Working on the dilation keeps small singular values accurate to about
/// `eps ||a||`; square roots of the eigenvalues of `a* a` would only give
/// `sqrt(eps) ||a||`.
fn dilation_spectrum(a: &ComplexMatrix) -> Result<SpectrumDecomposition> {
    let n = a.dim();
    let zero = Complex64::new(0.0, 0.0);
    let d = ComplexMatrix::from_fn(2 * n, |i, j| match (i < n, j < n) {
        (true, false) => a.get(i, j - n),
        (false, true) => a.get(j, i - n).conj(),
        _ => zero,
    });
    eig_desc(&HermitianMatrix::symmetrize(&d))
}

/// Exactly Hermitian input is decomposed directly: `|a| = u |Lambda| u*`.
fn exact_hermitian(a: &ComplexMatrix) -> Option<SpectrumDecomposition> {
    if a.hermitian_defect() != 0.0 {
        return None;
    }
    HermitianMatrix::new(a.clone()).ok().and_then(|h| eig_desc(&h).ok())
}

/// `|a| = (a* a)^{1/2}`.
pub fn abs_matrix(a: &ComplexMatrix) -> Result<HermitianMatrix> {
    if let Some(spec) = exact_hermitian(a) {
        let abs: Vec<f64> = spec.eigenvalues().iter().map(|l| l.abs()).collect();
        return Ok(spec.synthesize(&abs));
    }
    let n = a.dim();
    let spec = dilation_spectrum(a)?;
    let u = spec.unitary().as_dmatrix();
    // the eigenvector of s_i is (x; y)/sqrt(2) with a y = s_i x, so
    // |a| = 2 sum_i s_i y y*
    let m = ComplexMatrix::from_fn(n, |r, c| {
        (0..n)
            .map(|i| u[(n + r, i)] * u[(n + c, i)].conj() * (2.0 * spec.eigenvalues()[i].max(0.0)))
            .sum()
    });
    Ok(HermitianMatrix::symmetrize(&m))
}

/// `s_i(a) = lambda_i(|a|)`, decreasing and nonnegative.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    if let Some(spec) = exact_hermitian(a) {
        let mut s: Vec<f64> = spec.eigenvalues().iter().map(|l| l.abs()).collect();
        s.sort_by(|x, y| y.total_cmp(x));
        return Ok(s);
    }
    let n = a.dim();
    Ok(dilation_spectrum(a)?.eigenvalues()[..n]
        .iter()
        .map(|&s| s.max(0.0))
        .collect())
}

/// Largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(a)?[0])
}
