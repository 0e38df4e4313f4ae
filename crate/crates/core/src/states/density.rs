use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// Tolerance on Hermiticity and unit trace at construction.
pub const STATE_TOL: f64 = 1e-9;
/// Most negative eigenvalue tolerated in a valid state.
pub const PSD_TOL: f64 = 1e-10;

/// Internal state of a single photon: a Hermitian, positive semi-definite,
/// unit-trace matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    rho: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates and wraps `rho`. Invalid matrices are rejected, never renormalized.
    pub fn new(rho: ComplexMatrix) -> Result<Self> {
        let dim = rho.require_square()?;
        if dim == 0 {
            return Err(Error::InvalidState("zero-dimensional state".into()));
        }
        let herm = rho.hermiticity_deviation();
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (deviation {herm:.3e})"
            )));
        }
        let tr = rho.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let min_eig = hermitian_eigen(&rho)
            .0
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min_eig < -PSD_TOL {
            return Err(Error::InvalidState(format!(
                "not positive semi-definite (min eigenvalue {min_eig:.3e})"
            )));
        }
        Ok(Self { rho })
    }

    /// `|psi><psi|` for the normalized direction of `psi`.
    pub fn pure(psi: &[C64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if psi.is_empty() || norm < 1e-12 || !norm.is_finite() {
            return Err(Error::InvalidState("pure state from a zero vector".into()));
        }
        let unit: Vec<C64> = psi.iter().map(|z| z / norm).collect();
        Self::new(ComplexMatrix::outer(&unit))
    }

    /// Computational basis state `|k>` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::Validation(format!("basis index {k} out of range for dimension {dim}")));
        }
        let mut v = vec![C64::new(0.0, 0.0); dim];
        v[k] = C64::new(1.0, 0.0);
        Self::pure(&v)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidState("zero-dimensional state".into()));
        }
        Self::new(ComplexMatrix::identity(dim).scale(C64::new(1.0 / dim as f64, 0.0)))
    }

    /// Convex combination `w * a + (1 - w) * b`.
    pub fn mix(w: f64, a: &Self, b: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::Validation(format!("mixing weight {w} outside [0, 1]")));
        }
        if a.dim() != b.dim() {
            return Err(Error::Dimension(format!(
                "mixing states of dimension {} and {}",
                a.dim(),
                b.dim()
            )));
        }
        let m = a
            .rho
            .scale(C64::new(w, 0.0))
            .add(&b.rho.scale(C64::new(1.0 - w, 0.0)))?;
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.rho.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn purity(&self) -> f64 {
        self.rho.mul(&self.rho).map(|m| m.trace().re).unwrap_or(f64::NAN)
    }

    /// Elementwise complex conjugate, again a valid state.
    pub fn conj(&self) -> Self {
        Self { rho: self.rho.conj() }
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::new(self.rho.kron(&other.rho))
    }

    /// Pure-state decomposition `rho = sum_k w_k |v_k><v_k|`.
    ///
    /// Members are ordered by descending weight; each eigenvector is scaled so
    /// its first non-negligible component is real and positive, making the
    /// decomposition reproducible. Weights below `PSD_TOL` are dropped.
    pub fn pure_ensemble(&self) -> Vec<(f64, Vec<C64>)> {
        let (values, vectors) = hermitian_eigen(&self.rho);
        let mut members: Vec<(f64, Vec<C64>)> = values
            .into_iter()
            .zip(vectors)
            .filter(|(w, _)| *w > PSD_TOL)
            .map(|(w, v)| (w, fix_phase(v)))
            .collect();
        members.sort_by(|a, b| {
            b.0.total_cmp(&a.0).then_with(|| {
                let ka: Vec<f64> = a.1.iter().flat_map(|z| [z.re, z.im]).collect();
                let kb: Vec<f64> = b.1.iter().flat_map(|z| [z.re, z.im]).collect();
                kb.iter()
                    .zip(&ka)
                    .map(|(x, y)| x.total_cmp(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        let total: f64 = members.iter().map(|m| m.0).sum();
        for m in &mut members {
            m.0 /= total;
        }
        members
    }
}

fn fix_phase(mut v: Vec<C64>) -> Vec<C64> {
    if let Some(lead) = v.iter().find(|z| z.norm() > 1e-9).copied() {
        let phase = lead.conj() / lead.norm();
        for z in &mut v {
            *z *= phase;
        }
    }
    v
}

/// Eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
pub(crate) fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, Vec<Vec<C64>>) {
    let eig = m.as_dmatrix().clone().symmetric_eigen();
    let n = m.rows();
    let vectors = (0..n)
        .map(|k| eig.eigenvectors.column(k).iter().copied().collect())
        .collect();
    (eig.eigenvalues.iter().copied().collect(), vectors)
}
