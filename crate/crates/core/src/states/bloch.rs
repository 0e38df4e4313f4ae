use nalgebra::Vector3;

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// Length above one still accepted as a valid Bloch vector.
pub const BLOCH_TOL: f64 = 1e-10;

/// The Pauli matrices `(sigma_x, sigma_y, sigma_z)`.
pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    [
        ComplexMatrix::new(2, 2, vec![z, one, one, z]).unwrap(),
        ComplexMatrix::new(2, 2, vec![z, -i, i, z]).unwrap(),
        ComplexMatrix::new(2, 2, vec![one, z, z, -one]).unwrap(),
    ]
}

/// Real 3-vector `r = Tr(rho sigma)` of a qubit state, `|r| <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector(Vector3<f64>);

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(x, y, z))
    }

    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::Validation("non-finite Bloch vector".into()));
        }
        if v.norm() > 1.0 + BLOCH_TOL {
            return Err(Error::InvalidState(format!(
                "Bloch vector length {} exceeds 1",
                v.norm()
            )));
        }
        Ok(Self(v))
    }

    /// Bloch vector of a qubit state.
    pub fn from_state(rho: &DensityMatrix) -> Result<Self> {
        if rho.dim() != 2 {
            return Err(Error::Dimension(format!(
                "Bloch vectors need a qubit, got dimension {}",
                rho.dim()
            )));
        }
        let comps = pauli_matrices().map(|s| {
            rho.matrix()
                .mul(&s)
                .map(|m| m.trace().re)
                .unwrap_or(f64::NAN)
        });
        Self::from_vector(Vector3::from(comps))
    }

    /// `(I + r . sigma) / 2`.
    pub fn to_state(&self) -> Result<DensityMatrix> {
        let [sx, sy, sz] = pauli_matrices();
        let m = ComplexMatrix::identity(2)
            .add(&sx.scale(C64::new(self.0.x, 0.0)))?
            .add(&sy.scale(C64::new(self.0.y, 0.0)))?
            .add(&sz.scale(C64::new(self.0.z, 0.0)))?
            .scale(C64::new(0.5, 0.0));
        DensityMatrix::new(m)
    }

    pub fn vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn length(&self) -> f64 {
        self.0.norm()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        (self.length() - 1.0).abs() <= tol
    }
}

/// Signed volume `a . (b x c)`.
pub fn scalar_triple_product(a: &BlochVector, b: &BlochVector, c: &BlochVector) -> f64 {
    a.0.dot(&b.0.cross(&c.0))
}
