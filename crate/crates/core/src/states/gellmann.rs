//! SU(3) algebra for qutrit internal states.
//!
//! A qutrit state is written `rho = (I + sqrt(3) n . lambda) / 3` with the
//! real 8-vector `n = (sqrt(3)/2) Tr(rho lambda)`. The symmetric and
//! antisymmetric structure constants are computed once from the Gell-Mann
//! matrices themselves:
//!
//! ```text
//! d_rst = 1/4 Tr({lambda_r, lambda_s} lambda_t)
//! f_rst = -i/4 Tr([lambda_r, lambda_s] lambda_t)
//! ```

use std::sync::OnceLock;

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

/// The eight Gell-Mann matrices `lambda_1 .. lambda_8`, normalized to
/// `Tr(lambda_r lambda_s) = 2 delta_rs`.
pub fn gell_mann_matrices() -> [ComplexMatrix; 8] {
    let mut out: [ComplexMatrix; 8] = std::array::from_fn(|_| ComplexMatrix::zeros(3, 3));
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let slots = [(0, 1), (3, 4), (5, 6)];
    for (&(j, k), &(sym, anti)) in pairs.iter().zip(&slots) {
        out[sym] = ComplexMatrix::from_fn(3, 3, |r, c| {
            if (r, c) == (j, k) || (r, c) == (k, j) {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        out[anti] = ComplexMatrix::from_fn(3, 3, |r, c| {
            if (r, c) == (j, k) {
                C64::new(0.0, -1.0)
            } else if (r, c) == (k, j) {
                C64::new(0.0, 1.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
    }
    out[2] = ComplexMatrix::from_real_rows(&[
        vec![1.0, 0.0, 0.0],
        vec![0.0, -1.0, 0.0],
        vec![0.0, 0.0, 0.0],
    ])
    .unwrap();
    let s = 1.0 / 3f64.sqrt();
    out[7] = ComplexMatrix::from_real_rows(&[
        vec![s, 0.0, 0.0],
        vec![0.0, s, 0.0],
        vec![0.0, 0.0, -2.0 * s],
    ])
    .unwrap();
    out
}

/// `d_rst` and `f_rst`, indexed `[r][s][t]` from zero.
pub struct StructureConstants {
    pub d: [[[f64; 8]; 8]; 8],
    pub f: [[[f64; 8]; 8]; 8],
}

pub fn structure_constants() -> &'static StructureConstants {
    static CONSTANTS: OnceLock<StructureConstants> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let l = gell_mann_matrices();
        let mut d = [[[0.0; 8]; 8]; 8];
        let mut f = [[[0.0; 8]; 8]; 8];
        for r in 0..8 {
            for s in 0..8 {
                let rs = l[r].mul(&l[s]).unwrap();
                let sr = l[s].mul(&l[r]).unwrap();
                let anti = rs.add(&sr).unwrap();
                let comm = rs.add(&sr.scale(C64::new(-1.0, 0.0))).unwrap();
                for t in 0..8 {
                    d[r][s][t] = anti.mul(&l[t]).unwrap().trace().re / 4.0;
                    f[r][s][t] = (C64::new(0.0, -0.25) * comm.mul(&l[t]).unwrap().trace()).re;
                }
            }
        }
        StructureConstants { d, f }
    })
}

/// Qutrit analogue of a Bloch vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GellMannVector(pub [f64; 8]);

impl GellMannVector {
    pub fn from_state(rho: &DensityMatrix) -> Result<Self> {
        if rho.dim() != 3 {
            return Err(Error::Dimension(format!(
                "Gell-Mann vectors need a qutrit, got dimension {}",
                rho.dim()
            )));
        }
        let l = gell_mann_matrices();
        let scale = 3f64.sqrt() / 2.0;
        Ok(Self(std::array::from_fn(|r| {
            scale * rho.matrix().mul(&l[r]).unwrap().trace().re
        })))
    }

    /// `(I + sqrt(3) n . lambda) / 3`, validated as a state.
    pub fn to_state(&self) -> Result<DensityMatrix> {
        let l = gell_mann_matrices();
        let mut m = ComplexMatrix::identity(3);
        for (r, lr) in l.iter().enumerate() {
            m = m.add(&lr.scale(C64::new(3f64.sqrt() * self.0[r], 0.0)))?;
        }
        DensityMatrix::new(m.scale(C64::new(1.0 / 3.0, 0.0)))
    }

    pub fn unit(r: usize) -> Self {
        let mut v = [0.0; 8];
        v[r] = 1.0;
        Self(v)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Symmetric product `(a * b)_r = sqrt(3) d_rst a_s b_t`.
    pub fn star(&self, other: &Self) -> Self {
        let d = &structure_constants().d;
        Self(contract(d, &self.0, &other.0, 3f64.sqrt()))
    }

    /// Antisymmetric product `(a ^ b)_r = f_rst a_s b_t`.
    pub fn wedge(&self, other: &Self) -> Self {
        let f = &structure_constants().f;
        Self(contract(f, &self.0, &other.0, 1.0))
    }
}

fn contract(c: &[[[f64; 8]; 8]; 8], a: &[f64; 8], b: &[f64; 8], scale: f64) -> [f64; 8] {
    std::array::from_fn(|r| {
        let mut acc = 0.0;
        for s in 0..8 {
            for t in 0..8 {
                acc += c[r][s][t] * a[s] * b[t];
            }
        }
        scale * acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_are_orthonormal_and_traceless() {
        let l = gell_mann_matrices();
        for r in 0..8 {
            assert!(l[r].trace().norm() < 1e-15);
            assert!(l[r].hermiticity_deviation() < 1e-15);
            for s in 0..8 {
                let g = l[r].mul(&l[s]).unwrap().trace();
                let want = if r == s { 2.0 } else { 0.0 };
                assert!((g - C64::new(want, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn structure_constant_symmetries() {
        let StructureConstants { d, f } = structure_constants();
        assert!((f[0][1][2] - 1.0).abs() < 1e-14);
        // f_458 = f_678 = sqrt(3)/2, d_118 = 1/sqrt(3)
        assert!((f[3][4][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((f[5][6][7] - 3f64.sqrt() / 2.0).abs() < 1e-14);
        assert!((d[0][0][7] - 1.0 / 3f64.sqrt()).abs() < 1e-14);
        for r in 0..8 {
            for s in 0..8 {
                for t in 0..8 {
                    let fv = f[r][s][t];
                    assert!((fv + f[s][r][t]).abs() < 1e-14);
                    assert!((fv + f[r][t][s]).abs() < 1e-14);
                    assert!((fv + f[t][s][r]).abs() < 1e-14);
                    let dv = d[r][s][t];
                    assert!((dv - d[s][r][t]).abs() < 1e-14);
                    assert!((dv - d[r][t][s]).abs() < 1e-14);
                    assert!((dv - d[t][s][r]).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn wedge_and_star_products() {
        let e1 = GellMannVector::unit(0);
        let e2 = GellMannVector::unit(1);
        let w = e1.wedge(&e2);
        for (r, x) in w.0.iter().enumerate() {
            assert!((x - if r == 2 { 1.0 } else { 0.0 }).abs() < 1e-14);
        }
        let a = GellMannVector([0.1, -0.3, 0.2, 0.05, 0.4, -0.1, 0.0, 0.25]);
        let b = GellMannVector([-0.2, 0.1, 0.3, 0.3, -0.05, 0.2, 0.15, -0.1]);
        assert!(a.wedge(&a).norm() < 1e-15);
        let (ab, ba) = (a.star(&b), b.star(&a));
        assert!(ab.0.iter().zip(&ba.0).all(|(x, y)| (x - y).abs() < 1e-15));
        let (ab, ba) = (a.wedge(&b), b.wedge(&a));
        assert!(ab.0.iter().zip(&ba.0).all(|(x, y)| (x + y).abs() < 1e-15));
    }

    #[test]
    fn state_roundtrip_and_pure_norm() {
        let psi = [C64::new(0.5, 0.0), C64::new(0.5, 0.5), C64::new(0.0, -0.5)];
        let rho = DensityMatrix::pure(&psi).unwrap();
        let n = GellMannVector::from_state(&rho).unwrap();
        assert!((n.norm() - 1.0).abs() < 1e-12);
        let back = n.to_state().unwrap();
        assert!(back.matrix().max_abs_diff(rho.matrix()) < 1e-12);
        let mixed = GellMannVector::from_state(&DensityMatrix::maximally_mixed(3).unwrap()).unwrap();
        assert!(mixed.norm() < 1e-15);
    }
}
