//! Seeded random instances for the randomized equivalence suites.
//!
//! All suites draw from [`SuiteRng`] (ChaCha8) so that a seed fully
//! determines every generated unitary and state.

use nalgebra::{DMatrix, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{ComplexMatrix, C64};
use crate::scattering::Interferometer;
use crate::states::{BlochVector, DensityMatrix};

pub type SuiteRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut SuiteRng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// `R`'s diagonal moved into `Q`.
pub fn haar_unitary(rng: &mut SuiteRng, n: usize) -> Interferometer {
    let z = DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for k in 0..n {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, k)] *= phase;
        }
    }
    Interferometer::new(ComplexMatrix::from_dmatrix(q))
        .expect("QR factor of a Ginibre matrix is unitary")
}

pub fn pure_vector(rng: &mut SuiteRng, dim: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..dim).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn pure_state(rng: &mut SuiteRng, dim: usize) -> DensityMatrix {
    DensityMatrix::pure(&pure_vector(rng, dim)).expect("random unit vector")
}

/// Random mixed state `A A^dagger / Tr` with `A` a `dim x rank` Ginibre
/// matrix and the rank drawn uniformly from `1..=dim`.
pub fn mixed_state(rng: &mut SuiteRng, dim: usize) -> DensityMatrix {
    let rank = rng.random_range(1..=dim);
    let a = DMatrix::from_fn(dim, rank, |_, _| gaussian(rng));
    let m = &a * a.adjoint();
    let tr = m.trace();
    DensityMatrix::new(ComplexMatrix::from_dmatrix(m / tr)).expect("Ginibre state is valid")
}

/// Uniformly random point in the unit ball.
pub fn bloch_vector(rng: &mut SuiteRng) -> BlochVector {
    let v: Vector3<f64> = Vector3::from_fn(|_, _| rng.sample(StandardNormal));
    let r: f64 = rng.random::<f64>().cbrt();
    BlochVector::from_vector(v.normalize() * r).expect("inside the unit ball")
}

pub fn qubit_state(rng: &mut SuiteRng) -> DensityMatrix {
    bloch_vector(rng).to_state().expect("valid Bloch vector")
}
