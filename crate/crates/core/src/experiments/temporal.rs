//! Arrival-time degree of freedom for identical Gaussian wavepackets.
//!
//! Wavepackets of duration `sigma_t` delayed by `t_j` and `t_k` have amplitude
//! overlap `g = exp(-(t_j - t_k)^2 / (8 sigma_t^2))`, so a two-photon dip has
//! the envelope `exp(-dt^2 / (4 sigma_t^2))`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::states::DensityMatrix;

/// Eigenvalues of the overlap matrix below this count as zero.
pub const RANK_TOL: f64 = 1e-12;

/// Amplitude overlap of two wavepackets separated by `dt`.
pub fn gaussian_overlap(dt: f64, sigma_t: f64) -> f64 {
    (-dt * dt / (8.0 * sigma_t * sigma_t)).exp()
}

/// Delayed wavepackets written as real vectors in a common space of
/// dimension equal to the number of photons.
#[derive(Clone, Debug)]
pub struct TemporalEmbedding {
    overlaps: Vec<Vec<f64>>,
    vectors: Vec<Vec<f64>>,
    rank: usize,
}

impl TemporalEmbedding {
    pub fn overlaps(&self) -> &[Vec<f64>] {
        &self.overlaps
    }

    /// One unit vector per photon; `vectors[j] . vectors[k] = overlaps[j][k]`.
    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Number of linearly independent wavepackets.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.overlaps.len()
    }

    /// Projector onto photon `j`'s wavepacket.
    pub fn state(&self, j: usize) -> Result<DensityMatrix> {
        let v: Vec<C64> = self.vectors[j].iter().map(|&x| C64::new(x, 0.0)).collect();
        DensityMatrix::pure(&v)
    }

    /// `rho ⊗ |t_j><t_j|`.
    pub fn attach(&self, rho: &DensityMatrix, j: usize) -> Result<DensityMatrix> {
        rho.tensor(&self.state(j)?)
    }
}

/// Factorizes the overlap matrix of wavepackets at `delays` as `G = Q L Q^T`
/// and takes rows of `Q sqrt(L)` as the embedded vectors.
pub fn temporal_embedding(delays: &[f64], sigma_t: f64) -> Result<TemporalEmbedding> {
    if !(sigma_t > 0.0 && sigma_t.is_finite()) {
        return Err(Error::Validation(format!("wavepacket duration {sigma_t} must be positive")));
    }
    if delays.is_empty() || delays.iter().any(|t| !t.is_finite()) {
        return Err(Error::Validation("delays must be a non-empty list of finite numbers".into()));
    }
    let n = delays.len();
    let overlaps: Vec<Vec<f64>> = delays
        .iter()
        .map(|a| delays.iter().map(|b| gaussian_overlap(a - b, sigma_t)).collect())
        .collect();
    let gram = DMatrix::from_fn(n, n, |j, k| overlaps[j][k]);
    let eig = gram.symmetric_eigen();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    if let Some(&last) = order.last() {
        if eig.eigenvalues[last] < -1e-10 {
            return Err(Error::Consistency(format!(
                "overlap matrix has negative eigenvalue {:.3e}",
                eig.eigenvalues[last]
            )));
        }
    }
    let rank = order.iter().filter(|&&k| eig.eigenvalues[k] > RANK_TOL).count();
    let vectors = (0..n)
        .map(|j| {
            order
                .iter()
                .map(|&k| eig.eigenvectors[(j, k)] * eig.eigenvalues[k].max(0.0).sqrt())
                .collect()
        })
        .collect();
    Ok(TemporalEmbedding { overlaps, vectors, rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn equal_delays_collapse() {
        let e = temporal_embedding(&[0.3, 0.3, 0.3], 1.0).unwrap();
        assert_eq!(e.rank(), 1);
        for j in 0..3 {
            for k in 0..3 {
                assert!((dot(&e.vectors()[j], &e.vectors()[k]) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn distant_delays_are_orthogonal() {
        let e = temporal_embedding(&[0.0, 100.0, -100.0], 1.0).unwrap();
        assert_eq!(e.rank(), 3);
        assert!(dot(&e.vectors()[0], &e.vectors()[1]).abs() < 1e-12);
    }

    #[test]
    fn half_overlap_delay() {
        let sigma = 2.5e-12;
        let dt = 2.0 * sigma * (2.0 * 2f64.ln()).sqrt();
        let e = temporal_embedding(&[0.0, dt], sigma).unwrap();
        assert!((e.overlaps()[0][1] - 0.5).abs() < 1e-14);
        assert!((dot(&e.vectors()[0], &e.vectors()[1]) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn factorization_reproduces_overlaps() {
        let delays = [0.0, 0.7, -1.3, 2.2];
        let e = temporal_embedding(&delays, 0.9).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                assert!((dot(&e.vectors()[j], &e.vectors()[k]) - e.overlaps()[j][k]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_bad_duration() {
        assert!(temporal_embedding(&[0.0], 0.0).is_err());
        assert!(temporal_embedding(&[0.0], -1.0).is_err());
        assert!(temporal_embedding(&[], 1.0).is_err());
    }
}
