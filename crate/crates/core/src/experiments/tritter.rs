use serde::Serialize;

use crate::error::{Error, Result};
use crate::scattering::{
    output_distribution, output_probability, InputSpec, Interferometer, ModeOccupation,
    OutcomeDistribution,
};
use crate::states::{mixed_qubit, pairwise_trace, scalar_triple_product, BlochVector, DensityMatrix};

/// Three-photon tritter statistics, one value per individual output pattern
/// of each cyclic class.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TritterStats {
    /// `111`
    pub p111: f64,
    /// Each of `120`, `012`, `201`.
    pub p120: f64,
    /// Each of `210`, `102`, `021`.
    pub p210: f64,
    /// Each of `300`, `030`, `003`.
    pub p300: f64,
}

const CLASS_120: [[usize; 3]; 3] = [[1, 2, 0], [0, 1, 2], [2, 0, 1]];
const CLASS_210: [[usize; 3]; 3] = [[2, 1, 0], [1, 0, 2], [0, 2, 1]];
const CLASS_300: [[usize; 3]; 3] = [[3, 0, 0], [0, 3, 0], [0, 0, 3]];

impl TritterStats {
    /// `p111 + 3 (p120 + p210 + p300)`.
    pub fn total(&self) -> f64 {
        self.p111 + 3.0 * (self.p120 + self.p210 + self.p300)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.p111 - other.p111,
            self.p120 - other.p120,
            self.p210 - other.p210,
            self.p300 - other.p300,
        ]
        .iter()
        .fold(0.0, |m, d| m.max(d.abs()))
    }

    /// Class averages of a three-mode, three-photon distribution, together
    /// with the largest deviation of any pattern from its class average.
    pub fn from_distribution(dist: &OutcomeDistribution) -> Result<(Self, f64)> {
        let get = |s: &[usize; 3]| {
            dist.probability(s)
                .ok_or_else(|| Error::Dimension(format!("pattern {s:?} missing from distribution")))
        };
        let mut spread: f64 = 0.0;
        let mut class = |patterns: &[[usize; 3]; 3]| -> Result<f64> {
            let ps = patterns.iter().map(get).collect::<Result<Vec<f64>>>()?;
            let mean = ps.iter().sum::<f64>() / 3.0;
            spread = ps.iter().fold(spread, |m, p| m.max((p - mean).abs()));
            Ok(mean)
        };
        let p120 = class(&CLASS_120)?;
        let p210 = class(&CLASS_210)?;
        let p300 = class(&CLASS_300)?;
        let p111 = get(&[1, 1, 1])?;
        Ok((Self { p111, p120, p210, p300 }, spread))
    }

    /// Convex combination `sum_k w_k stats_k`.
    pub fn weighted_sum<'a>(terms: impl IntoIterator<Item = (f64, &'a Self)>) -> Self {
        terms.into_iter().fold(
            Self { p111: 0.0, p120: 0.0, p210: 0.0, p300: 0.0 },
            |acc, (w, s)| Self {
                p111: acc.p111 + w * s.p111,
                p120: acc.p120 + w * s.p120,
                p210: acc.p210 + w * s.p210,
                p300: acc.p300 + w * s.p300,
            },
        )
    }
}

/// Tritter statistics of qubit photons from the sum of Bloch dot products
/// `dots` and the volume `vabc`.
///
/// With the tritter `exp(+2 pi i j k / 3) / sqrt(3)` a positive volume raises
/// the `(120)` patterns and lowers the `(210)` patterns; the conjugate
/// interferometer exchanges the two classes.
pub fn tritter_stats_from_geometry(dots: f64, vabc: f64) -> TritterStats {
    let s3 = 3f64.sqrt();
    let p111 = (3.0 + dots) / 18.0;
    TritterStats {
        p111,
        p120: (3.0 - dots + s3 * vabc) / 36.0,
        p210: (3.0 - dots - s3 * vabc) / 36.0,
        p300: 2.0 * p111 / 3.0,
    }
}

/// Closed-form tritter statistics for three qubit photons.
pub fn tritter_closed_form(states: &[DensityMatrix; 3]) -> Result<TritterStats> {
    if states.iter().any(|s| s.dim() != 2) {
        return Err(Error::Dimension("tritter closed form needs qubit states".into()));
    }
    let [a, b, c] = [&states[0], &states[1], &states[2]].map(BlochVector::from_state);
    let (a, b, c) = (a?, b?, c?);
    let dots = a.dot(&b) + a.dot(&c) + b.dot(&c);
    Ok(tritter_stats_from_geometry(dots, scalar_triple_product(&a, &b, &c)))
}

/// Tritter statistics from the general scattering engine.
pub fn tritter_engine_stats(states: &[DensityMatrix; 3]) -> Result<TritterStats> {
    let input = InputSpec::first_modes(3, states.to_vec())?;
    let dist = output_distribution(&Interferometer::tritter(), &input)?;
    Ok(TritterStats::from_distribution(&dist)?.0)
}

/// `V_abc` read off the partially bunched probabilities,
/// `6 sqrt(3) (p120 - p210)`.
pub fn extract_vabc(stats: &TritterStats) -> f64 {
    6.0 * 3f64.sqrt() * (stats.p120 - stats.p210)
}

/// Two photons in tritter inputs 1 and 2 detected in outputs 1 and 2:
/// `(2 - Tr(rho_j rho_k)) / 9`.
pub fn two_photon_tritter_p11(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    Ok((2.0 - pairwise_trace(a, b)?) / 9.0)
}

/// Visibility of the corresponding dip, `Tr(rho_j rho_k) / 2`.
pub fn two_photon_tritter_visibility(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    Ok(pairwise_trace(a, b)? / 2.0)
}

/// Same quantity as [`two_photon_tritter_p11`] through the scattering engine.
pub fn two_photon_tritter_p11_engine(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    let input = InputSpec::first_modes(3, vec![a.clone(), b.clone()])?;
    output_probability(
        &Interferometer::tritter(),
        &input,
        &ModeOccupation::new(vec![1, 1, 0]),
    )
}

/// Statistics of three identical mixed qubits built as the weighted sum of
/// the eight pure inputs with each photon in `|0>` or `|1>`, weighted
/// `p^{n_0} (1 - p)^{n_1}`.
pub fn mixed_preparation_by_summation(p: f64) -> Result<TritterStats> {
    mixed_qubit(p)?;
    let basis = [DensityMatrix::basis(2, 0)?, DensityMatrix::basis(2, 1)?];
    let mut terms = Vec::with_capacity(8);
    for combo in 0..8usize {
        let bits = [combo & 1, (combo >> 1) & 1, (combo >> 2) & 1];
        let n1 = bits.iter().sum::<usize>() as i32;
        let w = p.powi(3 - n1) * (1.0 - p).powi(n1);
        let states = bits.map(|b| basis[b].clone());
        terms.push((w, tritter_engine_stats(&states)?));
    }
    Ok(TritterStats::weighted_sum(terms.iter().map(|(w, s)| (*w, s))))
}
