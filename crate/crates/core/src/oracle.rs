//! Brute-force reference for output statistics.
//!
//! Each mixed internal state is split into a pure-state ensemble. For every
//! combination of ensemble members the photons are written as single-particle
//! wavefunctions over the product basis `(output mode, internal level)`, the
//! `N`-photon wavefunction is symmetrized by an explicit sum over photon
//! relabelings, and `|psi|^2` is summed over every ordered tuple of
//! single-particle labels, binned by the external occupation pattern. The
//! ensemble results are then convex-combined.
//!
//! Nothing here goes through permanents or cycle traces; the cost grows like
//! `(m d)^N N! N` per ensemble member, so this is for desk-sized instances.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::C64;
use crate::scattering::{InputSpec, Interferometer, ModeOccupation, OutcomeDistribution};

pub const MAX_ORACLE_PHOTONS: usize = 4;
pub const MAX_ORACLE_MODES: usize = 4;
pub const MAX_ORACLE_DIM: usize = 3;

/// Pure-state decomposition of one photon's internal state.
#[derive(Clone, Debug)]
pub struct PureEnsemble {
    members: Vec<(f64, Vec<C64>)>,
}

impl PureEnsemble {
    /// Validates normalization of weights and vectors.
    pub fn new(members: Vec<(f64, Vec<C64>)>) -> Result<Self> {
        let total: f64 = members.iter().map(|m| m.0).sum();
        if members.is_empty() || (total - 1.0).abs() > 1e-12 || members.iter().any(|m| m.0 < 0.0) {
            return Err(Error::Validation(format!(
                "ensemble weights must be non-negative and sum to 1 (got {total})"
            )));
        }
        let dim = members[0].1.len();
        for (_, v) in &members {
            let n: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            if v.len() != dim || (n - 1.0).abs() > 1e-12 {
                return Err(Error::Validation("ensemble vectors must be unit vectors of equal length".into()));
            }
        }
        Ok(Self { members })
    }

    pub fn dim(&self) -> usize {
        self.members[0].1.len()
    }

    pub fn members(&self) -> &[(f64, Vec<C64>)] {
        &self.members
    }
}

/// Output distribution computed by explicit symmetrization, using the
/// eigendecomposition of each internal state.
pub fn oracle_distribution(u: &Interferometer, input: &InputSpec) -> Result<OutcomeDistribution> {
    let ensembles = input
        .states()
        .iter()
        .map(|rho| PureEnsemble::new(rho.pure_ensemble()))
        .collect::<Result<Vec<_>>>()?;
    oracle_distribution_with_ensembles(u, input.occupation(), &ensembles)
}

/// As [`oracle_distribution`] with caller-chosen pure-state decompositions.
pub fn oracle_distribution_with_ensembles(
    u: &Interferometer,
    occupation: &ModeOccupation,
    ensembles: &[PureEnsemble],
) -> Result<OutcomeDistribution> {
    let m = u.modes();
    let n = ensembles.len();
    if occupation.modes() != m || occupation.photons() != n {
        return Err(Error::Dimension(format!(
            "occupation {occupation} does not match {n} photons on {m} modes"
        )));
    }
    if occupation.counts().iter().any(|&c| c > 1) {
        return Err(Error::Validation("at most one photon per input mode".into()));
    }
    let d = ensembles.first().map_or(1, PureEnsemble::dim);
    if ensembles.iter().any(|e| e.dim() != d) {
        return Err(Error::Dimension("ensembles differ in internal dimension".into()));
    }
    if n > MAX_ORACLE_PHOTONS || m > MAX_ORACLE_MODES || d > MAX_ORACLE_DIM {
        return Err(Error::TooLarge(format!(
            "oracle limited to N <= {MAX_ORACLE_PHOTONS}, m <= {MAX_ORACLE_MODES}, d <= {MAX_ORACLE_DIM} (got {n}, {m}, {d})"
        )));
    }

    let input_modes: Vec<usize> = occupation
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 1)
        .map(|(i, _)| i)
        .collect();
    let relabelings = heap_permutations(n);

    // every choice of one ensemble member per photon
    let mut combos: Vec<Vec<usize>> = vec![vec![]];
    for e in ensembles {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                (0..e.members.len()).map(move |k| {
                    let mut c = c.clone();
                    c.push(k);
                    c
                })
            })
            .collect();
    }

    let bins_per_combo: Vec<(f64, Vec<f64>)> = combos
        .par_iter()
        .map(|choice| {
            let weight: f64 = choice
                .iter()
                .zip(ensembles)
                .map(|(&k, e)| e.members[k].0)
                .product();
            let internal: Vec<&[C64]> = choice
                .iter()
                .zip(ensembles)
                .map(|(&k, e)| e.members[k].1.as_slice())
                .collect();
            (weight, pure_bins(u, &input_modes, &internal, &relabelings))
        })
        .collect();

    let mut bins = vec![0.0; (n + 1).pow(m as u32)];
    for (w, b) in &bins_per_combo {
        for (acc, x) in bins.iter_mut().zip(b) {
            *acc += w * x;
        }
    }

    let outcomes: Vec<(ModeOccupation, f64)> = ModeOccupation::all_patterns(m, n)
        .into_iter()
        .map(|s| {
            let p = bins[encode(s.counts(), n)];
            (s, p)
        })
        .collect();
    let dist = OutcomeDistribution::new(outcomes);
    if (dist.total() - 1.0).abs() > 1e-10 {
        return Err(Error::Consistency(format!(
            "oracle distribution sums to {}",
            dist.total()
        )));
    }
    Ok(dist)
}

fn encode(counts: &[usize], n: usize) -> usize {
    counts.iter().rev().fold(0, |acc, &c| acc * (n + 1) + c)
}

/// Probability mass per external occupation pattern for pure internal states.
fn pure_bins(
    u: &Interferometer,
    input_modes: &[usize],
    internal: &[&[C64]],
    relabelings: &[Vec<usize>],
) -> Vec<f64> {
    let m = u.modes();
    let n = internal.len();
    let d = internal.first().map_or(1, |v| v.len());
    let basis = m * d;

    // single-photon wavefunctions after the interferometer, index q = mode * d + level
    let phi: Vec<Vec<C64>> = (0..n)
        .map(|p| {
            (0..basis)
                .map(|q| u.matrix()[(input_modes[p], q / d)] * internal[p][q % d])
                .collect()
        })
        .collect();
    // one photon per input mode, so the normalization is 1/sqrt(N!)
    let norm = 1.0 / relabelings.len() as f64;

    let mut bins = vec![0.0; (n + 1).pow(m as u32)];
    let mut tuple = vec![0usize; n];
    let total = basis.pow(n as u32);
    for _ in 0..total {
        let mut amp = C64::new(0.0, 0.0);
        for pi in relabelings {
            let mut term = C64::new(1.0, 0.0);
            for (slot, &q) in tuple.iter().enumerate() {
                term *= phi[pi[slot]][q];
            }
            amp += term;
        }
        let mut counts = vec![0usize; m];
        for &q in &tuple {
            counts[q / d] += 1;
        }
        bins[encode(&counts, n)] += amp.norm_sqr() * norm;

        // odometer increment
        for digit in tuple.iter_mut() {
            *digit += 1;
            if *digit < basis {
                break;
            }
            *digit = 0;
        }
    }
    bins
}

/// All permutations of `0..n` by Heap's algorithm.
fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}
