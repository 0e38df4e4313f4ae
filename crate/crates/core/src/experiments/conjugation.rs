//! Sensitivity of output statistics to complex conjugation of every
//! internal state.
//!
//! Conjugation flips the sign of every imaginary cycle-trace contribution.
//! With three photons on three modes the coincidence and fully bunched
//! probabilities are unaffected for any interferometer; with four photons the
//! coincidence probability can shift.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::{parse_json, rows_to_json, ComplexRows, StateJson, UnitaryJson};
use crate::random::{self, SuiteRng};
use crate::scattering::{output_probability, InputSpec, Interferometer, ModeOccupation};
use crate::states::DensityMatrix;

/// `(P(pattern), P(pattern) with all states conjugated)`.
pub fn conjugation_pair(
    u: &Interferometer,
    input: &InputSpec,
    pattern: &ModeOccupation,
) -> Result<(f64, f64)> {
    Ok((
        output_probability(u, input, pattern)?,
        output_probability(u, &input.conjugated(), pattern)?,
    ))
}

/// Largest conjugation shift over `111` and the fully bunched patterns of a
/// three-photon, three-mode input.
pub fn three_mode_invariant_shift(u: &Interferometer, input: &InputSpec) -> Result<f64> {
    if u.modes() != 3 || input.photons() != 3 {
        return Err(Error::Dimension("needs three photons on three modes".into()));
    }
    [[1, 1, 1], [3, 0, 0], [0, 3, 0], [0, 0, 3]]
        .into_iter()
        .map(|s| {
            let (p, q) = conjugation_pair(u, input, &ModeOccupation::new(s.to_vec()))?;
            Ok((p - q).abs())
        })
        .try_fold(0.0f64, |m, d: Result<f64>| Ok(m.max(d?)))
}

/// Four-photon input whose coincidence probability changes under conjugation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjugationWitness {
    pub seed: u64,
    pub trial: usize,
    pub unitary: ComplexRows,
    pub states: Vec<StateJson>,
    pub pattern: Vec<usize>,
    pub probability: f64,
    pub conjugated_probability: f64,
}

impl ConjugationWitness {
    pub fn interferometer(&self) -> Result<Interferometer> {
        UnitaryJson { matrix: self.unitary.clone() }.to_interferometer()
    }

    pub fn input(&self) -> Result<InputSpec> {
        let states = self.states.iter().map(StateJson::to_state).collect::<Result<Vec<_>>>()?;
        InputSpec::first_modes(self.pattern.len(), states)
    }

    /// Recomputes both probabilities from the stored instance.
    pub fn recompute(&self) -> Result<(f64, f64)> {
        conjugation_pair(
            &self.interferometer()?,
            &self.input()?,
            &ModeOccupation::new(self.pattern.clone()),
        )
    }

    pub fn shift(&self) -> f64 {
        (self.probability - self.conjugated_probability).abs()
    }
}

/// The four-mode witness shipped with the crate.
pub fn stored_witness() -> Result<ConjugationWitness> {
    parse_json(
        "stored witness",
        include_str!("../../fixtures/conjugation_n4_witness.json"),
    )
}

fn random_instance(rng: &mut SuiteRng) -> (Interferometer, Vec<DensityMatrix>) {
    let u = random::haar_unitary(rng, 4);
    let states = (0..4).map(|_| random::pure_state(rng, 2)).collect();
    (u, states)
}

/// Draws `trials` random four-mode instances with pure qubit photons and
/// keeps the one with the largest coincidence shift.
pub fn search_witness(seed: u64, trials: usize) -> Result<ConjugationWitness> {
    let mut rng = random::seeded(seed);
    let pattern = ModeOccupation::new(vec![1; 4]);
    let mut best: Option<ConjugationWitness> = None;
    for trial in 0..trials {
        let (u, states) = random_instance(&mut rng);
        let input = InputSpec::first_modes(4, states.clone())?;
        let (p, q) = conjugation_pair(&u, &input, &pattern)?;
        if best.as_ref().is_none_or(|b| (p - q).abs() > b.shift()) {
            best = Some(ConjugationWitness {
                seed,
                trial,
                unitary: rows_to_json(u.matrix()),
                states: states.iter().map(StateJson::from_state).collect(),
                pattern: pattern.counts().to_vec(),
                probability: p,
                conjugated_probability: q,
            });
        }
    }
    best.ok_or_else(|| Error::Validation("witness search needs at least one trial".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_modes_are_insensitive() {
        let mut rng = random::seeded(77);
        for _ in 0..20 {
            let u = random::haar_unitary(&mut rng, 3);
            let states = (0..3).map(|_| random::mixed_state(&mut rng, 2)).collect();
            let input = InputSpec::first_modes(3, states).unwrap();
            assert!(three_mode_invariant_shift(&u, &input).unwrap() < 1e-12);
        }
    }

    #[test]
    fn search_finds_a_shift() {
        let w = search_witness(1, 20).unwrap();
        assert!(w.shift() > 1e-6);
        let (p, q) = w.recompute().unwrap();
        assert!((p - w.probability).abs() < 1e-12 && (q - w.conjugated_probability).abs() < 1e-12);
    }

    #[test]
    fn stored_witness_reproduces() {
        let w = stored_witness().unwrap();
        let (p, q) = w.recompute().unwrap();
        assert!((p - q).abs() > 1e-6);
        assert!((p - w.probability).abs() < 1e-12);
        assert!((q - w.conjugated_probability).abs() < 1e-12);
    }
}
