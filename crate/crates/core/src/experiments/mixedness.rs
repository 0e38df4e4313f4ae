//! Detecting mixedness of one photon from the three-photon volume.
//!
//! Three qubit photons are prepared with Bloch dot products
//! `(a.b, a.c, b.c) = (0.5, 0.27, -0.03)`. Photon `a` is then replaced by a
//! weighted mixture of `|a>` and its antipode, shortening `r_a`. Pairwise
//! dips only see the products `r_a r_b`, but the volume read off a delay
//! sweep of photon `b` on the tritter, together with the unit-vector dot
//! products of the unmixed run, fixes `r_a` alone.

use rayon::prelude::*;
use serde::Serialize;

use super::temporal::temporal_embedding;
use super::tritter::{extract_vabc, TritterStats};
use crate::error::{Error, Result};
use crate::scattering::{output_distribution, InputSpec, Interferometer};
use crate::states::{
    infer_vector_length, length_from_mixing_weight, length_from_purity, pairwise_trace,
    scalar_triple_product, unit_triple_from_dots, BlochVector, DensityMatrix, InferredLength,
    UnitDots,
};

/// Delay of photon `b`, in units of the wavepacket duration, at which it no
/// longer overlaps the others.
pub const LARGE_DELAY: f64 = 12.0;

pub const TARGET_DOTS: UnitDots = UnitDots { ab: 0.5, ac: 0.27, bc: -0.03 };

/// Tritter statistics against the delay of photon `b`.
#[derive(Clone, Debug, Serialize)]
pub struct DelaySweepResult {
    /// Delays of photon `b`, in units of the wavepacket duration.
    pub delays: Vec<f64>,
    pub stats: Vec<TritterStats>,
    /// Largest wavepacket overlap between `b` and the other photons at the
    /// last delay.
    pub residual_overlap: f64,
    /// Volume from the difference between zero and the last delay.
    pub vabc: f64,
}

/// Tritter statistics with photon `b` delayed by each of `delays`
/// (in wavepacket durations). The last delay serves as the reference for the
/// extracted volume and must be large enough for `b` to become distinguishable.
pub fn delay_sweep(states: &[DensityMatrix; 3], delays: &[f64]) -> Result<DelaySweepResult> {
    if delays.len() < 2 || delays[0] != 0.0 {
        return Err(Error::Validation(
            "delay sweep needs zero delay first and a reference delay last".into(),
        ));
    }
    let tritter = Interferometer::tritter();
    let stats = delays
        .par_iter()
        .map(|&dt| {
            let emb = temporal_embedding(&[0.0, dt, 0.0], 1.0)?;
            let input = InputSpec::first_modes(
                3,
                (0..3)
                    .map(|j| emb.attach(&states[j], j))
                    .collect::<Result<Vec<_>>>()?,
            )?;
            Ok(TritterStats::from_distribution(&output_distribution(&tritter, &input)?)?.0)
        })
        .collect::<Result<Vec<_>>>()?;
    let last = temporal_embedding(&[0.0, delays[delays.len() - 1], 0.0], 1.0)?;
    let residual_overlap = last.overlaps()[1][0].max(last.overlaps()[1][2]);
    let vabc = extract_vabc(&stats[0]) - extract_vabc(&stats[stats.len() - 1]);
    Ok(DelaySweepResult {
        delays: delays.to_vec(),
        stats,
        residual_overlap,
        vabc,
    })
}

/// Outcome of [`mixedness_scenario`].
#[derive(Clone, Debug, Serialize)]
pub struct MixednessReport {
    /// Weight of `|a>` against its antipode.
    pub weight: f64,
    /// Unit dot products measured with the unmixed first photon.
    pub unit_dots: [f64; 3],
    /// `r_a.r_b, r_a.r_c, r_b.r_c` measured with the mixed first photon.
    pub measured_dots: [f64; 3],
    /// Volume of the unmixed triple.
    pub pure_vabc: f64,
    /// Volume extracted from the sweep with the mixed first photon.
    pub vabc: f64,
    pub inferred_length: f64,
    pub inferred_length_raw: f64,
    pub out_of_model: bool,
    /// `|2w - 1|`, the length when `w` is a mixing weight.
    pub length_from_weight: f64,
    /// `sqrt(2w - 1)`, the length if `w` were read as a purity.
    pub length_if_purity: Option<f64>,
    pub sweep: DelaySweepResult,
}

/// Sweep delays used by [`mixedness_scenario`].
pub fn default_sweep_delays() -> Vec<f64> {
    let mut d: Vec<f64> = (0..=8).map(|k| 0.5 * k as f64).collect();
    d.push(LARGE_DELAY);
    d
}

/// Runs the full measurement with photon `a` mixed at `weight`.
///
/// Statistics for the mixed photon are the weighted sum of the runs with `a`
/// and with its antipode, as in a laboratory implementation.
pub fn mixedness_scenario(weight: f64) -> Result<MixednessReport> {
    if !(0.0..=1.0).contains(&weight) {
        return Err(Error::Validation(format!("mixing weight {weight} outside [0, 1]")));
    }
    let [a, b, c] = unit_triple_from_dots(TARGET_DOTS, -1.0)?;
    let antipode = BlochVector::from_vector(-a.vector())?;
    let (pa, pb, pc, perp) = (a.to_state()?, b.to_state()?, c.to_state()?, antipode.to_state()?);

    let delays = default_sweep_delays();
    let run = |first: &DensityMatrix| delay_sweep(&[first.clone(), pb.clone(), pc.clone()], &delays);
    let (with_a, with_perp) = (run(&pa)?, run(&perp)?);
    let stats: Vec<TritterStats> = with_a
        .stats
        .iter()
        .zip(&with_perp.stats)
        .map(|(s, t)| TritterStats::weighted_sum([(weight, s), (1.0 - weight, t)]))
        .collect();
    let vabc = extract_vabc(&stats[0]) - extract_vabc(&stats[stats.len() - 1]);
    let sweep = DelaySweepResult {
        delays,
        stats,
        residual_overlap: with_a.residual_overlap,
        vabc,
    };

    let dot_from_hom = |x: &DensityMatrix, y: &DensityMatrix| -> Result<f64> {
        Ok(2.0 * pairwise_trace(x, y)? - 1.0)
    };
    let unit_dots = [dot_from_hom(&pa, &pb)?, dot_from_hom(&pa, &pc)?, dot_from_hom(&pb, &pc)?];
    let mixed = DensityMatrix::mix(weight, &pa, &perp)?;
    let measured_dots = [dot_from_hom(&mixed, &pb)?, dot_from_hom(&mixed, &pc)?, unit_dots[2]];

    let InferredLength { value, raw, out_of_model } =
        infer_vector_length(UnitDots::new(unit_dots[0], unit_dots[1], unit_dots[2]), vabc)?;
    Ok(MixednessReport {
        weight,
        unit_dots,
        measured_dots,
        pure_vabc: scalar_triple_product(&a, &b, &c),
        vabc,
        inferred_length: value,
        inferred_length_raw: raw,
        out_of_model,
        length_from_weight: length_from_mixing_weight(weight),
        length_if_purity: length_from_purity(weight).ok(),
        sweep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{vabc_magnitude, PreparationTriple};

    #[test]
    fn sweep_recovers_flower_volume() {
        let t = PreparationTriple::pure_flower(0.9).unwrap();
        let r = delay_sweep(&t.states, &[0.0, 1.0, LARGE_DELAY]).unwrap();
        assert!(r.residual_overlap < 1e-6);
        assert!((r.vabc - crate::states::flower_vabc(0.9)).abs() < 1e-12);
        assert!(extract_vabc(&r.stats[2]).abs() < 1e-12);
    }

    #[test]
    fn unmixed_photon_has_unit_length() {
        let r = mixedness_scenario(1.0).unwrap();
        assert!((r.inferred_length - 1.0).abs() < 1e-9);
        let expected = vabc_magnitude([1.0; 3], TARGET_DOTS).unwrap();
        assert!((r.vabc + expected).abs() < 1e-10);
        assert!((r.pure_vabc - r.vabc).abs() < 1e-10);
        for (got, want) in r.unit_dots.iter().zip([0.5, 0.27, -0.03]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn mixing_weight_sets_length() {
        let r = mixedness_scenario(0.9).unwrap();
        assert!((r.inferred_length - 0.8).abs() < 1e-9);
        assert!((r.length_from_weight - 0.8).abs() < 1e-15);
        assert!((r.length_if_purity.unwrap() - 0.8f64.sqrt()).abs() < 1e-15);
        assert!((r.measured_dots[0] - 0.4).abs() < 1e-12);

        let half = mixedness_scenario(0.5).unwrap();
        assert!(half.vabc.abs() < 1e-12);
        assert!(half.inferred_length.abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_weight() {
        assert!(mixedness_scenario(1.2).is_err());
    }
}
