use rayon::prelude::*;
use serde::Serialize;

use super::temporal::temporal_embedding;
use crate::error::{Error, Result};
use crate::scattering::{output_probability, InputSpec, Interferometer, ModeOccupation};
use crate::states::DensityMatrix;

/// Interferometer used for a two-photon dip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Device {
    /// Photons in modes 1, 2 of a balanced beam splitter, coincidences `11`.
    BeamSplitter,
    /// Photons in modes 1, 2 of the tritter, coincidences `110`.
    Tritter,
}

impl Device {
    fn setup(self) -> (Interferometer, ModeOccupation) {
        match self {
            Device::BeamSplitter => (Interferometer::beam_splitter(), ModeOccupation::new(vec![1, 1])),
            Device::Tritter => (Interferometer::tritter(), ModeOccupation::new(vec![1, 1, 0])),
        }
    }
}

/// Coincidence probability against relative delay.
#[derive(Clone, Debug, Serialize)]
pub struct HomDipCurve {
    pub delays: Vec<f64>,
    pub probabilities: Vec<f64>,
    pub sigma_t: f64,
    /// `(max - min) / max` over the curve.
    pub visibility: f64,
}

/// `P_11` for photon `b` delayed by each of `delays` relative to photon `a`.
pub fn hom_dip(
    a: &DensityMatrix,
    b: &DensityMatrix,
    sigma_t: f64,
    delays: &[f64],
    device: Device,
) -> Result<HomDipCurve> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "photon states have dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    if delays.is_empty() {
        return Err(Error::Validation("no delays given".into()));
    }
    temporal_embedding(&[0.0], sigma_t)?;
    let (u, pattern) = device.setup();
    let probabilities = delays
        .par_iter()
        .map(|&dt| {
            let emb = temporal_embedding(&[0.0, dt], sigma_t)?;
            let states = vec![emb.attach(a, 0)?, emb.attach(b, 1)?];
            let input = InputSpec::first_modes(u.modes(), states)?;
            output_probability(&u, &input, &pattern)
        })
        .collect::<Result<Vec<f64>>>()?;
    let max = probabilities.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = probabilities.iter().copied().fold(f64::INFINITY, f64::min);
    let visibility = if max > 0.0 { (max - min) / max } else { 0.0 };
    Ok(HomDipCurve {
        delays: delays.to_vec(),
        probabilities,
        sigma_t,
        visibility,
    })
}
