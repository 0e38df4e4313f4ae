//! Concrete interference scenarios built on the scattering engine.

mod conjugation;
mod figures;
mod hom;
mod mixedness;
mod temporal;
mod tritter;

pub use conjugation::{
    conjugation_pair, search_witness, stored_witness, three_mode_invariant_shift,
    ConjugationWitness,
};
pub use figures::{figure_curves, Figure, Table, DEFAULT_GRID, DIP_HALF_WIDTH};
pub use hom::{hom_dip, Device, HomDipCurve};
pub use mixedness::{
    default_sweep_delays, delay_sweep, mixedness_scenario, DelaySweepResult, MixednessReport,
    LARGE_DELAY, TARGET_DOTS,
};
pub use temporal::{gaussian_overlap, temporal_embedding, TemporalEmbedding};
pub use tritter::{
    extract_vabc, mixed_preparation_by_summation, tritter_closed_form, tritter_engine_stats,
    tritter_stats_from_geometry, two_photon_tritter_p11, two_photon_tritter_p11_engine,
    two_photon_tritter_visibility, TritterStats,
};

use crate::scattering::Interferometer;

/// Balanced three-mode interferometer `exp(2 pi i j k / 3) / sqrt(3)`.
pub fn tritter_unitary() -> Interferometer {
    Interferometer::tritter()
}
