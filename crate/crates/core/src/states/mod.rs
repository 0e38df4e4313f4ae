//! Internal-state algebra of single photons.

mod bloch;
mod density;
mod gellmann;
mod geometry;
mod prepare;
mod traces;

pub use bloch::{pauli_matrices, scalar_triple_product, BlochVector};
pub use density::{DensityMatrix, PSD_TOL, STATE_TOL};
pub use gellmann::{gell_mann_matrices, structure_constants, GellMannVector, StructureConstants};
pub use geometry::{
    infer_vector_length, unit_triple_from_dots, vabc_magnitude, InferredLength, UnitDots,
};
pub use prepare::{
    flower_pairwise_trace, flower_theta_for_trace, flower_vabc, length_from_mixing_weight,
    length_from_purity, mixed_p_for_trace, mixed_pairwise_trace, mixed_qubit, qutrit_gamma_config,
    qutrit_gamma_kets, qutrit_gamma_max, Preparation, PreparationTriple,
};
pub use traces::{
    pairwise_trace, pairwise_trace_bloch, quad_trace_qubit, triad_phase, triple_trace,
    triple_trace_bloch, triple_trace_qutrit,
};

