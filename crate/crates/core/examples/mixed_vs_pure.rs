//! Pure and mixed preparations with equal pairwise traces agree on every
//! two-photon measurement but not on three-photon statistics.

use mpi_sim::experiments::{
    extract_vabc, mixed_preparation_by_summation, tritter_closed_form, two_photon_tritter_visibility,
};
use mpi_sim::states::{flower_pairwise_trace, mixed_p_for_trace, PreparationTriple};

fn main() -> mpi_sim::Result<()> {
    println!(" trace   vis_pure  vis_mixed   P111_pure P111_mixed   P120-P210 pure  mixed    V_pure");
    for k in 0..=8 {
        let theta = std::f64::consts::FRAC_PI_2 * k as f64 / 16.0;
        let trace = flower_pairwise_trace(theta);
        let pure = PreparationTriple::pure_flower(theta)?;
        let mixed = PreparationTriple::identical_mixed(mixed_p_for_trace(trace)?)?;
        let (sp, sm) = (tritter_closed_form(&pure.states)?, tritter_closed_form(&mixed.states)?);
        println!(
            "{trace:.4}  {:>9.6} {:>10.6}  {:>10.6} {:>10.6}  {:>+14.6} {:>+8.1e}  {:>+8.5}",
            two_photon_tritter_visibility(&pure.states[0], &pure.states[1])?,
            two_photon_tritter_visibility(&mixed.states[0], &mixed.states[1])?,
            sp.p111,
            sm.p111,
            sp.p120 - sp.p210,
            sm.p120 - sm.p210,
            extract_vabc(&sp),
        );
    }

    let p = 0.816;
    let summed = mixed_preparation_by_summation(p)?;
    let direct = tritter_closed_form(&PreparationTriple::identical_mixed(p)?.states)?;
    println!("\np = {p}: weighted sum of the 8 pure inputs vs mixed states, max |d| = {:.1e}",
        summed.max_abs_diff(&direct));
    Ok(())
}
