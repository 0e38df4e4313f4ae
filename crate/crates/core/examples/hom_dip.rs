//! Two-photon dips on a beam splitter and on the tritter.

use mpi_sim::experiments::{hom_dip, Device};
use mpi_sim::states::{mixed_qubit, pairwise_trace, DensityMatrix, PreparationTriple};

fn main() -> mpi_sim::Result<()> {
    let delays: Vec<f64> = (-8..=8).map(|k| 0.5 * k as f64).collect();
    let h = DensityMatrix::basis(2, 0)?;

    let bs = hom_dip(&h, &h, 1.0, &delays, Device::BeamSplitter)?;
    println!("identical photons, beam splitter (dt in units of sigma_t)");
    for (dt, p) in bs.delays.iter().zip(&bs.probabilities) {
        println!("  {dt:>5.1}  {p:.6}  {}", "#".repeat((p * 80.0).round() as usize));
    }
    println!("  visibility {:.6}\n", bs.visibility);

    // same pairwise trace, different preparations
    let flower = PreparationTriple::pure_flower(0.684)?;
    let rho = mixed_qubit(0.816)?;
    let far = [0.0, 20.0];
    for (label, a, b) in [
        ("pure flower, theta = 0.684", &flower.states[0], &flower.states[1]),
        ("mixed, p = 0.816", &rho, &rho),
    ] {
        let c = hom_dip(a, b, 1.0, &far, Device::Tritter)?;
        println!(
            "{label:<28} Tr = {:.6}  tritter P_11(0) = {:.6}  visibility = {:.6}",
            pairwise_trace(a, b)?,
            c.probabilities[0],
            c.visibility
        );
    }
    Ok(())
}
