//! Three photons on the tritter: closed form, scattering engine, and the
//! full output distribution.

use mpi_sim::experiments::{tritter_closed_form, tritter_engine_stats, tritter_unitary};
use mpi_sim::scattering::{output_distribution, InputSpec};
use mpi_sim::states::{DensityMatrix, PreparationTriple};

fn main() -> mpi_sim::Result<()> {
    let cases = [
        ("indistinguishable", PreparationTriple::pure_flower(0.0)?.states),
        ("maximally mixed", [0; 3].map(|_| DensityMatrix::maximally_mixed(2).unwrap())),
        ("flower theta = pi/4", PreparationTriple::pure_flower(std::f64::consts::FRAC_PI_4)?.states),
        ("mixed p = 0.8", PreparationTriple::identical_mixed(0.8)?.states),
    ];
    println!("{:<22}{:>10}{:>10}{:>10}{:>10}", "", "P111", "P(120)", "P(210)", "P(300)");
    for (label, states) in &cases {
        let c = tritter_closed_form(states)?;
        let e = tritter_engine_stats(states)?;
        println!("{label:<22}{:>10.6}{:>10.6}{:>10.6}{:>10.6}", c.p111, c.p120, c.p210, c.p300);
        println!("{:<22}{:>10.1e}", "  engine deviation", c.max_abs_diff(&e));
    }

    let input = InputSpec::first_modes(3, cases[2].1.to_vec())?;
    let dist = output_distribution(&tritter_unitary(), &input)?;
    println!("\nfull distribution, flower theta = pi/4:");
    for (s, p) in dist.outcomes() {
        println!("  {s}  {p:.9}");
    }
    println!("  total {:.12}", dist.total());
    Ok(())
}
