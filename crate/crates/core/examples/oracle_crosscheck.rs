//! The permanent-based engine against brute-force symmetrization of
//! first-quantized wavefunctions.

use std::time::Instant;

use mpi_sim::oracle::oracle_distribution;
use mpi_sim::random;
use mpi_sim::scattering::{output_distribution, InputSpec};

fn main() -> mpi_sim::Result<()> {
    let mut rng = random::seeded(42);
    println!(" N  m  d   max |engine - oracle|   engine      oracle");
    for (n, m, d) in [(2, 2, 2), (3, 3, 2), (3, 4, 3), (4, 4, 2), (4, 4, 3)] {
        let u = random::haar_unitary(&mut rng, m);
        let states = (0..n).map(|_| random::mixed_state(&mut rng, d)).collect();
        let input = InputSpec::first_modes(m, states)?;
        let t0 = Instant::now();
        let e = output_distribution(&u, &input)?;
        let t1 = Instant::now();
        let o = oracle_distribution(&u, &input)?;
        let t2 = Instant::now();
        println!(
            " {n}  {m}  {d}   {:>20.2e}   {:>9.2?}  {:>9.2?}",
            e.max_abs_diff(&o),
            t1 - t0,
            t2 - t1
        );
    }
    Ok(())
}
