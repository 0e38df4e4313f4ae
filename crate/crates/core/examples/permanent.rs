//! Matrix permanents: Ryser's formula against the defining sum.

use mpi_sim::linalg::{permanent, permanent_naive, C64};
use mpi_sim::random;
use mpi_sim::scattering::Interferometer;

fn main() -> mpi_sim::Result<()> {
    let t = Interferometer::tritter();
    println!("perm(tritter) = {:.15}", permanent(t.matrix())?);

    let mut rng = random::seeded(1);
    for n in 2..=7 {
        let u = random::haar_unitary(&mut rng, n);
        let fast = permanent(u.matrix())?;
        let slow = permanent_naive(u.matrix())?;
        println!("n={n}  perm = {fast:.6}  |ryser - naive| = {:.1e}", (fast - slow).norm());
    }

    let u = random::haar_unitary(&mut rng, 16);
    let start = std::time::Instant::now();
    let p: C64 = permanent(u.matrix())?;
    println!("n=16  perm = {p:.6e}  ({:?})", start.elapsed());
    Ok(())
}
