//! Conjugating every photon's internal state leaves three-photon coincidences
//! alone but can move four-photon ones.
//!
//! Run with `--search SEED TRIALS` to print a fresh witness as JSON.

use mpi_sim::experiments::{search_witness, stored_witness, three_mode_invariant_shift};
use mpi_sim::random;
use mpi_sim::scattering::InputSpec;

fn main() -> mpi_sim::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.first().map(String::as_str) == Some("--search") {
        let seed = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2024);
        let trials = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200);
        let w = search_witness(seed, trials)?;
        println!("{}", serde_json::to_string_pretty(&w).expect("serializable"));
        return Ok(());
    }

    let mut rng = random::seeded(3);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let u = random::haar_unitary(&mut rng, 3);
        let states = (0..3).map(|_| random::pure_state(&mut rng, 2)).collect();
        worst = worst.max(three_mode_invariant_shift(&u, &InputSpec::first_modes(3, states)?)?);
    }
    println!("3 photons, 50 random tritters: largest shift of P_111/P_300 = {worst:.2e}");

    let w = stored_witness()?;
    let (p, q) = w.recompute()?;
    println!("4 photons, stored witness (seed {}, trial {}):", w.seed, w.trial);
    println!("  P_1111            = {p:.12}");
    println!("  P_1111 conjugated = {q:.12}");
    println!("  shift             = {:.3e}", (p - q).abs());
    Ok(())
}
