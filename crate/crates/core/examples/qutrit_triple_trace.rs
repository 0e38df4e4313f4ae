//! Qutrit triple traces from Gell-Mann vectors, and a family with fixed
//! pairwise overlaps but a varying triple trace.

use mpi_sim::linalg::matrix_product_trace;
use mpi_sim::random;
use mpi_sim::states::{
    pairwise_trace, qutrit_gamma_config, qutrit_gamma_max, triple_trace, triple_trace_qutrit,
};

fn main() -> mpi_sim::Result<()> {
    let mut rng = random::seeded(8);
    let [a, b, c] = [0; 3].map(|_| random::mixed_state(&mut rng, 3));
    let direct = matrix_product_trace(&[a.matrix(), b.matrix(), c.matrix()])?;
    let closed = triple_trace_qutrit(&a, &b, &c)?;
    println!("random qutrits: Tr(abc) = {direct:.12}");
    println!("                closed  = {closed:.12}\n");

    println!(" gamma    Tr(ab)    Tr(bc)    Tr(ca)    Tr(abc)");
    let gmax = qutrit_gamma_max();
    for k in 0..=6 {
        let g = gmax * k as f64 / 6.0;
        let t = qutrit_gamma_config(g)?;
        let [a, b, c] = &t.states;
        let tr = triple_trace(a, b, c)?;
        println!(
            "{g:.4}  {:.6}  {:.6}  {:.6}  {:.6}{:+.6}i",
            pairwise_trace(a, b)?,
            pairwise_trace(b, c)?,
            pairwise_trace(c, a)?,
            tr.re,
            tr.im
        );
    }
    Ok(())
}
