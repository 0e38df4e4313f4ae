//! Recovering the Bloch length of a mixed photon from a delay sweep on the
//! tritter.

use mpi_sim::experiments::mixedness_scenario;

fn main() -> mpi_sim::Result<()> {
    let r = mixedness_scenario(0.9)?;
    println!("unit dots (a.b, a.c, b.c) = {:.4?}", r.unit_dots);
    println!("measured dots with mixed a = {:.4?}", r.measured_dots);
    println!("volume of the pure triple  = {:+.6}", r.pure_vabc);
    println!("\n delay   P111      P(120)    P(210)    P(300)");
    for (dt, s) in r.sweep.delays.iter().zip(&r.sweep.stats) {
        println!("{dt:>6.1}  {:.6}  {:.6}  {:.6}  {:.6}", s.p111, s.p120, s.p210, s.p300);
    }
    println!("\nextracted volume = {:+.6}", r.vabc);
    println!("inferred r_a     = {:.6}", r.inferred_length);

    println!("\nweight  |2w-1|  sqrt(2w-1)  inferred");
    for w in [1.0, 0.9, 0.75, 0.6, 0.5] {
        let r = mixedness_scenario(w)?;
        let purity = r.length_if_purity.map_or("-".to_string(), |x| format!("{x:.4}"));
        println!("{w:>5.2}  {:>6.4}  {purity:>10}  {:>8.6}", r.length_from_weight, r.inferred_length);
    }
    Ok(())
}
