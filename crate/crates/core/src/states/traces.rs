//! Traces of products of internal states and their closed forms in terms of
//! Bloch and Gell-Mann vectors.

use std::f64::consts::PI;

use super::{scalar_triple_product, BlochVector, DensityMatrix, GellMannVector};
use crate::error::{Error, Result};
use crate::linalg::{matrix_product_trace, C64};

fn same_dim(states: &[&DensityMatrix]) -> Result<usize> {
    let d = states[0].dim();
    if let Some(s) = states.iter().find(|s| s.dim() != d) {
        return Err(Error::Dimension(format!(
            "states of dimension {d} and {}",
            s.dim()
        )));
    }
    Ok(d)
}

fn require_dim(states: &[&DensityMatrix], want: usize) -> Result<()> {
    if same_dim(states)? != want {
        return Err(Error::Dimension(format!(
            "closed form needs dimension {want}, got {}",
            states[0].dim()
        )));
    }
    Ok(())
}

/// `Tr(rho_a rho_b)`, real and in `[0, 1]`.
pub fn pairwise_trace(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    same_dim(&[a, b])?;
    Ok(matrix_product_trace(&[a.matrix(), b.matrix()])?.re)
}

/// `(1 + r_a . r_b) / 2`.
pub fn pairwise_trace_bloch(a: &BlochVector, b: &BlochVector) -> f64 {
    0.5 * (1.0 + a.dot(b))
}

/// `Tr(rho_a rho_b rho_c)` by matrix products.
pub fn triple_trace(a: &DensityMatrix, b: &DensityMatrix, c: &DensityMatrix) -> Result<C64> {
    same_dim(&[a, b, c])?;
    matrix_product_trace(&[a.matrix(), b.matrix(), c.matrix()])
}

/// Qubit triple trace `(1 + r_a.r_b + r_a.r_c + r_b.r_c + i V_abc) / 4`.
pub fn triple_trace_bloch(a: &BlochVector, b: &BlochVector, c: &BlochVector) -> C64 {
    let re = 1.0 + a.dot(b) + a.dot(c) + b.dot(c);
    C64::new(re, scalar_triple_product(a, b, c)) / 4.0
}

/// Four-qubit trace `Tr(rho_a rho_b rho_c rho_d)` from Bloch dot and triple
/// products.
pub fn quad_trace_qubit(
    a: &DensityMatrix,
    b: &DensityMatrix,
    c: &DensityMatrix,
    d: &DensityMatrix,
) -> Result<C64> {
    require_dim(&[a, b, c, d], 2)?;
    let [ra, rb, rc, rd] = [a, b, c, d].map(BlochVector::from_state);
    let (ra, rb, rc, rd) = (ra?, rb?, rc?, rd?);
    let (ab, ac, ad) = (ra.dot(&rb), ra.dot(&rc), ra.dot(&rd));
    let (bc, bd, cd) = (rb.dot(&rc), rb.dot(&rd), rc.dot(&rd));
    let re = 1.0 + (ab + ac + ad + bc + bd + cd) + (ab * cd - ac * bd + ad * bc);
    let im = scalar_triple_product(&ra, &rb, &rc)
        + scalar_triple_product(&ra, &rb, &rd)
        + scalar_triple_product(&ra, &rc, &rd)
        + scalar_triple_product(&rb, &rc, &rd);
    Ok(C64::new(re, im) / 8.0)
}

/// Qutrit triple trace from Gell-Mann vectors:
///
/// ```text
/// (1/9) [1 + 2 (n_a.n_b + n_a.n_c + n_b.n_c + n_a.(n_b * n_c)) + i 2 sqrt(3) n_a.(n_b ^ n_c)]
/// ```
///
/// The coefficient of the imaginary part follows from
/// `Tr(lambda_r lambda_s lambda_t) = 2 (d_rst + i f_rst)` with `f_123 = 1`.
pub fn triple_trace_qutrit(a: &DensityMatrix, b: &DensityMatrix, c: &DensityMatrix) -> Result<C64> {
    require_dim(&[a, b, c], 3)?;
    let na = GellMannVector::from_state(a)?;
    let nb = GellMannVector::from_state(b)?;
    let nc = GellMannVector::from_state(c)?;
    let dots = na.dot(&nb) + na.dot(&nc) + nb.dot(&nc);
    let re = 1.0 + 2.0 * (dots + na.dot(&nb.star(&nc)));
    let im = 2.0 * 3f64.sqrt() * na.dot(&nb.wedge(&nc));
    Ok(C64::new(re, im) / 9.0)
}

/// Purity below which a state is not treated as pure by [`triad_phase`].
pub const PURITY_TOL: f64 = 1e-8;

/// Triad phase `arg(<a|b><b|c><c|a>)` of three pure states, in `(-pi, pi]`.
pub fn triad_phase(a: &DensityMatrix, b: &DensityMatrix, c: &DensityMatrix) -> Result<f64> {
    for s in [a, b, c] {
        if s.purity() < 1.0 - PURITY_TOL {
            return Err(Error::Validation(format!(
                "triad phase needs pure states (purity {})",
                s.purity()
            )));
        }
    }
    for (x, y) in [(a, b), (b, c), (c, a)] {
        if pairwise_trace(x, y)? < 1e-12 {
            return Err(Error::UndefinedPhase("orthogonal pair of states".into()));
        }
    }
    // for pure states Tr(rho_a rho_b rho_c) = <a|b><b|c><c|a>
    let phase = triple_trace(a, b, c)?.arg();
    Ok(if phase <= -PI + 1e-12 { phase + 2.0 * PI } else { phase })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    #[test]
    fn pairwise_limits() {
        let zero = DensityMatrix::basis(2, 0).unwrap();
        let one = DensityMatrix::basis(2, 1).unwrap();
        assert!((pairwise_trace(&zero, &zero).unwrap() - 1.0).abs() < 1e-15);
        assert!(pairwise_trace(&zero, &one).unwrap().abs() < 1e-15);
        assert!(pairwise_trace(&zero, &DensityMatrix::basis(3, 0).unwrap()).is_err());
    }

    #[test]
    fn triple_limits() {
        let zero = DensityMatrix::basis(2, 0).unwrap();
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((triple_trace(&zero, &zero, &zero).unwrap() - 1.0).norm() < 1e-15);
        assert!((triple_trace(&mixed, &mixed, &mixed).unwrap() - 0.25).norm() < 1e-15);
    }

    #[test]
    fn quad_limits() {
        let zero = DensityMatrix::basis(2, 0).unwrap();
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!((quad_trace_qubit(&zero, &zero, &zero, &zero).unwrap() - 1.0).norm() < 1e-15);
        assert!((quad_trace_qubit(&mixed, &mixed, &mixed, &mixed).unwrap() - 0.125).norm() < 1e-15);
        let q = DensityMatrix::maximally_mixed(3).unwrap();
        assert!(quad_trace_qubit(&q, &q, &q, &q).is_err());
    }

    #[test]
    fn qubit_closed_forms_match_products() {
        let mut rng = random::seeded(3);
        for _ in 0..200 {
            let s: Vec<DensityMatrix> = (0..4).map(|_| random::qubit_state(&mut rng)).collect();
            let r: Vec<BlochVector> = s.iter().map(|x| BlochVector::from_state(x).unwrap()).collect();
            let p = pairwise_trace(&s[0], &s[1]).unwrap();
            assert!((p - pairwise_trace_bloch(&r[0], &r[1])).abs() < 1e-12);
            let t = triple_trace(&s[0], &s[1], &s[2]).unwrap();
            assert!((t - triple_trace_bloch(&r[0], &r[1], &r[2])).norm() < 1e-12);
            assert!((t.im - scalar_triple_product(&r[0], &r[1], &r[2]) / 4.0).abs() < 1e-12);
            let direct = matrix_product_trace(&[s[0].matrix(), s[1].matrix(), s[2].matrix(), s[3].matrix()]).unwrap();
            assert!((quad_trace_qubit(&s[0], &s[1], &s[2], &s[3]).unwrap() - direct).norm() < 1e-12);
        }
    }

    #[test]
    fn pair_traces_of_states_are_nonnegative_reals() {
        let mut rng = random::seeded(4);
        for d in 2..=4 {
            for _ in 0..50 {
                let a = random::mixed_state(&mut rng, d);
                let b = random::mixed_state(&mut rng, d);
                let t = matrix_product_trace(&[a.matrix(), b.matrix()]).unwrap();
                assert!(t.im.abs() < 1e-12 && t.re > -1e-12);
            }
        }
    }

    #[test]
    fn qutrit_closed_form_matches_products() {
        let mut rng = random::seeded(5);
        for _ in 0..200 {
            let s: Vec<DensityMatrix> = (0..3).map(|_| random::mixed_state(&mut rng, 3)).collect();
            let direct = triple_trace(&s[0], &s[1], &s[2]).unwrap();
            let closed = triple_trace_qutrit(&s[0], &s[1], &s[2]).unwrap();
            assert!((direct - closed).norm() < 1e-12, "{direct} vs {closed}");
        }
        let m = DensityMatrix::maximally_mixed(3).unwrap();
        assert!((triple_trace_qutrit(&m, &m, &m).unwrap() - 1.0 / 9.0).norm() < 1e-15);
    }

    #[test]
    fn triad_phase_cases() {
        let a = DensityMatrix::pure(&[C64::new(0.6, 0.0), C64::new(0.0, 0.8)]).unwrap();
        assert!(triad_phase(&a, &a, &a).unwrap().abs() < 1e-12);

        let real = |x: f64, y: f64| DensityMatrix::pure(&[C64::new(x, 0.0), C64::new(y, 0.0)]).unwrap();
        let ph = triad_phase(&real(1.0, 0.2), &real(0.3, 1.0), &real(1.0, -0.9)).unwrap();
        assert!(ph.abs() < 1e-12 || (ph - PI).abs() < 1e-12);

        let zero = DensityMatrix::basis(2, 0).unwrap();
        let one = DensityMatrix::basis(2, 1).unwrap();
        assert!(matches!(triad_phase(&zero, &one, &a), Err(Error::UndefinedPhase(_))));
        let mixed = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(triad_phase(&mixed, &a, &a).is_err());
    }
}
