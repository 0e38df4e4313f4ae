//! Three-photon internal-state preparations.

use std::f64::consts::{FRAC_PI_2, PI};

use super::DensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::C64;

/// How a [`PreparationTriple`] was built.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Preparation {
    /// Pure qubits at polar angle `theta`, equally spaced in azimuth.
    PureFlower { theta: f64 },
    /// Three copies of `p |0><0| + (1 - p) |1><1|`.
    IdenticalMixed { p: f64 },
    Custom,
}

/// Internal states of three photons entering modes 1..3.
#[derive(Clone, Debug)]
pub struct PreparationTriple {
    pub states: [DensityMatrix; 3],
    pub label: Preparation,
}

impl PreparationTriple {
    pub fn custom(states: [DensityMatrix; 3]) -> Result<Self> {
        let d = states[0].dim();
        if states.iter().any(|s| s.dim() != d) {
            return Err(Error::Dimension("preparation states differ in dimension".into()));
        }
        Ok(Self {
            states,
            label: Preparation::Custom,
        })
    }

    /// Pure "flower" states `cos(theta/2)|0> + e^{-2 pi i k/3} sin(theta/2)|1>`,
    /// `k = 0, 1, 2`.
    ///
    /// The azimuths run clockwise seen from `|0>`, which makes the scalar
    /// triple product `-(3 sqrt(3) / 2) cos(theta) sin^2(theta) <= 0`. The
    /// opposite winding is the complex conjugate preparation and flips only
    /// that sign.
    pub fn pure_flower(theta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(Error::Validation(format!(
                "flower angle {theta} outside [0, pi/2]"
            )));
        }
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let states = [0.0, 1.0, 2.0].map(|k: f64| {
            let phase = C64::from_polar(1.0, -2.0 * PI * k / 3.0);
            DensityMatrix::pure(&[C64::new(c, 0.0), phase * s]).expect("unit vector")
        });
        Ok(Self {
            states,
            label: Preparation::PureFlower { theta },
        })
    }

    /// Three copies of `rho_p = p |0><0| + (1 - p) |1><1|`.
    pub fn identical_mixed(p: f64) -> Result<Self> {
        let rho = mixed_qubit(p)?;
        Ok(Self {
            states: [rho.clone(), rho.clone(), rho],
            label: Preparation::IdenticalMixed { p },
        })
    }
}

/// `p |0><0| + (1 - p) |1><1|`.
pub fn mixed_qubit(p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Validation(format!(
            "preparation probability {p} outside [0, 1]"
        )));
    }
    DensityMatrix::mix(p, &DensityMatrix::basis(2, 0)?, &DensityMatrix::basis(2, 1)?)
}

/// Pairwise trace of the flower states, `(5 + 3 cos 2 theta) / 8`.
pub fn flower_pairwise_trace(theta: f64) -> f64 {
    (5.0 + 3.0 * (2.0 * theta).cos()) / 8.0
}

/// Scalar triple product of the flower Bloch vectors,
/// `-(3 sqrt(3) / 2) cos(theta) sin^2(theta)`.
pub fn flower_vabc(theta: f64) -> f64 {
    -1.5 * 3f64.sqrt() * theta.cos() * theta.sin().powi(2)
}

/// Flower angle with the given pairwise trace, for traces in `[1/4, 1]`.
pub fn flower_theta_for_trace(trace: f64) -> Result<f64> {
    if !(0.25..=1.0).contains(&trace) {
        return Err(Error::Validation(format!(
            "flower pairwise trace {trace} outside [1/4, 1]"
        )));
    }
    Ok(0.5 * ((8.0 * trace - 5.0) / 3.0).clamp(-1.0, 1.0).acos())
}

/// Pairwise trace of two copies of `rho_p`, `p^2 + (1 - p)^2`.
pub fn mixed_pairwise_trace(p: f64) -> f64 {
    p * p + (1.0 - p) * (1.0 - p)
}

/// The `p >= 1/2` preparation probability with the given pairwise trace,
/// for traces in `[1/2, 1]`.
pub fn mixed_p_for_trace(trace: f64) -> Result<f64> {
    if !(0.5..=1.0).contains(&trace) {
        return Err(Error::Validation(format!(
            "mixed pairwise trace {trace} outside [1/2, 1]"
        )));
    }
    Ok(0.5 * (1.0 + (2.0 * trace - 1.0).max(0.0).sqrt()))
}

/// Bloch length `|2p - 1|` of `rho_p`, or of a state mixed with weight `p`
/// with its antipode.
pub fn length_from_mixing_weight(p: f64) -> f64 {
    (2.0 * p - 1.0).abs()
}

/// Bloch length `sqrt(2 P - 1)` of a qubit with purity `P = Tr(rho^2)`.
pub fn length_from_purity(purity: f64) -> Result<f64> {
    if !(0.5..=1.0).contains(&purity) {
        return Err(Error::Validation(format!(
            "qubit purity {purity} outside [1/2, 1]"
        )));
    }
    Ok((2.0 * purity - 1.0).sqrt())
}

/// Largest `|gamma|` admitted by [`qutrit_gamma_config`], `arccos(3/4)`.
pub fn qutrit_gamma_max() -> f64 {
    0.75f64.acos()
}

/// Three pure qutrit kets with fixed pairwise overlaps and triple overlap
/// `e^{i gamma} / 3`:
///
/// ```text
/// |a> = |0>
/// |b> = (|0> + |1>) / sqrt(2)
/// |c> = (|0> + (2 e^{i gamma} - 1)|1> + sqrt(4 cos gamma - 3)|2>) / sqrt(3)
/// ```
pub fn qutrit_gamma_kets(gamma: f64) -> Result<[Vec<C64>; 3]> {
    let radicand = 4.0 * gamma.cos() - 3.0;
    if radicand < -1e-12 || !gamma.is_finite() {
        return Err(Error::Validation(format!(
            "gamma {gamma} outside [-arccos(3/4), arccos(3/4)]"
        )));
    }
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let h = 1.0 / 2f64.sqrt();
    let t = 1.0 / 3f64.sqrt();
    Ok([
        vec![one, z, z],
        vec![C64::new(h, 0.0), C64::new(h, 0.0), z],
        vec![
            C64::new(t, 0.0),
            (C64::from_polar(2.0, gamma) - 1.0) * t,
            C64::new(radicand.max(0.0).sqrt() * t, 0.0),
        ],
    ])
}

pub fn qutrit_gamma_config(gamma: f64) -> Result<PreparationTriple> {
    let kets = qutrit_gamma_kets(gamma)?;
    PreparationTriple::custom([
        DensityMatrix::pure(&kets[0])?,
        DensityMatrix::pure(&kets[1])?,
        DensityMatrix::pure(&kets[2])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{
        pairwise_trace, scalar_triple_product, triple_trace, BlochVector, GellMannVector,
    };

    fn bloch(t: &PreparationTriple) -> [BlochVector; 3] {
        std::array::from_fn(|i| BlochVector::from_state(&t.states[i]).unwrap())
    }

    #[test]
    fn flower_endpoints() {
        let t = PreparationTriple::pure_flower(0.0).unwrap();
        assert!((pairwise_trace(&t.states[0], &t.states[1]).unwrap() - 1.0).abs() < 1e-15);
        let r = bloch(&t);
        assert!(scalar_triple_product(&r[0], &r[1], &r[2]).abs() < 1e-15);
        assert!(PreparationTriple::pure_flower(-0.1).is_err());
        assert!(PreparationTriple::pure_flower(1.6).is_err());
    }

    #[test]
    fn flower_reference_point() {
        let t = PreparationTriple::pure_flower(0.684).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let tr = pairwise_trace(&t.states[i], &t.states[j]).unwrap();
            assert!((tr - flower_pairwise_trace(0.684)).abs() < 1e-12);
            assert!((tr - 0.700528426).abs() < 1e-9, "{tr}");
        }
    }

    #[test]
    fn flower_volume_closed_form() {
        let t = PreparationTriple::pure_flower(std::f64::consts::FRAC_PI_4).unwrap();
        let r = bloch(&t);
        let v = scalar_triple_product(&r[0], &r[1], &r[2]);
        assert!((v + 3.0 * 6f64.sqrt() / 8.0).abs() < 1e-12);
        for k in 0..=50 {
            let theta = FRAC_PI_2 * k as f64 / 50.0;
            let r = bloch(&PreparationTriple::pure_flower(theta).unwrap());
            assert!((scalar_triple_product(&r[0], &r[1], &r[2]) - flower_vabc(theta)).abs() < 1e-12);
        }
    }

    #[test]
    fn equatorial_flower_triple_trace() {
        let t = PreparationTriple::pure_flower(FRAC_PI_2).unwrap();
        let tt = triple_trace(&t.states[0], &t.states[1], &t.states[2]).unwrap();
        assert!((tt - C64::new(-0.125, 0.0)).norm() < 1e-15);
        let ph = crate::states::triad_phase(&t.states[0], &t.states[1], &t.states[2]).unwrap();
        assert!((ph - PI).abs() < 1e-12);
    }

    #[test]
    fn mixed_preparation() {
        let t = PreparationTriple::identical_mixed(1.0).unwrap();
        assert!((t.states[0].purity() - 1.0).abs() < 1e-15);
        let t = PreparationTriple::identical_mixed(0.5).unwrap();
        assert!((pairwise_trace(&t.states[0], &t.states[1]).unwrap() - 0.5).abs() < 1e-15);
        let t = PreparationTriple::identical_mixed(0.816).unwrap();
        let tr = pairwise_trace(&t.states[0], &t.states[1]).unwrap();
        assert!((tr - 0.700).abs() < 5e-4);
        let r = BlochVector::from_state(&t.states[0]).unwrap();
        assert!((r.vector().z - 0.632).abs() < 1e-12);
        assert!((t.states[0].purity() - 0.5 * (1.0 + 0.632f64.powi(2))).abs() < 1e-12);
        assert!(PreparationTriple::identical_mixed(1.2).is_err());
    }

    #[test]
    fn trace_of_seven_tenths() {
        let theta = flower_theta_for_trace(0.7).unwrap();
        assert!((theta - 0.684719203).abs() < 1e-9);
        assert!((mixed_p_for_trace(0.7).unwrap() - 0.816227766).abs() < 1e-9);
    }

    #[test]
    fn trace_inverses() {
        for k in 0..=20 {
            let t = 0.5 + 0.5 * k as f64 / 20.0;
            let theta = flower_theta_for_trace(t).unwrap();
            assert!((flower_pairwise_trace(theta) - t).abs() < 1e-12);
            let p = mixed_p_for_trace(t).unwrap();
            assert!((mixed_pairwise_trace(p) - t).abs() < 1e-12);
        }
    }

    #[test]
    fn length_conventions_disagree_at_point_nine() {
        assert!((length_from_mixing_weight(0.9) - 0.8).abs() < 1e-15);
        assert!((length_from_purity(0.9).unwrap() - 0.8f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gamma_configuration() {
        for k in 0..=10 {
            let gamma = qutrit_gamma_max() * k as f64 / 10.0;
            let t = qutrit_gamma_config(gamma).unwrap();
            let tt = triple_trace(&t.states[0], &t.states[1], &t.states[2]).unwrap();
            assert!((tt - C64::from_polar(1.0 / 3.0, gamma)).norm() < 1e-12);
            let n: Vec<GellMannVector> =
                t.states.iter().map(|s| GellMannVector::from_state(s).unwrap()).collect();
            let sum = n[0].dot(&n[1]) + n[0].dot(&n[2]) + n[1].dot(&n[2]);
            assert!((sum - 0.75).abs() < 1e-12);
        }
        let kets = qutrit_gamma_kets(qutrit_gamma_max()).unwrap();
        assert!(kets[2][2].norm() < 1e-6);
        assert!(qutrit_gamma_config(0.8).is_err());
    }
}
