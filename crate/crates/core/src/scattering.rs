//! Output statistics of independent photons with arbitrary mixed internal
//! states scattered by a linear interferometer.
//!
//! For single photons entering distinct modes `r` and an output pattern `s`,
//! the detection probability is
//!
//! ```text
//! P(s) = N * sum_{sigma in S_N} [ prod_cycles Tr(rho_{a1} ... rho_{an}) ] * perm(M .* conj(M_{sigma, 1}))
//! ```
//!
//! where `M = U[d(r), d(s)]` repeats rows and columns according to the mode
//! assignment lists, `M_{sigma,1}` has its rows permuted by `sigma`, each
//! cycle `(a1 .. an)` of `sigma` contributes the trace of the ordered product
//! of the internal states of those photons, and `N = 1 / prod_j (s_j! r_j!)`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{matrix_product_trace, permanent, ComplexMatrix, Permutation, C64};
use crate::states::DensityMatrix;

/// Tolerance on the unitarity of an interferometer.
pub const UNITARITY_TOL: f64 = 1e-10;
/// Largest photon number accepted by the engine.
pub const MAX_PHOTONS: usize = 8;
/// Largest imaginary residue tolerated in a computed probability.
pub const IMAG_TOL: f64 = 1e-10;
/// Largest excursion outside `[0, 1]` that is clamped rather than reported.
pub const RANGE_TOL: f64 = 1e-9;

/// A linear-optical network: a unitary `U` whose entry `U[j][k]` is the
/// amplitude for a photon entering mode `j` to leave in mode `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interferometer {
    u: ComplexMatrix,
}

impl Interferometer {
    pub fn new(u: ComplexMatrix) -> Result<Self> {
        u.require_square()?;
        let dev = u.unitarity_deviation();
        if dev.is_nan() || dev > UNITARITY_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(Self { u })
    }

    /// Balanced three-mode splitter, `U[j][k] = exp(2 pi i jk / 3) / sqrt(3)`
    /// with `j, k` counted from zero.
    pub fn tritter() -> Self {
        Self::fourier(3)
    }

    /// `n`-mode discrete Fourier interferometer.
    pub fn fourier(n: usize) -> Self {
        let s = 1.0 / (n as f64).sqrt();
        Self {
            u: ComplexMatrix::from_fn(n, n, |j, k| {
                C64::from_polar(s, 2.0 * std::f64::consts::PI * (j * k) as f64 / n as f64)
            }),
        }
    }

    /// Balanced beam splitter `[[1, 1], [1, -1]] / sqrt(2)`.
    pub fn beam_splitter() -> Self {
        Self::fourier(2)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            u: ComplexMatrix::identity(n),
        }
    }

    pub fn modes(&self) -> usize {
        self.u.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.u
    }
}

/// Photon counts per mode.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeOccupation(Vec<usize>);

impl ModeOccupation {
    pub fn new(counts: Vec<usize>) -> Self {
        Self(counts)
    }

    /// Accepts signed counts from external input, rejecting negatives.
    pub fn from_signed(counts: &[i64]) -> Result<Self> {
        counts
            .iter()
            .map(|&c| {
                usize::try_from(c)
                    .map_err(|_| Error::Validation(format!("negative photon count {c}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn modes(&self) -> usize {
        self.0.len()
    }

    pub fn photons(&self) -> usize {
        self.0.iter().sum()
    }

    /// Mode assignment list: mode `i` repeated `n_i` times, non-decreasing.
    pub fn mode_assignment(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(mode, &n)| std::iter::repeat_n(mode, n))
            .collect()
    }

    fn factorial_product(&self) -> f64 {
        self.0
            .iter()
            .map(|&n| (1..=n).map(|k| k as f64).product::<f64>())
            .product()
    }

    /// All patterns of `photons` photons over `modes` modes, starting from
    /// everything in the first mode.
    pub fn all_patterns(modes: usize, photons: usize) -> Vec<Self> {
        fn rec(modes: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<ModeOccupation>) {
            if prefix.len() + 1 == modes {
                prefix.push(left);
                out.push(ModeOccupation(prefix.clone()));
                prefix.pop();
                return;
            }
            for n in (0..=left).rev() {
                prefix.push(n);
                rec(modes, left - n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if modes > 0 {
            rec(modes, photons, &mut Vec::with_capacity(modes), &mut out);
        }
        out
    }
}

impl fmt::Debug for ModeOccupation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ModeOccupation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Single photons in distinct input modes, with one internal state per
/// photon in mode order.
#[derive(Clone, Debug)]
pub struct InputSpec {
    occupation: ModeOccupation,
    states: Vec<DensityMatrix>,
}

impl InputSpec {
    pub fn new(occupation: ModeOccupation, states: Vec<DensityMatrix>) -> Result<Self> {
        if let Some(n) = occupation.counts().iter().find(|&&n| n > 1) {
            return Err(Error::Validation(format!(
                "{n} photons in one input mode; inputs must carry at most one photon per mode"
            )));
        }
        if states.len() != occupation.photons() {
            return Err(Error::Validation(format!(
                "{} internal states for {} photons",
                states.len(),
                occupation.photons()
            )));
        }
        if let Some(first) = states.first() {
            if states.iter().any(|s| s.dim() != first.dim()) {
                return Err(Error::Dimension("internal states differ in dimension".into()));
            }
        }
        Ok(Self { occupation, states })
    }

    /// One photon in each of the first `states.len()` modes of an `modes`-mode device.
    pub fn first_modes(modes: usize, states: Vec<DensityMatrix>) -> Result<Self> {
        if states.len() > modes {
            return Err(Error::Validation(format!(
                "{} photons do not fit into {modes} modes",
                states.len()
            )));
        }
        let counts = (0..modes).map(|i| usize::from(i < states.len())).collect();
        Self::new(ModeOccupation::new(counts), states)
    }

    pub fn occupation(&self) -> &ModeOccupation {
        &self.occupation
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn photons(&self) -> usize {
        self.states.len()
    }

    /// The same input with every internal state complex conjugated.
    pub fn conjugated(&self) -> Self {
        Self {
            occupation: self.occupation.clone(),
            states: self.states.iter().map(DensityMatrix::conj).collect(),
        }
    }
}

/// `U[d(r), d(s)]`.
pub fn scattering_matrix(
    u: &Interferometer,
    input: &ModeOccupation,
    output: &ModeOccupation,
) -> Result<ComplexMatrix> {
    for occ in [input, output] {
        if occ.modes() != u.modes() {
            return Err(Error::Dimension(format!(
                "occupation over {} modes for a {}-mode interferometer",
                occ.modes(),
                u.modes()
            )));
        }
    }
    if input.photons() != output.photons() {
        return Err(Error::Validation(format!(
            "{} photons in, {} photons out",
            input.photons(),
            output.photons()
        )));
    }
    Ok(u.matrix()
        .select(&input.mode_assignment(), &output.mode_assignment()))
}

/// Internal-state weight of every permutation of the photons: the product
/// over its disjoint cycles `(i, s(i), s^2(i), ...)` of the trace of the
/// photons' states taken against the cycle, `Tr(rho_i ... rho_{s^2(i)} rho_{s(i)})`,
/// which pairs with the rows of `M*` permuted by `s`.
struct CycleWeights {
    terms: Vec<(Permutation, C64)>,
}

impl CycleWeights {
    fn new(states: &[DensityMatrix]) -> Result<Self> {
        let mut memo: HashMap<Vec<usize>, C64> = HashMap::new();
        let mut terms = Vec::new();
        for sigma in Permutation::all(states.len()) {
            let mut w = C64::new(1.0, 0.0);
            for mut cycle in sigma.disjoint_cycles().cycles {
                if cycle.len() == 1 {
                    continue;
                }
                cycle[1..].reverse();
                let t = match memo.get(&cycle) {
                    Some(t) => *t,
                    None => {
                        let ms: Vec<&ComplexMatrix> =
                            cycle.iter().map(|&i| states[i].matrix()).collect();
                        let t = matrix_product_trace(&ms)?;
                        memo.insert(cycle, t);
                        t
                    }
                };
                w *= t;
            }
            terms.push((sigma, w));
        }
        Ok(Self { terms })
    }

    fn raw_probability(&self, m: &ComplexMatrix, normalization: f64) -> Result<C64> {
        let mut acc = C64::new(0.0, 0.0);
        for (sigma, w) in &self.terms {
            if w.norm() == 0.0 {
                continue;
            }
            acc += w * permanent(&m.row_permuted_conjugate_hadamard(sigma)?)?;
        }
        Ok(acc * normalization)
    }
}

fn check_input(u: &Interferometer, input: &InputSpec) -> Result<()> {
    if input.occupation.modes() != u.modes() {
        return Err(Error::Dimension(format!(
            "input over {} modes for a {}-mode interferometer",
            input.occupation.modes(),
            u.modes()
        )));
    }
    if input.photons() > MAX_PHOTONS {
        return Err(Error::TooLarge(format!(
            "{} photons exceed the engine bound of {MAX_PHOTONS}",
            input.photons()
        )));
    }
    Ok(())
}

/// Validates the imaginary residue and range of a raw probability.
fn finalize(raw: C64, output: &ModeOccupation) -> Result<f64> {
    if raw.im.abs() > IMAG_TOL || !raw.re.is_finite() {
        return Err(Error::Consistency(format!(
            "probability of {output} has imaginary part {:.3e}",
            raw.im
        )));
    }
    if raw.re < -RANGE_TOL || raw.re > 1.0 + RANGE_TOL {
        return Err(Error::Consistency(format!(
            "probability of {output} is {} (outside [0, 1])",
            raw.re
        )));
    }
    Ok(raw.re.clamp(0.0, 1.0))
}

/// Complex value of the probability formula before the reality check.
pub fn raw_probability(u: &Interferometer, input: &InputSpec, output: &ModeOccupation) -> Result<C64> {
    check_input(u, input)?;
    let m = scattering_matrix(u, &input.occupation, output)?;
    let weights = CycleWeights::new(&input.states)?;
    let norm = 1.0 / (output.factorial_product() * input.occupation.factorial_product());
    weights.raw_probability(&m, norm)
}

/// Probability of detecting the output pattern `output`.
pub fn output_probability(u: &Interferometer, input: &InputSpec, output: &ModeOccupation) -> Result<f64> {
    finalize(raw_probability(u, input, output)?, output)
}

/// Probabilities of output patterns.
#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeDistribution {
    outcomes: Vec<(ModeOccupation, f64)>,
}

impl OutcomeDistribution {
    pub fn new(outcomes: Vec<(ModeOccupation, f64)>) -> Self {
        Self { outcomes }
    }

    pub fn outcomes(&self) -> &[(ModeOccupation, f64)] {
        &self.outcomes
    }

    pub fn probability(&self, counts: &[usize]) -> Option<f64> {
        self.outcomes
            .iter()
            .find(|(s, _)| s.counts() == counts)
            .map(|(_, p)| *p)
    }

    pub fn total(&self) -> f64 {
        self.outcomes.iter().map(|(_, p)| p).sum()
    }

    /// Largest per-pattern difference; patterns missing from either side count as zero.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for (s, p) in &self.outcomes {
            worst = worst.max((p - other.probability(s.counts()).unwrap_or(0.0)).abs());
        }
        for (s, p) in &other.outcomes {
            if self.probability(s.counts()).is_none() {
                worst = worst.max(p.abs());
            }
        }
        worst
    }
}

/// Probabilities of every output pattern with the input photon number.
pub fn output_distribution(u: &Interferometer, input: &InputSpec) -> Result<OutcomeDistribution> {
    check_input(u, input)?;
    let weights = CycleWeights::new(&input.states)?;
    let in_norm = input.occupation.factorial_product();
    let patterns = ModeOccupation::all_patterns(u.modes(), input.photons());
    let outcomes = patterns
        .into_par_iter()
        .map(|s| {
            let m = scattering_matrix(u, &input.occupation, &s)?;
            let raw = weights.raw_probability(&m, 1.0 / (s.factorial_product() * in_norm))?;
            let p = finalize(raw, &s)?;
            Ok((s, p))
        })
        .collect::<Result<Vec<_>>>()?;
    let dist = OutcomeDistribution { outcomes };
    let total = dist.total();
    if (total - 1.0).abs() > RANGE_TOL {
        return Err(Error::Consistency(format!(
            "output distribution sums to {total}"
        )));
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    fn occ(c: &[usize]) -> ModeOccupation {
        ModeOccupation::new(c.to_vec())
    }

    #[test]
    fn mode_assignment_lists() {
        assert_eq!(occ(&[1, 1, 1]).mode_assignment(), vec![0, 1, 2]);
        assert_eq!(occ(&[2, 0, 1]).mode_assignment(), vec![0, 0, 2]);
        assert_eq!(occ(&[3, 0, 0]).mode_assignment(), vec![0, 0, 0]);
        assert!(ModeOccupation::from_signed(&[1, -1]).is_err());
    }

    #[test]
    fn pattern_enumeration_counts() {
        // C(N + m - 1, N)
        assert_eq!(ModeOccupation::all_patterns(3, 3).len(), 10);
        assert_eq!(ModeOccupation::all_patterns(4, 4).len(), 35);
        assert_eq!(ModeOccupation::all_patterns(2, 0).len(), 1);
        assert_eq!(ModeOccupation::all_patterns(3, 3)[0], occ(&[3, 0, 0]));
    }

    #[test]
    fn scattering_matrix_selection() {
        let t = Interferometer::tritter();
        let m = scattering_matrix(&t, &occ(&[1, 1, 1]), &occ(&[1, 1, 1])).unwrap();
        assert_eq!(&m, t.matrix());
        let m = scattering_matrix(&t, &occ(&[1, 1, 1]), &occ(&[3, 0, 0])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[(i, j)], t.matrix()[(i, 0)]);
            }
        }
        let bs = Interferometer::beam_splitter();
        assert_eq!(&scattering_matrix(&bs, &occ(&[1, 1]), &occ(&[1, 1])).unwrap(), bs.matrix());
        assert!(scattering_matrix(&t, &occ(&[1, 1, 0]), &occ(&[1, 1, 1])).is_err());
    }

    #[test]
    fn rejects_bad_interferometers_and_inputs() {
        let not_unitary = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(Interferometer::new(not_unitary), Err(Error::NotUnitary(_))));
        let q = DensityMatrix::basis(2, 0).unwrap();
        assert!(InputSpec::new(occ(&[2, 0]), vec![q.clone(), q.clone()]).is_err());
        assert!(InputSpec::new(occ(&[1, 1]), vec![q.clone()]).is_err());
        let q3 = DensityMatrix::basis(3, 0).unwrap();
        assert!(InputSpec::new(occ(&[1, 1]), vec![q.clone(), q3]).is_err());
        let big = InputSpec::first_modes(9, vec![q; 9]).unwrap();
        assert!(matches!(
            output_distribution(&Interferometer::identity(9), &big),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn hong_ou_mandel_limits() {
        let bs = Interferometer::beam_splitter();
        let h = DensityMatrix::basis(2, 0).unwrap();
        let v = DensityMatrix::basis(2, 1).unwrap();
        let same = InputSpec::first_modes(2, vec![h.clone(), h.clone()]).unwrap();
        assert!(output_probability(&bs, &same, &occ(&[1, 1])).unwrap().abs() < 1e-15);
        let orth = InputSpec::first_modes(2, vec![h, v]).unwrap();
        assert!((output_probability(&bs, &orth, &occ(&[1, 1])).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn tritter_indistinguishable_photons() {
        let t = Interferometer::tritter();
        let h = DensityMatrix::basis(2, 0).unwrap();
        let input = InputSpec::first_modes(3, vec![h.clone(), h.clone(), h]).unwrap();
        assert!((output_probability(&t, &input, &occ(&[1, 1, 1])).unwrap() - 1.0 / 3.0).abs() < 1e-14);
        assert!((output_probability(&t, &input, &occ(&[3, 0, 0])).unwrap() - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn tritter_orthogonal_photons_are_classical() {
        let t = Interferometer::tritter();
        let states: Vec<DensityMatrix> = (0..3).map(|k| DensityMatrix::basis(3, k).unwrap()).collect();
        let dist = output_distribution(&t, &InputSpec::first_modes(3, states).unwrap()).unwrap();
        // multinomial counting with 1/3 per mode
        for (s, p) in dist.outcomes() {
            let want = match *s.counts().iter().max().unwrap() {
                1 => 6.0 / 27.0,
                2 => 3.0 / 27.0,
                _ => 1.0 / 27.0,
            };
            assert!((p - want).abs() < 1e-14, "{s}: {p}");
        }
        assert!((dist.total() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn tritter_maximally_mixed_qubits() {
        // Bloch dots 0 and zero volume
        let t = Interferometer::tritter();
        let m = DensityMatrix::maximally_mixed(2).unwrap();
        let dist = output_distribution(&t, &InputSpec::first_modes(3, vec![m.clone(), m.clone(), m]).unwrap()).unwrap();
        for (s, p) in dist.outcomes() {
            let want = match *s.counts().iter().max().unwrap() {
                1 => 1.0 / 6.0,
                2 => 1.0 / 12.0,
                _ => 1.0 / 9.0,
            };
            assert!((p - want).abs() < 1e-14, "{s}: {p}");
        }
    }

    #[test]
    fn single_photon_and_identity() {
        let mut rng = random::seeded(21);
        let u = random::haar_unitary(&mut rng, 4);
        let q = random::mixed_state(&mut rng, 2);
        let dist = output_distribution(&u, &InputSpec::first_modes(4, vec![q.clone()]).unwrap()).unwrap();
        for k in 0..4 {
            let mut s = vec![0; 4];
            s[k] = 1;
            let want = u.matrix()[(0, k)].norm_sqr();
            assert!((dist.probability(&s).unwrap() - want).abs() < 1e-14);
        }
        let input = InputSpec::new(occ(&[1, 0, 1]), vec![q.clone(), q]).unwrap();
        let dist = output_distribution(&Interferometer::identity(3), &input).unwrap();
        assert!((dist.probability(&[1, 0, 1]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn normalization_and_reality_on_random_instances() {
        let mut rng = random::seeded(22);
        for m in 2..=4 {
            for n in 1..=m {
                for d in 2..=3 {
                    let u = random::haar_unitary(&mut rng, m);
                    let states = (0..n).map(|_| random::mixed_state(&mut rng, d)).collect();
                    let input = InputSpec::first_modes(m, states).unwrap();
                    for s in ModeOccupation::all_patterns(m, n) {
                        assert!(raw_probability(&u, &input, &s).unwrap().im.abs() < 1e-10);
                    }
                    let dist = output_distribution(&u, &input).unwrap();
                    assert!((dist.total() - 1.0).abs() < 1e-9);
                }
            }
        }
    }
}
