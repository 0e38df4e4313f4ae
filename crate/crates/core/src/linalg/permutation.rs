use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0, .., n-1}` in one-line notation: `j -> mapping[j]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

/// Disjoint cycles of a permutation in canonical form.
///
/// Every cycle starts at its smallest element and cycles are ordered by that
/// element, so two equal permutations always give identical decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Recomposes the permutation by applying each cycle `c0 -> c1 -> ... -> c0`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.cycles.iter().map(Vec::len).sum();
        let mut mapping = vec![usize::MAX; n];
        for cycle in &self.cycles {
            for (pos, &from) in cycle.iter().enumerate() {
                let to = cycle[(pos + 1) % cycle.len()];
                if from >= n || mapping[from] != usize::MAX {
                    return Err(Error::Validation("cycles do not partition 0..n".into()));
                }
                mapping[from] = to;
            }
        }
        Permutation::new(mapping)
    }
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(Error::Validation(format!(
                    "{mapping:?} is not a permutation of 0..{n}"
                )));
            }
            seen[m] = true;
        }
        Ok(Self { mapping })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn image(&self, j: usize) -> usize {
        self.mapping[j]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.mapping
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (j, &m) in self.mapping.iter().enumerate() {
            inv[m] = j;
        }
        Self { mapping: inv }
    }

    /// `self ∘ other`, i.e. `j -> self(other(j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Dimension("composing permutations of different size".into()));
        }
        Ok(Self {
            mapping: other.mapping.iter().map(|&j| self.mapping[j]).collect(),
        })
    }

    pub fn disjoint_cycles(&self) -> CycleDecomposition {
        let n = self.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !visited[j] {
                visited[j] = true;
                cycle.push(j);
                j = self.mapping[j];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// All permutations of `n` elements in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.mapping)
    }
}

/// Lexicographic enumeration of `S_n`.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        let n = succ.len();
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { mapping: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_has_singleton_cycles() {
        let d = Permutation::identity(3).disjoint_cycles();
        assert_eq!(d.cycles, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(d.cycle_count(), 3);
    }

    #[test]
    fn three_cycle_and_transposition() {
        // (2,3,1) and (2,1,3) in 1-based one-line notation
        let d = Permutation::new(vec![1, 2, 0]).unwrap().disjoint_cycles();
        assert_eq!(d.cycles, vec![vec![0, 1, 2]]);
        assert_eq!(d.cycle_count(), 1);

        let d = Permutation::new(vec![1, 0, 2]).unwrap().disjoint_cycles();
        assert_eq!(d.cycles, vec![vec![0, 1], vec![2]]);
        assert_eq!(d.cycle_count(), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<Vec<usize>> = Permutation::all(4).map(|p| p.as_slice().to_vec()).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    proptest! {
        #[test]
        fn cycles_recompose_to_the_permutation(
            mapping in (1usize..9).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        ) {
            let sigma = Permutation::new(mapping).unwrap();
            let d = sigma.disjoint_cycles();
            prop_assert_eq!(d.cycles.iter().map(Vec::len).sum::<usize>(), sigma.len());
            for c in &d.cycles {
                prop_assert_eq!(c[0], *c.iter().min().unwrap());
            }
            prop_assert_eq!(d.to_permutation().unwrap(), sigma.clone());
            prop_assert_eq!(sigma.compose(&sigma.inverse()).unwrap(), Permutation::identity(sigma.len()));
        }
    }
}
