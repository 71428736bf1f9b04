//! The m-objective LeadingOnesTrailingZeros benchmark (mLOTZ).
//!
//! The string is cut into `m/2` consecutive blocks of length `n' = 2n/m`.
//! Block `k` contributes objective `2k-1` (its number of leading ones) and
//! objective `2k` (its number of trailing zeros). An individual is Pareto
//! optimal exactly when every block has the shape `1^i 0^(n'-i)`, so the
//! Pareto front is `{(i_1, n'-i_1, ..., i_{m/2}, n'-i_{m/2})}` and has
//! `(n'+1)^(m/2)` members.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::individual::Individual;
use crate::objective::{compare_slices, Dominance, ObjectiveVector};

/// Largest `n` accepted by [`ProblemSpec::brute_force_pareto_set`].
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// A validated `(n, m)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    n: usize,
    m: usize,
    block_len: usize,
    front_size: u64,
}

impl ProblemSpec {
    /// Accepts `m ≥ 2` even, `n ≥ m`, and `m/2 | n`.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidProblem(format!("m must be at least 2, got {m}")));
        }
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidProblem(format!("m must be even, got {m}")));
        }
        if n < m {
            return Err(Error::InvalidProblem(format!(
                "n must be at least m, got n = {n}, m = {m}"
            )));
        }
        let blocks = m / 2;
        if !n.is_multiple_of(blocks) {
            return Err(Error::InvalidProblem(format!(
                "m/2 must divide n, got n = {n}, m/2 = {blocks}"
            )));
        }
        let block_len = n / blocks;
        let front_size = u32::try_from(blocks)
            .ok()
            .and_then(|b| (block_len as u64 + 1).checked_pow(b))
            .ok_or_else(|| Error::InvalidProblem(format!("Pareto front of n = {n}, m = {m} is too large to count")))?;
        Ok(Self {
            n,
            m,
            block_len,
            front_size,
        })
    }

    /// Problem size (string length).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of objectives.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Block length `n' = 2n/m`.
    #[inline]
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    #[inline]
    pub fn blocks(&self) -> usize {
        self.m / 2
    }

    /// `M = (n'+1)^(m/2)`, the size of both Pareto set and Pareto front.
    #[inline]
    pub fn front_size(&self) -> u64 {
        self.front_size
    }

    /// Upper bound `4n + 2m` on the number of members of any multiset of
    /// mLOTZ values that receive positive crowding distance.
    pub fn positive_crowding_bound(&self) -> usize {
        4 * self.n + 2 * self.m
    }

    pub fn evaluate(&self, x: &Individual) -> Result<ObjectiveVector> {
        self.check_len(x)?;
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &Individual) -> ObjectiveVector {
        let mut values = Vec::with_capacity(self.m);
        for block in 0..self.blocks() {
            let start = block * self.block_len;
            let end = start + self.block_len;
            let leading_ones = (start..end).take_while(|&i| x.get(i)).count();
            let trailing_zeros = (start..end).rev().take_while(|&i| !x.get(i)).count();
            values.push(leading_ones as u32);
            values.push(trailing_zeros as u32);
        }
        ObjectiveVector::new(values)
    }

    /// True iff every block of `x` reads `1^i 0^(n'-i)`.
    pub fn is_pareto_optimal(&self, x: &Individual) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.is_on_front(&self.evaluate_unchecked(x)))
    }

    /// Front membership by the per-block sum test `f_{2k-1} + f_{2k} = n'`.
    pub fn is_on_front(&self, value: &ObjectiveVector) -> bool {
        let n_prime = self.block_len as u32;
        value.len() == self.m && value.values().chunks_exact(2).all(|pair| pair[0] + pair[1] == n_prime)
    }

    /// All `M` Pareto optima, in lexicographic order of the leading-ones values.
    pub fn enumerate_pareto_front(&self) -> Vec<ObjectiveVector> {
        let n_prime = self.block_len as u32;
        let mut digits = vec![0u32; self.blocks()];
        let mut front = Vec::with_capacity(self.front_size as usize);
        loop {
            front.push(ObjectiveVector::new(
                digits.iter().flat_map(|&i| [i, n_prime - i]).collect(),
            ));
            // Odometer increment, last block fastest.
            let mut k = digits.len();
            loop {
                if k == 0 {
                    return front;
                }
                k -= 1;
                if digits[k] < n_prime {
                    digits[k] += 1;
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    /// Whether two Pareto optima differ in exactly one block, by one step.
    pub fn are_neighbors(&self, u: &ObjectiveVector, v: &ObjectiveVector) -> Result<bool> {
        for w in [u, v] {
            if !self.is_on_front(w) {
                return Err(Error::NotParetoOptimal(format!("{w:?}")));
            }
        }
        let mut differing = u
            .values()
            .iter()
            .step_by(2)
            .zip(v.values().iter().step_by(2))
            .filter(|(a, b)| a != b);
        Ok(match (differing.next(), differing.next()) {
            (Some((a, b)), None) => a.abs_diff(*b) == 1,
            _ => false,
        })
    }

    /// Exhaustive Pareto set: evaluates all `2^n` strings and keeps those
    /// whose value no other string's value strictly dominates.
    pub fn brute_force_pareto_set(&self) -> Result<Vec<Individual>> {
        if self.n > BRUTE_FORCE_LIMIT {
            return Err(Error::TooLarge {
                n: self.n,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
        let all = || (0u64..1 << self.n).map(|bits| self.string_from_index(bits));

        let values: Vec<ObjectiveVector> = all()
            .map(|x| self.evaluate_unchecked(&x))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        let optimal: HashSet<&ObjectiveVector> = values
            .iter()
            .filter(|u| {
                !values
                    .iter()
                    .any(|v| compare_slices(v.values(), u.values()) == Dominance::Dominates)
            })
            .collect();

        Ok(all()
            .filter(|x| optimal.contains(&self.evaluate_unchecked(x)))
            .collect())
    }

    /// Bit `i` of `bits` becomes position `i` of the string.
    fn string_from_index(&self, bits: u64) -> Individual {
        let flags: Vec<bool> = (0..self.n).map(|i| bits >> i & 1 == 1).collect();
        Individual::from_bits(&flags)
    }

    fn check_len(&self, x: &Individual) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(n: usize, m: usize) -> ProblemSpec {
        ProblemSpec::new(n, m).unwrap()
    }

    fn x(s: &str) -> Individual {
        s.parse().unwrap()
    }

    /// Direct transcription of the sum-of-products definition, 1-indexed.
    fn literal_mlotz(x: &Individual, n: usize, m: usize) -> Vec<u32> {
        let n_prime = 2 * n / m;
        let bit = |pos: usize| u32::from(x.get(pos - 1));
        (1..=m)
            .map(|k| {
                (1..=n_prime)
                    .map(|i| {
                        if k % 2 == 1 {
                            let offset = (k - 1) * n_prime / 2;
                            (1..=i).map(|j| bit(j + offset)).product::<u32>()
                        } else {
                            let offset = (k - 2) * n_prime / 2;
                            (i..=n_prime).map(|j| 1 - bit(j + offset)).product::<u32>()
                        }
                    })
                    .sum()
            })
            .collect()
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(ProblemSpec::new(40, 3)
            .unwrap_err()
            .to_string()
            .contains("m must be even"));
        assert!(ProblemSpec::new(10, 6)
            .unwrap_err()
            .to_string()
            .contains("m/2 must divide n"));
        assert!(ProblemSpec::new(2, 4).is_err());
        assert!(ProblemSpec::new(10, 0).is_err());
        assert!(ProblemSpec::new(10, 4).is_ok());
    }

    #[test]
    fn block_length_and_front_size() {
        let s = spec(40, 4);
        assert_eq!(s.block_len(), 20);
        assert_eq!(s.front_size(), 441);
        assert_eq!(s.positive_crowding_bound(), 168);
        assert_eq!(spec(8, 4).front_size(), 25);
        assert_eq!(spec(5, 2).front_size(), 6);
    }

    #[test]
    fn evaluates_documented_strings() {
        let s = spec(8, 4);
        assert_eq!(s.evaluate(&x("11111111")).unwrap(), [4, 0, 4, 0].into());
        assert_eq!(s.evaluate(&x("11100001")).unwrap(), [3, 1, 0, 0].into());
        assert_eq!(s.evaluate(&x("11010010")).unwrap(), [2, 0, 0, 1].into());
        assert_eq!(s.evaluate(&x("00000000")).unwrap(), [0, 4, 0, 4].into());
    }

    #[test]
    fn evaluate_rejects_wrong_length() {
        assert!(matches!(
            spec(8, 4).evaluate(&x("1111")),
            Err(Error::LengthMismatch { expected: 8, found: 4 })
        ));
        assert!(spec(8, 4).is_pareto_optimal(&x("1")).is_err());
    }

    #[test]
    fn pareto_optimality_of_documented_strings() {
        let s = spec(8, 4);
        assert!(s.is_pareto_optimal(&x("11000000")).unwrap());
        assert!(!s.is_pareto_optimal(&x("10100000")).unwrap());
        assert!(s.is_pareto_optimal(&x("11110000")).unwrap());
    }

    #[test]
    fn documented_dominated_string_is_dominated_by_brute_force() {
        let s = spec(8, 4);
        let target = s.evaluate(&x("10100000")).unwrap();
        let dominated = (0u64..256).any(|b| {
            let y = s.string_from_index(b);
            s.evaluate(&y).unwrap().dominates(&target)
        });
        assert!(dominated);
    }

    #[test]
    fn front_enumeration_sizes() {
        assert_eq!(spec(8, 4).enumerate_pareto_front().len(), 25);
        assert_eq!(spec(40, 4).enumerate_pareto_front().len(), 441);
        let lotz = spec(5, 2).enumerate_pareto_front();
        assert_eq!(lotz.len(), 6);
        assert!(lotz.iter().all(|v| v.values()[0] + v.values()[1] == 5));
    }

    #[test]
    fn front_enumeration_has_no_duplicates_and_passes_sum_test() {
        for (n, m) in [(8, 4), (12, 6), (6, 2)] {
            let s = spec(n, m);
            let front = s.enumerate_pareto_front();
            let set: HashSet<_> = front.iter().collect();
            assert_eq!(set.len() as u64, s.front_size());
            assert!(front.iter().all(|v| s.is_on_front(v)));
        }
    }

    #[test]
    fn neighbor_relation() {
        let s = spec(8, 4);
        let u: ObjectiveVector = [2, 2, 1, 3].into();
        assert!(s.are_neighbors(&u, &[3, 1, 1, 3].into()).unwrap());
        assert!(!s.are_neighbors(&u, &u).unwrap());
        assert!(!s.are_neighbors(&u, &[3, 1, 2, 2].into()).unwrap());
        assert!(!s.are_neighbors(&u, &[0, 4, 1, 3].into()).unwrap());
        assert!(matches!(
            s.are_neighbors(&u, &[2, 1, 1, 3].into()),
            Err(Error::NotParetoOptimal(_))
        ));
    }

    #[test]
    fn brute_force_pareto_sets() {
        let set = spec(4, 2).brute_force_pareto_set().unwrap();
        let strings: HashSet<String> = set.iter().map(|x| x.to_string()).collect();
        let expected: HashSet<String> = ["0000", "1000", "1100", "1110", "1111"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(strings, expected);
        assert_eq!(spec(8, 4).brute_force_pareto_set().unwrap().len(), 25);
        assert_eq!(spec(6, 2).brute_force_pareto_set().unwrap().len(), 7);
    }

    #[test]
    fn brute_force_refuses_large_instances() {
        assert!(matches!(
            spec(40, 4).brute_force_pareto_set(),
            Err(Error::TooLarge { n: 40, .. })
        ));
    }

    #[test]
    fn brute_force_agrees_with_shape_characterization() {
        for (n, m) in [(8, 4), (12, 4), (12, 6), (6, 2)] {
            let s = spec(n, m);
            let brute: HashSet<Individual> = s.brute_force_pareto_set().unwrap().into_iter().collect();
            let by_shape: HashSet<Individual> = (0u64..1 << n)
                .map(|b| s.string_from_index(b))
                .filter(|x| s.is_pareto_optimal(x).unwrap())
                .collect();
            assert_eq!(brute, by_shape);
            assert_eq!(brute.len() as u64, s.front_size());
            assert_eq!(s.enumerate_pareto_front().len() as u64, s.front_size());
        }
    }

    #[test]
    fn block_sums_bounded_by_block_length() {
        let s = spec(12, 4);
        for b in 0u64..1 << 12 {
            let x = s.string_from_index(b);
            let v = s.evaluate(&x).unwrap();
            for pair in v.values().chunks_exact(2) {
                assert!(pair[0] + pair[1] <= 6);
            }
            if s.is_pareto_optimal(&x).unwrap() {
                assert!(v.values().chunks_exact(2).all(|p| p[0] + p[1] == 6));
            }
        }
    }

    proptest! {
        #[test]
        fn evaluation_matches_literal_formula(seed in any::<u64>(), shape in 0usize..4) {
            let (n, m) = [(8, 4), (12, 6), (40, 4), (20, 2)][shape];
            let s = spec(n, m);
            let x = Individual::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(s.evaluate(&x).unwrap().values().to_vec(), literal_mlotz(&x, n, m));
        }
    }
}
