//! Multisets of positive step sizes, encoded as count vectors.
//!
//! `counts[k]` is the number of entries of size `k + 1`. Trailing zeros are
//! trimmed so equal multisets compare equal.

use std::fmt;

use num::integer::binomial;
use num::{BigInt, BigRational, Zero};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepSequence {
    counts: Vec<u32>,
}

impl StepSequence {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: &[u32]) -> Self {
        let mut s = Self {
            counts: counts.to_vec(),
        };
        s.trim();
        s
    }

    /// `n` entries of size 1.
    pub fn units(n: u32) -> Self {
        Self::from_counts(&[n])
    }

    pub fn from_sizes<I: IntoIterator<Item = u32>>(sizes: I) -> Self {
        let mut s = Self::empty();
        for k in sizes {
            s.push(k);
        }
        s
    }

    pub fn push(&mut self, size: u32) {
        assert!(size > 0, "step sizes are positive");
        let idx = size as usize - 1;
        if self.counts.len() <= idx {
            self.counts.resize(idx + 1, 0);
        }
        self.counts[idx] += 1;
    }

    fn trim(&mut self) {
        while self.counts.last() == Some(&0) {
            self.counts.pop();
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of entries of the given size.
    pub fn count(&self, size: u32) -> u32 {
        size.checked_sub(1)
            .and_then(|i| self.counts.get(i as usize).copied())
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest size present, 0 when empty.
    pub fn max_size(&self) -> u32 {
        self.counts.len() as u32
    }

    /// `|α|`: number of entries.
    pub fn len(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// `Iα`: total size.
    pub fn total(&self) -> u64 {
        self.iter_counts().map(|(k, c)| k as u64 * c as u64).sum()
    }

    /// `(size, count)` pairs with nonzero count.
    pub fn iter_counts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32 + 1, c))
    }

    pub fn only_units(&self) -> bool {
        self.counts.len() <= 1
    }

    pub fn add(&self, other: &StepSequence) -> StepSequence {
        let n = self.counts.len().max(other.counts.len());
        let counts: Vec<u32> = (0..n)
            .map(|i| self.counts.get(i).unwrap_or(&0) + other.counts.get(i).unwrap_or(&0))
            .collect();
        Self::from_counts(&counts)
    }

    /// Componentwise difference, `None` if some count would go negative.
    pub fn checked_sub(&self, other: &StepSequence) -> Option<StepSequence> {
        if !other.is_sub_of(self) {
            return None;
        }
        let counts: Vec<u32> = (0..self.counts.len())
            .map(|i| self.counts[i] - other.counts.get(i).unwrap_or(&0))
            .collect();
        Some(Self::from_counts(&counts))
    }

    /// Componentwise `self <= other`.
    pub fn is_sub_of(&self, other: &StepSequence) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(i, &c)| c <= *other.counts.get(i).unwrap_or(&0))
    }

    /// `(self choose other)`: product of componentwise binomials.
    pub fn choose(&self, other: &StepSequence) -> BigInt {
        if !other.is_sub_of(self) {
            return BigInt::zero();
        }
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &n)| binomial(BigInt::from(n), BigInt::from(*other.counts.get(i).unwrap_or(&0))))
            .product()
    }

    /// `I^α = Π k^{α_k}`.
    pub fn size_power(&self) -> BigInt {
        self.iter_counts()
            .map(|(k, c)| num::pow(BigInt::from(k), c as usize))
            .product()
    }

    /// `Σ_k (k² − 1)/2 · α_k`, the per-triangle small-j weight summed over the
    /// multiset when each entry is the vertical side of a triangle.
    pub fn half_square_excess(&self) -> BigRational {
        let doubled: BigInt = self
            .iter_counts()
            .map(|(k, c)| BigInt::from((k as u64 * k as u64 - 1) * c as u64))
            .sum();
        BigRational::new(doubled, BigInt::from(2))
    }

    /// All sub-multisets with the given total size, in increasing
    /// lexicographic order of their count vectors.
    pub fn sub_multisets_with_total(&self, total: u64) -> Vec<StepSequence> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.counts.len()];
        self.sub_rec(0, total, &mut current, &mut out);
        out.sort();
        out
    }

    fn sub_rec(&self, idx: usize, remaining: u64, current: &mut Vec<u32>, out: &mut Vec<StepSequence>) {
        if remaining == 0 {
            out.push(Self::from_counts(current));
            return;
        }
        if idx == self.counts.len() {
            return;
        }
        let size = idx as u64 + 1;
        let max_take = (self.counts[idx] as u64).min(remaining / size);
        for take in 0..=max_take {
            current[idx] = take as u32;
            self.sub_rec(idx + 1, remaining - take * size, current, out);
        }
        current[idx] = 0;
    }
}

impl fmt::Display for StepSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k > n`.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn totals_and_lengths() {
        let a = StepSequence::from_counts(&[1, 1]);
        assert_eq!(a.total(), 3);
        assert_eq!(a.len(), 2);
        assert_eq!(StepSequence::from_counts(&[2, 0, 0]), StepSequence::units(2));
        assert_eq!(StepSequence::from_sizes([2, 1]), a);
    }

    #[test]
    fn binomials_and_powers() {
        let n = StepSequence::from_counts(&[3, 2]);
        let k = StepSequence::from_counts(&[1, 1]);
        assert_eq!(n.choose(&k), BigInt::from(3 * 2));
        assert_eq!(k.choose(&n), BigInt::zero());
        assert_eq!(StepSequence::from_counts(&[5, 2, 1]).size_power(), BigInt::from(4 * 3));
        assert!(StepSequence::empty().size_power().is_one());
    }

    #[test]
    fn half_square_excess_ignores_units() {
        assert!(StepSequence::units(7).half_square_excess().is_zero());
        // 2 -> 3/2, 3 -> 4
        let s = StepSequence::from_sizes([2, 3]);
        assert_eq!(s.half_square_excess(), BigRational::new(11.into(), 2.into()));
    }

    #[test]
    fn sub_multisets() {
        let s = StepSequence::from_counts(&[2, 1]);
        let subs = s.sub_multisets_with_total(2);
        assert_eq!(subs, vec![StepSequence::from_counts(&[0, 1]), StepSequence::units(2)]);
        assert_eq!(s.sub_multisets_with_total(0), vec![StepSequence::empty()]);
        assert!(s.sub_multisets_with_total(5).is_empty());
    }
}
