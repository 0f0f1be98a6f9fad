//! Partitions, pairs of partitions, and the two orders used throughout the
//! crate: dominance on partitions and the interleaved prefix-sum order on
//! pairs.
//!
//! Parts are stored without trailing zeros. Indexing past the last part
//! yields zero, so `λ_i = 0` for large `i` as usual.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the sequence
    /// is not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from `(part, multiplicity)` pairs in any order.
    pub fn from_multiplicities<I>(mults: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut parts: Vec<u32> = mults
            .into_iter()
            .filter(|&(p, _)| p > 0)
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th part, counting from zero; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts (`λ*_1`).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Largest part, or zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// The conjugate partition: `λ*_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.largest();
        let parts = (1..=largest).map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// Number of parts equal to `j`. For `j = 0` this is zero, since parts
    /// are stored without trailing zeros.
    pub fn multiplicity(&self, j: u32) -> u32 {
        if j == 0 {
            return 0;
        }
        self.0.iter().filter(|&&p| p == j).count() as u32
    }

    /// Distinct nonzero part values, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }

    /// Prefix sums `λ_1 + … + λ_i` for `i = 1..=len`.
    pub fn prefix_sums(&self) -> Vec<u32> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Dominance order via prefix sums of the parts.
    pub fn dominance_le(&self, other: &Partition) -> Result<bool> {
        check_sizes(self.size(), other.size())?;
        let len = self.len().max(other.len());
        let mut a = 0;
        let mut b = 0;
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance order via the reversed comparison of conjugate prefix sums.
    /// Always agrees with [`Partition::dominance_le`].
    pub fn dominance_le_by_conjugates(&self, other: &Partition) -> Result<bool> {
        check_sizes(self.size(), other.size())?;
        let (lc, mc) = (self.conjugate(), other.conjugate());
        let len = lc.len().max(mc.len());
        let mut a = 0;
        let mut b = 0;
        for i in 0..len {
            a += lc.part(i);
            b += mc.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Exponent notation, e.g. `3^1 2^2 1^1`; the empty partition prints as `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in self.distinct_parts() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}^{}", p, self.multiplicity(p))?;
        }
        Ok(())
    }
}

fn check_sizes(left: u32, right: u32) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

/// An ordered pair of partitions `(α, β)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiPartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl BiPartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BiPartition { alpha, beta }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(alpha: Vec<u32>, beta: Vec<u32>) -> Result<Self> {
        Ok(BiPartition::new(Partition::new(alpha)?, Partition::new(beta)?))
    }

    pub fn total(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }

    /// `α_i` with one-based indexing, as a signed integer for the
    /// inequality systems. `alpha_at(0)` is not meaningful and returns 0.
    pub(crate) fn a(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.alpha.part(i - 1) as i64
    }

    /// `β_i` with one-based indexing.
    pub(crate) fn b(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.beta.part(i - 1) as i64
    }

    /// Index range `1..=len` that covers every nonzero entry plus one more.
    pub(crate) fn span(&self) -> usize {
        self.alpha.len().max(self.beta.len()) + 1
    }

    /// The sequences `A_i = Σ_{j≤i}(α_j+β_j)` and
    /// `B_i = Σ_{j<i}(α_j+β_j) + α_i`, for `i` from 1 up to one past the
    /// longest of `α`, `β`. Both are constant afterwards.
    pub fn ab_profile(&self) -> (Vec<u32>, Vec<u32>) {
        let len = self.span();
        let mut a = Vec::with_capacity(len);
        let mut b = Vec::with_capacity(len);
        let mut acc = 0;
        for i in 0..len {
            b.push(acc + self.alpha.part(i));
            acc += self.alpha.part(i) + self.beta.part(i);
            a.push(acc);
        }
        (a, b)
    }

    /// Pointwise comparison of both profiles.
    pub fn ab_le(&self, other: &BiPartition) -> Result<bool> {
        check_sizes(self.total(), other.total())?;
        let (a1, b1) = self.ab_profile();
        let (a2, b2) = other.ab_profile();
        let len = a1.len().max(a2.len());
        let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(*v.last().unwrap());
        Ok((0..len).all(|i| at(&a1, i) <= at(&a2, i) && at(&b1, i) <= at(&b2, i)))
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.alpha, self.beta)
    }
}

/// All partitions of `n` with every part at most `max`, in reverse
/// lexicographic order.
fn partitions_bounded(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for first in (1..=max.min(n)).rev() {
        prefix.push(first);
        partitions_bounded(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every pair `(α, β)` with `|α| + |β| = n`, ordered by `|α|` descending and
/// then by the partition order of `α` and of `β`.
pub fn enumerate_bipartitions(n: u32) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let betas = enumerate_partitions(n - k);
        for alpha in enumerate_partitions(k) {
            for beta in &betas {
                out.push(BiPartition::new(alpha.clone(), beta.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(&[2, 2]).multiplicity(2), 2);
        assert_eq!(p(&[3, 1]).multiplicity(2), 0);
        assert_eq!(p(&[4, 2, 2, 1]).multiplicity(2), 2);
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1]).dominance_le(&p(&[2])).unwrap());
        assert!(p(&[2, 2]).dominance_le(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_le(&p(&[2, 2])).unwrap());
        assert_eq!(p(&[3]).dominance_le(&p(&[2])), Err(Error::SizeMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn ab_profile_examples() {
        let bp = |a: &[u32], b: &[u32]| BiPartition::from_parts(a.to_vec(), b.to_vec()).unwrap();
        assert_eq!(bp(&[1], &[1]).ab_profile(), (vec![2, 2], vec![1, 2]));
        assert_eq!(bp(&[], &[]).ab_profile(), (vec![0], vec![0]));
        assert_eq!(bp(&[2], &[]).ab_profile(), (vec![2, 2], vec![2, 2]));
    }

    #[test]
    fn ab_le_examples() {
        let bp = |a: &[u32], b: &[u32]| BiPartition::from_parts(a.to_vec(), b.to_vec()).unwrap();
        assert!(bp(&[1], &[1]).ab_le(&bp(&[2], &[])).unwrap());
        assert!(bp(&[1], &[1]).ab_le(&bp(&[1], &[1])).unwrap());
        assert!(!bp(&[2], &[]).ab_le(&bp(&[1], &[1])).unwrap());
        assert!(bp(&[2], &[]).ab_le(&bp(&[1], &[])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![p(&[])]);
        assert_eq!(enumerate_partitions(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(4).len(), 5);

        assert_eq!(enumerate_bipartitions(0), vec![BiPartition::default()]);
        assert_eq!(
            enumerate_bipartitions(1),
            vec![BiPartition::new(p(&[1]), p(&[])), BiPartition::new(p(&[]), p(&[1]))]
        );
        assert_eq!(enumerate_bipartitions(2).len(), 5);
    }

    #[test]
    fn display_uses_exponents() {
        assert_eq!(p(&[2, 2, 1]).to_string(), "2^2 1^1");
        assert_eq!(p(&[]).to_string(), "-");
    }
}
