use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct IntPartition(Vec<u32>);

/// A conjugacy class of `S_n`, i.e. a partition of `n` read as a cycle type.
pub type CycleType = IntPartition;

impl IntPartition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotYoungDiagram(format!("{parts:?}")));
        }
        Ok(IntPartition(parts))
    }

    /// Sorts the given positive parts; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn empty() -> Self {
        IntPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        IntPartition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
                .collect(),
        )
    }

    /// `(part length, multiplicity)` sorted by increasing part length.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn count(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }

    /// Concatenation of parts, re-sorted (`μ ⊔ ν`).
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// The partition with every part equal to 1 removed.
    pub fn without_ones(&self) -> Self {
        IntPartition(self.0.iter().copied().filter(|&p| p != 1).collect())
    }

    pub fn is_singleton_free(&self) -> bool {
        !self.0.contains(&1)
    }

    /// Whether the Young diagram of `other` fits inside that of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Hook lengths dimension formula `n! / ∏ hooks`.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.part(j) as usize - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(self.size()) / hooks
    }

    /// `z_μ = ∏_c c^{m_c} m_c!`, the order of the centralizer of an element of cycle type `μ`.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(c, m)| (c as u128).pow(m) * factorial(m))
            .product()
    }

    /// Drops the first row: the inverse of [`pad_partition`].
    pub fn tail(&self) -> Self {
        IntPartition(self.0.iter().skip(1).copied().collect())
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<'de> Deserialize<'de> for IntPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        IntPartition::new(parts).map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<IntPartition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if rest == 0 {
            out.push(IntPartition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_μ`; class size of `μ` in `S_n` is `n!/z_μ`.
pub fn centralizer_order(mu: &CycleType) -> u128 {
    mu.centralizer_order()
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip, `μ = λ` included.
///
/// Ordered by the tuple `(μ_ℓ, …, μ_1)` decreasing, so `λ` itself comes first.
pub fn horizontal_strip_removals(lambda: &IntPartition) -> Vec<IntPartition> {
    let l = lambda.len();
    let mut out: Vec<Vec<u32>> = Vec::new();
    fn rec(lambda: &IntPartition, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lambda.len() {
            out.push(cur.clone());
            return;
        }
        let lo = lambda.part(i + 1);
        for v in lo..=lambda.part(i) {
            cur[i] = v;
            rec(lambda, i + 1, cur, out);
        }
    }
    rec(lambda, 0, &mut vec![0; l], &mut out);
    out.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
    out.into_iter().map(IntPartition::from_unsorted).collect()
}

/// The padded partition `λ[n] = (n - |λ|, λ_1, λ_2, …)`.
pub fn pad_partition(lambda: &IntPartition, n: u32) -> Result<IntPartition> {
    let size = lambda.size();
    if n < size || n - size < lambda.part(0) {
        return Err(Error::NotYoungDiagram(format!("{lambda}[{n}]")));
    }
    let mut parts = vec![n - size];
    parts.extend_from_slice(lambda.parts());
    IntPartition::new(parts.into_iter().filter(|&p| p > 0).collect())
}
