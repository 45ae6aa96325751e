use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Set partition of `k` upper and `l` lower points.
///
/// Points are numbered internally `0..k` (upper) then `k..k+l` (lower). The
/// partition is stored as a restricted growth string: `labels[p]` is the
/// index of the block containing `p`, with blocks numbered in order of their
/// minimal point. This makes equality and hashing structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    k: usize,
    l: usize,
    labels: Vec<u8>,
}

/// Canonicalizes arbitrary block labels into a restricted growth string.
fn canonical_labels<T: Copy + Eq>(raw: &[T]) -> Vec<u8> {
    let mut seen: Vec<T> = Vec::new();
    raw.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i as u8,
            None => {
                seen.push(*x);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

/// All restricted growth strings of length `n`, i.e. all set partitions of `n` points.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, cur: &mut Vec<u8>, max: u8, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for v in 0..=limit {
            cur.push(v);
            rec(n, cur, max.max(v), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// Minimal union-find over a fixed point count.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl SetPartition {
    /// Builds a partition from arbitrary per-point block labels.
    pub fn from_labels<T: Copy + Eq>(k: usize, l: usize, raw: &[T]) -> Result<Self> {
        if raw.len() != k + l {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {k}+{l} points",
                raw.len()
            )));
        }
        if k + l > u8::MAX as usize {
            return Err(Error::CapExceeded {
                what: "points",
                value: (k + l) as u64,
                cap: u8::MAX as u64,
            });
        }
        Ok(SetPartition {
            k,
            l,
            labels: canonical_labels(raw),
        })
    }

    /// Builds a partition from blocks of internal point indices.
    pub fn from_blocks(k: usize, l: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; k + l];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &p in block {
                if p >= k + l || raw[p] != usize::MAX {
                    return Err(Error::InvalidInput(format!("point {p} out of range or repeated")));
                }
                raw[p] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::InvalidInput("blocks do not cover every point".into()));
        }
        Self::from_labels(k, l, &raw)
    }

    /// Builds a partition from blocks written with upper points `1..=k` and
    /// lower points `-1..=-l`.
    pub fn from_signed_blocks(k: usize, l: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        let internal = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&p| match p {
                        p if p >= 1 && p as usize <= k => Ok(p as usize - 1),
                        p if p <= -1 && (-p) as usize <= l => Ok(k + (-p) as usize - 1),
                        _ => Err(Error::InvalidInput(format!("point {p} outside {k}->{l}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(k, l, &internal)
    }

    /// The identity diagram `{{i, i'}}`.
    pub fn identity(k: usize) -> Self {
        let raw: Vec<usize> = (0..k).chain(0..k).collect();
        Self::from_labels(k, k, &raw).unwrap()
    }

    /// Pair partition `{{i, g(i)'}}` of a permutation given by its images.
    pub fn from_permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut raw = vec![0usize; 2 * n];
        for (i, &g) in images.iter().enumerate() {
            raw[i] = i;
            raw[n + g] = i;
        }
        Self::from_labels(n, n, &raw).unwrap()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn points(&self) -> usize {
        self.k + self.l
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Blocks of internal indices, sorted by minimal element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (p, &b) in self.labels.iter().enumerate() {
            blocks[b as usize].push(p);
        }
        blocks
    }

    /// Blocks in the signed encoding (upper `1..=k`, lower `-1..=-l`).
    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks()
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|p| {
                        if p < self.k {
                            p as i64 + 1
                        } else {
                            -((p - self.k) as i64 + 1)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Vertical composition: `self` on top, `below` underneath. Returns the
    /// resulting diagram and the number of closed components removed.
    pub fn compose(&self, below: &SetPartition) -> Result<(SetPartition, usize)> {
        if self.l != below.k {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {}->{} over {}->{}",
                self.k, self.l, below.k, below.l
            )));
        }
        let (k, mid, m) = (self.k, self.l, below.l);
        // nodes: upper 0..k, middle k..k+mid, lower k+mid..k+mid+m
        let total = k + mid + m;
        let mut uf = UnionFind::new(total);
        let mut first = vec![usize::MAX; self.num_blocks()];
        for (p, &b) in self.labels.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = p;
            } else {
                uf.union(first[b], p);
            }
        }
        let mut first = vec![usize::MAX; below.num_blocks()];
        for (p, &b) in below.labels.iter().enumerate() {
            let node = k + p;
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = node;
            } else {
                uf.union(first[b], node);
            }
        }
        let mut outer_root = vec![false; total];
        let mut raw = Vec::with_capacity(k + m);
        for p in (0..k).chain(k + mid..total) {
            let r = uf.find(p);
            outer_root[r] = true;
            raw.push(r);
        }
        let mut closed = vec![false; total];
        let mut loops = 0;
        for p in k..k + mid {
            let r = uf.find(p);
            if !outer_root[r] && !closed[r] {
                closed[r] = true;
                loops += 1;
            }
        }
        Ok((SetPartition::from_labels(k, m, &raw)?, loops))
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &SetPartition) -> SetPartition {
        let offset = self.num_blocks();
        let (k1, l1, k2) = (self.k, self.l, right.k);
        let mut raw = Vec::with_capacity(self.points() + right.points());
        raw.extend(self.labels[..k1].iter().map(|&x| x as usize));
        raw.extend(right.labels[..k2].iter().map(|&x| x as usize + offset));
        raw.extend(self.labels[k1..].iter().map(|&x| x as usize));
        raw.extend(right.labels[k2..].iter().map(|&x| x as usize + offset));
        SetPartition::from_labels(k1 + k2, l1 + right.l, &raw).unwrap()
    }

    /// The partition obtained by merging blocks according to `grouping`,
    /// a label per block of `self`.
    pub fn merge_blocks(&self, grouping: &[u8]) -> SetPartition {
        let raw: Vec<u8> = self.labels.iter().map(|&b| grouping[b as usize]).collect();
        SetPartition::from_labels(self.k, self.l, &raw).unwrap()
    }

    /// Every partition obtained by merging at least two blocks, each once.
    ///
    /// Ordered by the restricted growth string of the block grouping.
    pub fn strict_coarsenings(&self) -> Vec<SetPartition> {
        let b = self.num_blocks();
        restricted_growth_strings(b)
            .into_iter()
            .filter(|g| g.iter().map(|&x| x as usize + 1).max().unwrap_or(0) < b)
            .map(|g| self.merge_blocks(&g))
            .collect()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.k != other.k || self.l != other.l {
            return false;
        }
        let mut image = vec![u8::MAX; self.num_blocks()];
        for (p, &b) in self.labels.iter().enumerate() {
            let o = other.labels[p];
            let slot = &mut image[b as usize];
            if *slot == u8::MAX {
                *slot = o;
            } else if *slot != o {
                return false;
            }
        }
        true
    }

    /// Whether every block is a pair `{i, j'}`, i.e. the diagram of a permutation.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.k != self.l {
            return None;
        }
        let mut images = vec![usize::MAX; self.k];
        for block in self.blocks() {
            match block.as_slice() {
                [i, j] if *i < self.k && *j >= self.k => images[*i] = j - self.k,
                _ => return None,
            }
        }
        Some(images)
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .signed_blocks()
            .into_iter()
            .map(|b| {
                let pts: Vec<String> = b
                    .into_iter()
                    .map(|p| if p > 0 { p.to_string() } else { format!("{}'", -p) })
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "[{}->{}]{{{}}}", self.k, self.l, blocks.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct SetPartitionJson {
    k: usize,
    l: usize,
    blocks: Vec<Vec<i64>>,
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SetPartitionJson {
            k: self.k,
            l: self.l,
            blocks: self.signed_blocks(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SetPartitionJson::deserialize(d)?;
        SetPartition::from_signed_blocks(raw.k, raw.l, &raw.blocks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(k: usize, l: usize, blocks: &[&[i64]]) -> SetPartition {
        SetPartition::from_signed_blocks(k, l, &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = sp(2, 1, &[&[2, -1], &[1]]);
        let b = sp(2, 1, &[&[1], &[-1, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.signed_blocks(), vec![vec![1], vec![2, -1]]);
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(restricted_growth_strings(n).len(), b);
        }
    }

    #[test]
    fn coarsening_examples() {
        assert!(sp(1, 1, &[&[1, -1]]).strict_coarsenings().is_empty());
        assert_eq!(sp(1, 1, &[&[1], &[-1]]).strict_coarsenings(), vec![sp(1, 1, &[&[1, -1]])]);
        assert_eq!(sp(3, 0, &[&[1], &[2], &[3]]).strict_coarsenings().len(), 4);
    }

    #[test]
    fn cup_cap_closes_a_loop() {
        let unit = sp(0, 1, &[&[-1]]);
        let counit = sp(1, 0, &[&[1]]);
        let (d, loops) = unit.compose(&counit).unwrap();
        assert_eq!(d, SetPartition::from_labels::<u8>(0, 0, &[]).unwrap());
        assert_eq!(loops, 1);
    }

    #[test]
    fn permutation_diagrams_compose_like_permutations() {
        // h = (0 1 2), g = (0 1); stacking h above g gives g∘h.
        let h = [1, 2, 0];
        let g = [1, 0, 2];
        let gh: Vec<usize> = (0..3).map(|i| g[h[i]]).collect();
        let (d, loops) = SetPartition::from_permutation(&h)
            .compose(&SetPartition::from_permutation(&g))
            .unwrap();
        assert_eq!(loops, 0);
        assert_eq!(d, SetPartition::from_permutation(&gh));
        assert_eq!(d.as_permutation(), Some(gh));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = SetPartition::identity(2);
        let b = SetPartition::identity(3);
        assert!(matches!(a.compose(&b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn json_round_trip() {
        let a = sp(2, 2, &[&[1, -2], &[2], &[-1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"k":2,"l":2,"blocks":[[1,-2],[2],[-1]]}"#);
        let b: SetPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
