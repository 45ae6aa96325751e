//! Permutations of `{0, …, n-1}`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::combinatorics::IntPartition;
use crate::error::{Error, Result};

/// A permutation stored by its images: `p.apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidInput(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from disjoint 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(Error::InvalidInput(format!("point {p} exceeds degree {n}")));
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// The element of cycle type `mu` whose cycles are placed on consecutive
    /// points in order of increasing length.
    pub fn canonical_of_type(mu: &IntPartition) -> Self {
        let n = mu.size() as usize;
        let mut cycles = Vec::new();
        let mut next = 0;
        for &c in mu.parts().iter().rev() {
            cycles.push((next..next + c as usize).collect::<Vec<_>>());
            next += c as usize;
        }
        Self::from_cycles(n, &cycles).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    /// Cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.0[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.0[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> IntPartition {
        IntPartition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn sign(&self) -> i64 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self × other` acting on `0..n` and `n..n+m`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let n = self.degree();
        let mut images = self.0.clone();
        images.extend(other.0.iter().map(|&i| i + n));
        Perm(images)
    }

    /// All `n!` permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Reduced word in adjacent transpositions `s_i = (i, i+1)` with
    /// `self = s_{w[0]} ∘ s_{w[1]} ∘ …`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble sort the image list; each swap multiplies on the right.
        let mut images = self.0.clone();
        let mut word = Vec::new();
        let n = images.len();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if images[i] > images[i + 1] {
                    images.swap(i, i + 1);
                    word.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }
}

/// Generators of the centralizer of `sigma`: each cycle as a rotation, plus
/// aligned swaps of consecutive cycles of equal length.
pub fn centralizer_generators(sigma: &Perm) -> Vec<Perm> {
    let n = sigma.degree();
    let cycles = sigma.cycles();
    let mut gens = Vec::new();
    for c in cycles.iter().filter(|c| c.len() > 1) {
        gens.push(Perm::from_cycles(n, std::slice::from_ref(c)).unwrap());
    }
    let mut by_len: Vec<&Vec<usize>> = cycles.iter().collect();
    by_len.sort_by_key(|c| (c.len(), c[0]));
    for w in by_len.windows(2) {
        if w[0].len() == w[1].len() {
            let mut images: Vec<usize> = (0..n).collect();
            for (&a, &b) in w[0].iter().zip(w[1].iter()) {
                images[a] = b;
                images[b] = a;
            }
            gens.push(Perm(images));
        }
    }
    gens
}

/// All elements of the centralizer of `sigma`, generated from
/// [`centralizer_generators`].
pub fn centralizer_elements(sigma: &Perm, cap: usize) -> Result<Vec<Perm>> {
    generate_group(sigma.degree(), &centralizer_generators(sigma), cap)
}

/// Closure of `gens` under composition (breadth-first), identity included.
/// Fails once more than `cap` elements have been generated.
pub fn generate_group(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        value: out.len() as u64 + 1,
                        cap: cap as u64,
                    });
                }
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", cycles.concat())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_word_reconstructs() {
        for g in Perm::all(4) {
            let mut acc = Perm::identity(4);
            for &i in &g.adjacent_word() {
                let mut s: Vec<usize> = (0..4).collect();
                s.swap(i, i + 1);
                acc = acc.compose(&Perm(s));
            }
            assert_eq!(acc, g);
        }
    }

    #[test]
    fn canonical_element() {
        let mu = IntPartition::new(vec![2, 1, 1]).unwrap();
        let s = Perm::canonical_of_type(&mu);
        assert_eq!(s.images(), &[0, 1, 3, 2]);
        assert_eq!(s.cycle_type(), mu);
    }

    #[test]
    fn centralizer_orders_match_formula() {
        for n in 0..=6 {
            for mu in crate::combinatorics::partitions_of(n) {
                let s = Perm::canonical_of_type(&mu);
                let z = centralizer_elements(&s, 1000).unwrap();
                assert_eq!(z.len() as u128, mu.centralizer_order(), "{mu}");
                assert!(z.iter().all(|g| g.compose(&s) == s.compose(g)));
            }
        }
    }

    #[test]
    fn generated_group_order() {
        let a = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(generate_group(4, &[a, b], 100).unwrap().len(), 24);
    }
}
