//! Explicit irreducibles of `Z_c ≀ S_m` and of centralizers `Z(μ)`, realized
//! inside symmetric groups.
//!
//! `Z_c ≀ S_m` is the centralizer of `(c^m)` with cycle `k` on the points
//! `kc..kc+c`. An element `g` is decoded as `(a; π)` with
//! `g(kc + r) = π(k)c + (a_k + r mod c)`.

use std::sync::Arc;

use crate::arith::{Cyclotomic, Matrix};
use crate::centralizer::{centralizer_structure, CentralizerClass, CentralizerIrrep, MultiPartition};
use crate::combinatorics::{CycleType, IntPartition};
use crate::error::{Error, Result};
use crate::perm::Perm;

use super::specht::SpechtRep;
use super::{brute_induce, realize_centralizer, ExplicitGroup, ExplicitModule};

/// `Z_c ≀ S_m` as the centralizer of the canonical element of type `(c^m)`.
pub fn wreath_group(c: u32, m: u32) -> Result<Arc<ExplicitGroup>> {
    realize_centralizer(&IntPartition::from_unsorted(vec![c; m as usize]))
}

/// `(π, a)` for the wreath factor with `m` cycles of length `c` starting at
/// point `offset`.
fn decode(g: &Perm, offset: usize, c: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    (0..m)
        .map(|k| {
            let x = g.apply(offset + k * c) - offset;
            (x / c, x % c)
        })
        .unzip()
}

/// The class label of `g ∈ Z(μ)`: for each wreath factor, the cycles of `π`
/// grouped by the sum of `a` along them.
pub fn classify_element(mu: &CycleType, g: &Perm) -> Result<CentralizerClass> {
    let desc = centralizer_structure(mu);
    let mut offset = 0;
    let mut factors = Vec::new();
    for &(c, m) in desc.factors() {
        let (cu, mu_) = (c as usize, m as usize);
        let (pi, a) = decode(g, offset, cu, mu_);
        let mut components: Vec<Vec<u32>> = vec![Vec::new(); cu];
        let mut seen = vec![false; mu_];
        for start in 0..mu_ {
            if seen[start] {
                continue;
            }
            let (mut k, mut len, mut sum) = (start, 0, 0);
            while !seen[k] {
                seen[k] = true;
                len += 1;
                sum += a[k];
                k = pi[k];
            }
            components[sum % cu].push(len);
        }
        let label = MultiPartition::new(components.into_iter().map(IntPartition::from_unsorted).collect())?;
        factors.push((c, label));
        offset += cu * mu_;
    }
    CentralizerClass::new(&desc, factors)
}

/// The irreducible of `Z_c ≀ S_m` labeled by `(ρ^{(0)}, …, ρ^{(c-1)})`:
/// induced from `∏_j Z_c ≀ S_{m_j}` (cycles grouped into consecutive blocks)
/// of `⊠_j (ζ_c^{j Σ a} · S^{ρ^{(j)}})`.
pub fn wreath_irrep_module(label: &MultiPartition) -> Result<ExplicitModule> {
    let c = label.c() as usize;
    let m = label.size() as usize;
    let group = wreath_group(c as u32, m as u32)?;
    let mut block_of = Vec::with_capacity(m);
    let mut blocks = Vec::new();
    for (j, rho) in label.components().iter().enumerate() {
        if rho.size() == 0 {
            continue;
        }
        let start = block_of.len();
        block_of.extend(std::iter::repeat(blocks.len()).take(rho.size() as usize));
        blocks.push((j, start, rho.size() as usize, SpechtRep::new(rho)));
    }
    let young = Arc::new(group.filter(|g| {
        let (pi, _) = decode(g, 0, c, m);
        pi.iter().enumerate().all(|(k, &t)| block_of[k] == block_of[t])
    })?);
    let module = ExplicitModule::from_fn(young.clone(), |g| {
        let (pi, a) = decode(g, 0, c, m);
        blocks.iter().fold(Matrix::identity(1), |acc, (j, start, size, rep)| {
            let local = Perm::from_images((0..*size).map(|t| pi[start + t] - start).collect()).expect("block permutation");
            let twist: usize = a[*start..start + size].iter().sum();
            let scalar = Cyclotomic::root_of_unity(c as u32, (j * twist) as i64);
            let block = rep.matrix(&local).map(|x| Cyclotomic::from_rational(x.clone()) * scalar.clone());
            acc.kron(&block)
        })
    })?;
    brute_induce(&young, &group, &module)
}

/// The irreducible of `Z(μ)` labeled by `irrep`: the outer tensor product of
/// the factor modules, in order of increasing cycle length.
pub fn centralizer_irrep_module(mu: &CycleType, irrep: &CentralizerIrrep) -> Result<ExplicitModule> {
    let desc = centralizer_structure(mu);
    if irrep.descriptor() != desc {
        return Err(Error::ShapeMismatch(format!("{irrep} is not an irreducible of Z({mu})")));
    }
    let mut module = ExplicitModule::trivial(Arc::new(ExplicitGroup::trivial(0)));
    for (_, label) in irrep.factors() {
        module = module.outer_tensor(&wreath_irrep_module(label)?);
    }
    let target = realize_centralizer(mu)?;
    module.on_group(target)
}
