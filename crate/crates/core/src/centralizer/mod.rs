//! Centralizers `Z(μ) ≅ ∏_c Z_c ≀ S_{m_c}` of permutations of cycle type
//! `μ`: classes, characters, class fusion and induction.

mod wreath;

pub use wreath::{
    decompose_wreath_induction, max_wreath_size, multipartitions, set_max_wreath_size, wreath_character_table,
    wreath_classes, wreath_order, MultiPartition, WreathClassLabel, WreathTable,
};

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::arith::Cyclotomic;
use crate::combinatorics::{CycleType, IntPartition};
use crate::error::{Error, Result};

/// The factors `(c, m_c)` of `Z(μ)`, one per distinct cycle length, sorted by `c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerDescriptor {
    factors: Vec<(u32, u32)>,
}

impl CentralizerDescriptor {
    pub fn new(mut factors: Vec<(u32, u32)>) -> Result<Self> {
        factors.sort();
        if factors.iter().any(|&(c, m)| c == 0 || m == 0) || factors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput(format!("bad centralizer factors {factors:?}")));
        }
        Ok(CentralizerDescriptor { factors })
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    /// `Σ c·m_c`.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(c, m)| c * m).sum()
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&(c, m)| wreath_order(c, m)).product()
    }

    pub fn multiplicity(&self, c: u32) -> u32 {
        self.factors.iter().find(|f| f.0 == c).map_or(0, |f| f.1)
    }

    /// The cycle type whose centralizer this is.
    pub fn cycle_type(&self) -> CycleType {
        IntPartition::from_unsorted(
            self.factors
                .iter()
                .flat_map(|&(c, m)| std::iter::repeat(c).take(m as usize))
                .collect(),
        )
    }

    /// Descriptor of `Z(μ ⊔ ν)`.
    pub fn fuse(&self, other: &Self) -> Self {
        let mut m: BTreeMap<u32, u32> = BTreeMap::new();
        for &(c, k) in self.factors.iter().chain(&other.factors) {
            *m.entry(c).or_insert(0) += k;
        }
        CentralizerDescriptor {
            factors: m.into_iter().collect(),
        }
    }
}

/// `Z(μ)` as a product of wreath factors, one per distinct part of `μ`.
pub fn centralizer_structure(mu: &CycleType) -> CentralizerDescriptor {
    let factors = mu.multiplicities();
    CentralizerDescriptor { factors }
}

/// Factorwise data `(c, x_c)` matching a descriptor.
fn check_factors(desc: &CentralizerDescriptor, labels: &[(u32, MultiPartition)]) -> Result<()> {
    let ok = labels.len() == desc.factors.len()
        && labels
            .iter()
            .zip(&desc.factors)
            .all(|((c, l), &(dc, dm))| *c == dc && l.c() == dc && l.size() == dm);
    if ok {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!(
            "labels do not match centralizer factors {:?}",
            desc.factors
        )))
    }
}

fn factors_json(factors: &[(u32, MultiPartition)]) -> Value {
    let fs: Vec<Value> = factors
        .iter()
        .map(|(c, l)| json!({"c": c, "multipartition": l}))
        .collect();
    json!({ "factors": fs })
}

fn factors_from_json(v: &Value) -> Result<Vec<(u32, MultiPartition)>> {
    let bad = |m: &str| Error::InvalidInput(format!("centralizer label json: {m}"));
    let fs = v.get("factors").and_then(Value::as_array).ok_or_else(|| bad("missing factors"))?;
    let mut out = Vec::new();
    for f in fs {
        let c = f.get("c").and_then(Value::as_u64).ok_or_else(|| bad("missing c"))? as u32;
        let l: MultiPartition = serde_json::from_value(f.get("multipartition").cloned().ok_or_else(|| bad("missing multipartition"))?)
            .map_err(|e| bad(&e.to_string()))?;
        if l.c() != c {
            return Err(bad(&format!("multipartition for c={c} has {} components", l.c())));
        }
        out.push((c, l));
    }
    out.sort();
    Ok(out)
}

fn factors_display(f: &mut fmt::Formatter<'_>, factors: &[(u32, MultiPartition)]) -> fmt::Result {
    if factors.is_empty() {
        return write!(f, "1");
    }
    let parts: Vec<String> = factors.iter().map(|(c, l)| format!("Z{c}:{l}")).collect();
    write!(f, "{}", parts.join(" ⊠ "))
}

/// An irreducible of `Z(μ)`: one multipartition per wreath factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerIrrep {
    factors: Vec<(u32, MultiPartition)>,
}

impl CentralizerIrrep {
    pub fn new(desc: &CentralizerDescriptor, mut factors: Vec<(u32, MultiPartition)>) -> Result<Self> {
        factors.sort();
        check_factors(desc, &factors)?;
        Ok(CentralizerIrrep { factors })
    }

    /// The irreducible of the trivial group `Z(∅)`.
    pub fn unit() -> Self {
        CentralizerIrrep { factors: Vec::new() }
    }

    /// `ρ^{(0)} = (m_c)` in every factor.
    pub fn trivial(desc: &CentralizerDescriptor) -> Self {
        CentralizerIrrep {
            factors: desc
                .factors
                .iter()
                .map(|&(c, m)| (c, MultiPartition::single(c, 0, IntPartition::from_unsorted(vec![m]))))
                .collect(),
        }
    }

    /// Restriction of the sign of `S_n`: in a factor with even `c` the base
    /// generators are odd and block swaps even, giving `ρ^{(c/2)} = (m)`; with
    /// odd `c` it is the other way round, giving `ρ^{(0)} = (1^m)`.
    pub fn sign(desc: &CentralizerDescriptor) -> Self {
        CentralizerIrrep {
            factors: desc
                .factors
                .iter()
                .map(|&(c, m)| {
                    let l = if c % 2 == 0 {
                        MultiPartition::single(c, c / 2, IntPartition::from_unsorted(vec![m]))
                    } else {
                        MultiPartition::single(c, 0, IntPartition::from_unsorted(vec![1; m as usize]))
                    };
                    (c, l)
                })
                .collect(),
        }
    }

    pub fn factors(&self) -> &[(u32, MultiPartition)] {
        &self.factors
    }

    pub fn descriptor(&self) -> CentralizerDescriptor {
        CentralizerDescriptor {
            factors: self.factors.iter().map(|(c, l)| (*c, l.size())).collect(),
        }
    }

    /// The multipartition of factor `c`, if present.
    pub fn factor(&self, c: u32) -> Option<&MultiPartition> {
        self.factors.iter().find(|f| f.0 == c).map(|f| &f.1)
    }

    /// The label with factor `c` removed.
    pub fn without_factor(&self, c: u32) -> Self {
        CentralizerIrrep {
            factors: self.factors.iter().filter(|f| f.0 != c).cloned().collect(),
        }
    }

    /// The label with factor `(c, l)` added; replaces an existing factor `c`.
    pub fn with_factor(&self, c: u32, l: MultiPartition) -> Self {
        let mut factors = self.without_factor(c).factors;
        if l.size() > 0 {
            factors.push((c, l));
            factors.sort();
        }
        CentralizerIrrep { factors }
    }

    pub fn dim(&self) -> Result<u64> {
        let mut d = 1;
        for (c, l) in &self.factors {
            let t = wreath_character_table(*c, l.size())?;
            d *= t.dim(t.irrep_index(l).expect("valid label"));
        }
        Ok(d)
    }

    pub fn to_json(&self) -> Value {
        factors_json(&self.factors)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let factors = factors_from_json(v)?;
        let desc = CentralizerDescriptor::new(factors.iter().map(|(c, l)| (*c, l.size())).collect())?;
        Self::new(&desc, factors)
    }
}

impl fmt::Display for CentralizerIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        factors_display(f, &self.factors)
    }
}

/// A conjugacy class of `Z(μ)`: one wreath class label per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerClass {
    factors: Vec<(u32, WreathClassLabel)>,
}

impl CentralizerClass {
    pub fn new(desc: &CentralizerDescriptor, mut factors: Vec<(u32, WreathClassLabel)>) -> Result<Self> {
        factors.sort();
        check_factors(desc, &factors)?;
        Ok(CentralizerClass { factors })
    }

    pub fn factors(&self) -> &[(u32, WreathClassLabel)] {
        &self.factors
    }

    /// Order of the centralizer of an element of this class inside `Z(μ)`.
    pub fn centralizer_order(&self) -> u128 {
        self.factors.iter().map(|(_, l)| l.centralizer_order()).product()
    }

    pub fn to_json(&self) -> Value {
        factors_json(&self.factors)
    }
}

impl fmt::Display for CentralizerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        factors_display(f, &self.factors)
    }
}

fn product_labels(
    desc: &CentralizerDescriptor,
    per_factor: impl Fn(u32, u32) -> Vec<MultiPartition>,
) -> Vec<Vec<(u32, MultiPartition)>> {
    let mut out: Vec<Vec<(u32, MultiPartition)>> = vec![Vec::new()];
    for &(c, m) in &desc.factors {
        let choices = per_factor(c, m);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |l| {
                    let mut v = prefix.clone();
                    v.push((c, l.clone()));
                    v
                })
            })
            .collect();
    }
    out
}

/// All irreducibles of `Z(desc)` in the product of the per-factor orders.
pub fn centralizer_irreps(desc: &CentralizerDescriptor) -> Vec<CentralizerIrrep> {
    product_labels(desc, multipartitions)
        .into_iter()
        .map(|factors| CentralizerIrrep { factors })
        .collect()
}

/// All conjugacy classes of `Z(desc)` with their sizes.
pub fn centralizer_classes(desc: &CentralizerDescriptor) -> Result<Vec<(CentralizerClass, u128)>> {
    for &(c, m) in &desc.factors {
        wreath_classes(c, m)?;
    }
    let order = desc.order();
    Ok(product_labels(desc, multipartitions)
        .into_iter()
        .map(|factors| {
            let cls = CentralizerClass { factors };
            let size = order / cls.centralizer_order();
            (cls, size)
        })
        .collect())
}

/// `χ_Λ(C)`: the product of the factor characters.
pub fn centralizer_character(irrep: &CentralizerIrrep, class: &CentralizerClass) -> Result<Cyclotomic> {
    if irrep.descriptor() != class_descriptor(class) {
        return Err(Error::ShapeMismatch(format!("{irrep} evaluated on {class}")));
    }
    let mut v = Cyclotomic::one();
    for ((c, l), (_, k)) in irrep.factors.iter().zip(&class.factors) {
        let t = wreath_character_table(*c, l.size())?;
        let i = t.irrep_index(l).expect("valid label");
        let j = t.class_index(k).expect("valid label");
        v = &v * t.value(i, j);
    }
    Ok(v)
}

fn class_descriptor(class: &CentralizerClass) -> CentralizerDescriptor {
    CentralizerDescriptor {
        factors: class.factors.iter().map(|(c, l)| (*c, l.size())).collect(),
    }
}

/// The class of `(x, y) ∈ Z(μ) × Z(ν)` in `Z(μ ⊔ ν)`: wreath labels of the
/// same cycle length are concatenated componentwise, others pass through.
pub fn fuse_class_pair(a: &CentralizerClass, b: &CentralizerClass) -> CentralizerClass {
    let mut m: BTreeMap<u32, MultiPartition> = BTreeMap::new();
    for (c, l) in a.factors.iter().chain(&b.factors) {
        let merged = match m.remove(c) {
            Some(prev) => prev.concat(l),
            None => l.clone(),
        };
        m.insert(*c, merged);
    }
    CentralizerClass {
        factors: m.into_iter().collect(),
    }
}

/// The full class map of `Z(μ) × Z(ν) → Z(μ ⊔ ν)`.
pub fn fuse_classes(
    desc_a: &CentralizerDescriptor,
    desc_b: &CentralizerDescriptor,
) -> Result<Vec<((CentralizerClass, CentralizerClass), CentralizerClass)>> {
    let ca = centralizer_classes(desc_a)?;
    let cb = centralizer_classes(desc_b)?;
    let mut out = Vec::with_capacity(ca.len() * cb.len());
    for (x, _) in &ca {
        for (y, _) in &cb {
            out.push(((x.clone(), y.clone()), fuse_class_pair(x, y)));
        }
    }
    Ok(out)
}

/// Decomposes `Ind_{Z(μ)×Z(ν)}^{Z(μ⊔ν)}(Λ_a ⊠ Λ_b)`.
///
/// The induction splits over cycle lengths: a factor present on both sides
/// is decomposed by Frobenius reciprocity in `Z_c ≀ S_{a+b}`, a factor present
/// on one side passes through unchanged.
pub fn decompose_induction(a: &CentralizerIrrep, b: &CentralizerIrrep) -> Result<Vec<(CentralizerIrrep, u64)>> {
    let mut cs: Vec<u32> = a.factors.iter().chain(&b.factors).map(|f| f.0).collect();
    cs.sort();
    cs.dedup();
    let mut acc: Vec<(Vec<(u32, MultiPartition)>, u64)> = vec![(Vec::new(), 1)];
    for c in cs {
        let terms = match (a.factor(c), b.factor(c)) {
            (Some(x), Some(y)) => decompose_wreath_induction(x, y)?,
            (Some(x), None) | (None, Some(x)) => vec![(x.clone(), 1)],
            (None, None) => unreachable!(),
        };
        acc = acc
            .into_iter()
            .flat_map(|(prefix, m)| {
                terms.iter().map(move |(l, k)| {
                    let mut v = prefix.clone();
                    v.push((c, l.clone()));
                    (v, m * k)
                })
            })
            .collect();
    }
    let mut out: Vec<(CentralizerIrrep, u64)> =
        acc.into_iter().map(|(factors, m)| (CentralizerIrrep { factors }, m)).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition::new(parts.iter().map(|x| p(x)).collect()).unwrap()
    }

    #[test]
    fn structure_examples() {
        let d = centralizer_structure(&p(&[2, 2]));
        assert_eq!(d.factors(), &[(2, 2)]);
        assert_eq!(d.order(), 8);
        assert_eq!(centralizer_structure(&p(&[1, 1, 1])).factors(), &[(1, 3)]);
        let d = centralizer_structure(&p(&[3, 2, 2, 1]));
        assert_eq!(d.factors(), &[(1, 1), (2, 2), (3, 1)]);
        assert_eq!(d.order(), 24);
        assert_eq!(d.cycle_type(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn named_labels_for_z2_wreath_s2() {
        let d = centralizer_structure(&p(&[2, 2]));
        assert_eq!(CentralizerIrrep::trivial(&d).factor(2), Some(&mp(&[&[2], &[]])));
        assert_eq!(CentralizerIrrep::sign(&d).factor(2), Some(&mp(&[&[], &[2]])));
        let d3 = centralizer_structure(&p(&[3]));
        assert_eq!(CentralizerIrrep::sign(&d3), CentralizerIrrep::trivial(&d3));
    }

    #[test]
    fn sign_label_matches_sign_character() {
        // The sign of S_n restricted to Z(μ) has value sgn(σ) on class C, and
        // sgn is determined by the fused cycle type.
        for mu in [p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1]), p(&[4]), p(&[3, 3]), p(&[2, 2, 2])] {
            let d = centralizer_structure(&mu);
            let sign = CentralizerIrrep::sign(&d);
            for (cls, _) in centralizer_classes(&d).unwrap() {
                let mut cycles = Vec::new();
                for (c, l) in cls.factors() {
                    // A k-cycle of blocks with cycle product i splits into
                    // c/o cycles of length k·o, o the order of i in Z_c.
                    for (i, part) in l.components().iter().enumerate() {
                        let o = c / num_integer::gcd(i as u32, *c);
                        for &k in part.parts() {
                            cycles.extend(std::iter::repeat(k * o).take((c / o) as usize));
                        }
                    }
                }
                let even = cycles.iter().filter(|&&x| x % 2 == 0).count();
                let expected = if even % 2 == 0 { 1 } else { -1 };
                assert_eq!(centralizer_character(&sign, &cls).unwrap(), Cyclotomic::from_i64(expected), "{mu} {cls}");
            }
        }
    }

    #[test]
    fn fusion_examples() {
        let d = centralizer_structure(&p(&[2]));
        let x = CentralizerClass::new(&d, vec![(2, mp(&[&[1], &[]]))]).unwrap();
        let fused = fuse_class_pair(&x, &x);
        assert_eq!(fused.factors(), &[(2, mp(&[&[1, 1], &[]]))]);
        let unit = CentralizerClass::new(&CentralizerDescriptor::new(vec![]).unwrap(), vec![]).unwrap();
        assert_eq!(fuse_class_pair(&x, &unit), x);
        assert_eq!(fuse_classes(&d, &d).unwrap().len(), 4);
    }

    #[test]
    fn worked_example_decompositions() {
        let d2 = centralizer_structure(&p(&[2]));
        let (triv, sign) = (CentralizerIrrep::trivial(&d2), CentralizerIrrep::sign(&d2));
        let labels = |v: Vec<(CentralizerIrrep, u64)>| -> Vec<(MultiPartition, u64)> {
            v.into_iter().map(|(i, m)| (i.factor(2).unwrap().clone(), m)).collect()
        };
        let tt = labels(decompose_induction(&triv, &triv).unwrap());
        assert_eq!(tt, vec![(mp(&[&[1, 1], &[]]), 1), (mp(&[&[2], &[]]), 1)]);
        let ts = labels(decompose_induction(&triv, &sign).unwrap());
        assert_eq!(ts, vec![(mp(&[&[1], &[1]]), 1)]);
        assert_eq!(decompose_induction(&sign, &triv).unwrap(), decompose_induction(&triv, &sign).unwrap());
    }

    #[test]
    fn dimension_bookkeeping() {
        for (mu, nu) in [(p(&[2]), p(&[2, 1])), (p(&[1, 1]), p(&[1])), (p(&[3]), p(&[2, 1])), (p(&[2, 2]), p(&[2]))] {
            let (da, db) = (centralizer_structure(&mu), centralizer_structure(&nu));
            let index = da.fuse(&db).order() / (da.order() * db.order());
            for a in centralizer_irreps(&da) {
                for b in centralizer_irreps(&db) {
                    let total: u64 = decompose_induction(&a, &b).unwrap().iter().map(|(w, m)| m * w.dim().unwrap()).sum();
                    assert_eq!(total as u128, index * (a.dim().unwrap() * b.dim().unwrap()) as u128);
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = centralizer_structure(&p(&[2, 2, 1]));
        let s = CentralizerIrrep::sign(&d);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"factors":[{"c":1,"multipartition":[[1]]},{"c":2,"multipartition":[[],[2]]}]}"#
        );
        assert_eq!(CentralizerIrrep::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn class_sizes_sum_to_order() {
        let d = centralizer_structure(&p(&[3, 2, 2, 1]));
        let total: u128 = centralizer_classes(&d).unwrap().iter().map(|(_, s)| s).sum();
        assert_eq!(total, d.order());
        let irr = centralizer_irreps(&d);
        let sq: u64 = irr.iter().map(|i| i.dim().unwrap().pow(2)).sum();
        assert_eq!(sq as u128, d.order());
    }
}
