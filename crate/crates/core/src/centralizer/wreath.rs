use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{rat, rational_to_i64, Cyclotomic, Rational};
use crate::cache;
use crate::combinatorics::{factorial, partitions_of, IntPartition};
use crate::error::{Error, Result};
use crate::sn::character_table;

static MAX_WREATH: AtomicU32 = AtomicU32::new(12);

/// Largest `c·m` for which wreath tables are built (default 12).
pub fn max_wreath_size() -> u32 {
    MAX_WREATH.load(Ordering::Relaxed)
}

pub fn set_max_wreath_size(cap: u32) {
    MAX_WREATH.store(cap, Ordering::Relaxed);
}

fn check_cap(c: u32, m: u32) -> Result<()> {
    let cap = max_wreath_size();
    if c == 0 {
        return Err(Error::InvalidInput("cycle length must be positive".into()));
    }
    if c * m > cap {
        return Err(Error::CapExceeded {
            what: "wreath product size c*m",
            value: (c * m) as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// A `c`-tuple of partitions.
///
/// As an irreducible of `Z_c ≀ S_m`, entry `j` is the `S`-label attached to
/// the character `ζ_c^j` of `Z_c`. As a conjugacy class, entry `j` collects
/// the lengths of the cycles whose cycle product is `j ∈ Z_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultiPartition(Vec<IntPartition>);

/// Conjugacy class of `Z_c ≀ S_m`; same shape as an irreducible label.
pub type WreathClassLabel = MultiPartition;

impl MultiPartition {
    pub fn new(parts: Vec<IntPartition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a multipartition needs at least one component".into()));
        }
        Ok(MultiPartition(parts))
    }

    /// `c` components, all empty except `parts` in position `j`.
    pub fn single(c: u32, j: u32, parts: IntPartition) -> Self {
        let mut v = vec![IntPartition::empty(); c as usize];
        v[j as usize] = parts;
        MultiPartition(v)
    }

    pub fn c(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(IntPartition::size).sum()
    }

    pub fn components(&self) -> &[IntPartition] {
        &self.0
    }

    pub fn component(&self, j: usize) -> &IntPartition {
        &self.0[j]
    }

    /// Componentwise union: the class of `(x, y)` under
    /// `Z_c ≀ S_a × Z_c ≀ S_b → Z_c ≀ S_{a+b}`.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.c(), other.c(), "different cycle lengths");
        MultiPartition(self.0.iter().zip(&other.0).map(|(a, b)| a.union(b)).collect())
    }

    /// Order of the centralizer of an element in this class of `Z_c ≀ S_m`:
    /// `∏_j z_{λ^{(j)}} c^{ℓ(λ^{(j)})}`.
    pub fn centralizer_order(&self) -> u128 {
        let c = self.c() as u128;
        self.0.iter().map(|l| l.centralizer_order() * c.pow(l.len() as u32)).product()
    }

    /// The identity class `((1^m), ∅, …)`.
    pub fn identity_class(c: u32, m: u32) -> Self {
        Self::single(c, 0, IntPartition::from_unsorted(vec![1; m as usize]))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<IntPartition>::deserialize(d)?;
        MultiPartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All `c`-tuples of partitions of total size `m`: component 0 takes the
/// largest sizes first, and partitions of a fixed size come in reverse
/// lexicographic order.
pub fn multipartitions(c: u32, m: u32) -> Vec<MultiPartition> {
    fn rec(c: usize, rest: u32, prefix: &mut Vec<IntPartition>, out: &mut Vec<MultiPartition>) {
        if prefix.len() + 1 == c {
            for p in partitions_of(rest) {
                prefix.push(p);
                out.push(MultiPartition(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in partitions_of(size) {
                prefix.push(p);
                rec(c, rest - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if c > 0 {
        rec(c as usize, m, &mut Vec::new(), &mut out);
    }
    out
}

/// `|Z_c ≀ S_m| = c^m m!`.
pub fn wreath_order(c: u32, m: u32) -> u128 {
    (c as u128).pow(m) * factorial(m)
}

/// Conjugacy classes of `Z_c ≀ S_m` with their sizes.
pub fn wreath_classes(c: u32, m: u32) -> Result<Vec<(WreathClassLabel, u128)>> {
    check_cap(c, m)?;
    let order = wreath_order(c, m);
    Ok(multipartitions(c, m)
        .into_iter()
        .map(|l| {
            let z = l.centralizer_order();
            (l, order / z)
        })
        .collect())
}

/// Character table of `Z_c ≀ S_m` over `ℚ(ζ_c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WreathTable {
    c: u32,
    m: u32,
    classes: Vec<WreathClassLabel>,
    irreps: Vec<MultiPartition>,
    /// `values[i][k]`: irrep `i` on class `k`.
    values: Vec<Vec<Cyclotomic>>,
    class_index: HashMap<WreathClassLabel, usize>,
    irrep_index: HashMap<MultiPartition, usize>,
}

impl WreathTable {
    pub(crate) fn from_parts(
        c: u32,
        m: u32,
        classes: Vec<WreathClassLabel>,
        irreps: Vec<MultiPartition>,
        values: Vec<Vec<Cyclotomic>>,
    ) -> Self {
        let class_index = classes.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let irrep_index = irreps.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        WreathTable {
            c,
            m,
            classes,
            irreps,
            values,
            class_index,
            irrep_index,
        }
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u128 {
        wreath_order(self.c, self.m)
    }

    pub fn classes(&self) -> &[WreathClassLabel] {
        &self.classes
    }

    pub fn irreps(&self) -> &[MultiPartition] {
        &self.irreps
    }

    pub fn class_index(&self, label: &WreathClassLabel) -> Option<usize> {
        self.class_index.get(label).copied()
    }

    pub fn irrep_index(&self, label: &MultiPartition) -> Option<usize> {
        self.irrep_index.get(label).copied()
    }

    pub fn value(&self, irrep: usize, class: usize) -> &Cyclotomic {
        &self.values[irrep][class]
    }

    pub fn row(&self, irrep: usize) -> &[Cyclotomic] {
        &self.values[irrep]
    }

    pub fn class_size(&self, class: usize) -> u128 {
        self.order() / self.classes[class].centralizer_order()
    }

    /// Dimension of irrep `i` (its value on the identity class).
    pub fn dim(&self, irrep: usize) -> u64 {
        let id = self.class_index[&MultiPartition::identity_class(self.c, self.m)];
        let v = self.values[irrep][id].as_rational().expect("dimensions are rational");
        rational_to_i64(&v).expect("dimensions are integers") as u64
    }
}

fn table_memo() -> &'static Mutex<HashMap<(u32, u32), Arc<WreathTable>>> {
    static MEMO: OnceLock<Mutex<HashMap<(u32, u32), Arc<WreathTable>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Character table of `Z_c ≀ S_m`, memoized in memory and, when configured,
/// on disk.
pub fn wreath_character_table(c: u32, m: u32) -> Result<Arc<WreathTable>> {
    check_cap(c, m)?;
    if let Some(t) = table_memo().lock().unwrap().get(&(c, m)) {
        return Ok(t.clone());
    }
    let table = match cache::load_wreath_table(c, m) {
        Some(t) => t,
        None => {
            let t = compute_table(c, m)?;
            validate_class_sizes(&t)?;
            cache::store_wreath_table(&t)?;
            t
        }
    };
    let table = Arc::new(table);
    table_memo().lock().unwrap().insert((c, m), table.clone());
    Ok(table)
}

/// Compares the formula class sizes with an explicit enumeration of the
/// group, when it is small enough to enumerate.
fn validate_class_sizes(table: &WreathTable) -> Result<()> {
    if table.order() > crate::oracle::MAX_GROUP_ORDER as u128 {
        return Ok(());
    }
    let mu = IntPartition::from_unsorted(vec![table.c; table.m as usize]);
    let group = crate::oracle::wreath_group(table.c, table.m)?;
    let mut counts = vec![0u128; table.classes.len()];
    for g in group.elements() {
        let cls = crate::oracle::classify_element(&mu, g)?;
        let label = cls.factors().first().map_or_else(|| MultiPartition::identity_class(table.c, 0), |f| f.1.clone());
        counts[table.class_index(&label).expect("classified label is a class")] += 1;
    }
    for (k, &n) in counts.iter().enumerate() {
        if n != table.class_size(k) {
            return Err(Error::InvalidInput(format!(
                "class {} of Z_{}≀S_{} has {n} elements, formula says {}",
                table.classes[k],
                table.c,
                table.m,
                table.class_size(k)
            )));
        }
    }
    Ok(())
}

/// Accumulates `Σ r_e ζ_c^e` with exponents kept unreduced until the end.
#[derive(Clone)]
struct RootSum(Vec<Rational>);

impl RootSum {
    fn new(c: u32) -> Self {
        RootSum(vec![Rational::zero(); c as usize])
    }

    fn add(&mut self, exponent: u64, r: Rational) {
        let c = self.0.len() as u64;
        self.0[(exponent % c) as usize] += r;
    }

    fn finish(self, c: u32) -> Cyclotomic {
        Cyclotomic::from_poly_coeffs(c, self.0)
    }
}

/// Every irreducible is induced from the Young-like subgroup
/// `∏_j Z_c ≀ S_{m_j}`, `m_j = |ρ^{(j)}|`, of the character whose `j`-th
/// block sends a class `(μ^{(i)})` to `ζ_c^{j·Σ_i i·ℓ(μ^{(i)})} χ^{ρ^{(j)}}(⊔_i μ^{(i)})`.
fn compute_table(c: u32, m: u32) -> Result<WreathTable> {
    let classes = multipartitions(c, m);
    let irreps = multipartitions(c, m);
    let mut values = Vec::with_capacity(irreps.len());
    for rho in &irreps {
        // Per block: list of (class, value exponent, integer value, z).
        let mut blocks: Vec<Vec<(MultiPartition, u64, i64, u128)>> = Vec::new();
        for (j, part) in rho.components().iter().enumerate() {
            let mj = part.size();
            let table = character_table(mj)?;
            let chi = table.character(part).expect("table covers all partitions");
            let entries = multipartitions(c, mj)
                .into_iter()
                .map(|d| {
                    let cycles: u64 = d.components().iter().enumerate().map(|(i, l)| (i * l.len()) as u64).sum();
                    let underlying = d.components().iter().fold(IntPartition::empty(), |acc, l| acc.union(l));
                    let z = d.centralizer_order();
                    (d, j as u64 * cycles, chi.value(&underlying), z)
                })
                .collect();
            blocks.push(entries);
        }
        // Σ over tuples of block classes, grouped by fused class.
        let mut sums: HashMap<MultiPartition, RootSum> = HashMap::new();
        let mut stack: Vec<(usize, MultiPartition, u64, i64, u128)> =
            vec![(0, MultiPartition(vec![IntPartition::empty(); c as usize]), 0, 1, 1)];
        while let Some((depth, label, exp, val, z)) = stack.pop() {
            if depth == blocks.len() {
                if val != 0 {
                    let r = rat(val) / Rational::from_integer(z.into());
                    sums.entry(label).or_insert_with(|| RootSum::new(c)).add(exp, r);
                }
                continue;
            }
            for (d, e, v, zd) in &blocks[depth] {
                stack.push((depth + 1, label.concat(d), exp + e, val * v, z * zd));
            }
        }
        let row = classes
            .iter()
            .map(|cls| match sums.remove(cls) {
                Some(s) => s.finish(c).scale(&Rational::from_integer(cls.centralizer_order().into())),
                None => Cyclotomic::zero(),
            })
            .collect();
        values.push(row);
    }
    Ok(WreathTable::from_parts(c, m, classes, irreps, values))
}

/// Multiplicities of the irreducibles of `Z_c ≀ S_{a+b}` in
/// `Ind_{Z_c≀S_a × Z_c≀S_b}(Λ_a ⊠ Λ_b)`, by Frobenius reciprocity.
pub fn decompose_wreath_induction(
    lambda_a: &MultiPartition,
    lambda_b: &MultiPartition,
) -> Result<Vec<(MultiPartition, u64)>> {
    let c = lambda_a.c();
    if lambda_b.c() != c {
        return Err(Error::ShapeMismatch(format!("Z_{c} factor paired with Z_{}", lambda_b.c())));
    }
    let (a, b) = (lambda_a.size(), lambda_b.size());
    let ta = wreath_character_table(c, a)?;
    let tb = wreath_character_table(c, b)?;
    let tg = wreath_character_table(c, a + b)?;
    let ia = ta
        .irrep_index(lambda_a)
        .ok_or_else(|| Error::InvalidInput(format!("{lambda_a} is not an irreducible of Z_{c}≀S_{a}")))?;
    let ib = tb
        .irrep_index(lambda_b)
        .ok_or_else(|| Error::InvalidInput(format!("{lambda_b} is not an irreducible of Z_{c}≀S_{b}")))?;

    // weight(C) = Σ_{D_a, D_b fusing to C} conj(χ_a(D_a) χ_b(D_b)) / (z(D_a) z(D_b))
    let mut weights: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
    for (ka, da) in ta.classes().iter().enumerate() {
        let va = ta.value(ia, ka);
        if va.is_zero() {
            continue;
        }
        for (kb, db) in tb.classes().iter().enumerate() {
            let vb = tb.value(ib, kb);
            if vb.is_zero() {
                continue;
            }
            let z = Rational::from_integer((da.centralizer_order() * db.centralizer_order()).into());
            let w = (va * vb).conj().scale(&z.recip());
            let k = tg.class_index(&da.concat(db)).expect("fused class exists");
            let entry = weights.entry(k).or_insert_with(Cyclotomic::zero);
            *entry = &*entry + &w;
        }
    }
    let mut out = Vec::new();
    for (i, rho) in tg.irreps().iter().enumerate() {
        let mut acc = Cyclotomic::zero();
        for (&k, w) in &weights {
            acc = &acc + &(tg.value(i, k) * w);
        }
        let mult = acc.as_rational().map_err(|_| {
            Error::NonIntegralMultiplicity(format!("multiplicity of {rho} is not rational: {acc}"))
        })?;
        let m = rational_to_i64(&mult)
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NonIntegralMultiplicity(format!("multiplicity of {rho} is {mult}")))?;
        if m > 0 {
            out.push((rho.clone(), m as u64));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::lr_coefficient;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn mp(parts: &[&[u32]]) -> MultiPartition {
        MultiPartition(parts.iter().map(|x| p(x)).collect())
    }

    #[test]
    fn class_counts_and_sizes() {
        let cls = wreath_classes(2, 2).unwrap();
        assert_eq!(cls.len(), 5);
        assert_eq!(cls.iter().map(|(_, s)| s).sum::<u128>(), 8);
        let cls = wreath_classes(3, 1).unwrap();
        assert_eq!(cls.len(), 3);
        assert!(cls.iter().all(|(_, s)| *s == 1));
        let s4: Vec<_> = wreath_classes(1, 4).unwrap().into_iter().map(|(l, _)| l.component(0).clone()).collect();
        assert_eq!(s4, partitions_of(4));
        for c in 1..=4 {
            for m in 0..=(8 / c) {
                let total: u128 = wreath_classes(c, m).unwrap().iter().map(|(_, s)| s).sum();
                assert_eq!(total, wreath_order(c, m));
            }
        }
    }

    #[test]
    fn multipartition_order() {
        assert_eq!(
            multipartitions(2, 2),
            vec![mp(&[&[2], &[]]), mp(&[&[1, 1], &[]]), mp(&[&[1], &[1]]), mp(&[&[], &[2]]), mp(&[&[], &[1, 1]])]
        );
    }

    #[test]
    fn z2_wreath_s2_has_four_linear_and_one_plane() {
        let t = wreath_character_table(2, 2).unwrap();
        let mut dims: Vec<u64> = (0..t.irreps().len()).map(|i| t.dim(i)).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);
        assert_eq!(t.dim(t.irrep_index(&mp(&[&[1], &[1]])).unwrap()), 2);
    }

    #[test]
    fn linear_characters_of_zk_wreath_s2() {
        // V^{ζ,ε}: both base copies act by ζ, the swap by ε.
        for k in [3u32, 4] {
            let t = wreath_character_table(k, 2).unwrap();
            for j in 0..k {
                for (eps, shape) in [(1i64, p(&[2])), (-1, p(&[1, 1]))] {
                    let i = t.irrep_index(&MultiPartition::single(k, j, shape)).unwrap();
                    assert_eq!(t.dim(i), 1);
                    // Base element (1, 0): one fixed block with product 1, one with 0.
                    let mut base = vec![IntPartition::empty(); k as usize];
                    base[0] = p(&[1]);
                    base[1] = base[1].union(&p(&[1]));
                    let kb = t.class_index(&MultiPartition(base)).unwrap();
                    assert_eq!(t.value(i, kb), &Cyclotomic::root_of_unity(k, j as i64));
                    // Pure swap: one 2-cycle with product 0.
                    let ks = t.class_index(&MultiPartition::single(k, 0, p(&[2]))).unwrap();
                    assert_eq!(t.value(i, ks), &Cyclotomic::from_i64(eps));
                }
            }
        }
    }

    #[test]
    fn induction_matches_product_of_lr_coefficients() {
        for c in 1..=3u32 {
            for a in 0..=2 {
                for b in 0..=2 {
                    for la in multipartitions(c, a) {
                        for lb in multipartitions(c, b) {
                            let got: BTreeMap<_, _> = decompose_wreath_induction(&la, &lb).unwrap().into_iter().collect();
                            for rho in multipartitions(c, a + b) {
                                let want: u64 = (0..c as usize)
                                    .map(|j| lr_coefficient(la.component(j), lb.component(j), rho.component(j)))
                                    .product();
                                assert_eq!(got.get(&rho).copied().unwrap_or(0), want, "{la} {lb} {rho}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(wreath_classes(5, 5), Err(Error::CapExceeded { .. })));
    }
}
