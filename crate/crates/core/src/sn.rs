//! Characters of symmetric groups and the graded Grothendieck ring of `Rep S_t`.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::arith::{rat, rational_to_i64, Rational};
use crate::cache;
use crate::combinatorics::{factorial, lr_coefficient, partitions_of, CycleType, IntPartition};
use crate::error::{Error, Result};

static MAX_N: AtomicU32 = AtomicU32::new(10);

/// Largest `n` for which [`character_table`] is computed (default 10).
pub fn max_table_degree() -> u32 {
    MAX_N.load(Ordering::Relaxed)
}

pub fn set_max_table_degree(cap: u32) {
    MAX_N.store(cap, Ordering::Relaxed);
}

/// An integer-valued class function on `S_n`, indexed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnCharacter {
    n: u32,
    values: BTreeMap<CycleType, i64>,
}

impl SnCharacter {
    /// Validates that `values` covers exactly the cycle types of `n`.
    pub fn new(n: u32, values: BTreeMap<CycleType, i64>) -> Result<Self> {
        let classes = partitions_of(n);
        if values.len() != classes.len() || classes.iter().any(|mu| !values.contains_key(mu)) {
            return Err(Error::InvalidInput(format!("class function on S_{n} must cover every cycle type")));
        }
        Ok(SnCharacter { n, values })
    }

    /// The trivial character of `S_n`.
    pub fn trivial(n: u32) -> Self {
        SnCharacter {
            n,
            values: partitions_of(n).into_iter().map(|mu| (mu, 1)).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, mu: &CycleType) -> i64 {
        self.values[mu]
    }

    pub fn values(&self) -> &BTreeMap<CycleType, i64> {
        &self.values
    }

    /// Value at the identity.
    pub fn degree(&self) -> i64 {
        self.values[&IntPartition::from_unsorted(vec![1; self.n as usize])]
    }

    /// `⟨χ, ψ⟩ = Σ_μ χ(μ) ψ(μ) / z_μ`.
    pub fn inner_product(&self, other: &SnCharacter) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("S_{} vs S_{}", self.n, other.n)));
        }
        let mut acc = Rational::zero();
        for (mu, a) in &self.values {
            let z = Rational::from_integer(mu.centralizer_order().into());
            acc += rat(a * other.values[mu]) / z;
        }
        Ok(acc)
    }

    /// Values listed in the order of [`partitions_of`].
    pub fn value_list(&self) -> Vec<i64> {
        partitions_of(self.n).iter().map(|mu| self.values[mu]).collect()
    }
}

/// The irreducible characters of `S_n`, indexed by partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    chars: BTreeMap<IntPartition, SnCharacter>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Cycle types in the order of [`partitions_of`].
    pub fn classes(&self) -> Vec<CycleType> {
        partitions_of(self.n)
    }

    pub fn character(&self, lambda: &IntPartition) -> Option<&SnCharacter> {
        self.chars.get(lambda)
    }

    pub fn characters(&self) -> &BTreeMap<IntPartition, SnCharacter> {
        &self.chars
    }

    pub(crate) fn from_rows(n: u32, rows: Vec<(IntPartition, Vec<i64>)>) -> Result<Self> {
        let classes = partitions_of(n);
        let mut chars = BTreeMap::new();
        for (lambda, vals) in rows {
            if vals.len() != classes.len() || lambda.size() != n {
                return Err(Error::InvalidInput(format!("malformed row {lambda} of S_{n} table")));
            }
            let values = classes.iter().cloned().zip(vals).collect();
            chars.insert(lambda, SnCharacter { n, values });
        }
        if chars.len() != classes.len() {
            return Err(Error::InvalidInput(format!("S_{n} table has {} rows", chars.len())));
        }
        Ok(CharacterTable { n, chars })
    }
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &IntPartition, mu: &CycleType) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let len = lambda.len();
    let beta: Vec<u32> = (0..len).map(|i| lambda.part(i) + (len - 1 - i) as u32).collect();
    let mut memo = HashMap::new();
    mn_rec(beta, mu.parts(), &mut memo)
}

fn mn_rec(beta: Vec<u32>, mu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // Removing a rim hook of length r moves one bead from b to b - r; the
        // sign counts the beads jumped over.
        let jumped = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest, memo);
    }
    memo.insert(key, total);
    total
}

fn table_memo() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static MEMO: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The full character table of `S_n`, memoized in memory and, if a cache
/// directory is configured, on disk.
pub fn character_table(n: u32) -> Result<Arc<CharacterTable>> {
    let cap = max_table_degree();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            value: n as u64,
            cap: cap as u64,
        });
    }
    if let Some(t) = table_memo().lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let table = match cache::load_sn_table(n)? {
        Some(t) => t,
        None => {
            let t = compute_table(n);
            cache::store_sn_table(&t)?;
            t
        }
    };
    let table = Arc::new(table);
    table_memo().lock().unwrap().insert(n, table.clone());
    Ok(table)
}

fn compute_table(n: u32) -> CharacterTable {
    let classes = partitions_of(n);
    let chars = classes
        .iter()
        .map(|lambda| {
            let values = classes.iter().map(|mu| (mu.clone(), mn_character(lambda, mu))).collect();
            (lambda.clone(), SnCharacter { n, values })
        })
        .collect();
    CharacterTable { n, chars }
}

/// All ways to split the parts of `nu` into `(α, β)` with `|α| = a`, with the
/// number of index choices producing each split.
pub(crate) fn sub_multisets(nu: &IntPartition, a: u32) -> Vec<(IntPartition, IntPartition)> {
    let mults = nu.multiplicities();
    let mut out = Vec::new();
    fn rec(
        mults: &[(u32, u32)],
        i: usize,
        remaining: i64,
        alpha: &mut Vec<u32>,
        beta: &mut Vec<u32>,
        out: &mut Vec<(IntPartition, IntPartition)>,
    ) {
        if i == mults.len() {
            if remaining == 0 {
                out.push((
                    IntPartition::from_unsorted(alpha.clone()),
                    IntPartition::from_unsorted(beta.clone()),
                ));
            }
            return;
        }
        let (c, m) = mults[i];
        for take in 0..=m {
            if (take * c) as i64 > remaining {
                break;
            }
            alpha.extend(std::iter::repeat(c).take(take as usize));
            beta.extend(std::iter::repeat(c).take((m - take) as usize));
            rec(mults, i + 1, remaining - (take * c) as i64, alpha, beta, out);
            alpha.truncate(alpha.len() - take as usize);
            beta.truncate(beta.len() - (m - take) as usize);
        }
    }
    rec(&mults, 0, a as i64, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Character of `Ind_{S_a × S_b}^{S_{a+b}}(A ⊠ B)`:
/// `Ind(ν) = z_ν Σ_{α ⊔ β = ν} χ_A(α) χ_B(β) / (z_α z_β)`.
pub fn induce_product_character(a: &SnCharacter, b: &SnCharacter) -> SnCharacter {
    let n = a.n + b.n;
    let values = partitions_of(n)
        .into_iter()
        .map(|nu| {
            let z_nu = Rational::from_integer(nu.centralizer_order().into());
            let mut acc = Rational::zero();
            for (alpha, beta) in sub_multisets(&nu, a.n) {
                let z = Rational::from_integer((alpha.centralizer_order() * beta.centralizer_order()).into());
                acc += rat(a.value(&alpha) * b.value(&beta)) / z;
            }
            let v = rational_to_i64(&(acc * z_nu)).expect("induced character values are integers");
            (nu, v)
        })
        .collect();
    SnCharacter { n, values }
}

/// Multiplicities of the irreducible characters in `chi`; fails if some
/// multiplicity is not a non-negative integer.
pub fn decompose_character(chi: &SnCharacter) -> Result<BTreeMap<IntPartition, u64>> {
    let table = character_table(chi.n)?;
    let mut out = BTreeMap::new();
    for (lambda, irr) in table.characters() {
        let m = chi.inner_product(irr)?;
        let m = rational_to_i64(&m)
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::NonIntegralMultiplicity(format!("{lambda}: {m}")))?;
        if m > 0 {
            out.insert(lambda.clone(), m as u64);
        }
    }
    Ok(out)
}

/// The labels `X_μ` of `Ind(S^λ ⊠ 1)` at generic `t`, with multiplicities.
///
/// Computed by inducing `χ^λ ⊠ 1` from `S_r × S_{d−r}` to `S_d` with
/// `r = |λ|` and `d = r + λ_1`, and dropping the first row of every
/// constituent; at this `d` the first row is long enough for the tail to
/// determine the constituent.
pub fn pieri_induction(lambda: &IntPartition) -> Result<BTreeMap<IntPartition, u64>> {
    let r = lambda.size();
    let d = r + lambda.part(0);
    let table = character_table(r)?;
    let chi = table.character(lambda).expect("table covers all partitions");
    character_table(d)?;
    let induced = induce_product_character(chi, &SnCharacter::trivial(d - r));
    let mut out = BTreeMap::new();
    for (nu, m) in decompose_character(&induced)? {
        *out.entry(nu.tail()).or_insert(0) += m;
    }
    Ok(out)
}

/// At a non-negative integer `t`, `Ind(S^λ ⊠ 1)` is only known to contain
/// `X_λ` once and otherwise labels from `λ − h.s.`; this checks that shape.
pub fn pieri_upper_bound_holds(lambda: &IntPartition, labels: &BTreeMap<IntPartition, u64>) -> bool {
    let allowed = crate::combinatorics::horizontal_strip_removals(lambda);
    labels.get(lambda) == Some(&1)
        && labels.iter().all(|(mu, &m)| m == 1 && allowed.contains(mu))
}

/// Leading term of `[X_λ][X_μ]` in the graded Grothendieck ring:
/// `Σ_ν c_{λ,μ}^ν [X_ν]`.
pub fn grk0_repst_product(lambda: &IntPartition, mu: &IntPartition) -> BTreeMap<IntPartition, u64> {
    partitions_of(lambda.size() + mu.size())
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// `|S_n| = n!` as a rational, for orthogonality checks.
pub fn group_order(n: u32) -> Rational {
    Rational::from_integer(factorial(n).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.character(&p(&[1])).unwrap().value_list(), vec![1]);
        let t3 = character_table(3).unwrap();
        let chi = t3.character(&p(&[2, 1])).unwrap();
        assert_eq!(chi.value(&p(&[1, 1, 1])), 2);
        assert_eq!(chi.value(&p(&[2, 1])), 0);
        assert_eq!(chi.value(&p(&[3])), -1);
    }

    #[test]
    fn row_orthogonality() {
        for n in 0..=6 {
            let t = character_table(n).unwrap();
            for (l1, a) in t.characters() {
                for (l2, b) in t.characters() {
                    let ip = a.inner_product(b).unwrap();
                    assert_eq!(ip, rat((l1 == l2) as i64), "n={n} {l1} {l2}");
                }
            }
        }
    }

    #[test]
    fn degrees_match_hook_formula() {
        for n in 0..=8 {
            for (lambda, chi) in character_table(n).unwrap().characters() {
                assert_eq!(chi.degree() as u128, lambda.hook_dimension());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(character_table(max_table_degree() + 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn induction_examples() {
        let triv1 = SnCharacter::trivial(1);
        let d = decompose_character(&induce_product_character(&triv1, &triv1)).unwrap();
        assert_eq!(d, BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        let chi = character_table(3).unwrap().character(&p(&[2, 1])).unwrap().clone();
        assert_eq!(induce_product_character(&chi, &SnCharacter::trivial(0)), chi);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_induction(&p(&[])).unwrap(), BTreeMap::from([(p(&[]), 1)]));
        assert_eq!(pieri_induction(&p(&[1])).unwrap(), BTreeMap::from([(p(&[1]), 1), (p(&[]), 1)]));
        let got = pieri_induction(&p(&[2, 1])).unwrap();
        let want: BTreeMap<_, _> = [p(&[2, 1]), p(&[1, 1]), p(&[2]), p(&[1])].into_iter().map(|m| (m, 1)).collect();
        assert_eq!(got, want);
        assert!(pieri_upper_bound_holds(&p(&[2, 1]), &got));
    }

    #[test]
    fn repst_products() {
        assert_eq!(
            grk0_repst_product(&p(&[1]), &p(&[1])),
            BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)])
        );
        assert_eq!(grk0_repst_product(&p(&[]), &p(&[2, 1])), BTreeMap::from([(p(&[2, 1]), 1)]));
        assert_eq!(grk0_repst_product(&p(&[2, 1]), &p(&[2, 1]))[&p(&[3, 2, 1])], 2);
    }
}
