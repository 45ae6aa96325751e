//! Explicit-matrix ground truth for the character-theoretic code paths.
//!
//! Everything here works with concrete permutation groups and matrices:
//! centralizers are realized inside `S_n`, irreducibles are built from
//! seminormal Specht modules and induced along explicit cosets, and
//! multiplicities come from traces. None of the class-fusion or
//! reciprocity machinery in [`crate::centralizer`] is reused; only the
//! character tables are consulted, to name the constituents.

mod frobenius;
mod specht;
mod verify;
mod wreath;

pub use frobenius::{frobenius_check, FrobeniusReport};
pub use specht::{specht_module, standard_tableaux, SpechtRep};
pub use verify::{brute_odot, verify_suite, VerifyReport, SUITES};
pub use wreath::{centralizer_irrep_module, classify_element, wreath_group, wreath_irrep_module};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;
use serde_json::{json, Value};

use crate::arith::{rat, rational_to_i64, Cyclotomic, Matrix, Rational};
use crate::centralizer::{centralizer_character, centralizer_irreps, centralizer_structure, CentralizerClass, CentralizerIrrep};
use crate::combinatorics::{centralizer_order, partitions_of, CycleType};
use crate::error::{Error, Result};
use crate::perm::{centralizer_elements, generate_group, Perm};

/// Largest group the oracle materializes.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// Largest `index · dim` accepted by [`brute_induce`].
pub const MAX_INDUCED_DIM: usize = 500;

/// Groups up to this order get a full closure check on construction; larger
/// ones are checked against a sample of right multipliers.
const FULL_CLOSURE_CHECK: usize = 2048;

/// A permutation group given by its full element list, sorted so that the
/// identity comes first and equal groups have equal lists.
#[derive(Clone, Debug)]
pub struct ExplicitGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    centralizer_of: Option<CycleType>,
}

impl PartialEq for ExplicitGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for ExplicitGroup {}

impl ExplicitGroup {
    fn from_sorted(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        ExplicitGroup {
            degree,
            elements,
            index,
            centralizer_of: None,
        }
    }

    /// Validates that `elements` is a group of permutations of `degree` points.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        if elements.len() > MAX_GROUP_ORDER {
            return Err(Error::CapExceeded {
                what: "group order",
                value: elements.len() as u64,
                cap: MAX_GROUP_ORDER as u64,
            });
        }
        if let Some(g) = elements.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(format!("{g} is not a permutation of {degree} points")));
        }
        let g = Self::from_sorted(degree, elements);
        if g.elements.first().is_none_or(|e| !e.is_identity()) {
            return Err(Error::InvalidInput("group does not contain the identity".into()));
        }
        let multipliers: Vec<&Perm> = if g.order() <= FULL_CLOSURE_CHECK {
            g.elements.iter().collect()
        } else {
            let step = g.order() / 64;
            g.elements.iter().step_by(step).collect()
        };
        for a in &g.elements {
            if !g.contains(&a.inverse()) {
                return Err(Error::InvalidInput(format!("not closed under inverses: {a}")));
            }
            for b in &multipliers {
                if !g.contains(&a.compose(b)) {
                    return Err(Error::InvalidInput(format!("not closed under products: {a} ∘ {b}")));
                }
            }
        }
        Ok(g)
    }

    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Self> {
        Ok(Self::from_sorted(degree, generate_group(degree, gens, MAX_GROUP_ORDER)?))
    }

    pub fn symmetric(n: usize) -> Self {
        Self::from_sorted(n, Perm::all(n))
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_sorted(n, vec![Perm::identity(n)])
    }

    /// `S_{λ_1} × S_{λ_2} × …` on consecutive blocks of points.
    pub fn young_subgroup(parts: &[u32]) -> Self {
        parts
            .iter()
            .fold(Self::trivial(0), |acc, &k| acc.direct_product(&Self::symmetric(k as usize)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].compose(&self.elements[j])]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    /// The cycle type `μ` when this group is the centralizer of the canonical
    /// permutation of type `μ`.
    pub fn centralizer_label(&self) -> Option<&CycleType> {
        self.centralizer_of.as_ref()
    }

    /// `self × other` acting on `0..n` and `n..n+m`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let elements = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| a.direct_sum(b)))
            .collect();
        Self::from_sorted(self.degree + other.degree, elements)
    }

    /// The elements satisfying `pred`, which must form a subgroup.
    pub fn filter(&self, pred: impl Fn(&Perm) -> bool) -> Result<Self> {
        Self::from_elements(self.degree, self.elements.iter().filter(|g| pred(g)).cloned().collect())
    }

    /// `p G p⁻¹`.
    pub fn conjugate(&self, p: &Perm) -> Self {
        Self::from_sorted(self.degree, self.elements.iter().map(|g| g.conjugate_by(p)).collect())
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }
}

fn realize_memo() -> &'static Mutex<HashMap<CycleType, Arc<ExplicitGroup>>> {
    static MEMO: OnceLock<Mutex<HashMap<CycleType, Arc<ExplicitGroup>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The centralizer of the canonical permutation of type `μ` (cycles of
/// increasing length on consecutive points), found by filtering `S_n` for
/// `n ≤ 8` and by closing the cycle rotations and block swaps otherwise.
pub fn realize_centralizer(mu: &CycleType) -> Result<Arc<ExplicitGroup>> {
    if let Some(g) = realize_memo().lock().unwrap().get(mu) {
        return Ok(g.clone());
    }
    let expected = centralizer_order(mu);
    if expected > MAX_GROUP_ORDER as u128 {
        return Err(Error::CapExceeded {
            what: "centralizer order",
            value: expected.min(u64::MAX as u128) as u64,
            cap: MAX_GROUP_ORDER as u64,
        });
    }
    let sigma = Perm::canonical_of_type(mu);
    let n = sigma.degree();
    let mut group = if n <= 8 {
        ExplicitGroup::from_sorted(
            n,
            Perm::all(n).into_iter().filter(|g| g.compose(&sigma) == sigma.compose(g)).collect(),
        )
    } else {
        ExplicitGroup::from_sorted(n, centralizer_elements(&sigma, MAX_GROUP_ORDER)?)
    };
    group.centralizer_of = Some(mu.clone());
    let group = Arc::new(group);
    realize_memo().lock().unwrap().insert(mu.clone(), group.clone());
    Ok(group)
}

/// `(p(0), …)` for a permutation conjugating `from` onto `to`:
/// `p ∘ from ∘ p⁻¹ = to`. Both must have the same cycle type.
pub fn conjugator(from: &Perm, to: &Perm) -> Result<Perm> {
    if from.cycle_type() != to.cycle_type() {
        return Err(Error::ShapeMismatch(format!("{from} and {to} are not conjugate")));
    }
    let mut targets: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for c in to.cycles() {
        targets.entry(c.len()).or_default().push(c);
    }
    let mut images = vec![0; from.degree()];
    for c in from.cycles() {
        let t = targets.get_mut(&c.len()).and_then(Vec::pop).expect("same cycle type");
        for (x, y) in c.iter().zip(&t) {
            images[*x] = *y;
        }
    }
    Perm::from_images(images)
}

/// A representation of an [`ExplicitGroup`]: one matrix per element, with
/// columns the images of the basis vectors.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    group: Arc<ExplicitGroup>,
    dim: usize,
    action: Vec<Matrix<Cyclotomic>>,
}

impl ExplicitModule {
    /// Validates shapes, that the identity acts trivially, and the
    /// homomorphism property on a sample of pairs.
    pub fn new(group: Arc<ExplicitGroup>, action: Vec<Matrix<Cyclotomic>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::ShapeMismatch(format!(
                "{} matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::ShapeMismatch("action matrices have different shapes".into()));
        }
        let m = ExplicitModule { group, dim, action };
        if m.action[0] != Matrix::identity(dim) {
            return Err(Error::InvalidInput("the identity does not act trivially".into()));
        }
        if !m.check_homomorphism(16) {
            return Err(Error::InvalidInput("action is not a homomorphism".into()));
        }
        Ok(m)
    }

    pub fn from_fn(group: Arc<ExplicitGroup>, f: impl Fn(&Perm) -> Matrix<Cyclotomic>) -> Result<Self> {
        let action = group.elements.iter().map(f).collect();
        Self::new(group, action)
    }

    pub(crate) fn from_parts(group: Arc<ExplicitGroup>, dim: usize, action: Vec<Matrix<Cyclotomic>>) -> Self {
        debug_assert_eq!(action.len(), group.order());
        ExplicitModule { group, dim, action }
    }

    pub fn trivial(group: Arc<ExplicitGroup>) -> Self {
        let action = vec![Matrix::identity(1); group.order()];
        Self::from_parts(group, 1, action)
    }

    pub fn sign(group: Arc<ExplicitGroup>) -> Self {
        let action = group
            .elements
            .iter()
            .map(|g| Matrix::from_rows(vec![vec![Cyclotomic::from_i64(g.sign())]]))
            .collect();
        Self::from_parts(group, 1, action)
    }

    /// The left regular representation on `ℚG`.
    pub fn regular(group: Arc<ExplicitGroup>) -> Self {
        let n = group.order();
        let action = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for x in 0..n {
                    m.set(group.mul(g, x), x, Cyclotomic::one());
                }
                m
            })
            .collect();
        Self::from_parts(group, n, action)
    }

    pub fn group(&self) -> &Arc<ExplicitGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, i: usize) -> &Matrix<Cyclotomic> {
        &self.action[i]
    }

    pub fn matrix_of(&self, g: &Perm) -> Option<&Matrix<Cyclotomic>> {
        self.group.index_of(g).map(|i| &self.action[i])
    }

    /// Trace of every element, in group order.
    pub fn character(&self) -> Vec<Cyclotomic> {
        self.action.iter().map(Matrix::trace).collect()
    }

    /// `ρ(g)ρ(h) = ρ(gh)` for `g` in an evenly spaced sample of `samples`
    /// elements and `h` in another such sample.
    pub fn check_homomorphism(&self, samples: usize) -> bool {
        let n = self.group.order();
        let step = (n / samples.max(1)).max(1);
        let pick: Vec<usize> = (0..n).step_by(step).collect();
        let pick2: Vec<usize> = (0..n).rev().step_by(step).collect();
        pick.iter().all(|&g| {
            pick2
                .iter()
                .all(|&h| self.action[g].mul(&self.action[h]) == self.action[self.group.mul(g, h)])
        })
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("modules over different groups".into()))
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Self::from_parts(self.group.clone(), d, action))
    }

    /// Inner tensor product over the common group.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.kron(b)).collect();
        Ok(Self::from_parts(self.group.clone(), self.dim * other.dim, action))
    }

    /// `self ⊠ other` over `G × H` acting on disjoint consecutive points.
    pub fn outer_tensor(&self, other: &Self) -> Self {
        let group = Arc::new(self.group.direct_product(&other.group));
        let n = self.group.degree;
        let action = group
            .elements
            .iter()
            .map(|g| {
                let (a, b) = split_direct_sum(g, n);
                let ia = self.group.index[&a];
                let ib = other.group.index[&b];
                self.action[ia].kron(&other.action[ib])
            })
            .collect();
        Self::from_parts(group, self.dim * other.dim, action)
    }

    pub fn restrict(&self, sub: Arc<ExplicitGroup>) -> Result<Self> {
        if !sub.is_subgroup_of(&self.group) {
            return Err(Error::InvalidInput("restriction to a non-subgroup".into()));
        }
        let action = sub.elements.iter().map(|g| self.action[self.group.index[g]].clone()).collect();
        Ok(Self::from_parts(sub, self.dim, action))
    }

    /// The same module viewed over `p G p⁻¹`, with `p g p⁻¹` acting as `g`.
    pub fn conjugate(&self, p: &Perm) -> Self {
        let group = Arc::new(self.group.conjugate(p));
        let pinv = p.inverse();
        let action = group
            .elements
            .iter()
            .map(|g| self.action[self.group.index[&g.conjugate_by(&pinv)]].clone())
            .collect();
        Self::from_parts(group, self.dim, action)
    }

    /// Rebinds the module to an equal group carrying extra metadata.
    pub fn on_group(&self, group: Arc<ExplicitGroup>) -> Result<Self> {
        if *group != *self.group {
            return Err(Error::ShapeMismatch("groups have different elements".into()));
        }
        Ok(Self::from_parts(group, self.dim, self.action.clone()))
    }
}

/// Splits `a ⊕ b` into its parts on `0..n` and `n..`.
fn split_direct_sum(g: &Perm, n: usize) -> (Perm, Perm) {
    let imgs = g.images();
    let a = Perm::from_images(imgs[..n].to_vec()).expect("block-diagonal permutation");
    let b = Perm::from_images(imgs[n..].iter().map(|&x| x - n).collect()).expect("block-diagonal permutation");
    (a, b)
}

/// Left cosets `big = ⊔ r_i · sub`, with representatives as indices into `big`.
#[derive(Clone, Debug)]
pub(crate) struct LeftCosets {
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl LeftCosets {
    pub(crate) fn new(sub: &ExplicitGroup, big: &ExplicitGroup) -> Result<Self> {
        if !sub.is_subgroup_of(big) {
            return Err(Error::InvalidInput("induction from a non-subgroup".into()));
        }
        let mut coset_of = vec![usize::MAX; big.order()];
        let mut reps = Vec::new();
        for g in 0..big.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for h in &sub.elements {
                coset_of[big.index[&big.elements[g].compose(h)]] = reps.len();
            }
            reps.push(g);
        }
        Ok(LeftCosets { reps, coset_of })
    }

    pub(crate) fn len(&self) -> usize {
        self.reps.len()
    }

    pub(crate) fn rep(&self, i: usize) -> usize {
        self.reps[i]
    }

    /// `(j, h)` with `g · r_i = r_j · h`, `h ∈ sub`.
    pub(crate) fn split(&self, big: &ExplicitGroup, sub: &ExplicitGroup, g: usize, i: usize) -> (usize, usize) {
        let gr = big.mul(g, self.reps[i]);
        let j = self.coset_of[gr];
        let h = big.elements[self.reps[j]].inverse().compose(&big.elements[gr]);
        (j, sub.index[&h])
    }
}

/// `Ind_sub^big(m)` on the basis `r_i ⊗ v_b` (index `i·dim + b`), where
/// `g · (r_i ⊗ v) = r_j ⊗ h v` for `g r_i = r_j h`.
pub fn brute_induce(sub: &ExplicitGroup, big: &Arc<ExplicitGroup>, m: &ExplicitModule) -> Result<ExplicitModule> {
    induce_with_cosets(sub, big, m).map(|(module, _)| module)
}

pub(crate) fn induce_with_cosets(
    sub: &ExplicitGroup,
    big: &Arc<ExplicitGroup>,
    m: &ExplicitModule,
) -> Result<(ExplicitModule, LeftCosets)> {
    if *m.group != *sub {
        return Err(Error::ShapeMismatch("module is not over the given subgroup".into()));
    }
    if big.order() % sub.order() != 0 {
        return Err(Error::InvalidInput("subgroup order does not divide group order".into()));
    }
    let total = big.order() / sub.order() * m.dim;
    if total > MAX_INDUCED_DIM {
        return Err(Error::CapExceeded {
            what: "induced dimension",
            value: total as u64,
            cap: MAX_INDUCED_DIM as u64,
        });
    }
    let cosets = LeftCosets::new(sub, big)?;
    let d = m.dim;
    let action = (0..big.order())
        .map(|g| {
            let mut out = Matrix::zeros(total, total);
            for i in 0..cosets.len() {
                let (j, h) = cosets.split(big, &m.group, g, i);
                let block = &m.action[h];
                for r in 0..d {
                    for c in 0..d {
                        let v = block.get(r, c);
                        if !v.is_zero() {
                            out.set(j * d + r, i * d + c, v.clone());
                        }
                    }
                }
            }
            out
        })
        .collect();
    Ok((ExplicitModule::from_parts(big.clone(), total, action), cosets))
}

/// `⟨χ_a, χ_b⟩ = (1/|G|) Σ_g χ_a(g) conj(χ_b(g))` from explicit traces.
pub fn character_inner_product(a: &ExplicitModule, b: &ExplicitModule) -> Result<Cyclotomic> {
    a.same_group(b)?;
    let mut acc = Cyclotomic::zero();
    for (x, y) in a.character().iter().zip(b.character()) {
        acc = &acc + &(x * &y.conj());
    }
    Ok(acc.scale(&(Rational::one() / rat(a.group.order() as i64))))
}

fn to_multiplicity(v: &Cyclotomic, what: &dyn std::fmt::Display) -> Result<u64> {
    let r = v
        .as_rational()
        .map_err(|_| Error::NonIntegralMultiplicity(format!("multiplicity of {what} is not rational: {v}")))?;
    rational_to_i64(&r)
        .filter(|&k| k >= 0)
        .map(|k| k as u64)
        .ok_or_else(|| Error::NonIntegralMultiplicity(format!("multiplicity of {what} is {r}")))
}

/// Multiplicities of the irreducibles of `Z(μ)` in `m`, where `m` lives over
/// a group produced by [`realize_centralizer`]. Each element is classified
/// directly from its permutation; the tables only supply `χ_Λ(class)`.
pub fn brute_decompose(m: &ExplicitModule) -> Result<Vec<(CentralizerIrrep, u64)>> {
    let mu = m
        .group
        .centralizer_label()
        .ok_or_else(|| Error::InvalidInput("module is not over a realized centralizer".into()))?
        .clone();
    let desc = centralizer_structure(&mu);
    let classes: Vec<CentralizerClass> = m.group.elements.iter().map(|g| classify_element(&mu, g)).collect::<Result<_>>()?;
    let traces = m.character();
    let order = Rational::from_integer((m.group.order() as i64).into());
    let mut out = Vec::new();
    let mut total_dim = 0u64;
    for irrep in centralizer_irreps(&desc) {
        let mut values: HashMap<&CentralizerClass, Cyclotomic> = HashMap::new();
        let mut acc = Cyclotomic::zero();
        for (cls, tr) in classes.iter().zip(&traces) {
            if tr.is_zero() {
                continue;
            }
            if !values.contains_key(cls) {
                values.insert(cls, centralizer_character(&irrep, cls)?.conj());
            }
            acc = &acc + &(tr * &values[cls]);
        }
        let k = to_multiplicity(&acc.scale(&order.recip()), &irrep)?;
        if k > 0 {
            total_dim += k * irrep.dim()?;
            out.push((irrep, k));
        }
    }
    if total_dim != m.dim as u64 {
        return Err(Error::NonIntegralMultiplicity(format!(
            "constituents have total dimension {total_dim}, module has {}",
            m.dim
        )));
    }
    Ok(out)
}

/// A Yetter–Drinfeld module: a `G`-module with a `G`-grading of its basis.
#[derive(Clone, Debug)]
pub struct YDModule {
    module: ExplicitModule,
    grading: Vec<usize>,
}

impl YDModule {
    /// Validates `g · V_h ⊆ V_{g h g⁻¹}` on every action matrix.
    pub fn new(module: ExplicitModule, grading: Vec<usize>) -> Result<Self> {
        if grading.len() != module.dim {
            return Err(Error::ShapeMismatch("grading does not cover the basis".into()));
        }
        let y = YDModule { module, grading };
        if !y.check_grading() {
            return Err(Error::InvalidInput("action does not respect the grading".into()));
        }
        Ok(y)
    }

    /// `W_{σ,V} = Ind_{Z(σ)}^G(V)` with `r_i ⊗ v` in degree `r_i σ r_i⁻¹`.
    pub fn induced(sigma: &Perm, big: &Arc<ExplicitGroup>, v: &ExplicitModule) -> Result<Self> {
        if !v.group.elements.iter().all(|g| g.compose(sigma) == sigma.compose(g)) {
            return Err(Error::InvalidInput(format!("module group does not centralize {sigma}")));
        }
        let (module, cosets) = induce_with_cosets(&v.group, big, v)?;
        let mut grading = Vec::with_capacity(module.dim);
        for i in 0..cosets.len() {
            let r = big.element(cosets.rep(i));
            let deg = big.index_of(&sigma.conjugate_by(r)).ok_or_else(|| {
                Error::InvalidInput(format!("{sigma} is not in the ambient group"))
            })?;
            grading.extend(std::iter::repeat(deg).take(v.dim));
        }
        Self::new(module, grading)
    }

    pub fn module(&self) -> &ExplicitModule {
        &self.module
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    pub fn check_grading(&self) -> bool {
        let g = &self.module.group;
        (0..g.order()).all(|x| {
            let m = &self.module.action[x];
            let xinv = g.inverse(x);
            (0..self.module.dim).all(|col| {
                let target = g.mul(g.mul(x, self.grading[col]), xinv);
                (0..self.module.dim).all(|row| m.get(row, col).is_zero() || self.grading[row] == target)
            })
        })
    }

    /// `tr(x | V_h)` for every `x` and `h`, keyed by `(x, h)`.
    fn graded_traces(&self) -> HashMap<(usize, usize), Cyclotomic> {
        let mut out: HashMap<(usize, usize), Cyclotomic> = HashMap::new();
        for (x, m) in self.module.action.iter().enumerate() {
            for (b, &h) in self.grading.iter().enumerate() {
                let v = m.get(b, b);
                if !v.is_zero() {
                    let e = out.entry((x, h)).or_insert_with(Cyclotomic::zero);
                    *e = &*e + v;
                }
            }
        }
        out
    }

    /// Inner product of characters of the Drinfeld double `D(G)`:
    /// `(1/|G|) Σ_h Σ_{x ∈ C(h)} tr(x|V_h) conj(tr(x|W_h))`.
    pub fn double_inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.module.same_group(&other.module)?;
        let a = self.graded_traces();
        let b = other.graded_traces();
        let mut acc = Cyclotomic::zero();
        for (key, va) in &a {
            if let Some(vb) = b.get(key) {
                acc = &acc + &(va * &vb.conj());
            }
        }
        Ok(acc.scale(&(Rational::one() / rat(self.module.group.order() as i64))))
    }
}

/// Census of simple Yetter–Drinfeld modules over `S_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct YdCensus {
    pub n: u32,
    pub labels: Vec<(CycleType, CentralizerIrrep)>,
    /// Orbits of `S_n` on commuting pairs, counted independently.
    pub commuting_pair_orbits: usize,
    /// Every constructed module satisfied the grading axiom.
    pub grading_ok: bool,
    /// The `D(G)` Gram matrix of the constructed modules is the identity.
    pub orthonormal: bool,
}

impl YdCensus {
    pub fn count(&self) -> usize {
        self.labels.len()
    }

    pub fn to_json(&self) -> Value {
        let labels: Vec<Value> = self
            .labels
            .iter()
            .map(|(mu, v)| json!({"mu": mu, "irrep": v.to_json()}))
            .collect();
        json!({
            "n": self.n,
            "count": self.count(),
            "commuting_pair_orbits": self.commuting_pair_orbits,
            "grading_ok": self.grading_ok,
            "orthonormal": self.orthonormal,
            "labels": labels,
        })
    }
}

/// Builds `W_{σ,V}` for every class representative `σ` of `S_n` and every
/// irreducible `V` of `Z(σ)`, checks the grading axiom, irreducibility and
/// pairwise distinctness through `D(S_n)` characters, and compares the count
/// with the number of conjugation orbits on commuting pairs.
pub fn yd_enumerate(n: u32) -> Result<YdCensus> {
    if n > 4 {
        return Err(Error::CapExceeded {
            what: "Yetter–Drinfeld census degree",
            value: n as u64,
            cap: 4,
        });
    }
    let g = Arc::new(ExplicitGroup::symmetric(n as usize));
    let mut labels = Vec::new();
    let mut modules = Vec::new();
    for mu in partitions_of(n) {
        let sigma = Perm::canonical_of_type(&mu);
        for irrep in centralizer_irreps(&centralizer_structure(&mu)) {
            let v = centralizer_irrep_module(&mu, &irrep)?;
            modules.push(YDModule::induced(&sigma, &g, &v)?);
            labels.push((mu.clone(), irrep));
        }
    }
    let grading_ok = modules.iter().all(YDModule::check_grading);
    let mut orthonormal = true;
    for (i, a) in modules.iter().enumerate() {
        for (j, b) in modules.iter().enumerate().skip(i) {
            let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if a.double_inner_product(b)? != expected {
                orthonormal = false;
            }
        }
    }
    Ok(YdCensus {
        n,
        labels,
        commuting_pair_orbits: commuting_pair_orbits(&g),
        grading_ok,
        orthonormal,
    })
}

/// Orbits of simultaneous conjugation on `{(g, h) : gh = hg}`.
fn commuting_pair_orbits(g: &ExplicitGroup) -> usize {
    let n = g.order();
    let mut seen = vec![false; n * n];
    let mut orbits = 0;
    for a in 0..n {
        for b in 0..n {
            if seen[a * n + b] || g.mul(a, b) != g.mul(b, a) {
                continue;
            }
            orbits += 1;
            for x in 0..n {
                let xinv = g.inverse(x);
                let ca = g.mul(g.mul(x, a), xinv);
                let cb = g.mul(g.mul(x, b), xinv);
                seen[ca * n + cb] = true;
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::IntPartition;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn perm(cycles: &[&[usize]], n: usize) -> Perm {
        Perm::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn centralizer_of_two_two() {
        let z = realize_centralizer(&p(&[2, 2])).unwrap();
        assert_eq!(z.order(), 8);
        for g in [perm(&[&[0, 1]], 4), perm(&[&[2, 3]], 4), perm(&[&[0, 2], &[1, 3]], 4)] {
            assert!(z.contains(&g), "{g}");
        }
        let gens = [perm(&[&[0, 1]], 4), perm(&[&[2, 3]], 4), perm(&[&[0, 2], &[1, 3]], 4)];
        assert_eq!(ExplicitGroup::from_generators(4, &gens).unwrap(), *z);
    }

    #[test]
    fn centralizer_orders_match_formula() {
        for n in 0..=6 {
            for mu in partitions_of(n) {
                assert_eq!(realize_centralizer(&mu).unwrap().order() as u128, centralizer_order(&mu), "{mu}");
            }
        }
        let z = realize_centralizer(&p(&[5])).unwrap();
        assert_eq!(z.order(), 5);
        let gen = Perm::canonical_of_type(&p(&[5]));
        assert_eq!(ExplicitGroup::from_generators(5, &[gen]).unwrap(), *z);
    }

    #[test]
    fn large_centralizers_use_generators() {
        let mu = p(&[3, 3, 3]);
        assert_eq!(realize_centralizer(&mu).unwrap().order() as u128, centralizer_order(&mu));
        assert!(matches!(realize_centralizer(&p(&[1; 9])), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn rejects_non_groups() {
        let bad = vec![Perm::identity(3), perm(&[&[0, 1, 2]], 3)];
        assert!(ExplicitGroup::from_elements(3, bad).is_err());
        assert!(ExplicitGroup::from_elements(2, vec![perm(&[&[0, 1]], 2)]).is_err());
    }

    #[test]
    fn regular_module_from_trivial_subgroup() {
        let s2 = Arc::new(ExplicitGroup::symmetric(2));
        let triv = Arc::new(ExplicitGroup::trivial(2));
        let m = brute_induce(&triv, &s2, &ExplicitModule::trivial(triv.clone())).unwrap();
        assert_eq!(m.character(), vec![Cyclotomic::from_i64(2), Cyclotomic::zero()]);
    }

    #[test]
    fn induce_from_cycle_subgroup_of_wreath() {
        let z = realize_centralizer(&p(&[2, 2])).unwrap();
        let base = Arc::new(z.filter(|g| g.apply(0) < 2).unwrap());
        assert_eq!(base.order(), 4);
        let m = brute_induce(&base, &z, &ExplicitModule::trivial(base.clone())).unwrap();
        assert_eq!(m.dim(), 2);
        let swap = perm(&[&[0, 2], &[1, 3]], 4);
        assert!(m.matrix_of(&swap).unwrap().trace().is_zero());
        assert!(m.check_homomorphism(8));
    }

    #[test]
    fn induce_cap() {
        let s6 = Arc::new(ExplicitGroup::symmetric(6));
        let triv = Arc::new(ExplicitGroup::trivial(6));
        let err = brute_induce(&triv, &s6, &ExplicitModule::trivial(triv.clone())).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn regular_module_of_wreath_decomposes_by_dimension() {
        let z = realize_centralizer(&p(&[2, 2])).unwrap();
        let parts = brute_decompose(&ExplicitModule::regular(z)).unwrap();
        assert_eq!(parts.len(), 5);
        for (irrep, k) in parts {
            assert_eq!(k, irrep.dim().unwrap());
        }
    }

    #[test]
    fn direct_sums_decompose_into_their_summands() {
        let mu = p(&[3, 3]);
        let desc = centralizer_structure(&mu);
        let irreps = centralizer_irreps(&desc);
        let pick = [&irreps[1], &irreps[4], &irreps[4], &irreps[7]];
        let modules: Vec<ExplicitModule> = pick.iter().map(|v| centralizer_irrep_module(&mu, v).unwrap()).collect();
        let sum = modules[1..].iter().fold(modules[0].clone(), |acc, m| acc.direct_sum(m).unwrap());
        let mut expected: BTreeMap<CentralizerIrrep, u64> = BTreeMap::new();
        for v in pick {
            *expected.entry(v.clone()).or_default() += 1;
        }
        let got: BTreeMap<CentralizerIrrep, u64> = brute_decompose(&sum).unwrap().into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn decompose_needs_a_realized_centralizer() {
        let g = Arc::new(ExplicitGroup::symmetric(3));
        assert!(brute_decompose(&ExplicitModule::trivial(g)).is_err());
    }

    #[test]
    fn induced_character_matches_formula() {
        // Ind_{S_2×S_1}^{S_3}(sign ⊠ triv): the formula gives (3, -1, 0).
        let s3 = Arc::new(ExplicitGroup::symmetric(3));
        let sub = ExplicitGroup::young_subgroup(&[2, 1]);
        let v = ExplicitModule::sign(Arc::new(ExplicitGroup::symmetric(2)))
            .outer_tensor(&ExplicitModule::trivial(Arc::new(ExplicitGroup::symmetric(1))));
        let m = brute_induce(&sub, &s3, &v).unwrap();
        for (g, chi) in s3.elements().iter().zip(m.character()) {
            let fixed = (0..3).filter(|&i| g.apply(i) == i).count();
            let expected = match fixed {
                3 => 3,
                1 => -1,
                _ => 0,
            };
            assert_eq!(chi, Cyclotomic::from_i64(expected), "{g}");
        }
    }

    #[test]
    fn regular_input_gives_group_order() {
        for mu in partitions_of(4) {
            let z = realize_centralizer(&mu).unwrap();
            let g = Arc::new(ExplicitGroup::symmetric(4));
            let w = YDModule::induced(&Perm::canonical_of_type(&mu), &g, &ExplicitModule::regular(z)).unwrap();
            assert_eq!(w.module().dim(), 24);
        }
    }

    #[test]
    fn yd_census() {
        for (n, expected) in [(2, 4), (3, 8), (4, 21)] {
            let census = yd_enumerate(n).unwrap();
            assert_eq!(census.count(), expected);
            assert_eq!(census.commuting_pair_orbits, expected);
            assert!(census.grading_ok && census.orthonormal);
        }
        assert!(yd_enumerate(5).is_err());
    }

    #[test]
    fn grading_violation_detected() {
        let g = Arc::new(ExplicitGroup::symmetric(2));
        let m = ExplicitModule::regular(g);
        assert!(YDModule::new(m, vec![0, 0]).is_ok());
        let m = ExplicitModule::regular(Arc::new(ExplicitGroup::symmetric(3)));
        let grading = (0..6).map(|i| i % 2).collect();
        assert!(YDModule::new(m, grading).is_err());
    }

    #[test]
    fn conjugator_conjugates() {
        let a = perm(&[&[0, 1], &[2, 3, 4]], 5);
        let b = Perm::canonical_of_type(&p(&[3, 2]));
        let q = conjugator(&a, &b).unwrap();
        assert_eq!(a.conjugate_by(&q), b);
    }
}
