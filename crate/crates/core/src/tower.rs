//! The tower `⊕_n Z(Rep S_n)` at the level of labels: simple objects, the
//! induction product `⊙`, and the graded Grothendieck ring of the center of
//! `Rep S_t`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use serde_json::{json, Value};

use crate::centralizer::{
    centralizer_classes, centralizer_irreps, centralizer_structure, decompose_induction, CentralizerIrrep,
    MultiPartition,
};
use crate::combinatorics::{factorial, partitions_of, CycleType, IntPartition};
use crate::error::{Error, Result};

static MAX_DEGREE: AtomicU32 = AtomicU32::new(10);

/// Largest total degree handled by tower operations (default 10).
pub fn max_tower_degree() -> u32 {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_tower_degree(cap: u32) {
    MAX_DEGREE.store(cap, Ordering::Relaxed);
}

/// Largest centralizer order used by [`odot`].
pub const MAX_CENTRALIZER_ORDER: u128 = 100_000;

fn check_degree(n: u32) -> Result<()> {
    let cap = max_tower_degree();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "tower degree",
            value: n as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// The simple object `W_{σ,Λ} = Ind_{Z(σ)}^{S_n}(Λ)` of `Z(Rep S_n)`, with `σ`
/// of cycle type `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterSimple {
    n: u32,
    mu: CycleType,
    irrep: CentralizerIrrep,
}

impl CenterSimple {
    pub fn new(mu: CycleType, irrep: CentralizerIrrep) -> Result<Self> {
        if irrep.descriptor() != centralizer_structure(&mu) {
            return Err(Error::ShapeMismatch(format!("{irrep} is not an irreducible of Z({mu})")));
        }
        Ok(CenterSimple {
            n: mu.size(),
            mu,
            irrep,
        })
    }

    /// The tensor unit, living in degree 0.
    pub fn unit() -> Self {
        CenterSimple {
            n: 0,
            mu: IntPartition::empty(),
            irrep: CentralizerIrrep::unit(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> &CycleType {
        &self.mu
    }

    pub fn irrep(&self) -> &CentralizerIrrep {
        &self.irrep
    }

    /// `[S_n : Z(μ)] · dim Λ`.
    pub fn dim(&self) -> Result<u128> {
        Ok(factorial(self.n) / self.mu.centralizer_order() * self.irrep.dim()? as u128)
    }

    /// A readable name when `Z(μ)` is a single `Z_k ≀ S_2`, following the
    /// `V^{ζ,ε}` / `V_2^{ζ1,ζ2}` naming.
    pub fn name(&self) -> Option<String> {
        wreath_pair_name(&self.irrep)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"n": self.n, "mu": self.mu, "irrep": self.irrep.to_json()});
        if let Some(name) = self.name() {
            v["name"] = Value::from(name);
        }
        v
    }

    /// Accepts `{"mu": [...], "irrep": "triv" | "sign" | {"factors": …}}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("center simple json: {m}"));
        let mu: CycleType =
            serde_json::from_value(v.get("mu").cloned().ok_or_else(|| bad("missing mu"))?).map_err(|e| bad(&e.to_string()))?;
        let desc = centralizer_structure(&mu);
        let irrep = match v.get("irrep") {
            Some(Value::String(s)) if s == "triv" || s == "unit" => CentralizerIrrep::trivial(&desc),
            Some(Value::String(s)) if s == "sign" => CentralizerIrrep::sign(&desc),
            Some(Value::String(s)) => return Err(bad(&format!("unknown irrep name {s:?}"))),
            Some(obj @ Value::Object(_)) => CentralizerIrrep::from_json(obj)?,
            _ => return Err(bad("missing irrep")),
        };
        Self::new(mu, irrep)
    }
}

impl fmt::Display for CenterSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}; {}]", self.mu, self.irrep)
    }
}

fn root_name(k: u32, j: usize) -> String {
    match (k, j) {
        (_, 0) => "+1".to_string(),
        (2, 1) => "-1".to_string(),
        _ => format!("ζ{k}^{j}"),
    }
}

fn wreath_pair_name(irrep: &CentralizerIrrep) -> Option<String> {
    let [(k, l)] = irrep.factors() else {
        return None;
    };
    if l.size() != 2 {
        return None;
    }
    let nonempty: Vec<(usize, &IntPartition)> =
        l.components().iter().enumerate().filter(|(_, p)| !p.is_empty()).collect();
    match nonempty.as_slice() {
        [(j, p)] => {
            let eps = if p.parts() == [2] { "+1" } else { "-1" };
            Some(format!("V^{{{},{eps}}}", root_name(*k, *j)))
        }
        [_, _] if *k == 2 => Some("V_2".to_string()),
        [(a, _), (b, _)] => Some(format!("V_2^{{{},{}}}", root_name(*k, *a), root_name(*k, *b))),
        _ => None,
    }
}

/// A finite integer combination of center simples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TowerElement {
    terms: BTreeMap<CenterSimple, i64>,
}

impl TowerElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_simple(s: CenterSimple) -> Self {
        let mut out = Self::zero();
        out.add_term(s, 1);
        out
    }

    pub fn add_term(&mut self, s: CenterSimple, k: i64) {
        let e = self.terms.entry(s.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, &k) in &other.terms {
            out.add_term(s.clone(), k);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<CenterSimple, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &CenterSimple) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    /// Bilinear extension of [`odot`].
    pub fn odot(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (a, &ka) in &self.terms {
            for (b, &kb) in &other.terms {
                for (s, k) in odot(a, b)?.terms {
                    out.add_term(s, k * ka * kb);
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(s, k)| json!({"simple": s.to_json(), "multiplicity": k}))
            .collect();
        json!({ "terms": terms })
    }
}

/// All simples `(μ ⊢ n, Λ ∈ Irr Z(μ))` of `Z(Rep S_n)`.
pub fn center_simples(n: u32) -> Result<Vec<CenterSimple>> {
    check_degree(n)?;
    let mut out = Vec::new();
    for mu in partitions_of(n) {
        for irrep in centralizer_irreps(&centralizer_structure(&mu)) {
            out.push(CenterSimple {
                n,
                mu: mu.clone(),
                irrep,
            });
        }
    }
    Ok(out)
}

/// `Σ_{μ ⊢ n}` (number of conjugacy classes of `Z(μ)`), the rank of the
/// Grothendieck group of `Z(Rep S_n)`.
pub fn k0_rank_center(n: u32) -> Result<u64> {
    check_degree(n)?;
    let mut total = 0;
    for mu in partitions_of(n) {
        total += centralizer_classes(&centralizer_structure(&mu))?.len() as u64;
    }
    Ok(total)
}

/// `a ⊙ b`, supported on the cycle type `μ ⊔ ν` with `σ` acting on the first
/// `n` points and `τ` on the last `m`.
pub fn odot(a: &CenterSimple, b: &CenterSimple) -> Result<TowerElement> {
    check_degree(a.n + b.n)?;
    let mu = a.mu.union(&b.mu);
    let order = centralizer_structure(&mu).order();
    if order > MAX_CENTRALIZER_ORDER {
        return Err(Error::CapExceeded {
            what: "centralizer order",
            value: order as u64,
            cap: MAX_CENTRALIZER_ORDER as u64,
        });
    }
    let mut out = TowerElement::zero();
    for (irrep, k) in decompose_induction(&a.irrep, &b.irrep)? {
        out.add_term(CenterSimple::new(mu.clone(), irrep)?, k as i64);
    }
    Ok(out)
}

/// The label `(μ₀, V₀, λ)` of the basis element `[W̄_{μ₀,V₀,X_λ}]` of the
/// graded Grothendieck ring of `Z(Rep S_t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrK0Basis {
    mu0: CycleType,
    v0: CentralizerIrrep,
    lambda: IntPartition,
}

impl GrK0Basis {
    pub fn new(mu0: CycleType, v0: CentralizerIrrep, lambda: IntPartition) -> Result<Self> {
        if !mu0.is_singleton_free() {
            return Err(Error::InvalidInput(format!("{mu0} has fixed points")));
        }
        if v0.descriptor() != centralizer_structure(&mu0) {
            return Err(Error::ShapeMismatch(format!("{v0} is not an irreducible of Z({mu0})")));
        }
        Ok(GrK0Basis { mu0, v0, lambda })
    }

    /// `(∅, unit, λ)`: the image of `X_λ` under the symmetric-braiding embedding.
    pub fn from_repst(lambda: IntPartition) -> Self {
        GrK0Basis {
            mu0: IntPartition::empty(),
            v0: CentralizerIrrep::unit(),
            lambda,
        }
    }

    pub fn mu0(&self) -> &CycleType {
        &self.mu0
    }

    pub fn v0(&self) -> &CentralizerIrrep {
        &self.v0
    }

    pub fn lambda(&self) -> &IntPartition {
        &self.lambda
    }

    /// Filtration degree `|μ₀| + |λ|`.
    pub fn degree(&self) -> u32 {
        self.mu0.size() + self.lambda.size()
    }

    pub fn to_json(&self) -> Value {
        json!({"mu0": self.mu0, "v0": self.v0.to_json(), "lambda": self.lambda})
    }

    /// Accepts `{"mu0": [...], "v0": "triv" | "sign" | {"factors": …}, "lambda": [...]}`;
    /// `v0` may be omitted when `mu0` is empty.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("grk0 basis json: {m}"));
        let parse = |key: &str| -> Result<IntPartition> {
            match v.get(key) {
                None => Ok(IntPartition::empty()),
                Some(x) => serde_json::from_value(x.clone()).map_err(|e| bad(&e.to_string())),
            }
        };
        let mu0 = parse("mu0")?;
        let lambda = parse("lambda")?;
        let desc = centralizer_structure(&mu0);
        let v0 = match v.get("v0") {
            None | Some(Value::Null) => CentralizerIrrep::trivial(&desc),
            Some(Value::String(s)) if s == "triv" || s == "unit" => CentralizerIrrep::trivial(&desc),
            Some(Value::String(s)) if s == "sign" => CentralizerIrrep::sign(&desc),
            Some(Value::String(s)) => return Err(bad(&format!("unknown irrep name {s:?}"))),
            Some(obj) => CentralizerIrrep::from_json(obj)?,
        };
        Self::new(mu0, v0, lambda)
    }
}

impl fmt::Display for GrK0Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W̄[{}; {}; X{}]", self.mu0, self.v0, self.lambda)
    }
}

/// Splits off the fixed points: `Z(μ) ≅ Z(μ₀) × S_r` and `Λ ≅ V₀ ⊠ S^λ`.
pub fn grk0_bijection(s: &CenterSimple) -> GrK0Basis {
    let lambda = s
        .irrep
        .factor(1)
        .map(|l| l.component(0).clone())
        .unwrap_or_else(IntPartition::empty);
    GrK0Basis {
        mu0: s.mu.without_ones(),
        v0: s.irrep.without_factor(1),
        lambda,
    }
}

/// Reattaches `|λ|` fixed points carrying `S^λ`.
pub fn grk0_bijection_inv(g: &GrK0Basis) -> Result<CenterSimple> {
    let r = g.lambda.size();
    let mu = g.mu0.union(&IntPartition::from_unsorted(vec![1; r as usize]));
    let irrep = g.v0.with_factor(1, MultiPartition::single(1, 0, g.lambda.clone()));
    CenterSimple::new(mu, irrep)
}

/// Structure constants of the graded Grothendieck ring of `Z(Rep S_t)` in
/// the `W̄` basis, transported from `⊙` through [`grk0_bijection`].
pub fn grk0_center_product(g1: &GrK0Basis, g2: &GrK0Basis) -> Result<BTreeMap<GrK0Basis, i64>> {
    let prod = odot(&grk0_bijection_inv(g1)?, &grk0_bijection_inv(g2)?)?;
    let mut out = BTreeMap::new();
    for (s, k) in prod.terms() {
        *out.entry(grk0_bijection(s)).or_insert(0) += k;
    }
    Ok(out)
}

/// Supplies the block structure of `Rep S_d` on the labels `λ` of `X_λ`.
pub trait BlockOracle {
    /// An opaque block identifier; labels with equal ids lie in one block.
    fn block_id(&self, lambda: &IntPartition, d: i64) -> String;
}

/// Treats every `X_λ` as its own block, which is correct for generic `t`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GenericBlocks;

impl BlockOracle for GenericBlocks {
    fn block_id(&self, lambda: &IntPartition, _d: i64) -> String {
        format!("{lambda}")
    }
}

/// The triple `(μ₀, V₀, B)` parametrizing the block of `W̄_{μ₀,V₀,X_λ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockLabel {
    pub mu0: CycleType,
    pub v0: CentralizerIrrep,
    pub block: String,
}

impl BlockLabel {
    pub fn to_json(&self) -> Value {
        json!({"mu0": self.mu0, "v0": self.v0.to_json(), "block": self.block})
    }
}

/// Block of `W̄_{μ₀,V₀,X_λ}`: the `(μ₀, V₀)` part together with the block of
/// `X_λ` in `Rep S_{t−|μ₀|}`. With `t = None` (generic) every label is its
/// own block regardless of the oracle.
pub fn block_label(g: &GrK0Basis, t: Option<i64>, oracle: &dyn BlockOracle) -> BlockLabel {
    let block = match t {
        None => GenericBlocks.block_id(&g.lambda, 0),
        Some(t) => oracle.block_id(&g.lambda, t - g.mu0.size() as i64),
    };
    BlockLabel {
        mu0: g.mu0.clone(),
        v0: g.v0.clone(),
        block,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sn::grk0_repst_product;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn simple(mu: &[u32], name: &str) -> CenterSimple {
        CenterSimple::from_json(&json!({"mu": mu, "irrep": name})).unwrap()
    }

    fn names(t: &TowerElement) -> Vec<(String, i64)> {
        let mut v: Vec<_> = t.terms().iter().map(|(s, k)| (s.name().unwrap(), *k)).collect();
        v.sort();
        v
    }

    #[test]
    fn simple_counts() {
        assert_eq!(center_simples(0).unwrap().len(), 1);
        assert_eq!(center_simples(3).unwrap().len(), 8);
        assert_eq!(center_simples(4).unwrap().len(), 21);
        for n in 0..=6 {
            assert_eq!(center_simples(n).unwrap().len() as u64, k0_rank_center(n).unwrap());
        }
        assert_eq!(k0_rank_center(1).unwrap(), 1);
    }

    #[test]
    fn transposition_products() {
        let (t, s) = (simple(&[2], "triv"), simple(&[2], "sign"));
        let tt = odot(&t, &t).unwrap();
        assert_eq!(names(&tt), vec![("V^{+1,+1}".into(), 1), ("V^{+1,-1}".into(), 1)]);
        let ss = odot(&s, &s).unwrap();
        assert_eq!(names(&ss), vec![("V^{-1,+1}".into(), 1), ("V^{-1,-1}".into(), 1)]);
        let ts = odot(&t, &s).unwrap();
        assert_eq!(names(&ts), vec![("V_2".into(), 1)]);
        assert_eq!(ts, odot(&s, &t).unwrap());
    }

    #[test]
    fn unit_is_neutral() {
        let u = CenterSimple::unit();
        for s in center_simples(3).unwrap() {
            assert_eq!(odot(&u, &s).unwrap(), TowerElement::from_simple(s.clone()));
            assert_eq!(odot(&s, &u).unwrap(), TowerElement::from_simple(s));
        }
    }

    #[test]
    fn dimensions_multiply() {
        for a in center_simples(2).unwrap() {
            for b in center_simples(3).unwrap() {
                let prod = odot(&a, &b).unwrap();
                let mu = a.mu().union(b.mu());
                let index = centralizer_structure(&mu).order()
                    / (a.mu().centralizer_order() * b.mu().centralizer_order());
                let lhs: u128 = prod.terms().iter().map(|(s, k)| s.irrep().dim().unwrap() as u128 * *k as u128).sum();
                assert_eq!(lhs, index * (a.irrep().dim().unwrap() * b.irrep().dim().unwrap()) as u128);
                assert!(prod.terms().keys().all(|s| s.mu() == &mu));
            }
        }
    }

    #[test]
    fn bijection_examples() {
        let s = simple(&[1], "triv");
        assert_eq!(grk0_bijection(&s), GrK0Basis::from_repst(p(&[1])));
        let d = centralizer_structure(&p(&[2, 1, 1]));
        let irrep = CentralizerIrrep::trivial(&d).with_factor(1, MultiPartition::single(1, 0, p(&[1, 1])));
        let s = CenterSimple::new(p(&[2, 1, 1]), irrep).unwrap();
        let g = grk0_bijection(&s);
        assert_eq!(g.mu0(), &p(&[2]));
        assert_eq!(g.v0(), &CentralizerIrrep::trivial(&centralizer_structure(&p(&[2]))));
        assert_eq!(g.lambda(), &p(&[1, 1]));
        for n in 0..=5 {
            for s in center_simples(n).unwrap() {
                assert_eq!(grk0_bijection_inv(&grk0_bijection(&s)).unwrap(), s);
            }
        }
    }

    #[test]
    fn grk0_examples() {
        let x1 = GrK0Basis::from_repst(p(&[1]));
        let prod = grk0_center_product(&x1, &x1).unwrap();
        let want: BTreeMap<_, _> = grk0_repst_product(&p(&[1]), &p(&[1]))
            .into_iter()
            .map(|(nu, c)| (GrK0Basis::from_repst(nu), c as i64))
            .collect();
        assert_eq!(prod, want);
        let unit = GrK0Basis::from_repst(IntPartition::empty());
        assert_eq!(grk0_center_product(&unit, &x1).unwrap(), BTreeMap::from([(x1.clone(), 1)]));
    }

    #[test]
    fn generic_blocks_separate_everything() {
        let a = GrK0Basis::from_repst(p(&[1]));
        let b = GrK0Basis::from_repst(p(&[2]));
        assert_ne!(block_label(&a, None, &GenericBlocks), block_label(&b, None, &GenericBlocks));
        struct OneBlock;
        impl BlockOracle for OneBlock {
            fn block_id(&self, _: &IntPartition, _: i64) -> String {
                "all".into()
            }
        }
        assert_eq!(block_label(&a, Some(5), &OneBlock), block_label(&b, Some(5), &OneBlock));
        let c = GrK0Basis::new(p(&[2]), CentralizerIrrep::trivial(&centralizer_structure(&p(&[2]))), p(&[1])).unwrap();
        assert_ne!(block_label(&a, Some(5), &OneBlock), block_label(&c, Some(5), &OneBlock));
    }
}
