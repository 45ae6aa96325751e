use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::arith::{rational_from_json, rational_json, Poly, Rational};
use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};

static MAX_POINTS: AtomicUsize = AtomicUsize::new(12);

/// Largest `k + l` accepted by morphism arithmetic (default 12).
pub fn max_points() -> usize {
    MAX_POINTS.load(Ordering::Relaxed)
}

pub fn set_max_points(cap: usize) {
    MAX_POINTS.store(cap, Ordering::Relaxed);
}

fn check_points(k: usize, l: usize) -> Result<()> {
    let cap = max_points();
    if k + l > cap {
        return Err(Error::CapExceeded {
            what: "diagram points",
            value: (k + l) as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// A morphism `X^{⊗k} → X^{⊗l}` of `Rep S_t`: a finite linear combination of
/// partition diagrams with coefficients in `ℚ[t]`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagramMorphism {
    k: usize,
    l: usize,
    terms: BTreeMap<SetPartition, Poly>,
}

impl DiagramMorphism {
    pub fn zero(k: usize, l: usize) -> Self {
        DiagramMorphism {
            k,
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(pi: SetPartition) -> Self {
        Self::from_term(pi, Poly::one())
    }

    pub fn from_term(pi: SetPartition, coeff: Poly) -> Self {
        let mut m = Self::zero(pi.k(), pi.l());
        if !coeff.is_zero() {
            m.terms.insert(pi, coeff);
        }
        m
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(SetPartition::identity(k))
    }

    /// The unit `π_*: 𝟙 → X`.
    pub fn unit() -> Self {
        Self::from_diagram(SetPartition::from_labels(0, 1, &[0u8]).unwrap())
    }

    /// The counit `π^*: X → 𝟙`.
    pub fn counit() -> Self {
        Self::from_diagram(SetPartition::from_labels(1, 0, &[0u8]).unwrap())
    }

    /// The crossing `π_X` on `X ⊗ X`.
    pub fn crossing() -> Self {
        Self::from_diagram(SetPartition::from_permutation(&[1, 0]))
    }

    /// `π_H`: the two identity strands joined into one block.
    pub fn merge() -> Self {
        Self::from_diagram(SetPartition::from_labels(2, 2, &[0u8; 4]).unwrap())
    }

    /// Plain permutation diagram `{{i, g(i)'}}` (no `x_π` correction).
    pub fn permutation(images: &[usize]) -> Self {
        Self::from_diagram(SetPartition::from_permutation(images))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, Poly> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pi: &SetPartition) -> Poly {
        self.terms.get(pi).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_term(&mut self, pi: SetPartition, coeff: &Poly) {
        assert_eq!((pi.k(), pi.l()), (self.k, self.l), "term shape mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&pi) {
            Some(c) => {
                *c = &*c + coeff;
                if c.is_zero() {
                    self.terms.remove(&pi);
                }
            }
            None => {
                self.terms.insert(pi, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.add_term(pi.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.k, self.l);
        }
        DiagramMorphism {
            k: self.k,
            l: self.l,
            terms: self.terms.iter().map(|(p, q)| (p.clone(), q.scale(c))).collect(),
        }
    }

    pub fn scale_poly(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.k, self.l);
        for (p, q) in &self.terms {
            out.add_term(p.clone(), &(q * c));
        }
        out
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.k, self.l) != (other.k, other.l) {
            return Err(Error::ShapeMismatch(format!(
                "{}->{} vs {}->{}",
                self.k, self.l, other.k, other.l
            )));
        }
        Ok(())
    }

    /// `then ∘ self`: `self` stacked above `then`, closed components removed
    /// at a factor of `t` each.
    pub fn then(&self, then: &DiagramMorphism) -> Result<DiagramMorphism> {
        compose(self, then)
    }

    /// Horizontal juxtaposition with `self` on the left.
    pub fn tensor(&self, right: &DiagramMorphism) -> Result<DiagramMorphism> {
        tensor(self, right)
    }

    /// Evaluates every coefficient at `t = d`.
    pub fn specialize(&self, d: i64) -> BTreeMap<SetPartition, Rational> {
        self.terms
            .iter()
            .map(|(p, c)| (p.clone(), crate::arith::poly_eval(c, d)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                json!({
                    "blocks": p.signed_blocks(),
                    "coeff": c.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({"k": self.k, "l": self.l, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidInput(format!("morphism json: {m}"));
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| bad("missing k"))? as usize;
        let l = v.get("l").and_then(Value::as_u64).ok_or_else(|| bad("missing l"))? as usize;
        check_points(k, l)?;
        let mut out = Self::zero(k, l);
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        for term in terms {
            let blocks: Vec<Vec<i64>> = serde_json::from_value(
                term.get("blocks").cloned().ok_or_else(|| bad("missing blocks"))?,
            )
            .map_err(|e| bad(&e.to_string()))?;
            let coeff = term
                .get("coeff")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing coeff"))?
                .iter()
                .map(|c| rational_from_json(c).ok_or_else(|| bad("bad coefficient")))
                .collect::<Result<Vec<_>>>()?;
            let pi = SetPartition::from_signed_blocks(k, l, &blocks)?;
            out.add_term(pi, &Poly::from_coeffs(coeff));
        }
        Ok(out)
    }
}

/// `b ∘ a`: stack `a` above `b`, identify `a`'s lower points with `b`'s upper
/// points, and multiply by `t^ℓ` for the `ℓ` closed components removed.
pub fn compose(a: &DiagramMorphism, b: &DiagramMorphism) -> Result<DiagramMorphism> {
    if a.l != b.k {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose {}->{} with {}->{}",
            a.k, a.l, b.k, b.l
        )));
    }
    check_points(a.k, a.l)?;
    check_points(b.k, b.l)?;
    check_points(a.k, b.l)?;
    let mut acc: HashMap<SetPartition, Poly> = HashMap::new();
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            let (pi, loops) = pa.compose(pb)?;
            let c = (ca * cb).shift(loops);
            match acc.get_mut(&pi) {
                Some(cur) => *cur = &*cur + &c,
                None => {
                    acc.insert(pi, c);
                }
            }
        }
    }
    Ok(DiagramMorphism {
        k: a.k,
        l: b.l,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    })
}

/// Horizontal juxtaposition, `a` on the left.
pub fn tensor(a: &DiagramMorphism, b: &DiagramMorphism) -> Result<DiagramMorphism> {
    check_points(a.k + b.k, a.l + b.l)?;
    let mut out = DiagramMorphism::zero(a.k + b.k, a.l + b.l);
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            out.add_term(pa.tensor(pb), &(ca * cb));
        }
    }
    Ok(out)
}

impl fmt::Debug for DiagramMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DiagramMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0[{}->{}]", self.k, self.l);
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("({c})·{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
