use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{compose, x_basis, DiagramMorphism};
use crate::arith::{rat, Matrix, Rational};
use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};
use crate::perm::{centralizer_elements, Perm};

/// Largest centralizer enumerated by the default idempotent constructors.
const MAX_GROUP: usize = 10_000;

/// An element of `ℚG ⊗ M_k(ℚ)`: a finite sum `Σ_g g ⊗ M_g` with `g` a
/// permutation of degree `n` and `M_g` a `k × k` rational matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupMatrixElement {
    degree: usize,
    dim: usize,
    terms: BTreeMap<Perm, Matrix<Rational>>,
}

impl GroupMatrixElement {
    /// Sums the given terms; entries whose matrices cancel are dropped.
    pub fn new(degree: usize, dim: usize, terms: Vec<(Perm, Matrix<Rational>)>) -> Result<Self> {
        let mut out = GroupMatrixElement {
            degree,
            dim,
            terms: BTreeMap::new(),
        };
        for (g, m) in terms {
            if g.degree() != degree {
                return Err(Error::ShapeMismatch(format!("{g} is not of degree {degree}")));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "coefficient of {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            out.add_term(g, m);
        }
        Ok(out)
    }

    /// A `1 × 1` element `Σ_g c_g g` of the group algebra.
    pub fn from_group_algebra(degree: usize, terms: Vec<(Perm, Rational)>) -> Result<Self> {
        let terms = terms
            .into_iter()
            .map(|(g, c)| (g, Matrix::from_rows(vec![vec![c]])))
            .collect();
        Self::new(degree, 1, terms)
    }

    /// The unit `1 ⊗ I_1`.
    pub fn one(degree: usize) -> Self {
        Self::from_group_algebra(degree, vec![(Perm::identity(degree), Rational::one())]).unwrap()
    }

    /// `1/|G| Σ_g χ(g) g` for a linear character `χ` of the listed group.
    pub fn averaging(degree: usize, group: &[Perm], chi: impl Fn(&Perm) -> i64) -> Result<Self> {
        let scale = Rational::new(1.into(), (group.len() as i64).into());
        Self::from_group_algebra(
            degree,
            group.iter().map(|g| (g.clone(), &scale * rat(chi(g)))).collect(),
        )
    }

    /// `1/|Z| Σ_{g ∈ Z} g` over the centralizer `Z` of `sigma`.
    pub fn trivial_idempotent(sigma: &Perm) -> Result<Self> {
        let group = centralizer_elements(sigma, MAX_GROUP)?;
        Self::averaging(sigma.degree(), &group, |_| 1)
    }

    /// `1/|Z| Σ_{g ∈ Z} sgn(g) g` over the centralizer `Z` of `sigma`.
    pub fn sign_idempotent(sigma: &Perm) -> Result<Self> {
        let group = centralizer_elements(sigma, MAX_GROUP)?;
        Self::averaging(sigma.degree(), &group, Perm::sign)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Size `k` of the matrix coefficients.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Matrix<Rational>> {
        &self.terms
    }

    fn add_term(&mut self, g: Perm, m: Matrix<Rational>) {
        let sum = match self.terms.remove(&g) {
            Some(cur) => cur.add(&m),
            None => m,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    /// Product in `ℚG ⊗ M_k`: `(g ⊗ A)(h ⊗ B) = gh ⊗ AB`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if (self.degree, self.dim) != (other.degree, other.dim) {
            return Err(Error::ShapeMismatch("group-matrix elements of different shape".into()));
        }
        let mut out = GroupMatrixElement {
            degree: self.degree,
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h), a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Whether every group element in the support commutes with `sigma`.
    pub fn supported_on_centralizer(&self, sigma: &Perm) -> bool {
        self.terms.keys().all(|g| g.compose(sigma) == sigma.compose(g))
    }
}

/// `x_g`: the `x_π` basis element of the pair partition `{{i, g(i)'}}`.
pub fn embed_group_element(g: &Perm) -> DiagramMorphism {
    x_basis(&SetPartition::from_permutation(g.images()))
}

/// Linear extension of [`embed_group_element`] to `Σ_g c_g g`.
pub fn embed_group_algebra(degree: usize, terms: &[(Perm, Rational)]) -> Result<DiagramMorphism> {
    let mut out = DiagramMorphism::zero(degree, degree);
    for (g, c) in terms {
        if g.degree() != degree {
            return Err(Error::ShapeMismatch(format!("{g} is not of degree {degree}")));
        }
        out = out.add(&embed_group_element(g).scale(c))?;
    }
    Ok(out)
}

/// Entrywise extension of [`embed_group_element`] to `ℚG ⊗ M_k`.
pub fn embed_group_matrix(e: &GroupMatrixElement) -> Result<BlockMorphism> {
    let (n, k) = (e.degree, e.dim);
    let mut out = BlockMorphism::zero(k, n, n);
    for (g, m) in &e.terms {
        let xg = embed_group_element(g);
        for a in 0..k {
            for b in 0..k {
                let c = m.get(a, b);
                if !c.is_zero() {
                    out.entries[a * k + b] = out.entries[a * k + b].add(&xg.scale(c))?;
                }
            }
        }
    }
    Ok(out)
}

/// A `k × k` matrix of morphisms `X^{⊗k₀} → X^{⊗l₀}`, i.e. a morphism between
/// `k`-fold direct sums. Composition is matrix multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMorphism {
    dim: usize,
    k: usize,
    l: usize,
    entries: Vec<DiagramMorphism>,
}

impl BlockMorphism {
    pub fn zero(dim: usize, k: usize, l: usize) -> Self {
        BlockMorphism {
            dim,
            k,
            l,
            entries: vec![DiagramMorphism::zero(k, l); dim * dim],
        }
    }

    /// `m ⊗ I_dim`.
    pub fn scalar(m: &DiagramMorphism, dim: usize) -> Self {
        let mut out = Self::zero(dim, m.k(), m.l());
        for a in 0..dim {
            out.entries[a * dim + a] = m.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn entry(&self, a: usize, b: usize) -> &DiagramMorphism {
        &self.entries[a * self.dim + b]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(DiagramMorphism::is_zero)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &BlockMorphism) -> Result<BlockMorphism> {
        if self.dim != next.dim {
            return Err(Error::ShapeMismatch("block sizes differ".into()));
        }
        let d = self.dim;
        let mut out = Self::zero(d, self.k, next.l);
        for a in 0..d {
            for c in 0..d {
                let mut acc = DiagramMorphism::zero(self.k, next.l);
                for b in 0..d {
                    let (first, second) = (self.entry(b, c), next.entry(a, b));
                    if first.is_zero() || second.is_zero() {
                        continue;
                    }
                    acc = acc.add(&compose(first, second)?)?;
                }
                out.entries[a * d + c] = acc;
            }
        }
        Ok(out)
    }

    /// Entrywise `self ⊗ m`.
    pub fn tensor_right(&self, m: &DiagramMorphism) -> Result<BlockMorphism> {
        self.map(|e| e.tensor(m), self.k + m.k(), self.l + m.l())
    }

    /// Entrywise `m ⊗ self`.
    pub fn tensor_left(&self, m: &DiagramMorphism) -> Result<BlockMorphism> {
        self.map(|e| m.tensor(e), m.k() + self.k, m.l() + self.l)
    }

    fn map(
        &self,
        f: impl Fn(&DiagramMorphism) -> Result<DiagramMorphism>,
        k: usize,
        l: usize,
    ) -> Result<BlockMorphism> {
        Ok(BlockMorphism {
            dim: self.dim,
            k,
            l,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<serde_json::Value>> = (0..self.dim)
            .map(|a| (0..self.dim).map(|b| self.entry(a, b).to_json()).collect())
            .collect();
        serde_json::json!({"dim": self.dim, "k": self.k, "l": self.l, "entries": rows})
    }
}

/// The diagram `E^i_j` on `n + 1` strands (0-based `i, j < n`): the identity
/// on the first `n` strands with the top of the last strand tied to strand
/// `i` and its bottom tied to strand `j`, read as connected components.
pub fn string_diagram(n: usize, i: usize, j: usize) -> Result<SetPartition> {
    if i >= n || j >= n {
        return Err(Error::InvalidInput(format!("string endpoints {i},{j} out of range for n = {n}")));
    }
    let mut raw: Vec<usize> = (0..n).collect();
    raw.push(i);
    raw.extend(0..n);
    raw.push(j);
    SetPartition::from_labels(n + 1, n + 1, &raw)
}

/// The symmetric braiding `X^{⊗n} ⊗ X → X ⊗ X^{⊗n}` as a plain permutation
/// diagram: strand `i` moves to `i + 1` and the last strand moves to the front.
pub fn cyclic_shift(n: usize) -> DiagramMorphism {
    let images: Vec<usize> = (0..=n).map(|i| (i + 1) % (n + 1)).collect();
    DiagramMorphism::permutation(&images)
}

/// A candidate half-braiding `c_X: Y ⊗ X → X ⊗ Y` on `Y = Im e ⊆ X^{⊗n} ⊗ ℚ^k`.
#[derive(Clone, Debug)]
pub struct HalfBraidingCandidate {
    pub n: usize,
    /// Idempotent on `X^{⊗n} ⊗ ℚ^k` cutting out `Y`.
    pub e: BlockMorphism,
    /// `(e ⊗ Id_X)(1 + Σ_i E^i_{σ(i)} − E^i_i)`; `None` for hand-built candidates.
    pub d1: Option<BlockMorphism>,
    /// `c_X`, already pre-composed with `e ⊗ Id_X`.
    pub c_x: BlockMorphism,
}

/// Builds `e = x(e_V)`, `d_1 = (e ⊗ Id_X)(1_{n+1} + Σ_i (E^i_{σ(i)} − E^i_i))`
/// and `c_X = τ_n ∘ d_1 ∘ (e ⊗ Id_X)`.
///
/// `1_{n+1}` is the identity diagram; the sum is over the points moved by `σ`.
pub fn build_d1(sigma: &Perm, ev: &GroupMatrixElement) -> Result<HalfBraidingCandidate> {
    let n = sigma.degree();
    if ev.degree() != n {
        return Err(Error::ShapeMismatch(format!(
            "idempotent has degree {}, permutation has degree {n}",
            ev.degree()
        )));
    }
    if !ev.supported_on_centralizer(sigma) {
        return Err(Error::InvalidInput(format!(
            "idempotent is not supported on the centralizer of {sigma}"
        )));
    }
    if !ev.is_idempotent() {
        return Err(Error::NotIdempotent("e_V * e_V != e_V".into()));
    }
    let e = embed_group_matrix(ev)?;
    let id_x = DiagramMorphism::identity(1);
    let e_x = e.tensor_right(&id_x)?;

    let mut strings = DiagramMorphism::identity(n + 1);
    for i in 0..n {
        let si = sigma.apply(i);
        if si != i {
            strings = strings
                .add(&DiagramMorphism::from_diagram(string_diagram(n, i, si)?))?
                .sub(&DiagramMorphism::from_diagram(string_diagram(n, i, i)?))?;
        }
    }
    let d1 = BlockMorphism::scalar(&strings, ev.dim()).then(&e_x)?;
    let tau = BlockMorphism::scalar(&cyclic_shift(n), ev.dim());
    let c_x = e_x.then(&d1)?.then(&tau)?;
    Ok(HalfBraidingCandidate {
        n,
        e,
        d1: Some(d1),
        c_x,
    })
}

/// The first center condition that failed, with both sides.
#[derive(Clone, Debug)]
pub struct CenterViolation {
    pub equation: &'static str,
    pub lhs: BlockMorphism,
    pub rhs: BlockMorphism,
}

#[derive(Clone, Debug)]
pub struct CenterReport {
    pub passed: bool,
    pub violation: Option<CenterViolation>,
}

impl CenterReport {
    pub fn to_json(&self) -> serde_json::Value {
        match &self.violation {
            None => serde_json::json!({"passed": true}),
            Some(v) => serde_json::json!({
                "passed": false,
                "equation": v.equation,
                "lhs": v.lhs.to_json(),
                "rhs": v.rhs.to_json(),
            }),
        }
    }
}

/// Checks, identically in `t`, that `c_X` commutes with the Frobenius
/// structure of `X`:
///
/// - unit: `c_X ∘ (e ⊗ π_*) = π_* ⊗ e`
/// - counit: `(π^* ⊗ e) ∘ c_X = e ⊗ π^*`
/// - crossing: `c_{X⊗X} ∘ (e ⊗ π_X) = (π_X ⊗ e) ∘ c_{X⊗X}`
/// - merge: `c_{X⊗X} ∘ (e ⊗ π_H) = (π_H ⊗ e) ∘ c_{X⊗X}`
///
/// with `c_{X⊗X} = (Id_X ⊗ c_X) ∘ (c_X ⊗ Id_X)`.
pub fn check_center(c: &HalfBraidingCandidate) -> Result<CenterReport> {
    let e = &c.e;
    let id_x = DiagramMorphism::identity(1);
    let unit = DiagramMorphism::unit();
    let counit = DiagramMorphism::counit();

    let lhs = e.tensor_right(&unit)?.then(&c.c_x)?;
    if let Some(v) = compare("unit", lhs, e.tensor_left(&unit)?) {
        return Ok(v);
    }
    let lhs = c.c_x.then(&e.tensor_left(&counit)?)?;
    if let Some(v) = compare("counit", lhs, e.tensor_right(&counit)?) {
        return Ok(v);
    }
    let c_xx = c.c_x.tensor_right(&id_x)?.then(&c.c_x.tensor_left(&id_x)?)?;
    for (name, g) in [("crossing", DiagramMorphism::crossing()), ("merge", DiagramMorphism::merge())] {
        let lhs = e.tensor_right(&g)?.then(&c_xx)?;
        let rhs = c_xx.then(&e.tensor_left(&g)?)?;
        if let Some(v) = compare(name, lhs, rhs) {
            return Ok(v);
        }
    }
    Ok(CenterReport {
        passed: true,
        violation: None,
    })
}

fn compare(equation: &'static str, lhs: BlockMorphism, rhs: BlockMorphism) -> Option<CenterReport> {
    (lhs != rhs).then(|| CenterReport {
        passed: false,
        violation: Some(CenterViolation { equation, lhs, rhs }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn perm(n: usize, cycles: &[Vec<usize>]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn identity_of_s1_embeds_as_identity() {
        assert_eq!(embed_group_element(&Perm::identity(1)), DiagramMorphism::identity(1));
    }

    #[test]
    fn group_embedding_is_multiplicative() {
        for n in 2..=3 {
            let all = Perm::all(n);
            assert_eq!(embed_group_element(&Perm::identity(n)), embed_group_element(&all[0]));
            for g in &all {
                for h in &all {
                    let lhs = compose(&embed_group_element(h), &embed_group_element(g)).unwrap();
                    assert_eq!(lhs, embed_group_element(&g.compose(h)), "g={g} h={h}");
                }
            }
        }
    }

    #[test]
    fn string_diagram_blocks() {
        // n = 2: E^0_1 has blocks {1,1',3}, {2,2',3'}.
        let e = string_diagram(2, 0, 1).unwrap();
        assert_eq!(e.signed_blocks(), vec![vec![1, 3, -1], vec![2, -2, -3]]);
        let e = string_diagram(2, 1, 1).unwrap();
        assert_eq!(e.signed_blocks(), vec![vec![1, -1], vec![2, 3, -2, -3]]);
        assert!(string_diagram(2, 2, 0).is_err());
    }

    #[test]
    fn trivial_carrier_gives_identity_braiding() {
        let c = build_d1(&Perm::identity(0), &GroupMatrixElement::one(0)).unwrap();
        assert_eq!(c.c_x, BlockMorphism::scalar(&DiagramMorphism::identity(1), 1));
        assert!(check_center(&c).unwrap().passed);
    }

    #[test]
    fn identity_in_s1_passes() {
        let c = build_d1(&Perm::identity(1), &GroupMatrixElement::one(1)).unwrap();
        assert_eq!(c.c_x, BlockMorphism::scalar(&DiagramMorphism::crossing(), 1));
        assert!(check_center(&c).unwrap().passed);
    }

    #[test]
    fn transposition_candidates_pass() {
        let sigma = perm(2, &[vec![0, 1]]);
        for ev in [
            GroupMatrixElement::trivial_idempotent(&sigma).unwrap(),
            GroupMatrixElement::sign_idempotent(&sigma).unwrap(),
        ] {
            let c = build_d1(&sigma, &ev).unwrap();
            let r = check_center(&c).unwrap();
            assert!(r.passed, "{:?}", r.violation.map(|v| v.equation));
        }
    }

    #[test]
    fn matrix_valued_idempotent_passes() {
        let sigma = perm(2, &[vec![0, 1]]);
        let half = ratio(1, 2);
        let m = Matrix::from_rows(vec![vec![half.clone(), rat(0)], vec![rat(0), rat(0)]]);
        let ev = GroupMatrixElement::new(2, 2, vec![(Perm::identity(2), m.clone()), (sigma.clone(), m)]).unwrap();
        let c = build_d1(&sigma, &ev).unwrap();
        assert!(check_center(&c).unwrap().passed);
    }

    #[test]
    fn double_transposition_candidates_pass() {
        let sigma = perm(4, &[vec![0, 1], vec![2, 3]]);
        for ev in [
            GroupMatrixElement::trivial_idempotent(&sigma).unwrap(),
            GroupMatrixElement::sign_idempotent(&sigma).unwrap(),
        ] {
            let c = build_d1(&sigma, &ev).unwrap();
            assert!(check_center(&c).unwrap().passed);
        }
    }

    #[test]
    fn zero_braiding_fails_unit_condition() {
        let c = HalfBraidingCandidate {
            n: 1,
            e: BlockMorphism::scalar(&DiagramMorphism::identity(1), 1),
            d1: None,
            c_x: BlockMorphism::zero(1, 2, 2),
        };
        let r = check_center(&c).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violation.unwrap().equation, "unit");
    }

    #[test]
    fn rejects_bad_idempotents() {
        let sigma = perm(2, &[vec![0, 1]]);
        let not_idem = GroupMatrixElement::from_group_algebra(2, vec![(sigma.clone(), rat(1))]).unwrap();
        assert!(matches!(build_d1(&sigma, &not_idem), Err(Error::NotIdempotent(_))));
        let sigma3 = perm(3, &[vec![0, 1]]);
        let outside = GroupMatrixElement::from_group_algebra(3, vec![(perm(3, &[vec![1, 2]]), rat(1))]).unwrap();
        assert!(matches!(build_d1(&sigma3, &outside), Err(Error::InvalidInput(_))));
    }
}
