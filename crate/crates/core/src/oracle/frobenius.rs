//! The Frobenius monoidal structure of induction `Ind_G^H`, materialized as
//! matrices and checked axiom by axiom.
//!
//! With `F = Ind_G^H` on the basis `r_i ⊗ v` (left coset representatives
//! `r_i`):
//!
//! - `μ_{V,W}((h⊗v)⊗(k⊗w)) = h⊗(v⊗h⁻¹kw)` if `h⁻¹k ∈ G`, else `0`;
//! - `δ_{V,W}(h⊗(v⊗w)) = (h⊗v)⊗(h⊗w)`;
//! - `η(1) = Σ_i r_i⊗1`, `ε(r_i⊗1) = 1`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::arith::{Cyclotomic, SparseMatrix};
use crate::error::{Error, Result};

use super::{brute_induce, ExplicitGroup, ExplicitModule, LeftCosets};

type Sparse = SparseMatrix<Cyclotomic>;

/// Largest ambient group accepted by [`frobenius_check`].
pub const MAX_FROBENIUS_ORDER: usize = 200;

/// Outcome of [`frobenius_check`], one flag per axiom family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    /// `μ, δ, η, ε` commute with the `H`-actions.
    pub equivariant: bool,
    /// `μ_{V,W} ∘ δ_{V,W} = id`.
    pub separable: bool,
    /// `δ ∘ μ` is an idempotent on `F(V)⊗F(W)` of rank `dim F(V⊗W)`.
    pub idempotent: bool,
    /// Both Frobenius compatibilities, on `(V, W, V)` and `(W, V, W)`.
    pub frobenius: bool,
    /// Associativity of `μ` and coassociativity of `δ`.
    pub associative: bool,
    /// Unit axioms for `(μ, η)` and counit axioms for `(δ, ε)`.
    pub unital: bool,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.equivariant && self.separable && self.idempotent && self.frobenius && self.associative && self.unital
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "equivariant": self.equivariant,
            "separable": self.separable,
            "idempotent": self.idempotent,
            "frobenius": self.frobenius,
            "associative": self.associative,
            "unital": self.unital,
        })
    }
}

/// Induction data shared by all structure maps.
struct Induction<'a> {
    sub: &'a ExplicitGroup,
    big: &'a Arc<ExplicitGroup>,
    cosets: LeftCosets,
}

impl Induction<'_> {
    fn index(&self) -> usize {
        self.cosets.len()
    }

    /// The `H`-action on `F(V)`, as sparse matrices.
    fn action(&self, v: &ExplicitModule) -> Result<Vec<Sparse>> {
        let m = brute_induce(self.sub, self.big, v)?;
        Ok((0..self.big.order()).map(|g| SparseMatrix::from_dense(m.matrix(g))).collect())
    }

    /// `μ_{V,W}: F(V)⊗F(W) → F(V⊗W)`.
    fn mu(&self, v: &ExplicitModule, w: &ExplicitModule) -> Sparse {
        let (k, dv, dw) = (self.index(), v.dim(), w.dim());
        let mut out = SparseMatrix::zeros(k * dv * dw, k * dv * k * dw);
        for i in 0..k {
            let h = self.big.element(self.cosets.rep(i));
            for j in 0..k {
                let kk = self.big.element(self.cosets.rep(j));
                let Some(x) = self.sub.index_of(&h.inverse().compose(kk)) else {
                    continue;
                };
                let act = w.matrix(x);
                for b in 0..dv {
                    for c in 0..dw {
                        let col = (i * dv + b) * (k * dw) + j * dw + c;
                        for c2 in 0..dw {
                            let a = act.get(c2, c);
                            if !a.is_zero() {
                                out.add_entry((i * dv + b) * dw + c2, col, a.clone());
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `δ_{V,W}: F(V⊗W) → F(V)⊗F(W)`.
    fn delta(&self, dv: usize, dw: usize) -> Sparse {
        let k = self.index();
        let mut out = SparseMatrix::zeros(k * dv * k * dw, k * dv * dw);
        for i in 0..k {
            for b in 0..dv {
                for c in 0..dw {
                    out.add_entry((i * dv + b) * (k * dw) + i * dw + c, (i * dv + b) * dw + c, Cyclotomic::one());
                }
            }
        }
        out
    }

    /// `η: 𝟙 → F(𝟙)`.
    fn eta(&self) -> Sparse {
        let mut out = SparseMatrix::zeros(self.index(), 1);
        for i in 0..self.index() {
            out.add_entry(i, 0, Cyclotomic::one());
        }
        out
    }

    /// `ε: F(𝟙) → 𝟙`.
    fn epsilon(&self) -> Sparse {
        let mut out = SparseMatrix::zeros(1, self.index());
        for i in 0..self.index() {
            out.add_entry(0, i, Cyclotomic::one());
        }
        out
    }
}

fn id(n: usize) -> Sparse {
    SparseMatrix::identity(n)
}

fn trace(m: &Sparse) -> Cyclotomic {
    (0..m.ncols()).fold(Cyclotomic::zero(), |acc, c| match m.column(c).get(&c) {
        Some(v) => &acc + v,
        None => acc,
    })
}

/// `f ∘ ρ_src(g) = ρ_tgt(g) ∘ f` for every `g`.
fn intertwines(f: &Sparse, src: &[Sparse], tgt: &[Sparse]) -> bool {
    src.iter().zip(tgt).all(|(s, t)| f.compose(s) == t.compose(f))
}

fn tensor_actions(a: &[Sparse], b: &[Sparse]) -> Vec<Sparse> {
    a.iter().zip(b).map(|(x, y)| x.kron(y)).collect()
}

/// Materializes the lax structure `(μ, η)` and oplax structure `(δ, ε)` of
/// `Ind_G^H` for the `G`-modules `V`, `W` and checks equivariance,
/// separability, the two Frobenius compatibilities, (co)associativity and
/// the (co)unit axioms.
pub fn frobenius_check(
    sub: &ExplicitGroup,
    big: &Arc<ExplicitGroup>,
    v: &ExplicitModule,
    w: &ExplicitModule,
) -> Result<FrobeniusReport> {
    if big.order() > MAX_FROBENIUS_ORDER {
        return Err(Error::CapExceeded {
            what: "ambient group order",
            value: big.order() as u64,
            cap: MAX_FROBENIUS_ORDER as u64,
        });
    }
    if **v.group() != *sub || **w.group() != *sub {
        return Err(Error::ShapeMismatch("modules are not over the subgroup".into()));
    }
    let ind = Induction {
        sub,
        big,
        cosets: LeftCosets::new(sub, big)?,
    };
    let k = ind.index();
    let one = ExplicitModule::trivial(v.group().clone());
    let vw = v.tensor(w)?;
    let (dv, dw) = (v.dim(), w.dim());
    let (fv, fw) = (k * dv, k * dw);

    let mu = ind.mu(v, w);
    let delta = ind.delta(dv, dw);

    // Equivariance.
    let act_v = ind.action(v)?;
    let act_w = ind.action(w)?;
    let act_vw = ind.action(&vw)?;
    let act_one = ind.action(&one)?;
    let trivial_h = vec![id(1); big.order()];
    let act_v_w = tensor_actions(&act_v, &act_w);
    let equivariant = intertwines(&mu, &act_v_w, &act_vw)
        && intertwines(&delta, &act_vw, &act_v_w)
        && intertwines(&ind.eta(), &trivial_h, &act_one)
        && intertwines(&ind.epsilon(), &act_one, &trivial_h);

    // Separability and the induced idempotent.
    let separable = mu.compose(&delta) == id(k * dv * dw);
    let e = delta.compose(&mu);
    let idempotent = e.compose(&e) == e && trace(&e) == Cyclotomic::from_i64((k * dv * dw) as i64);

    // Frobenius compatibilities on (V, W, V) and (W, V, W).
    let mut frobenius = true;
    let mut associative = true;
    for (a, b, c) in [(v, w, v), (w, v, w)] {
        let (da, db, dc) = (a.dim(), b.dim(), c.dim());
        let ab = a.tensor(b)?;
        let bc = b.tensor(c)?;
        // F(A)⊗F(B⊗C) → F(A⊗B)⊗F(C)
        let lhs1 = ind.mu(a, b).kron(&id(k * dc)).compose(&id(k * da).kron(&ind.delta(db, dc)));
        let rhs1 = ind.delta(da * db, dc).compose(&ind.mu(a, &bc));
        // F(A⊗B)⊗F(C) → F(A)⊗F(B⊗C)
        let lhs2 = id(k * da).kron(&ind.mu(b, c)).compose(&ind.delta(da, db).kron(&id(k * dc)));
        let rhs2 = ind.delta(da, db * dc).compose(&ind.mu(&ab, c));
        frobenius &= lhs1 == rhs1 && lhs2 == rhs2;

        // F(A)⊗F(B)⊗F(C) → F(A⊗B⊗C)
        let m_left = ind.mu(&ab, c).compose(&ind.mu(a, b).kron(&id(k * dc)));
        let m_right = ind.mu(a, &bc).compose(&id(k * da).kron(&ind.mu(b, c)));
        // F(A⊗B⊗C) → F(A)⊗F(B)⊗F(C)
        let d_left = ind.delta(da, db).kron(&id(k * dc)).compose(&ind.delta(da * db, dc));
        let d_right = id(k * da).kron(&ind.delta(db, dc)).compose(&ind.delta(da, db * dc));
        associative &= m_left == m_right && d_left == d_right;
    }

    // (Co)unit axioms, with F(𝟙⊗V) = F(V) = F(V⊗𝟙).
    let unital = ind.mu(&one, v).compose(&ind.eta().kron(&id(fv))) == id(fv)
        && ind.mu(v, &one).compose(&id(fv).kron(&ind.eta())) == id(fv)
        && ind.epsilon().kron(&id(fw)).compose(&ind.delta(1, dw)) == id(fw)
        && id(fw).kron(&ind.epsilon()).compose(&ind.delta(dw, 1)) == id(fw);

    Ok(FrobeniusReport {
        equivariant,
        separable,
        idempotent,
        frobenius,
        associative,
        unital,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::IntPartition;
    use crate::oracle::specht_module;

    fn specht(parts: &[u32]) -> ExplicitModule {
        specht_module(&IntPartition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn equal_groups_give_identities() {
        let s3 = Arc::new(ExplicitGroup::symmetric(3));
        let v = specht(&[2, 1]);
        let report = frobenius_check(&s3, &s3, &v, &v).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn sign_from_s2_to_s3() {
        let s3 = Arc::new(ExplicitGroup::symmetric(3));
        let sub = ExplicitGroup::young_subgroup(&[2, 1]);
        let sign = ExplicitModule::sign(Arc::new(sub.clone()));
        let report = frobenius_check(&sub, &s3, &sign, &sign).unwrap();
        assert!(report.separable && report.passed(), "{report:?}");
    }

    #[test]
    fn trivial_subgroup_of_s3() {
        let s3 = Arc::new(ExplicitGroup::symmetric(3));
        let sub = ExplicitGroup::trivial(3);
        let triv = ExplicitModule::trivial(Arc::new(sub.clone()));
        let ind = Induction {
            sub: &sub,
            big: &s3,
            cosets: LeftCosets::new(&sub, &s3).unwrap(),
        };
        let e = ind.delta(1, 1).compose(&ind.mu(&triv, &triv));
        assert_eq!(e.nrows(), 36);
        assert_eq!(trace(&e), Cyclotomic::from_i64(6));
        assert!(frobenius_check(&sub, &s3, &triv, &triv).unwrap().passed());
    }

    #[test]
    fn broken_mu_is_detected() {
        let s3 = Arc::new(ExplicitGroup::symmetric(3));
        let sub = ExplicitGroup::young_subgroup(&[2, 1]);
        let triv = ExplicitModule::trivial(Arc::new(sub.clone()));
        let ind = Induction {
            sub: &sub,
            big: &s3,
            cosets: LeftCosets::new(&sub, &s3).unwrap(),
        };
        let mut mu = ind.mu(&triv, &triv);
        mu.add_entry(1, 0, Cyclotomic::one());
        assert_ne!(mu.compose(&ind.delta(1, 1)), id(3));
        let act = ind.action(&triv).unwrap();
        assert!(!intertwines(&mu, &tensor_actions(&act, &act), &act));
    }
}
