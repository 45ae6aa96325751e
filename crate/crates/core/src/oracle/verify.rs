//! Named cross-check suites comparing the character-theoretic code paths
//! with explicit constructions. Each suite yields a JSON verdict.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::centralizer::{centralizer_structure, CentralizerIrrep};
use crate::combinatorics::{centralizer_order, partitions_of, CycleType, IntPartition};
use crate::error::{Error, Result};
use crate::perm::{centralizer_generators, Perm};
use crate::tower::{center_simples, k0_rank_center, odot, CenterSimple};

use super::{
    brute_decompose, brute_induce, centralizer_irrep_module, conjugator, frobenius_check, realize_centralizer,
    specht_module, yd_enumerate, ExplicitGroup, ExplicitModule,
};

/// Names accepted by [`verify_suite`].
pub const SUITES: &[&str] = &["realize", "odot", "yd", "frobenius"];

/// Largest `|Z(μ ⊔ ν)|` compared in the `odot` suite.
const ODOT_MAX_ORDER: u128 = 200;

/// Largest `n + m` compared in the `odot` suite.
const ODOT_MAX_DEGREE: u32 = 5;

/// Verdict of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<Value>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks,
            "failures": self.failures,
        })
    }
}

/// Runs the named suite (see [`SUITES`]).
pub fn verify_suite(name: &str) -> Result<VerifyReport> {
    let (checks, failures) = match name {
        "realize" => verify_realize()?,
        "odot" => verify_odot(ODOT_MAX_DEGREE)?,
        "yd" => verify_yd()?,
        "frobenius" => verify_frobenius()?,
        _ => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {name:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(VerifyReport {
        suite: name.to_string(),
        checks,
        failures,
    })
}

fn verify_realize() -> Result<(usize, Vec<Value>)> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for n in 0..=6 {
        for mu in partitions_of(n) {
            checks += 1;
            let got = realize_centralizer(&mu)?.order() as u128;
            let expected = centralizer_order(&mu);
            if got != expected {
                failures.push(json!({"mu": mu, "order": got as u64, "expected": expected as u64}));
            }
        }
    }
    Ok((checks, failures))
}

/// `a ⊙ b` by explicit construction: induce `V_a ⊠ V_b` from
/// `Z(σ) × Z(τ)` to `Z(σ × τ)`, move to the canonical representative of
/// `μ ⊔ ν`, and decompose by traces.
pub fn brute_odot(a: &CenterSimple, b: &CenterSimple) -> Result<Vec<(CenterSimple, u64)>> {
    let mut cache = HashMap::new();
    brute_odot_cached(a, b, &mut cache)
}

type ModuleCache = HashMap<(CycleType, CentralizerIrrep), ExplicitModule>;

fn irrep_module(s: &CenterSimple, cache: &mut ModuleCache) -> Result<ExplicitModule> {
    let key = (s.mu().clone(), s.irrep().clone());
    if let Some(m) = cache.get(&key) {
        return Ok(m.clone());
    }
    let m = centralizer_irrep_module(s.mu(), s.irrep())?;
    cache.insert(key, m.clone());
    Ok(m)
}

fn brute_odot_cached(a: &CenterSimple, b: &CenterSimple, cache: &mut ModuleCache) -> Result<Vec<(CenterSimple, u64)>> {
    let st = Perm::canonical_of_type(a.mu()).direct_sum(&Perm::canonical_of_type(b.mu()));
    let module = irrep_module(a, cache)?.outer_tensor(&irrep_module(b, cache)?);
    let n = st.degree();
    let big = if n <= 8 {
        ExplicitGroup::symmetric(n).filter(|g| g.compose(&st) == st.compose(g))?
    } else {
        ExplicitGroup::from_generators(n, &centralizer_generators(&st))?
    };
    let induced = brute_induce(module.group(), &Arc::new(big), &module)?;
    let mu = a.mu().union(b.mu());
    let p = conjugator(&st, &Perm::canonical_of_type(&mu))?;
    let moved = induced.conjugate(&p).on_group(realize_centralizer(&mu)?)?;
    brute_decompose(&moved)?
        .into_iter()
        .map(|(irrep, k)| Ok((CenterSimple::new(mu.clone(), irrep)?, k)))
        .collect()
}

fn verify_odot(max_degree: u32) -> Result<(usize, Vec<Value>)> {
    let mut cache = ModuleCache::new();
    let mut checks = 0;
    let mut failures = Vec::new();
    for n in 0..=max_degree {
        for m in 0..=max_degree - n {
            for a in center_simples(n)? {
                for b in center_simples(m)? {
                    let mu = a.mu().union(b.mu());
                    if centralizer_structure(&mu).order() > ODOT_MAX_ORDER {
                        continue;
                    }
                    checks += 1;
                    let fast: BTreeMap<CenterSimple, i64> = odot(&a, &b)?.terms().clone();
                    let brute: BTreeMap<CenterSimple, i64> = brute_odot_cached(&a, &b, &mut cache)?
                        .into_iter()
                        .map(|(s, k)| (s, k as i64))
                        .collect();
                    if fast != brute {
                        let show = |t: &BTreeMap<CenterSimple, i64>| -> Vec<Value> {
                            t.iter().map(|(s, k)| json!({"simple": s.to_json(), "multiplicity": k})).collect()
                        };
                        failures.push(json!({
                            "a": a.to_json(),
                            "b": b.to_json(),
                            "odot": show(&fast),
                            "brute": show(&brute),
                        }));
                    }
                }
            }
        }
    }
    Ok((checks, failures))
}

fn verify_yd() -> Result<(usize, Vec<Value>)> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        checks += 1;
        let census = yd_enumerate(n)?;
        let rank = k0_rank_center(n)? as usize;
        if census.count() != rank || census.commuting_pair_orbits != rank || !census.grading_ok || !census.orthonormal {
            let mut v = census.to_json();
            v["k0_rank"] = json!(rank);
            failures.push(v);
        }
    }
    Ok((checks, failures))
}

/// Irreducibles of the Young subgroup `S_λ`: outer tensor products of
/// Specht modules, one per part.
fn young_irreps(lambda: &IntPartition) -> Result<Vec<(Vec<IntPartition>, ExplicitModule)>> {
    let mut out = vec![(Vec::new(), ExplicitModule::trivial(Arc::new(ExplicitGroup::trivial(0))))];
    for &k in lambda.parts() {
        let mut next = Vec::new();
        for (labels, m) in &out {
            for rho in partitions_of(k) {
                let mut l = labels.clone();
                l.push(rho.clone());
                next.push((l, m.outer_tensor(&specht_module(&rho)?)));
            }
        }
        out = next;
    }
    Ok(out)
}

fn verify_frobenius() -> Result<(usize, Vec<Value>)> {
    let mut checks = 0;
    let mut failures = Vec::new();
    for n in 2..=4u32 {
        let big = Arc::new(ExplicitGroup::symmetric(n as usize));
        for lambda in partitions_of(n) {
            let sub = ExplicitGroup::young_subgroup(lambda.parts());
            let irreps = young_irreps(&lambda)?;
            for (lv, v) in &irreps {
                for (lw, w) in &irreps {
                    checks += 1;
                    let report = frobenius_check(&sub, &big, v, w)?;
                    if !report.passed() {
                        let mut r = report.to_json();
                        r["young"] = json!(lambda);
                        r["v"] = json!(lv);
                        r["w"] = json!(lw);
                        failures.push(r);
                    }
                }
            }
        }
    }
    Ok((checks, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::centralizer_irreps;
    use crate::tower::TowerElement;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn brute_odot_of_two_transpositions() {
        let mu = p(&[2]);
        let desc = centralizer_structure(&mu);
        for a in centralizer_irreps(&desc) {
            for b in centralizer_irreps(&desc) {
                let sa = CenterSimple::new(mu.clone(), a.clone()).unwrap();
                let sb = CenterSimple::new(mu.clone(), b.clone()).unwrap();
                let mut brute = TowerElement::zero();
                for (s, k) in brute_odot(&sa, &sb).unwrap() {
                    brute.add_term(s, k as i64);
                }
                assert_eq!(brute, odot(&sa, &sb).unwrap());
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in ["realize", "yd"] {
            let r = verify_suite(suite).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
        assert!(verify_suite("nope").is_err());
    }

    #[test]
    fn odot_suite_up_to_degree_three() {
        let (checks, failures) = verify_odot(3).unwrap();
        assert!(checks > 0);
        assert!(failures.is_empty(), "{failures:?}");
    }
}
