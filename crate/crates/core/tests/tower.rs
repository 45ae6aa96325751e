use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use repst_core::centralizer::centralizer_structure;
use repst_core::combinatorics::{factorial, CycleType};
use repst_core::oracle::brute_odot;
use repst_core::tower::{center_simples, odot, CenterSimple, TowerElement};

fn simples_up_to(d: u32) -> Vec<Vec<CenterSimple>> {
    (0..=d).map(|n| center_simples(n).unwrap()).collect()
}

#[test]
fn odot_is_commutative_and_associative_up_to_degree_five() {
    let simples = simples_up_to(5);
    let unit = TowerElement::from_simple(CenterSimple::unit());
    for da in 0..=5usize {
        for db in 0..=5 - da {
            for a in &simples[da] {
                let ea = TowerElement::from_simple(a.clone());
                assert_eq!(ea.odot(&unit).unwrap(), ea);
                for b in &simples[db] {
                    let ab = odot(a, b).unwrap();
                    assert_eq!(ab, odot(b, a).unwrap(), "{a} ⊙ {b}");
                    for dc in 1..=5 - da - db {
                        for c in &simples[dc] {
                            let ec = TowerElement::from_simple(c.clone());
                            let left = ab.odot(&ec).unwrap();
                            let right = ea.odot(&odot(b, c).unwrap()).unwrap();
                            assert_eq!(left, right, "({a} ⊙ {b}) ⊙ {c}");
                        }
                    }
                }
            }
        }
    }
}

/// `[Z(μ ⊔ ν) : Z(μ) × Z(ν)]`.
fn index(mu: &CycleType, nu: &CycleType) -> u128 {
    let big = centralizer_structure(&mu.union(nu)).order();
    big / (centralizer_structure(mu).order() * centralizer_structure(nu).order())
}

#[test]
fn odot_dimensions_match_the_induction_index() {
    let simples = simples_up_to(6);
    for da in 0..=6usize {
        for db in 0..=6 - da {
            for a in &simples[da] {
                for b in &simples[db] {
                    let Ok(prod) = odot(a, b) else { continue };
                    // Irreducible dimensions over the centralizers: dim(Ind) = index · dim V_a · dim V_b.
                    let total: u128 = prod.terms().iter().map(|(s, k)| s.irrep().dim().unwrap() as u128 * *k as u128).sum();
                    let want = a.irrep().dim().unwrap() as u128 * b.irrep().dim().unwrap() as u128 * index(a.mu(), b.mu());
                    assert_eq!(total, want, "{a} ⊙ {b}");
                    // Objects of Rep S_{n+m}: dim = binom(n+m, n) · dim a · dim b.
                    let objects: u128 = prod.terms().iter().map(|(s, k)| s.dim().unwrap() * *k as u128).sum();
                    let binom = factorial(a.n() + b.n()) / (factorial(a.n()) * factorial(b.n()));
                    assert_eq!(objects, binom * a.dim().unwrap() * b.dim().unwrap(), "{a} ⊙ {b}");
                }
            }
        }
    }
}

#[test]
fn odot_matches_explicit_induction_on_random_pairs() {
    let simples = simples_up_to(6);
    let mut pairs = Vec::new();
    for da in 1..=6usize {
        for db in 1..=6 - da {
            for a in &simples[da] {
                for b in &simples[db] {
                    if centralizer_structure(&a.mu().union(b.mu())).order() <= 200 {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    pairs.shuffle(&mut rng);
    for (a, b) in pairs.iter().take(50) {
        let mut brute = TowerElement::zero();
        for (s, k) in brute_odot(a, b).unwrap() {
            brute.add_term(s, k as i64);
        }
        assert_eq!(brute, odot(a, b).unwrap(), "{a} ⊙ {b}");
    }
}
