use proptest::prelude::*;

use repst_core::arith::{cyclotomic_polynomial, embed_root, euler_phi, ratio, Cyclotomic, Poly};
use repst_core::combinatorics::{
    horizontal_strip_removals, lr_coefficient, partitions_of, restricted_growth_strings, IntPartition, SetPartition,
};
use repst_core::diagrams::{compose, embed_group_element, tensor, DiagramMorphism};
use repst_core::perm::Perm;

const CONDUCTORS: &[u32] = &[1, 2, 3, 4, 5, 6, 8, 9, 10, 12];

fn cyclotomic(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-4i64..=4, 1i64..=3, 0i64..n as i64), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(Cyclotomic::zero(), |acc, (p, q, j)| {
            acc + Cyclotomic::root_of_unity(n, j).scale(&ratio(p, q))
        })
    })
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(CONDUCTORS).prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
        } else {
            prop_assert!(a.inv().is_none());
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(
        (n, a, b) in prop::sample::select(CONDUCTORS).prop_flat_map(|n| (Just(n), cyclotomic(n), cyclotomic(n))),
        k in 1u32..=3,
    ) {
        let m = n * k;
        prop_assert_eq!((&a * &b).embed(m), &a.embed(m) * &b.embed(m));
        prop_assert_eq!((&a + &b).embed(m), &a.embed(m) + &b.embed(m));
        prop_assert_eq!(a.embed(m), a.clone());
    }

    #[test]
    fn diagram_composition_is_associative(
        (k, l, m, n) in (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=2),
        seeds in prop::collection::vec(prop::collection::vec(0u8..8, 8), 3),
    ) {
        let a = morphism(k, l, &seeds[0]);
        let b = morphism(l, m, &seeds[1]);
        let c = morphism(m, n, &seeds[2]);
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose(&DiagramMorphism::identity(k), &a).unwrap(), a.clone());
        prop_assert_eq!(compose(&a, &DiagramMorphism::identity(l)).unwrap(), a);
    }

    #[test]
    fn tensor_product_is_functorial(
        (k1, l1, m1, k2, l2, m2) in (0usize..=2, 0usize..=2, 0usize..=2, 0usize..=1, 0usize..=2, 0usize..=1),
        seeds in prop::collection::vec(prop::collection::vec(0u8..8, 8), 4),
    ) {
        let a = morphism(k1, l1, &seeds[0]);
        let b = morphism(l1, m1, &seeds[1]);
        let c = morphism(k2, l2, &seeds[2]);
        let d = morphism(l2, m2, &seeds[3]);
        let left = compose(&tensor(&a, &c).unwrap(), &tensor(&b, &d).unwrap()).unwrap();
        let right = tensor(&compose(&a, &b).unwrap(), &compose(&c, &d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let assoc_l = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let assoc_r = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
    }
}

/// A morphism `k → l` with up to two terms, built deterministically from `seed`.
fn morphism(k: usize, l: usize, seed: &[u8]) -> DiagramMorphism {
    let mut m = DiagramMorphism::zero(k, l);
    let points = k + l;
    for term in 0..2 {
        let labels: Vec<u8> = (0..points).map(|i| seed[(i + 3 * term) % seed.len()] % (points.max(1) as u8)).collect();
        let pi = SetPartition::from_labels(k, l, &labels).unwrap();
        let coeff = Poly::from_i64s(&[seed[term] as i64 - 3, seed[term + 4] as i64 % 3]);
        m.add_term(pi, &coeff);
    }
    m
}

#[test]
fn cyclotomic_polynomials_factor_x_n_minus_one() {
    for n in 1..=24u32 {
        let phi = cyclotomic_polynomial(n);
        assert_eq!(phi.degree(), Some(euler_phi(n) as usize), "Φ_{n}");
        let mut product = Poly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            product = &product * &cyclotomic_polynomial(d);
        }
        let mut coeffs = vec![0i64; n as usize + 1];
        coeffs[0] = -1;
        coeffs[n as usize] = 1;
        assert_eq!(product, Poly::from_i64s(&coeffs), "Π_{{d | {n}}} Φ_d");
        // ζ_n is a root of Φ_n and generates a field of degree φ(n).
        let zeta = Cyclotomic::root_of_unity(n, 1);
        let value = phi
            .coeffs()
            .iter()
            .enumerate()
            .fold(Cyclotomic::zero(), |acc, (i, c)| acc + Cyclotomic::root_of_unity(n, i as i64).scale(c));
        assert!(value.is_zero(), "Φ_{n}(ζ_{n}) ≠ 0");
        let mut power = Cyclotomic::one();
        for _ in 0..n {
            power = &power * &zeta;
        }
        assert_eq!(power, Cyclotomic::one());
    }
}

#[test]
fn embed_root_matches_roots_of_larger_order() {
    for k in 1..=12u32 {
        for mult in 1..=3 {
            let n = k * mult;
            for j in -(k as i64)..2 * k as i64 {
                let e = embed_root(k, j, n).unwrap();
                assert_eq!(e, Cyclotomic::root_of_unity(n, j * mult as i64));
                assert_eq!(e, Cyclotomic::root_of_unity(k, j));
            }
        }
        if k > 1 {
            assert!(embed_root(k, 1, k + 1).is_err());
        }
    }
}

#[test]
fn littlewood_richardson_symmetries() {
    for a in 0..=4 {
        for b in 0..=4 - a {
            for lambda in partitions_of(a) {
                for mu in partitions_of(b) {
                    let mut dim_sum = 0u128;
                    for nu in partitions_of(a + b) {
                        let c = lr_coefficient(&lambda, &mu, &nu);
                        assert_eq!(c, lr_coefficient(&mu, &lambda, &nu));
                        assert_eq!(c, lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
                        dim_sum += c as u128 * nu.hook_dimension();
                    }
                    // dim Ind = binom(a + b, a) · dim S^λ · dim S^μ
                    let binom = (1..=a as u128).fold(1u128, |acc, i| acc * (b as u128 + i) / i);
                    assert_eq!(dim_sum, binom * lambda.hook_dimension() * mu.hook_dimension());
                }
            }
        }
    }
}

#[test]
fn lr_with_a_row_is_the_pieri_rule() {
    for n in 1..=6 {
        for nu in partitions_of(n) {
            let strips = horizontal_strip_removals(&nu);
            for k in 0..=n {
                for lambda in partitions_of(n - k) {
                    let row = IntPartition::from_unsorted(if k == 0 { vec![] } else { vec![k] });
                    let expected = strips.contains(&lambda) as u64;
                    assert_eq!(lr_coefficient(&lambda, &row, &nu), expected, "{lambda} · ({k}) → {nu}");
                }
            }
        }
    }
}

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

#[test]
fn coarsening_intervals_have_bell_size() {
    for points in 0..=6usize {
        assert_eq!(restricted_growth_strings(points).len(), bell(points));
        for rgs in restricted_growth_strings(points) {
            let pi = SetPartition::from_labels(points / 2, points - points / 2, &rgs).unwrap();
            let coarser = pi.strict_coarsenings();
            assert_eq!(coarser.len() + 1, bell(pi.num_blocks()), "{pi}");
            assert!(coarser.iter().all(|tau| pi.refines(tau) && !tau.refines(&pi)));
        }
    }
}

#[test]
fn group_elements_embed_multiplicatively() {
    for n in 1..=3 {
        let all = Perm::all(n);
        for g in &all {
            for h in &all {
                let product = compose(&embed_group_element(h), &embed_group_element(g)).unwrap();
                assert_eq!(product, embed_group_element(&g.compose(h)), "x_{g} x_{h}");
            }
        }
    }
}
