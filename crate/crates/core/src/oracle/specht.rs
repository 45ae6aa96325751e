//! Specht modules of `S_n` in Young's seminormal form, over `ℚ`.

use std::collections::HashMap;

use num_traits::One;

use std::sync::Arc;

use crate::arith::{rat, Cyclotomic, Matrix, Rational};
use crate::combinatorics::IntPartition;
use crate::error::Result;
use crate::perm::Perm;

use super::{ExplicitGroup, ExplicitModule};

/// Standard tableaux of shape `λ`, each stored as the `(row, col)` cell of
/// every entry `0..n`.
pub fn standard_tableaux(lambda: &IntPartition) -> Vec<Vec<(usize, usize)>> {
    fn rec(shape: &[u32], filled: &mut Vec<u32>, cells: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cells.len() == shape.iter().sum::<u32>() as usize {
            out.push(cells.clone());
            return;
        }
        for r in 0..shape.len() {
            let addable = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if addable {
                cells.push((r, filled[r] as usize));
                filled[r] += 1;
                rec(shape, filled, cells, out);
                filled[r] -= 1;
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), &mut vec![0; lambda.len()], &mut Vec::new(), &mut out);
    out
}

/// The seminormal representation `S^λ`: matrices of the adjacent
/// transpositions, from which any permutation's matrix is assembled.
#[derive(Clone, Debug)]
pub struct SpechtRep {
    n: usize,
    dim: usize,
    generators: Vec<Matrix<Rational>>,
}

impl SpechtRep {
    pub fn new(lambda: &IntPartition) -> Self {
        let n = lambda.size() as usize;
        let tableaux = standard_tableaux(lambda);
        let index: HashMap<&Vec<(usize, usize)>, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let dim = tableaux.len();
        let content = |cell: (usize, usize)| cell.1 as i64 - cell.0 as i64;
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let mut m = Matrix::zeros(dim, dim);
                for (col, t) in tableaux.iter().enumerate() {
                    let r = content(t[i + 1]) - content(t[i]);
                    m.set(col, col, rat(1) / rat(r));
                    if r.abs() > 1 {
                        let mut swapped = t.clone();
                        swapped.swap(i, i + 1);
                        let row = index[&swapped];
                        let coeff = if r > 0 { Rational::one() } else { rat(1) - rat(1) / rat(r * r) };
                        m.set(row, col, coeff);
                    }
                }
                m
            })
            .collect();
        SpechtRep { n, dim, generators }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `g` (columns are images of basis vectors).
    pub fn matrix(&self, g: &Perm) -> Matrix<Rational> {
        assert_eq!(g.degree(), self.n, "permutation degree does not match the Specht module");
        g.adjacent_word()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &i| acc.mul(&self.generators[i]))
    }
}

/// `S^λ` as an explicit module over `S_n`.
pub fn specht_module(lambda: &IntPartition) -> Result<ExplicitModule> {
    let rep = SpechtRep::new(lambda);
    let group = Arc::new(ExplicitGroup::symmetric(lambda.size() as usize));
    ExplicitModule::from_fn(group, |g| rep.matrix(g).map(|x| Cyclotomic::from_rational(x.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sn::mn_character;

    fn p(parts: &[u32]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tableau_counts_are_hook_dimensions() {
        for n in 1..=6 {
            for lambda in crate::combinatorics::partitions_of(n) {
                assert_eq!(standard_tableaux(&lambda).len() as u128, lambda.hook_dimension());
            }
        }
    }

    #[test]
    fn seminormal_form_is_a_homomorphism_of_s4() {
        for lambda in crate::combinatorics::partitions_of(4) {
            let rep = SpechtRep::new(&lambda);
            let all = Perm::all(4);
            for g in &all {
                for h in &all {
                    assert_eq!(rep.matrix(&g.compose(h)), rep.matrix(g).mul(&rep.matrix(h)), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn traces_match_murnaghan_nakayama() {
        for lambda in crate::combinatorics::partitions_of(5) {
            let rep = SpechtRep::new(&lambda);
            for g in Perm::all(5) {
                let tr = rep.matrix(&g).trace();
                assert_eq!(tr, rat(mn_character(&lambda, &g.cycle_type())));
            }
        }
        assert_eq!(SpechtRep::new(&p(&[3])).matrix(&Perm::from_images(vec![1, 2, 0]).unwrap()), Matrix::identity(1));
    }
}
