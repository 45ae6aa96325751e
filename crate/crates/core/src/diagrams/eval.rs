use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Zero;

use super::DiagramMorphism;
use crate::arith::{poly_eval, Matrix, Rational};
use crate::combinatorics::SetPartition;
use crate::error::{Error, Result};

static MAX_DIM: AtomicU64 = AtomicU64::new(4096);

/// Largest `d^k` (and `d^l`) accepted by [`evaluate_fd`] (default 4096).
pub fn max_eval_dim() -> u64 {
    MAX_DIM.load(Ordering::Relaxed)
}

pub fn set_max_eval_dim(cap: u64) {
    MAX_DIM.store(cap, Ordering::Relaxed);
}

fn tensor_dim(d: usize, k: usize) -> Result<usize> {
    let dim = (d as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if dim > max_eval_dim() {
        return Err(Error::CapExceeded {
            what: "F_d dimension",
            value: dim,
            cap: max_eval_dim(),
        });
    }
    Ok(dim as usize)
}

/// Enumerates index assignments to the blocks of `pi` and calls `f(row, col)`.
/// With `distinct`, only injective assignments are visited.
fn for_each_assignment(pi: &SetPartition, d: usize, distinct: bool, mut f: impl FnMut(usize, usize)) {
    let nb = pi.num_blocks();
    let (k, l) = (pi.k(), pi.l());
    let labels = pi.labels();
    let mut assign = vec![0usize; nb];
    let mut used = vec![false; d];
    fn rec(
        b: usize,
        nb: usize,
        d: usize,
        distinct: bool,
        assign: &mut [usize],
        used: &mut [bool],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        if b == nb {
            emit(assign);
            return;
        }
        for v in 0..d {
            if distinct && used[v] {
                continue;
            }
            assign[b] = v;
            used[v] = true;
            rec(b + 1, nb, d, distinct, assign, used, emit);
            used[v] = false;
        }
    }
    let mut emit = |a: &[usize]| {
        let col = (0..k).fold(0, |acc, p| acc * d + a[labels[p] as usize]);
        let row = (k..k + l).fold(0, |acc, p| acc * d + a[labels[p] as usize]);
        f(row, col);
    };
    rec(0, nb, d, distinct, &mut assign, &mut used, &mut emit);
}

/// Matrix of `F_d(m)` in the tensor basis `e_{i_1} ⊗ … ⊗ e_{i_k}` (first
/// factor most significant), of shape `d^l × d^k`, with `t` specialized to `d`.
///
/// A diagram contributes `1` at `(j, i)` when the indices are constant on each
/// of its blocks.
pub fn evaluate_fd(m: &DiagramMorphism, d: usize) -> Result<Matrix<Rational>> {
    if d == 0 {
        return Err(Error::InvalidInput("F_d needs d >= 1".into()));
    }
    let rows = tensor_dim(d, m.l())?;
    let cols = tensor_dim(d, m.k())?;
    let mut out = Matrix::zeros(rows, cols);
    for (pi, c) in m.terms() {
        let c = poly_eval(c, d as i64);
        if c.is_zero() {
            continue;
        }
        for_each_assignment(pi, d, false, |r, col| out.add_at(r, col, c.clone()));
    }
    Ok(out)
}

/// Matrix of `F_d(x_π)`: `1` at `(j, i)` exactly when the indices induce the
/// partition `π` itself (constant on blocks, distinct across blocks).
pub fn evaluate_fd_x(pi: &SetPartition, d: usize) -> Result<Matrix<Rational>> {
    if d == 0 {
        return Err(Error::InvalidInput("F_d needs d >= 1".into()));
    }
    let rows = tensor_dim(d, pi.l())?;
    let cols = tensor_dim(d, pi.k())?;
    let mut out = Matrix::zeros(rows, cols);
    let one = Rational::from_integer(1.into());
    for_each_assignment(pi, d, true, |r, c| out.set(r, c, one.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::diagrams::{compose, x_basis};

    #[test]
    fn identity_maps_to_identity() {
        for d in 1..5 {
            assert_eq!(evaluate_fd(&DiagramMorphism::identity(1), d).unwrap(), Matrix::identity(d));
        }
    }

    #[test]
    fn loop_evaluates_to_d() {
        let m = compose(&DiagramMorphism::unit(), &DiagramMorphism::counit()).unwrap();
        let f = evaluate_fd(&m, 2).unwrap();
        assert_eq!(f, Matrix::identity(1).scale(&rat(2)));
    }

    #[test]
    fn x_variant_agrees_with_expansion() {
        for rgs in crate::combinatorics::restricted_growth_strings(4) {
            let pi = SetPartition::from_labels(2, 2, &rgs).unwrap();
            for d in 1..4 {
                assert_eq!(evaluate_fd(&x_basis(&pi), d).unwrap(), evaluate_fd_x(&pi, d).unwrap());
            }
        }
    }

    #[test]
    fn dimension_cap() {
        let m = DiagramMorphism::identity(6);
        assert!(matches!(evaluate_fd(&m, 5), Err(Error::CapExceeded { .. })));
    }
}
