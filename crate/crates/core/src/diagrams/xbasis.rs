use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::DiagramMorphism;
use crate::combinatorics::SetPartition;

fn memo() -> &'static Mutex<HashMap<SetPartition, DiagramMorphism>> {
    static MEMO: OnceLock<Mutex<HashMap<SetPartition, DiagramMorphism>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The morphism `x_π = π - Σ_{τ > π} x_τ`, the sum running over all strict
/// coarsenings of `π`. Results are memoized process-wide.
pub fn x_basis(pi: &SetPartition) -> DiagramMorphism {
    if let Some(hit) = memo().lock().unwrap().get(pi) {
        return hit.clone();
    }
    let mut x = DiagramMorphism::from_diagram(pi.clone());
    for tau in pi.strict_coarsenings() {
        let xt = x_basis(&tau);
        for (p, c) in xt.terms() {
            x.add_term(p.clone(), &-c);
        }
    }
    // Concurrent callers may race to insert; the value is the same either way.
    memo().lock().unwrap().insert(pi.clone(), x.clone());
    x
}
