//! The diagrammatic category `Rep S_t` on the objects `X^{⊗k}`.

mod center;
mod eval;
mod morphism;
mod xbasis;

pub use center::{
    build_d1, check_center, cyclic_shift, embed_group_algebra, embed_group_element, embed_group_matrix,
    string_diagram, BlockMorphism, CenterReport, GroupMatrixElement, HalfBraidingCandidate,
};
pub use eval::{evaluate_fd, evaluate_fd_x, max_eval_dim, set_max_eval_dim};
pub use morphism::{compose, max_points, set_max_points, tensor, DiagramMorphism};
pub use xbasis::x_basis;
