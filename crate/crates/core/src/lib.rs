//! Exact computations in Deligne's interpolation category `Rep S_t`, its
//! Drinfeld center, and the tower of centers `⊕_n Z(Rep S_n)`.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`]: rationals, polynomials in `t`, cyclotomic numbers, matrices.
//! - [`combinatorics`]: integer and set partitions, horizontal strips,
//!   Littlewood–Richardson coefficients.
//! - [`perm`]: permutations of `{0, …, n-1}`.
//! - [`diagrams`]: partition-diagram morphisms, the `x_π` basis, the
//!   evaluation functors `F_d`, half-braiding candidates and the center check.
//! - [`sn`]: characters of symmetric groups and the graded Grothendieck ring
//!   of `Rep S_t`.
//! - [`centralizer`]: centralizers `∏_c Z_c ≀ S_{m_c}`, their classes and
//!   characters, class fusion and induction.
//! - [`tower`]: the induction product `⊙` and the graded Grothendieck ring of
//!   the center of `Rep S_t`.
//! - [`oracle`]: explicit-matrix ground truth used to cross-check the above.
//! - [`cache`]: on-disk character-table cache.

pub mod arith;
pub mod cache;
pub mod centralizer;
pub mod combinatorics;
pub mod diagrams;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod sn;
pub mod tower;

pub use error::{Error, Result};
