//! Exact linear algebra over the integers and rationals.
//!
//! Dense matrices with arbitrary-precision entries, Smith normal form with a
//! deterministic pivot rule, finitely generated abelian groups presented as
//! cokernels, rational cone membership and lattice points of convex hulls.
//! Ranks in this problem class stay small (around 16), so everything is dense
//! and no floating point is used anywhere.

mod abelian;
mod hull;
mod matrix;
mod vector;

pub use abelian::AbelianQuotient;
pub use hull::{hull_contains, lattice_points_in_hull};
pub use matrix::{
    integer_kernel, lattice_intersection, smith_normal_form, solve_integer, Matrix, Smith,
};
pub use vector::{
    cone_coefficients, dot, dot_rat, rat_add, rat_neg, rat_scale, rat_sub, rat_zero,
    rational_rank, solve_exact, to_rat,
};
