//! Exact combinatorics of isocrystals with reductive group structure.
//!
//! Everything here is integer or rational arithmetic, arbitrary precision,
//! with no floating point anywhere. The layers are:
//!
//! - [`exact_lattice`]: Smith normal form, finitely generated abelian groups,
//!   rational cones and lattice points of convex hulls. Generic over the
//!   integer scalar (see [`scalar::IntScalar`]); the rest of the crate uses
//!   the [`Int`]/[`Rat`] aliases below.
//! - [`root_datum`], [`presets`]: based root data as explicit vector lists,
//!   Weyl groups, standard Levi subgroups, classical-group presets.
//! - [`frobenius`]: finite-order lattice automorphisms acting on root data,
//!   orbit averages, norms, Galois coinvariants.
//! - [`kottwitz_set`]: enumeration of the classes (J, kappa, nu) attached to
//!   a dominant cocharacter, with the dominance-order poset.
//! - [`newton_polygon`]: concrete slope polygons for GL_n / GSp_2g and the
//!   brute-force admissibility oracles.
//! - [`adlv`]: non-emptiness predicates for affine Deligne-Lusztig sets.
//! - [`dagger`]: elliptic twisted tori and norm-relation witnesses.
//! - [`kottwitz_triple`]: triple conditions and the invariant computed dually
//!   on cocharacter lattices.

pub mod adlv;
pub mod dagger;
pub mod error;
pub mod exact_lattice;
pub mod frobenius;
pub mod kottwitz_set;
pub mod kottwitz_triple;
pub mod newton_polygon;
pub mod presets;
pub mod root_datum;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision integer used by all domain modules.
pub type Int = num_bigint::BigInt;
/// Exact rational built on [`Int`].
pub type Rat = num_rational::Ratio<Int>;
/// Dense integer matrix over [`Int`].
pub type IntMatrix = exact_lattice::Matrix<Int>;
/// Integer vector in a cocharacter or character lattice.
pub type IntVec = Vec<Int>;
/// Rational vector, e.g. a quasi-cocharacter.
pub type RatVec = Vec<Rat>;
/// Finitely generated abelian group presented by invariant factors.
pub type FinAbGroup = exact_lattice::AbelianQuotient<Int>;

/// Convenience constructor for `Int` from machine integers.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Convenience constructor for `Rat` from a machine-integer fraction.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Integer vector from machine integers.
pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Rational vector with denominator one from machine integers.
pub fn rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}
