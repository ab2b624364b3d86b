//! Integer scalar abstraction for the exact-lattice layer.
//!
//! The lattice algorithms are generic over any exact integer type satisfying
//! the ring traits below; `i64` is handy for small oracle computations in
//! tests, while the crate-level alias [`crate::Int`] (arbitrary precision)
//! is what the domain modules use. Smith normal form pivots can grow far
//! beyond machine range, so production paths must stay on big integers.

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use std::fmt;
use std::hash::Hash;

pub trait IntScalar:
    Integer
    + Signed
    + FromPrimitive
    + Clone
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer scalar must represent small values")
    }
}

impl<T> IntScalar for T where
    T: Integer
        + Signed
        + FromPrimitive
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}
