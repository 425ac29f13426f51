//! Scalar abstractions shared by the numeric analyses.
//!
//! Floating-point estimates (growth curves, dimension estimates) are generic
//! over [`Real`]; unfolded proof counts are generic over [`Count`] so that
//! fixed-width integers can be used where they cannot overflow and
//! [`num_bigint::BigUint`] everywhere else.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, Float, FromPrimitive, One, Zero};

/// `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl Real for f32 {}
impl Real for f64 {}

/// A nonnegative counter with checked arithmetic.
///
/// `BigUint` never fails a checked operation; `u64`/`u128` report overflow
/// instead of wrapping.
pub trait Count:
    Clone + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Ord + Debug + Display + Send + Sync
{
}

impl<T> Count for T where
    T: Clone + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Ord + Debug + Display + Send + Sync
{
}

pub(crate) fn real<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("finite f64 is representable")
}
