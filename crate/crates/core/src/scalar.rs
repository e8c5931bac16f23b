//! The integer scalar the whole crate is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer: `BigInt` for unbounded work, `i64` (or `i128`)
/// when the inputs are known to stay small.
pub trait Int:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Lift a small constant into `I`.
///
/// Panics only if `I` cannot hold an `i64`, which no supported scalar does.
pub fn int<I: Int>(n: i64) -> I {
    I::from_i64(n).expect("scalar type cannot represent a small constant")
}

pub fn ratio<I: Int>(num: i64, den: i64) -> Ratio<I> {
    Ratio::new(int(num), int(den))
}

/// Run length or index stored in `I`, as a `usize`.
pub(crate) fn to_count<I: Int>(n: &I) -> crate::Result<usize> {
    n.to_usize()
        .ok_or_else(|| crate::Error::Domain(format!("{n} is not a valid count")))
}

/// `n choose 2`, zero for `n < 2`.
pub fn binom2<I: Int>(n: &I) -> I {
    if *n < int(2) {
        I::zero()
    } else {
        n.clone() * (n.clone() - I::one()) / int(2)
    }
}
