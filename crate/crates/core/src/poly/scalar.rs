use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for [`MultiPoly`](super::MultiPoly).
///
/// Anything that behaves like a signed field element works: `BigRational` is the
/// default used throughout the crate, `Rational64` is handy for small integer
/// problems, and `f64` is accepted for quick numeric evaluation.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("coefficient type cannot represent an i64")
    }
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
}
