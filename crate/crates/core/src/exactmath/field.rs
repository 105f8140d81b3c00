use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

use super::poly::{Polynomial, RootSplit};

/// Scalars the linear algebra and normal-form engines run over.
///
/// Every algorithm in this crate branches on exact zero tests, so only
/// exact fields give meaningful answers; the bound is loose enough that
/// floating point types also satisfy it for plain ring arithmetic.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive
{
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("small integers are representable")
    }

    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("small integers are representable")
    }
}

impl<T> Field for T where
    T: Clone + PartialEq + Debug + Display + Num + Neg<Output = T> + FromPrimitive
{
}

/// An exact, ordered field that can locate the roots of a polynomial that
/// lie in the field itself.
pub trait ExactField: Field + Ord + Hash {
    /// Split `p` into linear factors over the field as far as possible.
    fn split_roots(p: &Polynomial<Self>) -> RootSplit<Self>;
}
