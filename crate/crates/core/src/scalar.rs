//! Coefficient types for exact counting.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num};

/// An exact numeric type able to hold counts of hypercubes.
///
/// Every routine that produces a count (binomials, `f`/`g` numbers,
/// polynomial coefficients, series rows) is written against this trait, so
/// the same code runs on `u64`, `u128`, `i64` or `BigUint`. Only addition and
/// subtraction are used on the hot paths; a result never goes below zero, so
/// unsigned types are safe as long as the counts themselves fit.
pub trait Coefficient: Num + Clone + Debug + Display + FromPrimitive + PartialOrd {}

impl<T> Coefficient for T where T: Num + Clone + Debug + Display + FromPrimitive + PartialOrd {}

/// Converts a `usize` into a coefficient.
///
/// Panics when the value is not representable, which cannot happen for the
/// small integers (lengths, dimensions) this is called with.
pub(crate) fn from_usize<T: Coefficient>(value: usize) -> T {
    T::from_usize(value).expect("coefficient type cannot represent a small integer")
}
