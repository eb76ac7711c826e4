//! Binomial coefficients under the zero convention.

use crate::scalar::Coefficient;

/// `C(a, b)`, taken to be zero whenever `b < 0`, `a < 0` or `b > a`.
///
/// Built row by row with additions only, so an intermediate value never
/// exceeds the final one and a fixed-width `T` overflows only if the result
/// itself does.
pub fn binomial<T: Coefficient>(a: i64, b: i64) -> T {
    if a < 0 || b < 0 || b > a {
        return T::zero();
    }
    let b = b.min(a - b) as usize;
    let a = a as usize;
    let mut row = vec![T::zero(); b + 1];
    row[0] = T::one();
    for i in 1..=a {
        for j in (1..=b.min(i)).rev() {
            row[j] = row[j].clone() + row[j - 1].clone();
        }
    }
    row[b].clone()
}

/// `C(a, b)` as `u64`.
pub fn binomial_u64(a: i64, b: i64) -> u64 {
    binomial(a, b)
}
