//! Maximal hypercubes generated directly from their top vertices, and the
//! closed-form counts `f(n, p)` (Fibonacci cubes) and `g(n, p)` (Lucas cubes).
//!
//! Every maximal cube of either family has bottom `0^n`, so it is fixed by
//! its top `0^{l_0} 1 0^{l_1} ... 1 0^{l_p}`. The admissible gap vectors are:
//!
//! * Fibonacci: `l_0, l_p` in `{0, 1}`, inner gaps in `{1, 2}`;
//! * Lucas (`p >= 1`): `l_0, l_p <= 2` with `1 <= l_0 + l_p <= 2`, inner gaps in `{1, 2}`;
//!
//! and in both cases the gaps sum to `n - p`. Dimension 0 only occurs in the
//! one-vertex graphs (`n = 0`, and `n = 1` for Lucas).

use crate::bitstring::{check_len, BitString, Family};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hypercube::InducedHypercube;
use crate::scalar::Coefficient;

/// Gap vector `(l_0, ..., l_p)` of a top vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopVertexPattern {
    gaps: Vec<usize>,
}

impl TopVertexPattern {
    /// Validates `gaps` against the constraints of `family` at length `n`.
    pub fn new(n: usize, family: Family, gaps: Vec<usize>) -> Result<Self> {
        let pattern = Self { gaps };
        if !pattern.is_admissible(n, family)? {
            return Err(Error::Argument(format!(
                "{:?} is not a maximal-cube top pattern for {family} at n = {n}",
                pattern.gaps
            )));
        }
        Ok(pattern)
    }

    pub fn dimension(&self) -> usize {
        self.gaps.len() - 1
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    fn is_admissible(&self, n: usize, family: Family) -> Result<bool> {
        let p = self.dimension();
        if self.gaps.iter().sum::<usize>() + p != n {
            return Ok(false);
        }
        if p == 0 {
            return dimension_zero_is_maximal(n, family);
        }
        let inner_ok = self.gaps[1..p].iter().all(|l| (1..=2).contains(l));
        let (first, last) = (self.gaps[0], self.gaps[p]);
        Ok(inner_ok
            && match family {
                Family::Fibonacci => first <= 1 && last <= 1,
                Family::Lucas => first <= 2 && last <= 2 && (1..=2).contains(&(first + last)),
                Family::Hypercube => return Err(unsupported(family)),
            })
    }

    pub fn to_bitstring(&self) -> BitString {
        let mut bits = Vec::new();
        for (i, &l) in self.gaps.iter().enumerate() {
            if i > 0 {
                bits.push(true);
            }
            bits.extend(std::iter::repeat_n(false, l));
        }
        BitString::from_bits(&bits).expect("pattern longer than 64")
    }
}

fn unsupported(family: Family) -> Error {
    Error::Argument(format!(
        "top-vertex characterization covers fibonacci and lucas cubes, not {family}"
    ))
}

/// `(0^n, {})` is maximal iff the graph is a single vertex.
fn dimension_zero_is_maximal(n: usize, family: Family) -> Result<bool> {
    match family {
        Family::Fibonacci => Ok(n == 0),
        Family::Lucas => Ok(n <= 1),
        Family::Hypercube => Err(unsupported(family)),
    }
}

/// All admissible gap vectors of dimension `p`, built gap by gap.
pub fn enumerate_patterns(n: usize, p: usize, family: Family) -> Result<Vec<TopVertexPattern>> {
    check_len(n)?;
    if p > n {
        return Err(Error::Argument(format!("dimension {p} exceeds n = {n}")));
    }
    if p == 0 {
        return Ok(if dimension_zero_is_maximal(n, family)? {
            vec![TopVertexPattern { gaps: vec![n] }]
        } else {
            vec![]
        });
    }
    let first_max = match family {
        Family::Fibonacci => 1,
        Family::Lucas => 2,
        Family::Hypercube => return Err(unsupported(family)),
    };
    let zeros = n - p;
    let mut out = Vec::new();
    let mut gaps = Vec::with_capacity(p + 1);
    for first in 0..=first_max.min(zeros) {
        gaps.push(first);
        fill_inner(zeros - first, p - 1, family, &mut gaps, &mut out);
        gaps.pop();
    }
    Ok(out)
}

/// Chooses `inner_left` inner gaps from `{1, 2}` and then the last gap, which
/// absorbs the `remaining` zeros.
fn fill_inner(
    remaining: usize,
    inner_left: usize,
    family: Family,
    gaps: &mut Vec<usize>,
    out: &mut Vec<TopVertexPattern>,
) {
    // Each inner gap takes 1 or 2 zeros; the last gap takes at most 2.
    if remaining < inner_left || remaining > 2 * inner_left + 2 {
        return;
    }
    if inner_left == 0 {
        let (first, last) = (gaps[0], remaining);
        let ok = match family {
            Family::Fibonacci => last <= 1,
            _ => last <= 2 && (1..=2).contains(&(first + last)),
        };
        if ok {
            gaps.push(last);
            out.push(TopVertexPattern { gaps: gaps.clone() });
            gaps.pop();
        }
        return;
    }
    for l in 1..=2.min(remaining) {
        gaps.push(l);
        fill_inner(remaining - l, inner_left - 1, family, gaps, out);
        gaps.pop();
    }
}

/// Top vertices of the maximal `p`-dimensional cubes, in ascending word order.
pub fn enumerate_tops(n: usize, p: usize, family: Family) -> Result<Vec<BitString>> {
    let mut tops: Vec<BitString> = enumerate_patterns(n, p, family)?
        .iter()
        .map(TopVertexPattern::to_bitstring)
        .collect();
    tops.sort();
    Ok(tops)
}

/// All maximal hypercubes of the family graph of order `n`, canonically sorted.
pub fn enumerate_maximal(n: usize, family: Family) -> Result<Vec<InducedHypercube>> {
    check_len(n)?;
    let bottom = BitString::zeros(n)?;
    let mut cubes = Vec::new();
    for p in 0..=n {
        for top in enumerate_tops(n, p, family)? {
            cubes.push(InducedHypercube::new(bottom, top.word())?);
        }
    }
    cubes.sort();
    Ok(cubes)
}

/// Number of maximal `p`-cubes in the Fibonacci cube of order `n`: `C(p + 1, n - 2p + 1)`.
///
/// At `p = 0` this gives 1 exactly when `n = 0`.
pub fn count_f<T: Coefficient>(n: usize, p: usize) -> T {
    let (n, p) = (n as i64, p as i64);
    binomial(p + 1, n - 2 * p + 1)
}

/// Number of maximal `p`-cubes in the Lucas cube of order `n`.
///
/// Computed as `2 C(p, n - 2p) + C(p - 1, n - 2p - 1)`, which equals
/// `(n / p) C(p, n - 2p)` without needing a division. At `p = 0` the count is
/// 1 for `n` in `{0, 1}` and 0 otherwise.
pub fn count_g<T: Coefficient>(n: usize, p: usize) -> T {
    if p == 0 {
        return if n <= 1 { T::one() } else { T::zero() };
    }
    let (n, p) = (n as i64, p as i64);
    let two = T::one() + T::one();
    two * binomial(p, n - 2 * p) + binomial(p - 1, n - 2 * p - 1)
}

/// Count of maximal `p`-cubes for either family.
pub fn count<T: Coefficient>(n: usize, p: usize, family: Family) -> Result<T> {
    match family {
        Family::Fibonacci => Ok(count_f(n, p)),
        Family::Lucas => Ok(count_g(n, p)),
        Family::Hypercube => Err(unsupported(family)),
    }
}

/// Dimensions `(p_min, p_max)` with a nonzero count: `p_min = ceil(n / 3)`,
/// `p_max = floor((n + 1) / 2)` for Fibonacci and `floor(n / 2)` for Lucas.
/// Lucas orders 0 and 1 give `(0, 0)`.
pub fn nonzero_range(n: usize, family: Family) -> Result<(usize, usize)> {
    let low = n.div_ceil(3);
    match family {
        Family::Fibonacci => Ok((low, n.div_ceil(2))),
        Family::Lucas if n <= 1 => Ok((0, 0)),
        Family::Lucas => Ok((low, n / 2)),
        Family::Hypercube => Err(unsupported(family)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn tops(n: usize, p: usize, family: Family) -> Vec<String> {
        let mut v: Vec<_> = enumerate_tops(n, p, family)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn top_examples() {
        assert_eq!(tops(4, 2, Family::Fibonacci), ["0101", "1001", "1010"]);
        assert_eq!(tops(6, 3, Family::Lucas), ["010101", "101010"]);
        assert_eq!(tops(6, 2, Family::Fibonacci), ["010010"]);
        assert_eq!(tops(0, 0, Family::Fibonacci), [""]);
        assert_eq!(tops(1, 0, Family::Lucas), ["0"]);
        assert!(tops(1, 0, Family::Fibonacci).is_empty());
        assert!(tops(1, 1, Family::Lucas).is_empty());
        assert!(enumerate_tops(3, 4, Family::Fibonacci).is_err());
        assert!(enumerate_tops(3, 1, Family::Hypercube).is_err());
    }

    #[test]
    fn pattern_validation() {
        let p = TopVertexPattern::new(6, Family::Fibonacci, vec![1, 2, 1]).unwrap();
        assert_eq!(p.to_bitstring().to_string(), "010010");
        assert_eq!(p.dimension(), 2);
        assert!(TopVertexPattern::new(6, Family::Fibonacci, vec![2, 1, 1]).is_err());
        assert!(TopVertexPattern::new(5, Family::Lucas, vec![2, 1, 0]).is_ok());
        assert!(TopVertexPattern::new(5, Family::Lucas, vec![0, 2, 0]).is_err());
        assert!(TopVertexPattern::new(7, Family::Fibonacci, vec![1, 3, 1]).is_err());
    }

    #[test]
    fn maximal_examples() {
        let g5 = enumerate_maximal(5, Family::Fibonacci).unwrap();
        let mut dims: Vec<_> = g5.iter().map(InducedHypercube::dimension).collect();
        dims.sort_unstable();
        assert_eq!(dims, [2, 2, 2, 3]);
        for family in [Family::Fibonacci, Family::Lucas] {
            let k1 = enumerate_maximal(0, family).unwrap();
            assert_eq!(k1.len(), 1);
            assert_eq!(k1[0].dimension(), 0);
        }
        assert!(enumerate_maximal(65, Family::Fibonacci).is_err());
        // far past anything the brute force could reach
        let big = enumerate_maximal(40, Family::Lucas).unwrap();
        let expected: u64 = (0..=40).map(|p| count_g::<u64>(40, p)).sum();
        assert_eq!(big.len() as u64, expected);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_f::<u64>(6, 3), 4);
        assert_eq!(count_f::<u64>(0, 0), 1);
        assert_eq!(count_f::<u64>(9, 4), 10);
        assert_eq!(count_f::<u64>(1, 0), 0);
        assert_eq!(count_g::<u64>(5, 2), 5);
        assert_eq!(count_g::<u64>(6, 3), 2);
        assert_eq!(count_g::<u64>(10, 4), 15);
        assert_eq!(count_g::<u64>(1, 0), 1);
        assert_eq!(count_g::<u64>(1, 1), 0);
        assert_eq!(count_g::<u64>(2, 0), 0);
        assert_eq!(count_g::<BigUint>(10, 4), BigUint::from(15u32));
        assert_eq!(count_f::<i64>(9, 4), 10);
    }

    #[test]
    fn counts_match_patterns() {
        for n in 0..=20 {
            for p in 0..=n {
                assert_eq!(
                    enumerate_tops(n, p, Family::Fibonacci).unwrap().len() as u64,
                    count_f::<u64>(n, p),
                    "f({n},{p})"
                );
                assert_eq!(
                    enumerate_tops(n, p, Family::Lucas).unwrap().len() as u64,
                    count_g::<u64>(n, p),
                    "g({n},{p})"
                );
            }
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(nonzero_range(6, Family::Fibonacci).unwrap(), (2, 3));
        assert_eq!(nonzero_range(0, Family::Fibonacci).unwrap(), (0, 0));
        assert_eq!(nonzero_range(0, Family::Lucas).unwrap(), (0, 0));
        assert_eq!(nonzero_range(1, Family::Lucas).unwrap(), (0, 0));
        assert_eq!(nonzero_range(11, Family::Fibonacci).unwrap(), (4, 6));
        let nonzero: Vec<usize> = (0..=11).filter(|&p| count_f::<u64>(11, p) != 0).collect();
        assert_eq!(nonzero, [4, 5, 6]);
    }
}
