//! Induced subcubes of `Q_n` in (bottom, support) form, and a brute-force
//! search for the maximal ones inside a string family.
//!
//! An induced `Q_k` in `Q_n` is fixed by its bottom vertex (the unique one of
//! minimum weight) and its support (the `k` coordinates on which its vertices
//! vary). The bottom is 0 on the support and the vertex set is every string
//! that agrees with the bottom off the support.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitstring::{generate, BitString, Family};
use crate::error::{Error, Result};

/// Default largest `n` accepted by [`oracle_maximal`].
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// An induced hypercube, stored canonically.
///
/// Ordered by bottom, then by the support read as a bitmask (bit `i - 1` for
/// coordinate `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CubeRecord", into = "CubeRecord")]
pub struct InducedHypercube {
    bottom: BitString,
    support: u64,
}

impl InducedHypercube {
    /// `support` is a bitmask of coordinates; it must avoid the 1s of `bottom`.
    pub fn new(bottom: BitString, support: u64) -> Result<Self> {
        let width = if bottom.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << bottom.len()) - 1
        };
        if support & !width != 0 {
            return Err(Error::Argument(format!(
                "support {support:#b} reaches beyond length {}",
                bottom.len()
            )));
        }
        if support & bottom.word() != 0 {
            return Err(Error::Argument(format!(
                "bottom {bottom} has a 1 on a support coordinate"
            )));
        }
        Ok(Self { bottom, support })
    }

    /// Support given as 1-based coordinates.
    pub fn from_coordinates(bottom: BitString, coordinates: &[usize]) -> Result<Self> {
        let mut support = 0u64;
        for &i in coordinates {
            if !(1..=bottom.len()).contains(&i) {
                return Err(Error::Argument(format!(
                    "coordinate {i} out of range 1..={}",
                    bottom.len()
                )));
            }
            support |= 1 << (i - 1);
        }
        Self::new(bottom, support)
    }

    /// The 0-dimensional cube `{v}`.
    pub fn vertex(v: BitString) -> Self {
        Self {
            bottom: v,
            support: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.bottom.len()
    }

    pub fn bottom(&self) -> BitString {
        self.bottom
    }

    pub fn top(&self) -> BitString {
        BitString::new(self.n(), self.bottom.word() | self.support).unwrap()
    }

    pub fn support_mask(&self) -> u64 {
        self.support
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|i| self.support >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub fn contains(&self, v: &BitString) -> bool {
        v.len() == self.n() && v.word() & !self.support == self.bottom.word()
    }

    /// The `2^k` vertices, in ascending word order.
    pub fn vertex_set(&self) -> Vec<BitString> {
        let mut out = Vec::with_capacity(1 << self.dimension());
        // Walk the submasks of the support upward.
        let mut sub = 0u64;
        loop {
            out.push(BitString::new(self.n(), self.bottom.word() | sub).unwrap());
            if sub == self.support {
                break;
            }
            sub = (sub.wrapping_sub(self.support)) & self.support;
        }
        out
    }

    /// Every vertex of the cube lies in `family`.
    pub fn is_induced_in(&self, family: Family) -> bool {
        self.vertex_set().iter().all(|v| family.contains(v))
    }

    /// The cube doubled along coordinate `i`, which must be off the support.
    ///
    /// If `b_i = 1` the doubled cube's bottom has `b_i` cleared.
    pub fn extend(&self, i: usize) -> Self {
        let bit = 1u64 << (i - 1);
        debug_assert_eq!(self.support & bit, 0);
        Self {
            bottom: BitString::new(self.n(), self.bottom.word() & !bit).unwrap(),
            support: self.support | bit,
        }
    }

    /// All one-coordinate doublings that stay inside `family`. Empty iff the
    /// cube is maximal there.
    pub fn extensions(&self, family: Family) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=self.n())
            .filter(|i| self.support >> (i - 1) & 1 == 0)
            .map(|i| self.extend(i))
            .filter(|h| h.is_induced_in(family))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Debug for InducedHypercube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "InducedHypercube {{ bottom: \"{}\", support: {:?} }}",
            self.bottom,
            self.support()
        )
    }
}

/// JSON form: `{"bottom": "...", "support": [i, ...], "top": "..."}` with 1-based coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeRecord {
    pub bottom: BitString,
    pub support: Vec<usize>,
    pub top: BitString,
}

impl From<InducedHypercube> for CubeRecord {
    fn from(h: InducedHypercube) -> Self {
        Self {
            bottom: h.bottom(),
            support: h.support(),
            top: h.top(),
        }
    }
}

impl TryFrom<CubeRecord> for InducedHypercube {
    type Error = Error;

    fn try_from(r: CubeRecord) -> Result<Self> {
        let h = Self::from_coordinates(r.bottom, &r.support)?;
        if h.top() != r.top {
            return Err(Error::Argument(format!(
                "top {} does not match bottom {} and support {:?}",
                r.top, r.bottom, r.support
            )));
        }
        Ok(h)
    }
}

/// All maximal induced hypercubes of the `family` graph of order `n`, found
/// by exhaustive growth with the default cap.
pub fn oracle_maximal(n: usize, family: Family) -> Result<Vec<InducedHypercube>> {
    oracle_maximal_with_cap(n, family, DEFAULT_ORACLE_CAP)
}

/// Exhaustive search for maximal induced hypercubes.
///
/// Starting from every vertex, cubes are grown one coordinate at a time
/// through [`InducedHypercube::extensions`]; each canonical cube is visited
/// once. A cube is reported iff it has no extension. Uses no knowledge of
/// what maximal cubes look like.
pub fn oracle_maximal_with_cap(
    n: usize,
    family: Family,
    cap: usize,
) -> Result<Vec<InducedHypercube>> {
    if n > cap {
        return Err(Error::ResourceCap {
            what: "brute-force maximal cube search",
            n,
            cap,
        });
    }
    let mut visited: HashSet<InducedHypercube> = HashSet::new();
    let mut stack: Vec<InducedHypercube> = Vec::new();
    let mut maximal = Vec::new();
    for v in generate(n, family)? {
        let root = InducedHypercube::vertex(v);
        if visited.insert(root) {
            stack.push(root);
        }
        while let Some(h) = stack.pop() {
            let ext = h.extensions(family);
            if ext.is_empty() {
                maximal.push(h);
            }
            for e in ext {
                if visited.insert(e) {
                    stack.push(e);
                }
            }
        }
    }
    maximal.sort();
    maximal.dedup();
    Ok(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn cube(bottom: &str, support: &[usize]) -> InducedHypercube {
        InducedHypercube::from_coordinates(bs(bottom), support).unwrap()
    }

    fn strings(h: &InducedHypercube) -> Vec<String> {
        let mut v: Vec<_> = h.vertex_set().iter().map(ToString::to_string).collect();
        v.sort();
        v
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(
            strings(&cube("0000", &[1, 4])),
            ["0000", "0001", "1000", "1001"]
        );
        assert_eq!(strings(&cube("000000", &[])), ["000000"]);
        let h = cube("00000", &[1, 3, 5]);
        assert_eq!(h.vertex_set().len(), 8);
        assert!(h.vertex_set().iter().all(BitString::is_fibonacci));
        assert_eq!(h.top(), bs("10101"));
        assert_eq!(h.dimension(), 3);
    }

    #[test]
    fn invariants_enforced() {
        assert!(InducedHypercube::from_coordinates(bs("100"), &[1]).is_err());
        assert!(InducedHypercube::from_coordinates(bs("100"), &[4]).is_err());
        assert!(InducedHypercube::from_coordinates(bs("100"), &[0]).is_err());
        assert!(InducedHypercube::new(bs("00"), 0b100).is_err());
    }

    #[test]
    fn membership() {
        assert!(!cube("0000", &[1, 2]).is_induced_in(Family::Fibonacci));
        let ends = cube("000000", &[1, 6]);
        assert!(ends.is_induced_in(Family::Fibonacci));
        assert!(!ends.is_induced_in(Family::Lucas));
        assert!(cube("00100", &[1, 5]).is_induced_in(Family::Fibonacci));
        assert!(cube("0000", &[1, 2, 3, 4]).is_induced_in(Family::Hypercube));
    }

    #[test]
    fn extension_cases() {
        for n in 1..=8 {
            let origin = InducedHypercube::vertex(BitString::zeros(n).unwrap());
            assert_eq!(origin.extensions(Family::Fibonacci).len(), n);
        }
        let ext = cube("000000", &[1, 4]).extensions(Family::Fibonacci);
        assert!(ext.iter().any(|h| h.top() == bs("100101")));
        // bottom with a 1 off the support: doubling clears it
        let h = InducedHypercube::vertex(bs("0100"));
        let ext = h.extensions(Family::Fibonacci);
        assert!(ext.contains(&cube("0000", &[2])));
        assert!(ext.iter().all(|e| e.vertex_set().contains(&bs("0100"))));
        // the unique maximal square of Gamma_6
        assert!(cube("000000", &[2, 5])
            .extensions(Family::Fibonacci)
            .is_empty());
    }

    fn dims(cubes: &[InducedHypercube]) -> Vec<usize> {
        let mut d: Vec<_> = cubes.iter().map(InducedHypercube::dimension).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn oracle_small_cases() {
        let g4 = oracle_maximal(4, Family::Fibonacci).unwrap();
        let mut tops: Vec<_> = g4.iter().map(|h| h.top().to_string()).collect();
        tops.sort();
        assert_eq!(tops, ["0101", "1001", "1010"]);
        assert_eq!(dims(&g4), [2, 2, 2]);

        let l6 = oracle_maximal(6, Family::Lucas).unwrap();
        assert_eq!(dims(&l6), [2, 2, 2, 3, 3]);

        let l1 = oracle_maximal(1, Family::Lucas).unwrap();
        assert_eq!(l1, vec![InducedHypercube::vertex(bs("0"))]);

        for family in [Family::Fibonacci, Family::Lucas, Family::Hypercube] {
            let k1 = oracle_maximal(0, family).unwrap();
            assert_eq!(k1, vec![InducedHypercube::vertex(BitString::empty())]);
        }
        // Q_n is its own unique maximal cube.
        let q5 = oracle_maximal(5, Family::Hypercube).unwrap();
        assert_eq!(q5, vec![cube("00000", &[1, 2, 3, 4, 5])]);
    }

    #[test]
    fn oracle_cap() {
        assert!(matches!(
            oracle_maximal(13, Family::Fibonacci),
            Err(Error::ResourceCap { cap: 12, .. })
        ));
        assert!(oracle_maximal_with_cap(13, Family::Lucas, 13).is_ok());
    }

    #[test]
    fn json_shape() {
        let h = cube("0000", &[1, 4]);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, r#"{"bottom":"0000","support":[1,4],"top":"1001"}"#);
        let back: InducedHypercube = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        let bad = r#"{"bottom":"0000","support":[1,4],"top":"1000"}"#;
        assert!(serde_json::from_str::<InducedHypercube>(bad).is_err());
    }
}
