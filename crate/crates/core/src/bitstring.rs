//! Fixed-length binary strings and the three string families.
//!
//! A [`BitString`] of length `n` stores `b_1 ... b_n` in a single `u64`,
//! with `b_1` (the leftmost printed character) in the least significant bit.
//! With that layout "no two consecutive 1s" is `word & (word >> 1) == 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::binomial_u64;
use crate::error::{Error, Result};

/// Longest representable string.
pub const MAX_LEN: usize = 64;

/// Longest length [`generate`] will materialize.
pub const MAX_GENERATE_LEN: usize = 32;

/// A binary word `b_1 b_2 ... b_n` with `n <= 64`.
///
/// Ordering is by length, then by the integer value of the word, which is the
/// canonical enumeration order used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: u8,
    word: u64,
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

pub(crate) fn check_len(n: usize) -> Result<()> {
    if n > MAX_LEN {
        return Err(Error::Argument(format!(
            "string length {n} exceeds the maximum of {MAX_LEN}"
        )));
    }
    Ok(())
}

impl BitString {
    /// Builds a string from its word; bit `i - 1` of `word` is `b_i`.
    pub fn new(len: usize, word: u64) -> Result<Self> {
        check_len(len)?;
        if word & !mask(len) != 0 {
            return Err(Error::Argument(format!(
                "word {word:#b} has bits beyond length {len}"
            )));
        }
        Ok(Self {
            len: len as u8,
            word,
        })
    }

    pub fn empty() -> Self {
        Self { len: 0, word: 0 }
    }

    /// `0^n`.
    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(len, 0)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        check_len(bits.len())?;
        let word = bits
            .iter()
            .enumerate()
            .fold(0u64, |w, (i, &b)| w | (u64::from(b) << i));
        Self::new(bits.len(), word)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    /// `b_i` for `1 <= i <= n`.
    pub fn bit(&self, i: usize) -> bool {
        assert!(
            (1..=self.len()).contains(&i),
            "coordinate {i} out of range 1..={}",
            self.len
        );
        self.word >> (i - 1) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len()).map(move |i| self.bit(i))
    }

    pub fn weight(&self) -> usize {
        self.word.count_ones() as usize
    }

    /// `self + e_i`: the string with coordinate `i` flipped.
    pub fn flip(&self, i: usize) -> Self {
        assert!((1..=self.len()).contains(&i), "coordinate {i} out of range");
        Self {
            len: self.len,
            word: self.word ^ (1u64 << (i - 1)),
        }
    }

    pub fn hamming(&self, other: &Self) -> usize {
        debug_assert_eq!(self.len, other.len);
        (self.word ^ other.word).count_ones() as usize
    }

    /// No two consecutive 1s.
    pub fn is_fibonacci(&self) -> bool {
        self.word & (self.word >> 1) == 0
    }

    /// Fibonacci, and `b_1 b_n != 1`. For `n = 1` this forces the bit to 0.
    pub fn is_lucas(&self) -> bool {
        self.is_fibonacci() && !(self.len > 0 && self.bit(1) && self.bit(self.len()))
    }

    /// Position of the first adjacent pair of 1s, if any.
    fn adjacent_ones(&self) -> Option<usize> {
        let pairs = self.word & (self.word >> 1);
        (pairs != 0).then(|| pairs.trailing_zeros() as usize + 1)
    }

    /// Token used in CSV cells, where an empty field would be ambiguous.
    pub fn csv_token(&self) -> String {
        if self.is_empty() {
            "(empty)".to_string()
        } else {
            self.to_string()
        }
    }

    /// Zero-block decomposition `0^{l_0} 1 0^{l_1} ... 1 0^{l_p}`.
    pub fn decompose_zero_blocks(&self, family: Family) -> Result<ZeroBlockDecomposition> {
        family.check_decomposable(self)?;
        let mut runs = vec![0usize];
        for b in self.bits() {
            if b {
                runs.push(0);
            } else {
                *runs.last_mut().unwrap() += 1;
            }
        }
        Ok(ZeroBlockDecomposition { runs })
    }

    /// One-block decomposition `1^{k_0} 0 1^{k_1} ... 0 1^{k_q}`.
    pub fn decompose_one_blocks(&self, family: Family) -> Result<OneBlockDecomposition> {
        family.check_decomposable(self)?;
        let mut runs = vec![0u8];
        for b in self.bits() {
            if b {
                // Fibonacci strings have runs of 1s of length at most one.
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(0);
            }
        }
        Ok(OneBlockDecomposition { runs })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "(empty)" {
            return Ok(Self::empty());
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected character '{other}'"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The three string families: all strings, Fibonacci strings, Lucas strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hypercube,
    Fibonacci,
    Lucas,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
        }
    }

    pub fn contains(&self, s: &BitString) -> bool {
        match self {
            Family::Hypercube => true,
            Family::Fibonacci => s.is_fibonacci(),
            Family::Lucas => s.is_lucas(),
        }
    }

    /// Explains why `s` is not in the family, or `Ok` if it is.
    pub fn check(&self, s: &BitString) -> Result<()> {
        let violation = match self {
            Family::Hypercube => None,
            Family::Fibonacci | Family::Lucas => {
                if let Some(i) = s.adjacent_ones() {
                    Some(format!("b_{i} b_{} = 1 (two consecutive 1s)", i + 1))
                } else if *self == Family::Lucas && !s.is_lucas() {
                    Some(format!("b_1 b_{} = 1 (starts and ends with 1)", s.len()))
                } else {
                    None
                }
            }
        };
        match violation {
            None => Ok(()),
            Some(constraint) => Err(Error::Domain {
                string: s.to_string(),
                family: self.name(),
                constraint,
            }),
        }
    }

    fn check_decomposable(&self, s: &BitString) -> Result<()> {
        if *self == Family::Hypercube {
            return Err(Error::Argument(
                "block decompositions are defined for the fibonacci and lucas families".into(),
            ));
        }
        self.check(s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "hypercube" => Ok(Family::Hypercube),
            "gamma" | "fibonacci" => Ok(Family::Fibonacci),
            "lambda" | "lucas" => Ok(Family::Lucas),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected gamma/fibonacci, lambda/lucas or hypercube".into(),
            }),
        }
    }
}

/// Run lengths `(l_0, ..., l_p)` of the 0-blocks around the `p` ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZeroBlockDecomposition {
    runs: Vec<usize>,
}

impl ZeroBlockDecomposition {
    /// Checks the Fibonacci constraints (inner runs at least 1).
    pub fn new(runs: Vec<usize>) -> Result<Self> {
        if runs.is_empty() {
            return Err(Error::Argument(
                "a zero-block vector has at least l_0".into(),
            ));
        }
        let p = runs.len() - 1;
        if p >= 2 && runs[1..p].contains(&0) {
            return Err(Error::Argument(format!(
                "inner zero runs must be >= 1, got {runs:?}"
            )));
        }
        Ok(Self { runs })
    }

    /// Number of ones.
    pub fn p(&self) -> usize {
        self.runs.len() - 1
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// `l_0 + l_p`, the zeros at the two ends.
    pub fn end_zeros(&self) -> usize {
        if self.p() == 0 {
            self.runs[0]
        } else {
            self.runs[0] + self.runs[self.p()]
        }
    }

    pub fn len(&self) -> usize {
        self.runs.iter().sum::<usize>() + self.p()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reconstruct(&self) -> Result<BitString> {
        let mut bits = Vec::with_capacity(self.len());
        for (i, &l) in self.runs.iter().enumerate() {
            if i > 0 {
                bits.push(true);
            }
            bits.extend(std::iter::repeat_n(false, l));
        }
        BitString::from_bits(&bits)
    }
}

/// Run lengths `(k_0, ..., k_q)` of the 1-blocks around the `q` zeros; each is 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneBlockDecomposition {
    runs: Vec<u8>,
}

impl OneBlockDecomposition {
    pub fn new(runs: Vec<u8>) -> Result<Self> {
        if runs.is_empty() || runs.iter().any(|&k| k > 1) {
            return Err(Error::Argument(format!(
                "one-block vector must be non-empty with entries in {{0, 1}}, got {runs:?}"
            )));
        }
        Ok(Self { runs })
    }

    /// Number of zeros.
    pub fn q(&self) -> usize {
        self.runs.len() - 1
    }

    pub fn runs(&self) -> &[u8] {
        &self.runs
    }

    pub fn weight(&self) -> usize {
        self.runs.iter().map(|&k| k as usize).sum()
    }

    /// `k_0 + k_q`. When `q = 0` both ends are the same block.
    pub fn end_ones(&self) -> usize {
        if self.q() == 0 {
            self.runs[0] as usize
        } else {
            (self.runs[0] + self.runs[self.q()]) as usize
        }
    }

    pub fn reconstruct(&self) -> Result<BitString> {
        let mut bits = Vec::new();
        for (i, &k) in self.runs.iter().enumerate() {
            if i > 0 {
                bits.push(false);
            }
            bits.extend(std::iter::repeat_n(true, k as usize));
        }
        BitString::from_bits(&bits)
    }
}

/// All strings of `family` with length `n`, in ascending word order.
pub fn generate(n: usize, family: Family) -> Result<Vec<BitString>> {
    check_len(n)?;
    if n > MAX_GENERATE_LEN {
        return Err(Error::ResourceCap {
            what: "string generation",
            n,
            cap: MAX_GENERATE_LEN,
        });
    }
    let words: Vec<u64> = match family {
        Family::Hypercube => (0..1u64 << n).collect(),
        Family::Fibonacci => fibonacci_words(n),
        Family::Lucas => fibonacci_words(n)
            .into_iter()
            .filter(|&w| n == 0 || !(w & 1 == 1 && w >> (n - 1) & 1 == 1))
            .collect(),
    };
    Ok(words
        .into_iter()
        .map(|word| BitString { len: n as u8, word })
        .collect())
}

/// Fibonacci words of length `n`, ascending. The most significant position is
/// decided first so the output comes out sorted without a final sort.
fn fibonacci_words(n: usize) -> Vec<u64> {
    fn extend(pos: usize, word: u64, above_set: bool, out: &mut Vec<u64>) {
        if pos == 0 {
            out.push(word);
            return;
        }
        extend(pos - 1, word, false, out);
        if !above_set {
            extend(pos - 1, word | 1 << (pos - 1), true, out);
        }
    }
    let mut out = Vec::new();
    extend(n, 0, false, &mut out);
    out
}

/// Number of strings of weight `w` in the family at length `n`.
///
/// Fibonacci strings use the closed form `C(n - w + 1, w)`, all strings use
/// `C(n, w)`; Lucas strings are counted by filtering [`generate`].
pub fn count_by_weight(n: usize, w: usize, family: Family) -> Result<u64> {
    check_len(n)?;
    if w > n {
        return Err(Error::Argument(format!("weight {w} exceeds length {n}")));
    }
    Ok(match family {
        Family::Hypercube => binomial_u64(n as i64, w as i64),
        Family::Fibonacci => binomial_u64((n - w + 1) as i64, w as i64),
        Family::Lucas => generate(n, family)?
            .iter()
            .filter(|s| s.weight() == w)
            .count() as u64,
    })
}

/// Whether [`count_by_weight`] uses a closed form or enumeration for `family`.
pub fn weight_count_source(family: Family) -> &'static str {
    match family {
        Family::Hypercube | Family::Fibonacci => "closed-form",
        Family::Lucas => "enumeration",
    }
}
