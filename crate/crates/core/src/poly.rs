//! Counting polynomials `C'(G, x) = sum_p (number of maximal p-cubes) x^p`
//! for the Fibonacci and Lucas cubes, computed three independent ways:
//! from the closed-form counts, from the order recurrence, and by expanding
//! the bivariate generating function in `y`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitstring::Family;
use crate::error::{Error, Result};
use crate::maximal;
use crate::scalar::{from_usize, Coefficient};

/// Polynomial in `x` with exact coefficients; `coeffs[p]` multiplies `x^p`.
///
/// Trailing zeros are always trimmed, so equality is coefficient-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountingPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> CountingPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    /// `c x^p`.
    pub fn monomial(c: T, p: usize) -> Self {
        let mut coeffs = vec![T::zero(); p + 1];
        coeffs[p] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> T {
        self.coeffs.get(p).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Sum of the coefficients: the total number of maximal cubes.
    pub fn eval_at_one(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |a, b| a + b)
    }

    /// Adds `c x^p` (`negative` subtracts). The result must stay non-negative.
    fn add_term(&mut self, c: T, p: usize, negative: bool) {
        if self.coeffs.len() <= p {
            self.coeffs.resize(p + 1, T::zero());
        }
        let cur = self.coeffs[p].clone();
        self.coeffs[p] = if negative { cur - c } else { cur + c };
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl<T: Coefficient> Add for &CountingPolynomial<T> {
    type Output = CountingPolynomial<T>;

    fn add(self, rhs: Self) -> CountingPolynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        CountingPolynomial::new((0..len).map(|p| self.coeff(p) + rhs.coeff(p)).collect())
    }
}

/// Descending powers, zero terms omitted, unit coefficients omitted:
/// `4x^3+x^2`, `x`, `1`. The zero polynomial prints as `0`.
impl<T: Coefficient> fmt::Display for CountingPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (p, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => f.write_str("x")?,
                (_, false) => write!(f, "{c}x")?,
            }
            if p > 1 {
                write!(f, "^{p}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coefficient + FromStr> FromStr for CountingPolynomial<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let mut poly = Self::zero();
        for term in compact.split('+') {
            let (coef, power) = match term.split_once('x') {
                None => (term, 0),
                Some((coef, rest)) => {
                    let power = match rest.strip_prefix('^') {
                        None if rest.is_empty() => 1,
                        None => return Err(bad("expected '^' after x")),
                        Some(e) => e.parse::<usize>().map_err(|_| bad("bad exponent"))?,
                    };
                    (coef, power)
                }
            };
            let c = if coef.is_empty() {
                T::one()
            } else {
                coef.parse::<T>().map_err(|_| bad("bad coefficient"))?
            };
            poly.add_term(c, power, false);
        }
        Ok(poly)
    }
}

/// JSON form `{"n": n, "coeffs": [c0, c1, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord<T> {
    pub n: usize,
    pub coeffs: Vec<T>,
}

impl<T: Coefficient> PolyRecord<T> {
    pub fn new(n: usize, poly: &CountingPolynomial<T>) -> Self {
        Self {
            n,
            coeffs: poly.coeffs().to_vec(),
        }
    }

    pub fn polynomial(&self) -> CountingPolynomial<T> {
        CountingPolynomial::new(self.coeffs.clone())
    }
}

fn require_cube_family(family: Family) -> Result<()> {
    if family == Family::Hypercube {
        return Err(Error::Argument(
            "counting polynomials are defined for the fibonacci and lucas families".into(),
        ));
    }
    Ok(())
}

/// Coefficients straight from `f(n, p)` or `g(n, p)`.
pub fn poly_by_formula<T: Coefficient>(n: usize, family: Family) -> Result<CountingPolynomial<T>> {
    require_cube_family(family)?;
    let coeffs = (0..=n)
        .map(|p| maximal::count(n, p, family))
        .collect::<Result<Vec<T>>>()?;
    Ok(CountingPolynomial::new(coeffs))
}

/// Initial polynomials of the order recurrence.
fn recurrence_bases<T: Coefficient>(family: Family) -> Vec<CountingPolynomial<T>> {
    let x = |c: usize, p: usize| CountingPolynomial::monomial(from_usize::<T>(c), p);
    match family {
        // 1, x, 2x
        Family::Fibonacci => vec![x(1, 0), x(1, 1), x(2, 1)],
        // 1, 1, 2x, 3x, 2x^2
        _ => vec![x(1, 0), x(1, 0), x(2, 1), x(3, 1), x(2, 2)],
    }
}

/// `C'_n = x (C'_{n-2} + C'_{n-3})` from the base cases (three for
/// Fibonacci, five for Lucas).
pub fn poly_by_recurrence<T: Coefficient>(
    n: usize,
    family: Family,
) -> Result<CountingPolynomial<T>> {
    require_cube_family(family)?;
    let mut rows = recurrence_bases::<T>(family);
    while rows.len() <= n {
        let m = rows.len();
        let next = (&rows[m - 2] + &rows[m - 3]).shift();
        rows.push(next);
    }
    Ok(rows.swap_remove(n))
}

/// Coefficients of `y^0 .. y^max_n` in a generating function `N(x, y) / (1 - x y^2 (1 + y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable<T> {
    rows: Vec<CountingPolynomial<T>>,
}

impl<T: Coefficient> SeriesTable<T> {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, m: usize) -> &CountingPolynomial<T> {
        &self.rows[m]
    }

    pub fn rows(&self) -> &[CountingPolynomial<T>] {
        &self.rows
    }
}

/// Numerator terms `(y-power, x-power, negative)`.
fn numerator(family: Family) -> &'static [(usize, usize, bool)] {
    match family {
        // 1 + xy + xy^2
        Family::Fibonacci => &[(0, 0, false), (1, 1, false), (2, 1, false)],
        // 1 + y + xy^2 + xy^3 - xy^4
        _ => &[
            (0, 0, false),
            (1, 0, false),
            (2, 1, false),
            (3, 1, false),
            (4, 1, true),
        ],
    }
}

/// Expands the family's generating function in `y`.
///
/// Multiplying out the denominator `1 - x y^2 - x y^3` gives
/// `row_m = x (row_{m-2} + row_{m-3}) + [y^m] N(x, y)`.
pub fn expand_generating_function<T: Coefficient>(
    max_n: usize,
    family: Family,
) -> Result<SeriesTable<T>> {
    require_cube_family(family)?;
    let numerator = numerator(family);
    let mut rows: Vec<CountingPolynomial<T>> = Vec::with_capacity(max_n + 1);
    for m in 0..=max_n {
        let mut row = CountingPolynomial::zero();
        if m >= 2 {
            row = &row + &rows[m - 2];
        }
        if m >= 3 {
            row = &row + &rows[m - 3];
        }
        row = row.shift();
        for &(ypow, xpow, negative) in numerator.iter().filter(|t| t.0 == m) {
            debug_assert_eq!(ypow, m);
            row.add_term(T::one(), xpow, negative);
        }
        rows.push(row);
    }
    Ok(SeriesTable { rows })
}
