//! Exact polynomial arithmetic over arbitrary-precision integers.
//!
//! [`UniPoly`] is a dense univariate polynomial in `x`; [`BiPoly`] is a
//! sparse bivariate polynomial in `(x, y)` keyed by exponent pairs. Both are
//! immutable values with canonical internal form, so `==` is mathematical
//! equality. Counting polynomials are dense in `x` and sparse in `y`, which
//! is why the two representations differ.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Invariant: no trailing zero coefficient, so the zero polynomial is the
/// empty coefficient list and `degree` is well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The monomial `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The monomial `x^k`.
    pub fn x_power(k: usize) -> Self {
        UniPoly::monomial(k, BigInt::one())
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least exponent with a nonzero coefficient; `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self^k` by repeated multiplication (exponents stay tiny here).
    pub fn pow(&self, k: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by `x^k`. Every term must have exponent >= `k`;
    /// anything else is a bug in the caller, not an input error.
    pub fn divide_by_power(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        assert!(
            self.min_degree().map_or(true, |d| d >= k),
            "divide_by_power: polynomial {self} not divisible by x^{k}"
        );
        UniPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Nonzero terms as `(exponent, decimal coefficient)` in ascending
    /// exponent order; the JSON wire form of a polynomial.
    pub fn to_terms(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.to_string()))
            .collect()
    }

    /// Inverse of [`UniPoly::to_terms`].
    pub fn from_terms(terms: &[(usize, String)]) -> Result<UniPoly> {
        let mut coeffs = Vec::new();
        for (i, s) in terms {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient {s:?}")))?;
            if coeffs.len() <= *i {
                coeffs.resize(i + 1, BigInt::zero());
            }
            coeffs[*i] += c;
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &BigInt, first: bool, has_vars: bool) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    if !has_vars || !mag.is_one() {
        write!(f, "{mag}")?;
    }
    Ok(())
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, k: usize) -> fmt::Result {
    match k {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{k}"),
    }
}

impl fmt::Display for UniPoly {
    /// Canonical rendering with descending powers, e.g. `x^3+2x^2+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_coeff(f, c, first, i > 0)?;
            write_power(f, 'x', i)?;
            first = false;
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial; maps `(x power, y power)` to a nonzero
/// coefficient. A `BTreeMap` keeps term order deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    /// The monomial `c * x^i * y^j`.
    pub fn monomial(i: usize, j: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending `(x, y)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c);
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, &(-c));
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i, j), a) in &self.terms {
            out.add_term(*i, *j, &(a * c));
        }
        out
    }

    pub fn pow(&self, k: usize) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Least `x` exponent over all terms; `None` for zero.
    pub fn min_x_power(&self) -> Option<usize> {
        self.terms.keys().map(|(i, _)| *i).min()
    }

    /// Largest `x` exponent over all terms.
    pub fn max_x_power(&self) -> Option<usize> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    /// Largest `y` exponent over all terms.
    pub fn max_y_power(&self) -> Option<usize> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    /// Exact division by `x^k`; same contract as [`UniPoly::divide_by_power`].
    pub fn divide_by_power(&self, k: usize) -> BiPoly {
        assert!(
            self.min_x_power().map_or(true, |d| d >= k),
            "divide_by_power: polynomial {self} not divisible by x^{k}"
        );
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((i - k, *j), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((i, j), c) in &self.terms {
            acc += c * x.pow(*i as u32) * y.pow(*j as u32);
        }
        acc
    }

    /// Collapse the `y` variable: `Q(x, 1)`.
    pub fn set_y_to_one(&self) -> UniPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for ((i, _), c) in &self.terms {
            if coeffs.len() <= *i {
                coeffs.resize(i + 1, BigInt::zero());
            }
            coeffs[*i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Embed a univariate polynomial as a bivariate one with `y` power 0.
    pub fn from_uni(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i, 0, c);
        }
        out
    }

    /// Nonzero terms as `(i, j, decimal coefficient)` ascending.
    pub fn to_terms(&self) -> Vec<(usize, usize, String)> {
        self.terms
            .iter()
            .map(|((i, j), c)| (*i, *j, c.to_string()))
            .collect()
    }

    /// Inverse of [`BiPoly::to_terms`].
    pub fn from_terms(terms: &[(usize, usize, String)]) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (i, j, s) in terms {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient {s:?}")))?;
            out.add_term(*i, *j, &c);
        }
        Ok(out)
    }
}

impl fmt::Display for BiPoly {
    /// Descending `x` power, then descending `y` power: `x^3+3x^2y+xy^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            write_coeff(f, c, first, i + j > 0)?;
            write_power(f, 'x', *i)?;
            write_power(f, 'y', *j)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn upoly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_squares_binomial() {
        // (x + x^2)^2 = x^2 + 2x^3 + x^4
        let p = upoly(&[0, 1, 1]);
        assert_eq!(p.mul(&p), upoly(&[0, 0, 1, 2, 1]));
    }

    #[test]
    fn one_is_neutral() {
        let p = upoly(&[3, 0, 7]);
        assert_eq!(p.mul(&UniPoly::one()), p);
    }

    #[test]
    fn bivariate_difference_of_squares() {
        // (x + y)(x - y) = x^2 - y^2
        let x = BiPoly::monomial(1, 0, BigInt::one());
        let y = BiPoly::monomial(0, 1, BigInt::one());
        let prod = x.add(&y).mul(&x.sub(&y));
        let expected = BiPoly::monomial(2, 0, BigInt::one()).sub(&BiPoly::monomial(0, 2, BigInt::one()));
        assert_eq!(prod, expected);
    }

    #[test]
    fn divide_by_power_shifts() {
        assert_eq!(upoly(&[0, 0, 1, 2]).divide_by_power(1), upoly(&[0, 1, 2]));
        assert_eq!(UniPoly::zero().divide_by_power(3), UniPoly::zero());
        assert_eq!(upoly(&[0, 0, 0, 1, 3]).divide_by_power(2), upoly(&[0, 1, 3]));
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn divide_by_power_panics_on_nondivisible() {
        upoly(&[1, 1]).divide_by_power(1);
    }

    #[test]
    fn evaluate_zero_poly() {
        assert_eq!(UniPoly::zero().evaluate(&BigInt::from(17)), BigInt::zero());
    }

    #[test]
    fn set_y_to_one_sums_rows() {
        // x^3 + 3x^2 y + x y^3 -> x^3 + 3x^2 + x
        let mut b = BiPoly::zero();
        b.add_term(3, 0, &BigInt::one());
        b.add_term(2, 1, &BigInt::from(3));
        b.add_term(1, 3, &BigInt::one());
        assert_eq!(b.set_y_to_one(), upoly(&[0, 1, 3, 1]));

        let flat = BiPoly::from_uni(&upoly(&[5, 0, 2]));
        assert_eq!(flat.set_y_to_one(), upoly(&[5, 0, 2]));
        assert_eq!(BiPoly::zero().set_y_to_one(), UniPoly::zero());
    }

    #[test]
    fn display_formats() {
        assert_eq!(upoly(&[0, 1, 2, 1]).to_string(), "x^3+2x^2+x");
        assert_eq!(upoly(&[2, -3, 1]).to_string(), "x^2-3x+2");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::one().to_string(), "1");
        let mut b = BiPoly::zero();
        b.add_term(3, 0, &BigInt::one());
        b.add_term(2, 1, &BigInt::from(3));
        b.add_term(1, 3, &BigInt::one());
        assert_eq!(b.to_string(), "x^3+3x^2y+xy^3");
    }

    #[test]
    fn term_round_trip() {
        let p = upoly(&[0, 1, 0, 42]);
        assert_eq!(UniPoly::from_terms(&p.to_terms()).unwrap(), p);
        let mut b = BiPoly::zero();
        b.add_term(1, 9, &BigInt::from(123456789012345678i64));
        assert_eq!(BiPoly::from_terms(&b.to_terms()).unwrap(), b);
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-1_000_000i64..1_000_000, 0..9)
            .prop_map(|cs| UniPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn divide_inverts_shift(a in small_poly(), k in 0usize..5) {
            let shifted = a.mul(&UniPoly::x_power(k));
            prop_assert_eq!(shifted.divide_by_power(k), a);
        }

        #[test]
        fn eval_is_ring_hom(a in small_poly(), b in small_poly(), x in -50i64..50) {
            let x = BigInt::from(x);
            prop_assert_eq!(a.add(&b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
            prop_assert_eq!(a.mul(&b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        }
    }
}
