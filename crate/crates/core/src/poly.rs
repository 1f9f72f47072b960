//! Sparse exact polynomials in one and two variables over the rationals.

use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Shorthand for exact rational constants.
pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qq(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn qpow(base: &BigRational, exp: usize) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Univariate polynomial, exponent to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<usize, BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::monomial(0, c)
    }

    pub fn x() -> Self {
        UniPoly::monomial(1, BigRational::one())
    }

    pub fn monomial(exp: usize, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        UniPoly { coeffs }
    }

    /// `X (X-1) ... (X-k+1)`, the product of `k` descending factors.
    pub fn falling_factorial(k: usize) -> Self {
        let mut out = UniPoly::one();
        for i in 0..k {
            out = &out * &(&UniPoly::x() - &UniPoly::constant(q(i as i64)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: usize) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, v) in self.terms() {
            out.add_term(e, v * c);
        }
        out
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.terms()
            .map(|(e, c)| c * qpow(x, e))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// Substitutes `X := a + b X`.
    pub fn substitute_linear(&self, a: &BigRational, b: &BigRational) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, c) in self.terms() {
            for i in 0..=e {
                let coef = c
                    * BigRational::from_integer(binomial(e, i))
                    * qpow(b, i)
                    * qpow(a, e - i);
                out.add_term(i, coef);
            }
        }
        out
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-BigRational::one())
    }
}

/// Bivariate polynomial, `(x exponent, y exponent)` to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(usize, usize), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 0, BigRational::one())
    }

    pub fn y() -> Self {
        BiPoly::monomial(0, 1, BigRational::one())
    }

    pub fn monomial(xe: usize, ye: usize, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((xe, ye), c);
        }
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, xe: usize, ye: usize) -> BigRational {
        self.coeffs
            .get(&(xe, ye))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, xe: usize, ye: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((xe, ye)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(xe, ye));
        }
    }

    pub fn scale(&self, c: &BigRational) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((xe, ye), v) in self.terms() {
            out.add_term(xe, ye, v * c);
        }
        out
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms()
            .map(|((xe, ye), c)| c * qpow(x, xe) * qpow(y, ye))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// Fixes `Y := y`, leaving a polynomial in `X`.
    pub fn at_y(&self, y: &BigRational) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((xe, ye), c) in self.terms() {
            out.add_term(xe, c * qpow(y, ye));
        }
        out
    }

    /// Substitutes `X := a + b X`.
    pub fn substitute_linear_x(&self, a: &BigRational, b: &BigRational) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((xe, ye), c) in self.terms() {
            for i in 0..=xe {
                let coef = c
                    * BigRational::from_integer(binomial(xe, i))
                    * qpow(b, i)
                    * qpow(a, xe - i);
                out.add_term(i, ye, coef);
            }
        }
        out
    }

    /// Substitutes `Y := a + b Y`.
    pub fn substitute_linear_y(&self, a: &BigRational, b: &BigRational) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((xe, ye), c) in self.terms() {
            for j in 0..=ye {
                let coef = c
                    * BigRational::from_integer(binomial(ye, j))
                    * qpow(b, j)
                    * qpow(a, ye - j);
                out.add_term(xe, j, coef);
            }
        }
        out
    }

    /// Exact division by `X^xe Y^ye`, or an error if some term is short of
    /// that monomial.
    pub fn divide_by_monomial(&self, xe: usize, ye: usize) -> crate::error::Result<BiPoly> {
        let mut out = BiPoly::zero();
        for ((i, j), c) in self.terms() {
            if i < xe || j < ye {
                return Err(crate::error::Error::NotDivisible { x_shift: xe, y_shift: ye });
            }
            out.add_term(i - xe, j - ye, c.clone());
        }
        Ok(out)
    }

    pub fn from_unipoly_in_x(p: &UniPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c.clone());
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((xe, ye), c) in rhs.terms() {
            out.add_term(xe, ye, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((xe, ye), c) in rhs.terms() {
            out.add_term(xe, ye, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((x1, y1), c1) in self.terms() {
            for ((x2, y2), c2) in rhs.terms() {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-BigRational::one())
    }
}

/// `P(X) -> P(X + Y)`: the image of a univariate polynomial under the
/// coproduct that sends the variable to `X (x) 1 + 1 (x) X`, written in two
/// variables.
pub fn add_coproduct_eval(p: &UniPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (e, c) in p.terms() {
        for i in 0..=e {
            let coef = c * BigRational::from_integer(binomial(e, i));
            out.add_term(i, e - i, coef);
        }
    }
    out
}

/// `P(X) -> P(X Y)`: the image under the coproduct that sends the variable
/// to `X (x) X`.
pub fn mult_coproduct_eval(p: &UniPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (e, c) in p.terms() {
        out.add_term(e, e, c.clone());
    }
    out
}

fn fmt_coeff_prefix(
    f: &mut std::fmt::Formatter<'_>,
    first: bool,
    c: &BigRational,
    has_var: bool,
) -> std::fmt::Result {
    let negative = c < &BigRational::zero();
    let abs = if negative { -c.clone() } else { c.clone() };
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if !has_var || !abs.is_one() {
        write!(f, "{abs}")?;
        if has_var {
            write!(f, "*")?;
        }
    }
    Ok(())
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            fmt_coeff_prefix(f, first, c, *e > 0)?;
            match e {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((xe, ye), c) in self.coeffs.iter().rev() {
            fmt_coeff_prefix(f, first, c, xe + ye > 0)?;
            match xe {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{xe}")?,
            }
            if *xe > 0 && *ye > 0 {
                write!(f, "*")?;
            }
            match ye {
                0 => {}
                1 => write!(f, "Y")?,
                _ => write!(f, "Y^{ye}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let p = &UniPoly::x() * &UniPoly::x();
        let p = &p - &UniPoly::constant(q(4));
        assert_eq!(p.eval(&q(3)), q(5));
        assert_eq!(p.degree(), Some(2));
        let zero = &p - &p;
        assert!(zero.is_zero());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(UniPoly::falling_factorial(0), UniPoly::one());
        // X(X-1)(X-2) at 5 is 60.
        assert_eq!(UniPoly::falling_factorial(3).eval(&q(5)), q(60));
        assert_eq!(UniPoly::falling_factorial(3).eval(&q(2)), q(0));
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn linear_substitution() {
        // X^2 under X := 1 - X becomes (1-X)^2.
        let p = UniPoly::monomial(2, q(1));
        let s = p.substitute_linear(&q(1), &q(-1));
        assert_eq!(s.coeff(0), q(1));
        assert_eq!(s.coeff(1), q(-2));
        assert_eq!(s.coeff(2), q(1));
    }

    #[test]
    fn bipoly_substitutions() {
        // X*Y^2 under Y := Y - 1.
        let p = BiPoly::monomial(1, 2, q(1));
        let s = p.substitute_linear_y(&q(-1), &q(1));
        assert_eq!(s.coeff(1, 2), q(1));
        assert_eq!(s.coeff(1, 1), q(-2));
        assert_eq!(s.coeff(1, 0), q(1));
        assert_eq!(s.eval(&q(2), &q(3)), q(8));
    }

    #[test]
    fn monomial_division() {
        let p = BiPoly::monomial(2, 3, q(5));
        let d = p.divide_by_monomial(1, 2).unwrap();
        assert_eq!(d.coeff(1, 1), q(5));
        assert!(p.divide_by_monomial(3, 0).is_err());
    }

    #[test]
    fn variable_coproducts() {
        // X^2 goes to X^2 + 2XY + Y^2 additively, X^2 Y^2 multiplicatively.
        let p = UniPoly::monomial(2, q(1));
        let a = add_coproduct_eval(&p);
        assert_eq!(a.coeff(2, 0), q(1));
        assert_eq!(a.coeff(1, 1), q(2));
        assert_eq!(a.coeff(0, 2), q(1));
        assert_eq!(mult_coproduct_eval(&p), BiPoly::monomial(2, 2, q(1)));
    }

    #[test]
    fn display_formatting() {
        let mut p = UniPoly::zero();
        p.add_term(2, q(1));
        p.add_term(1, q(-2));
        p.add_term(0, qq(1, 2));
        assert_eq!(p.to_string(), "X^2 - 2*X + 1/2");
        assert_eq!(UniPoly::zero().to_string(), "0");

        let mut b = BiPoly::zero();
        b.add_term(1, 1, q(3));
        b.add_term(0, 2, q(-1));
        b.add_term(0, 0, q(1));
        assert_eq!(b.to_string(), "3*X*Y - Y^2 + 1");
    }
}
