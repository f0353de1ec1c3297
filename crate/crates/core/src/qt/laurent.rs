use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::QtPoly;
use super::scalar::QtScalar;
use super::QtMonomial;

/// An integer Laurent polynomial in `q` and `t`.
///
/// Operators act on monomials with coefficients of this shape, which keeps
/// the inner loops free of gcd computations.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q: i64, t: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(c.into(), q, t);
        out
    }

    pub fn from_monomial(m: QtMonomial) -> Self {
        Self::monomial(1, m.q, m.t)
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(1, 0, k)
    }

    /// `t^a - t^b`.
    pub fn t_diff(a: i64, b: i64) -> Self {
        let mut out = Self::t_pow(a);
        out.add_term(-BigInt::one(), 0, b);
        out
    }

    pub fn add_term(&mut self, c: BigInt, q: i64, t: i64) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((q, t)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for ((q, t), c) in &other.terms {
            self.add_term(c.clone(), *q, *t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                out.add_term(c * d, a + x, b + y);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: QtMonomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|((a, b), c)| ((a + m.q, b + m.t), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Split as `p * q^sq t^st` with `p` a polynomial not divisible by `q` or `t`.
    pub fn to_poly_shift(&self) -> (QtPoly, QtMonomial) {
        let Some(min_q) = self.terms.keys().map(|e| e.0).min() else {
            return (QtPoly::zero(), QtMonomial::ONE);
        };
        let min_t = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        let p = QtPoly::from_terms(
            self.terms.iter().map(|((a, b), c)| (((a - min_q) as u32, (b - min_t) as u32), c.clone())),
        );
        (p, QtMonomial::new(min_q, min_t))
    }

    pub fn to_scalar(&self) -> QtScalar {
        let (p, m) = self.to_poly_shift();
        &QtScalar::from_poly(p) * &m.to_scalar()
    }
}

impl From<QtMonomial> for LaurentPoly {
    fn from(m: QtMonomial) -> Self {
        Self::from_monomial(m)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_scalar())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_and_convert() {
        let mut l = LaurentPoly::t_pow(-1);
        l.add_term(BigInt::from(-1), 0, 0);
        let (p, m) = l.to_poly_shift();
        assert_eq!(p, QtPoly::one_minus(0, 1));
        assert_eq!(m, QtMonomial::new(0, -1));
        assert_eq!(l.to_scalar().to_string(), "(1-t)/t");
    }

    #[test]
    fn product_cancels() {
        let a = LaurentPoly::t_diff(1, 0);
        let b = LaurentPoly::t_pow(-1);
        assert_eq!(a.mul(&b), LaurentPoly::t_diff(0, -1));
        assert!(LaurentPoly::t_pow(2).mul(&LaurentPoly::t_pow(-2)).is_one());
    }
}
