//! Elements of the rational function field `Q(q,t)` in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::QtPoly;
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of integer polynomials in `q` and `t`.
///
/// Invariants: `den != 0`, `gcd(num, den) = 1` in `Z[q,t]`, the graded-lex
/// leading coefficient of `den` is positive, and zero is stored as `0/1`.
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtScalar {
    num: QtPoly,
    den: QtPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with an explicit error for division by zero.
pub fn qt_arith(a: &QtScalar, b: &QtScalar, op: ArithOp) -> Result<QtScalar> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl QtScalar {
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Normalize an arbitrary fraction with nonzero denominator.
    fn reduce(num: QtPoly, den: QtPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QtScalar { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: QtPoly, den: QtPoly) -> Self {
        if den.leading_coeff_grlex().is_some_and(|c| c.is_negative()) {
            QtScalar { num: -num, den: -den }
        } else {
            QtScalar { num, den }
        }
    }

    pub fn zero() -> Self {
        QtScalar { num: QtPoly::zero(), den: QtPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QtScalar { num: QtPoly::constant(c), den: QtPoly::one() }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtScalar { num: p, den: QtPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(QtPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QtPoly::t())
    }

    /// The Laurent monomial `q^a t^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        let pos = |e: i64| if e > 0 { e as u32 } else { 0 };
        let neg = |e: i64| if e < 0 { (-e) as u32 } else { 0 };
        QtScalar {
            num: QtPoly::monomial(1, pos(a), pos(b)),
            den: QtPoly::monomial(1, neg(a), neg(b)),
        }
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(0, k)
    }

    pub fn numer(&self) -> &QtPoly {
        &self.num
    }

    pub fn denom(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a single monomial (a Laurent polynomial).
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QtScalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The involution `q -> 1/q`, `t -> 1/t`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // a(1/q,1/t) / b(1/q,1/t) = rev(a)/rev(b) * q^(db_q - da_q) t^(db_t - da_t)
        let sq = i64::from(self.den.degree_q()) - i64::from(self.num.degree_q());
        let st = i64::from(self.den.degree_t()) - i64::from(self.num.degree_t());
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        let up = |e: i64| if e > 0 { e as u32 } else { 0 };
        let down = |e: i64| if e < 0 { (-e) as u32 } else { 0 };
        num = num.mul_monomial(up(sq), up(st));
        den = den.mul_monomial(down(sq), down(st));
        // reversal preserves coprimality up to a monomial factor
        let (nq, nt) = num.monomial_content();
        let (dq, dt) = den.monomial_content();
        let (cq, ct) = (nq.min(dq), nt.min(dt));
        let num = num.shift_down(cq, ct);
        let den = den.shift_down(cq, ct);
        Self::fix_sign(num, den)
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return Err(Error::Pole { q: q0.to_string(), t: t0.to_string() });
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Numerator and denominator with the sign moved so that the
    /// denominator's lowest-degree term is positive.
    pub fn display_parts(&self) -> (QtPoly, QtPoly) {
        let flip = self.den.display_terms().first().is_some_and(|(_, c)| c.is_negative());
        if flip {
            (-&self.num, -&self.den)
        } else {
            (self.num.clone(), self.den.clone())
        }
    }

    /// Re-run normalization; a canonical value is a fixed point.
    pub fn renormalized(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    /// `self * c` where `c` is an integer-coefficient polynomial in canonical form.
    pub fn mul_poly(&self, p: &QtPoly) -> Self {
        self * &Self::from_poly(p.clone())
    }
}

impl Default for QtScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QtScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<QtPoly> for QtScalar {
    fn from(p: QtPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &QtScalar {
    type Output = QtScalar;
    fn add(self, rhs: &QtScalar) -> QtScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return QtScalar::reduce(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the sum
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return QtScalar::zero();
            }
            return QtScalar::fix_sign(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return QtScalar::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        QtScalar::fix_sign(num, &(&b1 * &d1) * &g)
    }
}

impl Neg for &QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        QtScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        QtScalar { num: -self.num, den: self.den }
    }
}

impl Sub for &QtScalar {
    type Output = QtScalar;
    fn sub(self, rhs: &QtScalar) -> QtScalar {
        self + &(-rhs)
    }
}

impl Mul for &QtScalar {
    type Output = QtScalar;
    fn mul(self, rhs: &QtScalar) -> QtScalar {
        if self.is_zero() || rhs.is_zero() {
            return QtScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QtScalar { num: &self.num * &rhs.num, den: QtPoly::one() };
        }
        // cross-cancel: (a/b)(c/d) with gcd(a,d), gcd(c,b)
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &QtPoly, g: &QtPoly| if g.is_one() { p.clone() } else { p.div_exact(g).expect("gcd divides") };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        QtScalar::fix_sign(num, den)
    }
}

impl Div for &QtScalar {
    type Output = QtScalar;
    /// Panics on division by zero; use [`QtScalar::checked_div`] to get an error.
    fn div(self, rhs: &QtScalar) -> QtScalar {
        self.checked_div(rhs).expect("division by zero in Q(q,t)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QtScalar {
            type Output = QtScalar;
            fn $m(self, rhs: QtScalar) -> QtScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QtScalar> for QtScalar {
            type Output = QtScalar;
            fn $m(self, rhs: &QtScalar) -> QtScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QtScalar {
    fn sum<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for QtScalar {
    fn product<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for QtScalar {
    /// The stored sign is fixed by the graded-lex leading term of the
    /// denominator; for display the sign is moved so the denominator's
    /// lowest term is positive, e.g. `q/(1-qt)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = self.display_parts();
        let wrap = |p: &QtPoly| if p.len() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

impl fmt::Debug for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(num: QtPoly, den: QtPoly) -> QtScalar {
        QtScalar::new(num, den).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn self_division_is_one() {
        let x = QtScalar::from_poly(QtPoly::one_minus(1, 1));
        assert!(qt_arith(&x, &x, ArithOp::Div).unwrap().is_one());
    }

    #[test]
    fn common_denominator_identity() {
        let a = s(QtPoly::one(), QtPoly::one_minus(0, 1));
        let plus = QtPoly::from_terms([((0, 0), 1), ((0, 1), 1)]);
        let b = s(QtPoly::one(), plus);
        let expected = s(QtPoly::constant(2), QtPoly::one_minus(0, 2));
        assert_eq!(&a + &b, expected);
    }

    #[test]
    fn product_expansion() {
        let a = QtScalar::from_poly(QtPoly::one_minus(0, 1));
        let b = QtScalar::from_poly(QtPoly::one_minus(1, 2));
        let expected = QtPoly::from_terms([((0, 0), 1), ((0, 1), -1), ((1, 2), -1), ((1, 3), 1)]);
        assert_eq!(&a * &b, QtScalar::from_poly(expected));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = QtScalar::one();
        assert_eq!(qt_arith(&a, &QtScalar::zero(), ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(QtScalar::new(QtPoly::one(), QtPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn bar_of_one_minus_t() {
        let x = QtScalar::from_poly(QtPoly::one_minus(0, 1));
        let expected = s(QtPoly::from_terms([((0, 1), 1), ((0, 0), -1)]), QtPoly::t());
        assert_eq!(x.bar(), expected);
        assert_eq!(x.bar().to_string(), "(-1+t)/t");
        assert!(QtScalar::one().bar().is_one());
    }

    #[test]
    fn bar_is_an_involution_on_fraction() {
        let x = s(QtPoly::q(), QtPoly::one_minus(1, 1));
        assert_eq!(x.to_string(), "q/(1-qt)");
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn evaluation() {
        let x = QtScalar::from_poly(QtPoly::one_minus(1, 1));
        assert_eq!(x.eval(&rat(2, 1), &rat(3, 1)).unwrap(), rat(-5, 1));
        let pole = s(QtPoly::one(), QtPoly::one_minus(0, 1));
        assert!(matches!(pole.eval(&rat(2, 1), &rat(1, 1)), Err(Error::Pole { .. })));
        let lhs = x.bar().eval(&rat(2, 1), &rat(3, 1)).unwrap();
        let rhs = x.eval(&rat(1, 2), &rat(1, 3)).unwrap();
        assert_eq!(lhs, rat(5, 6));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_monomials() {
        let x = QtScalar::monomial(-1, 2);
        assert_eq!(x.to_string(), "t^2/q");
        assert!((&x * &QtScalar::monomial(1, -2)).is_one());
        assert_eq!(QtScalar::t_pow(-1).bar(), QtScalar::t());
    }

    #[test]
    fn sign_is_carried_by_numerator() {
        let x = s(QtPoly::one(), -QtPoly::one_minus(0, 1));
        // 1/(t-1): leading coefficient of the denominator must be positive
        assert!(x.denom().leading_coeff_grlex().unwrap().is_positive());
        assert_eq!(x.to_string(), "-1/(1-t)");
    }
}
