//! Integer polynomials in the two indeterminates `q` and `t`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd;

/// Exponent pair `(deg_q, deg_t)` of a single term.
pub type QtExp = (u32, u32);

/// A polynomial in `Z[q, t]`.
///
/// Terms are kept sorted by `(q, t)` exponent in ascending lexicographic
/// order with no zero coefficients, so structural equality is polynomial
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: Vec<(QtExp, BigInt)>,
}

/// Graded-lexicographic comparison with `q > t`.
pub fn grlex_cmp(a: &QtExp, b: &QtExp) -> Ordering {
    (a.0 + a.1)
        .cmp(&(b.0 + b.1))
        .then_with(|| a.0.cmp(&b.0))
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, q: u32, t: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            QtPoly { terms: vec![((q, t), c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `1 - q^a t^b`, the factor shape of the Macdonald constants.
    pub fn one_minus(a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return Self::zero();
        }
        QtPoly { terms: vec![((0, 0), BigInt::one()), ((a, b), -BigInt::one())] }
    }

    /// Build from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (QtExp, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<QtExp, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        Self::from_sorted_map(map)
    }

    pub(crate) fn from_sorted_map(map: BTreeMap<QtExp, BigInt>) -> Self {
        QtPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Caller guarantees sorted, deduplicated, zero-free input.
    pub(crate) fn from_sorted_vec(terms: Vec<(QtExp, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        QtPoly { terms }
    }

    pub fn terms(&self) -> &[(QtExp, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The constant value if the polynomial has degree 0 (or is zero).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.last().map(|((a, _), _)| *a).unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.iter().map(|((_, b), _)| *b).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|((a, b), _)| a + b).max().unwrap_or(0)
    }

    /// Largest `q^a t^b` dividing every term; `(0, 0)` for zero.
    pub fn monomial_content(&self) -> QtExp {
        let mut it = self.terms.iter();
        let Some(((a0, b0), _)) = it.next() else {
            return (0, 0);
        };
        let (mut a, mut b) = (*a0, *b0);
        for ((x, y), _) in it {
            a = a.min(*x);
            b = b.min(*y);
        }
        (a, b)
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading coefficient under graded-lex order with `q > t`.
    pub fn leading_coeff_grlex(&self) -> Option<&BigInt> {
        self.terms
            .iter()
            .max_by(|x, y| grlex_cmp(&x.0, &y.0))
            .map(|(_, c)| c)
    }

    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        QtPoly { terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Divide by `q^a t^b`; the caller guarantees divisibility.
    pub(crate) fn shift_down(&self, a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        QtPoly { terms: self.terms.iter().map(|((x, y), c)| ((x - a, y - b), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        QtPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Exact division by a nonzero integer; `None` when some coefficient
    /// is not a multiple.
    pub fn div_integer(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (quo, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return None;
            }
            out.push((*e, quo));
        }
        Some(QtPoly { terms: out })
    }

    /// Exact quotient `self / d` in `Z[q,t]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &QtPoly) -> Option<QtPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let ((a, b), c) = &d.terms[0];
            let (ma, mb) = self.monomial_content();
            if ma < *a || mb < *b {
                return None;
            }
            return self.shift_down(*a, *b).div_integer(c);
        }
        gcd::div_exact(self, d)
    }

    /// Greatest common divisor in `Z[q,t]`, normalized to a positive
    /// graded-lex leading coefficient.
    pub fn gcd(&self, other: &QtPoly) -> QtPoly {
        gcd::gcd(self, other)
    }

    pub fn neg_if_negative_lead(self) -> Self {
        match self.leading_coeff_grlex() {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }

    /// `p(1/q, 1/t) * q^{deg_q p} t^{deg_t p}`.
    pub fn reversed(&self) -> Self {
        let dq = self.degree_q();
        let dt = self.degree_t();
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((dq - a, dt - b), c.clone())))
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, b), c) in &self.terms {
            let term = BigRational::from_integer(c.clone())
                * num_traits::pow(q0.clone(), *a as usize)
                * num_traits::pow(t0.clone(), *b as usize);
            acc += term;
        }
        acc
    }

    /// Substitute `q = q0`, `t = t0` in integers.
    pub fn eval_integer(&self, q0: &BigInt, t0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((a, b), c) in &self.terms {
            acc += c * num_traits::pow(q0.clone(), *a as usize) * num_traits::pow(t0.clone(), *b as usize);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Terms in display order: ascending total degree, then `q`-heavier first.
    pub fn display_terms(&self) -> Vec<(QtExp, BigInt)> {
        let mut v = self.terms.clone();
        v.sort_by(|x, y| {
            (x.0 .0 + x.0 .1)
                .cmp(&(y.0 .0 + y.0 .1))
                .then_with(|| y.0 .0.cmp(&x.0 .0))
        });
        v
    }
}

fn merge(a: &[(QtExp, BigInt)], b: &[(QtExp, BigInt)], negate_b: bool) -> Vec<(QtExp, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (e, c) in &b[j..] {
        out.push((*e, if negate_b { -c } else { c.clone() }));
    }
    out
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        QtPoly { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        QtPoly { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        if self.is_zero() || rhs.is_zero() {
            return QtPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut map: BTreeMap<QtExp, BigInt> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &rhs.terms {
                *map.entry((a + x, b + y)).or_default() += c * d;
            }
        }
        QtPoly::from_sorted_map(map)
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(mut self) -> QtPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QtPoly {
            type Output = QtPoly;
            fn $m(self, rhs: QtPoly) -> QtPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_monomial(f: &mut impl fmt::Write, a: i64, b: i64) -> fmt::Result {
    let pow = |f: &mut dyn fmt::Write, v: &str, e: i64| -> fmt::Result {
        match e {
            0 => Ok(()),
            1 => write!(f, "{v}"),
            e => write!(f, "{v}^{e}"),
        }
    };
    pow(f, "q", a)?;
    pow(f, "t", b)
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.display_terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let unit = *a == 0 && *b == 0;
            if !mag.is_one() || unit {
                write!(f, "{mag}")?;
            }
            fmt_monomial(f, i64::from(*a), i64::from(*b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn expansion_of_product() {
        // (1 - t)(1 - q t^2) = 1 - t - q t^2 + q t^3
        let a = QtPoly::one_minus(0, 1);
        let b = QtPoly::one_minus(1, 2);
        let expected = p(&[((0, 0), 1), ((0, 1), -1), ((1, 2), -1), ((1, 3), 1)]);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn display_orders_by_degree_then_q() {
        let x = p(&[((1, 3), 1), ((0, 0), 1), ((1, 2), -1), ((0, 1), -1)]);
        assert_eq!(x.to_string(), "1-t-qt^2+qt^3");
        assert_eq!(QtPoly::one_minus(1, 0).to_string(), "1-q");
        assert_eq!(p(&[((2, 0), 2), ((1, 1), -3), ((0, 2), 1)]).to_string(), "2q^2-3qt+t^2");
    }

    #[test]
    fn exact_division() {
        let a = QtPoly::one_minus(1, 1);
        let b = QtPoly::one_minus(0, 3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(prod.mul_monomial(2, 1).div_exact(&QtPoly::monomial(1, 2, 1)), Some(prod));
    }

    #[test]
    fn grlex_leading_coefficient() {
        let x = p(&[((0, 0), 1), ((0, 3), 5), ((2, 1), -7)]);
        // q^2 t and t^3 share total degree 3; q-heavier wins
        assert_eq!(x.leading_coeff_grlex(), Some(&BigInt::from(-7)));
    }

    #[test]
    fn reversal() {
        let x = p(&[((0, 0), 1), ((1, 1), -1)]);
        assert_eq!(x.reversed(), p(&[((1, 1), 1), ((0, 0), -1)]));
    }
}
