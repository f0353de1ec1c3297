use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use smallvec::SmallVec;

use super::composition::Exponent;
use crate::error::{Error, Result};
use crate::qt::{LaurentPoly, QtMonomial, QtPoly, QtScalar};

/// Sparse polynomial in `x_1..x_n` over `Q(q,t)`, terms in lexicographic
/// order of exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, QtScalar>,
}

/// Output contributions of a linear operator on one monomial.
pub type MonomialImage = Vec<(Exponent, LaurentPoly)>;

const PAR_THRESHOLD: usize = 48;

impl XPolynomial {
    pub fn zero(n: usize) -> Self {
        XPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, QtScalar::one())
    }

    pub fn constant(n: usize, c: QtScalar) -> Self {
        Self::monomial(SmallVec::from_elem(0, n), c)
    }

    pub fn monomial(exp: Exponent, c: QtScalar) -> Self {
        let n = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        XPolynomial { n, terms }
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e: Exponent = SmallVec::from_elem(0, n);
        e[i - 1] = 1;
        Self::monomial(e, QtScalar::one())
    }

    /// Sum of terms, merging repeated exponents.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, QtScalar)>) -> Self {
        let mut acc = Accumulator::new(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length must equal variable count");
            acc.push_scalar(e, &c);
        }
        acc.finish()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &QtScalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, QtScalar)> {
        self.terms.into_iter()
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

    pub fn coeff(&self, exp: &[u32]) -> QtScalar {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lexicographically largest exponent and its coefficient.
    pub fn leading(&self) -> Option<(&Exponent, &QtScalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Keep terms whose exponents satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        XPolynomial {
            n: self.n,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.filter(|e| e.iter().sum::<u32>() == d)
    }

    /// Terms with degree `dx` in the first `split` variables and `dy` in the rest.
    pub fn bidegree_part(&self, split: usize, dx: u32, dy: u32) -> Self {
        self.filter(|e| e[..split].iter().sum::<u32>() == dx && e[split..].iter().sum::<u32>() == dy)
    }

    pub fn scale(&self, c: &QtScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        let map = |(e, v): (&Exponent, &QtScalar)| (e.clone(), v * c);
        let terms = if self.len() >= PAR_THRESHOLD {
            self.terms.par_iter().map(map).collect::<Vec<_>>().into_iter().collect()
        } else {
            self.terms.iter().map(map).collect()
        };
        XPolynomial { n: self.n, terms }
    }

    /// Multiply every coefficient by a Laurent polynomial in `q,t`.
    pub fn scale_laurent(&self, l: &LaurentPoly) -> Self {
        self.linear_map(|e| vec![(e.into(), l.clone())])
    }

    fn check_index(&self, op: &'static str, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { op, index: i, n: self.n });
        }
        Ok(())
    }

    /// Multiply by `x_i`.
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        self.check_index("mul_var", i)?;
        Ok(self.map_exponents(|e| e[i - 1] += 1))
    }

    /// Exact quotient `f / x_i`.
    pub fn divide_by_xi(&self, i: usize) -> Result<Self> {
        self.check_index("divide_by_xi", i)?;
        if let Some((e, _)) = self.terms.iter().find(|(e, _)| e[i - 1] == 0) {
            return Err(Error::NotDivisible { var: i, monomial: fmt_exponent(e) });
        }
        Ok(self.map_exponents(|e| e[i - 1] -= 1))
    }

    /// Apply an injective exponent map.
    fn map_exponents(&self, f: impl Fn(&mut Exponent)) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                f(&mut e);
                (e, c.clone())
            })
            .collect();
        XPolynomial { n: self.n, terms }
    }

    /// `s_ij f`.
    pub fn apply_swap(&self, i: usize, j: usize) -> Result<Self> {
        self.check_index("apply_swap", i)?;
        self.check_index("apply_swap", j)?;
        if i >= j {
            return Err(Error::IndexOutOfRange { op: "apply_swap", index: i, n: self.n });
        }
        Ok(self.map_exponents(|e| e.swap(i - 1, j - 1)))
    }

    /// `τ_i f`, the substitution `x_i -> q x_i`.
    pub fn apply_qshift(&self, i: usize) -> Result<Self> {
        self.check_index("apply_qshift", i)?;
        Ok(XPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * &QtScalar::monomial(i64::from(e[i - 1]), 0)))
                .collect(),
        })
    }

    /// Value at `x_i = t^{i-1}`.
    pub fn principal_specialize(&self) -> QtScalar {
        let mut acc = Accumulator::new(0);
        for (e, c) in &self.terms {
            let tpow: i64 = e.iter().enumerate().map(|(i, &a)| i as i64 * i64::from(a)).sum();
            acc.push(SmallVec::new(), c, &LaurentPoly::t_pow(tpow));
        }
        acc.finish().coeff(&[])
    }

    /// Coefficientwise `q -> 1/q, t -> 1/t`.
    pub fn bar_coeffs(&self) -> Self {
        let terms = if self.len() >= PAR_THRESHOLD {
            self.terms.par_iter().map(|(e, c)| (e.clone(), c.bar())).collect::<Vec<_>>().into_iter().collect()
        } else {
            self.terms.iter().map(|(e, c)| (e.clone(), c.bar())).collect()
        };
        XPolynomial { n: self.n, terms }
    }

    /// Extend a monomial action linearly.
    pub fn linear_map<F>(&self, image: F) -> Self
    where
        F: Fn(&[u32]) -> MonomialImage + Sync,
    {
        let mut acc = Accumulator::new(self.n);
        if self.len() >= PAR_THRESHOLD {
            let images: Vec<_> = self.terms.par_iter().map(|(e, _)| image(e)).collect();
            for ((_, c), img) in self.terms.iter().zip(images) {
                for (oe, l) in img {
                    acc.push(oe, c, &l);
                }
            }
        } else {
            for (e, c) in &self.terms {
                for (oe, l) in image(e) {
                    acc.push(oe, c, &l);
                }
            }
        }
        acc.finish()
    }

    /// Sum of many polynomials with a single normalization per monomial.
    pub fn sum<'a>(n: usize, parts: impl IntoIterator<Item = &'a XPolynomial>) -> Self {
        let mut acc = Accumulator::new(n);
        for p in parts {
            for (e, c) in &p.terms {
                acc.push_scalar(e.clone(), c);
            }
        }
        acc.finish()
    }

    /// Linear combination `Σ c_k f_k`.
    pub fn combination<'a>(n: usize, parts: impl IntoIterator<Item = (&'a QtScalar, &'a XPolynomial)>) -> Self {
        let scaled: Vec<XPolynomial> = parts.into_iter().map(|(c, p)| p.scale(c)).collect();
        Self::sum(n, scaled.iter())
    }

    /// Product `f(x) g(y)` in the `n + m` variables `(x, y)`.
    pub fn tensor(&self, other: &XPolynomial) -> Self {
        let n = self.n + other.n;
        let mut acc = Accumulator::new(n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Exponent = a.iter().chain(b.iter()).copied().collect();
                acc.push_product(e, c, d);
            }
        }
        acc.finish()
    }

    /// Act on the block of variables `start+1 ..= start+len` with an
    /// operator on `len`-variable polynomials; the other variables are
    /// spectators.
    pub fn act_on_block<F>(&self, start: usize, len: usize, op: F) -> Result<Self>
    where
        F: Fn(&XPolynomial) -> Result<XPolynomial> + Sync,
    {
        let end = start + len;
        if end > self.n {
            return Err(Error::IndexOutOfRange { op: "act_on_block", index: end, n: self.n });
        }
        let mut fibers: BTreeMap<Exponent, BTreeMap<Exponent, QtScalar>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let outer: Exponent = e[..start].iter().chain(e[end..].iter()).copied().collect();
            let inner: Exponent = e[start..end].into();
            fibers.entry(outer).or_default().insert(inner, c.clone());
        }
        let fibers: Vec<_> = fibers.into_iter().collect();
        let images = fibers
            .into_par_iter()
            .map(|(outer, inner)| op(&XPolynomial { n: len, terms: inner }).map(|img| (outer, img)))
            .collect::<Result<Vec<_>>>()?;
        let mut terms = BTreeMap::new();
        for (outer, img) in images {
            for (ie, c) in img.terms {
                let e: Exponent = outer[..start].iter().chain(ie.iter()).chain(outer[start..].iter()).copied().collect();
                terms.insert(e, c);
            }
        }
        Ok(XPolynomial { n: self.n, terms })
    }

    /// Exact quotient by `x_i - x_j`.
    pub fn div_exact_binomial(&self, i: usize, j: usize) -> Result<Self> {
        self.div_exact_linear(i, &QtScalar::one(), j)
    }

    /// Exact quotient by `c x_i - x_j` for a nonzero scalar `c`.
    pub fn div_exact_linear(&self, i: usize, c: &QtScalar, j: usize) -> Result<Self> {
        self.check_index("div_exact_linear", i)?;
        self.check_index("div_exact_linear", j)?;
        if i == j || c.is_zero() {
            return Err(Error::InexactDivision("degenerate linear divisor".into()));
        }
        let cinv = c.inv()?;
        let (i, j) = (i - 1, j - 1);
        // fibers: fixed exponents outside {i, j} and fixed e_i + e_j
        let mut fibers: BTreeMap<(Exponent, u32), BTreeMap<u32, QtScalar>> = BTreeMap::new();
        for (e, v) in &self.terms {
            let mut key = e.clone();
            key[i] = 0;
            key[j] = 0;
            fibers.entry((key, e[i] + e[j])).or_default().insert(e[i], v.clone());
        }
        let mut out = BTreeMap::new();
        for ((key, s), coeffs) in fibers {
            let remainder = || Error::InexactDivision(format!("nonzero remainder modulo x{}-x{}", i + 1, j + 1));
            if s == 0 {
                return Err(remainder());
            }
            // coefficient of x_i^k x_j^{s-k} is c b_{k-1} - b_k
            let mut b = QtScalar::zero();
            for k in (1..=s).rev() {
                let ck = coeffs.get(&k).cloned().unwrap_or_default();
                b = &(&ck + &b) * &cinv;
                if !b.is_zero() {
                    let mut e = key.clone();
                    e[i] = k - 1;
                    e[j] = s - k;
                    out.insert(e, b.clone());
                }
            }
            let c0 = coeffs.get(&0).cloned().unwrap_or_default();
            if !(&c0 + &b).is_zero() {
                return Err(remainder());
            }
        }
        Ok(XPolynomial { n: self.n, terms: out })
    }

    /// Invariance under `s_k` for all `k` in `from..to`.
    pub fn is_symmetric_in(&self, from: usize, to: usize) -> bool {
        (from..to).all(|k| self.apply_swap(k, k + 1).is_ok_and(|s| &s == self))
    }

    /// Raw term map.
    pub fn coefficient_map(&self) -> &BTreeMap<Exponent, QtScalar> {
        &self.terms
    }
}

/// Collects contributions per output monomial, grouping them by
/// denominator so that each group is normalized once.
pub(crate) struct Accumulator {
    n: usize,
    map: BTreeMap<Exponent, Vec<(QtPoly, QtPoly)>>,
}

impl Accumulator {
    pub(crate) fn new(n: usize) -> Self {
        Accumulator { n, map: BTreeMap::new() }
    }

    fn push_raw(&mut self, e: Exponent, num: QtPoly, den: QtPoly) {
        if num.is_zero() {
            return;
        }
        let buckets = self.map.entry(e).or_default();
        if let Some(slot) = buckets.iter_mut().find(|(d, _)| *d == den) {
            slot.1 = &slot.1 + &num;
        } else {
            buckets.push((den, num));
        }
    }

    pub(crate) fn push_scalar(&mut self, e: Exponent, c: &QtScalar) {
        self.push_raw(e, c.numer().clone(), c.denom().clone());
    }

    pub(crate) fn push(&mut self, e: Exponent, c: &QtScalar, l: &LaurentPoly) {
        if l.is_one() {
            return self.push_scalar(e, c);
        }
        let (p, m) = l.to_poly_shift();
        let (num, den) = shift_fraction(&(c.numer() * &p), c.denom(), m);
        self.push_raw(e, num, den);
    }

    pub(crate) fn push_product(&mut self, e: Exponent, a: &QtScalar, b: &QtScalar) {
        if a.denom().is_one() && b.denom().is_one() {
            return self.push_raw(e, a.numer() * b.numer(), QtPoly::one());
        }
        self.push_scalar(e, &(a * b));
    }

    pub(crate) fn finish(self) -> XPolynomial {
        let reduce = |(e, buckets): (Exponent, Vec<(QtPoly, QtPoly)>)| {
            let c: QtScalar = buckets
                .into_iter()
                .map(|(den, num)| QtScalar::new(num, den).expect("nonzero denominator"))
                .sum();
            (e, c)
        };
        let terms: Vec<(Exponent, QtScalar)> = if self.map.len() >= PAR_THRESHOLD {
            self.map.into_par_iter().map(reduce).collect()
        } else {
            self.map.into_iter().map(reduce).collect()
        };
        XPolynomial { n: self.n, terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

fn shift_fraction(num: &QtPoly, den: &QtPoly, m: QtMonomial) -> (QtPoly, QtPoly) {
    let up = |e: i64| if e > 0 { e as u32 } else { 0 };
    let down = |e: i64| if e < 0 { (-e) as u32 } else { 0 };
    (num.mul_monomial(up(m.q), up(m.t)), den.mul_monomial(down(m.q), down(m.t)))
}

pub(crate) fn fmt_exponent(e: &[u32]) -> String {
    let mut s = String::new();
    for (i, &a) in e.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&format!("x{}", i + 1));
        if a > 1 {
            s.push_str(&format!("^{a}"));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.get_mut(e) {
                Some(v) => {
                    *v = &*v + c;
                    if v.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        XPolynomial { n: self.n, terms }
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut acc = Accumulator::new(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let e: Exponent = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                acc.push_product(e, c, d);
            }
        }
        acc.finish()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XPolynomial {
            type Output = XPolynomial;
            fn $m(self, rhs: XPolynomial) -> XPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        -&self
    }
}

impl fmt::Display for XPolynomial {
    /// Leading monomial first, e.g. `x1 + (q-qt)/(1-qt)*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let constant = e.iter().all(|&a| a == 0);
            let mono = fmt_exponent(e);
            if constant {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                let s = c.to_string();
                if c.denom().is_one() && c.numer().len() == 1 {
                    write!(f, "{s}*{mono}")?;
                } else if c.denom().is_one() {
                    write!(f, "({s})*{mono}")?;
                } else {
                    write!(f, "{s}*{mono}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial[n={}]({self})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        v.into()
    }

    fn x(n: usize, i: usize) -> XPolynomial {
        XPolynomial::var(n, i)
    }

    #[test]
    fn swap_examples() {
        let f = XPolynomial::monomial(e(&[2, 1]), QtScalar::one());
        assert_eq!(f.apply_swap(1, 2).unwrap(), XPolynomial::monomial(e(&[1, 2]), QtScalar::one()));
        let sym = &x(2, 1) * &x(2, 2);
        assert_eq!(sym.apply_swap(1, 2).unwrap(), sym);
        assert!(f.apply_swap(1, 3).is_err());
    }

    #[test]
    fn qshift_examples() {
        let f = XPolynomial::monomial(e(&[2, 0]), QtScalar::one());
        assert_eq!(f.apply_qshift(1).unwrap(), XPolynomial::monomial(e(&[2, 0]), QtScalar::monomial(2, 0)));
        assert_eq!(XPolynomial::one(2).apply_qshift(1).unwrap(), XPolynomial::one(2));
        assert_eq!(x(2, 2).apply_qshift(1).unwrap(), x(2, 2));
    }

    #[test]
    fn division_by_variable() {
        let f = XPolynomial::monomial(e(&[2, 1]), QtScalar::one());
        assert_eq!(f.divide_by_xi(1).unwrap(), XPolynomial::monomial(e(&[1, 1]), QtScalar::one()));
        let c = QtScalar::from_poly(QtPoly::one_minus(1, 1));
        assert_eq!(x(2, 2).scale(&c).divide_by_xi(2).unwrap(), XPolynomial::constant(2, c));
        let err = (&x(2, 1) + &x(2, 2)).divide_by_xi(1).unwrap_err();
        assert_eq!(err, Error::NotDivisible { var: 1, monomial: "x2".into() });
    }

    #[test]
    fn principal_specialization() {
        let p = &x(2, 1) + &x(2, 2);
        assert_eq!(p.principal_specialize(), QtScalar::from_poly(QtPoly::from_terms([((0, 0), 1), ((0, 1), 1)])));
        assert_eq!((&x(2, 1) * &x(2, 2)).principal_specialize(), QtScalar::t());
        assert_eq!(XPolynomial::constant(2, QtScalar::q()).principal_specialize(), QtScalar::q());
    }

    #[test]
    fn bar_coefficients() {
        let f = x(2, 1).scale(&QtScalar::from_poly(QtPoly::one_minus(0, 1)));
        assert_eq!(f.bar_coeffs().coeff(&[1, 0]).to_string(), "(-1+t)/t");
        assert_eq!(x(2, 1).bar_coeffs(), x(2, 1));
    }

    #[test]
    fn binomial_division() {
        let f = &(&x(3, 1) - &x(3, 2)) * &(&(&x(3, 1) * &x(3, 3)) + &XPolynomial::constant(3, QtScalar::q()));
        let g = f.div_exact_binomial(1, 2).unwrap();
        assert_eq!(&g * &(&x(3, 1) - &x(3, 2)), f);
        assert!(x(3, 1).div_exact_binomial(1, 2).is_err());
    }

    #[test]
    fn blocks_and_tensor() {
        let f = &x(2, 1) + &x(2, 2).scale(&QtScalar::q());
        let g = x(2, 2);
        let fg = f.tensor(&g);
        assert_eq!(fg.n(), 4);
        let swapped = fg.act_on_block(0, 2, |p| p.apply_swap(1, 2)).unwrap();
        assert_eq!(swapped, f.apply_swap(1, 2).unwrap().tensor(&g));
        let y_side = fg.act_on_block(2, 2, |p| p.mul_var(1)).unwrap();
        assert_eq!(y_side, f.tensor(&XPolynomial::monomial(e(&[1, 1]), QtScalar::one())));
    }

    #[test]
    fn display() {
        let c = QtScalar::new(QtPoly::from_terms([((1, 0), 1), ((1, 1), -1)]), QtPoly::one_minus(1, 1)).unwrap();
        let f = &x(2, 1) + &x(2, 2).scale(&c);
        assert_eq!(f.to_string(), "x1 + (q-qt)/(1-qt)*x2");
        assert_eq!(XPolynomial::one(2).to_string(), "1");
    }
}
