//! Polynomial representation of the affine Hecke algebra of type A.

mod word;

pub use word::{all_reduced_words, apply_tw, ReducedWord};

use crate::error::{Error, Result};
use crate::poly::{Exponent, MonomialImage, XPolynomial};
use crate::qt::{LaurentPoly, QtScalar};

fn check_ti(op: &'static str, f: &XPolynomial, i: usize) -> Result<()> {
    if i == 0 || i >= f.n() {
        return Err(Error::IndexOutOfRange { op, index: i, n: f.n() });
    }
    Ok(())
}

fn with(e: &[u32], k: usize, a: u32, b: u32) -> Exponent {
    let mut out: Exponent = e.into();
    out[k] = a;
    out[k + 1] = b;
    out
}

/// `T_i x^e` via the closed monomial rule (`i` is 0-based here).
fn ti_image(e: &[u32], k: usize) -> MonomialImage {
    let (a, b) = (e[k], e[k + 1]);
    let one_minus_t = LaurentPoly::t_diff(0, 1);
    let t_minus_one = LaurentPoly::t_diff(1, 0);
    let mut out: MonomialImage = Vec::new();
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => out.push((e.into(), LaurentPoly::t_pow(1))),
        std::cmp::Ordering::Greater => {
            for p in (b + 1..a).rev() {
                out.push((with(e, k, p, a + b - p), one_minus_t.clone()));
            }
            out.push((with(e, k, b, a), LaurentPoly::one()));
        }
        std::cmp::Ordering::Less => {
            for p in a..b {
                out.push((with(e, k, p, a + b - p), t_minus_one.clone()));
            }
            out.push((with(e, k, b, a), LaurentPoly::t_pow(1)));
        }
    }
    out
}

/// `T_i^{-1} = (t^{-1} - 1) + t^{-1} T_i` on a monomial.
fn ti_inv_image(e: &[u32], k: usize) -> MonomialImage {
    let mut out: Vec<(Exponent, LaurentPoly)> = Vec::new();
    let tinv = LaurentPoly::t_pow(-1);
    let mut diag = LaurentPoly::t_diff(-1, 0);
    for (oe, l) in ti_image(e, k) {
        let l = l.mul(&tinv);
        if oe.as_slice() == e {
            diag.add_assign(&l);
        } else {
            out.push((oe, l));
        }
    }
    if !diag.is_zero() {
        out.push((e.into(), diag));
    }
    out
}

pub fn apply_ti(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_ti("T_i", f, i)?;
    Ok(f.linear_map(|e| ti_image(e, i - 1)))
}

pub fn apply_ti_inv(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_ti("T_i^-1", f, i)?;
    Ok(f.linear_map(|e| ti_inv_image(e, i - 1)))
}

/// `ω x^η = q^{η_1} x^{(η_2,…,η_n,η_1)}`.
pub fn apply_omega(f: &XPolynomial) -> XPolynomial {
    f.linear_map(|e| {
        let mut out: Exponent = e.into();
        out.rotate_left(1);
        vec![(out, LaurentPoly::monomial(1, i64::from(e[0]), 0))]
    })
}

pub fn apply_omega_inv(f: &XPolynomial) -> XPolynomial {
    f.linear_map(|e| {
        let mut out: Exponent = e.into();
        out.rotate_right(1);
        let last = i64::from(e[e.len() - 1]);
        vec![(out, LaurentPoly::monomial(1, -last, 0))]
    })
}

fn check_affine(op: &'static str, f: &XPolynomial) -> Result<()> {
    if f.n() < 2 {
        return Err(Error::IndexOutOfRange { op, index: 0, n: f.n() });
    }
    Ok(())
}

/// `T_0 = ω T_1 ω^{-1}`.
pub fn apply_t0(f: &XPolynomial) -> Result<XPolynomial> {
    check_affine("T_0", f)?;
    Ok(apply_omega(&apply_ti(&apply_omega_inv(f), 1)?))
}

pub fn apply_t0_inv(f: &XPolynomial) -> Result<XPolynomial> {
    check_affine("T_0^-1", f)?;
    Ok(apply_omega(&apply_ti_inv(&apply_omega_inv(f), 1)?))
}

/// `T_0` from its defining rational expression
/// `t + (qt x_n - x_1)/(q x_n - x_1) (s_0 - 1)` with `s_0 = s_{1n} τ_1 τ_n^{-1}`,
/// using one exact division by `q x_n - x_1`.
pub fn apply_t0_defining(f: &XPolynomial) -> Result<XPolynomial> {
    check_affine("T_0", f)?;
    let n = f.n();
    let s0 = f.linear_map(|e| {
        let mut out: Exponent = e.into();
        out.swap(0, n - 1);
        vec![(out, LaurentPoly::monomial(1, i64::from(e[0]) - i64::from(e[n - 1]), 0))]
    });
    let diff = &s0 - f;
    let qt = QtScalar::monomial(1, 1);
    let numer = &diff.mul_var(n)?.scale(&qt) - &diff.mul_var(1)?;
    let quotient = numer.div_exact_linear(n, &QtScalar::q(), 1)?;
    Ok(&f.scale(&QtScalar::t()) + &quotient)
}

fn check_y(f: &XPolynomial, i: usize) -> Result<()> {
    if i == 0 || i > f.n() {
        return Err(Error::IndexOutOfRange { op: "Y_i", index: i, n: f.n() });
    }
    Ok(())
}

/// `Y_i = t^{-n+i} T_i…T_{n-1} ω T_1^{-1}…T_{i-1}^{-1}`.
pub fn apply_yi(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_y(f, i)?;
    let n = f.n();
    let mut g = f.clone();
    for k in (1..i).rev() {
        g = apply_ti_inv(&g, k)?;
    }
    g = apply_omega(&g);
    for k in (i..n).rev() {
        g = apply_ti(&g, k)?;
    }
    Ok(g.scale(&QtScalar::t_pow(i as i64 - n as i64)))
}

fn check_pair(op: &'static str, f: &XPolynomial, i: usize, j: usize, max: usize) -> Result<()> {
    if i == 0 || i >= j || j > max {
        return Err(Error::IndexOutOfRange { op, index: if i == 0 || i >= j { i } else { j }, n: f.n() });
    }
    Ok(())
}

/// Apply a word of letters right to left; `inv` selects `T^{-1}`.
fn apply_letters(f: &XPolynomial, letters: &[usize], inv: bool) -> Result<XPolynomial> {
    let mut g = f.clone();
    for &k in letters.iter().rev() {
        g = if inv { apply_ti_inv(&g, k)? } else { apply_ti(&g, k)? };
    }
    Ok(g)
}

/// Letters `i, i+1, …, j-1, j-2, …, i`.
fn tij_letters(i: usize, j: usize) -> Vec<usize> {
    (i..j).chain((i..j - 1).rev()).collect()
}

/// Letters `j-1, …, i+1, i, i+1, …, j-1`.
fn tij_letters_alt(i: usize, j: usize) -> Vec<usize> {
    (i..j).rev().chain(i + 1..j).collect()
}

/// `T_{ij}^{-1} = T_i^{-1} T_{i+1}^{-1} … T_{j-1}^{-1} … T_{i+1}^{-1} T_i^{-1}`.
pub fn apply_tij_inv(f: &XPolynomial, i: usize, j: usize) -> Result<XPolynomial> {
    check_pair("T_ij^-1", f, i, j, f.n())?;
    apply_letters(f, &tij_letters(i, j), true)
}

/// The second displayed factorization of `T_{ij}^{-1}`.
pub fn apply_tij_inv_alt(f: &XPolynomial, i: usize, j: usize) -> Result<XPolynomial> {
    check_pair("T_ij^-1", f, i, j, f.n())?;
    apply_letters(f, &tij_letters_alt(i, j), true)
}

/// `T_{ij}`, the same palindrome in the plain generators, which inverts
/// [`apply_tij_inv`].
pub fn apply_tij(f: &XPolynomial, i: usize, j: usize) -> Result<XPolynomial> {
    check_pair("T_ij", f, i, j, f.n())?;
    apply_letters(f, &tij_letters(i, j), false)
}

/// `I_{ij}^{-1} = T_i^{-1} … T_j^{-1} T_j^{-1} … T_i^{-1}` for `i ≤ j ≤ n-1`.
pub fn apply_iij_inv(f: &XPolynomial, i: usize, j: usize) -> Result<XPolynomial> {
    if i == 0 || i > j || j >= f.n() {
        return Err(Error::IndexOutOfRange { op: "I_ij^-1", index: j, n: f.n() });
    }
    let letters: Vec<usize> = (i..=j).chain((i..=j).rev()).collect();
    apply_letters(f, &letters, true)
}

/// `t^{i-j-1} + (t^{-1} - 1) Σ_{p=i+1}^{j+1} t^{p-j-1} T_{ip}^{-1}`.
pub fn apply_iij_inv_expansion(f: &XPolynomial, i: usize, j: usize) -> Result<XPolynomial> {
    if i == 0 || i > j || j >= f.n() {
        return Err(Error::IndexOutOfRange { op: "I_ij^-1", index: j, n: f.n() });
    }
    let (ii, jj) = (i as i64, j as i64);
    let mut parts = vec![f.scale(&QtScalar::t_pow(ii - jj - 1))];
    let c = &QtScalar::t_pow(-1) - &QtScalar::one();
    for p in i + 1..=j + 1 {
        let coeff = &c * &QtScalar::t_pow(p as i64 - jj - 1);
        parts.push(apply_tij_inv(f, i, p)?.scale(&coeff));
    }
    Ok(XPolynomial::sum(f.n(), parts.iter()))
}

/// `U^+ = Σ_{w ∈ S_n} T_w`, one reduced word per permutation.
pub fn apply_uplus(f: &XPolynomial) -> XPolynomial {
    let n = f.n();
    let words = all_reduced_words(n);
    let images: Vec<XPolynomial> = words
        .iter()
        .map(|w| apply_tw(f, w).expect("canonical words are in range"))
        .collect();
    XPolynomial::sum(n, images.iter())
}

/// `[n]_t! = Π_{i=1}^{n} (1 - t^i)/(1 - t)`.
pub fn t_factorial(n: usize) -> QtScalar {
    let mut acc = crate::qt::QtPoly::one();
    for i in 1..=n as u32 {
        let bracket = crate::qt::QtPoly::from_terms((0..i).map(|k| ((0, k), 1)));
        acc = &acc * &bracket;
    }
    QtScalar::from_poly(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::QtPoly;

    fn x(n: usize, i: usize) -> XPolynomial {
        XPolynomial::var(n, i)
    }

    fn t() -> QtScalar {
        QtScalar::t()
    }

    #[test]
    fn ti_on_small_monomials() {
        assert_eq!(apply_ti(&XPolynomial::one(2), 1).unwrap(), XPolynomial::constant(2, t()));
        let tm1 = &t() - &QtScalar::one();
        assert_eq!(apply_ti(&x(2, 2), 1).unwrap(), &x(2, 2).scale(&tm1) + &x(2, 1).scale(&t()));
        assert_eq!(apply_ti(&x(2, 1), 1).unwrap(), x(2, 2));
        assert!(apply_ti(&x(2, 1), 2).is_err());
    }

    #[test]
    fn ti_inverse_on_small_monomials() {
        assert_eq!(apply_ti_inv(&XPolynomial::one(2), 1).unwrap(), XPolynomial::constant(2, QtScalar::t_pow(-1)));
        assert_eq!(apply_ti_inv(&x(2, 2), 1).unwrap(), x(2, 1));
        let f = &(&x(3, 1) * &x(3, 1)) + &x(3, 2).scale(&QtScalar::q());
        assert_eq!(apply_ti_inv(&apply_ti(&f, 2).unwrap(), 2).unwrap(), f);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(apply_omega(&x(2, 1)), x(2, 2).scale(&QtScalar::q()));
        assert_eq!(apply_omega(&x(2, 2)), x(2, 1));
        let f = &(&x(3, 1) * &x(3, 3)) + &x(3, 2).scale(&t());
        assert_eq!(apply_omega_inv(&apply_omega(&f)), f);
    }

    #[test]
    fn t0_paths_agree() {
        assert_eq!(apply_t0(&XPolynomial::one(2)).unwrap(), XPolynomial::constant(2, t()));
        for f in [x(2, 1), x(2, 2), &x(2, 1) * &x(2, 2), &(&x(2, 1) * &x(2, 1)) * &x(2, 1)] {
            assert_eq!(apply_t0(&f).unwrap(), apply_t0_defining(&f).unwrap(), "on {f}");
        }
    }

    #[test]
    fn y_examples() {
        let n = 3;
        for i in 1..=n {
            let y1 = apply_yi(&XPolynomial::one(n), i).unwrap();
            assert_eq!(y1, XPolynomial::constant(n, QtScalar::t_pow(1 - i as i64)));
        }
        assert_eq!(apply_yi(&x(2, 2), 2).unwrap(), x(2, 2).scale(&QtScalar::q()));
    }

    #[test]
    fn composite_inverses() {
        let one = XPolynomial::one(4);
        assert_eq!(apply_tij_inv(&one, 1, 3).unwrap(), XPolynomial::constant(4, QtScalar::t_pow(-3)));
        assert_eq!(apply_tij_inv(&x(3, 2), 1, 2).unwrap(), apply_ti_inv(&x(3, 2), 1).unwrap());
        let f = &x(3, 3) * &x(3, 1);
        assert_eq!(apply_tij_inv(&f, 1, 3).unwrap(), apply_tij_inv_alt(&f, 1, 3).unwrap());
        assert_eq!(apply_tij(&apply_tij_inv(&f, 1, 3).unwrap(), 1, 3).unwrap(), f);
        assert_eq!(apply_iij_inv(&f, 1, 2).unwrap(), apply_iij_inv_expansion(&f, 1, 2).unwrap());
        assert_eq!(apply_iij_inv(&f, 2, 2).unwrap(), apply_iij_inv_expansion(&f, 2, 2).unwrap());
    }

    #[test]
    fn symmetrizer() {
        let two = QtScalar::from_poly(QtPoly::from_terms([((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(apply_uplus(&XPolynomial::one(2)), XPolynomial::constant(2, two.clone()));
        assert_eq!(t_factorial(2), two);
        let u = apply_uplus(&x(3, 1));
        assert!(u.is_symmetric_in(1, 3));
        assert_eq!(apply_ti(&u, 1).unwrap(), u.scale(&t()));
    }
}
