//! q-Dunkl operators, the raising and lowering operators, and `E_{0,m}`.

use crate::error::{Error, Result};
use crate::hecke::{apply_iij_inv, apply_omega, apply_ti, apply_ti_inv, apply_tij_inv, apply_yi};
use crate::poly::XPolynomial;
use crate::qt::QtScalar;

fn check_i(op: &'static str, f: &XPolynomial, i: usize) -> Result<()> {
    if i == 0 || i > f.n() {
        return Err(Error::IndexOutOfRange { op, index: i, n: f.n() });
    }
    Ok(())
}

fn tp(k: i64) -> QtScalar {
    QtScalar::t_pow(k)
}

/// `x_i^{-1}(f - g)`, the common shape of every form of `D_i`.
fn lower(f: &XPolynomial, g: &XPolynomial, i: usize) -> Result<XPolynomial> {
    (f - g).divide_by_xi(i)
}

/// `D_i = x_i^{-1}(1 - t^{n-1}[1 + (t^{-1}-1) Σ_{j>i} t^{j-i} T_{ij}^{-1}] Y_i)`.
pub fn apply_di(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("D_i", f, i)?;
    let n = f.n();
    let y = apply_yi(f, i)?;
    let c = &tp(-1) - &QtScalar::one();
    let mut parts = vec![y.clone()];
    for j in i + 1..=n {
        parts.push(apply_tij_inv(&y, i, j)?.scale(&(&c * &tp((j - i) as i64))));
    }
    let bracket = XPolynomial::sum(n, parts.iter()).scale(&tp(n as i64 - 1));
    lower(f, &bracket, i)
}

/// `D_i = x_i^{-1}(1 - t^{2n-i-1} I_{i,n-1}^{-1} Y_i)`.
pub fn apply_di_iij(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("D_i", f, i)?;
    let n = f.n();
    let y = apply_yi(f, i)?;
    let inner = if i < n { apply_iij_inv(&y, i, n - 1)? } else { y };
    lower(f, &inner.scale(&tp(2 * n as i64 - i as i64 - 1)), i)
}

/// `D_i = x_i^{-1}(1 - t^{n-1} T_i^{-1}…T_{n-1}^{-1} ω T_1^{-1}…T_{i-1}^{-1})`.
pub fn apply_di_word(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("D_i", f, i)?;
    let n = f.n();
    let mut g = f.clone();
    for k in (1..i).rev() {
        g = apply_ti_inv(&g, k)?;
    }
    g = apply_omega(&g);
    for k in (i..n).rev() {
        g = apply_ti_inv(&g, k)?;
    }
    lower(f, &g.scale(&tp(n as i64 - 1)), i)
}

/// `D_n = x_n^{-1}(1 - t^{n-1} Y_n)`.
pub fn apply_dn(f: &XPolynomial) -> Result<XPolynomial> {
    let n = f.n();
    check_i("D_n", f, n)?;
    lower(f, &apply_yi(f, n)?.scale(&tp(n as i64 - 1)), n)
}

/// `D_i = t^{-n+i} T_i…T_{n-1} D_n T_{n-1}…T_i`.
pub fn apply_di_crep(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("D_i", f, i)?;
    let n = f.n();
    let mut g = f.clone();
    for k in i..n {
        g = apply_ti(&g, k)?;
    }
    g = apply_dn(&g)?;
    for k in (i..n).rev() {
        g = apply_ti(&g, k)?;
    }
    Ok(g.scale(&tp(i as i64 - n as i64)))
}

/// `Φ_q = x_n T_{n-1}^{-1} … T_1^{-1}`.
pub fn apply_phi(f: &XPolynomial) -> Result<XPolynomial> {
    let n = f.n();
    let mut g = f.clone();
    for k in 1..n {
        g = apply_ti_inv(&g, k)?;
    }
    g.mul_var(n)
}

/// `Φ_q = t^{-n+i} T_{n-1} … T_i x_i T_{i-1}^{-1} … T_1^{-1}`.
pub fn apply_phi_alt(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("Phi_q", f, i)?;
    let n = f.n();
    let mut g = f.clone();
    for k in 1..i {
        g = apply_ti_inv(&g, k)?;
    }
    g = g.mul_var(i)?;
    for k in i..n {
        g = apply_ti(&g, k)?;
    }
    Ok(g.scale(&tp(i as i64 - n as i64)))
}

/// `Φ̂_q = T_1 T_2 … T_{n-1} D_n`.
pub fn apply_phihat(f: &XPolynomial) -> Result<XPolynomial> {
    let n = f.n();
    let mut g = apply_dn(f)?;
    for k in (1..n).rev() {
        g = apply_ti(&g, k)?;
    }
    Ok(g)
}

/// `Φ̂_q = t^{n-i} T_1 … T_{i-1} D_i T_i^{-1} … T_{n-1}^{-1}`.
pub fn apply_phihat_alt(f: &XPolynomial, i: usize) -> Result<XPolynomial> {
    check_i("Phihat_q", f, i)?;
    let n = f.n();
    let mut g = f.clone();
    for k in (i..n).rev() {
        g = apply_ti_inv(&g, k)?;
    }
    g = apply_di(&g, i)?;
    for k in (1..i).rev() {
        g = apply_ti(&g, k)?;
    }
    Ok(g.scale(&tp(n as i64 - i as i64)))
}

/// `(1-q) E_{0,m} f = Σ_{i=m}^{n} A_{i,m} (1-τ_i) f / x_i` with
/// `A_{i,m} = Π_{j≥m, j≠i} (t x_i - x_j)/(x_i - x_j)`, for `f` symmetric in
/// `x_m..x_n`.
pub fn apply_e0m(f: &XPolynomial, m: usize) -> Result<XPolynomial> {
    check_i("E_0m", f, m)?;
    let n = f.n();
    if !f.is_symmetric_in(m, n) {
        return Err(Error::NotSymmetric { from: m, to: n });
    }
    let x = |k: usize| XPolynomial::var(n, k);
    let t = QtScalar::t();
    let mut numer = Vec::with_capacity(n - m + 1);
    for i in m..=n {
        let g = (f - &f.apply_qshift(i)?).divide_by_xi(i)?;
        let mut term = g;
        for j in (m..=n).filter(|&j| j != i) {
            term = &term * &(&x(i).scale(&t) - &x(j));
        }
        // Vandermonde factors not involving x_i; the sign orders (x_i - x_j) for j < i
        for a in (m..=n).filter(|&a| a != i) {
            for b in (a + 1..=n).filter(|&b| b != i) {
                term = &term * &(&x(a) - &x(b));
            }
        }
        if (i - m) % 2 == 1 {
            term = -term;
        }
        numer.push(term);
    }
    let mut out = XPolynomial::sum(n, numer.iter());
    for a in m..=n {
        for b in a + 1..=n {
            out = out.div_exact_binomial(a, b)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::QtPoly;

    fn x(n: usize, i: usize) -> XPolynomial {
        XPolynomial::var(n, i)
    }

    fn c(p: QtPoly) -> QtScalar {
        QtScalar::from_poly(p)
    }

    #[test]
    fn dunkl_examples() {
        for n in 2..=3 {
            for i in 1..=n {
                assert!(apply_di(&XPolynomial::one(n), i).unwrap().is_zero());
            }
        }
        assert_eq!(apply_di(&x(2, 2), 2).unwrap(), XPolynomial::constant(2, c(QtPoly::one_minus(1, 1))));
        let expected = QtPoly::from_terms([((1, 0), -1), ((1, 1), 1)]);
        assert_eq!(apply_di(&x(2, 1), 2).unwrap(), XPolynomial::constant(2, c(expected)));
    }

    #[test]
    fn dunkl_forms_agree() {
        let f = &(&x(3, 1) * &x(3, 2)) + &(&x(3, 3) * &x(3, 3)).scale(&QtScalar::q());
        for i in 1..=3 {
            let d = apply_di(&f, i).unwrap();
            assert_eq!(d, apply_di_iij(&f, i).unwrap(), "I form, i={i}");
            assert_eq!(d, apply_di_word(&f, i).unwrap(), "word form, i={i}");
            assert_eq!(d, apply_di_crep(&f, i).unwrap(), "conjugated form, i={i}");
        }
    }

    #[test]
    fn raising_and_lowering() {
        assert_eq!(apply_phi(&XPolynomial::one(2)).unwrap(), x(2, 2).scale(&QtScalar::t_pow(-1)));
        let f = &x(3, 1) + &(&x(3, 2) * &x(3, 3));
        for i in 1..=3 {
            assert_eq!(apply_phi(&f).unwrap(), apply_phi_alt(&f, i).unwrap());
            assert_eq!(apply_phihat(&f).unwrap(), apply_phihat_alt(&f, i).unwrap());
        }
        assert!(apply_phihat(&XPolynomial::one(2)).unwrap().is_zero());
        let expected = &QtScalar::t() * &c(QtPoly::one_minus(1, 1));
        assert_eq!(apply_phihat(&x(2, 2)).unwrap(), XPolynomial::constant(2, expected));
    }

    #[test]
    fn e0m_examples() {
        let one_minus_q = c(QtPoly::one_minus(1, 0));
        let p1 = &x(2, 1) + &x(2, 2);
        let two = c(QtPoly::from_terms([((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(apply_e0m(&p1, 1).unwrap(), XPolynomial::constant(2, &one_minus_q * &two));
        assert_eq!(apply_e0m(&x(1, 1), 1).unwrap(), XPolynomial::constant(1, one_minus_q));
        assert!(apply_e0m(&XPolynomial::one(3), 1).unwrap().is_zero());
        assert_eq!(apply_e0m(&x(2, 1), 1), Err(Error::NotSymmetric { from: 1, to: 2 }));
    }
}
