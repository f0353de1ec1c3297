use std::fmt;

use crate::dunkl::{apply_di, apply_di_crep, apply_di_iij, apply_di_word, apply_phi, apply_phihat};
use crate::error::Result;
use crate::hecke::{
    apply_iij_inv, apply_omega, apply_omega_inv, apply_t0, apply_t0_inv, apply_ti, apply_ti_inv, apply_tij, apply_tij_inv,
    apply_uplus, apply_yi,
};
use crate::poly::XPolynomial;
use crate::qt::QtScalar;

/// A single operator on `Q(q,t)[x_1..x_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    T(usize),
    TInv(usize),
    T0,
    T0Inv,
    Omega,
    OmegaInv,
    Y(usize),
    D(usize),
    DIij(usize),
    DWord(usize),
    DConj(usize),
    Phi,
    PhiHat,
    Tij(usize, usize),
    TijInv(usize, usize),
    IijInv(usize, usize),
    X(usize),
    DivX(usize),
    Uplus,
}

impl Op {
    pub fn apply(&self, f: &XPolynomial) -> Result<XPolynomial> {
        match *self {
            Op::T(i) => apply_ti(f, i),
            Op::TInv(i) => apply_ti_inv(f, i),
            Op::T0 => apply_t0(f),
            Op::T0Inv => apply_t0_inv(f),
            Op::Omega => Ok(apply_omega(f)),
            Op::OmegaInv => Ok(apply_omega_inv(f)),
            Op::Y(i) => apply_yi(f, i),
            Op::D(i) => apply_di(f, i),
            Op::DIij(i) => apply_di_iij(f, i),
            Op::DWord(i) => apply_di_word(f, i),
            Op::DConj(i) => apply_di_crep(f, i),
            Op::Phi => apply_phi(f),
            Op::PhiHat => apply_phihat(f),
            Op::Tij(i, j) => apply_tij(f, i, j),
            Op::TijInv(i, j) => apply_tij_inv(f, i, j),
            Op::IijInv(i, j) => apply_iij_inv(f, i, j),
            Op::X(i) => f.mul_var(i),
            Op::DivX(i) => f.divide_by_xi(i),
            Op::Uplus => Ok(apply_uplus(f)),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Op::T(i) => write!(f, "T{i}"),
            Op::TInv(i) => write!(f, "T{i}^-1"),
            Op::T0 => write!(f, "T0"),
            Op::T0Inv => write!(f, "T0^-1"),
            Op::Omega => write!(f, "w"),
            Op::OmegaInv => write!(f, "w^-1"),
            Op::Y(i) => write!(f, "Y{i}"),
            Op::D(i) => write!(f, "D{i}"),
            Op::DIij(i) => write!(f, "D{i}[I]"),
            Op::DWord(i) => write!(f, "D{i}[word]"),
            Op::DConj(i) => write!(f, "D{i}[conj]"),
            Op::Phi => write!(f, "Phi"),
            Op::PhiHat => write!(f, "Phihat"),
            Op::Tij(i, j) => write!(f, "T{i}{j}"),
            Op::TijInv(i, j) => write!(f, "T{i}{j}^-1"),
            Op::IijInv(i, j) => write!(f, "I{i}{j}^-1"),
            Op::X(i) => write!(f, "x{i}"),
            Op::DivX(i) => write!(f, "x{i}^-1"),
            Op::Uplus => write!(f, "U+"),
        }
    }
}

/// A `Q(q,t)`-linear combination of operator words.
///
/// Words are written left to right as products, so the last letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpExpr {
    terms: Vec<(QtScalar, Vec<Op>)>,
}

impl OpExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::word([])
    }

    pub fn word(ops: impl IntoIterator<Item = Op>) -> Self {
        OpExpr { terms: vec![(QtScalar::one(), ops.into_iter().collect())] }
    }

    pub fn op(op: Op) -> Self {
        Self::word([op])
    }

    pub fn scalar(c: QtScalar) -> Self {
        OpExpr { terms: vec![(c, vec![])] }
    }

    pub fn terms(&self) -> &[(QtScalar, Vec<Op>)] {
        &self.terms
    }

    pub fn scale(mut self, c: &QtScalar) -> Self {
        for (a, _) in &mut self.terms {
            *a = &*a * c;
        }
        self.terms.retain(|(a, _)| !a.is_zero());
        self
    }

    pub fn plus(mut self, other: OpExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: OpExpr) -> Self {
        self.plus(other.scale(&-QtScalar::one()))
    }

    /// The product `self · other`.
    pub fn then(&self, other: &OpExpr) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((a * b, w));
            }
        }
        OpExpr { terms }
    }

    pub fn apply(&self, f: &XPolynomial) -> Result<XPolynomial> {
        let mut images = Vec::with_capacity(self.terms.len());
        for (_, word) in &self.terms {
            let mut g = f.clone();
            for op in word.iter().rev() {
                g = op.apply(&g)?;
            }
            images.push(g);
        }
        Ok(XPolynomial::combination(f.n(), self.terms.iter().map(|(c, _)| c).zip(images.iter())))
    }
}

impl From<Op> for OpExpr {
    fn from(op: Op) -> Self {
        OpExpr::op(op)
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, w)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() || w.is_empty() {
                write!(f, "({c})")?;
            }
            for op in w {
                write!(f, " {op}")?;
            }
        }
        Ok(())
    }
}

/// Shorthand for a product of letters.
pub fn w(ops: impl IntoIterator<Item = Op>) -> OpExpr {
    OpExpr::word(ops)
}

/// Shorthand for a scalar multiple of the identity.
pub fn c(s: QtScalar) -> OpExpr {
    OpExpr::scalar(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_act_right_to_left() {
        let f = XPolynomial::one(2);
        // x1 then T1 gives x2; T1 then x1 gives t x1
        assert_eq!(w([Op::T(1), Op::X(1)]).apply(&f).unwrap(), XPolynomial::var(2, 2));
        assert_eq!(w([Op::X(1), Op::T(1)]).apply(&f).unwrap(), XPolynomial::var(2, 1).scale(&QtScalar::t()));
    }

    #[test]
    fn linear_combination() {
        let e = OpExpr::op(Op::T(1)).minus(c(QtScalar::t()));
        assert!(e.apply(&XPolynomial::one(2)).unwrap().is_zero());
        let sq = e.then(&OpExpr::op(Op::T(1)).plus(OpExpr::identity()));
        assert!(sq.apply(&XPolynomial::var(2, 1)).unwrap().is_zero());
    }
}
