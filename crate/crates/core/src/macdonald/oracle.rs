use std::collections::BTreeMap;

use super::stats::eigenvalues;
use crate::error::{Error, Result};
use crate::hecke::apply_yi;
use crate::linalg::nullspace;
use crate::poly::{prec_order, Composition, Exponent, XPolynomial};
use crate::qt::QtScalar;

/// `{ν : ν ⪯ η, |ν| = |η|}` in lexicographic order.
pub fn triangular_basis(eta: &Composition) -> Vec<Composition> {
    let mut basis: Vec<Composition> = Composition::all_of_weight(eta.len(), eta.weight())
        .into_iter()
        .filter(|nu| nu == eta || prec_order(nu, eta).expect("same length and weight"))
        .collect();
    basis.sort();
    basis
}

/// `E_η` as the monic joint eigenvector of `Y_1, …, Y_n` restricted to
/// the triangular span below `η`.
pub fn nonsym_macdonald_oracle(eta: &Composition) -> Result<XPolynomial> {
    let n = eta.len();
    let basis = triangular_basis(eta);
    let index: BTreeMap<&[u32], usize> = basis.iter().enumerate().map(|(k, nu)| (nu.parts(), k)).collect();
    let m = basis.len();
    let ev = eigenvalues(eta);
    let mut rows: Vec<Vec<QtScalar>> = Vec::with_capacity(n * m);
    for (i, lambda) in ev.iter().enumerate() {
        let mut block = vec![vec![QtScalar::zero(); m]; m];
        for (col, nu) in basis.iter().enumerate() {
            let img = apply_yi(&XPolynomial::monomial(nu.exponent().clone(), QtScalar::one()), i + 1)?;
            for (e, c) in img.terms() {
                let Some(&row) = index.get(e.as_slice()) else {
                    return Err(Error::Triangularity { nu: format!("{nu}"), eta: format!("{eta}") });
                };
                block[row][col] = c.clone();
            }
        }
        let lam = lambda.to_scalar();
        for (k, row) in block.iter_mut().enumerate() {
            row[k] = &row[k] - &lam;
        }
        rows.extend(block);
    }
    let kernel = nullspace(rows, m);
    if kernel.len() != 1 {
        return Err(Error::OracleKernel { eta: format!("{eta}"), dim: kernel.len() });
    }
    let v = &kernel[0];
    let lead = &v[index[eta.parts()]];
    if lead.is_zero() {
        return Err(Error::OracleKernel { eta: format!("{eta}"), dim: 1 });
    }
    let inv = lead.inv()?;
    let terms: Vec<(Exponent, QtScalar)> =
        basis.iter().zip(v).map(|(nu, c)| (nu.exponent().clone(), c * &inv)).collect();
    Ok(XPolynomial::from_terms(n, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::nonsym_macdonald;

    #[test]
    fn oracle_matches_recursion_in_two_variables() {
        assert_eq!(nonsym_macdonald_oracle(&Composition::from([0, 0])).unwrap(), XPolynomial::one(2));
        for eta in Composition::all_up_to(2, 3) {
            assert_eq!(nonsym_macdonald_oracle(&eta).unwrap(), nonsym_macdonald(&eta), "eta = {eta}");
        }
    }
}
