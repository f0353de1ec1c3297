use std::sync::Arc;

use super::{expect_equal, Check, Failure};
use crate::dunkl::{apply_di, apply_e0m};
use crate::kernel::{build_0f0, build_ka, kernel_checks, Property};
use crate::poly::{Composition, XPolynomial};
use crate::qt::QtScalar;

/// `m_λ`, the sum of all distinct monomials `x^α` with `α⁺ = λ`.
pub fn monomial_symmetric(lambda: &Composition) -> XPolynomial {
    let terms = lambda.rearrangements().into_iter().map(|a| (a.into_exponent(), QtScalar::one()));
    XPolynomial::from_terms(lambda.len(), terms)
}

pub(crate) fn checks(n: usize, degree: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let built = build_ka(n, degree).and_then(|k| {
        let k = Arc::new(k);
        Ok((k.clone(), kernel_checks(k, &Property::ALL)?))
    });
    match built {
        Ok((k, checks)) => {
            out.extend(checks);
            out.push(Check::new("K has x-weight = y-weight", n, vec![format!("N={degree}")], move |_| {
                if k.is_bidegree_diagonal() {
                    Ok(())
                } else {
                    Err(Failure::error("off-diagonal term"))
                }
            }));
        }
        Err(e) => out.push(Check::new("build K", n, vec![format!("N={degree}")], move |_| Err(Failure::error(&e)))),
    }
    out.push(Check::new("0F0 symmetric in x and in y", n, vec![format!("N={degree}")], move |_| {
        let f = build_0f0(n, degree)?;
        if f.value.is_symmetric_in(1, n) && f.value.is_symmetric_in(n + 1, 2 * n) {
            Ok(())
        } else {
            Err(Failure::error("not symmetric"))
        }
    }));
    let sym: Vec<XPolynomial> = (0..=degree).flat_map(|w| Composition::partitions_of(n, w)).map(|l| monomial_symmetric(&l)).collect();
    for m in 1..=n {
        let inputs = sym.clone();
        let labels = inputs.iter().map(|f| f.to_string()).collect();
        out.push(Check::new(format!("D{m} + .. + D{n} = (1-q) E0,{m}"), n, labels, move |k| {
            let f = &inputs[k];
            let parts = (m..=n).map(|i| apply_di(f, i)).collect::<crate::Result<Vec<_>>>()?;
            expect_equal(&XPolynomial::sum(n, parts.iter()), &apply_e0m(f, m)?)
        }));
    }
    out
}
