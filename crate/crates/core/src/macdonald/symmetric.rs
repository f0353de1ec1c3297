use super::nonsym::nonsym_macdonald;
use super::stats::{composition_stats, delta, leg_sum};
use crate::error::{Error, Result};
use crate::hecke::t_factorial;
use crate::poly::{Composition, XPolynomial};
use crate::qt::{QtMonomial, QtScalar};

fn dprime(eta: &Composition) -> QtScalar {
    composition_stats(eta, eta.len()).expect("length matches").dprime
}

/// `P_κ = d'_κ Σ_{η⁺ = κ} E_η / d'_η`.
pub fn symmetric_macdonald(kappa: &Composition) -> Result<XPolynomial> {
    if !kappa.is_partition() {
        return Err(Error::NotPartition(kappa.to_string()));
    }
    let dk = dprime(kappa);
    let parts: Vec<(QtScalar, XPolynomial)> = kappa
        .rearrangements()
        .into_iter()
        .map(|eta| (&dk / &dprime(&eta), nonsym_macdonald(&eta)))
        .collect();
    Ok(XPolynomial::combination(kappa.len(), parts.iter().map(|(c, p)| (c, p))))
}

/// The constant `a_η` with `U⁺ E_η = a_η P_{η⁺}`, from the closed form
/// `[n]_t! t^{Σ l(r)} e_η / (P_{η⁺}(1, t, …, t^{n-1}) d_η)`.
pub fn a_eta(eta: &Composition) -> QtScalar {
    let n = eta.len();
    let s = composition_stats(eta, n).expect("length matches");
    let p = symmetric_macdonald(&eta.partition()).expect("sorted input is a partition");
    let spec = p.principal_specialize();
    let num = &(&t_factorial(n) * &QtScalar::t_pow(i64::from(leg_sum(eta)))) * &s.e;
    &num / &(&spec * &s.d)
}

fn one_minus(m: QtMonomial) -> QtScalar {
    &QtScalar::one() - &m.to_scalar()
}

/// Coefficients `(c, c')` in `T_i E_η = c E_η + c' E_{s_i η}`.
pub fn ti_on_e(eta: &Composition, i: usize) -> Result<(QtScalar, QtScalar)> {
    let td = delta(eta, i)?;
    let p = eta.parts();
    let t = QtScalar::t();
    let diag = &(&t - &QtScalar::one()) / &one_minus(td.inv());
    Ok(match p[i - 1].cmp(&p[i]) {
        std::cmp::Ordering::Less => (diag, t),
        std::cmp::Ordering::Equal => (t, QtScalar::zero()),
        std::cmp::Ordering::Greater => (diag, swap_factor(td)),
    })
}

/// Coefficients `(c, c')` in `T_i^{-1} E_η = c E_η + c' E_{s_i η}`.
pub fn ti_inv_on_e(eta: &Composition, i: usize) -> Result<(QtScalar, QtScalar)> {
    let td = delta(eta, i)?;
    let p = eta.parts();
    let tinv = QtScalar::t_pow(-1);
    let diag = &(&tinv - &QtScalar::one()) / &one_minus(td);
    Ok(match p[i - 1].cmp(&p[i]) {
        std::cmp::Ordering::Less => (diag, QtScalar::one()),
        std::cmp::Ordering::Equal => (tinv, QtScalar::zero()),
        std::cmp::Ordering::Greater => (diag, &tinv * &swap_factor(td)),
    })
}

/// `(1 - t^{δ+1})(1 - t^{δ-1}) / (1 - t^δ)^2`.
pub fn swap_factor(td: QtMonomial) -> QtScalar {
    let t = QtMonomial::t_pow(1);
    let num = &one_minus(td * t) * &one_minus(td * t.inv());
    let den = one_minus(td);
    &num / &(&den * &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::apply_uplus;
    use crate::qt::QtPoly;

    #[test]
    fn symmetric_examples() {
        let p = symmetric_macdonald(&Composition::from([1, 0])).unwrap();
        assert_eq!(p, &XPolynomial::var(2, 1) + &XPolynomial::var(2, 2));
        assert_eq!(symmetric_macdonald(&Composition::from([0, 0, 0])).unwrap(), XPolynomial::one(3));
        assert!(symmetric_macdonald(&Composition::from([0, 1])).is_err());
    }

    #[test]
    fn proportionality_constants() {
        let two = QtScalar::from_poly(QtPoly::from_terms([((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(a_eta(&Composition::from([0, 0])), two);
        assert_eq!(a_eta(&Composition::from([0, 1])), QtScalar::t());
        for eta in Composition::all_up_to(2, 2) {
            let lhs = apply_uplus(&nonsym_macdonald(&eta));
            let rhs = symmetric_macdonald(&eta.partition()).unwrap().scale(&a_eta(&eta));
            assert_eq!(lhs, rhs, "eta = {eta}");
        }
    }

    #[test]
    fn equal_entries() {
        let eta = Composition::from([1, 1]);
        assert_eq!(ti_on_e(&eta, 1).unwrap(), (QtScalar::t(), QtScalar::zero()));
        assert_eq!(ti_inv_on_e(&eta, 1).unwrap(), (QtScalar::t_pow(-1), QtScalar::zero()));
    }
}
