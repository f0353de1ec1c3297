use super::raising::{phi_composition, scalar_equal};
use super::{expect_equal, Check, Failure, Mismatch};
use crate::hecke::{apply_ti, apply_ti_inv, apply_uplus, apply_yi};
use crate::macdonald::{
    a_eta, composition_stats, delta, eigenvalues, nonsym_macdonald, nonsym_macdonald_oracle, symmetric_macdonald, ti_inv_on_e, ti_on_e,
};
use crate::poly::{fmt_exponent, prec_order, Composition, XPolynomial};
use crate::qt::{QtMonomial, QtScalar};

fn one_minus(m: QtMonomial) -> QtScalar {
    &QtScalar::one() - &m.to_scalar()
}

fn stats(eta: &Composition) -> crate::macdonald::CompositionStats {
    composition_stats(eta, eta.len()).expect("length matches")
}

fn two_term(eta: &Composition, i: usize, (c0, c1): (QtScalar, QtScalar)) -> XPolynomial {
    let e = nonsym_macdonald(eta);
    let mut out = e.scale(&c0);
    if !c1.is_zero() {
        out = &out + &nonsym_macdonald(&eta.swapped(i)).scale(&c1);
    }
    out
}

pub(crate) fn checks(n: usize, degree: u32) -> Vec<Check> {
    let etas = Composition::all_up_to(n, degree);
    let mut out = Vec::new();
    out.push(Check::over("Y_i E_eta = t^etabar_i E_eta", n, etas.clone(), |eta| {
        let e = nonsym_macdonald(eta);
        for (i, ev) in eigenvalues(eta).into_iter().enumerate() {
            expect_equal(&apply_yi(&e, i + 1)?, &e.scale(&ev.to_scalar())).map_err(|f| f.in_slice(format!("Y{}", i + 1)))?;
        }
        Ok(())
    }));
    out.push(Check::over("E_eta = x^eta + lower terms in the order <", n, etas.clone(), |eta| {
        let e = nonsym_macdonald(eta);
        let lead = e.coeff(eta.parts());
        if !lead.is_one() {
            return Err(Failure::mismatch(Mismatch { monomial: fmt_exponent(eta.exponent()), lhs: lead.to_string(), rhs: "1".into() }));
        }
        for (nu, _) in e.terms() {
            let nu = Composition::from_exponent(nu.clone());
            if &nu != eta && !prec_order(&nu, eta)? {
                return Err(Failure::error(format!("{nu} is not below {eta}")));
            }
        }
        Ok(())
    }));
    out.push(Check::over("recursion = eigen-solve oracle", n, etas.clone(), |eta| {
        expect_equal(&nonsym_macdonald(eta), &nonsym_macdonald_oracle(eta)?)
    }));
    out.push(Check::over("T_i E_eta two-term expansion", n, etas.clone(), |eta| {
        let e = nonsym_macdonald(eta);
        for i in 1..eta.len() {
            expect_equal(&apply_ti(&e, i)?, &two_term(eta, i, ti_on_e(eta, i)?)).map_err(|f| f.in_slice(format!("T{i}")))?;
        }
        Ok(())
    }));
    out.push(Check::over("T_i^-1 E_eta two-term expansion", n, etas.clone(), |eta| {
        let e = nonsym_macdonald(eta);
        for i in 1..eta.len() {
            expect_equal(&apply_ti_inv(&e, i)?, &two_term(eta, i, ti_inv_on_e(eta, i)?)).map_err(|f| f.in_slice(format!("T{i}^-1")))?;
        }
        Ok(())
    }));

    let tn = |k: usize| QtMonomial::t_pow(k as i64);
    out.push(Check::over("d_(Phi eta)/d_eta = e_(Phi eta)/e_eta = 1 - q t^n t^etabar_1", n, etas.clone(), move |eta| {
        let (s, sp) = (stats(eta), stats(&phi_composition(eta)));
        let expected = one_minus(QtMonomial::new(1, 0) * tn(eta.len()) * eigenvalues(eta)[0]);
        scalar_equal(&(&sp.d / &s.d), &expected).map_err(|f| f.in_slice("d"))?;
        scalar_equal(&(&sp.e / &s.e), &expected).map_err(|f| f.in_slice("e"))
    }));
    out.push(Check::over("d'_(Phi eta)/d'_eta = 1 - q t^(n-1) t^etabar_1", n, etas.clone(), move |eta| {
        let (s, sp) = (stats(eta), stats(&phi_composition(eta)));
        let expected = one_minus(QtMonomial::new(1, 0) * tn(eta.len() - 1) * eigenvalues(eta)[0]);
        scalar_equal(&(&sp.dprime / &s.dprime), &expected)
    }));
    out.push(Check::over("e_(s_i eta) = e_eta", n, etas.clone(), |eta| {
        let e = stats(eta).e;
        for i in 1..eta.len() {
            scalar_equal(&stats(&eta.swapped(i)).e, &e).map_err(|f| f.in_slice(format!("s{i}")))?;
        }
        Ok(())
    }));
    out.push(Check::over("d_(s_i eta)/d_eta and d'_(s_i eta)/d'_eta for eta_i > eta_(i+1)", n, etas.clone(), |eta| {
        let s = stats(eta);
        let t = QtMonomial::t_pow(1);
        for i in (1..eta.len()).filter(|&i| eta.get(i) > eta.get(i + 1)) {
            let td = delta(eta, i)?;
            let ss = stats(&eta.swapped(i));
            scalar_equal(&(&ss.d / &s.d), &(&one_minus(td * t) / &one_minus(td))).map_err(|f| f.in_slice(format!("d, s{i}")))?;
            scalar_equal(&(&ss.dprime / &s.dprime), &(&one_minus(td) / &one_minus(td * t.inv())))
                .map_err(|f| f.in_slice(format!("d', s{i}")))?;
        }
        Ok(())
    }));

    out.push(Check::over("U+ E_eta = a_eta P_(eta+)", n, etas.clone(), |eta| {
        let lhs = apply_uplus(&nonsym_macdonald(eta));
        let rhs = symmetric_macdonald(&eta.partition())?.scale(&a_eta(eta));
        expect_equal(&lhs, &rhs)
    }));
    let partitions: Vec<Composition> = (0..=degree).flat_map(|w| Composition::partitions_of(n, w)).collect();
    out.push(Check::over("P_kappa(x; 1/q, 1/t) = P_kappa(x; q, t)", n, partitions, |kappa| {
        let p = symmetric_macdonald(kappa)?;
        expect_equal(&p.bar_coeffs(), &p)
    }));
    out
}
