use super::expr::{w, Op};
use super::{expect_equal, monomials, Check, Failure};
use crate::dunkl::{apply_phi, apply_phi_alt, apply_phihat, apply_phihat_alt};
use crate::macdonald::{composition_stats, eigenvalues, nonsym_macdonald};
use crate::poly::{Composition, XPolynomial};
use crate::qt::QtScalar;

/// `Φη = (η_2, …, η_n, η_1 + 1)`.
pub fn phi_composition(eta: &Composition) -> Composition {
    let p = eta.parts();
    Composition::new(p[1..].iter().copied().chain(std::iter::once(p[0] + 1)))
}

/// `Φ̂η = (η_n - 1, η_1, …, η_{n-1})`, defined when `η_n ≥ 1`.
pub fn phihat_composition(eta: &Composition) -> Option<Composition> {
    let p = eta.parts();
    let last = *p.last()?;
    (last >= 1).then(|| Composition::new(std::iter::once(last - 1).chain(p[..p.len() - 1].iter().copied())))
}

/// The coefficient `c` in `Φ_q E_η = c E_{Φη}`.
pub fn phi_coefficient(eta: &Composition) -> QtScalar {
    let p = eta.parts();
    let k = p[1..].iter().filter(|&&v| v <= p[0]).count();
    QtScalar::t_pow(-(k as i64))
}

/// The coefficient `c` in `Φ̂_q E_η = c E_{Φ̂η}`; zero when `η_n = 0`.
pub fn phihat_coefficient(eta: &Composition) -> QtScalar {
    let Some(hat) = phihat_composition(eta) else {
        return QtScalar::zero();
    };
    let p = eta.parts();
    let last = p[p.len() - 1];
    let k = p.iter().filter(|&&v| v < last).count();
    let n = eta.len();
    let dp = |e: &Composition| composition_stats(e, n).expect("same length").dprime;
    &QtScalar::t_pow(k as i64) * &(&dp(eta) / &dp(&hat))
}

pub(crate) fn checks(n: usize, degree: u32) -> Vec<Check> {
    let inputs = monomials(n, degree);
    let q = QtScalar::q();
    let mut out = Vec::new();
    for j in 1..n {
        out.push(Check::identity(format!("Y{j} Phi = Phi Y{}", j + 1), n, w([Op::Y(j), Op::Phi]), w([Op::Phi, Op::Y(j + 1)]), inputs.clone()));
    }
    out.push(Check::identity(format!("Y{n} Phi = q Phi Y1"), n, w([Op::Y(n), Op::Phi]), w([Op::Phi, Op::Y(1)]).scale(&q), inputs.clone()));
    for j in 2..=n {
        out.push(Check::identity(format!("Y{j} Phihat = Phihat Y{}", j - 1), n, w([Op::Y(j), Op::PhiHat]), w([Op::PhiHat, Op::Y(j - 1)]), inputs.clone()));
    }
    out.push(Check::identity(
        format!("Y1 Phihat = q^-1 Phihat Y{n}"),
        n,
        w([Op::Y(1), Op::PhiHat]),
        w([Op::PhiHat, Op::Y(n)]).scale(&QtScalar::monomial(-1, 0)),
        inputs.clone(),
    ));
    for i in 1..=n {
        let f = inputs.clone();
        let labels = f.iter().map(|x| x.to_string()).collect();
        out.push(Check::new(format!("Phi = t^{} T{}..T{i} x{i} T{}^-1..T1^-1", i as i64 - n as i64, n - 1, i as i64 - 1), n, labels, move |k| {
            expect_equal(&apply_phi(&f[k])?, &apply_phi_alt(&f[k], i)?)
        }));
        let f = inputs.clone();
        let labels = f.iter().map(|x| x.to_string()).collect();
        out.push(Check::new(format!("Phihat = t^{} T1..T{} D{i} T{i}^-1..T{}^-1", n - i, i as i64 - 1, n - 1), n, labels, move |k| {
            expect_equal(&apply_phihat(&f[k])?, &apply_phihat_alt(&f[k], i)?)
        }));
    }

    let etas = Composition::all_up_to(n, degree);
    out.push(Check::over("Phi E_eta = t^-#{i>=2: eta_i <= eta_1} E_(Phi eta)", n, etas.clone(), |eta| {
        let lhs = apply_phi(&nonsym_macdonald(eta))?;
        let rhs = nonsym_macdonald(&phi_composition(eta)).scale(&phi_coefficient(eta));
        expect_equal(&lhs, &rhs)
    }));
    out.push(Check::over("Phihat E_eta = t^#{eta_i < eta_n} d'_eta/d'_(Phihat eta) E_(Phihat eta)", n, etas.clone(), |eta| {
        let lhs = apply_phihat(&nonsym_macdonald(eta))?;
        let rhs = match phihat_composition(eta) {
            Some(hat) => nonsym_macdonald(&hat).scale(&phihat_coefficient(eta)),
            None => XPolynomial::zero(eta.len()),
        };
        expect_equal(&lhs, &rhs)
    }));
    out.push(Check::over("d'_eta/d'_(Phihat eta) = 1 - t^(n-1) t^etabar_n", n, etas, |eta| {
        let Some(hat) = phihat_composition(eta) else {
            return Ok(());
        };
        let n = eta.len();
        let dp = |e: &Composition| composition_stats(e, n).map(|s| s.dprime);
        let ratio = &dp(eta)? / &dp(&hat)?;
        let ev = eigenvalues(eta)[n - 1] * crate::qt::QtMonomial::t_pow(n as i64 - 1);
        let expected = &QtScalar::one() - &ev.to_scalar();
        scalar_equal(&ratio, &expected)
    }));
    if n == 2 {
        out.push(Check::over("Phi E_(0,0) = t^-1 E_(0,1)", 2, vec![Composition::from([0, 0])], |eta| {
            let expected = XPolynomial::var(2, 2).scale(&QtScalar::t_pow(-1));
            expect_equal(&apply_phi(&nonsym_macdonald(eta))?, &expected)
        }));
        out.push(Check::over("Phihat E_(0,1) = t(1-qt)", 2, vec![Composition::from([0, 1])], |eta| {
            let c = &QtScalar::t() * &(&QtScalar::one() - &QtScalar::monomial(1, 1));
            expect_equal(&apply_phihat(&nonsym_macdonald(eta))?, &XPolynomial::constant(2, c))
        }));
    }
    out
}

pub(super) fn scalar_equal(lhs: &QtScalar, rhs: &QtScalar) -> Result<(), Failure> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure::mismatch(super::Mismatch { monomial: "1".into(), lhs: lhs.to_string(), rhs: rhs.to_string() }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run_checks, Suite, VerifyConfig};

    #[test]
    fn composition_maps() {
        let eta = Composition::from([2, 0, 1]);
        assert_eq!(phi_composition(&eta), Composition::from([0, 1, 3]));
        assert_eq!(phihat_composition(&eta), Some(Composition::from([0, 2, 0])));
        assert_eq!(phihat_composition(&Composition::from([1, 0])), None);
        assert_eq!(phihat_composition(&phi_composition(&eta)), Some(eta));
    }

    #[test]
    fn small_degree_passes() {
        for n in 2..=3 {
            let rep = run_checks(Suite::Raising, checks(n, 2), &VerifyConfig::default());
            let bad: Vec<_> = rep.failures().map(|c| (c.identity.clone(), c.counterexample.clone())).collect();
            assert!(bad.is_empty(), "n={n}: {bad:?}");
        }
    }

    #[test]
    fn counting_the_first_part_breaks_the_phi_coefficient() {
        let eta = Composition::from([0, 0]);
        let lhs = apply_phi(&nonsym_macdonald(&eta)).unwrap();
        let wrong = nonsym_macdonald(&phi_composition(&eta)).scale(&QtScalar::t_pow(-2));
        assert_ne!(lhs, wrong);
    }
}
