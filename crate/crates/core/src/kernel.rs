//! Truncated kernels `K_A(x; y; q, t)` and `₀F₀(x; y; q, t)` in the doubled
//! ring `Q(q,t)[x_1..x_n, y_1..y_n]`, and their graded identity checks.
//!
//! All operators here are homogeneous, so every identity is compared on a
//! single bidegree slice `(dx, dy)` built from the diagonal slices of the
//! truncation; no comparison ever touches terms cut off by the truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::dunkl::{apply_di, apply_phi, apply_phihat};
use crate::error::{Error, Result};
use crate::hecke::{apply_ti, apply_ti_inv, apply_uplus, t_factorial};
use crate::macdonald::{composition_stats, kernel_coefficient, nonsym_macdonald, symmetric_macdonald};
use crate::poly::{Composition, XPolynomial};
use crate::qt::QtScalar;
use crate::verify::{expect_equal, run_checks, CaseResult, Check, Suite, SuiteReport, VerifyConfig};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelTruncation {
    pub n: usize,
    pub degree: u32,
    /// A polynomial in `2n` variables, `x` first.
    pub value: XPolynomial,
    /// The coefficient attached to each summand.
    pub per_eta: BTreeMap<Composition, QtScalar>,
}

impl KernelTruncation {
    /// The component of x-weight `dx` and y-weight `dy`.
    pub fn slice(&self, dx: u32, dy: u32) -> XPolynomial {
        self.value.bidegree_part(self.n, dx, dy)
    }

    pub fn is_bidegree_diagonal(&self) -> bool {
        self.value.terms().all(|(e, _)| e[..self.n].iter().sum::<u32>() == e[self.n..].iter().sum::<u32>())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { op: "kernel", index: 0, n });
    }
    Ok(())
}

fn assemble(n: usize, degree: u32, summands: Vec<(Composition, QtScalar, XPolynomial)>) -> KernelTruncation {
    let value = XPolynomial::sum(2 * n, summands.iter().map(|(_, _, p)| p));
    let per_eta = summands.into_iter().map(|(k, c, _)| (k, c)).collect();
    KernelTruncation { n, degree, value, per_eta }
}

/// `Σ_{|η| ≤ N} A_η E_η(x; q, t) E_η(y; q^{-1}, t^{-1})` with
/// `A_η = d_η / (d'_η e_η)`.
pub fn build_ka(n: usize, degree: u32) -> Result<KernelTruncation> {
    check_n(n)?;
    let summands = Composition::all_up_to(n, degree)
        .into_par_iter()
        .map(|eta| {
            let a = kernel_coefficient(&eta);
            let e = nonsym_macdonald(&eta);
            let term = e.tensor(&e.bar_coeffs()).scale(&a);
            (eta, a, term)
        })
        .collect();
    Ok(assemble(n, degree, summands))
}

/// `t^{b(κ)} / (d'_κ P_κ(1, t, …, t^{n-1}))` with `b(κ) = Σ (i-1) κ_i`.
pub fn hypergeometric_coefficient(kappa: &Composition) -> Result<QtScalar> {
    let p = symmetric_macdonald(kappa)?;
    let b: u32 = kappa.parts().iter().enumerate().map(|(i, &k)| i as u32 * k).sum();
    let dp = composition_stats(kappa, kappa.len())?.dprime;
    Ok(&QtScalar::t_pow(i64::from(b)) / &(&dp * &p.principal_specialize()))
}

/// `Σ_{|κ| ≤ N} t^{b(κ)} / (d'_κ P_κ(1, t, …, t^{n-1})) P_κ(x) P_κ(y)`.
pub fn build_0f0(n: usize, degree: u32) -> Result<KernelTruncation> {
    check_n(n)?;
    let kappas: Vec<Composition> = (0..=degree).flat_map(|w| Composition::partitions_of(n, w)).collect();
    let summands = kappas
        .into_par_iter()
        .map(|kappa| {
            let c = hypergeometric_coefficient(&kappa)?;
            let p = symmetric_macdonald(&kappa)?;
            let term = p.tensor(&p).scale(&c);
            Ok((kappa, c, term))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(n, degree, summands))
}

/// Apply an `n`-variable operator to the x-variables.
pub fn on_x<F>(k: &XPolynomial, n: usize, op: F) -> Result<XPolynomial>
where
    F: Fn(&XPolynomial) -> Result<XPolynomial> + Sync,
{
    k.act_on_block(0, n, op)
}

/// Apply the barred operator `bar ∘ op ∘ bar` to the y-variables.
pub fn on_y_barred<F>(k: &XPolynomial, n: usize, op: F) -> Result<XPolynomial>
where
    F: Fn(&XPolynomial) -> Result<XPolynomial> + Sync,
{
    Ok(k.bar_coeffs().act_on_block(n, n, op)?.bar_coeffs())
}

/// The properties that can be requested from [`kernel_checks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// `T_i^{±1}` in x against barred `T_i^{∓1}` in y.
    A,
    /// `Φ̂_q` in x against barred `Φ_q` in y.
    B,
    /// `D_i` in x against multiplication by `y_i`.
    C,
    /// `U⁺` in x against `[n]_t! ₀F₀`.
    Uplus,
}

impl Property {
    pub const ALL: [Property; 4] = [Property::A, Property::B, Property::C, Property::Uplus];

    pub fn name(self) -> &'static str {
        match self {
            Property::A => "a",
            Property::B => "b",
            Property::C => "c",
            Property::Uplus => "uplus",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown kernel check {s:?}")))
    }
}

fn slice_label(dx: u32, dy: u32) -> String {
    format!("({dx},{dy})")
}

fn in_slice(r: CaseResult, dx: u32, dy: u32) -> CaseResult {
    r.map_err(|f| f.in_slice(slice_label(dx, dy)))
}

fn hecke_case(k: &KernelTruncation, i: usize, inverse: bool, m: u32) -> CaseResult {
    let s = k.slice(m, m);
    let (lhs, rhs) = if inverse {
        (on_x(&s, k.n, |f| apply_ti_inv(f, i))?, on_y_barred(&s, k.n, |f| apply_ti(f, i))?)
    } else {
        (on_x(&s, k.n, |f| apply_ti(f, i))?, on_y_barred(&s, k.n, |f| apply_ti_inv(f, i))?)
    };
    in_slice(expect_equal(&lhs, &rhs), m, m)
}

fn lowering_case(k: &KernelTruncation, m: u32) -> CaseResult {
    let lhs = on_x(&k.slice(m, m), k.n, apply_phihat)?;
    let rhs = on_y_barred(&k.slice(m - 1, m - 1), k.n, apply_phi)?;
    in_slice(expect_equal(&lhs, &rhs), m - 1, m)
}

fn dunkl_case(k: &KernelTruncation, i: usize, m: u32) -> CaseResult {
    let lhs = on_x(&k.slice(m + 1, m + 1), k.n, |f| apply_di(f, i))?;
    let rhs = k.slice(m, m).mul_var(k.n + i)?;
    in_slice(expect_equal(&lhs, &rhs), m, m + 1)
}

fn symmetrizer_case(k: &KernelTruncation, f: &KernelTruncation, m: u32) -> CaseResult {
    let lhs = on_x(&k.slice(m, m), k.n, |g| Ok(apply_uplus(g)))?;
    let rhs = f.slice(m, m).scale(&t_factorial(k.n));
    in_slice(expect_equal(&lhs, &rhs), m, m)
}

/// One [`Check`] per requested property; cases are the bidegree slices.
pub fn kernel_checks(k: Arc<KernelTruncation>, props: &[Property]) -> Result<Vec<Check>> {
    let (n, big_n) = (k.n, k.degree);
    let mut out = Vec::new();
    for &p in props {
        match p {
            Property::A => {
                for i in 1..n {
                    for inverse in [false, true] {
                        let kk = k.clone();
                        let (l, r) = if inverse { ("^-1", "") } else { ("", "^-1") };
                        let labels = (0..=big_n).map(|m| slice_label(m, m)).collect();
                        let name = format!("T{i}{l}(x) K = bar(T{i}{r})(y) K");
                        out.push(Check::new(name, n, labels, move |m| hecke_case(&kk, i, inverse, m as u32)));
                    }
                }
            }
            Property::B => {
                let kk = k.clone();
                let labels = (1..=big_n).map(|m| slice_label(m - 1, m)).collect();
                out.push(Check::new("Phihat(x) K = bar(Phi)(y) K", n, labels, move |j| lowering_case(&kk, j as u32 + 1)));
            }
            Property::C => {
                for i in 1..=n {
                    let kk = k.clone();
                    let labels = (0..big_n).map(|m| slice_label(m, m + 1)).collect();
                    out.push(Check::new(format!("D{i}(x) K = y{i} K"), n, labels, move |m| dunkl_case(&kk, i, m as u32)));
                }
            }
            Property::Uplus => {
                let kk = k.clone();
                let f = Arc::new(build_0f0(n, big_n)?);
                let labels = (0..=big_n).map(|m| slice_label(m, m)).collect();
                out.push(Check::new("U+(x) K = [n]_t! 0F0", n, labels, move |m| symmetrizer_case(&kk, &f, m as u32)));
            }
        }
    }
    Ok(out)
}

/// Properties (a), (b) and (c) of the kernel, slice by slice.
pub fn check_kernel_relations(k: &KernelTruncation) -> SuiteReport {
    let checks = kernel_checks(Arc::new(k.clone()), &[Property::A, Property::B, Property::C]).expect("no 0F0 is built");
    run_checks(Suite::Kernel, checks, &VerifyConfig::default())
}

/// `U⁺` in x of the kernel against `[n]_t! ₀F₀`, slice by slice.
pub fn check_symmetrized_kernel(n: usize, degree: u32) -> Result<SuiteReport> {
    let k = Arc::new(build_ka(n, degree)?);
    Ok(run_checks(Suite::Kernel, kernel_checks(k, &[Property::Uplus])?, &VerifyConfig::default()))
}
