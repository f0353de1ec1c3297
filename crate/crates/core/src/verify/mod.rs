//! Exhaustive checking of operator identities and coefficient formulas.
//!
//! A suite is a list of named checks; each check owns an ordered list of
//! cases (usually the monomials of degree `≤ D`, in increasing degree) and
//! evaluates them independently. Cases fan out over the rayon pool; results
//! are merged back in case order, so the reported counterexample of a failing
//! check is always the first failing case, i.e. one of minimal degree.

mod dunkl;
mod expr;
mod hecke;
mod kernel;
mod macdonald;
mod raising;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::poly::{fmt_exponent, Composition, XPolynomial};

pub use expr::{c, w, Op, OpExpr};

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hecke,
    Dunkl,
    Raising,
    Macdonald,
    Kernel,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Hecke, Suite::Dunkl, Suite::Raising, Suite::Macdonald, Suite::Kernel];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hecke => "hecke",
            Suite::Dunkl => "dunkl",
            Suite::Raising => "raising",
            Suite::Macdonald => "macdonald",
            Suite::Kernel => "kernel",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub ns: Vec<usize>,
    /// Monomial degree bound, or the weight bound `N` for kernel checks.
    pub degree: u32,
    /// Check a random subset of this many cases per check instead of all.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { ns: vec![2, 3], degree: 4, sample: None, seed: 0 }
    }
}

/// The first monomial on which two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

impl Mismatch {
    /// `None` when `lhs == rhs`.
    pub fn between(lhs: &XPolynomial, rhs: &XPolynomial) -> Option<Mismatch> {
        let diff = lhs - rhs;
        let (e, _) = diff.terms().next()?;
        Some(Mismatch { monomial: fmt_exponent(e), lhs: lhs.coeff(e).to_string(), rhs: rhs.coeff(e).to_string() })
    }
}

/// Why a single case failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slice: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Failure {
    pub fn mismatch(m: Mismatch) -> Self {
        Failure { slice: None, mismatch: Some(m), error: None }
    }

    pub fn error(e: impl fmt::Display) -> Self {
        Failure { slice: None, mismatch: None, error: Some(e.to_string()) }
    }

    pub fn in_slice(mut self, slice: impl Into<String>) -> Self {
        self.slice = Some(slice.into());
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::error(e)
    }
}

pub type CaseResult = std::result::Result<(), Failure>;

/// Compare two sides of an identity.
pub fn expect_equal(lhs: &XPolynomial, rhs: &XPolynomial) -> CaseResult {
    match Mismatch::between(lhs, rhs) {
        None => Ok(()),
        Some(m) => Err(Failure::mismatch(m)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    #[serde(flatten)]
    pub failure: Failure,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub identity: String,
    pub n: usize,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }
}

type CaseFn = Arc<dyn Fn(usize) -> CaseResult + Send + Sync>;

/// A named check over an ordered list of labelled cases.
#[derive(Clone)]
pub struct Check {
    pub name: String,
    pub n: usize,
    labels: Vec<String>,
    eval: CaseFn,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        labels: Vec<String>,
        eval: impl Fn(usize) -> CaseResult + Send + Sync + 'static,
    ) -> Self {
        Check { name: name.into(), n, labels, eval: Arc::new(eval) }
    }

    /// One case per item, labelled by its `Display`.
    pub fn over<T>(name: impl Into<String>, n: usize, items: Vec<T>, eval: impl Fn(&T) -> CaseResult + Send + Sync + 'static) -> Self
    where
        T: fmt::Display + Send + Sync + 'static,
    {
        let labels = items.iter().map(|x| x.to_string()).collect();
        Check::new(name, n, labels, move |k| eval(&items[k]))
    }

    /// `lhs f = rhs f` for every `f` in `inputs`.
    pub fn identity(name: impl Into<String>, n: usize, lhs: OpExpr, rhs: OpExpr, inputs: Vec<XPolynomial>) -> Self {
        let labels = inputs.iter().map(|f| f.to_string()).collect();
        Check::new(name, n, labels, move |k| {
            let f = &inputs[k];
            expect_equal(&lhs.apply(f)?, &rhs.apply(f)?)
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Every monomial of degree `≤ d` in `n` variables, by degree then lex.
pub fn monomials(n: usize, d: u32) -> Vec<XPolynomial> {
    Composition::all_up_to(n, d).into_iter().map(|e| XPolynomial::monomial(e.into_exponent(), crate::qt::QtScalar::one())).collect()
}

/// `x_n` times every monomial of degree `< d`.
pub fn multiples_of_xn(n: usize, d: u32) -> Vec<XPolynomial> {
    if d == 0 {
        return vec![];
    }
    monomials(n, d - 1).into_iter().map(|f| f.mul_var(n).expect("n is a valid index")).collect()
}

fn chosen_cases(check: &Check, index: usize, cfg: &VerifyConfig) -> Vec<usize> {
    match cfg.sample {
        Some(k) if k < check.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
            let mut picked = sample(&mut rng, check.len(), k).into_vec();
            picked.sort_unstable();
            picked
        }
        _ => (0..check.len()).collect(),
    }
}

/// Evaluate all checks, in parallel over `(check, case)` pairs.
pub fn run_checks(suite: Suite, checks: Vec<Check>, cfg: &VerifyConfig) -> SuiteReport {
    let chosen: Vec<Vec<usize>> = checks.iter().enumerate().map(|(k, c)| chosen_cases(c, k, cfg)).collect();
    let tasks: Vec<(usize, usize)> = chosen.iter().enumerate().flat_map(|(ci, cases)| cases.iter().map(move |&k| (ci, k))).collect();
    let results: Vec<(CaseResult, Duration)> = tasks
        .par_iter()
        .map(|&(ci, k)| {
            let start = Instant::now();
            let r = (checks[ci].eval)(k);
            (r, start.elapsed())
        })
        .collect();
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .zip(&chosen)
        .map(|(c, cases)| CheckReport {
            suite,
            identity: c.name.clone(),
            n: c.n,
            cases: cases.len(),
            passed: true,
            counterexample: None,
            elapsed: Duration::ZERO,
        })
        .collect();
    for (&(ci, k), (r, dt)) in tasks.iter().zip(results) {
        let rep = &mut reports[ci];
        rep.elapsed += dt;
        if let Err(failure) = r {
            if rep.passed {
                rep.passed = false;
                rep.counterexample = Some(Counterexample { input: checks[ci].labels[k].clone(), failure });
            }
        }
    }
    SuiteReport { checks: reports }
}

/// The checks making up `suite` for `n` variables.
pub fn suite_checks(suite: Suite, n: usize, cfg: &VerifyConfig) -> Vec<Check> {
    match suite {
        Suite::Hecke => hecke::checks(n, cfg.degree),
        Suite::Dunkl => dunkl::checks(n, cfg.degree),
        Suite::Raising => raising::checks(n, cfg.degree),
        Suite::Macdonald => macdonald::checks(n, cfg.degree),
        Suite::Kernel => kernel::checks(n, cfg.degree),
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let checks = cfg.ns.iter().flat_map(|&n| suite_checks(suite, n, cfg)).collect();
    run_checks(suite, checks, cfg)
}
