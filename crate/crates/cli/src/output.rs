//! Serialized forms of core objects: JSON polynomials, LaTeX, stats.

use std::str::FromStr;

use num_bigint::BigInt;
use qmacd_core::macdonald::CompositionStats;
use qmacd_core::{Exponent, QtPoly, QtScalar, XPolynomial};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub num: Vec<(Number, u32, u32)>,
    pub den: Vec<(Number, u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: CoeffJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

fn poly_terms(p: &QtPoly) -> Vec<(Number, u32, u32)> {
    p.terms()
        .iter()
        .map(|((a, b), c)| (Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"), *a, *b))
        .collect()
}

fn parse_terms(v: &[(Number, u32, u32)]) -> Result<QtPoly, String> {
    let terms = v
        .iter()
        .map(|(c, a, b)| BigInt::from_str(&c.to_string()).map(|c| ((*a, *b), c)).map_err(|e| format!("bad coefficient {c}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QtPoly::from_terms(terms))
}

impl From<&QtScalar> for CoeffJson {
    fn from(c: &QtScalar) -> Self {
        CoeffJson { num: poly_terms(c.numer()), den: poly_terms(c.denom()) }
    }
}

impl TryFrom<&CoeffJson> for QtScalar {
    type Error = String;

    fn try_from(c: &CoeffJson) -> Result<Self, String> {
        QtScalar::new(parse_terms(&c.num)?, parse_terms(&c.den)?).map_err(|e| e.to_string())
    }
}

impl From<&XPolynomial> for PolyJson {
    fn from(p: &XPolynomial) -> Self {
        let terms = p.terms().map(|(e, c)| TermJson { exp: e.to_vec(), coeff: c.into() }).collect();
        PolyJson { n: p.n(), terms }
    }
}

impl TryFrom<&PolyJson> for XPolynomial {
    type Error = String;

    fn try_from(p: &PolyJson) -> Result<Self, String> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for t in &p.terms {
            if t.exp.len() != p.n {
                return Err(format!("exponent {:?} has length {}, expected {}", t.exp, t.exp.len(), p.n));
            }
            terms.push((Exponent::from_slice(&t.exp), QtScalar::try_from(&t.coeff)?));
        }
        Ok(XPolynomial::from_terms(p.n, terms))
    }
}

pub fn poly_to_json(p: &XPolynomial) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<XPolynomial, String> {
    let p: PolyJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    XPolynomial::try_from(&p)
}

/// Wrap every exponent after `^` in braces: `q^2t^-1` becomes `q^{2}t^{-1}`.
fn brace_exponents(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            out.push('{');
            if chars.peek() == Some(&'-') {
                out.push(chars.next().unwrap());
            }
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

pub fn scalar_latex(c: &QtScalar) -> String {
    if c.denom().is_one() {
        return brace_exponents(&c.numer().to_string());
    }
    let (num, den) = c.display_parts();
    let num_s = num.to_string();
    match num_s.strip_prefix('-').filter(|_| num.len() == 1) {
        Some(abs) => format!("-\\frac{{{}}}{{{}}}", brace_exponents(abs), brace_exponents(&den.to_string())),
        None => format!("\\frac{{{}}}{{{}}}", brace_exponents(&num_s), brace_exponents(&den.to_string())),
    }
}

fn monomial_latex(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("x_{{{}}}", i + 1) } else { format!("x_{{{}}}^{{{a}}}", i + 1) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Leading monomial first, e.g. `x_{1} + \frac{q-qt}{1-qt} x_{2}`.
pub fn poly_latex(p: &XPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = Vec::new();
    for (e, c) in p.terms().rev() {
        let mono = monomial_latex(e);
        let term = if mono.is_empty() {
            scalar_latex(c)
        } else if c.is_one() {
            mono
        } else if c.denom().is_one() && c.numer().len() > 1 {
            format!("({}) {mono}", scalar_latex(c))
        } else {
            format!("{} {mono}", scalar_latex(c))
        };
        out.push(term);
    }
    out.join(" + ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsJson {
    pub eta: Vec<u32>,
    pub n: usize,
    pub arm: Vec<Vec<u32>>,
    pub armco: Vec<Vec<u32>>,
    pub leg: Vec<Vec<u32>>,
    pub legco: Vec<Vec<u32>>,
    pub etabar: Vec<String>,
    pub d: String,
    pub dprime: String,
    pub e: String,
}

impl From<&CompositionStats> for StatsJson {
    fn from(s: &CompositionStats) -> Self {
        StatsJson {
            eta: s.eta.parts().to_vec(),
            n: s.eta.len(),
            arm: s.arm.clone(),
            armco: s.armco.clone(),
            leg: s.leg.clone(),
            legco: s.legco.clone(),
            etabar: s.etabar.iter().map(|m| m.to_string()).collect(),
            d: s.d.to_string(),
            dprime: s.dprime.to_string(),
            e: s.e.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmacd_core::macdonald::nonsym_macdonald;
    use qmacd_core::Composition;

    #[test]
    fn braces() {
        assert_eq!(brace_exponents("1-q^2t^-1"), "1-q^{2}t^{-1}");
        assert_eq!(brace_exponents("qt"), "qt");
    }

    #[test]
    fn latex_of_e10() {
        let e = nonsym_macdonald(&Composition::from([1, 0]));
        assert_eq!(poly_latex(&e), "x_{1} + \\frac{q-qt}{1-qt} x_{2}");
        let c = QtScalar::from_int(-1).checked_div(&QtScalar::from_poly(QtPoly::one_minus(0, 1))).unwrap();
        assert_eq!(scalar_latex(&c), "-\\frac{1}{1-t}");
    }

    #[test]
    fn json_round_trip() {
        let e = nonsym_macdonald(&Composition::from([1, 0, 2]));
        assert_eq!(poly_from_json(&poly_to_json(&e)).unwrap(), e);
        assert!(poly_from_json(r#"{"n":2,"terms":[{"exp":[1],"coeff":{"num":[[1,0,0]],"den":[[1,0,0]]}}]}"#).is_err());
    }
}
