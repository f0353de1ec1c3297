//! Greatest common divisors and exact division in `Z[q,t]`.
//!
//! Polynomials are converted to a dense recursive layout, `Z[t][q]`, where
//! the outer vector is indexed by the `q` degree. The main route is the
//! heuristic gcd of Char, Geddes and Gonnet (evaluate at a large integer,
//! recurse, reconstruct by balanced base-`x` expansion, verify by trial
//! division). When the heuristic gives up, a primitive polynomial
//! remainder sequence computes the gcd directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QtPoly;

/// Dense univariate polynomial over `Z`, ascending degree, no trailing zeros.
pub(crate) type UPoly = Vec<BigInt>;
/// Dense polynomial in `q` with coefficients in `Z[t]`, ascending `q` degree.
pub(crate) type BPoly = Vec<UPoly>;

const HEU_GCD_MAX: usize = 6;

// ---------------------------------------------------------------- univariate

fn u_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn u_deg(a: &UPoly) -> usize {
    a.len().saturating_sub(1)
}

fn u_add(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    u_trim(out)
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    u_trim(out)
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_scale(a: &UPoly, k: &BigInt) -> UPoly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

fn u_neg(a: &UPoly) -> UPoly {
    a.iter().map(|c| -c).collect()
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide every coefficient by `k`; caller guarantees exactness.
fn u_div_int(a: &UPoly, k: &BigInt) -> UPoly {
    if k.is_one() {
        return a.clone();
    }
    a.iter().map(|c| c / k).collect()
}

/// Primitive part with positive leading coefficient.
fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_int(a, &c)
}

fn u_eval(a: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn u_max_norm(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Exact quotient in `Z[t]`.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = u_deg(b);
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let lead = &r[k + db];
        if lead.is_zero() {
            continue;
        }
        let (qk, rem) = lead.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &qk * bc;
        }
        quo[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(u_trim(quo))
}

/// Balanced base-`x` reconstruction of a univariate polynomial from the
/// integer value it takes at `x`.
fn u_interpolate(mut h: BigInt, x: &BigInt) -> UPoly {
    let half = x / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut g = h.mod_floor(x);
        if g > half {
            g -= x;
        }
        h = (h - &g) / x;
        out.push(g);
    }
    let out = u_trim(out);
    if out.last().is_some_and(|c| c.is_negative()) {
        u_neg(&out)
    } else {
        out
    }
}

fn next_eval_point(x: &BigInt) -> BigInt {
    BigInt::from(73794) * x * x.sqrt().sqrt() / BigInt::from(27011)
}

fn initial_eval_point(f_norm: &BigInt, g_norm: &BigInt, f_lc: &BigInt, g_lc: &BigInt, extra: u32) -> BigInt {
    let b = BigInt::from(2) * f_norm.min(g_norm) + BigInt::from(29);
    let root_bound = (BigInt::from(99) * b.sqrt()).min(b);
    let lc_bound = BigInt::from(2) * (f_norm / f_lc.abs()).min(g_norm / g_lc.abs()) + extra;
    root_bound.max(lc_bound)
}

/// Heuristic gcd of univariate integer polynomials; returns
/// `(gcd, f/gcd, g/gcd)`.
fn u_heu_gcd(f: &UPoly, g: &UPoly) -> Option<(UPoly, UPoly, UPoly)> {
    if f.is_empty() || g.is_empty() {
        let other = if f.is_empty() { g } else { f };
        if other.is_empty() {
            return Some((Vec::new(), Vec::new(), Vec::new()));
        }
        let h = if other.last().unwrap().is_negative() { u_neg(other) } else { other.clone() };
        let cf = u_div_exact(f, &h)?;
        let cg = u_div_exact(g, &h)?;
        return Some((h, cf, cg));
    }
    let common = u_content(f).gcd(&u_content(g));
    let f = u_div_int(f, &common);
    let g = u_div_int(g, &common);
    if f.len() == 1 || g.len() == 1 {
        let k = u_content(&f).gcd(&u_content(&g));
        let h = vec![&k * &common];
        return Some((h, u_div_int(&f, &k), u_div_int(&g, &k)));
    }
    let f_norm = u_max_norm(&f);
    let g_norm = u_max_norm(&g);
    let mut x = initial_eval_point(&f_norm, &g_norm, f.last().unwrap(), g.last().unwrap(), 2);
    for _ in 0..HEU_GCD_MAX {
        let ff = u_eval(&f, &x);
        let gg = u_eval(&g, &x);
        if !ff.is_zero() && !gg.is_zero() {
            let h = ff.gcd(&gg);
            let cff = &ff / &h;
            let cfg = &gg / &h;
            let hp = u_primitive(&u_interpolate(h, &x));
            if let Some(cf) = u_div_exact(&f, &hp) {
                if let Some(cg) = u_div_exact(&g, &hp) {
                    return Some((u_scale(&hp, &common), cf, cg));
                }
            }
            let cf = u_interpolate(cff, &x);
            if let Some(h) = u_div_exact(&f, &cf) {
                if let Some(cg) = u_div_exact(&g, &h) {
                    return Some((u_scale(&h, &common), cf, cg));
                }
            }
            let cg = u_interpolate(cfg, &x);
            if let Some(h) = u_div_exact(&g, &cg) {
                if let Some(cf) = u_div_exact(&f, &h) {
                    return Some((u_scale(&h, &common), cf, cg));
                }
            }
        }
        x = next_eval_point(&x);
    }
    None
}

/// Pseudo-remainder of `a` by `b` (up to a power of `lc(b)`).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let lb = b.last().unwrap();
    let db = u_deg(b);
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let s = u_deg(&r) - db;
        let mut next = u_scale(&r, lb);
        for (j, bc) in b.iter().enumerate() {
            next[s + j] -= &lr * bc;
        }
        r = u_trim(next);
    }
    r
}

/// Univariate gcd over `Z` by primitive remainder sequence.
pub(crate) fn u_gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        let c = u_content(b);
        return u_scale(&u_primitive(b), &c);
    }
    if b.is_empty() {
        let c = u_content(a);
        return u_scale(&u_primitive(a), &c);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_scale(&u_primitive(&x), &c)
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    match u_heu_gcd(a, b) {
        Some((h, _, _)) if h.last().is_some_and(|c| c.is_negative()) => u_neg(&h),
        Some((h, _, _)) => h,
        None => u_gcd_prs(a, b),
    }
}

// ----------------------------------------------------------------- bivariate

fn b_trim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn b_deg(a: &BPoly) -> usize {
    a.len().saturating_sub(1)
}

fn b_ground_lc(a: &BPoly) -> &BigInt {
    a.last().and_then(|c| c.last()).expect("nonzero polynomial")
}

fn b_content_int(a: &BPoly) -> BigInt {
    let mut g = BigInt::zero();
    for u in a {
        for c in u {
            g = g.gcd(c);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

fn b_div_int(a: &BPoly, k: &BigInt) -> BPoly {
    a.iter().map(|u| u_div_int(u, k)).collect()
}

fn b_scale_int(a: &BPoly, k: &BigInt) -> BPoly {
    a.iter().map(|u| u_scale(u, k)).collect()
}

fn b_neg(a: &BPoly) -> BPoly {
    a.iter().map(u_neg).collect()
}

fn b_max_norm(a: &BPoly) -> BigInt {
    a.iter().map(u_max_norm).max().unwrap_or_default()
}

/// Evaluate the outer variable `q` at `x`.
fn b_eval_outer(a: &BPoly, x: &BigInt) -> UPoly {
    let mut acc: UPoly = Vec::new();
    for u in a.iter().rev() {
        acc = u_add(&u_scale(&acc, x), u);
    }
    acc
}

/// Exact quotient in `Z[t][q]`.
pub(crate) fn b_div_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b_deg(b);
    let lb = b.last().unwrap();
    let mut r = a.clone();
    let mut quo: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        if r[k + db].is_empty() {
            continue;
        }
        let qk = u_div_exact(&r[k + db], lb)?;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = u_sub(&r[k + j], &u_mul(&qk, bc));
        }
        quo[k] = qk;
    }
    if r.iter().any(|u| !u.is_empty()) {
        return None;
    }
    Some(b_trim(quo))
}

/// Balanced base-`x` reconstruction of `Z[t][q]` from a `Z[t]` image.
fn b_interpolate(mut h: UPoly, x: &BigInt) -> BPoly {
    let half = x / 2;
    let mut out: BPoly = Vec::new();
    while !h.is_empty() {
        let g: UPoly = u_trim(
            h.iter()
                .map(|c| {
                    let mut r = c.mod_floor(x);
                    if r > half {
                        r -= x;
                    }
                    r
                })
                .collect(),
        );
        h = u_sub(&h, &g).iter().map(|c| c / x).collect();
        h = u_trim(h);
        out.push(g);
    }
    let out = b_trim(out);
    if !out.is_empty() && b_ground_lc(&out).is_negative() {
        b_neg(&out)
    } else {
        out
    }
}

fn b_primitive_int(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = b_content_int(a);
    let out = b_div_int(a, &c);
    if b_ground_lc(&out).is_negative() {
        b_neg(&out)
    } else {
        out
    }
}

fn b_heu_gcd(f: &BPoly, g: &BPoly) -> Option<BPoly> {
    let common = b_content_int(f).gcd(&b_content_int(g));
    let f = b_div_int(f, &common);
    let g = b_div_int(g, &common);
    let f_norm = b_max_norm(&f);
    let g_norm = b_max_norm(&g);
    let mut x = initial_eval_point(&f_norm, &g_norm, b_ground_lc(&f), b_ground_lc(&g), 2);
    for _ in 0..HEU_GCD_MAX {
        let ff = b_eval_outer(&f, &x);
        let gg = b_eval_outer(&g, &x);
        if !ff.is_empty() && !gg.is_empty() {
            let (h, cff, cfg) = u_heu_gcd(&ff, &gg)?;
            let hp = b_primitive_int(&b_interpolate(h, &x));
            if b_div_exact(&f, &hp).is_some() && b_div_exact(&g, &hp).is_some() {
                return Some(b_scale_int(&hp, &common));
            }
            let cf = b_interpolate(cff, &x);
            if let Some(h) = b_div_exact(&f, &cf) {
                if b_div_exact(&g, &h).is_some() {
                    return Some(b_scale_int(&h, &common));
                }
            }
            let cg = b_interpolate(cfg, &x);
            if let Some(h) = b_div_exact(&g, &cg) {
                if b_div_exact(&f, &h).is_some() {
                    return Some(b_scale_int(&h, &common));
                }
            }
        }
        x = next_eval_point(&x);
    }
    None
}

fn b_content_poly(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for u in a {
        g = u_gcd(&g, u);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_upoly(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter().map(|u| u_div_exact(u, c).expect("content divides")).collect()
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let lb = b.last().unwrap();
    let db = b_deg(b);
    let mut r = a.clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let s = b_deg(&r) - db;
        let mut next: BPoly = r.iter().map(|u| u_mul(u, lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[s + j] = u_sub(&next[s + j], &u_mul(&lr, bc));
        }
        r = b_trim(next);
    }
    r
}

/// Primitive part over `Z[t]`, normalized to positive ground leading coefficient.
fn b_primitive_poly(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let c = b_content_poly(a);
    let out = b_div_upoly(a, &c);
    if b_ground_lc(&out).is_negative() {
        b_neg(&out)
    } else {
        out
    }
}

/// Bivariate gcd by primitive remainder sequence in `q` over `Z[t]`.
pub(crate) fn b_gcd_prs(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() || b.is_empty() {
        let x = if a.is_empty() { b } else { a };
        if x.is_empty() {
            return Vec::new();
        }
        let c = b_content_poly(x);
        let p = b_primitive_poly(x);
        return p.iter().map(|u| u_mul(u, &c)).collect();
    }
    let c = u_gcd(&b_content_poly(a), &b_content_poly(b));
    let (mut x, mut y) = (b_primitive_poly(a), b_primitive_poly(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive_poly(&r);
    }
    let g = b_primitive_poly(&x);
    let out: BPoly = g.iter().map(|u| u_mul(u, &c)).collect();
    if !out.is_empty() && b_ground_lc(&out).is_negative() {
        b_neg(&out)
    } else {
        out
    }
}

// -------------------------------------------------------------- conversions

pub(crate) fn to_dense(p: &QtPoly) -> BPoly {
    if p.is_zero() {
        return Vec::new();
    }
    let dq = p.degree_q() as usize;
    let mut out: BPoly = vec![Vec::new(); dq + 1];
    for ((a, b), c) in p.terms() {
        let u = &mut out[*a as usize];
        let b = *b as usize;
        if u.len() <= b {
            u.resize(b + 1, BigInt::zero());
        }
        u[b] = c.clone();
    }
    out
}

pub(crate) fn from_dense(d: &BPoly) -> QtPoly {
    let mut terms = Vec::new();
    for (a, u) in d.iter().enumerate() {
        for (b, c) in u.iter().enumerate() {
            if !c.is_zero() {
                terms.push(((a as u32, b as u32), c.clone()));
            }
        }
    }
    QtPoly::from_sorted_vec(terms)
}

pub(crate) fn div_exact(a: &QtPoly, d: &QtPoly) -> Option<QtPoly> {
    if a.degree_q() < d.degree_q() || a.degree_t() < d.degree_t() {
        return None;
    }
    b_div_exact(&to_dense(a), &to_dense(d)).map(|x| from_dense(&x))
}

/// Which algorithm to use for the non-trivial part of a gcd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdRoute {
    /// Heuristic evaluation/interpolation, falling back to PRS.
    Heuristic,
    /// Primitive remainder sequence only.
    Prs,
}

pub(crate) fn gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    gcd_with(a, b, GcdRoute::Heuristic)
}

/// gcd in `Z[q,t]` with positive graded-lex leading coefficient.
pub fn gcd_with(a: &QtPoly, b: &QtPoly, route: GcdRoute) -> QtPoly {
    if a.is_zero() {
        return b.clone().neg_if_negative_lead();
    }
    if b.is_zero() {
        return a.clone().neg_if_negative_lead();
    }
    let (aq, at) = a.monomial_content();
    let (bq, bt) = b.monomial_content();
    let (mq, mt) = (aq.min(bq), at.min(bt));
    let a1 = a.shift_down(aq, at);
    let b1 = b.shift_down(bq, bt);
    let core = if a1.len() == 1 || b1.len() == 1 {
        QtPoly::constant(a1.integer_content().gcd(&b1.integer_content()))
    } else if a1 == b1 || a1 == -&b1 {
        a1.neg_if_negative_lead()
    } else {
        let (da, db) = (to_dense(&a1), to_dense(&b1));
        let g = match route {
            GcdRoute::Heuristic => b_heu_gcd(&da, &db).unwrap_or_else(|| b_gcd_prs(&da, &db)),
            GcdRoute::Prs => b_gcd_prs(&da, &db),
        };
        from_dense(&g).neg_if_negative_lead()
    };
    core.mul_monomial(mq, mt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = &QtPoly::one_minus(1, 1) * &QtPoly::one_minus(0, 2);
        let a = &common * &p(&[((0, 0), 3), ((2, 1), 1)]);
        let b = &common * &p(&[((1, 0), 1), ((0, 3), -2)]);
        for route in [GcdRoute::Heuristic, GcdRoute::Prs] {
            let g = gcd_with(&a, &b, route);
            assert_eq!(g, common.clone().neg_if_negative_lead(), "{route:?}");
        }
    }

    #[test]
    fn gcd_monomial_content() {
        let a = p(&[((2, 1), 4), ((3, 1), 6)]);
        let b = p(&[((1, 2), 6)]);
        assert_eq!(gcd(&a, &b), p(&[((1, 1), 2)]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = QtPoly::one_minus(0, 1);
        let b = p(&[((0, 0), 1), ((0, 1), 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn univariate_prs_matches_heuristic() {
        let a: UPoly = [6, -5, 1].iter().map(|&c| BigInt::from(c)).collect(); // (t-2)(t-3)
        let b: UPoly = [-2, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(u_gcd_prs(&a, &b), b);
        assert_eq!(u_gcd(&a, &b), b);
    }

    #[test]
    fn integer_content_is_part_of_gcd() {
        let a = p(&[((0, 0), 4), ((1, 1), -4)]);
        let b = p(&[((0, 0), 6), ((1, 1), -6)]);
        assert_eq!(gcd(&a, &b), p(&[((0, 0), 2), ((1, 1), -2)]).neg_if_negative_lead());
    }
}
