use super::expr::{c, w, Op, OpExpr};
use super::{monomials, Check};
use crate::qt::QtScalar;

fn tp(k: i64) -> QtScalar {
    QtScalar::t_pow(k)
}

fn t_minus_one() -> QtScalar {
    &QtScalar::t() - &QtScalar::one()
}

fn tinv_minus_one() -> QtScalar {
    &tp(-1) - &QtScalar::one()
}

fn op(o: Op) -> OpExpr {
    OpExpr::op(o)
}

fn gen(i: usize) -> Op {
    if i == 0 {
        Op::T0
    } else {
        Op::T(i)
    }
}

fn gen_inv(i: usize) -> Op {
    if i == 0 {
        Op::T0Inv
    } else {
        Op::TInv(i)
    }
}

/// `T_a T_{a+1} … T_b` (empty when `a > b`).
pub(super) fn t_run(a: usize, b: usize) -> Vec<Op> {
    (a..=b).map(Op::T).collect()
}

/// `T_a^{-1} T_{a+1}^{-1} … T_b^{-1}` (empty when `a > b`).
pub(super) fn t_inv_run(a: usize, b: usize) -> Vec<Op> {
    (a..=b).map(Op::TInv).collect()
}

/// `T_a^{-1} T_{a-1}^{-1} … T_b^{-1}` for `a ≥ b` (empty otherwise).
pub(super) fn t_inv_down(a: usize, b: usize) -> Vec<Op> {
    if a < b {
        return vec![];
    }
    (b..=a).rev().map(Op::TInv).collect()
}

pub(super) fn cat(parts: &[&[Op]]) -> Vec<Op> {
    parts.concat()
}

pub(crate) fn checks(n: usize, degree: u32) -> Vec<Check> {
    let inputs = monomials(n, degree);
    let mut out = Vec::new();
    let mut add = |name: String, lhs: OpExpr, rhs: OpExpr| out.push(Check::identity(name, n, lhs, rhs, inputs.clone()));
    let t = QtScalar::t();
    let id = OpExpr::identity;

    // generators T_0..T_{n-1}
    for i in 0..n {
        let g = op(gen(i));
        let quad = g.clone().minus(c(t.clone())).then(&g.clone().plus(id()));
        add(format!("(T{i}-t)(T{i}+1) = 0"), quad, OpExpr::zero());
        add(format!("T{i} T{i}^-1 = 1"), w([gen(i), gen_inv(i)]), id());
        add(format!("T{i}^-1 T{i} = 1"), w([gen_inv(i), gen(i)]), id());
        let inv = c(tinv_minus_one()).plus(g.scale(&tp(-1)));
        add(format!("T{i}^-1 = t^-1 - 1 + t^-1 T{i}"), op(gen_inv(i)), inv);
    }
    if n >= 3 {
        for i in 0..n {
            let j = (i + 1) % n;
            add(format!("T{i} T{j} T{i} = T{j} T{i} T{j}"), w([gen(i), gen(j), gen(i)]), w([gen(j), gen(i), gen(j)]));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let dist = (j - i).min(n - (j - i));
            if dist >= 2 {
                add(format!("T{i} T{j} = T{j} T{i}"), w([gen(i), gen(j)]), w([gen(j), gen(i)]));
            }
        }
    }
    add("w w^-1 = 1".into(), w([Op::Omega, Op::OmegaInv]), id());
    for i in 0..n {
        let prev = (i + n - 1) % n;
        add(format!("w T{i} = T{prev} w"), w([Op::Omega, gen(i)]), w([gen(prev), Op::Omega]));
    }

    // multiplication operators
    for i in 1..n {
        let j = i + 1;
        let ti = || op(Op::T(i));
        add(format!("T{i}^-1 x{j} = t^-1 x{i} T{i}"), w([Op::TInv(i), Op::X(j)]), w([Op::X(i), Op::T(i)]).scale(&tp(-1)));
        add(
            format!("T{i}^-1 x{i} = x{j} T{i}^-1 + (t^-1-1) x{i}"),
            w([Op::TInv(i), Op::X(i)]),
            w([Op::X(j), Op::TInv(i)]).plus(op(Op::X(i)).scale(&tinv_minus_one())),
        );
        add(format!("T{i} x{i} = t x{j} T{i}^-1"), w([Op::T(i), Op::X(i)]), w([Op::X(j), Op::TInv(i)]).scale(&t));
        add(
            format!("T{i} x{j} = x{i} T{i} + (t-1) x{j}"),
            ti().then(&op(Op::X(j))),
            w([Op::X(i), Op::T(i)]).plus(op(Op::X(j)).scale(&t_minus_one())),
        );
        add(format!("w x{j} = x{i} w"), w([Op::Omega, Op::X(j)]), w([Op::X(i), Op::Omega]));
    }
    add(format!("w x1 = q x{n} w"), w([Op::Omega, Op::X(1)]), w([Op::X(n), Op::Omega]).scale(&QtScalar::q()));

    // Cherednik operators
    for i in 1..n {
        add(format!("T{i} Y{} T{i} = t Y{i}", i + 1), w([Op::T(i), Op::Y(i + 1), Op::T(i)]), op(Op::Y(i)).scale(&t));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            add(format!("T{i} Y{j} = Y{j} T{i}"), w([Op::T(i), Op::Y(j)]), w([Op::Y(j), Op::T(i)]));
        }
        add(
            format!("T{i}^-1 Y{j} = (t^-1-1) Y{j} + Y{i} T{i}^-1", j = i + 1),
            w([Op::TInv(i), Op::Y(i + 1)]),
            op(Op::Y(i + 1)).scale(&tinv_minus_one()).plus(w([Op::Y(i), Op::TInv(i)])),
        );
    }
    for i in 1..=n {
        for j in i + 1..=n {
            add(format!("Y{i} Y{j} = Y{j} Y{i}"), w([Op::Y(i), Op::Y(j)]), w([Op::Y(j), Op::Y(i)]));
        }
    }
    for i in 1..n {
        let tail = y_xn_tail(n, i);
        add(format!("Y{i} x{n} = x{n} Y{i} + {tail}"), w([Op::Y(i), Op::X(n)]), w([Op::X(n), Op::Y(i)]).plus(tail));
    }
    let yn_rhs = w(cat(&[&[Op::X(n), Op::Omega], &t_run(1, n - 1)])).scale(&(&QtScalar::q() * &tp(1 - n as i64)));
    add(format!("Y{n} x{n} = q t^{} x{n} w T1..T{}", 1 - n as i64, n - 1), w([Op::Y(n), Op::X(n)]), yn_rhs);
    out
}

/// `t^{i-n}(1-t) x_n T_i … T_{n-2} ω T_1^{-1} … T_{i-1}^{-1}`.
pub(crate) fn y_xn_tail(n: usize, i: usize) -> OpExpr {
    let word = cat(&[&[Op::X(n)], &t_run(i, n - 2), &[Op::Omega], &t_inv_run(1, i - 1)]);
    let coeff = &tp(i as i64 - n as i64) * &(&QtScalar::one() - &QtScalar::t());
    w(word).scale(&coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run_checks, Suite, VerifyConfig};

    #[test]
    fn small_degree_passes() {
        for n in 2..=3 {
            let rep = run_checks(Suite::Hecke, checks(n, 2), &VerifyConfig::default());
            let bad: Vec<_> = rep.failures().map(|c| c.identity.clone()).collect();
            assert!(bad.is_empty(), "n={n}: {bad:?}");
        }
    }

    #[test]
    fn unshortened_exchange_word_fails() {
        // t^{1-n}(1-t) x_n T_i … T_{n-1} ω T_1^{-1} … T_{i-1}^{-1} is not the
        // correction term of Y_i x_n
        let n = 2;
        let word = cat(&[&[Op::X(n)], &t_run(1, n - 1), &[Op::Omega]]);
        let coeff = &tp(1 - n as i64) * &(&QtScalar::one() - &QtScalar::t());
        let rhs = w([Op::X(n), Op::Y(1)]).plus(w(word).scale(&coeff));
        let check = Check::identity("long form", n, w([Op::Y(1), Op::X(n)]), rhs, monomials(n, 1));
        let rep = run_checks(Suite::Hecke, vec![check], &VerifyConfig::default());
        assert!(!rep.passed());
        assert_eq!(rep.checks[0].counterexample.as_ref().unwrap().input, "1");
    }
}
