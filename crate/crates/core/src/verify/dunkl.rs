use super::expr::{c, w, Op, OpExpr};
use super::hecke::{cat, t_inv_down, t_inv_run};
use super::{monomials, multiples_of_xn, Check};
use crate::qt::QtScalar;

fn tp(k: i64) -> QtScalar {
    QtScalar::t_pow(k)
}

fn t_minus_one() -> QtScalar {
    &QtScalar::t() - &QtScalar::one()
}

fn one_minus_t() -> QtScalar {
    &QtScalar::one() - &QtScalar::t()
}

fn tinv_minus_one() -> QtScalar {
    &tp(-1) - &QtScalar::one()
}

fn op(o: Op) -> OpExpr {
    OpExpr::op(o)
}

fn commutator(a: Op, b: Op) -> OpExpr {
    w([a, b]).minus(w([b, a]))
}

/// `T_{ab}` for `a < b`, and the identity when `a == b`.
fn tij(a: usize, b: usize) -> OpExpr {
    if a == b {
        OpExpr::identity()
    } else {
        op(Op::Tij(a, b))
    }
}

/// `T_i^{-1} … T_{p-2}^{-1} T_p^{-1} … T_{n-1}^{-1} T_{n-2}^{-1} … T_i^{-1}`.
fn skip_word(n: usize, i: usize, p: usize) -> Vec<Op> {
    let up = if p >= i + 2 { t_inv_run(i, p - 2) } else { vec![] };
    cat(&[&up, &t_inv_run(p, n - 1), &t_inv_down(n - 2, i)])
}

/// `I_{ij}^{-1}`, read as the identity when `j < i`.
fn iij_inv_or_one(i: usize, j: usize) -> Vec<Op> {
    if j >= i && j >= 1 {
        vec![Op::IijInv(i, j)]
    } else {
        vec![]
    }
}

/// `x_a x_{a+1} … x_b` with `x_skip` left out.
fn x_run_without(a: usize, b: usize, skip: usize) -> Vec<Op> {
    (a..=b).filter(|&k| k != skip).map(Op::X).collect()
}

pub(crate) fn checks(n: usize, degree: u32) -> Vec<Check> {
    let all = monomials(n, degree);
    let shifted = multiples_of_xn(n, degree);
    let mut out = Vec::new();
    let mut add = |name: String, lhs: OpExpr, rhs: OpExpr, on_xn: bool| {
        let inputs = if on_xn { shifted.clone() } else { all.clone() };
        out.push(Check::identity(name, n, lhs, rhs, inputs));
    };
    let t = QtScalar::t();
    let q = QtScalar::q();

    for i in 1..=n {
        let d = op(Op::D(i));
        add(format!("D{i} = D{i} via I{i},n-1^-1"), d.clone(), op(Op::DIij(i)), false);
        add(format!("D{i} = D{i} via word in T^-1 and w"), d.clone(), op(Op::DWord(i)), false);
        add(format!("D{i} = t^{} T{i}..T{} D{n} T{}..T{i}", i as i64 - n as i64, n - 1, n - 1), d, op(Op::DConj(i)), false);
    }
    for i in 1..n {
        let j = i + 1;
        add(format!("T{i} D{j} = t D{i} T{i}^-1"), w([Op::T(i), Op::D(j)]), w([Op::D(i), Op::TInv(i)]).scale(&t), false);
        add(
            format!("T{i} D{i} = D{j} T{i} + (t-1) D{i}"),
            w([Op::T(i), Op::D(i)]),
            w([Op::D(j), Op::T(i)]).plus(op(Op::D(i)).scale(&t_minus_one())),
            false,
        );
        for k in (1..=n).filter(|&k| k != i && k != j) {
            add(format!("T{i} D{k} = D{k} T{i}"), commutator(Op::T(i), Op::D(k)), OpExpr::zero(), false);
        }
        add(format!("w D{j} = D{i} w"), w([Op::Omega, Op::D(j)]), w([Op::D(i), Op::Omega]), false);
    }
    add(format!("q w D1 = D{n} w"), w([Op::Omega, Op::D(1)]).scale(&q), w([Op::D(n), Op::Omega]), false);
    add(
        format!("T0 D1 = q^-1 t D{n} T0^-1"),
        w([Op::T0, Op::D(1)]),
        w([Op::D(n), Op::T0Inv]).scale(&QtScalar::monomial(-1, 1)),
        false,
    );
    add(
        format!("T0 D{n} = q D1 T0 + (t-1) D{n}"),
        w([Op::T0, Op::D(n)]),
        w([Op::D(1), Op::T0]).scale(&q).plus(op(Op::D(n)).scale(&t_minus_one())),
        false,
    );
    for k in 2..n {
        add(format!("T0 D{k} = D{k} T0"), commutator(Op::T0, Op::D(k)), OpExpr::zero(), false);
    }

    // I_{ij}^{-1} expansion and its plain-generator counterpart
    for i in 1..n {
        for j in i..n {
            let mut rhs = c(tp(i as i64 - j as i64 - 1));
            for p in i + 1..=j + 1 {
                rhs = rhs.plus(op(Op::TijInv(i, p)).scale(&(&tinv_minus_one() * &tp(p as i64 - j as i64 - 1))));
            }
            add(format!("I{i}{j}^-1 = t^{} + (t^-1-1) sum_p t^(p-{}) T{i}p^-1", i as i64 - j as i64 - 1, j + 1), op(Op::IijInv(i, j)), rhs, false);
            let word: Vec<Op> = (i..=j).rev().chain(i..=j).map(Op::T).collect();
            let mut rhs = c(tp((j - i + 1) as i64));
            for p in i..=j {
                rhs = rhs.plus(tij(p, j + 1).scale(&(&t_minus_one() * &tp((p - i) as i64))));
            }
            add(format!("T{j}..T{i} T{i}..T{j} = t^{} + (t-1) sum_p t^(p-{i}) Tp{}", j - i + 1, j + 1), w(word), rhs, false);
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            add(format!("T{i}{j} T{i}{j}^-1 = 1"), w([Op::Tij(i, j), Op::TijInv(i, j)]), OpExpr::identity(), false);
        }
    }

    // commutators with Y
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (lo, hi) = (i.min(j), i.max(j));
            let (y, d) = if i < j { (j, j) } else { (i, i) };
            let coeff = &tp(lo as i64 - hi as i64) * &one_minus_t();
            add(
                format!("[D{i}, Y{j}] = t^{}(1-t) Y{y} T{lo}{hi} D{d}", lo as i64 - hi as i64),
                commutator(Op::D(i), Op::Y(j)),
                w([Op::Y(y), Op::Tij(lo, hi), Op::D(d)]).scale(&coeff),
                false,
            );
        }
        let lhs = w([Op::D(i), Op::Y(i)]).minus(w([Op::Y(i), Op::D(i)]).scale(&q));
        let mut rhs = OpExpr::zero();
        for p in i + 1..=n {
            rhs = rhs.plus(w([Op::Y(p), Op::Tij(i, p), Op::D(p)]).scale(&(&t_minus_one() * &tp(i as i64 - p as i64))));
        }
        for p in 1..i {
            let coeff = &(&q * &t_minus_one()) * &tp(p as i64 - i as i64);
            rhs = rhs.plus(op(Op::Y(i)).then(&tij(p, i)).then(&op(Op::D(i))).scale(&coeff));
        }
        add(format!("D{i} Y{i} - q Y{i} D{i} = (t-1) sum_p>{i} .. + q(t-1) Y{i} sum_p<{i} .."), lhs, rhs, false);
    }

    for i in 1..n {
        // x_i [D_i, Y_n] = t^{n-i}(t^{-1}-1) T_{in}^{-1} Y_i (1 - t^{n-1} Y_n)
        let lhs = op(Op::X(i)).then(&commutator(Op::D(i), Op::Y(n)));
        let bracket = OpExpr::identity().minus(op(Op::Y(n)).scale(&tp(n as i64 - 1)));
        let coeff = &tp((n - i) as i64) * &tinv_minus_one();
        let rhs = w([Op::TijInv(i, n), Op::Y(i)]).then(&bracket).scale(&coeff);
        add(format!("x{i} [D{i}, Y{n}] = t^{}(t^-1-1) T{i}{n}^-1 Y{i} (1 - t^{} Y{n})", n - i, n - 1), lhs, rhs, false);

        // x_i x_n [D_i, x_n^{-1}] = t^{2n-i-1}(t^{-1}-1) T_{in}^{-1} Y_i
        let lhs = w([Op::X(i), Op::X(n), Op::D(i), Op::DivX(n)]).minus(w([Op::X(i), Op::D(i)]));
        let coeff = &tp((2 * n - i - 1) as i64) * &tinv_minus_one();
        add(
            format!("x{i} x{n} [D{i}, x{n}^-1] = t^{}(t^-1-1) T{i}{n}^-1 Y{i}", 2 * n - i - 1),
            lhs,
            w([Op::TijInv(i, n), Op::Y(i)]).scale(&coeff),
            true,
        );

        // x_i x_n Y_i x_n^{-1} = x_i Y_i + t^{n-i-1}(t-1) x_n T_{in}^{-1} Y_i
        let coeff = &tp((n - i - 1) as i64) * &t_minus_one();
        add(
            format!("x{i} x{n} Y{i} x{n}^-1 = x{i} Y{i} + t^{}(t-1) x{n} T{i}{n}^-1 Y{i}", n - i - 1),
            w([Op::X(i), Op::X(n), Op::Y(i), Op::DivX(n)]),
            w([Op::X(i), Op::Y(i)]).plus(w([Op::X(n), Op::TijInv(i, n), Op::Y(i)]).scale(&coeff)),
            true,
        );

        // [T_{in}^{-1}, x_n^{-1}] multiplied on the left by x_i x_{i+1} … x_n
        let all_x: Vec<Op> = (i..=n).map(Op::X).collect();
        let without = |k: usize| x_run_without(i, n, k);
        let lhs = w(cat(&[&all_x, &[Op::TijInv(i, n), Op::DivX(n)]])).minus(w(cat(&[&without(n), &[Op::TijInv(i, n)]])));
        let mut rhs = w(cat(&[&without(i), &[Op::TijInv(i, n)]]))
            .minus(w(cat(&[&without(n), &[Op::TijInv(i, n)]])))
            .plus(w(cat(&[&without(n), &iij_inv_or_one(i, n - 2)])).scale(&tinv_minus_one()));
        for p in i + 1..n {
            rhs = rhs.plus(w(cat(&[&without(p), &skip_word(n, i, p)])).scale(&tinv_minus_one()));
        }
        add(format!("x{i}..x{n} [T{i}{n}^-1, x{n}^-1] = cleared expansion"), lhs, rhs, true);
    }

    for i in 1..=n {
        for j in i + 1..=n {
            add(format!("[D{i}, D{j}] = 0"), commutator(Op::D(i), Op::D(j)), OpExpr::zero(), false);
        }
    }
    out
}

/// `x_i [D_i, Y_n]` against `t^{n-i}(t^{-1}-1) T_{in}^{-1} Y_i (1-t^{n-1}) Y_n`,
/// the reading with a scalar factor `(1 - t^{n-1})`.
#[cfg(test)]
pub(crate) fn scalar_factor_reading(n: usize, i: usize, degree: u32) -> Check {
    let lhs = op(Op::X(i)).then(&commutator(Op::D(i), Op::Y(n)));
    let coeff = &(&tp((n - i) as i64) * &tinv_minus_one()) * &(&QtScalar::one() - &tp(n as i64 - 1));
    let rhs = w([Op::TijInv(i, n), Op::Y(i), Op::Y(n)]).scale(&coeff);
    Check::identity("scalar factor reading", n, lhs, rhs, monomials(n, degree))
}

/// The `[T_{in}^{-1}, x_n^{-1}]` expansion with `I_{i,n-1}^{-1}` in the middle term.
#[cfg(test)]
pub(crate) fn wide_middle_term(n: usize, i: usize, degree: u32) -> Check {
    let all_x: Vec<Op> = (i..=n).map(Op::X).collect();
    let without = |k: usize| x_run_without(i, n, k);
    let lhs = w(cat(&[&all_x, &[Op::TijInv(i, n), Op::DivX(n)]])).minus(w(cat(&[&without(n), &[Op::TijInv(i, n)]])));
    let mut rhs = w(cat(&[&without(i), &[Op::TijInv(i, n)]]))
        .minus(w(cat(&[&without(n), &[Op::TijInv(i, n)]])))
        .plus(w(cat(&[&without(n), &[Op::IijInv(i, n - 1)]])).scale(&tinv_minus_one()));
    for p in i + 1..n {
        rhs = rhs.plus(w(cat(&[&without(p), &skip_word(n, i, p)])).scale(&tinv_minus_one()));
    }
    Check::identity("wide middle term", n, lhs, rhs, multiples_of_xn(n, degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run_checks, Suite, VerifyConfig};

    #[test]
    fn small_degree_passes() {
        for n in 2..=3 {
            let rep = run_checks(Suite::Dunkl, checks(n, 2), &VerifyConfig::default());
            let bad: Vec<_> = rep.failures().map(|c| (c.identity.clone(), c.counterexample.clone())).collect();
            assert!(bad.is_empty(), "n={n}: {bad:?}");
        }
    }

    #[test]
    fn wide_middle_term_fails() {
        for n in 2..=3 {
            let rep = run_checks(Suite::Dunkl, vec![wide_middle_term(n, n - 1, 2)], &VerifyConfig::default());
            assert!(!rep.passed(), "n={n}");
        }
    }

    #[test]
    fn scalar_factor_reading_fails() {
        let rep = run_checks(Suite::Dunkl, vec![scalar_factor_reading(2, 1, 2)], &VerifyConfig::default());
        assert!(!rep.passed());
    }
}
