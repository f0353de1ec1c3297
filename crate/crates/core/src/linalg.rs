//! Exact Gaussian elimination over `Q(q,t)`.

use crate::qt::QtScalar;

fn weight(c: &QtScalar) -> usize {
    c.numer().len() + c.denom().len()
}

/// Reduce `rows` to reduced row echelon form in place and return the pivot
/// columns. Pivots are chosen by smallest coefficient size to limit growth.
pub fn rref(rows: &mut Vec<Vec<QtScalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).filter(|&k| !rows[k][col].is_zero()).min_by_key(|&k| weight(&rows[k][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in &mut rows[r][col..ncols] {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// A basis of `{v : A v = 0}`.
pub fn nullspace(mut rows: Vec<Vec<QtScalar>>, ncols: usize) -> Vec<Vec<QtScalar>> {
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![QtScalar::zero(); ncols];
            v[f] = QtScalar::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> QtScalar {
        QtScalar::from_int(v)
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let rows = vec![vec![QtScalar::t(), s(-1)], vec![&QtScalar::t() * &QtScalar::q(), -QtScalar::q()]];
        let ns = nullspace(rows, 2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![QtScalar::t_pow(-1), s(1)]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = vec![vec![s(1), QtScalar::q()], vec![QtScalar::t(), s(1)]];
        assert!(nullspace(rows, 2).is_empty());
    }
}
