use crate::error::{Error, Result};
use crate::poly::Composition;
use crate::qt::{QtMonomial, QtPoly, QtScalar};

/// Node statistics and constants of a composition diagram.
///
/// Per-node arrays are indexed `[i-1][j-1]` for the node `(i, j)`,
/// `1 ≤ j ≤ η_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionStats {
    pub eta: Composition,
    pub arm: Vec<Vec<u32>>,
    pub armco: Vec<Vec<u32>>,
    pub leg: Vec<Vec<u32>>,
    pub legco: Vec<Vec<u32>>,
    pub etabar: Vec<QtMonomial>,
    pub d: QtScalar,
    pub dprime: QtScalar,
    pub e: QtScalar,
}

fn count(it: impl Iterator<Item = bool>) -> u32 {
    it.filter(|&b| b).count() as u32
}

pub fn leg(eta: &[u32], i: usize, j: u32) -> u32 {
    let ei = eta[i];
    count(eta[i + 1..].iter().map(|&ek| j <= ek && ek <= ei)) + count(eta[..i].iter().map(|&ek| j <= ek + 1 && ek < ei))
}

pub fn legco(eta: &[u32], i: usize) -> u32 {
    let ei = eta[i];
    count(eta[i + 1..].iter().map(|&ek| ek > ei)) + count(eta[..i].iter().map(|&ek| ek >= ei))
}

/// `t^{η̄_i} = q^{η_i} t^{-c_i}` for every `i`.
pub fn eigenvalues(eta: &Composition) -> Vec<QtMonomial> {
    let p = eta.parts();
    (0..p.len()).map(|i| QtMonomial::new(i64::from(p[i]), -i64::from(legco(p, i)))).collect()
}

/// `t^{δ_{iη}} = t^{η̄_i} / t^{η̄_{i+1}}`.
pub fn delta(eta: &Composition, i: usize) -> Result<QtMonomial> {
    if i == 0 || i >= eta.len() {
        return Err(Error::IndexOutOfRange { op: "delta", index: i, n: eta.len() });
    }
    let ev = eigenvalues(eta);
    Ok(ev[i - 1] * ev[i].inv())
}

/// `Σ_{s ∈ η} l(s)`.
pub fn leg_sum(eta: &Composition) -> u32 {
    let p = eta.parts();
    (0..p.len()).map(|i| (1..=p[i]).map(|j| leg(p, i, j)).sum::<u32>()).sum()
}

pub fn composition_stats(eta: &Composition, n: usize) -> Result<CompositionStats> {
    if eta.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: eta.len() });
    }
    let p = eta.parts();
    let nn = n as u32;
    let (mut arm, mut armco, mut legs, mut legcos) = (vec![], vec![], vec![], vec![]);
    let (mut d, mut dp, mut e) = (QtPoly::one(), QtPoly::one(), QtPoly::one());
    for i in 0..n {
        let lc = legco(p, i);
        let (mut ar, mut ac, mut lg, mut lco) = (vec![], vec![], vec![], vec![]);
        for j in 1..=p[i] {
            let a = p[i] - j;
            let a_co = j - 1;
            let l = leg(p, i, j);
            d = &d * &QtPoly::one_minus(a + 1, l + 1);
            dp = &dp * &QtPoly::one_minus(a + 1, l);
            e = &e * &QtPoly::one_minus(a_co + 1, nn - lc);
            ar.push(a);
            ac.push(a_co);
            lg.push(l);
            lco.push(lc);
        }
        arm.push(ar);
        armco.push(ac);
        legs.push(lg);
        legcos.push(lco);
    }
    Ok(CompositionStats {
        eta: eta.clone(),
        arm,
        armco,
        leg: legs,
        legco: legcos,
        etabar: eigenvalues(eta),
        d: QtScalar::from_poly(d),
        dprime: QtScalar::from_poly(dp),
        e: QtScalar::from_poly(e),
    })
}

/// `A_η = d_η / (d'_η e_η)`.
pub fn kernel_coefficient(eta: &Composition) -> QtScalar {
    let s = composition_stats(eta, eta.len()).expect("length matches");
    &s.d / &(&s.dprime * &s.e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(a: u32, b: u32) -> QtScalar {
        QtScalar::from_poly(QtPoly::one_minus(a, b))
    }

    #[test]
    fn two_variable_examples() {
        let s = composition_stats(&Composition::from([1, 0]), 2).unwrap();
        assert_eq!((s.d.clone(), s.dprime.clone(), s.e.clone()), (om(1, 1), om(1, 0), om(1, 2)));
        assert_eq!(s.etabar, vec![QtMonomial::new(1, 0), QtMonomial::new(0, -1)]);
        let s = composition_stats(&Composition::from([0, 1]), 2).unwrap();
        assert_eq!((s.d.clone(), s.dprime.clone(), s.e.clone()), (om(1, 2), om(1, 1), om(1, 2)));
        assert_eq!(s.etabar, vec![QtMonomial::new(0, -1), QtMonomial::new(1, 0)]);
        let s = composition_stats(&Composition::from([0, 0]), 2).unwrap();
        assert!(s.d.is_one() && s.dprime.is_one() && s.e.is_one());
        assert!(composition_stats(&Composition::from([0, 0]), 3).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&Composition::from([0, 1]), 1).unwrap(), QtMonomial::new(-1, -1));
        assert_eq!(delta(&Composition::from([1, 0]), 1).unwrap(), QtMonomial::new(1, 1));
        for a in 0..4 {
            assert_eq!(delta(&Composition::from([a, a]), 1).unwrap(), QtMonomial::t_pow(1));
        }
    }

    #[test]
    fn eigenvalue_multiset_is_permutation_invariant() {
        let sorted = |eta: &Composition| {
            let mut v = eigenvalues(eta);
            v.sort();
            v
        };
        let base = Composition::from([2, 0, 1]);
        for r in base.rearrangements() {
            assert_eq!(sorted(&r), sorted(&base));
        }
    }
}
