use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::stats::delta;
use crate::dunkl::apply_phi;
use crate::hecke::apply_ti;
use crate::poly::{Composition, XPolynomial};
use crate::qt::QtScalar;

/// Memo table for `E_η`, keyed by the composition (whose length is `n`).
///
/// Readers never block each other; concurrent writers of the same key store
/// identical values, so the last write wins harmlessly.
#[derive(Default)]
pub struct MacdonaldCache {
    map: RwLock<HashMap<Composition, Arc<XPolynomial>>>,
}

impl MacdonaldCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("cache lock").clear();
    }

    fn lookup(&self, eta: &Composition) -> Option<Arc<XPolynomial>> {
        self.map.read().expect("cache lock").get(eta).cloned()
    }

    /// `E_η(x; q, t)` by the raising/intertwining recursion.
    pub fn get(&self, eta: &Composition) -> Arc<XPolynomial> {
        if let Some(hit) = self.lookup(eta) {
            return hit;
        }
        let value = Arc::new(self.compute(eta));
        self.map.write().expect("cache lock").insert(eta.clone(), value.clone());
        value
    }

    fn compute(&self, eta: &Composition) -> XPolynomial {
        let n = eta.len();
        let p = eta.parts();
        if eta.weight() == 0 {
            return XPolynomial::one(n);
        }
        if p[n - 1] >= 1 {
            // η = Φν with ν = (η_n - 1, η_1, …, η_{n-1})
            let nu = Composition::new(std::iter::once(p[n - 1] - 1).chain(p[..n - 1].iter().copied()));
            let nu1 = nu.parts()[0];
            let k = nu.parts()[1..].iter().filter(|&&v| v <= nu1).count();
            let raised = apply_phi(&self.get(&nu)).expect("raising operator is total");
            return raised.scale(&QtScalar::t_pow(k as i64));
        }
        let i = (1..n).rev().find(|&i| p[i - 1] > p[i]).expect("a descent exists when η_n = 0 and |η| > 0");
        let nu = eta.swapped(i);
        let e_nu = self.get(&nu);
        let td = delta(&nu, i).expect("index in range");
        // E_η = t^{-1} (T_i - (t-1)/(1 - t^{-δ})) E_ν
        let one_minus = &QtScalar::one() - &td.inv().to_scalar();
        let c = &(&QtScalar::t() - &QtScalar::one()) / &one_minus;
        let g = &apply_ti(&e_nu, i).expect("index in range") - &e_nu.scale(&c);
        g.scale(&QtScalar::t_pow(-1))
    }
}

/// Process-wide cache used by [`nonsym_macdonald`].
pub fn global_cache() -> &'static MacdonaldCache {
    static CACHE: OnceLock<MacdonaldCache> = OnceLock::new();
    CACHE.get_or_init(MacdonaldCache::new)
}

/// The non-symmetric Macdonald polynomial `E_η(x; q, t)` in `η.len()` variables.
pub fn nonsym_macdonald(eta: &Composition) -> XPolynomial {
    (*global_cache().get(eta)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::QtPoly;

    #[test]
    fn small_cases() {
        let cache = MacdonaldCache::new();
        assert_eq!(*cache.get(&Composition::from([0, 0])), XPolynomial::one(2));
        assert_eq!(*cache.get(&Composition::from([0, 1])), XPolynomial::var(2, 2));
        let c = QtScalar::new(QtPoly::from_terms([((1, 0), 1), ((1, 1), -1)]), QtPoly::one_minus(1, 1)).unwrap();
        let expected = &XPolynomial::var(2, 1) + &XPolynomial::var(2, 2).scale(&c);
        assert_eq!(*cache.get(&Composition::from([1, 0])), expected);
        assert!(cache.len() >= 3);
    }
}
