//! Shared inputs for the benchmarks in `benches/`.

use qmacd_core::verify::monomials;
use qmacd_core::{Composition, XPolynomial};

/// Sum of every monomial of degree `≤ d` in `n` variables.
pub fn dense_input(n: usize, d: u32) -> XPolynomial {
    XPolynomial::sum(n, &monomials(n, d))
}

/// The compositions of the given weight, the heaviest workload of a sweep.
pub fn compositions(n: usize, weight: u32) -> Vec<Composition> {
    Composition::all_of_weight(n, weight)
}
