//! Composition statistics and the Macdonald polynomials `E_η` and `P_κ`.

mod nonsym;
mod oracle;
mod stats;
mod symmetric;

pub use nonsym::{global_cache, nonsym_macdonald, MacdonaldCache};
pub use oracle::{nonsym_macdonald_oracle, triangular_basis};
pub use stats::{composition_stats, delta, eigenvalues, kernel_coefficient, leg_sum, CompositionStats};
pub use symmetric::{a_eta, swap_factor, symmetric_macdonald, ti_inv_on_e, ti_on_e};
