//! Nonsymmetric Macdonald polynomials, Cherednik operators and the
//! Cauchy-type kernel, all over exact `Q(q,t)` coefficients.

pub mod dunkl;
pub mod error;
pub mod hecke;
pub mod kernel;
pub mod linalg;
pub mod macdonald;
pub mod poly;
pub mod qt;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Composition, Exponent, XPolynomial};
pub use qt::{LaurentPoly, QtMonomial, QtPoly, QtScalar};
