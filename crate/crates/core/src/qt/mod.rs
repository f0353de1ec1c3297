//! The coefficient field `Q(q,t)`.

mod gcd;
mod laurent;
mod monomial;
mod poly;
mod scalar;

pub use gcd::{gcd_with, GcdRoute};
pub use laurent::LaurentPoly;
pub use monomial::QtMonomial;
pub use poly::{grlex_cmp, QtExp, QtPoly};
pub use scalar::{qt_arith, ArithOp, QtScalar};
