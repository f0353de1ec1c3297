//! Polynomials in `x_1..x_n` over `Q(q,t)`, compositions and their orders.

mod composition;
mod xpoly;

pub use composition::{dominance_less, prec_order, Composition, Exponent};
pub(crate) use xpoly::fmt_exponent;
pub use xpoly::{MonomialImage, XPolynomial};
