use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::poly::fmt_monomial;
use super::scalar::QtScalar;

/// A Laurent monomial `q^q t^t`, used for Y-eigenvalues so that no
/// extra symbol for the spectral parameter is ever needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct QtMonomial {
    pub q: i64,
    pub t: i64,
}

impl QtMonomial {
    pub const ONE: QtMonomial = QtMonomial { q: 0, t: 0 };

    pub fn new(q: i64, t: i64) -> Self {
        QtMonomial { q, t }
    }

    pub fn t_pow(t: i64) -> Self {
        QtMonomial { q: 0, t }
    }

    pub fn inv(self) -> Self {
        QtMonomial { q: -self.q, t: -self.t }
    }

    pub fn pow(self, k: i64) -> Self {
        QtMonomial { q: self.q * k, t: self.t * k }
    }

    pub fn to_scalar(self) -> QtScalar {
        QtScalar::monomial(self.q, self.t)
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }
}

impl Mul for QtMonomial {
    type Output = QtMonomial;
    fn mul(self, rhs: QtMonomial) -> QtMonomial {
        QtMonomial { q: self.q + rhs.q, t: self.t + rhs.t }
    }
}

impl From<QtMonomial> for QtScalar {
    fn from(m: QtMonomial) -> Self {
        m.to_scalar()
    }
}

impl fmt::Display for QtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut s = String::new();
        fmt_monomial(&mut s, self.q, self.t)?;
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_scalar() {
        let m = QtMonomial::new(1, -2);
        assert_eq!(m.to_string(), "qt^-2");
        assert_eq!(m.to_scalar().to_string(), "q/t^2");
        assert!((m * m.inv()).is_one());
    }
}
