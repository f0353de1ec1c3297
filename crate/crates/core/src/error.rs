use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(q,t)")]
    DivisionByZero,

    #[error("denominator vanishes at q={q}, t={t}")]
    Pole { q: String, t: String },

    #[error("index {index} out of range for {op} with n={n}")]
    IndexOutOfRange { op: &'static str, index: usize, n: usize },

    #[error("variable count mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight mismatch: |nu|={left}, |eta|={right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("term {monomial} is not divisible by x{var}")]
    NotDivisible { var: usize, monomial: String },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("{0} is not a partition")]
    NotPartition(String),

    #[error("polynomial is not symmetric in x{from}..x{to}")]
    NotSymmetric { from: usize, to: usize },

    #[error("eigen-solve oracle for {eta}: joint kernel has dimension {dim}, expected 1")]
    OracleKernel { eta: String, dim: usize },

    #[error("operator image of x^{nu} leaves the triangular span of {eta}")]
    Triangularity { nu: String, eta: String },

    #[error("word {0:?} is not a reduced decomposition")]
    NotReduced(Vec<usize>),

    #[error("parse error: {0}")]
    Parse(String),
}
