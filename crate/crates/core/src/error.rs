use thiserror::Error;

use crate::polyring::ParamId;

/// Errors raised by the polynomial engine and the case-table algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("pseudo-remainder needs deg A >= deg B (got {dividend} < {divisor})")]
    DegreeOrder { dividend: String, divisor: String },
    #[error("pseudo-remainder by the zero polynomial")]
    ZeroDivisor,
    #[error("no value assigned to {0}")]
    MissingAssignment(ParamId),
    #[error("empty polynomial list")]
    EmptyInput,
    #[error("zero polynomial in coefficient matrix input (position {0})")]
    ZeroPolynomial(usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}x{cols}, determinant polynomial needs rows <= cols")]
    TooTall { rows: usize, cols: usize },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("tuple lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("cell weight {weight} exceeds d0 = {d0}")]
    BadWeight { weight: usize, d0: usize },
    #[error("subresultant index {k} out of range 0..={d0}")]
    BadIndex { k: usize, d0: usize },
    #[error("invalid degrees: {0}")]
    InvalidDegrees(String),
    #[error("gcd of all-zero polynomials is undefined")]
    AllZero,
    #[error("bad range: {0}")]
    BadRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
