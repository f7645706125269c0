//! Parametric gcd of several univariate polynomials with indeterminate
//! coefficients.
//!
//! The engine builds the complete case table (guard polynomial, gcd
//! expression) for formal inputs of given degrees, by three routes:
//! determinant polynomials of stacked coefficient matrices
//! ([`sylvester::pgcd`]), pseudo-remainder recursions ([`habicht::epgcd`]),
//! and a recursive two-polynomial baseline ([`recursive::pgcd_recursive`]).
//! [`oracle`] checks any table against an exact Euclidean gcd on random
//! rational specializations.

pub mod coeff;
pub mod counts;
pub mod detmat;
pub mod error;
pub mod habicht;
pub mod oracle;
pub mod polyring;
pub mod recursive;
pub mod serial;
pub mod subres;
pub mod sylvester;
pub mod table;

pub mod cli;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use polyring::{Degree, Monomial, ParamId};
pub use subres::{DegreeVector, DeltaIndex};
pub use table::{Algorithm, Condition};

/// Parameter polynomial over arbitrary-precision integers.
pub type ParamPoly = polyring::ParamPoly<BigInt>;
/// Polynomial in `x` over `Z[a]`.
pub type XPoly = polyring::XPoly<BigInt>;
pub type PolyMatrix = detmat::PolyMatrix<BigInt>;
pub type GcdCase = table::GcdCase<BigInt>;
pub type CaseTable = table::CaseTable<BigInt>;
/// Univariate polynomial over exact rationals, as produced by specialization.
pub type RationalUPoly = polyring::UPoly<BigRational>;
