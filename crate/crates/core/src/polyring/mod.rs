//! Exact arithmetic in the parameter ring `Z[a]` and in `Z[a][x]`.

mod param;
mod upoly;
mod xpoly;

pub use param::{Monomial, ParamId, ParamPoly};
pub use upoly::UPoly;
pub use xpoly::{Degree, XPoly};
