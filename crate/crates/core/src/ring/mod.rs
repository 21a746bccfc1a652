//! Exact coefficient arithmetic: Gaussian rationals, parameter polynomials
//! and rational functions of the normal covector component.

mod gaussian;
mod poly;
mod ratxi;
mod var;

pub use gaussian::{fmt_rat, parse_rat, rat, GaussianRational};
pub use poly::{Monomial, ParamPoly};
pub use ratxi::{PartialFractions, RatXi};
pub use var::Var;
