pub mod boundary;
pub mod clifford;
pub mod error;
pub mod oracle;
pub mod report;
pub mod residue;
pub mod ring;
pub mod symbols;

pub use clifford::{CliffElem, Word};
pub use error::{Error, Result};
pub use ring::{GaussianRational, Monomial, ParamPoly, RatXi, Var};
pub use symbols::GradedSymbol;
