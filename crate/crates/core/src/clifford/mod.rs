//! Clifford algebra of the boundary frame and its spinor trace.

mod elem;
pub mod traces;
mod word;

pub use elem::{c_w, c_xi, c_xi_prime, CliffElem};
pub use word::Word;
