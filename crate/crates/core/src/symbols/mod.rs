//! Boundary-jet symbol catalog, formal derivations and the composition
//! formula for pseudodifferential symbols.

mod catalog;
mod compose;
pub mod jet;

pub use catalog::{catalog, dump_catalog, nabla_order_one, Component, GradedSymbol, CATALOG};
pub use compose::{compose, compose_symbol, compose_terms, multi_indices, CompositionTerm};
pub use jet::{d_x, d_xi, d_xin, d_xiprime, d_xn, d_xprime, restrict};

use crate::clifford::{c_w, c_xi, CliffElem};
use crate::error::Result;
use crate::ring::{GaussianRational as GQ, ParamPoly, Var};

/// Outcome of the Clifford-level checks behind the operator splitting
/// `c(w)(D c(v) + c(v) D) = c(w) sum_j c(e_j) c(nabla_{e_j} v) - 2 c(w) nabla_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub anticommutator: bool,
    pub principal_with_inverse: bool,
    pub principal_with_inverse_square: bool,
    pub vanishes_at_zero_vector: bool,
}

impl DecompositionReport {
    pub fn all(&self) -> bool {
        self.anticommutator
            && self.principal_with_inverse
            && self.principal_with_inverse_square
            && self.vanishes_at_zero_vector
    }
}

fn c_v() -> CliffElem {
    CliffElem::vector([1, 2, 3, 4].map(|k| ParamPoly::var(Var::V(k))))
}

/// Principal symbol of `c(w)(D c(v) + c(v) D)` and of `-2 c(w) nabla_v`.
fn principal_sides() -> (CliffElem, CliffElem) {
    let d1 = restrict(&c_xi()).scale(&GQ::i());
    let lhs = &c_w() * &(&(&d1 * &c_v()) + &(&c_v() * &d1));
    let rhs = (&c_w() * &nabla_order_one()).scale(&GQ::int(-2));
    (restrict(&lhs), restrict(&rhs))
}

pub fn verify_decomposition() -> Result<DecompositionReport> {
    let cx = restrict(&c_xi());
    let anti = &(&cx * &c_v()) + &(&c_v() * &cx);
    let mut pairing = ParamPoly::zero();
    for j in 1..=3 {
        pairing = &pairing + &(&ParamPoly::var(Var::Xi(j)) * &ParamPoly::var(Var::V(j)));
    }
    pairing = &pairing + &(&ParamPoly::var(Var::Xn) * &ParamPoly::var(Var::V(4)));
    let anticommutator = anti == CliffElem::from(pairing.scale(&GQ::int(-2)));

    let (lhs, rhs) = principal_sides();
    let dinv = catalog("D^-1")?;
    let dinv2 = catalog("D^-2")?;
    let lead = |q: &GradedSymbol| -> Result<(CliffElem, CliffElem)> {
        let top = restrict(&q.get(q.top())?);
        Ok((&lhs * &top, &rhs * &top))
    };
    let (l1, r1) = lead(&dinv)?;
    let (l2, r2) = lead(&dinv2)?;

    let zero_v = |e: &CliffElem| {
        e.try_map(|c| {
            let mut c = c.clone();
            for k in 1..=4 {
                c = c.substitute(Var::V(k), &ParamPoly::zero())?;
            }
            Ok(c)
        })
    };
    let vanishes_at_zero_vector = zero_v(&lhs)?.is_zero() && zero_v(&rhs)?.is_zero();

    Ok(DecompositionReport {
        anticommutator,
        principal_with_inverse: l1 == r1,
        principal_with_inverse_square: l2 == r2,
        vanishes_at_zero_vector,
    })
}
