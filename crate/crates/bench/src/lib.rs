//! Fixtures shared by the benchmarks.

use wres_core::boundary::{find_case, CaseSpec, OperatorType};
use wres_core::oracle::{samples, Params};
use wres_core::ring::{ParamPoly, RatXi, Var};
use wres_core::CliffElem;

pub fn case(op: OperatorType, name: &str) -> CaseSpec {
    find_case(op, name).expect("known case")
}

/// `xin^2 c(w) c(dx_n) / (1 + xin^2)^3`, a typical projection input.
pub fn projection_input() -> CliffElem {
    let xn = ParamPoly::var(Var::Xn);
    let c = RatXi::new(&xn * &xn, 3, 3, 0);
    (&wres_core::clifford::c_w() * &CliffElem::generator(4)).mul_ratxi(&c)
}

pub fn params() -> Params {
    samples(1, 7).remove(0).params()
}
