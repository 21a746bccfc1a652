//! Formal derivations on boundary jets at the base point.

use crate::clifford::CliffElem;
use crate::error::{Error, Result};
use crate::ring::{GaussianRational as GQ, ParamPoly, Var};

/// Image of an indeterminate under the normal space derivative.
///
/// The jet is kept to first order: quantities that are themselves first
/// derivatives have no recorded derivative and raise `JetDepth`.
pub fn normal_rule(v: Var) -> Result<ParamPoly> {
    Ok(match v {
        Var::Xi(_) | Var::Xn => ParamPoly::zero(),
        Var::L => &ParamPoly::var(Var::Hp) * &ParamPoly::var(Var::L),
        Var::S => (&ParamPoly::var(Var::Hp) * &ParamPoly::var(Var::S)).scale(&GQ::frac(1, 2)),
        Var::V(j) => ParamPoly::var(Var::Dv(j)),
        Var::W(j) => ParamPoly::var(Var::Dw(j)),
        Var::Hp => return Err(Error::JetDepth("second normal derivative of the metric".into())),
        other => return Err(Error::JetDepth(format!("normal derivative of {other}"))),
    })
}

/// Image under `d/dxi_j` for a tangential direction `j`.
pub fn covector_rule(j: u8) -> impl Fn(Var) -> Result<ParamPoly> {
    move |v| {
        Ok(match v {
            Var::Xi(k) if k == j => ParamPoly::one(),
            Var::L => (&ParamPoly::var(Var::S).pow(2) * &ParamPoly::var(Var::Xi(j))).scale(&GQ::int(2)),
            _ => ParamPoly::zero(),
        })
    }
}

/// Tangential space derivatives vanish on every catalog quantity at the base point.
pub fn tangential_rule(_v: Var) -> Result<ParamPoly> {
    Ok(ParamPoly::zero())
}

pub fn d_xin(s: &CliffElem, k: u32) -> CliffElem {
    s.map(|c| c.d_xin_k(k))
}

pub fn d_xn(s: &CliffElem) -> Result<CliffElem> {
    s.try_map(|c| c.derive(&normal_rule))
}

pub fn d_xiprime(s: &CliffElem, j: u8) -> CliffElem {
    assert!((1..=3).contains(&j), "tangential direction {j} out of range");
    let rule = covector_rule(j);
    s.try_map(|c| c.derive(&rule)).expect("covector derivative is total")
}

pub fn d_xprime(s: &CliffElem, _j: u8) -> CliffElem {
    s.try_map(|c| c.derive(&tangential_rule)).expect("tangential derivative is total")
}

/// `d/dxi_j` for `j` in `1..=4`, the last being the normal component.
pub fn d_xi(s: &CliffElem, j: u8) -> CliffElem {
    if j == 4 {
        d_xin(s, 1)
    } else {
        d_xiprime(s, j)
    }
}

/// `d/dx_j` for `j` in `1..=4`.
pub fn d_x(s: &CliffElem, j: u8) -> Result<CliffElem> {
    if j == 4 {
        d_xn(s)
    } else {
        Ok(d_xprime(s, j))
    }
}

/// Unit-sphere restriction of every coefficient.
pub fn restrict(s: &CliffElem) -> CliffElem {
    s.map(|c| c.restrict())
}
