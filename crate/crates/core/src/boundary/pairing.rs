//! The sphere average of `sum_j xi_j d/dx_n Tr(v_j c(w) c(xi'))` and its
//! split into the metric part and the part from the fields.

use crate::clifford::{c_w, c_xi_prime, CliffElem};
use crate::error::Result;
use crate::residue::{integrate_sphere, PiScaled};
use crate::ring::{GaussianRational as GQ, ParamPoly, Var};
use crate::symbols::{d_xn, restrict};

#[derive(Clone, Debug)]
pub struct PairingIntegral {
    /// The whole integral, a multiple of `pi`.
    pub total: PiScaled<ParamPoly>,
    /// Contribution of the normal derivative of `sqrt(h)` in `c(xi')`.
    pub metric: PiScaled<ParamPoly>,
}

fn integrand(derive: impl Fn(&CliffElem) -> Result<CliffElem>) -> Result<ParamPoly> {
    let mut sum = ParamPoly::zero();
    for j in 1..=3 {
        let e = (&c_w() * &c_xi_prime()).mul_ratxi(&ParamPoly::var(Var::V(j)).into());
        let t = restrict(&derive(&e)?).trace();
        sum = &sum + &(t.numerator() * &ParamPoly::var(Var::Xi(j)));
    }
    Ok(sum)
}

fn metric_only(v: Var) -> Result<ParamPoly> {
    Ok(match v {
        Var::S => (&ParamPoly::var(Var::Hp) * &ParamPoly::var(Var::S)).scale(&GQ::frac(1, 2)),
        _ => ParamPoly::zero(),
    })
}

pub fn pairing_integral() -> Result<PairingIntegral> {
    let total = integrate_sphere(&integrand(d_xn)?)?;
    let metric = integrate_sphere(&integrand(|e| e.try_map(|c| c.derive(&metric_only)))?)?;
    Ok(PairingIntegral { total, metric })
}
