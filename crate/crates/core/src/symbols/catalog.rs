use std::collections::BTreeMap;

use super::jet;
use crate::clifford::{c_w, c_xi, c_xi_prime, traces, CliffElem};
use crate::error::{Error, Result};
use crate::ring::{rat, GaussianRational as GQ, ParamPoly, RatXi, Var};

/// One homogeneous component of a symbol.
#[derive(Clone, Debug)]
pub struct Component {
    pub elem: CliffElem,
    /// Known only on the unit sphere `|xi'| = 1` at the base point, so it
    /// admits no further covector or space derivatives.
    pub sphere_only: bool,
}

/// Symbol as a finite sum of homogeneous components.
#[derive(Clone, Debug)]
pub struct GradedSymbol {
    pub name: String,
    pub orders: BTreeMap<i32, Component>,
    /// True for differential operators, whose missing orders are zero
    /// rather than unknown.
    pub complete: bool,
}

impl GradedSymbol {
    fn new(name: &str, complete: bool) -> Self {
        Self { name: name.to_string(), orders: BTreeMap::new(), complete }
    }

    fn with(mut self, r: i32, elem: CliffElem) -> Self {
        self.orders.insert(r, Component { elem, sphere_only: false });
        self
    }

    fn with_sphere(mut self, r: i32, elem: CliffElem) -> Self {
        self.orders.insert(r, Component { elem, sphere_only: true });
        self
    }

    pub fn top(&self) -> i32 {
        *self.orders.keys().next_back().expect("symbol has a component")
    }

    pub fn lowest(&self) -> i32 {
        *self.orders.keys().next().expect("symbol has a component")
    }

    /// Component of order `r`; zero above the top order or below it for
    /// complete symbols, an error for unknown lower orders.
    pub fn component(&self, r: i32) -> Result<Component> {
        if let Some(c) = self.orders.get(&r) {
            return Ok(c.clone());
        }
        if r > self.top() || self.complete {
            return Ok(Component { elem: CliffElem::zero(), sphere_only: false });
        }
        Err(Error::JetDepth(format!("order {r} of {} is not in the catalog", self.name)))
    }

    pub fn get(&self, r: i32) -> Result<CliffElem> {
        Ok(self.component(r)?.elem)
    }
}

pub const CATALOG: [&str; 7] = ["D", "D^-1", "D^-2", "nabla_v", "c(w)", "connection", "-2c(w)nabla_v"];

fn poly(v: Var) -> ParamPoly {
    ParamPoly::var(v)
}

fn scalar(c: GQ) -> RatXi {
    RatXi::constant(c)
}

fn inverse_norm(k: u32) -> RatXi {
    RatXi::new(ParamPoly::one(), 0, 0, k)
}

/// `sigma_0(D) = -3/4 h' c(dx_n)`.
fn d_order_zero() -> CliffElem {
    CliffElem::generator(4).mul_ratxi(&RatXi::from_poly(poly(Var::Hp).scale(&GQ::frac(-3, 4))))
}

fn d_inverse_order_minus_two() -> CliffElem {
    let cxi = c_xi();
    let first = (&(&cxi * &d_order_zero()) * &cxi).mul_ratxi(&inverse_norm(2));
    let norm = &poly(Var::L) + &poly(Var::Xn).pow(2);
    let dcxi = jet::d_xn(&c_xi_prime()).expect("first-order jet");
    let hl = &poly(Var::Hp) * &poly(Var::L);
    let bracket = &dcxi.mul_ratxi(&RatXi::from_poly(norm)) - &cxi.mul_ratxi(&RatXi::from_poly(hl));
    let second = (&(&cxi * &CliffElem::generator(4)) * &bracket).mul_ratxi(&inverse_norm(3));
    &first + &second
}

/// Order `-3` of the inverse square at the base point on `|xi'| = 1`.
fn d_inverse_square_order_minus_three() -> CliffElem {
    let hp = poly(Var::Hp);
    let xn = poly(Var::Xn);
    let mut frame = CliffElem::zero();
    for k in 1..=3 {
        let w = &CliffElem::generator(k) * &CliffElem::generator(4);
        frame = &frame + &w.mul_ratxi(&RatXi::from_poly(poly(Var::Xi(k))));
    }
    let inner = &frame.mul_ratxi(&RatXi::from_poly(hp.scale(&GQ::frac(-1, 2))))
        + &CliffElem::from((&hp * &xn).scale(&GQ::frac(5, 2)));
    let lead = inner.mul_ratxi(&RatXi::new(ParamPoly::constant(-GQ::i()), 2, 2, 0));
    let tail = CliffElem::scalar(RatXi::new((&hp * &xn).scale(&GQ::new(rat(0, 1), rat(-2, 1))), 3, 3, 0));
    &lead + &tail
}

/// `sigma_1(nabla_v) = i sum_j v_j xi_j`, the normal component included.
pub fn nabla_order_one() -> CliffElem {
    let mut s = ParamPoly::zero();
    for j in 1..=3 {
        s = &s + &(&poly(Var::V(j)) * &poly(Var::Xi(j)));
    }
    s = &s + &(&poly(Var::V(4)) * &poly(Var::Xn));
    CliffElem::from(s.scale(&GQ::i()))
}

pub fn nabla_order_zero() -> CliffElem {
    traces::spin_connection(&traces::antisymmetric_omega())
}

pub fn catalog(name: &str) -> Result<GradedSymbol> {
    let i = scalar(GQ::i());
    Ok(match name {
        "D" => GradedSymbol::new("D", true).with(1, c_xi().mul_ratxi(&i)).with(0, d_order_zero()),
        "D^-1" => GradedSymbol::new("D^-1", false)
            .with(-1, c_xi().mul_ratxi(&(&i * &inverse_norm(1))))
            .with(-2, d_inverse_order_minus_two()),
        "D^-2" => GradedSymbol::new("D^-2", false)
            .with(-2, CliffElem::scalar(inverse_norm(1)))
            .with_sphere(-3, d_inverse_square_order_minus_three()),
        "nabla_v" => GradedSymbol::new("nabla_v", true).with(1, nabla_order_one()).with(0, nabla_order_zero()),
        "c(w)" => GradedSymbol::new("c(w)", true).with(0, c_w()),
        "connection" => {
            GradedSymbol::new("connection", true).with(0, &c_w() * &traces::frame_connection_sum())
        }
        "-2c(w)nabla_v" => {
            let m2cw = c_w().scale(&GQ::int(-2));
            GradedSymbol::new("-2c(w)nabla_v", true)
                .with(1, &m2cw * &nabla_order_one())
                .with(0, &m2cw * &nabla_order_zero())
        }
        _ => {
            return Err(Error::UnknownSymbol(format!("{name}; the catalog holds {}", CATALOG.join(", "))))
        }
    })
}

/// Every catalog component in canonical text, for audit.
pub fn dump_catalog() -> Vec<(String, i32, bool, String)> {
    let mut out = Vec::new();
    for name in CATALOG {
        let s = catalog(name).expect("catalog entry");
        for (r, c) in s.orders.iter().rev() {
            out.push((name.to_string(), *r, c.sphere_only, c.elem.to_string()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_names_list_the_catalog() {
        let err = catalog("Q").unwrap_err().to_string();
        assert!(err.contains("D^-1") && err.contains("connection"));
    }

    #[test]
    fn restricted_components_live_on_the_pole_lattice() {
        for name in CATALOG {
            for (r, c) in &catalog(name).unwrap().orders {
                for (_, coeff) in jet::restrict(&c.elem).terms() {
                    assert_eq!(coeff.exponents().2, 0, "{name} order {r}");
                    assert!(!coeff.numerator().contains(Var::L));
                }
            }
        }
    }

    #[test]
    fn inverse_square_leading_order() {
        let s = catalog("D^-2").unwrap();
        let expect = CliffElem::scalar(RatXi::new(ParamPoly::one(), 1, 1, 0));
        assert_eq!(jet::restrict(&s.get(-2).unwrap()), expect);
    }

    #[test]
    fn missing_orders() {
        let d = catalog("D").unwrap();
        assert!(d.get(-1).unwrap().is_zero());
        assert!(catalog("D^-1").unwrap().get(-3).is_err());
    }
}
