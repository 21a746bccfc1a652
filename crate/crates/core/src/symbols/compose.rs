use super::catalog::{Component, GradedSymbol};
use super::jet;
use crate::clifford::CliffElem;
use crate::error::{Error, Result};
use crate::ring::{GaussianRational as GQ, RatXi};

/// One summand `(1/alpha!) d_xi^alpha sigma_ra(a) D_x^alpha sigma_rb(b)`.
#[derive(Clone, Debug)]
pub struct CompositionTerm {
    pub left_order: i32,
    pub right_order: i32,
    /// Multi-index over the directions `xi_1, xi_2, xi_3, xi_n`.
    pub alpha: [u32; 4],
    pub elem: CliffElem,
    pub sphere_only: bool,
}

impl CompositionTerm {
    pub fn alpha_order(&self) -> u32 {
        self.alpha.iter().sum()
    }

    pub fn label(&self) -> String {
        if self.alpha_order() == 0 {
            return format!("s{}(a)*s{}(b)", self.left_order, self.right_order);
        }
        let dirs: Vec<String> = self
            .alpha
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(j, e)| if *e == 1 { format!("{}", j + 1) } else { format!("{}^{e}", j + 1) })
            .collect();
        let d = dirs.join(",");
        format!("dxi[{d}]s{}(a)*Dx[{d}]s{}(b)", self.left_order, self.right_order)
    }
}

/// Multi-indices of the given total order over four directions.
pub fn multi_indices(order: u32, dims: usize) -> Vec<Vec<u32>> {
    if dims == 0 {
        return if order == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=order).rev() {
        for mut rest in multi_indices(order - first, dims - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn apply_xi(mut e: CliffElem, alpha: &[u32; 4], sphere_only: bool) -> Result<CliffElem> {
    if sphere_only && alpha.iter().any(|&a| a > 0) {
        return Err(Error::JetDepth("covector derivative of a sphere-evaluated component".into()));
    }
    for (j, &a) in alpha.iter().enumerate() {
        for _ in 0..a {
            e = jet::d_xi(&e, j as u8 + 1);
        }
    }
    Ok(e)
}

fn apply_x(mut e: CliffElem, alpha: &[u32; 4], sphere_only: bool) -> Result<CliffElem> {
    if sphere_only && alpha.iter().any(|&a| a > 0) {
        return Err(Error::JetDepth("space derivative of a sphere-evaluated component".into()));
    }
    for (j, &a) in alpha.iter().enumerate() {
        for _ in 0..a {
            e = jet::d_x(&e, j as u8 + 1)?;
        }
    }
    Ok(e)
}

/// Summands of the order-`target` component of the symbol of `a o b`.
pub fn compose_terms(a: &GradedSymbol, b: &GradedSymbol, target: i32) -> Result<Vec<CompositionTerm>> {
    let mut out = Vec::new();
    let span = a.top() + b.top() - target;
    for m in 0..=span.max(-1) {
        for ra in (target + m - b.top())..=a.top() {
            let rb = target + m - ra;
            let ca: Component = a.component(ra)?;
            if ca.elem.is_zero() {
                continue;
            }
            for alpha in multi_indices(m as u32, 4) {
                let alpha: [u32; 4] = [alpha[0], alpha[1], alpha[2], alpha[3]];
                let left = apply_xi(ca.elem.clone(), &alpha, ca.sphere_only)?;
                if left.is_zero() {
                    continue;
                }
                let cb = b.component(rb)?;
                if cb.elem.is_zero() {
                    continue;
                }
                let right = apply_x(cb.elem.clone(), &alpha, cb.sphere_only)?;
                if right.is_zero() {
                    continue;
                }
                let denom: i64 = alpha.iter().map(|&k| factorial(k)).product();
                let pref = GQ::i_pow(-(m as i64)).scale(&num_rational::BigRational::new(1.into(), denom.into()));
                let elem = (&left * &right).mul_ratxi(&RatXi::constant(pref));
                out.push(CompositionTerm {
                    left_order: ra,
                    right_order: rb,
                    alpha,
                    elem,
                    sphere_only: ca.sphere_only || cb.sphere_only,
                });
            }
        }
    }
    Ok(out)
}

pub fn compose(a: &GradedSymbol, b: &GradedSymbol, target: i32) -> Result<CliffElem> {
    Ok(compose_terms(a, b, target)?.into_iter().fold(CliffElem::zero(), |acc, t| &acc + &t.elem))
}

/// Product symbol with components from the top order down to `lowest`.
pub fn compose_symbol(a: &GradedSymbol, b: &GradedSymbol, lowest: i32) -> Result<GradedSymbol> {
    let mut orders = std::collections::BTreeMap::new();
    for r in lowest..=(a.top() + b.top()) {
        let terms = compose_terms(a, b, r)?;
        let sphere_only = terms.iter().any(|t| t.sphere_only);
        let elem = terms.into_iter().fold(CliffElem::zero(), |acc, t| &acc + &t.elem);
        orders.insert(r, Component { elem, sphere_only });
    }
    Ok(GradedSymbol {
        name: format!("{} o {}", a.name, b.name),
        orders,
        complete: a.complete && b.complete,
    })
}
