//! Numeric evaluation of a boundary case: contour projection, line
//! quadrature in the normal covector and a sphere rule.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::calculus::{c, compose, trace_product, Graded, Piece, Sym, M4};
use super::model::{InverseSquare, Model, Params};
use super::quad::{integrate_line, sphere_rule};
use crate::boundary::{CaseSpec, OperatorType, Part};
use crate::error::Result;

/// Numerical settings of the oracle.
#[derive(Copy, Clone, Debug)]
pub struct Settings {
    pub inverse_square: InverseSquare,
    /// Gauss-Legendre nodes in the polar variable.
    pub polar: usize,
    pub azimuthal: usize,
    /// Nodes of the circle around `xi_n = i` used for the projection.
    pub contour: usize,
    pub line_tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { inverse_square: InverseSquare::Catalog, polar: 4, azimuthal: 8, contour: 64, line_tol: 1e-11 }
    }
}

const CONTOUR_RADIUS: f64 = 0.5;

fn inner_inverse(m: &Model, op: OperatorType, s: &Settings) -> Result<Graded> {
    match op {
        OperatorType::TypeI => m.dirac_inverse(),
        OperatorType::TypeII => m.dirac_inverse_square(s.inverse_square),
    }
}

fn second_operator(m: &Model, op: OperatorType, s: &Settings) -> Result<Graded> {
    match op {
        OperatorType::TypeI => m.dirac_inverse_square(s.inverse_square),
        OperatorType::TypeII => m.dirac_inverse(),
    }
}

/// Summands of the order-`r` symbol of the first operator.
pub fn first_pieces(m: &Model, op: OperatorType, part: Part, r: i32, s: &Settings) -> Result<Vec<Piece>> {
    let left = match part {
        Part::Phi => m.connection(),
        Part::PhiTilde => m.transport(),
    };
    compose(&left, &inner_inverse(m, op, s)?, r)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Value of one first-symbol summand in the case, as the coefficient of
/// `pi^2`. A non-zero tangential multi-index meets a tangential space
/// derivative of the second symbol, which vanishes in the model.
fn piece_value(spec: &CaseSpec, first: &Sym, second: &Sym, s: &Settings) -> Result<C64> {
    if spec.alpha > 0 {
        return Ok(c(0.0));
    }
    let f = first.d_xn_k(spec.j)?;
    let g = second.d_xn_k(spec.k)?.d_xi(3, spec.j + 1);
    let order = spec.j + spec.k + 1;
    let pref = C64::new(0.0, -1.0).powu(order) / factorial(order);
    let k = spec.k;
    let kfact = factorial(k) * if k % 2 == 1 { -1.0 } else { 1.0 };
    let n = s.contour;
    let nodes: Vec<C64> = (0..n).map(|q| C64::from_polar(CONTOUR_RADIUS, 2.0 * PI * q as f64 / n as f64)).collect();
    let mut total = c(0.0);
    for (p, weight) in sphere_rule(s.polar, s.azimuthal) {
        let at = |xn: C64| [c(p[0]), c(p[1]), c(p[2]), xn];
        let values: Vec<(C64, M4)> =
            nodes.iter().map(|d| (C64::new(0.0, 1.0) + d, f.eval(c(0.0), &at(C64::new(0.0, 1.0) + d)))).collect();
        let integrand = |xn: C64| {
            let gv = g.eval(c(0.0), &at(xn));
            let mut acc = c(0.0);
            for ((eta, fv), d) in values.iter().zip(&nodes) {
                let kernel = d * kfact / (n as f64 * (xn - eta).powu(k + 1));
                acc += kernel * trace_product(fv, &gv);
            }
            acc
        };
        total += integrate_line(&integrand, s.line_tol) * weight;
    }
    Ok(total * pref / (PI * PI))
}

/// Oracle value of a case, with its breakdown over first-symbol summands.
pub fn evaluate_case(spec: &CaseSpec, params: &Params, s: &Settings) -> Result<(C64, Vec<(String, C64)>)> {
    let m = Model::new(params.clone());
    let second = second_operator(&m, spec.operator, s)?.get(spec.l)?;
    let pieces = first_pieces(&m, spec.operator, spec.part, spec.r, s)?;
    let mut out = Vec::new();
    let mut total = c(0.0);
    for piece in pieces {
        let v = piece_value(spec, &piece.sym, &second, s)?;
        total += v;
        out.push((piece.label, v));
    }
    Ok((total, out))
}
