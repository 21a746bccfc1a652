//! Numeric traces of the Clifford identities behind the connection terms,
//! and matrix images of exact Clifford elements.

use num_complex::Complex64 as C64;

use super::calculus::{c, cauchy_derivative, gammas, trace, M4};
use super::model::{Model, Params};
use super::quad::sphere_rule;
use crate::clifford::CliffElem;
use crate::ring::Var;

fn vector(coeffs: [f64; 4]) -> M4 {
    let g = gammas();
    (0..4).fold(M4::zeros(), |acc, k| acc + g[k] * c(coeffs[k]))
}

/// `Tr( c(w) sum_j c(e_j) c(nabla_{e_j} v) c(dx_n) )`.
pub fn connection_trace(p: &Params) -> C64 {
    let g = gammas();
    let sum = (0..4).fold(M4::zeros(), |acc, j| acc + g[j] * vector(p.a[j]));
    trace(&(vector(p.w) * sum * g[3]))
}

/// `sum_{k<4} Tr( c(w) c(xi') c(e_k) c(dx_n) )`.
pub fn frame_trace_sum(p: &Params, xi: [f64; 3]) -> C64 {
    let g = gammas();
    let cxi = vector([xi[0], xi[1], xi[2], 0.0]);
    (0..3).map(|k| trace(&(vector(p.w) * cxi * g[k] * g[3]))).sum()
}

/// `Tr( c(w) A(v) c(dx_n) )` for arbitrary, not necessarily antisymmetric,
/// coefficients `om`.
pub fn spin_connection_trace(w: [f64; 4], om: &[[f64; 4]; 4]) -> C64 {
    let g = gammas();
    let mut a = M4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            a += g[i] * g[j] * c(0.25 * om[i][j]);
        }
    }
    trace(&(vector(w) * a * g[3]))
}

/// `int_{|xi'|=1} sum_j xi_j d/dx_n Tr(v_j c(w) c(xi'))`, divided by `pi`,
/// from the collar model with contour derivatives and the sphere rule.
pub fn pairing_integral(p: &Params) -> f64 {
    let m = Model::new(p.clone());
    let (v, dv) = (p.v, p.dv);
    let rule = sphere_rule(4, 8);
    let mut total = 0.0;
    for (x, weight) in rule {
        let xi = [c(x[0]), c(x[1]), c(x[2]), c(0.0)];
        let f = |z: C64| {
            let prod = m.c_w().eval(z, &xi) * m.c_xi().eval(z, &xi);
            let tr = trace(&prod);
            (0..3).map(|j| (c(v[j]) + z * dv[j]) * xi[j] * tr).sum::<C64>()
        };
        total += cauchy_derivative(f, c(0.0), 1, 0.01).re * weight;
    }
    total / std::f64::consts::PI
}

/// Image of an exact element under the gamma representation, each
/// coefficient evaluated at the given parameter values.
pub fn clifford_matrix<F: Fn(Var) -> C64>(e: &CliffElem, value: &F) -> M4 {
    let g = gammas();
    let mut out = M4::zeros();
    for (w, coeff) in e.terms() {
        let word = w.indices().iter().fold(M4::identity(), |acc, &j| acc * g[j as usize - 1]);
        out += word * coeff.eval_complex(value);
    }
    out
}
