//! Closed-form trace identities used by the residue computations.

use super::elem::{c_w, CliffElem};
use crate::ring::{GaussianRational as GQ, ParamPoly, RatXi, Var};

fn var(v: Var) -> ParamPoly {
    ParamPoly::var(v)
}

fn poly_trace(e: &CliffElem) -> ParamPoly {
    let t = e.trace();
    debug_assert!(t.is_polynomial());
    t.numerator().clone()
}

/// `c(nabla_{e_j} v)` with `nabla_{e_j} v = sum_k A_jk e_k`.
pub fn c_nabla(j: u8) -> CliffElem {
    CliffElem::vector([1, 2, 3, 4].map(|k| var(Var::A(j, k))))
}

/// `sum_j c(e_j) c(nabla_{e_j} v)`, the zeroth-order symbol of the
/// connection prefix multiplied on the left by `c(w)` elsewhere.
pub fn frame_connection_sum() -> CliffElem {
    (1..=4).fold(CliffElem::zero(), |acc, j| &acc + &(&CliffElem::generator(j) * &c_nabla(j)))
}

/// `Tr( sum_j c(w) c(e_j) c(nabla_{e_j} v) c(dx_n) )`, expanded.
pub fn connection_trace() -> ParamPoly {
    let e = &(&c_w() * &frame_connection_sum()) * &CliffElem::generator(4);
    poly_trace(&e)
}

/// `4 (sum_j A_jj w_4 - sum_k w_k A_4k + sum_j w_j A_j4)`.
pub fn connection_trace_closed_form() -> ParamPoly {
    let mut p = ParamPoly::zero();
    for j in 1..=4 {
        p = &p + &(&var(Var::A(j, j)) * &var(Var::W(4)));
        p = &p - &(&var(Var::W(j)) * &var(Var::A(4, j)));
        p = &p + &(&var(Var::W(j)) * &var(Var::A(j, 4)));
    }
    p.scale(&GQ::int(4))
}

/// `sum_{k<4} Tr( c(w) c(xi') c(e_k) c(dx_n) )` with the unscaled `c(xi')`.
pub fn frame_trace_sum() -> ParamPoly {
    let cxi = CliffElem::vector([
        var(Var::Xi(1)),
        var(Var::Xi(2)),
        var(Var::Xi(3)),
        ParamPoly::zero(),
    ]);
    let lead = &c_w() * &cxi;
    (1..=3).fold(ParamPoly::zero(), |acc, k| {
        let e = &(&lead * &CliffElem::generator(k)) * &CliffElem::generator(4);
        &acc + &poly_trace(&e)
    })
}

/// `4 w_4 (xi_1 + xi_2 + xi_3)`.
pub fn frame_trace_sum_closed_form() -> ParamPoly {
    let s = &(&var(Var::Xi(1)) + &var(Var::Xi(2))) + &var(Var::Xi(3));
    (&s * &var(Var::W(4))).scale(&GQ::int(4))
}

/// Connection coefficients `Omega_ij` with `Omega_ji = -Omega_ij`.
pub fn antisymmetric_omega() -> [[ParamPoly; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (i, j) = (i as u8 + 1, j as u8 + 1);
            match i.cmp(&j) {
                std::cmp::Ordering::Less => var(Var::Om(i, j)),
                std::cmp::Ordering::Greater => -var(Var::Om(j, i)),
                std::cmp::Ordering::Equal => ParamPoly::zero(),
            }
        })
    })
}

/// `A(v) = 1/4 sum_{ij} Omega_ij c(e_i) c(e_j)`.
pub fn spin_connection(omega: &[[ParamPoly; 4]; 4]) -> CliffElem {
    let quarter = RatXi::constant(GQ::frac(1, 4));
    let mut a = CliffElem::zero();
    for i in 0..4 {
        for j in 0..4 {
            let w = &CliffElem::generator(i as u8 + 1) * &CliffElem::generator(j as u8 + 1);
            a = &a + &w.mul_ratxi(&(&quarter * &RatXi::from_poly(omega[i][j].clone())));
        }
    }
    a
}

/// `Tr( c(w) A(v) c(dx_n) )`.
pub fn spin_connection_trace(omega: &[[ParamPoly; 4]; 4]) -> ParamPoly {
    let e = &(&c_w() * &spin_connection(omega)) * &CliffElem::generator(4);
    poly_trace(&e)
}

/// Closed form of the antisymmetric case: `2 sum_{i<4} Omega_i4 w_i`.
pub fn spin_connection_trace_closed_form() -> ParamPoly {
    (1..=3)
        .fold(ParamPoly::zero(), |acc, i| &acc + &(&var(Var::Om(i, 4)) * &var(Var::W(i))))
        .scale(&GQ::int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connection_trace_matches_closed_form() {
        assert_eq!(connection_trace(), connection_trace_closed_form());
    }

    #[test]
    fn frame_trace_matches_closed_form() {
        assert_eq!(frame_trace_sum(), frame_trace_sum_closed_form());
    }

    #[test]
    fn spin_connection_trace_closed_form_holds() {
        assert_eq!(spin_connection_trace(&antisymmetric_omega()), spin_connection_trace_closed_form());
    }

    #[test]
    fn zero_connection_has_zero_trace() {
        let zero: [[ParamPoly; 4]; 4] = Default::default();
        assert!(spin_connection_trace(&zero).is_empty());
    }
}
