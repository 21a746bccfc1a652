//! Conversion between primitive parameters and the geometric report basis.
//!
//! Primitive results are polynomials in `h'`, the components of `v`, `w`,
//! their normal derivatives, `A_jk` and `Omega_ij`. The collected basis uses
//! `G = sum_{j<4} v_j w_j`, `DG = d/dx_n G` with
//! `sum_{j<4} d(v_j w_j) = h'/2 G + DG`, `D(v4w4)`, the connection trace `E`
//! and `OmW = sum_{i<4} Omega_i4 w_i`; the geometric basis further
//! replaces `h'` by `-2/3 K`.

use serde::{Deserialize, Serialize};

use crate::ring::{GaussianRational as GQ, Monomial, ParamPoly, Var};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Primitive,
    Collected,
    Geometric,
}

fn var(v: Var) -> ParamPoly {
    ParamPoly::var(v)
}

fn prod(a: Var, b: Var) -> ParamPoly {
    &var(a) * &var(b)
}

/// `sum_j A_jj w_4 - sum_k w_k A_4k + sum_j w_j A_j4`.
pub fn connection_trace_poly() -> ParamPoly {
    let mut p = ParamPoly::zero();
    for j in 1..=4 {
        p = &p + &prod(Var::W(4), Var::A(j, j));
        p = &p - &prod(Var::W(j), Var::A(4, j));
        p = &p + &prod(Var::W(j), Var::A(j, 4));
    }
    p
}

pub fn spin_trace_poly() -> ParamPoly {
    (1..=3).fold(ParamPoly::zero(), |acc, i| &acc + &prod(Var::W(i), Var::Om(i, 4)))
}

fn tangential_pairing() -> ParamPoly {
    (1..=3).fold(ParamPoly::zero(), |acc, j| &acc + &prod(Var::V(j), Var::W(j)))
}

fn tangential_derivative_pairing() -> ParamPoly {
    (1..=3).fold(ParamPoly::zero(), |acc, j| {
        &(&acc + &prod(Var::Dv(j), Var::W(j))) + &prod(Var::V(j), Var::Dw(j))
    })
}

fn normal_derivative_pairing() -> ParamPoly {
    &prod(Var::Dv(4), Var::W(4)) + &prod(Var::V(4), Var::Dw(4))
}

fn is_connection(m: &Monomial) -> bool {
    m.factors().iter().any(|(v, _)| matches!(v, Var::A(..)))
}

fn is_spin(m: &Monomial) -> bool {
    m.factors().iter().any(|(v, _)| matches!(v, Var::Om(..)))
}

/// If `part` is `c * template`, returns `c`.
fn proportional(part: &ParamPoly, template: &ParamPoly) -> Option<GQ> {
    let (m, t) = template.terms().next()?;
    let c = part.coefficient(m).checked_div(t).ok()?;
    (part == &template.scale(&c)).then_some(c)
}

/// Takes out `c * template` from `rest` when `rest` restricted to the
/// template's monomials is proportional to it.
fn extract(rest: &mut ParamPoly, template: &ParamPoly) -> Option<GQ> {
    let mut part = ParamPoly::zero();
    for (m, _) in template.terms() {
        part.add_term(m.clone(), rest.coefficient(m));
    }
    if part.is_empty() {
        return None;
    }
    let c = proportional(&part, template)?;
    *rest = &*rest - &part;
    Some(c)
}

/// Primitive polynomial to the collected basis. Anything that does not fit
/// the geometric pattern is kept as primitive residual monomials.
pub fn collect(p: &ParamPoly) -> ParamPoly {
    let mut rest = p.clone();
    let mut out = ParamPoly::zero();

    let mut conn = ParamPoly::zero();
    let mut spin = ParamPoly::zero();
    for (m, c) in p.terms() {
        if is_connection(m) {
            conn.add_term(m.clone(), c.clone());
        } else if is_spin(m) {
            spin.add_term(m.clone(), c.clone());
        }
    }
    if let Some(c) = proportional(&conn, &connection_trace_poly()) {
        rest = &rest - &conn;
        out = &out + &var(Var::E).scale(&c);
    }
    if let Some(c) = proportional(&spin, &spin_trace_poly()) {
        rest = &rest - &spin;
        out = &out + &var(Var::OmW).scale(&c);
    }

    let hp = var(Var::Hp);
    if let Some(c) = extract(&mut rest, &tangential_derivative_pairing()) {
        out = &out + &(&hp * &var(Var::G)).scale(&(&c * &GQ::frac(1, 2)));
        out = &out + &var(Var::DG).scale(&c);
    }
    if let Some(c) = extract(&mut rest, &(&hp * &tangential_pairing())) {
        out = &out + &(&hp * &var(Var::G)).scale(&c);
    }
    if let Some(c) = extract(&mut rest, &normal_derivative_pairing()) {
        out = &out + &var(Var::DVnWn).scale(&c);
    }
    &out + &rest
}

/// Collected basis to geometric basis: `h' = -2/3 K`.
pub fn geometric(p: &ParamPoly) -> ParamPoly {
    p.substitute(Var::Hp, &var(Var::K).scale(&GQ::frac(-2, 3)))
}

/// Any basis back to primitive parameters.
pub fn expand(p: &ParamPoly) -> ParamPoly {
    let hp = var(Var::Hp);
    let g = tangential_pairing();
    let dg = &tangential_derivative_pairing() - &(&hp * &g).scale(&GQ::frac(1, 2));
    p.substitute(Var::K, &hp.scale(&GQ::frac(-3, 2)))
        .substitute(Var::G, &g)
        .substitute(Var::DG, &dg)
        .substitute(Var::DVnWn, &normal_derivative_pairing())
        .substitute(Var::E, &connection_trace_poly())
        .substitute(Var::OmW, &spin_trace_poly())
}

pub fn convert(p: &ParamPoly, basis: Basis) -> ParamPoly {
    match basis {
        Basis::Primitive => p.clone(),
        Basis::Collected => collect(p),
        Basis::Geometric => geometric(&collect(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collection_round_trips() {
        let hp = var(Var::Hp);
        let p = &(&(&tangential_derivative_pairing().scale(&GQ::frac(-2, 3)) + &(&hp * &tangential_pairing()).scale(&GQ::frac(1, 2)))
            + &normal_derivative_pairing().scale(&GQ::int(2)))
            + &(&hp * &prod(Var::V(4), Var::W(4))).scale(&GQ::frac(-1, 2));
        let c = collect(&p);
        let expect = &(&(&var(Var::DG).scale(&GQ::frac(-2, 3)) + &(&hp * &var(Var::G)).scale(&GQ::frac(1, 6)))
            + &var(Var::DVnWn).scale(&GQ::int(2)))
            + &(&hp * &prod(Var::V(4), Var::W(4))).scale(&GQ::frac(-1, 2));
        assert_eq!(c, expect);
        assert_eq!(expand(&c), p);
        assert_eq!(expand(&geometric(&c)), p);
    }

    #[test]
    fn unmatched_terms_stay_primitive() {
        let p = prod(Var::V(1), Var::W(2));
        assert_eq!(collect(&p), p);
        let q = &(&var(Var::Hp) * &prod(Var::V(1), Var::W(1))).scale(&GQ::int(2)) + &(&var(Var::Hp) * &prod(Var::V(2), Var::W(2)));
        assert_eq!(expand(&collect(&q)), q);
    }

    #[test]
    fn connection_terms_collect() {
        let p = connection_trace_poly().scale(&GQ::int(-2));
        assert_eq!(collect(&p), var(Var::E).scale(&GQ::int(-2)));
        let q = spin_trace_poly().scale(&GQ::int(2));
        assert_eq!(collect(&q), var(Var::OmW).scale(&GQ::int(2)));
    }
}
