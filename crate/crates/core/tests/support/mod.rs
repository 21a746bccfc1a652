//! Strategies and property checks shared by the property suite and the
//! acceptance run.
#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use wres_core::clifford::{CliffElem, Word};
use wres_core::oracle::integrate_line;
use wres_core::residue::{integrate_xin_scalar, pi_plus, split};
use wres_core::ring::{GaussianRational as GQ, Monomial, ParamPoly, RatXi, Var};
use wres_core::symbols::{d_xin, d_xiprime, d_xn};

pub const TRIALS: u32 = 200;

pub fn gq() -> impl Strategy<Value = GQ> {
    (-6i64..=6, 1i64..=5, -6i64..=6, 1i64..=5)
        .prop_map(|(a, b, c, d)| &GQ::frac(a, b) + &(&GQ::frac(c, d) * &GQ::i()))
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![
        Just(Var::Hp),
        (1u8..=4).prop_map(Var::V),
        (1u8..=4).prop_map(Var::W),
        (1u8..=3).prop_map(Var::Xi),
        Just(Var::Xn),
    ]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 1u32..=2), 0..3).prop_map(Monomial::from_pairs)
}

pub fn poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((monomial(), gq()), 0..4).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

/// Fields without the metric jet, so one normal derivative stays first order.
fn field_var() -> impl Strategy<Value = Var> {
    prop_oneof![(1u8..=4).prop_map(Var::V), (1u8..=4).prop_map(Var::W), (1u8..=3).prop_map(Var::Xi), Just(Var::Xn), Just(Var::L), Just(Var::S)]
}

fn field_poly() -> impl Strategy<Value = ParamPoly> {
    let m = prop::collection::vec((field_var(), 1u32..=2), 0..3).prop_map(Monomial::from_pairs);
    prop::collection::vec((m, gq()), 0..4).prop_map(|terms| {
        let mut p = ParamPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

/// Rational function of `xin` with poles at `i`, `-i` and on the norm.
pub fn ratxi() -> impl Strategy<Value = RatXi> {
    (poly(), 0u32..=3, 0u32..=3).prop_map(|(p, a, b)| RatXi::new(p, a, b, 0))
}

fn field_ratxi() -> impl Strategy<Value = RatXi> {
    (field_poly(), 0u32..=2, 0u32..=2, 0u32..=1).prop_map(|(p, a, b, n)| RatXi::new(p, a, b, n))
}

fn elem_with<S: Strategy<Value = RatXi>>(coeff: S) -> impl Strategy<Value = CliffElem> {
    prop::collection::vec((0u8..16, coeff), 0..4).prop_map(|terms| {
        let mut e = CliffElem::zero();
        for (bits, c) in terms {
            e.add_term(Word::from_bits(bits), c);
        }
        e
    })
}

pub fn elem() -> impl Strategy<Value = CliffElem> {
    elem_with(gq().prop_map(RatXi::constant))
}

/// Restricted element with rational dependence on `xin`.
pub fn restricted_elem() -> impl Strategy<Value = CliffElem> {
    elem_with(ratxi())
}

fn ensure(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn ring_axioms((a, b, c): (ParamPoly, ParamPoly, ParamPoly)) -> Result<(), TestCaseError> {
    ensure(&a + &b == &b + &a, "addition commutes")?;
    ensure(&a * &b == &b * &a, "multiplication commutes")?;
    ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition associates")?;
    ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication associates")?;
    ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributes")?;
    ensure((&a + &(-a.clone())).is_empty(), "additive inverse")?;
    ensure(&a * &ParamPoly::one() == a, "unit")
}

pub fn field_axioms((x, y): (GQ, GQ)) -> Result<(), TestCaseError> {
    ensure(&x * &y == &y * &x, "commutes")?;
    if x != GQ::int(0) {
        let inv = x.inv().map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(&x * &inv == GQ::int(1), "inverse")?;
        let q = y.checked_div(&x).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(&q * &x == y, "division")?;
    }
    Ok(())
}

pub fn clifford_associativity((a, b, c): (CliffElem, CliffElem, CliffElem)) -> Result<(), TestCaseError> {
    ensure(&(&a * &b) * &c == &a * &(&b * &c), "associativity")
}

pub fn trace_cyclicity((a, b): (CliffElem, CliffElem)) -> Result<(), TestCaseError> {
    ensure((&a * &b).trace() == (&b * &a).trace(), "tr(ab) = tr(ba)")
}

pub fn vector_square(u: [GQ; 4]) -> Result<(), TestCaseError> {
    let v = CliffElem::vector(u.clone().map(ParamPoly::constant));
    let norm = u.iter().fold(GQ::int(0), |acc, x| &acc + &(x * x));
    ensure(&v * &v == CliffElem::scalar(RatXi::constant(-norm)), "c(u)^2 = -|u|^2")
}

pub fn projection_idempotent(f: CliffElem) -> Result<(), TestCaseError> {
    let p = pi_plus(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let pp = pi_plus(&p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    ensure(pp == p, "pi+ is idempotent")
}

pub fn projection_complement(f: CliffElem) -> Result<(), TestCaseError> {
    let s = split(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    ensure(&(&s.plus + &s.minus) + &s.poly == f, "plus + minus + polynomial = f")
}

pub fn derivative_commutation((f, j, k): (CliffElem, u8, u8)) -> Result<(), TestCaseError> {
    ensure(d_xiprime(&d_xiprime(&f, j), k) == d_xiprime(&d_xiprime(&f, k), j), "covector derivatives commute")?;
    ensure(d_xin(&d_xiprime(&f, j), 1) == d_xiprime(&d_xin(&f, 1), j), "normal and tangential covector")?;
    let a = d_xn(&d_xin(&f, 1)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let b = d_xin(&d_xn(&f).map_err(|e| TestCaseError::fail(e.to_string()))?, 1);
    ensure(a == b, "space and covector derivatives commute")
}

pub fn field_elem() -> impl Strategy<Value = CliffElem> {
    elem_with(field_ratxi())
}

/// Scalar integrand with constant coefficients decaying at least like
/// `xin^-3`, so the truncated quadrature tail stays below the tolerance.
pub fn decaying() -> impl Strategy<Value = RatXi> {
    (1u32..=3, 0u32..=3, prop::collection::vec(gq(), 1..4)).prop_filter_map("needs decay", |(a, b, cs)| {
        let top = (a + b).checked_sub(3)? as usize;
        let mut p = ParamPoly::zero();
        for (k, c) in cs.into_iter().take(top + 1).enumerate() {
            p.add_term(Monomial::pow(Var::Xn, k as u32), c);
        }
        Some(RatXi::new(p, a, b, 0))
    })
}

pub fn line_integral_matches_quadrature(f: RatXi) -> Result<(), TestCaseError> {
    let exact = integrate_xin_scalar(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let value = exact.value.as_constant().unwrap_or_else(|| GQ::int(0)).to_complex() * std::f64::consts::PI;
    let numeric = integrate_line(&|x: Complex64| f.eval_complex(&|_| x), 1e-12);
    let scale = value.norm().max(numeric.norm()).max(1.0);
    ensure((value - numeric).norm() <= 1e-8 * scale, "residue integral against quadrature")
}

/// Runs one check with the given number of trials and reports the failure.
pub fn run<S: Strategy>(strategy: S, trials: u32, check: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases: trials, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, check).map_err(|e| e.to_string())
}
