use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::cases::{CaseSpec, OperatorType, Part};
use crate::clifford::CliffElem;
use crate::error::{Error, Result};
use crate::residue::{integrate_sphere, integrate_xin_scalar, pi_plus};
use crate::ring::{GaussianRational as GQ, ParamPoly};
use crate::symbols::{self, catalog, compose_symbol, compose_terms, multi_indices, GradedSymbol};

/// Intermediate expression recorded for verbose output.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub stage: String,
    pub text: String,
}

/// Exact value of one case, as the coefficient of `pi^2`, with its
/// breakdown over the summands of the composed first symbol.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub spec: CaseSpec,
    pub value: ParamPoly,
    pub pieces: Vec<(String, ParamPoly)>,
}

fn left_factor(part: Part) -> Result<GradedSymbol> {
    catalog(match part {
        Part::Phi => "connection",
        Part::PhiTilde => "-2c(w)nabla_v",
    })
}

/// Inverse power composed on the right of the first operator.
pub fn inner_inverse(op: OperatorType) -> Result<GradedSymbol> {
    catalog(match op {
        OperatorType::TypeI => "D^-1",
        OperatorType::TypeII => "D^-2",
    })
}

/// The second operator of the pairing.
pub fn second_operator(op: OperatorType) -> Result<GradedSymbol> {
    catalog(match op {
        OperatorType::TypeI => "D^-2",
        OperatorType::TypeII => "D^-1",
    })
}

/// Full symbol of the first operator down to the order needed.
pub fn first_symbol(op: OperatorType, part: Part, lowest: i32) -> Result<GradedSymbol> {
    compose_symbol(&left_factor(part)?, &inner_inverse(op)?, lowest)
}

fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::from(1), |acc, k| acc * k)
}

struct Recorder<'a>(Option<&'a mut Vec<TraceStep>>);

impl Recorder<'_> {
    fn note(&mut self, stage: impl Into<String>, text: impl std::fmt::Display) {
        if let Some(log) = self.0.as_deref_mut() {
            log.push(TraceStep { stage: stage.into(), text: text.to_string() });
        }
    }
}

/// Runs one first-symbol summand through the boundary-term pipeline.
fn run_piece(spec: &CaseSpec, first: &CliffElem, second: &GradedSymbol, rec: &mut Recorder) -> Result<ParamPoly> {
    let mut total = ParamPoly::zero();
    let raw_second = second.component(spec.l)?;
    for alpha in multi_indices(spec.alpha, 3) {
        let mut f = first.clone();
        for (d, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                f = symbols::d_xiprime(&f, d as u8 + 1);
            }
        }
        for _ in 0..spec.j {
            f = symbols::d_xn(&f)?;
        }
        f = symbols::restrict(&f);
        rec.note(format!("alpha={alpha:?} first factor restricted"), &f);
        f = pi_plus(&f)?;
        f = symbols::d_xin(&f, spec.k);
        rec.note("projected first factor", &f);

        let mut g = raw_second.elem.clone();
        let moves_second = alpha.iter().any(|&a| a > 0) || spec.k > 0;
        if raw_second.sphere_only && moves_second {
            return Err(Error::JetDepth("space derivative of a sphere-evaluated component".into()));
        }
        for (d, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                g = symbols::d_xprime(&g, d as u8 + 1);
            }
        }
        for _ in 0..spec.k {
            g = symbols::d_xn(&g)?;
        }
        g = symbols::restrict(&g);
        g = symbols::d_xin(&g, spec.j + 1);
        rec.note("second factor", &g);

        let order = spec.alpha + spec.j + spec.k + 1;
        let alpha_fact: BigInt = alpha.iter().map(|&a| factorial(a)).product();
        let denom = alpha_fact * factorial(spec.j + spec.k + 1);
        let pref = GQ::i_pow(-(order as i64)).scale(&BigRational::new(BigInt::from(1), denom));
        let tr = (&f * &g).trace().scale(&pref);
        rec.note("trace", &tr);
        let line = integrate_xin_scalar(&tr)?;
        rec.note("normal integral / pi", &line.value);
        let sphere = integrate_sphere(&line.value)?;
        rec.note("sphere integral / pi^2", &sphere.value);
        total = &total + &sphere.value;
    }
    Ok(total)
}

fn piece_label(t: &symbols::CompositionTerm) -> String {
    if t.alpha_order() == 0 {
        format!("s{}*s{}", t.left_order, t.right_order)
    } else {
        format!("dxi s{}*Dx s{}", t.left_order, t.right_order)
    }
}

fn compute(spec: &CaseSpec, log: Option<&mut Vec<TraceStep>>) -> Result<CaseOutcome> {
    let mut rec = Recorder(log);
    let left = left_factor(spec.part)?;
    let inner = inner_inverse(spec.operator)?;
    let second = second_operator(spec.operator)?;
    let terms = compose_terms(&left, &inner, spec.r)?;
    let mut pieces: Vec<(String, ParamPoly)> = Vec::new();
    for t in &terms {
        if t.sphere_only && (spec.alpha > 0 || spec.j > 0) {
            return Err(Error::JetDepth("derivative of a sphere-evaluated component".into()));
        }
        let label = piece_label(t);
        rec.note(format!("summand {}", t.label()), &t.elem);
        let v = run_piece(spec, &t.elem, &second, &mut rec)?;
        match pieces.iter_mut().find(|(l, _)| *l == label) {
            Some((_, acc)) => *acc = &*acc + &v,
            None => pieces.push((label, v)),
        }
    }
    let value = pieces.iter().fold(ParamPoly::zero(), |acc, (_, v)| &acc + v);
    rec.note("case value / pi^2", &value);
    Ok(CaseOutcome { spec: spec.clone(), value, pieces })
}

fn in_case(spec: &CaseSpec) -> impl FnOnce(Error) -> Error + '_ {
    move |e| Error::InCase { case: format!("{} {}", spec.operator, spec.name), source: Box::new(e) }
}

pub fn compute_case(spec: &CaseSpec) -> Result<CaseOutcome> {
    compute(spec, None).map_err(in_case(spec))
}

pub fn compute_case_traced(spec: &CaseSpec) -> Result<(CaseOutcome, Vec<TraceStep>)> {
    let mut log = Vec::new();
    let out = compute(spec, Some(&mut log)).map_err(in_case(spec))?;
    Ok((out, log))
}

/// The first operator's symbol at order `r` restricted to the unit sphere,
/// for inspection.
pub fn restricted_first_component(op: OperatorType, part: Part, r: i32) -> Result<CliffElem> {
    let s = first_symbol(op, part, r)?;
    Ok(symbols::restrict(&s.get(r)?))
}
