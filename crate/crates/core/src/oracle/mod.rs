//! Independent floating-point pipeline: explicit gamma matrices, contour
//! projection and adaptive quadrature. Used to arbitrate exact results.

mod calculus;
mod case;
mod model;
mod quad;
pub mod traces;

pub use calculus::{gammas, trace, Graded, Sym, Xi, M4};
pub use case::{evaluate_case, Settings};
pub use model::{primitive_vars, InverseSquare, Model, Params, Sample};
pub use quad::{gauss_legendre, integrate, integrate_line, sphere_rule, LINE_CUTOFF};

use std::collections::HashMap;
use std::sync::Mutex;

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{enumerate_cases, CaseSpec, OperatorType, Part};
use crate::error::Result;
use crate::ring::ParamPoly;

/// Relative agreement used by the arbitration.
pub const TOLERANCE: f64 = 1e-6;

pub fn agrees(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// Reproducible sample points.
pub fn samples(count: usize, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| Sample::random(&mut rng)).collect()
}

/// Exact polynomial evaluated at a sample, in floating point.
pub fn evaluate_exact(p: &ParamPoly, s: &Sample) -> C64 {
    p.eval_exact(&|v| s.value(v)).to_complex()
}

/// Cases summed into a named target: a case name, `total` (the `nabla_v`
/// part) or `boundary` (every case).
pub fn target_cases(op: OperatorType, target: &str) -> Vec<CaseSpec> {
    enumerate_cases(op)
        .into_iter()
        .filter(|c| match target {
            "total" => c.part == Part::PhiTilde,
            "boundary" => true,
            name => c.name == name,
        })
        .collect()
}

fn split_target(target: &str) -> (&str, Option<&str>) {
    match target.split_once('/') {
        Some((h, "geometric")) => (h, None),
        Some((h, l)) => (h, Some(l)),
        None => (target, None),
    }
}

/// Oracle value of a target, as the coefficient of `pi^2`. A suffix
/// `/label` selects one first-symbol summand; `/geometric` is ignored.
pub fn evaluate_target(op: OperatorType, target: &str, p: &Params, s: &Settings) -> Result<C64> {
    let (head, label) = split_target(target);
    let mut total = C64::new(0.0, 0.0);
    for spec in target_cases(op, head) {
        let (value, pieces) = evaluate_case(&spec, p, s)?;
        total += match label {
            None => value,
            Some(l) => pieces.iter().filter(|(x, _)| x == l).map(|(_, v)| v).sum(),
        };
    }
    Ok(total)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Only the engine value agrees with the oracle.
    Engine,
    /// Only the reference value agrees with the oracle.
    Reference,
    /// Both agree at every sample; the difference is numerically invisible.
    Both,
    Neither,
}

/// Values at one sample point.
#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub engine: f64,
    pub reference: f64,
    pub oracle: f64,
    /// Largest imaginary part among the three values.
    pub imaginary: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Arbitration {
    pub target: String,
    pub inverse_square: InverseSquare,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

type CaseValues = (C64, Vec<(String, C64)>);

/// Seeded sample points with a cache of case values, so that totals and
/// pieces reuse the case evaluations.
pub struct Oracle {
    pub settings: Settings,
    pub points: Vec<Sample>,
    cache: Mutex<HashMap<(OperatorType, String, usize), CaseValues>>,
}

impl Oracle {
    pub fn new(settings: Settings, count: usize, seed: u64) -> Self {
        Oracle { settings, points: samples(count, seed), cache: Mutex::new(HashMap::new()) }
    }

    fn case(&self, spec: &CaseSpec, i: usize) -> Result<CaseValues> {
        let key = (spec.operator, spec.name.clone(), i);
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = evaluate_case(spec, &self.points[i].params(), &self.settings)?;
        self.cache.lock().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }

    /// Oracle value of a target at sample `i`; see [`evaluate_target`].
    pub fn target(&self, op: OperatorType, target: &str, i: usize) -> Result<C64> {
        let (head, label) = split_target(target);
        let mut total = C64::new(0.0, 0.0);
        for spec in target_cases(op, head) {
            let (value, pieces) = self.case(&spec, i)?;
            total += match label {
                None => value,
                Some(l) => pieces.iter().filter(|(x, _)| x == l).map(|(_, v)| v).sum(),
            };
        }
        Ok(total)
    }

    /// Compares two exact polynomials in primitive parameters against the
    /// oracle at every sample point.
    pub fn arbitrate(&self, op: OperatorType, target: &str, engine: &ParamPoly, reference: &ParamPoly) -> Result<Arbitration> {
        let values: Vec<C64> =
            (0..self.points.len()).into_par_iter().map(|i| self.target(op, target, i)).collect::<Result<_>>()?;
        let mut evidence = Vec::new();
        let (mut engine_ok, mut reference_ok) = (true, true);
        for (s, o) in self.points.iter().zip(values) {
            let e = evaluate_exact(engine, s);
            let r = evaluate_exact(reference, s);
            engine_ok &= agrees(e, o, TOLERANCE);
            reference_ok &= agrees(r, o, TOLERANCE);
            let imaginary = e.im.abs().max(r.im.abs()).max(o.im.abs());
            evidence.push(Evidence { engine: e.re, reference: r.re, oracle: o.re, imaginary });
        }
        let verdict = match (engine_ok, reference_ok) {
            (true, true) => Verdict::Both,
            (true, false) => Verdict::Engine,
            (false, true) => Verdict::Reference,
            (false, false) => Verdict::Neither,
        };
        Ok(Arbitration { target: target.to_string(), inverse_square: self.settings.inverse_square, verdict, evidence })
    }
}
