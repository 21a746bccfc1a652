use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::{collect, convert, expand, Basis};
use super::cases::{enumerate_cases, find_case, CaseSpec, OperatorType, Part};
use super::pipeline::{compute_case, CaseOutcome};
use super::reference::Reference;
use crate::error::{Error, Result};
use crate::ring::{GaussianRational as GQ, Monomial, ParamPoly};

/// An exact boundary value: `terms * pi^pi_grade`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawResult", into = "RawResult")]
pub struct CaseResult {
    pub operator: OperatorType,
    pub case: String,
    pub basis: Basis,
    pub pi_grade: u32,
    pub terms: ParamPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub monomial: String,
    pub coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct RawResult {
    operator: OperatorType,
    case: String,
    basis: Basis,
    pi_grade: u32,
    terms: Vec<TermEntry>,
}

pub fn term_entries(p: &ParamPoly) -> Vec<TermEntry> {
    p.terms().map(|(m, c)| TermEntry { monomial: m.to_string(), coefficient: c.to_string() }).collect()
}

pub fn parse_entries(entries: &[TermEntry]) -> Result<ParamPoly> {
    let mut p = ParamPoly::zero();
    for e in entries {
        let c = GQ::parse(&e.coefficient).ok_or_else(|| Error::Parse(e.coefficient.clone()))?;
        p.add_term(Monomial::parse(&e.monomial)?, c);
    }
    Ok(p)
}

impl From<CaseResult> for RawResult {
    fn from(r: CaseResult) -> Self {
        RawResult { operator: r.operator, case: r.case, basis: r.basis, pi_grade: r.pi_grade, terms: term_entries(&r.terms) }
    }
}

impl TryFrom<RawResult> for CaseResult {
    type Error = Error;
    fn try_from(r: RawResult) -> Result<Self> {
        Ok(CaseResult { operator: r.operator, case: r.case, basis: r.basis, pi_grade: r.pi_grade, terms: parse_entries(&r.terms)? })
    }
}

impl CaseResult {
    pub fn primitive(operator: OperatorType, case: impl Into<String>, terms: ParamPoly) -> Self {
        CaseResult { operator, case: case.into(), basis: Basis::Primitive, pi_grade: 2, terms }
    }

    pub fn from_reference(r: &Reference) -> Self {
        CaseResult { operator: r.operator, case: r.id.to_string(), basis: r.basis, pi_grade: 2, terms: r.terms.clone() }
    }

    /// The same value written in another basis.
    pub fn in_basis(&self, basis: Basis) -> Self {
        let terms = convert(&expand(&self.terms), basis);
        CaseResult { basis, terms, ..self.clone() }
    }

    pub fn primitive_terms(&self) -> ParamPoly {
        expand(&self.terms)
    }
}

/// One monomial on which two results disagree, in the collected basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub monomial: String,
    pub engine: String,
    pub reference: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub entries: Vec<DiffEntry>,
}

impl Diff {
    pub fn is_match(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Exact monomial-by-monomial comparison. Both sides are expanded to
/// primitive parameters and collected again so that basis choice cannot
/// hide or create a difference.
pub fn reconcile(engine: &CaseResult, reference: &CaseResult) -> Diff {
    let a = collect(&engine.primitive_terms());
    let b = collect(&reference.primitive_terms());
    let monomials: BTreeSet<&Monomial> = a.terms().chain(b.terms()).map(|(m, _)| m).collect();
    let mut entries = Vec::new();
    for m in monomials {
        let (x, y) = (a.coefficient(m), b.coefficient(m));
        if x != y {
            entries.push(DiffEntry { monomial: m.to_string(), engine: x.to_string(), reference: y.to_string() });
        }
    }
    if engine.pi_grade != reference.pi_grade {
        entries.push(DiffEntry {
            monomial: "pi grade".into(),
            engine: engine.pi_grade.to_string(),
            reference: reference.pi_grade.to_string(),
        });
    }
    Diff { entries }
}

/// Evaluates the given cases concurrently; the output keeps the input order.
pub fn compute_cases(specs: &[CaseSpec]) -> Result<Vec<CaseOutcome>> {
    specs.par_iter().map(compute_case).collect()
}

pub fn outcome_result(o: &CaseOutcome) -> CaseResult {
    CaseResult::primitive(o.spec.operator, o.spec.name.clone(), o.value.clone())
}

/// Connection-term case.
pub fn compute_phi_star(op: OperatorType) -> Result<CaseResult> {
    let spec = find_case(op, op.phi_name())?;
    Ok(outcome_result(&compute_case(&spec)?))
}

/// Sum of the five cases of the `nabla_v` part.
pub fn total_phi_tilde(op: OperatorType) -> Result<CaseResult> {
    let specs: Vec<CaseSpec> = enumerate_cases(op).into_iter().filter(|c| c.part == Part::PhiTilde).collect();
    let total = compute_cases(&specs)?.iter().fold(ParamPoly::zero(), |acc, o| &acc + &o.value);
    Ok(CaseResult::primitive(op, "total", total))
}
