//! Run configuration, reconciliation sections, theorem blocks and the
//! interior coefficient, rendered as JSON or markdown.

mod render;

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::boundary::{
    compute_case, compute_case_traced, enumerate_cases, outcome_result, reconcile, reference, term_entries,
    Basis, CaseOutcome, CaseResult, DiffEntry, OperatorType, Part, TermEntry, TraceStep,
};
use crate::error::{Error, Result};
use crate::oracle::{Arbitration, Oracle, Settings, Verdict};
use crate::residue::PiScaled;
use crate::ring::ParamPoly;

pub use render::markdown;

/// `(2 pi^m / Gamma(m)) 2^m / 6` with `m = n/2`, the coefficient of the
/// Einstein tensor in the residue functional.
pub fn einstein_coefficient(n: u32) -> Result<PiScaled<BigRational>> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n < 2 {
        return Err(Error::LowDimension(n));
    }
    let m = n / 2;
    let gamma: BigInt = (1..m).fold(BigInt::from(1), |acc, k| acc * k);
    let value = BigRational::new(BigInt::from(2) * (BigInt::from(1) << m as usize), gamma * 6);
    Ok(PiScaled { value, pi: m })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OperatorChoice {
    Type1,
    Type2,
    Both,
}

impl OperatorChoice {
    pub fn operators(self) -> Vec<OperatorType> {
        match self {
            OperatorChoice::Type1 => vec![OperatorType::TypeI],
            OperatorChoice::Type2 => vec![OperatorType::TypeII],
            OperatorChoice::Both => OperatorType::ALL.to_vec(),
        }
    }
}

impl FromStr for OperatorChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type1" => Ok(OperatorChoice::Type1),
            "type2" => Ok(OperatorChoice::Type2),
            "both" => Ok(OperatorChoice::Both),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// Polynomials in the primitive jet parameters.
    Primitive,
    /// Pairings collected into `G`, `DG`, `D(v4w4)` and `h'` replaced by `K`.
    Geometric,
}

impl Substitution {
    pub fn basis(self) -> Basis {
        match self {
            Substitution::Primitive => Basis::Primitive,
            Substitution::Geometric => Basis::Geometric,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    Arbitrate,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub operator: OperatorChoice,
    pub case: Option<String>,
    pub substitution: Substitution,
    pub format: Format,
    pub oracle: OracleMode,
    pub verbose: bool,
    /// Sample points per arbitration.
    pub samples: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            operator: OperatorChoice::Both,
            case: None,
            substitution: Substitution::Geometric,
            format: Format::Markdown,
            oracle: OracleMode::Off,
            verbose: false,
            samples: 20,
            seed: 2024,
        }
    }
}

/// One reconciliation of an engine value against a stored value.
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub operator: OperatorType,
    pub case: String,
    pub basis: Basis,
    pub pi_grade: u32,
    pub terms: Vec<TermEntry>,
    pub reference: Vec<TermEntry>,
    pub paper_match: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<DiffEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Arbitration>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<Section>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
}

impl Section {
    /// Exact match, or a mismatch the oracle settles for the engine, here
    /// and in every nested piece.
    pub fn accepted(&self) -> bool {
        let own = self.paper_match || matches!(&self.oracle, Some(a) if a.verdict == Verdict::Engine);
        own && self.pieces.iter().all(Section::accepted)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialVerdict {
    pub monomial: String,
    pub engine: String,
    pub stored: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Interior {
    pub coefficient: String,
    pub pi_grade: u32,
    /// Opaque token for the interior integrand.
    pub integrand: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub operator: OperatorType,
    pub interior: Interior,
    pub boundary: Section,
    pub monomials: Vec<MonomialVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorReport {
    pub operator: OperatorType,
    pub cases: Vec<Section>,
    pub totals: Vec<Section>,
    pub theorem: TheoremReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Document {
    Full { operators: Vec<OperatorReport> },
    Single(Section),
}

impl Document {
    pub fn sections(&self) -> Vec<&Section> {
        match self {
            Document::Single(s) => vec![s],
            Document::Full { operators } => operators
                .iter()
                .flat_map(|o| o.cases.iter().chain(&o.totals).chain(std::iter::once(&o.theorem.boundary)))
                .collect(),
        }
    }

    pub fn accepted(&self) -> bool {
        self.sections().iter().all(|s| s.accepted())
    }
}

const TYPE_TWO_NOTE: &str = "the displayed left-hand side of the stored statement repeats the type-I ordering \
pi+(c(w)(Dc(v)+c(v)D)D^-1) o pi+(D^-2); read as a typo, the content is matched against the type-II totals";

struct Reconciler<'a> {
    config: &'a RunConfig,
    oracle: &'a Oracle,
}

impl Reconciler<'_> {
    fn section(&self, engine: &CaseResult, id: &str, trace: Vec<TraceStep>) -> Result<Section> {
        let op = engine.operator;
        let stored = reference(op, id).ok_or_else(|| Error::UnknownCase(format!("{id} for {op}")))?;
        let stored = CaseResult::from_reference(&stored);
        let diff = reconcile(engine, &stored).entries;
        let paper_match = diff.is_empty();
        let oracle = if !paper_match && self.config.oracle == OracleMode::Arbitrate {
            let (e, r) = (engine.primitive_terms(), stored.primitive_terms());
            Some(self.oracle.arbitrate(op, id, &e, &r)?)
        } else {
            None
        };
        let basis = self.config.substitution.basis();
        Ok(Section {
            operator: op,
            case: id.to_string(),
            basis,
            pi_grade: engine.pi_grade,
            terms: term_entries(&engine.in_basis(basis).terms),
            reference: term_entries(&stored.in_basis(basis).terms),
            paper_match,
            diff,
            oracle,
            pieces: Vec::new(),
            trace,
        })
    }

    fn case_section(&self, outcome: &CaseOutcome, trace: Vec<TraceStep>) -> Result<Section> {
        let op = outcome.spec.operator;
        let name = &outcome.spec.name;
        let mut section = self.section(&outcome_result(outcome), name, trace)?;
        for (label, value) in &outcome.pieces {
            let id = format!("{name}/{label}");
            if reference(op, &id).is_some() {
                let piece = CaseResult::primitive(op, id.clone(), value.clone());
                section.pieces.push(self.section(&piece, &id, Vec::new())?);
            }
        }
        Ok(section)
    }

    fn evaluate(&self, op: OperatorType, name: &str) -> Result<(CaseOutcome, Vec<TraceStep>)> {
        let spec = crate::boundary::find_case(op, name)?;
        if self.config.verbose {
            compute_case_traced(&spec)
        } else {
            Ok((compute_case(&spec)?, Vec::new()))
        }
    }

    fn operator_report(&self, op: OperatorType) -> Result<OperatorReport> {
        let names: Vec<String> = enumerate_cases(op).into_iter().map(|c| c.name).collect();
        let outcomes: Vec<(CaseOutcome, Vec<TraceStep>)> =
            names.iter().map(|n| self.evaluate(op, n)).collect::<Result<_>>()?;
        let mut cases = Vec::new();
        for (o, trace) in &outcomes {
            cases.push(self.case_section(o, trace.clone())?);
        }
        let sum = |part: Option<Part>| {
            outcomes
                .iter()
                .filter(|(o, _)| part.is_none_or(|p| o.spec.part == p))
                .fold(ParamPoly::zero(), |acc, (o, _)| &acc + &o.value)
        };
        let total = CaseResult::primitive(op, "total", sum(Some(Part::PhiTilde)));
        let totals = vec![self.section(&total, "total", Vec::new())?, self.section(&total, "total/geometric", Vec::new())?];
        let boundary = CaseResult::primitive(op, "boundary", sum(None));
        let theorem = self.theorem(op, &boundary)?;
        Ok(OperatorReport { operator: op, cases, totals, theorem })
    }

    fn theorem(&self, op: OperatorType, boundary: &CaseResult) -> Result<TheoremReport> {
        let section = self.section(boundary, "boundary", Vec::new())?;
        let interior = einstein_coefficient(4)?;
        let basis = self.config.substitution.basis();
        let stored = reference(op, "boundary").map(|r| CaseResult::from_reference(&r).in_basis(basis));
        let engine = boundary.in_basis(basis);
        let mut monomials: Vec<MonomialVerdict> = Vec::new();
        if let Some(stored) = stored {
            let mut keys: Vec<_> = engine.terms.terms().chain(stored.terms.terms()).map(|(m, _)| m.clone()).collect();
            keys.sort();
            keys.dedup();
            for m in keys {
                let (e, s) = (engine.terms.coefficient(&m), stored.terms.coefficient(&m));
                monomials.push(MonomialVerdict {
                    monomial: m.to_string(),
                    engine: e.to_string(),
                    stored: s.to_string(),
                    matches: e == s,
                });
            }
        }
        Ok(TheoremReport {
            operator: op,
            interior: Interior {
                coefficient: crate::ring::fmt_rat(&interior.value),
                pi_grade: interior.pi,
                integrand: "int_M (Ric(v,w) - s g(v,w)/2)",
            },
            boundary: section,
            monomials,
            note: (op == OperatorType::TypeII).then_some(TYPE_TWO_NOTE),
        })
    }
}

/// Stored statement of the boundary block next to the engine's, with a
/// verdict per monomial.
pub fn theorem_report(op: OperatorType, substitution: Substitution) -> Result<TheoremReport> {
    let config = RunConfig { substitution, ..RunConfig::default() };
    let oracle = Oracle::new(Settings::default(), 0, config.seed);
    let r = Reconciler { config: &config, oracle: &oracle };
    let specs = enumerate_cases(op);
    let mut total = ParamPoly::zero();
    for spec in &specs {
        total = &total + &compute_case(spec)?.value;
    }
    r.theorem(op, &CaseResult::primitive(op, "boundary", total))
}

/// Result of a run: the document, its rendering and the exit verdict.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub document: Document,
    pub text: String,
    pub success: bool,
}

pub fn run(config: &RunConfig) -> Result<RunOutput> {
    let oracle = Oracle::new(Settings::default(), config.samples, config.seed);
    run_with(config, &oracle)
}

/// [`run`] with a caller-supplied oracle, whose cached case values carry
/// over between runs. The oracle's own samples replace `samples` and `seed`.
pub fn run_with(config: &RunConfig, oracle: &Oracle) -> Result<RunOutput> {
    let r = Reconciler { config, oracle };
    let ops = config.operator.operators();
    let document = match &config.case {
        Some(name) => {
            let op = ops
                .iter()
                .copied()
                .find(|op| enumerate_cases(*op).iter().any(|c| &c.name == name))
                .ok_or_else(|| Error::UnknownCase(name.clone()))?;
            let (outcome, trace) = r.evaluate(op, name)?;
            Document::Single(r.case_section(&outcome, trace)?)
        }
        None => Document::Full { operators: ops.into_iter().map(|op| r.operator_report(op)).collect::<Result<_>>()? },
    };
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&document).expect("document serializes"),
        Format::Markdown => markdown(&document),
    };
    Ok(RunOutput { success: document.accepted(), document, text })
}
