//! Case enumeration, the exact boundary-term pipeline, reporting bases and
//! reconciliation against stored values.

pub mod basis;
mod cases;
mod pairing;
mod pipeline;
pub mod reference;
mod result;

pub use basis::Basis;
pub use pairing::{pairing_integral, PairingIntegral};
pub use cases::{enumerate_cases, find_case, CaseSpec, OperatorType, Part};
pub use pipeline::{
    compute_case, compute_case_traced, first_symbol, inner_inverse, restricted_first_component, second_operator,
    CaseOutcome, TraceStep,
};
pub use reference::{all_references, reference, Reference};
pub use result::{
    compute_cases, compute_phi_star, outcome_result, parse_entries, reconcile, term_entries, total_phi_tilde,
    CaseResult, Diff, DiffEntry, TermEntry,
};
