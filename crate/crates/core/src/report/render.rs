//! Markdown rendering. Every number is printed with the same formatter as
//! the JSON output so both carry identical content.

use std::fmt::Write;

use super::{Document, OperatorReport, Section, TheoremReport};
use crate::boundary::TermEntry;
use crate::oracle::Arbitration;

fn num(x: f64) -> String {
    serde_json::Value::from(x).to_string()
}

fn terms_table(out: &mut String, title: &str, terms: &[TermEntry]) {
    let _ = writeln!(out, "{title}:\n");
    if terms.is_empty() {
        out.push_str("(zero)\n\n");
        return;
    }
    out.push_str("| monomial | coefficient |\n|---|---|\n");
    for t in terms {
        let _ = writeln!(out, "| `{}` | {} |", t.monomial, t.coefficient);
    }
    out.push('\n');
}

fn oracle(out: &mut String, a: &Arbitration) {
    let inverse_square = serde_json::to_value(a.inverse_square).expect("serializes");
    let verdict = serde_json::to_value(a.verdict).expect("serializes");
    let _ = writeln!(
        out,
        "Oracle verdict: **{}** (order -3 of the inverse square: {})\n",
        verdict.as_str().unwrap_or_default(),
        inverse_square.as_str().unwrap_or_default()
    );
    out.push_str("| sample | engine | reference | oracle | imaginary |\n|---|---|---|---|---|\n");
    for (i, e) in a.evidence.iter().enumerate() {
        let _ = writeln!(out, "| {i} | {} | {} | {} | {} |", num(e.engine), num(e.reference), num(e.oracle), num(e.imaginary));
    }
    out.push('\n');
}

fn section(out: &mut String, s: &Section, depth: usize) {
    let basis = serde_json::to_value(s.basis).expect("serializes");
    let _ = writeln!(out, "{} {} `{}`\n", "#".repeat(depth), s.operator, s.case);
    let _ = writeln!(
        out,
        "Value: coefficient of pi^{} in the {} basis. Exact match: **{}**.\n",
        s.pi_grade,
        basis.as_str().unwrap_or_default(),
        if s.paper_match { "yes" } else { "no" }
    );
    terms_table(out, "Engine", &s.terms);
    terms_table(out, "Stored", &s.reference);
    if !s.diff.is_empty() {
        out.push_str("Differences (collected basis):\n\n| monomial | engine | stored |\n|---|---|---|\n");
        for d in &s.diff {
            let _ = writeln!(out, "| `{}` | {} | {} |", d.monomial, d.engine, d.reference);
        }
        out.push('\n');
    }
    if let Some(a) = &s.oracle {
        oracle(out, a);
    }
    for p in &s.pieces {
        section(out, p, depth + 1);
    }
    if !s.trace.is_empty() {
        out.push_str("<details><summary>derivation trace</summary>\n\n");
        for t in &s.trace {
            let _ = writeln!(out, "- {}: `{}`", t.stage, t.text);
        }
        out.push_str("\n</details>\n\n");
    }
}

fn theorem(out: &mut String, t: &TheoremReport) {
    let _ = writeln!(out, "## {} boundary block\n", t.operator);
    let _ = writeln!(
        out,
        "Interior: {} pi^{} {}\n",
        t.interior.coefficient, t.interior.pi_grade, t.interior.integrand
    );
    if let Some(n) = t.note {
        let _ = writeln!(out, "Note: {n}\n");
    }
    out.push_str("| monomial | engine | stored | match |\n|---|---|---|---|\n");
    for m in &t.monomials {
        let _ = writeln!(out, "| `{}` | {} | {} | {} |", m.monomial, m.engine, m.stored, if m.matches { "yes" } else { "no" });
    }
    out.push('\n');
    section(out, &t.boundary, 3);
}

fn operator(out: &mut String, r: &OperatorReport) {
    let _ = writeln!(out, "# {}\n", r.operator);
    for s in r.cases.iter().chain(&r.totals) {
        section(out, s, 2);
    }
    theorem(out, &r.theorem);
}

pub fn markdown(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Single(s) => section(&mut out, s, 1),
        Document::Full { operators } => operators.iter().for_each(|r| operator(&mut out, r)),
    }
    let accepted = doc.accepted();
    let _ = writeln!(out, "Overall: **{}**", if accepted { "accepted" } else { "rejected" });
    out
}
