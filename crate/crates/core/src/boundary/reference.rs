//! Published values of every case, total and theorem boundary block, stored
//! as fixtures in the collected or geometric basis. The engine never reads
//! these while computing; they are only used for reconciliation.

use super::basis::Basis;
use super::cases::OperatorType;
use crate::ring::{parse_rat, GaussianRational as GQ, Monomial, ParamPoly};

/// One stored value, as the coefficient of `pi^2`.
#[derive(Clone, Debug)]
pub struct Reference {
    pub operator: OperatorType,
    pub id: &'static str,
    pub basis: Basis,
    pub terms: ParamPoly,
}

type Row = (&'static str, &'static str);

fn poly(rows: &[Row]) -> ParamPoly {
    let mut p = ParamPoly::zero();
    for (c, m) in rows {
        let c = parse_rat(c).expect("fixture coefficient");
        let m = Monomial::parse(m).expect("fixture monomial");
        p.add_term(m, GQ::real(c));
    }
    p
}

const TYPE_ONE: &[(&str, Basis, &[Row])] = &[
    ("Phi*", Basis::Collected, &[("-2", "E")]),
    ("aI", Basis::Collected, &[]),
    ("aII", Basis::Collected, &[("2/3", "DG"), ("1/6", "h'*G"), ("2", "D(v4w4)"), ("-1/2", "h'*v4*w4")]),
    ("aIII", Basis::Collected, &[("-5/6", "h'*G"), ("5/2", "h'*v4*w4")]),
    ("aIV", Basis::Collected, &[("19/6", "h'*G"), ("-49/6", "h'*v4*w4")]),
    ("aV", Basis::Collected, &[("-4/3", "h'*G"), ("5/2", "h'*v4*w4")]),
    ("aV/s1*s-2", Basis::Collected, &[("-4/3", "h'*G"), ("1/2", "h'*v4*w4")]),
    ("aV/s0*s-1", Basis::Collected, &[]),
    ("aV/dxi s1*Dx s-1", Basis::Collected, &[("2", "h'*v4*w4")]),
    ("total", Basis::Collected, &[("2/3", "DG"), ("1/3", "D(v4w4)"), ("-7/6", "h'*G"), ("-11/3", "h'*v4*w4")]),
    ("total/geometric", Basis::Geometric, &[("2/3", "DG"), ("2", "D(v4w4)"), ("-7/9", "G*K"), ("22/9", "v4*w4*K")]),
    (
        "boundary",
        Basis::Geometric,
        &[("2/3", "DG"), ("2", "D(v4w4)"), ("-2", "E"), ("-7/9", "G*K"), ("22/9", "v4*w4*K")],
    ),
];

const TYPE_TWO: &[(&str, Basis, &[Row])] = &[
    ("Phi**", Basis::Collected, &[("2", "E")]),
    ("bI", Basis::Collected, &[]),
    ("bII", Basis::Collected, &[("-2/3", "DG"), ("5/6", "h'*G"), ("-2", "D(v4w4)"), ("-3/2", "h'*v4*w4")]),
    ("bIII", Basis::Collected, &[("-1/2", "h'*G"), ("-3/2", "h'*v4*w4")]),
    ("bIV", Basis::Collected, &[("1/6", "h'*G"), ("-35/6", "h'*v4*w4")]),
    ("bIV/s0*s-2", Basis::Collected, &[]),
    ("bIV/s1*s-3", Basis::Collected, &[("1/6", "h'*G"), ("-11/6", "h'*v4*w4")]),
    ("bIV/dxi s1*Dx s-2", Basis::Collected, &[("-4", "h'*v4*w4")]),
    ("bV", Basis::Collected, &[("3/2", "h'*G"), ("9/2", "h'*v4*w4")]),
    ("total", Basis::Collected, &[("-2/3", "DG"), ("-2", "D(v4w4)"), ("2", "h'*G"), ("-4/3", "h'*v4*w4")]),
    ("total/geometric", Basis::Geometric, &[("-2/3", "DG"), ("-2", "D(v4w4)"), ("-4/3", "G*K"), ("8/9", "v4*w4*K")]),
    (
        "boundary",
        Basis::Geometric,
        &[("-2/3", "DG"), ("-2", "D(v4w4)"), ("2", "E"), ("-4/3", "G*K"), ("8/9", "v4*w4*K")],
    ),
];

fn table(op: OperatorType) -> &'static [(&'static str, Basis, &'static [Row])] {
    match op {
        OperatorType::TypeI => TYPE_ONE,
        OperatorType::TypeII => TYPE_TWO,
    }
}

/// Looks up a stored value: a case name, `case/piece`, `total`,
/// `total/geometric` or `boundary`.
pub fn reference(op: OperatorType, id: &str) -> Option<Reference> {
    table(op)
        .iter()
        .find(|(k, _, _)| *k == id)
        .map(|(k, basis, rows)| Reference { operator: op, id: k, basis: *basis, terms: poly(rows) })
}

pub fn all_references(op: OperatorType) -> Vec<Reference> {
    table(op).iter().filter_map(|(k, _, _)| reference(op, k)).collect()
}
