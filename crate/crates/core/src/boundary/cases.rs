use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two operator pairings whose boundary residues are computed.
///
/// `TypeI` pairs `c(w)(D c(v) + c(v) D) D^-1` with `D^-2`; `TypeII` pairs
/// `c(w)(D c(v) + c(v) D) D^-2` with `D^-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OperatorType {
    #[serde(rename = "type1")]
    TypeI,
    #[serde(rename = "type2")]
    TypeII,
}

impl OperatorType {
    pub const ALL: [OperatorType; 2] = [OperatorType::TypeI, OperatorType::TypeII];

    pub fn id(self) -> &'static str {
        match self {
            OperatorType::TypeI => "type1",
            OperatorType::TypeII => "type2",
        }
    }

    /// Letter that prefixes the case names.
    pub fn letter(self) -> char {
        match self {
            OperatorType::TypeI => 'a',
            OperatorType::TypeII => 'b',
        }
    }

    /// Name of the connection-term case.
    pub fn phi_name(self) -> &'static str {
        match self {
            OperatorType::TypeI => "Phi*",
            OperatorType::TypeII => "Phi**",
        }
    }

    /// Top orders `(r, l)` of the connection part and of the `nabla_v` part.
    fn top_orders(self, part: Part) -> (i32, i32) {
        match (self, part) {
            (OperatorType::TypeI, Part::Phi) => (-1, -2),
            (OperatorType::TypeI, Part::PhiTilde) => (0, -2),
            (OperatorType::TypeII, Part::Phi) => (-2, -1),
            (OperatorType::TypeII, Part::PhiTilde) => (-1, -1),
        }
    }
}

impl fmt::Display for OperatorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for OperatorType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type1" => Ok(OperatorType::TypeI),
            "type2" => Ok(OperatorType::TypeII),
            _ => Err(Error::UnknownSymbol(s.to_string())),
        }
    }
}

/// Which summand of the operator splitting a case belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Part {
    /// `c(w) sum_j c(e_j) c(nabla_{e_j} v)` composed with the inverse power.
    Phi,
    /// `-2 c(w) nabla_v` composed with the inverse power.
    PhiTilde,
}

/// One admissible tuple of the boundary-term sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CaseSpec {
    pub operator: OperatorType,
    pub part: Part,
    pub r: i32,
    pub l: i32,
    pub k: u32,
    pub j: u32,
    /// Total order of the tangential multi-index; the pipeline sums over
    /// every multi-index of this order.
    pub alpha: u32,
    pub name: String,
}

impl CaseSpec {
    pub fn new(operator: OperatorType, part: Part, r: i32, l: i32, k: u32, j: u32, alpha: u32) -> Self {
        assert_eq!(r + l - (k + j + alpha) as i32, -3, "case tuple off the residue shell");
        let (rmax, lmax) = operator.top_orders(part);
        assert!(r <= rmax && l <= lmax, "case tuple above the symbol orders");
        let name = case_name(operator, part, r, l, k, j, alpha);
        Self { operator, part, r, l, k, j, alpha, name }
    }
}

fn roman(n: usize) -> &'static str {
    ["I", "II", "III", "IV", "V", "VI", "VII"][n]
}

fn case_name(op: OperatorType, part: Part, r: i32, l: i32, k: u32, j: u32, alpha: u32) -> String {
    if part == Part::Phi {
        return op.phi_name().to_string();
    }
    let (rmax, lmax) = op.top_orders(part);
    let index = if (r, l) == (rmax, lmax) {
        match (alpha, j, k) {
            (1, 0, 0) => 0,
            (0, 1, 0) => 1,
            (0, 0, 1) => 2,
            _ => unreachable!("first-order shift"),
        }
    } else {
        // the two order-lowered cases are listed in different orders
        let lowered_second = l < lmax;
        match (op, lowered_second) {
            (OperatorType::TypeI, true) => 3,
            (OperatorType::TypeI, false) => 4,
            (OperatorType::TypeII, false) => 3,
            (OperatorType::TypeII, true) => 4,
        }
    };
    format!("{}{}", op.letter(), roman(index))
}

/// Every admissible tuple, connection case first, then cases `I` to `V`.
pub fn enumerate_cases(op: OperatorType) -> Vec<CaseSpec> {
    let mut out = Vec::new();
    for part in [Part::Phi, Part::PhiTilde] {
        let (rmax, lmax) = op.top_orders(part);
        let shift = (rmax + lmax + 3) as u32;
        for r in (rmax - shift as i32..=rmax).rev() {
            for l in (lmax - shift as i32..=lmax).rev() {
                let free = r + l + 3;
                if free < 0 {
                    continue;
                }
                let free = free as u32;
                for alpha in 0..=free {
                    for j in 0..=free - alpha {
                        let k = free - alpha - j;
                        out.push(CaseSpec::new(op, part, r, l, k, j, alpha));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (a.part, &a.name).cmp(&(b.part, &b.name)));
    out
}

pub fn find_case(op: OperatorType, name: &str) -> Result<CaseSpec> {
    enumerate_cases(op)
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCase(format!("{name} for {op}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_one_cases() {
        let cases = enumerate_cases(OperatorType::TypeI);
        let names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["Phi*", "aI", "aII", "aIII", "aIV", "aV"]);
        let a4 = &cases[4];
        assert_eq!((a4.r, a4.l), (0, -3));
        let a5 = &cases[5];
        assert_eq!((a5.r, a5.l), (-1, -2));
    }

    #[test]
    fn type_two_cases() {
        let cases = enumerate_cases(OperatorType::TypeII);
        let names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["Phi**", "bI", "bII", "bIII", "bIV", "bV"]);
        assert_eq!((cases[4].r, cases[4].l), (-2, -1));
        assert_eq!((cases[5].r, cases[5].l), (-1, -2));
        assert_eq!((cases[2].j, cases[3].k, cases[1].alpha), (1, 1, 1));
    }

    #[test]
    fn every_case_is_on_shell() {
        for op in OperatorType::ALL {
            for c in enumerate_cases(op) {
                assert_eq!(c.r + c.l - (c.k + c.j + c.alpha) as i32, -3);
            }
        }
    }
}
