use std::fmt;

use crate::error::{Error, Result};

/// Indeterminates of the coefficient ring, in registry order.
///
/// The derive order of the variants fixes the monomial order everywhere.
/// `Xi(j)` are the tangential covector components, `Xn` is the normal one.
/// `L` stands for the tangential norm squared and `S` for the square root of
/// the boundary metric factor, so that `S^2 L` is never ambiguous. The tail
/// variants only appear after the reporting substitution.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Xi(u8),
    Xn,
    L,
    S,
    Hp,
    V(u8),
    W(u8),
    Dv(u8),
    Dw(u8),
    A(u8, u8),
    Om(u8, u8),
    G,
    DG,
    K,
    DVnWn,
    E,
    OmW,
}

impl Var {
    pub fn name(&self) -> String {
        match *self {
            Var::Xi(j) => format!("xi{j}"),
            Var::Xn => "xin".into(),
            Var::L => "L".into(),
            Var::S => "S".into(),
            Var::Hp => "h'".into(),
            Var::V(j) => format!("v{j}"),
            Var::W(j) => format!("w{j}"),
            Var::Dv(j) => format!("dv{j}"),
            Var::Dw(j) => format!("dw{j}"),
            Var::A(j, k) => format!("A{j}{k}"),
            Var::Om(i, j) => format!("Om{i}{j}"),
            Var::G => "G".into(),
            Var::DG => "DG".into(),
            Var::K => "K".into(),
            Var::DVnWn => "D(v4w4)".into(),
            Var::E => "E".into(),
            Var::OmW => "OmW".into(),
        }
    }

    pub fn parse(s: &str) -> Result<Var> {
        let bad = || Error::UnknownSymbol(s.to_string());
        let digit = |t: &str| -> Result<u8> {
            match t.parse::<u8>() {
                Ok(d) if (1..=4).contains(&d) => Ok(d),
                _ => Err(bad()),
            }
        };
        let pair = |t: &str| -> Result<(u8, u8)> {
            let b = t.as_bytes();
            if b.len() != 2 {
                return Err(bad());
            }
            Ok((digit(&t[..1])?, digit(&t[1..])?))
        };
        Ok(match s {
            "xin" => Var::Xn,
            "L" => Var::L,
            "S" => Var::S,
            "h'" => Var::Hp,
            "G" => Var::G,
            "DG" => Var::DG,
            "K" => Var::K,
            "D(v4w4)" => Var::DVnWn,
            "E" => Var::E,
            "OmW" => Var::OmW,
            _ => {
                if let Some(t) = s.strip_prefix("xi") {
                    let j = digit(t)?;
                    if j == 4 {
                        return Err(bad());
                    }
                    Var::Xi(j)
                } else if let Some(t) = s.strip_prefix("dv") {
                    Var::Dv(digit(t)?)
                } else if let Some(t) = s.strip_prefix("dw") {
                    Var::Dw(digit(t)?)
                } else if let Some(t) = s.strip_prefix("Om") {
                    let (i, j) = pair(t)?;
                    if i >= j {
                        return Err(bad());
                    }
                    Var::Om(i, j)
                } else if let Some(t) = s.strip_prefix('v') {
                    Var::V(digit(t)?)
                } else if let Some(t) = s.strip_prefix('w') {
                    Var::W(digit(t)?)
                } else if let Some(t) = s.strip_prefix('A') {
                    let (j, k) = pair(t)?;
                    Var::A(j, k)
                } else {
                    return Err(bad());
                }
            }
        })
    }

    /// Tangential covector components and the normal one.
    pub fn is_covector(&self) -> bool {
        matches!(self, Var::Xi(_) | Var::Xn)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let mut all = vec![Var::Xn, Var::L, Var::S, Var::Hp, Var::G, Var::DG, Var::K, Var::DVnWn, Var::E, Var::OmW];
        for j in 1..=4 {
            if j < 4 {
                all.push(Var::Xi(j));
            }
            all.extend([Var::V(j), Var::W(j), Var::Dv(j), Var::Dw(j)]);
            for k in 1..=4 {
                all.push(Var::A(j, k));
                if j < k {
                    all.push(Var::Om(j, k));
                }
            }
        }
        for v in all {
            assert_eq!(Var::parse(&v.name()).unwrap(), v);
        }
        assert!(Var::parse("xi4").is_err());
        assert!(Var::parse("Om21").is_err());
    }
}
