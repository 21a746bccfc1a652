use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::Word;
use crate::error::Result;
use crate::ring::{GaussianRational as GQ, ParamPoly, RatXi, Var};

/// Clifford-algebra element with rational-function coefficients.
#[derive(Clone, Debug, Default)]
pub struct CliffElem {
    terms: BTreeMap<Word, RatXi>,
}

impl CliffElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatXi::one())
    }

    pub fn scalar(c: RatXi) -> Self {
        Self::term(Word::IDENTITY, c)
    }

    pub fn term(w: Word, c: RatXi) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn generator(j: u8) -> Self {
        Self::term(Word::generator(j), RatXi::one())
    }

    /// `sum_k a_k c(e_k)` for polynomial coefficients.
    pub fn vector(coeffs: [ParamPoly; 4]) -> Self {
        let mut e = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            e.add_term(Word::generator(k as u8 + 1), RatXi::from_poly(c));
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: RatXi) {
        if c.is_zero() {
            return;
        }
        let next = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !next.is_zero() {
            self.terms.insert(w, next);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatXi)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: Word) -> RatXi {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &GQ) -> Self {
        self.map(|r| r.scale(c))
    }

    pub fn mul_ratxi(&self, c: &RatXi) -> Self {
        self.map(|r| r * c)
    }

    pub fn map<F: Fn(&RatXi) -> RatXi>(&self, f: F) -> Self {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.add_term(*w, f(c));
        }
        e
    }

    pub fn try_map<F: Fn(&RatXi) -> Result<RatXi>>(&self, f: F) -> Result<Self> {
        let mut e = Self::zero();
        for (w, c) in &self.terms {
            e.add_term(*w, f(c)?);
        }
        Ok(e)
    }

    /// Spinor trace: four times the identity coefficient.
    pub fn trace(&self) -> RatXi {
        self.coefficient(Word::IDENTITY).scale(&GQ::int(4))
    }

    /// Every word that occurs, with its coefficient, in word order.
    pub fn words(&self) -> Vec<Word> {
        self.terms.keys().copied().collect()
    }
}

impl PartialEq for CliffElem {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl<'a> Add<&'a CliffElem> for &'a CliffElem {
    type Output = CliffElem;
    fn add(self, rhs: &CliffElem) -> CliffElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a CliffElem> for &'a CliffElem {
    type Output = CliffElem;
    fn sub(self, rhs: &CliffElem) -> CliffElem {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c);
        }
        out
    }
}

impl<'a> Mul<&'a CliffElem> for &'a CliffElem {
    type Output = CliffElem;
    fn mul(self, rhs: &CliffElem) -> CliffElem {
        let mut out = CliffElem::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let (s, w) = a.mul(*b);
                let c = x * y;
                out.add_term(w, if s < 0 { -c } else { c });
            }
        }
        out
    }
}

impl Neg for &CliffElem {
    type Output = CliffElem;
    fn neg(self) -> CliffElem {
        self.map(|c| -c)
    }
}

impl Add for CliffElem {
    type Output = CliffElem;
    fn add(self, rhs: CliffElem) -> CliffElem {
        &self + &rhs
    }
}

impl Sub for CliffElem {
    type Output = CliffElem;
    fn sub(self, rhs: CliffElem) -> CliffElem {
        &self - &rhs
    }
}

impl Mul for CliffElem {
    type Output = CliffElem;
    fn mul(self, rhs: CliffElem) -> CliffElem {
        &self * &rhs
    }
}

impl Neg for CliffElem {
    type Output = CliffElem;
    fn neg(self) -> CliffElem {
        -&self
    }
}

impl From<RatXi> for CliffElem {
    fn from(c: RatXi) -> Self {
        Self::scalar(c)
    }
}

impl From<ParamPoly> for CliffElem {
    fn from(p: ParamPoly) -> Self {
        Self::scalar(RatXi::from_poly(p))
    }
}

impl fmt::Display for CliffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{w}]*{c}")?;
        }
        Ok(())
    }
}

/// `c(xi') = S * sum_{j<4} xi_j c(e_j)` in the rescaled frame.
pub fn c_xi_prime() -> CliffElem {
    let s = ParamPoly::var(Var::S);
    CliffElem::vector([
        &s * &ParamPoly::var(Var::Xi(1)),
        &s * &ParamPoly::var(Var::Xi(2)),
        &s * &ParamPoly::var(Var::Xi(3)),
        ParamPoly::zero(),
    ])
}

/// `c(xi) = c(xi') + xin c(dx_n)`.
pub fn c_xi() -> CliffElem {
    &c_xi_prime() + &CliffElem::from(ParamPoly::var(Var::Xn)).mul_gen(4)
}

/// `c(w) = sum_k w_k c(e_k)`.
pub fn c_w() -> CliffElem {
    CliffElem::vector([1, 2, 3, 4].map(|k| ParamPoly::var(Var::W(k))))
}

impl CliffElem {
    /// Right multiplication by a single generator.
    pub fn mul_gen(&self, j: u8) -> CliffElem {
        self * &CliffElem::generator(j)
    }
}
