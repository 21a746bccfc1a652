use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational as GQ;
use super::var::Var;
use crate::error::{Error, Result};

/// Sparse power product, sorted by `Var`, exponents nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Self::one();
        for (v, e) in pairs {
            m = m.mul(&Self::pow(v, e));
        }
        m
    }

    pub fn pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Self(vec![(v, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x.0 == y.0 {
                        out.push((x.0, x.1 + y.1));
                        a.next();
                        b.next();
                    } else if x.0 < y.0 {
                        out.push(**x);
                        a.next();
                    } else {
                        out.push(**y);
                        b.next();
                    }
                }
                (Some(x), None) => {
                    out.push(**x);
                    a.next();
                }
                (None, Some(y)) => {
                    out.push(**y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self(out)
    }

    /// Sets the exponent of `v`, removing it when zero.
    pub fn with_exponent(&self, v: Var, e: u32) -> Self {
        let mut out: Vec<_> = self.0.iter().copied().filter(|(w, _)| *w != v).collect();
        if e > 0 {
            out.push((v, e));
            out.sort();
        }
        Self(out)
    }

    /// Divides by `other` if it divides.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut m = self.clone();
        for &(v, e) in &other.0 {
            let have = m.exponent(v);
            if have < e {
                return None;
            }
            m = m.with_exponent(v, have - e);
        }
        Some(m)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut m = Self::one();
        for factor in s.split('*') {
            let (name, e) = match factor.rsplit_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| Error::Parse(s.into()))?),
                None => (factor, 1),
            };
            m = m.mul(&Self::pow(Var::parse(name)?, e));
        }
        Ok(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over Q(i).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, GQ>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GQ::one())
    }

    pub fn constant(c: GQ) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GQ::int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), GQ::one())
    }

    pub fn term(m: Monomial, c: GQ) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: GQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GQ)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> GQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value when every indeterminate is a constant, if it is.
    pub fn as_constant(&self) -> Option<GQ> {
        match self.terms.len() {
            0 => Some(GQ::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &GQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(n, x)| (n.mul(m), x.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| *v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Coefficients of successive powers of `v`.
    pub fn split_var(&self, v: Var) -> Vec<ParamPoly> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            out[e as usize].add_term(m.with_exponent(v, 0), c.clone());
        }
        out
    }

    pub fn from_powers(v: Var, coeffs: &[ParamPoly]) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::pow(v, e as u32);
            for (n, x) in &c.terms {
                p.add_term(n.mul(&m), x.clone());
            }
        }
        p
    }

    pub fn substitute(&self, v: Var, value: &ParamPoly) -> Self {
        if !self.contains(v) {
            return self.clone();
        }
        let parts = self.split_var(v);
        // Horner in the substituted value
        let mut acc = Self::zero();
        for c in parts.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Derivation defined by its value on each indeterminate.
    pub fn derive<F>(&self, rule: &F) -> Result<Self>
    where
        F: Fn(Var) -> Result<ParamPoly>,
    {
        let mut out = Self::zero();
        let mut cache: BTreeMap<Var, ParamPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            for &(v, e) in &m.0 {
                let dv = match cache.get(&v) {
                    Some(d) => d.clone(),
                    None => {
                        let d = rule(v)?;
                        cache.insert(v, d.clone());
                        d
                    }
                };
                if dv.is_empty() {
                    continue;
                }
                let rest = m.with_exponent(v, e - 1);
                let k = c.scale(&num_rational::BigRational::from_integer(e.into()));
                for (n, x) in &dv.terms {
                    out.add_term(rest.mul(n), &k * x);
                }
            }
        }
        Ok(out)
    }

    /// Ordinary partial derivative.
    pub fn partial(&self, v: Var) -> Self {
        self.derive(&|w| Ok(if w == v { Self::one() } else { Self::zero() }))
            .expect("partial derivative is total")
    }

    pub fn eval_complex<F: Fn(Var) -> Complex64>(&self, f: &F) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for &(v, e) in &m.0 {
                t *= f(v).powu(e);
            }
            total += t;
        }
        total
    }

    pub fn eval_exact<F: Fn(Var) -> GQ>(&self, f: &F) -> GQ {
        let mut total = GQ::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                t = &t * &f(v).pow(e);
            }
            total += &t;
        }
        total
    }

    /// Normal form modulo `L = S^2 (xi1^2 + xi2^2 + xi3^2)`.
    ///
    /// Every monomial divisible by `S^2 xi1^2` is rewritten; a single
    /// generator is its own Groebner basis, so the result is canonical.
    pub fn reduce_norm(&self) -> Self {
        let lead = Monomial::from_pairs([(Var::Xi(1), 2), (Var::S, 2)]);
        if !self.terms.keys().any(|m| m.div(&lead).is_some()) {
            return self.clone();
        }
        let tail = {
            let mut t = Self::var(Var::L);
            for j in [2, 3] {
                t = &t - &Self::term(Monomial::from_pairs([(Var::Xi(j), 2), (Var::S, 2)]), GQ::one());
            }
            t
        };
        let mut work = self.clone();
        loop {
            let hit = work.terms.iter().find_map(|(m, c)| m.div(&lead).map(|q| (m.clone(), q, c.clone())));
            let Some((m, q, c)) = hit else { break };
            work.terms.remove(&m);
            for (n, x) in &tail.terms {
                work.add_term(q.mul(n), &c * x);
            }
        }
        work
    }

    /// Drops the imaginary parts after checking they vanish.
    pub fn real_terms(&self) -> Option<BTreeMap<Monomial, num_rational::BigRational>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            if !c.is_real() {
                return None;
            }
            out.insert(m.clone(), c.re.clone());
        }
        Some(out)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        &self + &rhs
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        &self - &rhs
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl From<GQ> for ParamPoly {
    fn from(c: GQ) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for ParamPoly {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}
