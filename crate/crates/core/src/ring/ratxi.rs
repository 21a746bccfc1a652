use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational as GQ;
use super::poly::ParamPoly;
use super::var::Var;
use crate::error::{Error, Result};

/// `num / ((xin - i)^plus (xin + i)^minus (L + xin^2)^norm)`.
///
/// The `norm` factor is the full covector norm squared before the
/// unit-sphere restriction turns it into `(xin - i)(xin + i)`.
#[derive(Clone, Debug, Default)]
pub struct RatXi {
    num: ParamPoly,
    plus: u32,
    minus: u32,
    norm: u32,
}

fn xn() -> ParamPoly {
    ParamPoly::var(Var::Xn)
}

fn xn_minus(a: &GQ) -> ParamPoly {
    &xn() - &ParamPoly::constant(a.clone())
}

fn norm_factor() -> ParamPoly {
    &ParamPoly::var(Var::L) + &xn().pow(2)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact quotient by `(xin - a)`, or `None` when it leaves a remainder.
fn divide_linear(p: &ParamPoly, a: &GQ) -> Option<ParamPoly> {
    let c = p.split_var(Var::Xn);
    if c.is_empty() {
        return Some(ParamPoly::zero());
    }
    let ac = ParamPoly::constant(a.clone());
    let n = c.len() - 1;
    let mut b = vec![ParamPoly::zero(); n];
    let mut carry = ParamPoly::zero();
    for k in (0..=n).rev() {
        let val = &c[k] + &(&carry * &ac);
        if k == 0 {
            if !val.reduce_norm().is_empty() {
                return None;
            }
        } else {
            b[k - 1] = val.clone();
            carry = val;
        }
    }
    Some(ParamPoly::from_powers(Var::Xn, &b))
}

/// Division by the monic `xin^2 + L` in `xin`; returns quotient and remainder.
fn divide_norm(p: &ParamPoly) -> (ParamPoly, ParamPoly) {
    let mut c = p.split_var(Var::Xn);
    if c.len() < 3 {
        return (ParamPoly::zero(), p.clone());
    }
    let l = ParamPoly::var(Var::L);
    let mut quo = vec![ParamPoly::zero(); c.len() - 2];
    for k in (2..c.len()).rev() {
        let lead = std::mem::take(&mut c[k]);
        c[k - 2] = &c[k - 2] - &(&lead * &l);
        quo[k - 2] = lead;
    }
    (ParamPoly::from_powers(Var::Xn, &quo), ParamPoly::from_powers(Var::Xn, &c))
}

/// Polynomial long division in `xin` by a monic polynomial with constant coefficients.
fn divide_monic(p: &ParamPoly, den: &[GQ]) -> (Vec<ParamPoly>, Vec<ParamPoly>) {
    let mut c = p.split_var(Var::Xn);
    let d = den.len() - 1;
    if c.len() <= d {
        c.resize(d, ParamPoly::zero());
        return (Vec::new(), c);
    }
    let mut quo = vec![ParamPoly::zero(); c.len() - d];
    for k in (d..c.len()).rev() {
        let lead = std::mem::take(&mut c[k]);
        if lead.is_empty() {
            continue;
        }
        for (j, dj) in den.iter().enumerate().take(d) {
            c[k - d + j] = &c[k - d + j] - &lead.scale(dj);
        }
        quo[k - d] = lead;
    }
    c.truncate(d);
    (quo, c)
}

/// Coefficients of `(xin - a)^p (xin - b)^q`, lowest degree first.
fn expand_poles(factors: &[(GQ, u32)]) -> Vec<GQ> {
    let mut out = vec![GQ::one()];
    for (a, e) in factors {
        for _ in 0..*e {
            let mut next = vec![GQ::zero(); out.len() + 1];
            for (k, c) in out.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * a);
            }
            out = next;
        }
    }
    out
}

/// Laurent data of a restricted rational function.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions {
    /// Polynomial part, coefficient of `xin^k` at index `k`.
    pub poly: Vec<ParamPoly>,
    /// `(m, c)` stands for `c / (xin - i)^m`.
    pub plus: Vec<(u32, ParamPoly)>,
    /// `(m, c)` stands for `c / (xin + i)^m`.
    pub minus: Vec<(u32, ParamPoly)>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatXi {
        let mut total = RatXi::from_poly(ParamPoly::from_powers(Var::Xn, &self.poly));
        for (m, c) in &self.plus {
            total = &total + &RatXi::new(c.clone(), *m, 0, 0);
        }
        for (m, c) in &self.minus {
            total = &total + &RatXi::new(c.clone(), 0, *m, 0);
        }
        total
    }
}

impl RatXi {
    pub fn new(num: ParamPoly, plus: u32, minus: u32, norm: u32) -> Self {
        let mut r = Self { num, plus, minus, norm };
        r.canonicalize();
        r
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        Self::new(p, 0, 0, 0)
    }

    pub fn constant(c: GQ) -> Self {
        Self::from_poly(ParamPoly::constant(c))
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    /// Exponents of `(xin - i)`, `(xin + i)` and `(L + xin^2)`.
    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.plus, self.minus, self.norm)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.plus == 0 && self.minus == 0 && self.norm == 0
    }

    fn canonicalize(&mut self) {
        self.num = self.num.reduce_norm();
        if self.num.is_empty() {
            self.plus = 0;
            self.minus = 0;
            self.norm = 0;
            return;
        }
        while self.plus > 0 {
            match divide_linear(&self.num, &GQ::i()) {
                Some(n) => {
                    self.num = n.reduce_norm();
                    self.plus -= 1;
                }
                None => break,
            }
        }
        while self.minus > 0 {
            match divide_linear(&self.num, &-GQ::i()) {
                Some(n) => {
                    self.num = n.reduce_norm();
                    self.minus -= 1;
                }
                None => break,
            }
        }
        while self.norm > 0 {
            let (quo, rem) = divide_norm(&self.num);
            if !rem.reduce_norm().is_empty() {
                break;
            }
            self.num = quo.reduce_norm();
            self.norm -= 1;
        }
    }

    /// The denominator as a polynomial.
    pub fn denominator(&self) -> ParamPoly {
        &(&xn_minus(&GQ::i()).pow(self.plus) * &xn_minus(&-GQ::i()).pow(self.minus))
            * &norm_factor().pow(self.norm)
    }

    fn lift(&self, plus: u32, minus: u32, norm: u32) -> ParamPoly {
        &(&(&self.num * &xn_minus(&GQ::i()).pow(plus - self.plus))
            * &xn_minus(&-GQ::i()).pow(minus - self.minus))
            * &norm_factor().pow(norm - self.norm)
    }

    pub fn scale(&self, c: &GQ) -> Self {
        Self::new(self.num.scale(c), self.plus, self.minus, self.norm)
    }

    pub fn mul_poly(&self, p: &ParamPoly) -> Self {
        Self::new(&self.num * p, self.plus, self.minus, self.norm)
    }

    /// Derivative in `xin`.
    pub fn d_xin(&self) -> Self {
        let dn = self.num.partial(Var::Xn);
        let fm = xn_minus(&GQ::i());
        let fp = xn_minus(&-GQ::i());
        let fnorm = norm_factor();
        let active: Vec<(u32, ParamPoly, ParamPoly)> = [
            (self.plus, fm.clone(), ParamPoly::one()),
            (self.minus, fp.clone(), ParamPoly::one()),
            (self.norm, fnorm.clone(), xn().scale(&GQ::int(2))),
        ]
        .into_iter()
        .filter(|(e, _, _)| *e > 0)
        .collect();
        let all: ParamPoly = active.iter().fold(ParamPoly::one(), |acc, (_, f, _)| &acc * f);
        let mut num = &dn * &all;
        for (k, (e, _, df)) in active.iter().enumerate() {
            let others = active
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .fold(ParamPoly::one(), |acc, (_, (_, f, _))| &acc * f);
            num = &num - &(&(&self.num * df) * &others).scale(&GQ::int(*e as i64));
        }
        Self::new(
            num,
            self.plus + u32::from(self.plus > 0),
            self.minus + u32::from(self.minus > 0),
            self.norm + u32::from(self.norm > 0),
        )
    }

    pub fn d_xin_k(&self, k: u32) -> Self {
        let mut f = self.clone();
        for _ in 0..k {
            f = f.d_xin();
        }
        f
    }

    /// Derivation that annihilates `xin`, given by its value on every
    /// other indeterminate.
    pub fn derive<F>(&self, rule: &F) -> Result<Self>
    where
        F: Fn(Var) -> Result<ParamPoly>,
    {
        let guarded = |v: Var| -> Result<ParamPoly> {
            if v == Var::Xn {
                Ok(ParamPoly::zero())
            } else {
                rule(v)
            }
        };
        let dn = self.num.derive(&guarded)?;
        if self.norm == 0 {
            return Ok(Self::new(dn, self.plus, self.minus, 0));
        }
        let dl = guarded(Var::L)?;
        let num = &(&dn * &norm_factor()) - &(&self.num * &dl).scale(&GQ::int(self.norm as i64));
        Ok(Self::new(num, self.plus, self.minus, self.norm + 1))
    }

    /// Unit-sphere restriction: `L = 1` and `S = 1`.
    pub fn restrict(&self) -> Self {
        let one = ParamPoly::one();
        let num = self.num.substitute(Var::L, &one).substitute(Var::S, &one);
        Self::new(num, self.plus + self.norm, self.minus + self.norm, 0)
    }

    /// Substitutes a parameter that does not occur in the denominator.
    pub fn substitute(&self, v: Var, value: &ParamPoly) -> Result<Self> {
        if v == Var::Xn || (v == Var::L && self.norm > 0) {
            return Err(Error::Unrestricted(v.name()));
        }
        Ok(Self::new(self.num.substitute(v, value), self.plus, self.minus, self.norm))
    }

    pub fn eval_complex<F: Fn(Var) -> Complex64>(&self, f: &F) -> Complex64 {
        let den = self.denominator().eval_complex(f);
        self.num.eval_complex(f) / den
    }

    fn require_restricted(&self) -> Result<()> {
        if self.norm > 0 || self.num.contains(Var::L) {
            return Err(Error::Unrestricted("L".into()));
        }
        if self.num.contains(Var::S) {
            return Err(Error::Unrestricted("S".into()));
        }
        Ok(())
    }

    /// Polynomial part plus principal parts at `xin = i` and `xin = -i`.
    pub fn partial_fractions(&self) -> Result<PartialFractions> {
        self.require_restricted()?;
        let i = GQ::i();
        let den = expand_poles(&[(i.clone(), self.plus), (-i.clone(), self.minus)]);
        let (poly, _) = divide_monic(&self.num, &den);
        let coeffs = self.num.split_var(Var::Xn);
        let plus = principal_part(&coeffs, &i, self.plus, &-i.clone(), self.minus);
        let minus = principal_part(&coeffs, &-i.clone(), self.minus, &i, self.plus);
        Ok(PartialFractions { poly, plus, minus })
    }

    /// Total pole order minus numerator degree in `xin`.
    pub fn decay(&self) -> i64 {
        let poles = (self.plus + self.minus + 2 * self.norm) as i64;
        poles - self.num.degree_in(Var::Xn) as i64
    }

    /// Coefficient of `1 / (xin - i)` in the Laurent expansion at `i`.
    pub fn residue_at_i(&self) -> Result<ParamPoly> {
        let pf = self.partial_fractions()?;
        Ok(pf.plus.into_iter().find(|(m, _)| *m == 1).map(|(_, c)| c).unwrap_or_default())
    }
}

/// Principal part at `a` of `N(x) / ((x - a)^p (x - b)^q)`.
fn principal_part(n: &[ParamPoly], a: &GQ, p: u32, b: &GQ, qe: u32) -> Vec<(u32, ParamPoly)> {
    if p == 0 {
        return Vec::new();
    }
    let p = p as usize;
    // Taylor coefficients of N at a
    let mut taylor = vec![ParamPoly::zero(); p];
    for (k, nk) in n.iter().enumerate() {
        for (m, slot) in taylor.iter_mut().enumerate().take(k.min(p - 1) + 1) {
            let c = binomial(BigInt::from(k), BigInt::from(m));
            let w = a.pow((k - m) as u32).scale(&BigRational::from_integer(c));
            *slot = &*slot + &nk.scale(&w);
        }
    }
    // series of (t + (a - b))^(-q)
    let d = a - b;
    let dinv = d.inv().expect("distinct poles");
    let lead = dinv.pow(qe);
    let mut other = Vec::with_capacity(p);
    for m in 0..p {
        if qe == 0 {
            other.push(if m == 0 { GQ::one() } else { GQ::zero() });
            continue;
        }
        let c = binomial(BigInt::from(qe as usize + m - 1), BigInt::from(m));
        let sign = if m % 2 == 0 { 1 } else { -1 };
        other.push(lead.scale(&(BigRational::from_integer(c) * q(sign))) * dinv.pow(m as u32));
    }
    let mut out = Vec::new();
    for m in 0..p {
        let mut e = ParamPoly::zero();
        for j in 0..=m {
            e = &e + &taylor[j].scale(&other[m - j]);
        }
        if !e.is_empty() {
            out.push(((p - m) as u32, e));
        }
    }
    out.sort_by_key(|(m, _)| *m);
    out
}

impl PartialEq for RatXi {
    fn eq(&self, other: &Self) -> bool {
        let plus = self.plus.max(other.plus);
        let minus = self.minus.max(other.minus);
        let norm = self.norm.max(other.norm);
        (&self.lift(plus, minus, norm) - &other.lift(plus, minus, norm)).reduce_norm().is_empty()
    }
}

impl fmt::Display for RatXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut den = Vec::new();
        for (name, e) in [("(xin-i)", self.plus), ("(xin+i)", self.minus), ("(L+xin^2)", self.norm)] {
            match e {
                0 => {}
                1 => den.push(name.to_string()),
                _ => den.push(format!("{name}^{e}")),
            }
        }
        if den.is_empty() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, den.join("*"))
        }
    }
}

impl<'a> Add<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn add(self, rhs: &RatXi) -> RatXi {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let plus = self.plus.max(rhs.plus);
        let minus = self.minus.max(rhs.minus);
        let norm = self.norm.max(rhs.norm);
        RatXi::new(&self.lift(plus, minus, norm) + &rhs.lift(plus, minus, norm), plus, minus, norm)
    }
}

impl<'a> Sub<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn sub(self, rhs: &RatXi) -> RatXi {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn mul(self, rhs: &RatXi) -> RatXi {
        if self.is_zero() || rhs.is_zero() {
            return RatXi::zero();
        }
        RatXi::new(&self.num * &rhs.num, self.plus + rhs.plus, self.minus + rhs.minus, self.norm + rhs.norm)
    }
}

impl Neg for &RatXi {
    type Output = RatXi;
    fn neg(self) -> RatXi {
        RatXi { num: -&self.num, ..self.clone() }
    }
}

impl Add for RatXi {
    type Output = RatXi;
    fn add(self, rhs: RatXi) -> RatXi {
        &self + &rhs
    }
}

impl Sub for RatXi {
    type Output = RatXi;
    fn sub(self, rhs: RatXi) -> RatXi {
        &self - &rhs
    }
}

impl Mul for RatXi {
    type Output = RatXi;
    fn mul(self, rhs: RatXi) -> RatXi {
        &self * &rhs
    }
}

impl Neg for RatXi {
    type Output = RatXi;
    fn neg(self) -> RatXi {
        -&self
    }
}

impl From<ParamPoly> for RatXi {
    fn from(p: ParamPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn over_unit(num: ParamPoly, e: u32) -> RatXi {
        RatXi::new(num, e, e, 0)
    }

    #[test]
    fn cancels_common_factors() {
        let f = RatXi::new(&xn() - &ParamPoly::constant(GQ::i()), 2, 1, 0);
        assert_eq!(f.exponents(), (1, 1, 0));
        let g = RatXi::new(norm_factor(), 0, 0, 1);
        assert_eq!(g.exponents(), (0, 0, 0));
        assert_eq!(g.numerator(), &ParamPoly::one());
    }

    #[test]
    fn display_form() {
        let f = over_unit(ParamPoly::one(), 2);
        assert_eq!(f.to_string(), "((1/1))/((xin-i)^2*(xin+i)^2)");
    }

    #[test]
    fn partial_fractions_of_basic_kernels() {
        let f = over_unit(ParamPoly::one(), 1);
        let pf = f.partial_fractions().unwrap();
        assert!(pf.poly.iter().all(ParamPoly::is_empty));
        assert_eq!(pf.plus, vec![(1, ParamPoly::constant(GQ::new(q(0), BigRational::new((-1).into(), 2.into()))))]);
        assert_eq!(pf.minus, vec![(1, ParamPoly::constant(GQ::new(q(0), BigRational::new(1.into(), 2.into()))))]);

        let g = over_unit(xn().pow(2), 1);
        let pg = g.partial_fractions().unwrap();
        assert_eq!(pg.poly, vec![ParamPoly::one()]);
        assert_eq!(pg.recombine(), g);
    }

    #[test]
    fn derivative_of_norm_power() {
        // d/dxin (L + xin^2)^-1 = -2 xin (L + xin^2)^-2
        let f = RatXi::new(ParamPoly::one(), 0, 0, 1);
        let expect = RatXi::new(xn().scale(&GQ::int(-2)), 0, 0, 2);
        assert_eq!(f.d_xin(), expect);
    }

    #[test]
    fn restriction_moves_the_norm_onto_the_poles() {
        let f = RatXi::new(ParamPoly::var(Var::L), 0, 0, 1);
        assert_eq!(f.restrict(), over_unit(ParamPoly::one(), 1));
    }

    #[test]
    fn unrestricted_partial_fractions_fail() {
        let f = RatXi::new(ParamPoly::one(), 0, 0, 1);
        assert!(f.partial_fractions().is_err());
    }
}
