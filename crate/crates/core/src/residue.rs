//! Half-line projections, the normal-covector line integral and unit-sphere
//! moments.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::clifford::CliffElem;
use crate::error::{Error, Result};
use crate::ring::{GaussianRational as GQ, Monomial, ParamPoly, RatXi, Var};

/// `value * pi^pi`, with the power of pi kept symbolic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PiScaled<T> {
    pub value: T,
    pub pi: u32,
}

/// The three pieces of the Laurent split of a restricted element.
#[derive(Clone, Debug)]
pub struct Projections {
    pub plus: CliffElem,
    pub minus: CliffElem,
    pub poly: CliffElem,
}

fn principal(parts: &[(u32, ParamPoly)], upper: bool) -> RatXi {
    let mut total = RatXi::zero();
    for (m, c) in parts {
        let r = if upper { RatXi::new(c.clone(), *m, 0, 0) } else { RatXi::new(c.clone(), 0, *m, 0) };
        total = &total + &r;
    }
    total
}

pub fn split(f: &CliffElem) -> Result<Projections> {
    let mut plus = CliffElem::zero();
    let mut minus = CliffElem::zero();
    let mut poly = CliffElem::zero();
    for (w, c) in f.terms() {
        let pf = c.partial_fractions()?;
        plus.add_term(*w, principal(&pf.plus, true));
        minus.add_term(*w, principal(&pf.minus, false));
        poly.add_term(*w, RatXi::from_poly(ParamPoly::from_powers(Var::Xn, &pf.poly)));
    }
    Ok(Projections { plus, minus, poly })
}

/// Projection onto boundary values of functions holomorphic in the lower
/// half-plane that vanish at infinity: keeps the principal part at `i`.
pub fn pi_plus(f: &CliffElem) -> Result<CliffElem> {
    Ok(split(f)?.plus)
}

/// Principal part at `-i`, the complement of `pi_plus` up to polynomials.
pub fn pi_minus(f: &CliffElem) -> Result<CliffElem> {
    Ok(split(f)?.minus)
}

/// `int_R f dxin` for a restricted scalar, as `2 pi i` times the residue at `i`.
pub fn integrate_xin_scalar(f: &RatXi) -> Result<PiScaled<ParamPoly>> {
    if f.is_zero() {
        return Ok(PiScaled { value: ParamPoly::zero(), pi: 1 });
    }
    if f.decay() < 2 {
        let (p, m, n) = f.exponents();
        return Err(Error::InsufficientDecay {
            numerator: f.numerator().degree_in(Var::Xn),
            poles: p + m + 2 * n,
        });
    }
    let res = f.residue_at_i()?;
    Ok(PiScaled { value: res.scale(&GQ::new(BigRational::zero(), BigRational::from_integer(2.into()))), pi: 1 })
}

pub fn integrate_xin(f: &CliffElem) -> Result<PiScaled<CliffElem>> {
    let mut out = CliffElem::zero();
    for (w, c) in f.terms() {
        out.add_term(*w, RatXi::from_poly(integrate_xin_scalar(c)?.value));
    }
    Ok(PiScaled { value: out, pi: 1 })
}

fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `int_{S^{d-1}} prod x_i^{a_i}` for `d = exps.len()`, as a rational
/// multiple of `pi^{floor(d/2)}`.
pub fn sphere_moment_general(exps: &[u32]) -> PiScaled<BigRational> {
    let d = exps.len() as i64;
    let grade = (d / 2) as u32;
    if exps.iter().any(|a| a % 2 == 1) {
        return PiScaled { value: BigRational::zero(), pi: grade };
    }
    let total: i64 = exps.iter().map(|&a| a as i64).sum();
    let mut num = BigInt::from(2);
    for &a in exps {
        num *= double_factorial(a as i64 - 1);
    }
    let mut value = BigRational::new(num, BigInt::from(2).pow((total / 2) as u32));
    if d % 2 == 1 {
        let k = (total + d - 1) / 2;
        value *= BigRational::new(BigInt::from(2).pow(k as u32), double_factorial(2 * k - 1));
    } else {
        value /= BigRational::from_integer(factorial((total + d) / 2 - 1));
    }
    PiScaled { value, pi: grade }
}

const MEMO_DEGREE: u32 = 12;

fn moment_table() -> &'static BTreeMap<[u32; 3], BigRational> {
    static TABLE: OnceLock<BTreeMap<[u32; 3], BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = BTreeMap::new();
        for a in (0..=MEMO_DEGREE).step_by(2) {
            for b in (0..=MEMO_DEGREE - a).step_by(2) {
                for c in (0..=MEMO_DEGREE - a - b).step_by(2) {
                    t.insert([a, b, c], sphere_moment_general(&[a, b, c]).value);
                }
            }
        }
        t
    })
}

/// Moment of `xi1^a xi2^b xi3^c` over the unit sphere in three dimensions.
pub fn sphere_moment(exps: [u32; 3]) -> PiScaled<BigRational> {
    if exps.iter().any(|a| a % 2 == 1) {
        return PiScaled { value: BigRational::zero(), pi: 1 };
    }
    match moment_table().get(&exps) {
        Some(v) => PiScaled { value: v.clone(), pi: 1 },
        None => sphere_moment_general(&exps),
    }
}

/// Replaces every tangential covector monomial by its sphere moment.
pub fn integrate_sphere(f: &ParamPoly) -> Result<PiScaled<ParamPoly>> {
    for v in [Var::Xn, Var::L, Var::S] {
        if f.contains(v) {
            return Err(Error::Unrestricted(v.name()));
        }
    }
    let mut out = ParamPoly::zero();
    for (m, c) in f.terms() {
        let exps = [1u8, 2, 3].map(|j| m.exponent(Var::Xi(j)));
        let moment = sphere_moment(exps).value;
        if moment.is_zero() {
            continue;
        }
        let rest = Monomial::from_pairs(m.factors().iter().copied().filter(|(v, _)| !matches!(v, Var::Xi(_))));
        out.add_term(rest, c.scale(&moment));
    }
    Ok(PiScaled { value: out, pi: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn unit(num: ParamPoly, e: u32) -> RatXi {
        RatXi::new(num, e, e, 0)
    }

    #[test]
    fn line_integrals() {
        let got = integrate_xin_scalar(&unit(ParamPoly::one(), 1)).unwrap();
        assert_eq!(got, PiScaled { value: ParamPoly::one(), pi: 1 });
        let got = integrate_xin_scalar(&unit(ParamPoly::one(), 2)).unwrap();
        assert_eq!(got.value, ParamPoly::constant(GQ::frac(1, 2)));
        let slow = unit(ParamPoly::var(Var::Xn), 1);
        assert!(matches!(integrate_xin_scalar(&slow), Err(Error::InsufficientDecay { .. })));
    }

    #[test]
    fn sphere_moments() {
        assert_eq!(sphere_moment([0, 0, 0]).value, rat(4, 1));
        assert_eq!(sphere_moment([2, 0, 0]).value, rat(4, 3));
        assert_eq!(sphere_moment([1, 1, 1]).value, rat(0, 1));
        assert_eq!(sphere_moment([4, 0, 0]).value, rat(4, 5));
        assert_eq!(sphere_moment([2, 2, 0]).value, rat(4, 15));
        let circle = sphere_moment_general(&[0, 0]);
        assert_eq!((circle.value, circle.pi), (rat(2, 1), 1));
        let s3 = sphere_moment_general(&[0, 0, 0, 0]);
        assert_eq!((s3.value, s3.pi), (rat(2, 1), 2));
    }

    #[test]
    fn sphere_of_quadratic_form() {
        let mut f = ParamPoly::zero();
        for j in 1..=3 {
            for k in 1..=3 {
                let t = &(&ParamPoly::var(Var::V(j)) * &ParamPoly::var(Var::W(k)))
                    * &(&ParamPoly::var(Var::Xi(j)) * &ParamPoly::var(Var::Xi(k)));
                f = &f + &t;
            }
        }
        let got = integrate_sphere(&f).unwrap().value;
        let mut expect = ParamPoly::zero();
        for j in 1..=3 {
            expect = &expect + &(&ParamPoly::var(Var::V(j)) * &ParamPoly::var(Var::W(j)));
        }
        assert_eq!(got, expect.scale(&GQ::frac(4, 3)));
        assert!(integrate_sphere(&ParamPoly::var(Var::Xn)).is_err());
    }
}
