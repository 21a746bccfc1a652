//! Collar model near the base point: `h(x_n) = 1 + h' x_n`, frame
//! components of `v` and `w` linear in `x_n`, constant connection data.
//! Symbols are assembled from explicit gamma matrices; inverses come from
//! the parametrix recursion.

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::Serialize;

use super::calculus::{c, compose_sum, gammas, Graded, Sym, Xi, M4};
use crate::error::Result;
use crate::ring::{GaussianRational as GQ, Var};

/// Floating-point parameter values.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Params {
    pub hp: f64,
    pub v: [f64; 4],
    pub w: [f64; 4],
    pub dv: [f64; 4],
    pub dw: [f64; 4],
    /// `A[j][k] = <nabla_{e_j} v, e_k>`.
    pub a: [[f64; 4]; 4],
    /// Antisymmetric spin-connection coefficients of `nabla_v`.
    pub om: [[f64; 4]; 4],
}

/// Exact rational assignment of every primitive parameter.
#[derive(Clone, Debug)]
pub struct Sample {
    values: BTreeMap<Var, BigRational>,
}

pub fn primitive_vars() -> Vec<Var> {
    let mut out = vec![Var::Hp];
    for j in 1..=4 {
        out.extend([Var::V(j), Var::W(j), Var::Dv(j), Var::Dw(j)]);
        for k in 1..=4 {
            out.push(Var::A(j, k));
        }
    }
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push(Var::Om(i, j));
        }
    }
    out
}

impl Sample {
    /// Small random rationals: numerators in `-9..=9`, denominators in `1..=8`.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let values = primitive_vars()
            .into_iter()
            .map(|v| {
                let (n, d): (i64, i64) = (rng.gen_range(-9..=9), rng.gen_range(1..=8));
                (v, BigRational::new(n.into(), d.into()))
            })
            .collect();
        Sample { values }
    }

    pub fn from_values(values: BTreeMap<Var, BigRational>) -> Self {
        Sample { values }
    }

    /// Value of a primitive parameter; anything else is an error in the caller.
    pub fn value(&self, v: Var) -> GQ {
        match self.values.get(&v) {
            Some(q) => GQ::real(q.clone()),
            None => panic!("no sample value for {v}"),
        }
    }

    pub fn params(&self) -> Params {
        let f = |v: Var| self.values.get(&v).and_then(|q| q.to_f64()).unwrap_or(0.0);
        let mut p = Params { hp: f(Var::Hp), ..Params::default() };
        for j in 1..=4u8 {
            let i = j as usize - 1;
            p.v[i] = f(Var::V(j));
            p.w[i] = f(Var::W(j));
            p.dv[i] = f(Var::Dv(j));
            p.dw[i] = f(Var::Dw(j));
            for k in 1..=4u8 {
                p.a[i][k as usize - 1] = f(Var::A(j, k));
                if j < k {
                    let o = f(Var::Om(j, k));
                    p.om[i][k as usize - 1] = o;
                    p.om[k as usize - 1][i] = -o;
                }
            }
        }
        p
    }
}

/// Which order `-3` component of the inverse square enters the model.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InverseSquare {
    /// The closed form stored in the symbol catalog, evaluated at the base
    /// point on `|xi'| = 1`.
    Catalog,
    /// Order `-3` of the composition of two parametrices.
    Composed,
}

fn vec_gamma(coeffs: [C64; 4]) -> M4 {
    let g = gammas();
    (0..4).fold(M4::zeros(), |acc, k| acc + g[k] * coeffs[k])
}

fn linear(x: f64, dx: f64, z: C64) -> C64 {
    c(x) + z * dx
}

pub struct Model {
    pub p: Params,
}

impl Model {
    pub fn new(p: Params) -> Self {
        Model { p }
    }

    fn metric_root(hp: f64, z: C64) -> C64 {
        (c(1.0) + z * hp).sqrt()
    }

    /// `c(xi)` at `x_n`.
    pub fn c_xi(&self) -> Sym {
        let hp = self.p.hp;
        Sym::new(move |z, xi| {
            let s = Self::metric_root(hp, z);
            vec_gamma([s * xi[0], s * xi[1], s * xi[2], xi[3]])
        })
    }

    pub fn c_w(&self) -> Sym {
        let (w, dw) = (self.p.w, self.p.dw);
        Sym::new(move |z, _| vec_gamma(std::array::from_fn(|k| linear(w[k], dw[k], z))))
    }

    pub fn dirac(&self) -> Graded {
        let g4 = gammas()[3];
        let hp = self.p.hp;
        let top = self.c_xi().scale(C64::new(0.0, 1.0));
        let zero = Sym::base(move |_, _| g4 * c(-0.75 * hp));
        Graded(vec![(1, top), (0, zero)])
    }

    /// Spin connection `1/4 sum Omega_ij c(e_i) c(e_j)`.
    fn spin_connection(&self) -> M4 {
        let g = gammas();
        let mut m = M4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m += g[i] * g[j] * c(0.25 * self.p.om[i][j]);
            }
        }
        m
    }

    pub fn nabla_v(&self) -> Graded {
        let (v, dv) = (self.p.v, self.p.dv);
        let one = Sym::new(move |z, xi| {
            let s: C64 = (0..4).map(|k| linear(v[k], dv[k], z) * xi[k]).sum();
            M4::identity() * (s * C64::new(0.0, 1.0))
        });
        let a = self.spin_connection();
        Graded(vec![(1, one), (0, Sym::base(move |_, _| a))])
    }

    /// `-2 c(w) nabla_v`.
    pub fn transport(&self) -> Graded {
        let cw = self.c_w().scale(c(-2.0));
        Graded(self.nabla_v().0.into_iter().map(|(r, s)| (r, cw.mul(&s))).collect())
    }

    /// `c(w) sum_j c(e_j) c(nabla_{e_j} v)`.
    pub fn connection(&self) -> Graded {
        let g = gammas();
        let mut sum = M4::zeros();
        for j in 0..4 {
            sum += g[j] * vec_gamma(std::array::from_fn(|k| c(self.p.a[j][k])));
        }
        Graded(vec![(0, self.c_w().mul(&Sym::base(move |_, _| sum)))])
    }

    /// Parametrix of the Dirac operator down to order `-2`.
    pub fn dirac_inverse(&self) -> Result<Graded> {
        let d = self.dirac();
        let top = d.get(1)?;
        let q1 = Sym::new(move |z, xi| top.eval(z, xi).try_inverse().expect("elliptic symbol"));
        // order -1 of d o q vanishes once q_{-2} = -q_{-1} (that sum)
        let partial = Graded(d.0.clone());
        let rest = compose_sum(&partial, &Graded(vec![(-1, q1.clone())]), -1)?;
        let q2 = q1.mul(&rest).scale(c(-1.0));
        Ok(Graded(vec![(-1, q1), (-2, q2.at_base())]))
    }

    pub fn dirac_inverse_square(&self, mode: InverseSquare) -> Result<Graded> {
        let q = self.dirac_inverse()?;
        let lead = compose_sum(&Graded(vec![(-1, q.get(-1)?)]), &Graded(vec![(-1, q.get(-1)?)]), -2)?;
        let next = match mode {
            InverseSquare::Composed => compose_sum(&q, &q, -3)?,
            InverseSquare::Catalog => self.catalog_inverse_square_tail(),
        };
        Ok(Graded(vec![(-2, lead), (-3, next.at_base())]))
    }

    fn catalog_inverse_square_tail(&self) -> Sym {
        let g = gammas();
        let hp = self.p.hp;
        Sym::base(move |_, xi: &Xi| {
            let xn = xi[3];
            let norm = c(1.0) + xn * xn;
            let mut frame = M4::zeros();
            for k in 0..3 {
                frame += g[k] * g[3] * xi[k];
            }
            let inner = frame * c(-0.5 * hp) + M4::identity() * (xn * (2.5 * hp));
            let i = C64::new(0.0, 1.0);
            inner * (-i / (norm * norm)) - M4::identity() * (i * 2.0 * hp * xn / (norm * norm * norm))
        })
    }
}
