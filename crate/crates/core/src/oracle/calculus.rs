//! Floating-point symbols as matrix-valued functions of `(x_n, xi)`, with
//! derivatives taken by Cauchy's integral formula on small circles.

use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub type M4 = Matrix4<C64>;

/// Covector `(xi_1, xi_2, xi_3, xi_n)`, complexified.
pub type Xi = [C64; 4];

type Func = dyn Fn(C64, &Xi) -> M4 + Send + Sync;

const NODES: usize = 16;
const XN_RADIUS: f64 = 0.01;
const XI_RADIUS: f64 = 0.05;

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

#[cfg(test)]
fn identity() -> M4 {
    M4::identity()
}

/// Hermitian anticommuting generators `sigma1 x sigma_a` and `sigma2 x 1`.
fn hermitian_generators() -> [M4; 4] {
    let o = c(0.0);
    let l = c(1.0);
    let i = C64::new(0.0, 1.0);
    let s1 = [[o, l], [l, o]];
    let s2 = [[o, -i], [i, o]];
    let s3 = [[l, o], [o, -l]];
    let id = [[l, o], [o, l]];
    let kron = |a: [[C64; 2]; 2], b: [[C64; 2]; 2]| M4::from_fn(|r, c| a[r / 2][c / 2] * b[r % 2][c % 2]);
    [kron(s1, s1), kron(s1, s2), kron(s1, s3), kron(s2, id)]
}

/// Clifford generators with `gamma_k^2 = -1`.
pub fn gammas() -> [M4; 4] {
    static GAMMAS: OnceLock<[M4; 4]> = OnceLock::new();
    *GAMMAS.get_or_init(|| hermitian_generators().map(|g| g * C64::new(0.0, 1.0)))
}

pub fn trace(m: &M4) -> C64 {
    m.trace()
}

/// `tr(a b)` without forming the product.
pub fn trace_product(a: &M4, b: &M4) -> C64 {
    let mut t = c(0.0);
    for r in 0..4 {
        for k in 0..4 {
            t += a[(r, k)] * b[(k, r)];
        }
    }
    t
}

fn circle(n: usize) -> impl Iterator<Item = C64> {
    (0..n).map(move |k| C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))
}

/// `f^(m)(z0)` for a function analytic on a disc of radius well above `rho`.
pub fn cauchy_derivative<T, F>(f: F, z0: C64, m: u32, rho: f64) -> T
where
    T: std::ops::Add<Output = T> + std::ops::Mul<C64, Output = T>,
    F: Fn(C64) -> T,
{
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let mut acc: Option<T> = None;
    for u in circle(NODES) {
        let dz = u * rho;
        let w = c(fact / NODES as f64) / dz.powu(m);
        let term = f(z0 + dz) * w;
        acc = Some(match acc {
            Some(a) => a + term,
            None => term,
        });
    }
    acc.expect("at least one node")
}

/// A symbol component. `base_only` components are known only at `x_n = 0`
/// and refuse normal derivatives.
#[derive(Clone)]
pub struct Sym {
    f: Option<Arc<Func>>,
    pub base_only: bool,
}

impl Sym {
    pub fn new(f: impl Fn(C64, &Xi) -> M4 + Send + Sync + 'static) -> Self {
        Sym { f: Some(Arc::new(f)), base_only: false }
    }

    pub fn base(f: impl Fn(C64, &Xi) -> M4 + Send + Sync + 'static) -> Self {
        Sym { f: Some(Arc::new(f)), base_only: true }
    }

    pub fn zero() -> Self {
        Sym { f: None, base_only: false }
    }

    /// The same function, now marked as known only at the base point.
    pub fn at_base(self) -> Sym {
        Sym { base_only: true, ..self }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_none()
    }

    pub fn eval(&self, xn: C64, xi: &Xi) -> M4 {
        match &self.f {
            Some(f) => f(xn, xi),
            None => M4::zeros(),
        }
    }

    pub fn d_xn(&self) -> Result<Sym> {
        if self.base_only {
            return Err(Error::JetDepth("normal derivative of a base-point component".into()));
        }
        let Some(f) = self.f.clone() else { return Ok(Sym::zero()) };
        Ok(Sym::new(move |z, xi| cauchy_derivative(|t| f(t, xi), z, 1, XN_RADIUS)))
    }

    pub fn d_xn_k(&self, k: u32) -> Result<Sym> {
        (0..k).try_fold(self.clone(), |s, _| s.d_xn())
    }

    /// Covector derivative; index 3 is the normal component.
    pub fn d_xi(&self, j: usize, k: u32) -> Sym {
        if k == 0 {
            return self.clone();
        }
        let Some(f) = self.f.clone() else { return Sym::zero() };
        let g = move |z: C64, xi: &Xi| {
            cauchy_derivative(
                |t| {
                    let mut x = *xi;
                    x[j] = t;
                    f(z, &x)
                },
                xi[j],
                k,
                XI_RADIUS,
            )
        };
        Sym { f: Some(Arc::new(g)), base_only: self.base_only }
    }

    /// Tangential space derivative: the model does not depend on `x'`.
    pub fn d_xprime(&self) -> Sym {
        Sym::zero()
    }

    pub fn mul(&self, rhs: &Sym) -> Sym {
        let (Some(a), Some(b)) = (self.f.clone(), rhs.f.clone()) else { return Sym::zero() };
        Sym { f: Some(Arc::new(move |z, xi| a(z, xi) * b(z, xi))), base_only: self.base_only || rhs.base_only }
    }

    pub fn add(&self, rhs: &Sym) -> Sym {
        match (self.f.clone(), rhs.f.clone()) {
            (None, _) => rhs.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => Sym {
                f: Some(Arc::new(move |z, xi| a(z, xi) + b(z, xi))),
                base_only: self.base_only || rhs.base_only,
            },
        }
    }

    pub fn scale(&self, s: C64) -> Sym {
        let Some(a) = self.f.clone() else { return Sym::zero() };
        Sym { f: Some(Arc::new(move |z, xi| a(z, xi) * s)), base_only: self.base_only }
    }

    pub fn sum(items: impl IntoIterator<Item = Sym>) -> Sym {
        items.into_iter().fold(Sym::zero(), |acc, s| acc.add(&s))
    }
}

/// Symbol as homogeneous components keyed by order, highest first.
#[derive(Clone)]
pub struct Graded(pub Vec<(i32, Sym)>);

impl Graded {
    pub fn get(&self, r: i32) -> Result<Sym> {
        if let Some((_, s)) = self.0.iter().find(|(o, _)| *o == r) {
            return Ok(s.clone());
        }
        let top = self.0.iter().map(|(o, _)| *o).max().unwrap_or(i32::MIN);
        if r > top {
            Ok(Sym::zero())
        } else {
            Err(Error::JetDepth(format!("order {r} not modelled")))
        }
    }
}

/// One summand of the composition formula at a fixed order.
pub struct Piece {
    pub label: String,
    pub sym: Sym,
}

/// Order `m` of `a o b`. The model has no tangential dependence, so only
/// normal multi-indices contribute.
pub fn compose(a: &Graded, b: &Graded, m: i32) -> Result<Vec<Piece>> {
    let mut out: Vec<Piece> = Vec::new();
    for (ra, sa) in &a.0 {
        for (rb, sb) in &b.0 {
            let shift = ra + rb - m;
            if shift < 0 {
                continue;
            }
            let order = shift as u32;
            let fact: f64 = (1..=order).map(|k| k as f64).product();
            let left = sa.d_xi(3, order);
            let right = sb.d_xn_k(order)?.scale(C64::new(0.0, -1.0).powu(order) / fact);
            let label = if order == 0 { format!("s{ra}*s{rb}") } else { format!("dxi s{ra}*Dx s{rb}") };
            let sym = left.mul(&right);
            match out.iter_mut().find(|p| p.label == label) {
                Some(p) => p.sym = p.sym.add(&sym),
                None => out.push(Piece { label, sym }),
            }
        }
    }
    Ok(out)
}

pub fn compose_sum(a: &Graded, b: &Graded, m: i32) -> Result<Sym> {
    Ok(Sym::sum(compose(a, b, m)?.into_iter().map(|p| p.sym)))
}
