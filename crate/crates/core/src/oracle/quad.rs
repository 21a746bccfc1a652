//! Quadrature rules: adaptive Gauss-Kronrod on the line and a product
//! Gauss-Legendre / trapezoid rule on the unit sphere.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

fn kronrod<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        k += s * WGK[j];
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Adaptive 7/15-point Gauss-Kronrod with an absolute tolerance.
pub fn integrate<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, tol: f64) -> C64 {
    fn go<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, tol: f64, whole: (C64, f64), depth: u32) -> C64 {
        let (value, err) = whole;
        if err <= tol || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        let left = kronrod(f, a, m);
        let right = kronrod(f, m, b);
        go(f, a, m, tol / 2.0, left, depth - 1) + go(f, m, b, tol / 2.0, right, depth - 1)
    }
    go(f, a, b, tol, kronrod(f, a, b), 40)
}

/// Half-width of the normal-covector window.
pub const LINE_CUTOFF: f64 = 1e8;

/// `int_{-R}^{R} f`, computed after `xi = tan(theta)`.
pub fn integrate_line<F: Fn(C64) -> C64>(f: &F, tol: f64) -> C64 {
    let edge = LINE_CUTOFF.atan();
    let g = |t: f64| {
        let c = t.cos();
        f(C64::new(t.tan(), 0.0)) / (c * c)
    };
    integrate(&g, -edge, edge, tol)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Product rule on the unit sphere in three dimensions, exact for
/// polynomials of degree below `2 * polar`.
pub fn sphere_rule(polar: usize, azimuthal: usize) -> Vec<([f64; 3], f64)> {
    let mut out = Vec::new();
    for (z, wz) in gauss_legendre(polar) {
        let r = (1.0 - z * z).sqrt();
        for k in 0..azimuthal {
            let phi = 2.0 * PI * k as f64 / azimuthal as f64;
            out.push(([r * phi.cos(), r * phi.sin(), z], wz * 2.0 * PI / azimuthal as f64));
        }
    }
    out
}
