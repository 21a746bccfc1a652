//! Acceptance run: one line per criterion with its verdict and timing.
//! Runs without the libtest harness and exits non-zero if any criterion fails.

mod support;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use wres_core::boundary::basis::collect;
use wres_core::boundary::{compute_case, enumerate_cases, pairing_integral, OperatorType};
use wres_core::clifford::traces::{
    antisymmetric_omega, connection_trace, connection_trace_closed_form, frame_trace_sum, frame_trace_sum_closed_form,
    spin_connection_trace,
};
use wres_core::clifford::{c_w, c_xi_prime, CliffElem};
use wres_core::oracle::{self, agrees, evaluate_exact, Oracle, Sample, Settings};
use wres_core::report::{
    einstein_coefficient, run_with, Document, OperatorChoice, OracleMode, RunConfig, Section, Substitution,
};
use wres_core::residue::{pi_plus, sphere_moment};
use wres_core::ring::{rat, GaussianRational as GQ, ParamPoly, RatXi, Var};
use wres_core::symbols::{catalog, compose, restrict};

const SAMPLES: usize = 20;
const SEED: u64 = 2024;
const TRACE_TOL: f64 = 1e-10;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.pass &= ok;
        self.notes.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, what.into()));
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(format!("     {}", what.into()));
    }
}

type Check = fn(&Oracle) -> wres_core::Result<Outcome>;

fn xn() -> ParamPoly {
    ParamPoly::var(Var::Xn)
}

/// `num / ((xin - i)^plus (1 + xin^2)^norm)` on the unit sphere.
fn rational(num: ParamPoly, plus: u32, norm: u32) -> RatXi {
    RatXi::new(num, plus + norm, norm, 0)
}

fn constant(re: (i64, i64), im: (i64, i64)) -> ParamPoly {
    ParamPoly::constant(&GQ::frac(re.0, re.1) + &(&GQ::frac(im.0, im.1) * &GQ::i()))
}

fn c_dxn() -> CliffElem {
    CliffElem::generator(4)
}

fn projection_instances(_: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    let i = constant((0, 1), (1, 1));
    let cwxi = &c_w() * &c_xi_prime();
    let cwdxn = &c_w() * &c_dxn();
    let poly_xn = |cs: &[i64]| {
        ParamPoly::from_powers(Var::Xn, &cs.iter().map(|&c| ParamPoly::constant(GQ::int(c))).collect::<Vec<_>>())
    };
    let instances: Vec<(&str, CliffElem, CliffElem)> = vec![
        (
            "i(c(xi')+xin c(dxn))/(1+xin^2)",
            (&c_xi_prime() + &CliffElem::from(xn()).mul_gen(4)).mul_ratxi(&rational(i.clone(), 0, 1)),
            (&c_xi_prime() + &CliffElem::from(i.clone()).mul_gen(4))
                .mul_ratxi(&rational(constant((1, 2), (0, 1)), 1, 0)),
        ),
        (
            "c(w)c(xi')/(1+xin^2)",
            cwxi.mul_ratxi(&rational(ParamPoly::one(), 0, 1)),
            cwxi.mul_ratxi(&rational(constant((0, 1), (-1, 2)), 1, 0)),
        ),
        (
            "xin c(w)c(dxn)/(1+xin^2)",
            cwdxn.mul_ratxi(&rational(xn(), 0, 1)),
            cwdxn.mul_ratxi(&rational(constant((1, 2), (0, 1)), 1, 0)),
        ),
        (
            "xin^2 c(w)c(dxn)/(1+xin^2)",
            cwdxn.mul_ratxi(&rational(&xn() * &xn(), 0, 1)),
            cwdxn.mul_ratxi(&rational(constant((0, 1), (1, 2)), 1, 0)),
        ),
        (
            "-i xin(3xin^4+4xin^2-7)/(2(1+xin^2)^3)",
            CliffElem::scalar(rational(
                &poly_xn(&[0, -7, 0, 4, 0, 3]) * &constant((0, 1), (-1, 2)),
                0,
                3,
            )),
            CliffElem::scalar(rational(constant((0, 1), (-1, 2)), 3, 0)),
        ),
        (
            "-2i xin/(1+xin^2)^2",
            CliffElem::scalar(rational(&xn() * &constant((0, 1), (-2, 1)), 0, 2)),
            CliffElem::scalar(rational(constant((1, 2), (0, 1)), 2, 0)),
        ),
    ];
    for (name, input, stored) in instances {
        let (input, stored) = (restrict(&input), restrict(&stored));
        let got = pi_plus(&input)?;
        let ok = got == stored;
        out.check(ok, format!("pi+ of {name}"));
        if !ok {
            out.note(format!("engine {got}"));
            out.note(format!("stored {stored}"));
        }
    }
    Ok(out)
}

fn parametrix(_: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    let d = catalog("D")?;
    let q = catalog("D^-1")?;
    out.check(compose(&d, &q, 0)? == CliffElem::one(), "order 0 of D o D^-1 is the identity");
    out.check(compose(&d, &q, -1)?.is_zero(), "order -1 of D o D^-1 vanishes");
    Ok(out)
}

fn sample_value(s: &Sample, xi: [f64; 3]) -> impl Fn(Var) -> Complex64 + '_ {
    move |v| match v {
        Var::Xi(j) => Complex64::new(xi[j as usize - 1], 0.0),
        other => s.value(other).to_complex(),
    }
}

fn relative_ok(a: Complex64, b: Complex64) -> bool {
    agrees(a, b, TRACE_TOL)
}

fn traces(o: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    let conn = connection_trace();
    let frame = frame_trace_sum();
    let spin = spin_connection_trace(&antisymmetric_omega());
    out.check(conn == connection_trace_closed_form(), "connection trace equals 4(sum A_jj w4 - sum w_k A_4k + sum w_j A_j4)");
    out.check(frame == frame_trace_sum_closed_form(), "frame trace sum equals 4 w4 (xi1+xi2+xi3)");
    let stored_spin = ParamPoly::zero();
    out.check(spin == stored_spin, "spin-connection trace equals the stored value 0");
    if spin != stored_spin {
        out.note(format!("engine {spin}"));
    }
    let xis = oracle::samples(SAMPLES, SEED + 1);
    let (mut conn_ok, mut frame_ok, mut spin_ok, mut closed_ok) = (true, true, true, true);
    for (k, s) in o.points.iter().enumerate() {
        let p = s.params();
        let x = xis[k].params().v;
        let xi = [x[0], x[1], x[2]];
        let value = sample_value(s, xi);
        let numeric = oracle::traces::connection_trace(&p);
        conn_ok &= relative_ok(conn.eval_complex(&value), numeric);
        closed_ok &= relative_ok(connection_trace_closed_form().eval_complex(&value), numeric);
        frame_ok &= relative_ok(frame.eval_complex(&value), oracle::traces::frame_trace_sum(&p, xi));
        spin_ok &= relative_ok(spin.eval_complex(&value), oracle::traces::spin_connection_trace(p.w, &p.om));
    }
    let n = o.points.len();
    out.check(conn_ok && closed_ok, format!("connection trace against gamma matrices at {n} points"));
    out.check(frame_ok, format!("frame trace sum against gamma matrices at {n} points"));
    out.check(spin_ok, format!("engine spin-connection trace against gamma matrices at {n} points"));
    Ok(out)
}

fn sphere(o: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    let mut moments_ok = true;
    for a in 0..=5u32 {
        for b in 0..=5 - a {
            for c in 0..=5 - a - b {
                let m = sphere_moment([a, b, c]);
                let odd = (a + b + c) % 2 == 1;
                if odd {
                    moments_ok &= m.value == rat(0, 1);
                }
                let numeric: f64 = oracle::sphere_rule(4, 8)
                    .iter()
                    .map(|(p, w)| w * p[0].powi(a as i32) * p[1].powi(b as i32) * p[2].powi(c as i32))
                    .sum();
                let exact = num_traits::ToPrimitive::to_f64(&m.value).unwrap_or(f64::NAN) * std::f64::consts::PI;
                moments_ok &= m.pi == 1 && (numeric - exact).abs() < 1e-12;
            }
        }
    }
    out.check(moments_ok, "moments up to degree 5 agree with quadrature, odd moments vanish");
    let second = (1..=3u8).all(|j| {
        (1..=3u8).all(|k| {
            let mut e = [0u32; 3];
            e[j as usize - 1] += 1;
            e[k as usize - 1] += 1;
            sphere_moment(e).value == if j == k { rat(4, 3) } else { rat(0, 1) }
        })
    });
    out.check(second, "xi_j xi_k integrates to (4 pi/3) delta_jk");
    let pairing = pairing_integral()?;
    let hg = &ParamPoly::var(Var::Hp) * &ParamPoly::var(Var::G);
    let statement = (&hg + &ParamPoly::var(Var::DG)).scale(&GQ::frac(-16, 3));
    let total = collect(&pairing.total.value);
    out.check(pairing.total.pi == 1 && total == statement, "pairing total is -(4 pi/3)(h'G + DG) Tr(id)");
    if total != statement {
        out.note(format!("engine {total}"));
    }
    let metric = collect(&pairing.metric.value);
    out.check(metric == hg.scale(&GQ::frac(-8, 3)), "metric part is -(8 pi/3) h'G");
    let agree = o.points.iter().all(|s| {
        let e = evaluate_exact(&pairing.total.value, s);
        agrees(e, Complex64::new(oracle::traces::pairing_integral(&s.params()), 0.0), oracle::TOLERANCE)
    });
    out.check(agree, format!("pairing total against quadrature at {} points", o.points.len()));
    Ok(out)
}

fn collect_sections<'a>(s: &'a Section, out: &mut Vec<&'a Section>) {
    out.push(s);
    for p in &s.pieces {
        collect_sections(p, out);
    }
}

fn per_case(op: OperatorType, o: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    for spec in enumerate_cases(op) {
        let config = RunConfig { case: Some(spec.name.clone()), oracle: OracleMode::Arbitrate, ..RunConfig::default() };
        let doc = run_with(&config, o)?.document;
        let Document::Single(section) = &doc else { unreachable!("a case filter yields one section") };
        let mut all = Vec::new();
        collect_sections(section, &mut all);
        out.check(section.accepted(), format!("{} {}", spec.name, if section.paper_match { "exact" } else { "arbitrated" }));
        for s in all {
            if let Some(a) = &s.oracle {
                out.note(format!("{} arbitrated: {:?} ({} points)", s.case, a.verdict, a.evidence.len()));
            }
        }
    }
    Ok(out)
}

fn type_one(o: &Oracle) -> wres_core::Result<Outcome> {
    per_case(OperatorType::TypeI, o)
}

fn type_two(o: &Oracle) -> wres_core::Result<Outcome> {
    per_case(OperatorType::TypeII, o)
}

fn totals(o: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    let config = RunConfig { operator: OperatorChoice::Both, substitution: Substitution::Geometric, ..RunConfig::default() };
    let Document::Full { operators } = run_with(&config, o)?.document else { unreachable!("no case filter") };
    for report in &operators {
        for t in &report.totals {
            out.check(t.paper_match, format!("{} {} matches the stored total", report.operator, t.case));
        }
        let th = &report.theorem;
        let mismatched: Vec<&str> = th.monomials.iter().filter(|m| !m.matches).map(|m| m.monomial.as_str()).collect();
        out.check(
            !th.monomials.is_empty() && mismatched.is_empty(),
            format!("{} boundary block matches monomial by monomial", report.operator),
        );
        for m in th.monomials.iter().filter(|m| !m.matches) {
            out.note(format!("{}: engine {} stored {}", m.monomial, m.engine, m.stored));
        }
        out.check(
            th.interior.coefficient == "4/3" && th.interior.pi_grade == 2,
            format!("{} interior coefficient is 4 pi^2/3", report.operator),
        );
    }
    let e = einstein_coefficient(4)?;
    out.check(e.value == rat(4, 3) && e.pi == 2, "Einstein coefficient in dimension four is 4 pi^2/3");
    Ok(out)
}

fn properties(_: &Oracle) -> wres_core::Result<Outcome> {
    use support::*;
    let mut out = Outcome::new();
    let mut record = |name: &str, r: Result<(), String>| {
        let ok = r.is_ok();
        out.check(ok, format!("{name}, {TRIALS} trials"));
        if let Err(e) = r {
            out.note(e);
        }
    };
    record("polynomial ring axioms", run((poly(), poly(), poly()), TRIALS, ring_axioms));
    record("Gaussian rational field", run((gq(), gq()), TRIALS, field_axioms));
    record("Clifford associativity", run((elem(), elem(), elem()), TRIALS, clifford_associativity));
    record("trace cyclicity", run((restricted_elem(), restricted_elem()), TRIALS, trace_cyclicity));
    record("vector squares", run([gq(), gq(), gq(), gq()], TRIALS, vector_square));
    record("pi+ idempotence", run(restricted_elem(), TRIALS, projection_idempotent));
    record("projection complement", run(restricted_elem(), TRIALS, projection_complement));
    record("derivative commutation", run((field_elem(), 1u8..=3, 1u8..=3), TRIALS, derivative_commutation));
    Ok(out)
}

fn equivalence(o: &Oracle) -> wres_core::Result<Outcome> {
    let mut out = Outcome::new();
    for op in [OperatorType::TypeI, OperatorType::TypeII] {
        for spec in enumerate_cases(op) {
            let value = compute_case(&spec)?.value;
            let mut worst: f64 = 0.0;
            let mut ok = true;
            for (i, s) in o.points.iter().enumerate() {
                let e = evaluate_exact(&value, s);
                let n = o.target(op, &spec.name, i)?;
                ok &= agrees(e, n, oracle::TOLERANCE);
                worst = worst.max((e - n).norm() / e.norm().max(n.norm()).max(1.0));
            }
            out.check(ok, format!("{} {} at {} points, worst relative error {worst:.1e}", op, spec.name, o.points.len()));
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let oracle = Oracle::new(Settings::default(), SAMPLES, SEED);
    let criteria: [(&str, Check, u64); 9] = [
        ("projection worked instances", projection_instances, 1),
        ("parametrix consistency", parametrix, 1),
        ("trace identities", traces, 5),
        ("sphere moments and pairing", sphere, 5),
        ("type I case constants", type_one, 60),
        ("type II case constants", type_two, 60),
        ("totals and theorem blocks", totals, 5),
        ("property suites", properties, 30),
        ("oracle equivalence", equivalence, 600),
    ];
    let mut failed = 0;
    for (n, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check(&oracle);
        let elapsed = start.elapsed();
        let in_budget = elapsed <= Duration::from_secs(budget);
        let (pass, notes) = match result {
            Ok(o) => (o.pass && in_budget, o.notes),
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        if !pass {
            failed += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        let over = if in_budget { "" } else { ", over budget" };
        println!("criterion {} {verdict} {name} ({:.2}s / {budget}s{over})", n + 1, elapsed.as_secs_f64());
        for line in notes {
            println!("    {line}");
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
