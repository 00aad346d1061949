//! Verification suites behind `hypalg verify`.
//!
//! Each suite is a list of labelled checks carrying the expected and the
//! actual value as text, so a failure prints as a two-line diff. Suites
//! draw random cases from their own generator seeded by `seed`, so results
//! do not depend on which other suites run.

use std::fmt;
use std::str::FromStr;
use std::thread;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::barred_octonion::{antihermiticity_test, correction, CompositeUnit, LeftBarredOctonion, OctonionSymbol, RightBarredTerm};
use crate::barred_quaternion::BarredQuaternion;
use crate::error::{Error, Result};
use crate::group_lab::{
    counted_families, dimension_formula, invariance_check, listed_generators, metric_signature, parse_listed,
    solve_generators, su_trace_report, verify_closure, Carrier, Family, GroupSpec, MetricKind, MetricSpec,
    OperatorMatrix, Projection,
};
use crate::linalg::RealMatrix;
use crate::lorentz::{self, LorentzKind};
use crate::matrix_bridge::{
    action_matrix, complex_linear_subalgebra, is_product_closed, left_barred_basis, matrix_rank, oc_to_c4,
    or_to_r8, qr_to_r4, right_term_to_r8, ComplexMatrix, OCTONION_LEFT_RULES, OCTONION_RIGHT_RULES,
    QUATERNION_LEFT_RULES, QUATERNION_RIGHT_RULES,
};
use crate::octonion::{associator, Octonion, StructureConstants, EPS4_CYCLES};
use crate::quaternion::Quaternion;
use crate::sample;
use crate::table::OCTONION_TRIPLES;
use crate::Rational;

type R = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Appendix,
    Rank64,
    Count106,
    Structure,
    Antihermiticity,
    Commutant,
    Tables,
    Closure,
    Signatures,
    Transpose,
    Lorentz,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Appendix,
        Suite::Rank64,
        Suite::Count106,
        Suite::Structure,
        Suite::Antihermiticity,
        Suite::Commutant,
        Suite::Tables,
        Suite::Closure,
        Suite::Signatures,
        Suite::Transpose,
        Suite::Lorentz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Appendix => "appendix",
            Suite::Rank64 => "rank64",
            Suite::Count106 => "count106",
            Suite::Structure => "structure",
            Suite::Antihermiticity => "antihermiticity",
            Suite::Commutant => "commutant",
            Suite::Tables => "tables",
            Suite::Closure => "closure",
            Suite::Signatures => "signatures",
            Suite::Transpose => "transpose",
            Suite::Lorentz => "lorentz",
        }
    }

    fn salt(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).unwrap() as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSelector(format!("suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn new(label: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Check { label: label.into(), expected: expected.to_string(), actual: actual.to_string() }
    }

    /// A count-style check whose label carries the actual value.
    fn count(name: &str, expected: usize, actual: usize) -> Self {
        Check::new(format!("{name}={actual}"), expected, actual)
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }

    pub fn lines(&self) -> Vec<String> {
        if self.passed() {
            vec![format!("{} OK", self.label)]
        } else {
            vec![format!("{} FAIL", self.label), format!("  - {}", self.expected), format!("  + {}", self.actual)]
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks.iter().flat_map(Check::lines).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "label": c.label,
                "passed": c.passed(),
                "expected": c.expected,
                "actual": c.actual,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run(suite: Suite, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let s = seed ^ suite.salt().wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let checks = match suite {
        Suite::Appendix => appendix(),
        Suite::Rank64 => rank64(),
        Suite::Count106 => count106(),
        Suite::Structure => structure(s),
        Suite::Antihermiticity => antihermiticity(s),
        Suite::Commutant => commutant(),
        Suite::Tables => tables(),
        Suite::Closure => closure(),
        Suite::Signatures => signatures(),
        Suite::Transpose => transpose(s),
        Suite::Lorentz => lorentz_suite(s),
    };
    SuiteReport { suite, seed, checks, elapsed: start.elapsed() }
}

/// Runs the suites in parallel and returns the reports in the given order.
pub fn run_many(suites: &[Suite], seed: u64) -> Vec<SuiteReport> {
    thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run(s, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    })
}

fn quaternion_action(left: usize, right: usize) -> RealMatrix<R> {
    action_matrix(4, |j| {
        Quaternion::<R>::unit(left).mul(&Quaternion::unit(j)).mul(&Quaternion::unit(right)).coeffs().to_vec()
    })
}

fn octonion_action(f: impl Fn(&Octonion<R>) -> Octonion<R>) -> RealMatrix<R> {
    action_matrix(8, |j| f(&Octonion::unit(j)).c.to_vec())
}

/// Printed unit matrices against the translation ops and against the
/// action read off the multiplication tables.
pub fn appendix() -> Vec<Check> {
    let mut out = Vec::new();
    let mut pair = |label: String, printed: RealMatrix<R>, translated: RealMatrix<R>, table: RealMatrix<R>| {
        out.push(Check::new(format!("{label} translation"), &printed, translated));
        out.push(Check::new(format!("{label} table"), &printed, table));
    };
    for m in 1..4 {
        pair(
            format!("A e{m}"),
            RealMatrix::from_int_rows(&QUATERNION_LEFT_RULES[m - 1]),
            qr_to_r4(&BarredQuaternion::units(m, 0)),
            quaternion_action(m, 0),
        );
        pair(
            format!("A 1|e{m}"),
            RealMatrix::from_int_rows(&QUATERNION_RIGHT_RULES[m - 1]),
            qr_to_r4(&BarredQuaternion::units(0, m)),
            quaternion_action(0, m),
        );
    }
    for m in 1..8 {
        let e = Octonion::<R>::unit(m);
        let rule = OCTONION_LEFT_RULES[m - 1];
        pair(format!("B e{m} {rule}"), rule.expand(), or_to_r8(&LeftBarredOctonion::units(m, 0)), octonion_action(|x| e.mul(x)));
        let rule = OCTONION_RIGHT_RULES[m - 1];
        pair(format!("B 1|e{m} {rule}"), rule.expand(), or_to_r8(&LeftBarredOctonion::units(0, m)), octonion_action(|x| x.mul(&e)));
    }
    out
}

pub fn rank64() -> Vec<Check> {
    let mut out = vec![Check::count("rank", 64, matrix_rank(&left_barred_basis::<R>()))];
    let mut reduced = 0;
    for m in 1..8 {
        for n in (1..8).filter(|&n| n != m) {
            let t = RightBarredTerm::<R>::units(m, n);
            let r = LeftBarredOctonion::reduce_right(&t);
            if (0..8).all(|j| r.apply(&Octonion::unit(j)) == t.apply(&Octonion::unit(j))) {
                reduced += 1;
            }
        }
    }
    out.push(Check::new(format!("right-barred reductions={reduced}/42"), 42, reduced));
    let matrices_agree = (1..8).all(|m| {
        (1..8).all(|n| {
            let t = RightBarredTerm::<R>::units(m, n);
            right_term_to_r8(&t) == or_to_r8(&LeftBarredOctonion::reduce_right(&t))
        })
    });
    out.push(Check::new("right-barred matrices", true, matrices_agree));
    out
}

pub fn count106() -> Vec<Check> {
    let family = OctonionSymbol::family();
    let kinds = |f: fn(&OctonionSymbol) -> bool| family.iter().filter(|s| f(s)).count();
    let singles = kinds(|s| matches!(s, OctonionSymbol::One | OctonionSymbol::Left(_) | OctonionSymbol::RightOne(_)));
    let both = kinds(|s| matches!(s, OctonionSymbol::Both(_)));
    let left = kinds(|s| matches!(s, OctonionSymbol::LeftBarred(..)));
    let right = kinds(|s| matches!(s, OctonionSymbol::RightBarred(..)));
    let images: Vec<RealMatrix<R>> = family.iter().map(|s| s.operator::<R>().to_matrix()).collect();
    vec![
        Check::new("split", "15+7+42+42", format!("{singles}+{both}+{left}+{right}")),
        Check::count("count", 106, family.len()),
        Check::count("span", 64, matrix_rank(&images)),
    ]
}

pub fn structure(seed: u64) -> Vec<Check> {
    let derived = StructureConstants::derive();
    let listed = StructureConstants::from_cycles(&OCTONION_TRIPLES, &EPS4_CYCLES);
    let mut rng = sample::rng(seed);
    let mut alternative = 0;
    for _ in 0..1000 {
        let (x, y, z) = (sample::octonion(&mut rng), sample::octonion(&mut rng), sample::octonion(&mut rng));
        if (associator(&x, &y, &z) + associator(&z, &y, &x)).is_zero() {
            alternative += 1;
        }
    }
    vec![
        Check::new("eps3 from table", true, derived.eps3 == listed.eps3),
        Check::new("eps4 from associators", true, derived.eps4 == listed.eps4),
        Check::new(format!("alternativity={alternative}/1000"), 1000, alternative),
    ]
}

pub fn antihermiticity(seed: u64) -> Vec<Check> {
    let verdict = |a: &LeftBarredOctonion<R>| {
        let v = antihermiticity_test(a);
        match v.witness {
            Some((psi, phi)) => format!("fails at psi={psi}, phi={phi}"),
            None => "antihermitian".to_string(),
        }
    };
    let mut out = vec![
        Check::new("e1", "antihermitian", verdict(&LeftBarredOctonion::units(1, 0))),
        Check::new("1|e1", "antihermitian", verdict(&LeftBarredOctonion::units(0, 1))),
    ];
    for m in 2..8 {
        let v = verdict(&LeftBarredOctonion::units(m, 0));
        let expected = if v.starts_with("fails") { v.clone() } else { "fails".to_string() };
        out.push(Check::new(format!("e{m} {v}"), expected, v));
    }
    for c in CompositeUnit::ALL.into_iter().filter(|c| c.is_antihermitian()) {
        out.push(Check::new(format!("\"{}\"", c.name()), "antihermitian", verdict(&c.operator())));
    }
    let mut rng = sample::rng(seed);
    let fix = correction::<R>(3);
    let annihilated = (0..100)
        .filter(|_| fix.apply(&Octonion::from_quaternion(&sample::quaternion(&mut rng))).is_zero())
        .count();
    out.push(Check::new(format!("correction annihilates={annihilated}/100"), 100, annihilated));
    out
}

pub fn commutant() -> Vec<Check> {
    let family = complex_linear_subalgebra::<R>();
    let e2 = oc_to_c4(&CompositeUnit::E2.operator::<R>()).map(|m| m.to_string()).unwrap_or_else(|e| e.to_string());
    let expected = ComplexMatrix::<R>::from_int_pairs(&[
        [(0, 0), (-1, 0), (0, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 0)],
    ]);
    vec![
        Check::count("dim", 32, family.len()),
        Check::new("product closed", true, is_product_closed(&family)),
        Check::new("oc_to_c4(\"e2\")", expected, e2),
    ]
}

/// One-dimensional generator tables and the kernel counts for `n = 1, 2, 3`.
pub fn tables() -> Vec<Check> {
    let mut out = Vec::new();
    for (family, carrier) in [
        (Family::U, Carrier::Qc),
        (Family::SU, Carrier::Qc),
        (Family::O, Carrier::Qc),
        (Family::Sp, Carrier::Qc),
        (Family::U, Carrier::Qr),
        (Family::O, Carrier::Qr),
        (Family::OTilde, Carrier::Qr),
        (Family::Sp, Carrier::Qr),
        (Family::U, Carrier::Q),
        (Family::O, Carrier::Q),
    ] {
        let spec = GroupSpec::new(family, carrier, 1);
        let listed = listed_generators(family, carrier).expect("listed row");
        let actual = match (solve_generators::<R>(spec), parse_listed::<R>(&listed)) {
            (Ok(basis), Ok(ops)) => format!("dim {} span_equal {}", basis.dim(), basis.spans_same_as(&ops)),
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        };
        out.push(Check::new(format!("listed {spec}"), format!("dim {} span_equal true", listed.len()), actual));
    }
    for n in 1..=3 {
        for (family, carrier) in counted_families() {
            let spec = GroupSpec::new(family, carrier, n);
            let actual = solve_generators::<R>(spec).map(|b| b.dim().to_string()).unwrap_or_else(|e| e.to_string());
            out.push(Check::new(format!("{spec}={actual}"), dimension_formula(spec), actual));
        }
        match su_trace_report::<R>(n) {
            Ok(r) => {
                let label = format!(
                    "SU({n},Qc) complex-trace={} real-part={} matches={}",
                    r.complex_trace_dim,
                    r.real_part_dim,
                    r.matching().map_or("none".into(), |t| format!("{t:?}").to_lowercase()),
                );
                out.push(Check::new(label, r.expected, r.complex_trace_dim));
            }
            Err(e) => out.push(Check::new(format!("SU({n},Qc)"), 4 * n * n - 1, e)),
        }
    }
    out
}

/// Closure and metric invariance of every solved basis for `n = 1, 2`.
pub fn closure() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for (family, carrier) in counted_families() {
            let spec = GroupSpec::new(family, carrier, n);
            let actual = match solve_generators::<R>(spec) {
                Ok(basis) => {
                    let closed = verify_closure(&basis).map_or_else(|e| e.to_string(), |()| "closed".into());
                    let metric = MetricSpec::of(family, carrier.projection());
                    let inv = invariance_check(&basis.basis, metric)
                        .map_or_else(|e| format!("generator {} breaks the metric", e.generator), |()| "invariant".into());
                    format!("{closed}, {inv}")
                }
                Err(e) => e.to_string(),
            };
            out.push(Check::new(spec.to_string(), "closed, invariant", actual));
        }
    }
    out
}

pub fn signatures() -> Vec<Check> {
    [(MetricKind::Dagger, "dagger", (4, 0)), (MetricKind::Transpose, "transpose", (2, 2)), (MetricKind::GTwisted, "g-twisted", (1, 3))]
        .into_iter()
        .map(|(kind, name, (p, m))| {
            let actual = metric_signature::<R>(MetricSpec::new(kind, Projection::Real), 1)
                .map(|s| format!("({}, {})", s.positive, s.negative))
                .unwrap_or_else(|e| e.to_string());
            Check::new(format!("{name} {actual}"), format!("({p}, {m})"), actual)
        })
        .collect()
}

/// The frozen pair on which the entrywise-only transpose breaks
/// `(MN)ᵗ = NᵗMᵗ`.
pub fn naive_transpose_counterexample() -> (OperatorMatrix<R>, OperatorMatrix<R>) {
    let q = |k| Quaternion::<R>::unit(k);
    let m = OperatorMatrix::from_quaternions(2, vec![q(1), Quaternion::zero(), Quaternion::zero(), q(2)]).unwrap();
    let n = OperatorMatrix::from_quaternions(2, vec![q(2), Quaternion::zero(), Quaternion::zero(), q(1)]).unwrap();
    (m, n)
}

pub fn transpose(seed: u64) -> Vec<Check> {
    let mut rng = sample::rng(seed);
    let mut out = Vec::new();
    for n in [2, 3] {
        let ok = (0..100)
            .filter(|_| {
                let (a, b) = (sample::quaternion_matrix(&mut rng, n), sample::quaternion_matrix(&mut rng, n));
                a.mul(&b).transpose() == b.transpose().mul(&a.transpose())
            })
            .count();
        out.push(Check::new(format!("(MN)^t = N^t M^t {n}x{n}={ok}/100"), 100, ok));
    }
    let (m, n) = naive_transpose_counterexample();
    let lhs = m.mul(&n).naive_transpose();
    let rhs = n.naive_transpose().mul(&m.naive_transpose());
    out.push(Check::new(format!("naive transpose breaks with M={m}, N={n}"), true, lhs != rhs));
    out
}

pub fn lorentz_suite(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for k in LorentzKind::ALL {
        out.push(Check::new(format!("{k} in Õ(1,Qr)"), true, lorentz::is_lorentz_generator(&lorentz::generator::<R>(k))));
    }
    let g = |k| lorentz::generator::<R>(k);
    out.push(Check::new(
        "[rot_x, rot_y] = rot_z",
        g(LorentzKind::RotZ),
        g(LorentzKind::RotX).commutator(&g(LorentzKind::RotY)),
    ));

    let mut rng = sample::rng(seed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let ev = lorentz::Event::new(
            sample_f64(&mut rng, 3.0),
            sample_f64(&mut rng, 3.0),
            sample_f64(&mut rng, 3.0),
            sample_f64(&mut rng, 3.0),
        );
        let s0 = lorentz::interval(&ev);
        let mut cur = ev;
        for _ in 0..10 {
            let kind = LorentzKind::ALL[rand::Rng::gen_range(&mut rng, 0..6)];
            cur = lorentz::transform(kind, sample_f64(&mut rng, 2.0), &cur);
        }
        worst = worst.max((lorentz::interval(&cur) - s0).abs() / (1.0 + s0.abs()));
    }
    out.push(Check::new(format!("interval drift {worst:.1e} <= 1e-9"), true, worst <= 1e-9));

    let mut worst = 0.0f64;
    for _ in 0..100 {
        let axis = sample::unit_axis(&mut rng);
        let alpha = sample_f64(&mut rng, 2.0);
        let ev = lorentz::Event::new(0.0, sample_f64(&mut rng, 3.0), sample_f64(&mut rng, 3.0), sample_f64(&mut rng, 3.0));
        let a = lorentz::rotation_about(axis, alpha, &ev);
        let b = lorentz::rotation_sandwich(axis, alpha, &ev);
        let d = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        worst = worst.max(d);
    }
    out.push(Check::new(format!("rotation vs sandwich {worst:.1e} <= 1e-12"), true, worst <= 1e-12));
    out
}

fn sample_f64(rng: &mut impl rand::Rng, bound: f64) -> f64 {
    rng.gen_range(-bound..=bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for report in run_many(&Suite::ALL, sample::DEFAULT_SEED) {
            assert!(report.passed(), "{}: {:#?}", report.suite, report.failures().collect::<Vec<_>>());
            eprintln!("{} {:?}", report.suite, report.elapsed);
        }
    }

    #[test]
    fn rank_line() {
        assert_eq!(run(Suite::Rank64, 1).lines()[0], "rank=64 OK");
        assert_eq!("closure".parse::<Suite>().unwrap(), Suite::Closure);
    }

    #[test]
    fn failure_is_a_diff() {
        let c = Check::new("x", 1, 2);
        assert_eq!(c.lines(), ["x FAIL", "  - 1", "  + 2"]);
    }
}
