//! The acceptance battery. Run with `--nocapture` to see one line per
//! criterion.

use std::time::{Duration, Instant};

use hypalg::barred_octonion::{antihermiticity_test, correction, CompositeUnit, LeftBarredOctonion, OctonionSymbol, RightBarredTerm};
use hypalg::barred_quaternion::BarredQuaternion;
use hypalg::group_lab::{
    counted_families, dimension_formula, listed_generators, metric_signature, parse_listed, solve_generators,
    su_trace_report, Carrier, Family, GroupSpec, MetricKind, MetricSpec, OperatorMatrix, Projection,
};
use hypalg::linalg::RealMatrix;
use hypalg::lorentz::{self, Event, LorentzKind};
use hypalg::matrix_bridge::{
    complex_linear_subalgebra, is_product_closed, oc_to_c4, or_to_r8, qr_to_r4, right_term_to_r8, ComplexMatrix,
    OCTONION_LEFT_RULES, OCTONION_RIGHT_RULES, QUATERNION_LEFT_RULES, QUATERNION_RIGHT_RULES,
};
use hypalg::octonion::{associator, Octonion, StructureConstants, EPS4_CYCLES};
use hypalg::quaternion::Quaternion;
use hypalg::sample::{self, DEFAULT_SEED};
use hypalg::table::OCTONION_TRIPLES;
use hypalg::Rational;
use rand::Rng;

type R = Rational;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Column `j` is the image of the `j`-th basis unit.
fn action(dim: usize, image: impl Fn(usize) -> Vec<R>) -> RealMatrix<R> {
    let mut m = RealMatrix::zeros(dim, dim);
    for j in 0..dim {
        for (i, v) in image(j).into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

/// Rank of a family of matrices, each flattened into one row.
fn span_dim(family: &[RealMatrix<R>]) -> usize {
    let rows = family.iter().map(|m| m.data().to_vec()).collect();
    RealMatrix::from_rows(rows).unwrap().rank()
}

fn appendix_fidelity() -> Outcome {
    let q = |k| Quaternion::<R>::unit(k);
    let o = |k| Octonion::<R>::unit(k);
    let mut bad = Vec::new();
    for m in 1..4 {
        let printed = RealMatrix::from_int_rows(&QUATERNION_LEFT_RULES[m - 1]);
        let direct = action(4, |j| q(m).mul(&q(j)).coeffs().to_vec());
        if qr_to_r4(&BarredQuaternion::units(m, 0)) != printed || direct != printed {
            bad.push(format!("e{m}"));
        }
        let printed = RealMatrix::from_int_rows(&QUATERNION_RIGHT_RULES[m - 1]);
        let direct = action(4, |j| q(j).mul(&q(m)).coeffs().to_vec());
        if qr_to_r4(&BarredQuaternion::units(0, m)) != printed || direct != printed {
            bad.push(format!("1|e{m}"));
        }
    }
    for m in 1..8 {
        let printed = OCTONION_LEFT_RULES[m - 1].expand::<R>();
        let direct = action(8, |j| o(m).mul(&o(j)).c.to_vec());
        if or_to_r8(&LeftBarredOctonion::units(m, 0)) != printed || direct != printed {
            bad.push(format!("e{m}"));
        }
        let printed = OCTONION_RIGHT_RULES[m - 1].expand::<R>();
        let direct = action(8, |j| o(j).mul(&o(m)).c.to_vec());
        if or_to_r8(&LeftBarredOctonion::units(0, m)) != printed || direct != printed {
            bad.push(format!("1|e{m}"));
        }
    }
    outcome(bad.is_empty(), format!("6 quaternion and 14 octonion units, mismatches {bad:?}"))
}

fn rank_64() -> Outcome {
    let basis: Vec<_> = (0..8)
        .flat_map(|l| (0..8).map(move |m| or_to_r8(&LeftBarredOctonion::<R>::units(l, m))))
        .collect();
    let rank = span_dim(&basis);
    let mut reduced = 0;
    for m in 1..8 {
        for n in (1..8).filter(|&n| n != m) {
            let t = RightBarredTerm::<R>::units(m, n);
            let r = LeftBarredOctonion::reduce_right(&t);
            let pointwise = (0..8).all(|j| (r.apply(&Octonion::unit(j)) - t.apply(&Octonion::unit(j))).is_zero());
            if pointwise && or_to_r8(&r) == right_term_to_r8(&t) {
                reduced += 1;
            }
        }
    }
    outcome(rank == 64 && reduced == 42, format!("rank {rank}, {reduced}/42 right-barred terms reduce"))
}

fn counting() -> Outcome {
    let family = OctonionSymbol::family();
    let count = |f: fn(&OctonionSymbol) -> bool| family.iter().filter(|s| f(s)).count();
    let split = [
        count(|s| matches!(s, OctonionSymbol::One | OctonionSymbol::Left(_) | OctonionSymbol::RightOne(_))),
        count(|s| matches!(s, OctonionSymbol::Both(_))),
        count(|s| matches!(s, OctonionSymbol::LeftBarred(..))),
        count(|s| matches!(s, OctonionSymbol::RightBarred(..))),
    ];
    let images: Vec<_> = family.iter().map(|s| s.operator::<R>().to_matrix()).collect();
    let span = span_dim(&images);
    outcome(
        split == [15, 7, 42, 42] && family.len() == 106 && span == 64,
        format!("{}+{}+{}+{} = {} symbols, span {span}", split[0], split[1], split[2], split[3], family.len()),
    )
}

fn generator_tables() -> Outcome {
    let rows = [
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
    ];
    let mut bad = Vec::new();
    for (family, carrier) in rows {
        let spec = GroupSpec::new(family, carrier, 1);
        let listed = listed_generators(family, carrier).expect("listed row");
        let ops = parse_listed::<R>(&listed).expect("listed generators parse");
        let ok = solve_generators::<R>(spec).is_ok_and(|b| b.dim() == listed.len() && b.spans_same_as(&ops));
        if !ok {
            bad.push(spec.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} rows, mismatches {bad:?}", rows.len()))
}

fn dimensionality() -> Outcome {
    let mut bad = Vec::new();
    let mut dims = Vec::new();
    for n in 1..=3 {
        for (family, carrier) in counted_families() {
            let spec = GroupSpec::new(family, carrier, n);
            let dim = solve_generators::<R>(spec).map(|b| b.dim()).unwrap_or(usize::MAX);
            if dim != dimension_formula(spec) {
                bad.push(format!("{spec}: {dim}"));
            }
            dims.push((spec, dim));
        }
    }
    let lookup = |f, c, n| dims.iter().find(|(s, _)| *s == GroupSpec::new(f, c, n)).map(|d| d.1);
    let spot = [
        lookup(Family::U, Carrier::Qc, 2) == Some(16),
        lookup(Family::O, Carrier::Qr, 3) == Some(66),
        lookup(Family::Sp, Carrier::Qr, 2) == Some(36),
    ];
    let mut su = Vec::new();
    for n in 1..=3 {
        match su_trace_report::<R>(n) {
            Ok(r) => {
                let flagged = r.matching().map_or("none".to_string(), |t| format!("{t:?}").to_lowercase());
                if r.complex_trace_dim != 4 * n * n - 1 {
                    bad.push(format!("SU({n},Qc)"));
                }
                su.push(format!("SU({n}) {}/{} flags {flagged}", r.complex_trace_dim, r.real_part_dim));
            }
            Err(e) => bad.push(format!("SU({n},Qc): {e}")),
        }
    }
    outcome(
        bad.is_empty() && spot.iter().all(|&b| b) && counted_families().len() == 11,
        format!("{} kernels, mismatches {bad:?}; {}", dims.len(), su.join(", ")),
    )
}

fn metric_signatures() -> Outcome {
    let got: Vec<_> = [MetricKind::Dagger, MetricKind::Transpose, MetricKind::GTwisted]
        .into_iter()
        .map(|k| metric_signature::<R>(MetricSpec::new(k, Projection::Real), 1).map(|s| (s.positive, s.negative)).ok())
        .collect();
    outcome(got == [Some((4, 0)), Some((2, 2)), Some((1, 3))], format!("{got:?}"))
}

fn structure_constants() -> Outcome {
    let listed = StructureConstants::from_cycles(&OCTONION_TRIPLES, &EPS4_CYCLES);
    let two = R::from_integer(2.into());
    let mut mismatched = 0;
    for m in 1..8 {
        for n in 1..8 {
            for p in 1..8 {
                let a = associator(&Octonion::<R>::unit(m), &Octonion::unit(n), &Octonion::unit(p));
                for s in 1..8 {
                    if a.c[s] != two.clone() * R::from_integer(listed.eps4[m][n][p][s].into()) {
                        mismatched += 1;
                    }
                }
            }
        }
    }
    let mut rng = sample::rng(DEFAULT_SEED);
    let alternative = (0..1000)
        .filter(|_| {
            let (x, y, z) = (sample::octonion(&mut rng), sample::octonion(&mut rng), sample::octonion(&mut rng));
            (associator(&x, &y, &z) + associator(&z, &y, &x)).is_zero()
        })
        .count();
    let derived = StructureConstants::derive() == listed;
    outcome(
        mismatched == 0 && derived && alternative == 1000,
        format!("{mismatched} of 2401 eps4 entries differ, derived table matches {derived}, alternativity {alternative}/1000"),
    )
}

fn antihermiticity() -> Outcome {
    let e = |l, m| antihermiticity_test(&LeftBarredOctonion::<R>::units(l, m));
    let mut ok = e(1, 0).antihermitian && e(0, 1).antihermitian;
    let mut witnesses = Vec::new();
    for m in 2..8 {
        let v = e(m, 0);
        match v.witness {
            Some((psi, phi)) if !v.antihermitian => witnesses.push(format!("e{m} at ({psi}, {phi})")),
            _ => ok = false,
        }
    }
    for c in [CompositeUnit::E2, CompositeUnit::E4, CompositeUnit::E6] {
        ok &= antihermiticity_test(&c.operator::<R>()).antihermitian;
    }
    let mut rng = sample::rng(DEFAULT_SEED);
    let fix = correction::<R>(3);
    let annihilated = (0..100)
        .filter(|_| fix.apply(&Octonion::from_quaternion(&sample::quaternion(&mut rng))).is_zero())
        .count();
    println!("    witnesses: {}", witnesses.join("; "));
    outcome(ok && witnesses.len() == 6 && annihilated == 100, format!("6 witnesses, correction annihilates {annihilated}/100"))
}

fn commutant() -> Outcome {
    let family = complex_linear_subalgebra::<R>();
    let dim = span_dim(&family);
    let closed = is_product_closed(&family);
    let expected = ComplexMatrix::<R>::from_int_pairs(&[
        [(0, 0), (-1, 0), (0, 0), (0, 0)],
        [(1, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 0)],
        [(0, 0), (0, 0), (0, 0), (0, 0)],
    ]);
    let e2 = oc_to_c4(&CompositeUnit::E2.operator::<R>()).ok();
    let matches = e2.as_ref() == Some(&expected);
    outcome(
        family.len() == 32 && dim == 32 && closed && matches,
        format!("dim {dim}, product closed {closed}, oc_to_c4(\"e2\") matches {matches}"),
    )
}

fn lorentz_checks() -> Outcome {
    let mut rng = sample::rng(DEFAULT_SEED);
    let mut drift = 0.0f64;
    for _ in 0..100 {
        let c: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-3.0..=3.0));
        let ev = Event::from_coeffs(c);
        let s0 = lorentz::interval(&ev);
        let mut cur = ev;
        for _ in 0..10 {
            let kind = LorentzKind::ALL[rng.gen_range(0..6)];
            cur = lorentz::transform(kind, rng.gen_range(-2.0..=2.0), &cur);
        }
        drift = drift.max((lorentz::interval(&cur) - s0).abs() / (1.0 + s0.abs()));
    }
    let mut rng = sample::rng(DEFAULT_SEED ^ 1);
    let mut sandwich = 0.0f64;
    for _ in 0..100 {
        let axis = sample::unit_axis(&mut rng);
        let alpha = rng.gen_range(-2.0..=2.0);
        let ev = Event::new(0.0, rng.gen_range(-3.0..=3.0), rng.gen_range(-3.0..=3.0), rng.gen_range(-3.0..=3.0));
        let a = lorentz::rotation_about(axis, alpha, &ev);
        let b = lorentz::rotation_sandwich(axis, alpha, &ev);
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            sandwich = sandwich.max((x - y).abs());
        }
    }
    outcome(
        drift <= 1e-9 && sandwich <= 1e-12,
        format!("relative interval drift {drift:.2e} (<= 1e-9), sandwich gap {sandwich:.2e} (<= 1e-12)"),
    )
}

fn transpose_laws() -> Outcome {
    let mut rng = sample::rng(DEFAULT_SEED);
    let mut held = [0; 2];
    for (slot, n) in [2, 3].into_iter().enumerate() {
        for _ in 0..100 {
            let (a, b) = (sample::quaternion_matrix(&mut rng, n), sample::quaternion_matrix(&mut rng, n));
            if a.mul(&b).transpose() == b.transpose().mul(&a.transpose()) {
                held[slot] += 1;
            }
        }
    }
    let q = |k| Quaternion::<R>::unit(k);
    let z = Quaternion::<R>::zero;
    let m = OperatorMatrix::from_quaternions(2, vec![q(1), z(), z(), q(2)]).unwrap();
    let n = OperatorMatrix::from_quaternions(2, vec![q(2), z(), z(), q(1)]).unwrap();
    let naive_breaks = m.mul(&n).naive_transpose() != n.naive_transpose().mul(&m.naive_transpose());
    let law_holds = m.mul(&n).transpose() == n.transpose().mul(&m.transpose());
    outcome(
        held == [100, 100] && naive_breaks && law_holds,
        format!("2x2 {}/100, 3x3 {}/100, naive transpose breaks on diag(e1,e2)·diag(e2,e1) {naive_breaks}", held[0], held[1]),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 11] = [
        ("appendix fidelity", appendix_fidelity, Some(Duration::from_secs(1))),
        ("rank 64", rank_64, Some(Duration::from_secs(5))),
        ("counting", counting, None),
        ("generator tables", generator_tables, None),
        ("dimensionality table", dimensionality, Some(Duration::from_secs(60))),
        ("metric signatures", metric_signatures, None),
        ("structure constants", structure_constants, None),
        ("antihermiticity", antihermiticity, None),
        ("commutant", commutant, None),
        ("lorentz", lorentz_checks, Some(Duration::from_secs(5))),
        ("transpose laws", transpose_laws, None),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let passed = out.passed && in_time;
        let budget = limit.map_or(String::new(), |l| format!(" of {l:?}"));
        println!(
            "{} criterion {}: {name}: {} [{elapsed:.2?}{budget}]",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            out.detail
        );
        if !passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
