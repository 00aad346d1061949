use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypalg::barred_octonion::{CompositeUnit, LeftBarredOctonion};
use hypalg::barred_quaternion::BarredQuaternion;
use hypalg::group_lab::{
    metric_signature, solve_generators, su_trace_report, table_rows, verify_closure, Carrier, Family, GroupSpec,
    MetricSpec, Projection,
};
use hypalg::linalg::RealMatrix;
use hypalg::lorentz::{self, Event, LorentzKind};
use hypalg::matrix_bridge::{
    oc_to_c4, or_to_r8, q_to_c2, qc_to_c2, qr_to_r4, real_matrix_csv, real_matrix_json,
    render_complex, ComplexMatrix,
};
use hypalg::octonion::Octonion;
use hypalg::quaternion::Quaternion;
use hypalg::suites::{self, Suite};
use hypalg::{json as hjson, Rational};

#[derive(Parser)]
#[command(name = "hypalg", version, about = "Quaternionic and octonionic barred-operator algebra")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized checks; falls back to HYPALG_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply quaternions, octonions or barred quaternions left to right.
    Mul(MulArgs),
    /// Translate an operator into a real or complex matrix.
    Translate(TranslateArgs),
    /// Solve the generator basis of a group.
    Generators(GeneratorArgs),
    /// Print the dimensionality table.
    DimTable(DimTableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Apply a rotation or boost to an event.
    Lorentz(LorentzArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("algebra").required(true).args(["quaternion", "octonion", "barred"]))]
struct MulArgs {
    /// Multiply quaternions.
    #[arg(long)]
    quaternion: bool,
    /// Multiply octonions; three or more factors need a grouping.
    #[arg(long)]
    octonion: bool,
    /// Compose barred quaternions as operators.
    #[arg(long)]
    barred: bool,
    /// Group octonion factors as ((a b) c) ...
    #[arg(long, conflicts_with = "group_right")]
    group_left: bool,
    /// Group octonion factors as a (b (c ...)).
    #[arg(long)]
    group_right: bool,
    /// Factors; put `--` before a factor starting with `-`.
    #[arg(required = true)]
    factors: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    /// A quaternion.
    Q,
    /// A barred quaternion.
    Qr,
    /// An octonion.
    O,
    /// A left-barred octonion.
    Or,
    /// A composite unit e2, e4, e6, h3, h5 or h7.
    Composite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    R4,
    R8,
    C2,
    C4,
}

#[derive(Args)]
struct TranslateArgs {
    #[arg(long, value_enum)]
    from: Source,
    #[arg(long, value_enum)]
    to: Target,
    /// Operator text; put `--` before it if it starts with `-`.
    expr: String,
}

#[derive(Args)]
struct GeneratorArgs {
    /// U, SU, O, OTilde or Sp.
    #[arg(long)]
    family: Family,
    /// q, Qc or Qr.
    #[arg(long)]
    carrier: Carrier,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Args)]
struct DimTableArgs {
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    /// Print closed-form counts without solving the kernels.
    #[arg(long)]
    formula_only: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// A suite name or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Args)]
struct LorentzArgs {
    #[arg(long)]
    kind: LorentzKind,
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    /// `ct,x,y,z`.
    #[arg(long, allow_hyphen_values = true)]
    event: String,
}

/// A failed run: usage problems exit with 2, failed verifications with 1.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<hypalg::Error> for Failure {
    fn from(e: hypalg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match seed(cli.seed) {
        Ok(s) => s,
        Err(Failure::Usage(msg)) | Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let fmt = cli.format;
    let result = match cli.command {
        Command::Mul(a) => mul(a, fmt),
        Command::Translate(a) => translate(a, fmt),
        Command::Generators(a) => generators(a, fmt),
        Command::DimTable(a) => dim_table(a, fmt),
        Command::Verify(a) => verify(a, fmt, seed),
        Command::Lorentz(a) => lorentz_cmd(a, fmt),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("HYPALG_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("HYPALG_SEED is not an integer: {v:?}"))),
        Err(_) => Ok(hypalg::sample::DEFAULT_SEED),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn parse_all<T: std::str::FromStr<Err = hypalg::Error>>(items: &[String]) -> Result<Vec<T>, Failure> {
    items.iter().map(|s| s.parse::<T>().map_err(Failure::from)).collect()
}

fn coefficients_out(text: String, coeffs: &[Rational], fmt: Format) -> String {
    match fmt {
        Format::Text => text + "\n",
        Format::Json => pretty(&json!({ "result": text, "coeffs": hjson::scalars(coeffs) })),
        Format::Csv => hjson::csv(coeffs.len(), coeffs),
    }
}

fn mul(a: MulArgs, fmt: Format) -> Outcome {
    if a.quaternion {
        let qs: Vec<Quaternion<Rational>> = parse_all(&a.factors)?;
        let p = qs.iter().skip(1).fold(qs[0].clone(), |acc, q| acc.mul(q));
        return Ok(coefficients_out(p.to_string(), &p.coeffs(), fmt));
    }
    if a.barred {
        let ops: Vec<BarredQuaternion<Rational>> = parse_all(&a.factors)?;
        let p = ops.iter().skip(1).fold(ops[0].clone(), |acc, b| acc.compose(b));
        return Ok(match fmt {
            Format::Json => pretty(&json!({ "result": p.to_string(), "operator": p.to_json() })),
            _ => coefficients_out(p.to_string(), &p.q.iter().flat_map(|q| q.coeffs()).collect::<Vec<_>>(), fmt),
        });
    }
    let os: Vec<Octonion<Rational>> = parse_all(&a.factors)?;
    if os.len() > 2 && !a.group_left && !a.group_right {
        return Err(Failure::Usage("octonion products of three or more factors need --group-left or --group-right".into()));
    }
    let p = if a.group_right {
        os.iter().rev().skip(1).fold(os[os.len() - 1].clone(), |acc, o| o.mul(&acc))
    } else {
        os.iter().skip(1).fold(os[0].clone(), |acc, o| acc.mul(o))
    };
    Ok(coefficients_out(p.to_string(), &p.c, fmt))
}

fn real_out(m: &RealMatrix<Rational>, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{m}\n"),
        Format::Json => pretty(&real_matrix_json(m)),
        Format::Csv => real_matrix_csv(m),
    }
}

fn complex_out(m: &ComplexMatrix<Rational>, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{m}\n"),
        Format::Json => pretty(&m.to_json()),
        Format::Csv => {
            let cells: Vec<String> = m.data().iter().map(render_complex).collect();
            hjson::csv(m.cols(), &cells)
        }
    }
}

fn translate(a: TranslateArgs, fmt: Format) -> Outcome {
    let expr = a.expr.as_str();
    let octonionic = || -> Result<LeftBarredOctonion<Rational>, Failure> {
        Ok(match a.from {
            Source::O => LeftBarredOctonion::left(expr.parse()?),
            Source::Or => expr.parse()?,
            _ => CompositeUnit::from_selector(expr)?.operator(),
        })
    };
    match (a.from, a.to) {
        (Source::Q, Target::R4) => Ok(real_out(&qr_to_r4(&BarredQuaternion::left(expr.parse()?)), fmt)),
        (Source::Q, Target::C2) => Ok(complex_out(&q_to_c2(&expr.parse()?), fmt)),
        (Source::Qr, Target::R4) => Ok(real_out(&qr_to_r4(&expr.parse()?), fmt)),
        (Source::Qr, Target::C2) => Ok(complex_out(&qc_to_c2(&expr.parse()?)?, fmt)),
        (Source::O | Source::Or | Source::Composite, Target::R8) => Ok(real_out(&or_to_r8(&octonionic()?), fmt)),
        (Source::O | Source::Or | Source::Composite, Target::C4) => Ok(complex_out(&oc_to_c4(&octonionic()?)?, fmt)),
        _ => Err(Failure::Usage("quaternionic sources translate to r4 or c2, octonionic ones to r8 or c4".into())),
    }
}

fn generators(a: GeneratorArgs, fmt: Format) -> Outcome {
    let spec = GroupSpec::new(a.family, a.carrier, a.n);
    let basis = solve_generators::<Rational>(spec)?;
    let closure = verify_closure(&basis);
    let projection = a.carrier.projection();
    let signature = if projection == Projection::Real {
        metric_signature::<Rational>(MetricSpec::of(a.family, projection), a.n).ok()
    } else {
        None
    };
    let out = match fmt {
        Format::Json => pretty(&basis.to_json(&closure, signature)),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{spec} dim={}", basis.dim()).unwrap();
            if let Some(note) = &basis.notice {
                writeln!(s, "note: {note}").unwrap();
            }
            for (i, g) in basis.basis.iter().enumerate() {
                writeln!(s, "A{i} = {g}").unwrap();
            }
            match &closure {
                Ok(()) => writeln!(s, "closure: ok").unwrap(),
                Err(e) => writeln!(s, "closure: {e}").unwrap(),
            }
            if let Some(sig) = signature {
                writeln!(s, "metric signature: ({}, {})", sig.positive, sig.negative).unwrap();
            }
            s
        }
        Format::Csv => {
            let mut s = String::new();
            for g in &basis.basis {
                let params = g.params(spec.resolved().0.carrier)?;
                s += &hjson::csv(params.len(), &params);
            }
            s
        }
    };
    if closure.is_err() {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

fn dim_table(a: DimTableArgs, fmt: Format) -> Outcome {
    if a.n_max == 0 {
        return Err(Failure::Usage("--n-max must be at least 1".into()));
    }
    let ns: Vec<usize> = (1..=a.n_max).collect();
    let mut rows = Vec::new();
    let mut mismatch = false;
    for (i, row) in table_rows(1).into_iter().enumerate() {
        let (family, carrier) = (row.spec.family, row.spec.carrier);
        let name = format!("{family}(n,{carrier})");
        let mut cells = Vec::new();
        for &n in &ns {
            let spec = GroupSpec::new(family, carrier, n);
            let formula = hypalg::group_lab::dimension_formula(spec);
            let kernel = if a.formula_only { None } else { Some(solve_generators::<Rational>(spec)?.dim()) };
            mismatch |= kernel.is_some_and(|k| k != formula);
            cells.push((formula, kernel));
        }
        rows.push((i, name, row, cells));
    }
    let su: Vec<_> = if a.formula_only {
        Vec::new()
    } else {
        ns.iter().map(|&n| su_trace_report::<Rational>(n)).collect::<Result<_, _>>()?
    };
    let out = match fmt {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(_, name, row, cells)| {
                    json!({
                        "group": name,
                        "same_as": row.same_as.map(|s| format!("{}(n,{})", s.family, s.carrier)),
                        "counterpart": (row.same_as.is_none()).then_some(row.counterpart),
                        "formula": (row.same_as.is_none()).then_some(row.formula),
                        "counts": cells.iter().zip(&ns).map(|((f, k), n)| json!({"n": n, "formula": f, "kernel": k})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let su: Vec<Value> = su
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "complex_trace": r.complex_trace_dim,
                        "real_part_trace": r.real_part_dim,
                        "expected": r.expected,
                        "matches": r.matching().map(|t| format!("{t:?}").to_lowercase()),
                    })
                })
                .collect();
            pretty(&json!({ "rows": rows, "su_trace_readings": su }))
        }
        Format::Csv => {
            let mut s = String::from("group,relation,counterpart,formula");
            for n in &ns {
                write!(s, ",n={n}").unwrap();
            }
            s.push('\n');
            for (_, name, row, cells) in &rows {
                match row.same_as {
                    Some(t) => write!(s, "{name},==,{}(n,{}),", t.family, t.carrier).unwrap(),
                    None => write!(s, "{name},<->,{},{}", row.counterpart, row.formula).unwrap(),
                }
                for (f, k) in cells {
                    write!(s, ",{}", k.unwrap_or(*f)).unwrap();
                }
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            write!(s, "{:<12} {:<3} {:<16} {:<10}", "group", "", "counterpart", "formula").unwrap();
            for n in &ns {
                write!(s, " {:>6}", format!("n={n}")).unwrap();
            }
            s.push('\n');
            let mut last_family = None;
            for (_, name, row, cells) in &rows {
                let block = |f: Family| if f == Family::OTilde { Family::O } else { f };
                if last_family.is_some_and(|f| block(f) != block(row.spec.family)) {
                    s.push('\n');
                }
                last_family = Some(row.spec.family);
                match row.same_as {
                    Some(t) => write!(s, "{name:<12} {:<3} {:<16} {:<10}", "==", format!("{}(n,{})", t.family, t.carrier), "").unwrap(),
                    None => write!(s, "{name:<12} {:<3} {:<16} {:<10}", "<->", row.counterpart, row.formula).unwrap(),
                }
                for (f, k) in cells {
                    let cell = match k {
                        Some(k) if k != f => format!("{k}!={f}"),
                        _ => f.to_string(),
                    };
                    write!(s, " {cell:>6}").unwrap();
                }
                s.push('\n');
            }
            if !su.is_empty() {
                s.push('\n');
                for r in &su {
                    let matches = r.matching().map_or("neither".to_string(), |t| format!("{t:?}").to_lowercase());
                    writeln!(
                        s,
                        "SU({},Qc): complex trace -> {}, real part only -> {}; {} matches {}",
                        r.n, r.complex_trace_dim, r.real_part_dim, matches, r.expected
                    )
                    .unwrap();
                }
            }
            s
        }
    };
    if mismatch {
        return Err(Failure::Verification(out));
    }
    Ok(out)
}

fn verify(a: VerifyArgs, fmt: Format, seed: u64) -> Outcome {
    let chosen: Vec<Suite> = match a.suite.as_str() {
        "all" => Suite::ALL.to_vec(),
        other => vec![other.parse()?],
    };
    let reports = suites::run_many(&chosen, seed);
    let passed = reports.iter().all(|r| r.passed());
    let out = match fmt {
        Format::Json => pretty(&json!({
            "seed": seed,
            "passed": passed,
            "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("suite,check,passed\n");
            for r in &reports {
                for c in &r.checks {
                    writeln!(s, "{},\"{}\",{}", r.suite, c.label.replace('"', "\"\""), c.passed()).unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let many = reports.len() > 1;
            for r in &reports {
                if many {
                    writeln!(s, "[{}]", r.suite).unwrap();
                }
                for line in r.lines() {
                    writeln!(s, "{line}").unwrap();
                }
            }
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
            if failed.is_empty() {
                writeln!(s, "seed={seed}: {} suite(s) passed", reports.len()).unwrap();
            } else {
                writeln!(s, "seed={seed}: failed {}", failed.join(", ")).unwrap();
            }
            s
        }
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn lorentz_cmd(a: LorentzArgs, fmt: Format) -> Outcome {
    let parts: Vec<f64> = a
        .event
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--event expects ct,x,y,z, got {:?}", a.event)))?;
    let [ct, x, y, z] = parts[..] else {
        return Err(Failure::Usage(format!("--event expects four components, got {}", parts.len())));
    };
    if !a.theta.is_finite() || parts.iter().any(|v| !v.is_finite()) {
        return Err(Failure::Usage("theta and the event must be finite".into()));
    }
    let ev = Event::new(ct, x, y, z);
    let out = lorentz::transform(a.kind, a.theta, &ev);
    let (before, after) = (lorentz::interval(&ev), lorentz::interval(&out));
    let drift = (after - before).abs();
    Ok(match fmt {
        Format::Json => pretty(&json!({
            "kind": a.kind.name(),
            "theta": a.theta,
            "event": ev.coeffs(),
            "transformed": out.coeffs(),
            "interval_before": before,
            "interval_after": after,
            "interval_drift": drift,
        })),
        Format::Csv => {
            let c = out.coeffs();
            format!("ct,x,y,z,interval_drift\n{},{},{},{},{drift:e}\n", c[0], c[1], c[2], c[3])
        }
        Format::Text => {
            let c = out.coeffs();
            format!(
                "{} theta={}: ({}, {}, {}, {})\ninterval {before} -> {after} (drift {drift:e})\n",
                a.kind, a.theta, c[0], c[1], c[2], c[3]
            )
        }
    })
}
