//! Command-line front end.
//!
//! Datum grammar: `<letter><rank>[:adjoint|sc|gl][:d=<copies>][:sigma=<perm-or-order>]`,
//! for example `A2`, `A3:gl:d=2`, `D4:sigma=3`, `A4:sigma=2`. The letter is
//! one of `A B C D E`; the form defaults to adjoint. `sigma` is either an order
//! (2 or 3, naming the diagram automorphism) or a 1-based permutation of the
//! simple roots such as `sigma=3,2,1`.
//!
//! `b` grammar: comma-separated words, one per copy of a product datum, or a
//! single word acting on the last copy. A word is a `*`-product of `id`,
//! `w<i>` or `w<i>^k` (the length-zero element attached to the `i`-th
//! fundamental coweight), or for `gl` data an integer `k` meaning `ω₁^k`.
//!
//! Coweights are comma-separated integers in the coordinates of `Y`; for
//! products, per-copy tuples may be separated by `;` or concatenated.
//!
//! Output formats: `json` (every document carries `"schema": 1`), `csv`, and
//! an aligned `table`. CSV columns per command:
//!
//! | command      | columns |
//! |--------------|---------|
//! | classify     | lambda, dagger, natural, in_a, stratum_dim, is_top, is_small, flat, class_id |
//! | count        | datum, b, mu, dim, window, classes, crystal, stabilized, verdict |
//! | crystal      | weight, multiplicity |
//! | tensor       | highest_weight, multiplicity |
//! | restrict     | levi_highest_weight, multiplicity |
//! | superbasic   | lambda, flat, w, lengths, dim_value, r_count, is_top, coxeter, flat_sum_ok, nonneg_ok |
//! | appendixb    | datum, b, j, expected_j, candidates, visited, all_fixed, verdict, wall_ms |
//! | suite        | id, name, pass, elapsed_ms, detail |
//!
//! Exit status: 0 when every asserted identity holds, 1 on an identity
//! violation, 2 on malformed input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::adlv::superbasic::Superbasic;
use crate::adlv::Context;
use crate::affine::BasicElement;
use crate::appendixb::{certify, certify_all, Certification, Mode};
use crate::crystal::{crystal_generate, restrict_levi, tensor_decompose, DEFAULT_CAP};
use crate::isocrystal::ul_best;
use crate::rootdata::{fmt_vec, parse_coweight, DatumSpec, RootDatum, RootId};
use crate::suite::{run_suite, weyl_dimension, SuiteOptions};
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "adlvkit", version, about = "Stratum combinatorics of affine Deligne-Lusztig varieties")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug)]
pub struct Case {
    /// Datum label, e.g. `A2:gl` or `D4`.
    pub datum: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub mu: String,
    /// Window bound; overrides `ADLVKIT_WINDOW`.
    #[arg(long)]
    pub window: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stratum data for one coweight or every coweight in a window.
    Classify {
        #[command(flatten)]
        case: Case,
        #[arg(long)]
        lambda: Option<String>,
        /// Only rows with a top-dimensional stratum.
        #[arg(long)]
        top_only: bool,
    },
    /// Orbits of top strata, checked against a crystal weight multiplicity.
    Count {
        #[command(flatten)]
        case: Case,
    },
    /// Weight table of a path crystal.
    Crystal {
        datum: String,
        #[arg(long)]
        mu: String,
    },
    /// Decompose a tensor product of crystals.
    Tensor {
        datum: String,
        #[arg(long, required = true)]
        mu: Vec<String>,
    },
    /// Branch a crystal to a standard Levi (1-based simple indices).
    Restrict {
        datum: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_delimiter = ',')]
        j: Vec<usize>,
    },
    /// Superbasic tables for a product of general linear groups.
    Superbasic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Minimal Levi certification.
    Appendixb {
        datum: String,
        #[arg(long, conflicts_with = "all_b", required_unless_present = "all_b")]
        b: Option<String>,
        #[arg(long)]
        all_b: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Pruned)]
        mode: ModeArg,
    },
    /// The full verification battery.
    Suite {
        #[arg(long, default_value_t = 10_000)]
        fuzz: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Skip the full Weyl group scan for E7.
        #[arg(long)]
        skip_exhaustive: bool,
        #[arg(long)]
        window: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Pruned,
    Exhaustive,
}

/// Rendered result of one command.
pub struct Report {
    pub ok: bool,
    pub json: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("csv");
                for r in &self.rows {
                    w.write_record(r).expect("csv");
                }
                String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
            }
            Format::Table => {
                let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
                for r in &self.rows {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut s = String::new();
                let mut put = |cells: Vec<&str>| {
                    let line: Vec<String> =
                        cells.iter().zip(&width).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                    let _ = writeln!(s, "{}", line.join("  ").trim_end());
                };
                put(self.columns.clone());
                put(width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(|x| x.as_str()).collect());
                for r in &self.rows {
                    put(r.iter().map(|x| x.as_str()).collect());
                }
                if !self.ok {
                    s.push_str("verdict: FAIL\n");
                }
                s
            }
        }
    }
}

fn parse_tuple(s: &str) -> Result<Vec<i64>, Error> {
    let mut out = Vec::new();
    for part in s.split(';').filter(|p| !p.trim().is_empty()) {
        out.extend(parse_coweight(part)?);
    }
    Ok(out)
}

fn load(label: &str) -> Result<(DatumSpec, RootDatum), Error> {
    let spec: DatumSpec = label.parse()?;
    let d = RootDatum::build(&spec)?;
    Ok((spec, d))
}

fn check_len(d: &RootDatum, v: &[i64], what: &str) -> Result<(), Error> {
    if v.len() != d.rank {
        return Err(Error::Parse(format!("{what} has {} entries, datum rank is {}", v.len(), d.rank)));
    }
    Ok(())
}

fn root_str(d: &RootDatum, a: RootId) -> String {
    let mut s = String::new();
    for (i, &c) in d.coeffs(a).iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        let _ = write!(s, "{sign}{mag}a{}", i + 1);
    }
    s
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn cell(v: &[i64]) -> String {
    fmt_vec(v)
}

fn with_schema(command: &str, ok: bool, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema".into(), json!(1));
    obj.insert("command".into(), json!(command));
    obj.insert("ok".into(), json!(ok));
    body
}

fn window_for(case: &Case, d: &RootDatum, mu: &[i64]) -> Result<i64, Error> {
    if let Some(w) = case.window {
        if w < 1 {
            return Err(Error::Parse("window must be at least 1".into()));
        }
        return Ok(w);
    }
    crate::suite::effective_window(d, mu)
}

fn classify(case: &Case, lambda: Option<&str>, top_only: bool) -> Result<Report, Error> {
    let (_, d) = load(&case.datum)?;
    let mu = parse_tuple(&case.mu)?;
    check_len(&d, &mu, "mu")?;
    let b = BasicElement::parse(&d, &case.b)?;
    let ctx = Context::new(&d, &mu, b)?;
    let exact = ctx.exact_classes()?;
    let points = match lambda {
        Some(l) => {
            let l = parse_tuple(l)?;
            check_len(&d, &l, "lambda")?;
            vec![l]
        }
        None => ctx.window_points(window_for(case, &d, &mu)?),
    };
    let mut reports = Vec::new();
    for l in &points {
        let mut r = ctx.classify(l)?;
        if top_only && r.is_top != Some(true) {
            continue;
        }
        if r.is_top == Some(true) {
            r.class_id = ctx.class_of(&exact, l);
        }
        reports.push(r);
    }
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                cell(&r.lambda),
                cell(&r.dagger),
                cell(&r.natural),
                r.in_a.to_string(),
                opt(&r.stratum_dim),
                opt(&r.is_top),
                opt(&r.is_small),
                r.flat.as_deref().map(cell).unwrap_or_default(),
                opt(&r.class_id),
            ]
        })
        .collect();
    let json_rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("json");
            v["r_set"] = json!(r.r_set.iter().map(|&a| root_str(&d, a)).collect::<Vec<_>>());
            v["pi_of"] = json!(r.pi_of.as_ref().map(|p| p.iter().map(|&a| root_str(&d, a)).collect::<Vec<_>>()));
            v
        })
        .collect();
    let body = json!({ "datum": d.label, "b": case.b, "mu": mu, "dim": ctx.dim, "rows": json_rows });
    Ok(Report {
        ok: true,
        json: with_schema("classify", true, body),
        columns: vec!["lambda", "dagger", "natural", "in_a", "stratum_dim", "is_top", "is_small", "flat", "class_id"],
        rows,
    })
}

fn count(case: &Case) -> Result<Report, Error> {
    let (_, d) = load(&case.datum)?;
    let mu = parse_tuple(&case.mu)?;
    check_len(&d, &mu, "mu")?;
    let b = BasicElement::parse(&d, &case.b)?;
    let ctx = Context::new(&d, &mu, b.clone())?;
    if case.window.is_some_and(|w| w < 1) {
        return Err(Error::Parse("window must be at least 1".into()));
    }
    let cp = ctx.count_top_classes(case.window)?;
    let ul = ul_best(&d, &b)?;
    let (dom, _) = d.dominant_rep(&mu);
    let crystal = crystal_generate(&d, &dom, DEFAULT_CAP)?.weight_mult_class(&d, &ul.rep);
    let ok = cp.classes == crystal && cp.stabilized;
    let verdict = if cp.classes != crystal {
        "MISMATCH"
    } else if !cp.stabilized {
        "UNSTABLE"
    } else {
        "OK"
    };
    let body = json!({
        "datum": d.label, "b": case.b, "mu": mu, "dim": ctx.dim,
        "window": cp.window_bound, "window_counts": cp.window_counts, "stabilized": cp.stabilized,
        "classes": cp.classes, "representatives": cp.representatives,
        "small_representatives": cp.small_representatives,
        "ul": ul.rep, "crystal": crystal, "verdict": verdict,
        "diff": if ok { Value::Null } else { json!({ "classes": cp.classes, "crystal": crystal }) },
    });
    Ok(Report {
        ok,
        json: with_schema("count", ok, body),
        columns: vec!["datum", "b", "mu", "dim", "window", "classes", "crystal", "stabilized", "verdict"],
        rows: vec![vec![
            d.label.clone(),
            case.b.clone(),
            cell(&mu),
            opt(&ctx.dim),
            cp.window_bound.to_string(),
            cp.classes.to_string(),
            crystal.to_string(),
            cp.stabilized.to_string(),
            verdict.into(),
        ]],
    })
}

fn crystal(datum: &str, mu: &str) -> Result<Report, Error> {
    let (_, d) = load(datum)?;
    let mu = parse_tuple(mu)?;
    check_len(&d, &mu, "mu")?;
    if !d.is_dominant(&mu) {
        return Err(Error::Precondition(format!("{} is not dominant", cell(&mu))));
    }
    let c = crystal_generate(&d, &mu, DEFAULT_CAP)?;
    let ch = c.character();
    let weyl = weyl_dimension(&d, &mu);
    let ok = c.len() as u128 == weyl;
    let body = json!({
        "datum": d.label, "mu": mu, "size": c.len(), "weyl_dimension": weyl,
        "edges": c.edges.len(),
        "weights": ch.iter().map(|(w, m)| json!({ "weight": w, "multiplicity": m })).collect::<Vec<_>>(),
    });
    Ok(Report {
        ok,
        json: with_schema("crystal", ok, body),
        columns: vec!["weight", "multiplicity"],
        rows: ch.iter().map(|(w, m)| vec![cell(w), m.to_string()]).collect(),
    })
}

fn tensor(datum: &str, mus: &[String]) -> Result<Report, Error> {
    let (_, d) = load(datum)?;
    let parts: Vec<Vec<i64>> = mus.iter().map(|m| parse_tuple(m)).collect::<Result<_, _>>()?;
    for p in &parts {
        check_len(&d, p, "mu")?;
    }
    let dec = tensor_decompose(&d, &parts, DEFAULT_CAP)?;
    let body = json!({
        "datum": d.label, "factors": parts,
        "decomposition": dec.iter().map(|(w, m)| json!({ "highest_weight": w, "multiplicity": m })).collect::<Vec<_>>(),
    });
    Ok(Report {
        ok: true,
        json: with_schema("tensor", true, body),
        columns: vec!["highest_weight", "multiplicity"],
        rows: dec.iter().map(|(w, m)| vec![cell(w), m.to_string()]).collect(),
    })
}

fn restrict(datum: &str, mu: &str, j: &[usize]) -> Result<Report, Error> {
    let (_, d) = load(datum)?;
    let mu = parse_tuple(mu)?;
    check_len(&d, &mu, "mu")?;
    if j.iter().any(|&i| i == 0 || i > d.num_simple()) {
        return Err(Error::Parse(format!("J indices must lie in 1..={}", d.num_simple())));
    }
    let j0: Vec<usize> = j.iter().map(|i| i - 1).collect();
    let table = restrict_levi(&d, &mu, &j0, DEFAULT_CAP)?;
    let body = json!({
        "datum": d.label, "mu": mu, "j": j,
        "constituents": table.iter().map(|(w, m)| json!({ "highest_weight": w, "multiplicity": m })).collect::<Vec<_>>(),
    });
    Ok(Report {
        ok: true,
        json: with_schema("restrict", true, body),
        columns: vec!["levi_highest_weight", "multiplicity"],
        rows: table.iter().map(|(w, m)| vec![cell(w), m.to_string()]).collect(),
    })
}

fn superbasic(n: usize, d: usize, m: i64, mu: &str, lambda: Option<&str>) -> Result<Report, Error> {
    let sb = Superbasic::new(n, d, m)?;
    let mu = parse_tuple(mu)?;
    check_len(&sb.datum, &mu, "mu")?;
    let ctx = sb.context(&mu)?;
    let points = match lambda {
        Some(l) => vec![parse_tuple(l)?],
        None => sb.enumerate(&mu),
    };
    let mut tables = Vec::new();
    for l in &points {
        check_len(&sb.datum, l, "lambda")?;
        tables.push(sb.table_in(&ctx, l)?);
    }
    let ok = tables
        .iter()
        .all(|t| t.dim_value == t.r_count as i64 && (!t.is_top || (t.coxeter && t.flat_sum_ok && t.nonneg_ok)));
    let flat = |v: &[Vec<i64>]| v.iter().map(|x| cell(x)).collect::<Vec<_>>().join(";");
    let rows = tables
        .iter()
        .map(|t| {
            vec![
                flat(&t.lambda),
                flat(&t.flat),
                t.w.iter().map(|x| cell(&x.iter().map(|&y| y as i64).collect::<Vec<_>>())).collect::<Vec<_>>().join(";"),
                cell(&t.lengths.iter().map(|&y| y as i64).collect::<Vec<_>>()),
                t.dim_value.to_string(),
                t.r_count.to_string(),
                t.is_top.to_string(),
                t.coxeter.to_string(),
                t.flat_sum_ok.to_string(),
                t.nonneg_ok.to_string(),
            ]
        })
        .collect();
    let body = json!({ "n": n, "d": d, "m": m, "mu": mu, "rows": tables });
    Ok(Report {
        ok,
        json: with_schema("superbasic", ok, body),
        columns: vec!["lambda", "flat", "w", "lengths", "dim_value", "r_count", "is_top", "coxeter", "flat_sum_ok", "nonneg_ok"],
        rows,
    })
}

fn appendixb(datum: &str, b: Option<&str>, mode: ModeArg) -> Result<Report, Error> {
    let (spec, d) = load(datum)?;
    let mode = match mode {
        ModeArg::Pruned => Mode::Pruned,
        ModeArg::Exhaustive => Mode::Exhaustive,
    };
    let certs: Vec<Certification> = match b {
        Some(b) => vec![certify(&spec, &d, &BasicElement::parse(&d, b)?, mode)?],
        None => certify_all(&spec, mode)?,
    };
    let ok = certs.iter().all(|c| c.verdict);
    let one = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let rows = certs
        .iter()
        .map(|c| {
            vec![
                c.datum.clone(),
                c.b.clone(),
                format!("{{{}}}", one(&c.j)),
                c.expected_j.as_ref().map(|e| format!("{{{}}}", e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))).unwrap_or_default(),
                c.report.candidates.to_string(),
                c.report.visited.to_string(),
                c.report.all_fixed.to_string(),
                if c.verdict { "OK".into() } else { "FAIL".into() },
                c.wall_ms.to_string(),
            ]
        })
        .collect();
    let body = json!({ "datum": d.label, "certifications": certs });
    Ok(Report {
        ok,
        json: with_schema("appendixb", ok, body),
        columns: vec!["datum", "b", "j", "expected_j", "candidates", "visited", "all_fixed", "verdict", "wall_ms"],
        rows,
    })
}

fn suite(fuzz: usize, seed: u64, skip_exhaustive: bool, window: Option<i64>) -> Result<Report, Error> {
    let opts = SuiteOptions { window, fuzz_samples: fuzz, seed, exhaustive_e7: !skip_exhaustive };
    let lines = run_suite(&opts);
    let ok = lines.iter().all(|l| l.pass);
    let rows = lines
        .iter()
        .map(|l| vec![l.id.clone(), l.name.clone(), if l.pass { "PASS" } else { "FAIL" }.into(), l.elapsed_ms.to_string(), l.detail.clone()])
        .collect();
    Ok(Report {
        ok,
        json: with_schema("suite", ok, json!({ "checks": lines })),
        columns: vec!["id", "name", "pass", "elapsed_ms", "detail"],
        rows,
    })
}

pub fn execute(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Classify { case, lambda, top_only } => classify(case, lambda.as_deref(), *top_only),
        Command::Count { case } => count(case),
        Command::Crystal { datum, mu } => crystal(datum, mu),
        Command::Tensor { datum, mu } => tensor(datum, mu),
        Command::Restrict { datum, mu, j } => restrict(datum, mu, j),
        Command::Superbasic { n, d, m, mu, lambda } => superbasic(*n, *d, *m, mu, lambda.as_deref()),
        Command::Appendixb { datum, b, all_b, mode } => {
            appendixb(datum, if *all_b { None } else { b.as_deref() }, *mode)
        }
        Command::Suite { fuzz, seed, skip_exhaustive, window } => suite(*fuzz, *seed, *skip_exhaustive, *window),
    }
}

/// Exit status for a library error.
pub fn error_status(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

/// Parse, run and print; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return 2;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let status = error_status(&e);
            if cli.format == Format::Json {
                let v = json!({ "schema": 1, "ok": false, "error": e.to_string() });
                println!("{v}");
            }
            eprintln!("error: {e}");
            return status;
        }
    };
    let text = report.render(cli.format);
    let written = match &cli.output {
        Some(p) => std::fs::write(p, text.as_bytes()),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    if report.ok {
        0
    } else {
        1
    }
}
