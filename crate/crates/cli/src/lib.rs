//! Batch front end: read a problem file, build and validate every object,
//! run one task, report to stdout. Diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cotorlab::dg::compare_dg;
use cotorlab::graded::{compare_graded, graded_cotensor_dims, graded_cotor_dims, graded_hochschild_dims};
use cotorlab::homalg::{bar_complex, cobar_complex, compare_cotor_hochschild, cotensor, hom_ae};
use cotorlab::io::{encode_algebra, encode_coalgebra, encode_comodule, encode_matrix, encode_module, Problem, Task, Workspace};
use cotorlab::profinite::colimit_report;
use cotorlab::{tensor_bimodule, with_field, Bimodule, Error, Field, FieldDescriptor, GradedTable, GradedWindow, Matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNREADABLE: i32 = 3;
pub const EXIT_SCHEMA: i32 = 4;
pub const EXIT_UNRESOLVED: i32 = 5;
pub const EXIT_INVALID: i32 = 6;
pub const EXIT_COMPUTATION: i32 = 7;
pub const EXIT_FAIL: i32 = 8;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  usage error (bad flags, task references or parameters missing)
  3  problem file unreadable
  4  schema violation (malformed JSON, unknown fields, wrong shapes, p not prime)
  5  unresolved object reference
  6  validation failure (nothing is computed)
  7  computation error (window overflow, objects over different algebras)
  8  comparison ran and its verdict is fail";

const DEFAULT_N_MAX: usize = 3;
const DEFAULT_S_CAP: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "cotorlab", version, about = "Exact Cotor and Hochschild cohomology from JSON problem files", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Machine-readable report.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable report (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Highest cohomological degree; overrides `task.n_max`.
    #[arg(long, global = true, value_name = "N")]
    pub max_degree: Option<usize>,
    /// Internal-degree window `lo:hi`; overrides `task.window`.
    #[arg(long, global = true, value_name = "LO:HI", value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Option<(i64, i64)>,
    /// Include cocycle bases and induced maps in the report.
    #[arg(long, global = true)]
    pub emit_bases: bool,
    /// Cobar-degree cap for DG data with degree-1 elements.
    #[arg(long, global = true, value_name = "S")]
    pub s_cap: Option<usize>,
    /// Overrides `task.object`.
    #[arg(long, global = true, value_name = "NAME")]
    pub object: Option<String>,
    /// Overrides `task.left`.
    #[arg(long, global = true, value_name = "NAME")]
    pub left: Option<String>,
    /// Overrides `task.right`.
    #[arg(long, global = true, value_name = "NAME")]
    pub right: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Validate every object in the file.
    Validate(FileArg),
    /// Dual coalgebra of an algebra, or dual algebra of a (DG) coalgebra.
    Dual(FileArg),
    /// Module ↔ comodule translation of one object.
    Translate(FileArg),
    /// Cotensor product M □_C N, with Hom_{A^e}(A, M ⊗ N) alongside.
    Cotensor(FileArg),
    /// Hochschild cohomology H^n(A, B) from the bar complex.
    Hochschild(FileArg),
    /// Cotor_C^n(M, N) from the cobar complex.
    Cotor(FileArg),
    /// Cotor versus Hochschild of M ⊗ N, degree by degree.
    Compare(FileArg),
    /// Bigraded comparison per (n, t) inside a window.
    GradedCompare(FileArg),
    /// Total-degree comparison for DG coalgebras and comodules.
    DgCompare(FileArg),
    /// Level cohomology and stable images along a tower.
    Tower(FileArg),
}

#[derive(Debug, Clone, PartialEq, Eq, clap::Args)]
pub struct FileArg {
    /// Problem file (JSON).
    pub file: PathBuf,
}

impl Command {
    pub fn file(&self) -> &PathBuf {
        match self {
            Command::Validate(a)
            | Command::Dual(a)
            | Command::Translate(a)
            | Command::Cotensor(a)
            | Command::Hochschild(a)
            | Command::Cotor(a)
            | Command::Compare(a)
            | Command::GradedCompare(a)
            | Command::DgCompare(a)
            | Command::Tower(a) => &a.file,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Dual(_) => "dual",
            Command::Translate(_) => "translate",
            Command::Cotensor(_) => "cotensor",
            Command::Hochschild(_) => "hochschild",
            Command::Cotor(_) => "cotor",
            Command::Compare(_) => "compare",
            Command::GradedCompare(_) => "graded-compare",
            Command::DgCompare(_) => "dg-compare",
            Command::Tower(_) => "tower",
        }
    }
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Exit status and the two output streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

#[derive(Clone, Copy)]
enum Phase {
    Load,
    Compute,
}

fn classify(e: Error, phase: Phase) -> Failure {
    let code = match (&e, phase) {
        (Error::Unresolved(_), _) => EXIT_UNRESOLVED,
        (Error::Invalid { .. }, _) => EXIT_INVALID,
        (Error::Schema(_), _) | (Error::NotPrime(_), _) => EXIT_SCHEMA,
        (Error::Dimension(_) | Error::Input(_) | Error::Mismatch(_), Phase::Load) => EXIT_SCHEMA,
        _ => EXIT_COMPUTATION,
    };
    Failure { code, message: e.to_string() }
}

/// The report printed on success (and on a failing verdict).
#[derive(Debug, Serialize)]
struct Report {
    command: &'static str,
    field: FieldDescriptor,
    task: Task,
    status: &'static str,
    result: Value,
    /// Excluded from determinism guarantees.
    timing_ms: f64,
}

struct Done {
    status: &'static str,
    code: i32,
    result: Value,
    text: String,
}

/// Runs one command line (including the program name) without touching the
/// process's own streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, None)
}

/// Like [`run`], but the problem text is `source` instead of the named file's
/// contents, and no wall-clock timing is taken (`timing_ms` is 0). This is
/// the entry point for hosts without a filesystem or clock.
pub fn run_source<I, T>(args: I, source: &str) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, Some(source))
}

fn run_with<I, T>(args: I, source: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let name = cli.command.name();
    match execute(&cli, source) {
        Ok((report, text, code)) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                text
            };
            let stderr = if code == EXIT_OK { String::new() } else { format!("cotorlab {name}: {}\n", report.status) };
            Outcome { code, stdout, stderr }
        }
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("cotorlab {name}: {}\n", f.message) },
    }
}

fn execute(cli: &Cli, source: Option<&str>) -> Result<(Report, String, i32), Failure> {
    let started = source.is_none().then(Instant::now);
    let file = cli.command.file();
    let text = match source {
        Some(s) => s.to_string(),
        None => std::fs::read_to_string(file)
            .map_err(|e| Failure { code: EXIT_UNREADABLE, message: format!("cannot read {}: {e}", file.display()) })?,
    };
    let problem = Problem::from_json(&text).map_err(|e| classify(e, Phase::Load))?;
    let mut task = problem.task.clone().unwrap_or_default();
    if let Some(c) = &task.command {
        if c != cli.command.name() {
            return Err(Failure::usage(format!("the file's task is {c:?}, not {:?}", cli.command.name())));
        }
    }
    task.command = Some(cli.command.name().to_string());
    if let Some(n) = cli.max_degree {
        task.n_max = Some(n);
    }
    if let Some(w) = cli.window {
        task.window = Some(w);
    }
    if let Some(s) = cli.s_cap {
        task.s_cap = Some(s);
    }
    for (flag, slot) in [(&cli.object, &mut task.object), (&cli.left, &mut task.left), (&cli.right, &mut task.right)] {
        if let Some(v) = flag {
            *slot = Some(v.clone());
        }
    }
    let done = with_field!(problem.field, f => dispatch(&f, cli, &problem, &task)).map_err(|e| classify(e, Phase::Load))??;
    let timing_ms = started.map_or(0.0, |t| (t.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    let mut text = done.text;
    if started.is_some() {
        let _ = writeln!(text, "time: {timing_ms} ms");
    }
    let report = Report { command: cli.command.name(), field: problem.field, task, status: done.status, result: done.result, timing_ms };
    Ok((report, text, done.code))
}

fn dispatch<F: Field>(f: &F, cli: &Cli, problem: &Problem, task: &Task) -> Result<Done, Failure> {
    let load = |e| classify(e, Phase::Load);
    let comp = |e| classify(e, Phase::Compute);
    if matches!(cli.command, Command::Validate(_)) {
        let ws = Workspace::build(f, &problem.objects).map_err(load)?;
        return Ok(validate_report(&ws));
    }
    // Fail fast: nothing is computed unless every object validates.
    let ws = Workspace::load(f, &problem.objects).map_err(load)?;
    let n_max = task.n_max.unwrap_or(DEFAULT_N_MAX);
    let window = task.window.map(|(lo, hi)| GradedWindow::new(lo, hi)).transpose().map_err(load)?;
    let emit = cli.emit_bases;
    match cli.command {
        Command::Validate(_) => unreachable!(),
        Command::Dual(_) => dual(&ws, need(&task.object, "object")?),
        Command::Translate(_) => translate(&ws, need(&task.object, "object")?).map_err(comp),
        Command::Cotensor(_) => cotensor_task(&ws, need(&task.left, "left")?, need(&task.right, "right")?, window, emit).map_err(comp),
        Command::Hochschild(_) => {
            let b = match (&task.bimodule, &task.object, &task.left, &task.right) {
                (Some(b), _, _, _) | (None, Some(b), _, _) => ws.bimodules.get(b).cloned().ok_or_else(|| load(Error::Unresolved(b.clone())))?,
                (None, None, Some(l), Some(r)) => {
                    tensor_bimodule(&ws.left_module(l).map_err(comp)?, &ws.right_module(r).map_err(comp)?).map_err(comp)?
                }
                _ => return Err(Failure::usage("hochschild needs task.bimodule (or --object), or task.left and task.right")),
            };
            hochschild_task(&b, n_max, window, emit).map_err(comp)
        }
        Command::Cotor(_) => cotor_task(&ws, need(&task.left, "left")?, need(&task.right, "right")?, n_max, window, emit).map_err(comp),
        Command::Compare(_) => {
            let m = ws.left_module(&need(&task.left, "left")?).map_err(comp)?;
            let n = ws.right_module(&need(&task.right, "right")?).map_err(comp)?;
            let c = compare_cotor_hochschild(&m, &n, n_max).map_err(comp)?;
            let mut text = String::new();
            table_line(&mut text, "degree", (0..=n_max).map(|d| d.to_string()));
            table_line(&mut text, "cotor", c.cotor.iter().map(usize::to_string));
            table_line(&mut text, "hochschild", c.hochschild.iter().map(usize::to_string));
            Ok(verdict(c.pass, json!(c), text))
        }
        Command::GradedCompare(_) => {
            let m = ws.left_module(&need(&task.left, "left")?).map_err(comp)?;
            let n = ws.right_module(&need(&task.right, "right")?).map_err(comp)?;
            let w = window.ok_or_else(|| Failure::usage("graded-compare needs a window (task.window or --window)"))?;
            let c = compare_graded(&m, &n, n_max, w).map_err(comp)?;
            let mut text = String::from("cotor (rows n, columns t):\n");
            graded_text(&mut text, &c.cotor, false);
            text.push_str("hochschild (rows n, columns t, read at -t):\n");
            graded_text(&mut text, &c.hochschild, true);
            for cell in c.cells.iter().filter(|c| !c.agree) {
                let _ = writeln!(text, "disagree at (n, t) = ({}, {}): {} vs {}", cell.n, cell.t, cell.cotor, cell.hochschild);
            }
            Ok(verdict(c.pass, json!(c), text))
        }
        Command::DgCompare(_) => {
            let name = need(&task.dg_coalgebra.clone().or(task.object.clone()), "dg_coalgebra")?;
            let c = ws.dg_coalgebras.get(&name).ok_or_else(|| load(Error::Unresolved(name.clone())))?;
            let l = need(&task.left, "left")?;
            let r = need(&task.right, "right")?;
            let m = ws.dg_right_comodules.get(&l).ok_or_else(|| load(Error::Unresolved(l.clone())))?;
            let n = ws.dg_left_comodules.get(&r).ok_or_else(|| load(Error::Unresolved(r.clone())))?;
            let w = window.ok_or_else(|| Failure::usage("dg-compare needs a window (task.window or --window)"))?;
            let cmp = compare_dg(c, m, n, w, task.s_cap.unwrap_or(DEFAULT_S_CAP)).map_err(comp)?;
            let mut text = String::new();
            table_line(&mut text, "total degree", cmp.cotor.degrees.iter().map(|d| d.degree.to_string()));
            table_line(&mut text, "cotor", cmp.cotor.degrees.iter().map(|d| flagged(d.dim, d.truncated)));
            table_line(
                &mut text,
                "hochschild(-n)",
                cmp.cotor.degrees.iter().map(|d| {
                    cmp.hochschild.get(-d.degree).map_or("?".into(), |h| flagged(h.dim, h.truncated))
                }),
            );
            text.push_str("(* = truncated by the window or the cobar cap)\n");
            Ok(verdict(cmp.pass, json!(cmp), text))
        }
        Command::Tower(_) => {
            let name = need(&task.tower.clone().or(task.object.clone()), "tower")?;
            let t = ws.towers.get(&name).ok_or_else(|| load(Error::Unresolved(name.clone())))?;
            let report = colimit_report(&t.tower, &t.bimodules, &t.inclusions, n_max).map_err(comp)?;
            let mut text = String::new();
            table_line(&mut text, "degree", (0..=n_max).map(|d| d.to_string()));
            for level in 0..t.tower.depth() {
                table_line(&mut text, &format!("level {level}"), report.degrees.iter().map(|d| d.level_dims[level].to_string()));
            }
            table_line(&mut text, "stable", report.stable_dims().iter().map(usize::to_string));
            let mut result = json!({ "degrees": report.degrees, "stable_dims": report.stable_dims() });
            if emit {
                let induced: Vec<Value> = report
                    .induced
                    .iter()
                    .enumerate()
                    .flat_map(|(n, maps)| {
                        maps.iter().map(move |((i, j), m)| json!({ "degree": n, "from": i, "to": j, "matrix": encode_matrix(m) }))
                    })
                    .collect();
                result["induced"] = Value::Array(induced);
            }
            Ok(Done { status: "ok", code: EXIT_OK, result, text })
        }
    }
}

fn need(x: &Option<String>, what: &str) -> Result<String, Failure> {
    x.clone().ok_or_else(|| Failure::usage(format!("task.{what} is required (or pass --{what})")))
}

fn verdict(pass: bool, result: Value, mut text: String) -> Done {
    text.push_str(if pass { "verdict: pass\n" } else { "verdict: FAIL\n" });
    Done { status: if pass { "pass" } else { "fail" }, code: if pass { EXIT_OK } else { EXIT_FAIL }, result, text }
}

fn flagged(d: usize, truncated: bool) -> String {
    if truncated {
        format!("{d}*")
    } else {
        d.to_string()
    }
}

fn table_line(out: &mut String, label: &str, cells: impl Iterator<Item = String>) {
    let _ = write!(out, "{label:>14}:");
    for c in cells {
        let _ = write!(out, " {c:>4}");
    }
    out.push('\n');
}

fn graded_text(out: &mut String, t: &GradedTable, negate: bool) {
    let degrees: Vec<i64> = if negate { t.window.degrees().map(|d| -d).rev().collect() } else { t.window.degrees().collect() };
    table_line(out, "t", degrees.iter().map(|d| d.to_string()));
    for n in 0..t.dims.len() {
        table_line(
            out,
            &format!("n = {n}"),
            degrees.iter().map(|&d| {
                let v = t.get(n, if negate { -d } else { d });
                flagged(v, t.upper_truncated[n])
            }),
        );
    }
}

fn columns<F: Field>(m: &Matrix<F>) -> Value {
    let f = m.field();
    json!(m.columns().iter().map(|c| c.iter().map(|x| f.scalar_to_json(x)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn validate_report<F: Field>(ws: &Workspace<F>) -> Done {
    let reports = ws.validate();
    let bad: Vec<_> = reports.iter().filter(|r| !r.valid).collect();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{} {:?}: {}", r.kind, r.name, if r.valid { "valid" } else { "INVALID" });
        for v in &r.report.violations {
            let _ = writeln!(text, "    {} at {:?}: {}", v.law, v.indices, v.detail);
        }
    }
    let message = if bad.is_empty() {
        "all objects valid".to_string()
    } else {
        format!("{} of {} objects invalid", bad.len(), reports.len())
    };
    let _ = writeln!(text, "{message}");
    Done {
        status: if bad.is_empty() { "ok" } else { "invalid" },
        code: if bad.is_empty() { EXIT_OK } else { EXIT_INVALID },
        result: json!({ "message": message, "objects": reports }),
        text,
    }
}

fn dual<F: Field>(ws: &Workspace<F>, name: String) -> Result<Done, Failure> {
    let comp = |e| classify(e, Phase::Compute);
    let (kind, spec, dim) = if let Some(a) = ws.algebras.get(&name) {
        let c = a.dual_coalgebra().map_err(comp)?;
        ("coalgebra", json!(encode_coalgebra(&c)), c.dim())
    } else if let Some(c) = ws.coalgebras.get(&name) {
        let a = c.dual_algebra().map_err(comp)?;
        ("algebra", json!(encode_algebra(&a)), a.dim())
    } else if let Some(d) = ws.dg_coalgebras.get(&name) {
        let a = d.dual_algebra().map_err(comp)?;
        let spec = json!({ "algebra": encode_algebra(&a.algebra), "differential": encode_matrix(&a.differential) });
        ("DG algebra", spec, a.algebra.dim())
    } else {
        return Err(classify(Error::Unresolved(name), Phase::Load));
    };
    let text = format!("dual of {name:?}: {kind} of dimension {dim}\n{}\n", serde_json::to_string(&spec).expect("serializes"));
    Ok(Done { status: "ok", code: EXIT_OK, result: json!({ "object": name, "kind": kind, "dual": spec }), text })
}

fn translate<F: Field>(ws: &Workspace<F>, name: String) -> cotorlab::Result<Done> {
    let coal_name = |c: &cotorlab::Coalgebra<F>| ws.coalgebras.iter().find(|(_, x)| ***x == *c).map(|(n, _)| n.clone());
    let alg_name = |a: &cotorlab::Algebra<F>| ws.algebras.iter().find(|(_, x)| ***x == *a).map(|(n, _)| n.clone());
    let (from, to, spec, over, round_trip) = if let Some(m) = ws.left_modules.get(&name) {
        let c = m.to_comodule()?;
        let back = c.to_module()?;
        let spec = encode_comodule(coal_name(&c.coalgebra), c.dim(), c.field(), c.coaction_tensor(), &c.grading);
        ("left module", "right comodule", json!(spec), json!(encode_coalgebra(&c.coalgebra)), back.action() == m.action())
    } else if let Some(m) = ws.right_modules.get(&name) {
        let c = m.to_comodule()?;
        let back = c.to_module()?;
        let spec = encode_comodule(coal_name(&c.coalgebra), c.dim(), c.field(), c.coaction_tensor(), &c.grading);
        ("right module", "left comodule", json!(spec), json!(encode_coalgebra(&c.coalgebra)), back.action() == m.action())
    } else if let Some(c) = ws.right_comodules.get(&name) {
        let m = c.to_module()?;
        let back = m.to_comodule()?;
        let spec = encode_module(alg_name(&m.algebra), m.dim(), m.action(), &m.grading);
        ("right comodule", "left module", json!(spec), json!(encode_algebra(&m.algebra)), back.coaction_tensor() == c.coaction_tensor())
    } else if let Some(c) = ws.left_comodules.get(&name) {
        let m = c.to_module()?;
        let back = m.to_comodule()?;
        let spec = encode_module(alg_name(&m.algebra), m.dim(), m.action(), &m.grading);
        ("left comodule", "right module", json!(spec), json!(encode_algebra(&m.algebra)), back.coaction_tensor() == c.coaction_tensor())
    } else {
        return Err(Error::Unresolved(name));
    };
    let text = format!(
        "{from} {name:?} -> {to}\n{}\nround trip is the identity: {round_trip}\n",
        serde_json::to_string(&spec).expect("serializes")
    );
    Ok(Done {
        status: "ok",
        code: EXIT_OK,
        result: json!({ "object": name, "from": from, "to": to, "translated": spec, "over": over, "round_trip": round_trip }),
        text,
    })
}

fn cotensor_task<F: Field>(ws: &Workspace<F>, l: String, r: String, window: Option<GradedWindow>, emit: bool) -> cotorlab::Result<Done> {
    let m = ws.right_comodule(&l)?;
    let n = ws.left_comodule(&r)?;
    let basis = cotensor(&m, &n)?;
    let b = tensor_bimodule(&m.to_module()?, &n.to_module()?)?;
    let hom = hom_ae(&b).cols();
    let mut result = json!({ "dim": basis.cols(), "hom_ae_dim": hom, "agree": basis.cols() == hom });
    let mut text = format!("dim {l} □ {r} = {}\ndim Hom_A^e(A, M ⊗ N) = {hom}\n", basis.cols());
    if let Some(w) = window {
        let dims = graded_cotensor_dims(&m, &n, w)?;
        table_line(&mut text, "t", w.degrees().map(|d| d.to_string()));
        table_line(&mut text, "dim", dims.iter().map(usize::to_string));
        result["graded"] = json!({ "window": w, "dims": dims });
    }
    if emit {
        result["basis"] = columns(&basis);
    }
    Ok(Done { status: "ok", code: EXIT_OK, result, text })
}

fn hochschild_task<F: Field>(b: &Bimodule<F>, n_max: usize, window: Option<GradedWindow>, emit: bool) -> cotorlab::Result<Done> {
    let bar = bar_complex(b, n_max)?;
    let coh = (0..=n_max).map(|n| bar.complex.cohomology(n as i64)).collect::<cotorlab::Result<Vec<_>>>()?;
    let dims: Vec<usize> = coh.iter().map(|h| h.dim()).collect();
    let mut text = String::new();
    table_line(&mut text, "degree", (0..=n_max).map(|d| d.to_string()));
    table_line(&mut text, "hochschild", dims.iter().map(usize::to_string));
    let mut result = json!({ "dims": dims });
    if let Some(w) = window {
        let table = graded_hochschild_dims(b, n_max, w)?;
        text.push_str("graded (rows n, columns internal degree):\n");
        graded_text(&mut text, &table, false);
        result["graded"] = json!(table);
    }
    if emit {
        result["bases"] = Value::Array(coh.iter().map(|h| columns(&h.representatives)).collect());
    }
    Ok(Done { status: "ok", code: EXIT_OK, result, text })
}

fn cotor_task<F: Field>(
    ws: &Workspace<F>,
    l: String,
    r: String,
    n_max: usize,
    window: Option<GradedWindow>,
    emit: bool,
) -> cotorlab::Result<Done> {
    let m = ws.right_comodule(&l)?;
    let n = ws.left_comodule(&r)?;
    let cobar = cobar_complex(&m, &n, n_max)?;
    let coh = (0..=n_max).map(|s| cobar.complex.cohomology(s as i64)).collect::<cotorlab::Result<Vec<_>>>()?;
    let dims: Vec<usize> = coh.iter().map(|h| h.dim()).collect();
    let mut text = String::new();
    table_line(&mut text, "degree", (0..=n_max).map(|d| d.to_string()));
    table_line(&mut text, "cotor", dims.iter().map(usize::to_string));
    let mut result = json!({ "dims": dims });
    if let Some(w) = window {
        let table = graded_cotor_dims(&m, &n, n_max, w)?;
        text.push_str("graded (rows n, columns internal degree):\n");
        graded_text(&mut text, &table, false);
        result["graded"] = json!(table);
    }
    if emit {
        result["bases"] = Value::Array(coh.iter().map(|h| columns(&h.representatives)).collect());
    }
    Ok(Done { status: "ok", code: EXIT_OK, result, text })
}
