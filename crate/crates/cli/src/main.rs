//! `kappa`: multiplication tables, verification suites, constrained sampling
//! and element evaluation for the even subalgebra of Cl(4,0).
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error.

mod render;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kappa_core::harness::{self, SuiteId, SuiteReport, VerifyConfig};
use kappa_core::kappa::{derive_table, norm_b_sq, qform, sample_s7, to_dual_quaternion, NormError, Quaternion};
use kappa_core::{Field, FieldMode, KElement, Orientation, Rational};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "kappa", version, about = "Even subalgebra of Cl(4,0): tables, identity checks, sampling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 8×8 multiplication table (row = left factor).
    Table(TableArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Draw points on the constrained 7-sphere as JSON lines.
    Sample(SampleArgs),
    /// Evaluate norms, constraint and dual-quaternion parts of an element.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Rational,
    Float,
}

impl From<FieldArg> for FieldMode {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Rational => FieldMode::Rational,
            FieldArg::Float => FieldMode::Float,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyField {
    Rational,
    Float,
    Both,
}

#[derive(Args)]
struct TableArgs {
    /// Orientation, 1 or -1.
    #[arg(long, default_value = "1", allow_negative_numbers = true)]
    lambda: Orientation,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, value_enum, default_value_t = VerifyField::Rational)]
    field: VerifyField,
    /// Float tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Run only the named suite(s); repeatable.
    #[arg(long = "suite")]
    suites: Vec<SuiteId>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Also write the JSON-lines report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(short = 'n', long = "count", default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 1.0)]
    rho: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1", allow_negative_numbers = true)]
    lambda: Orientation,
}

#[derive(Args)]
struct EvalArgs {
    /// Element JSON; read from stdin when omitted.
    #[arg(long)]
    element: Option<String>,
    #[arg(long, value_enum, default_value_t = FieldArg::Rational)]
    field: FieldArg,
    /// Tolerance on the ε part for the definition-(b) norm in float mode.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn write_out(text: &str) -> Result<(), String> {
    let mut stdout = io::stdout().lock();
    match stdout.write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(|e| e.to_string()),
    }
}

fn cmd_table(args: TableArgs) -> CmdResult {
    let table = derive_table(args.lambda).map_err(|e| e.to_string())?;
    let text = match args.format {
        TableFormat::Text => render::text(&table),
        TableFormat::Json => render::json(&table),
        TableFormat::Csv => render::csv(&table),
        TableFormat::Markdown => render::markdown(&table),
    };
    write_out(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn summary_line(r: &SuiteReport) -> String {
    let residual = match (r.max_residual, r.tolerance) {
        (Some(m), Some(t)) => format!("max_residual={m:.3e} (tol {t:.0e})"),
        (Some(m), None) => format!("max_residual={m:.3e}"),
        _ => "exact".to_string(),
    };
    format!(
        "{}  {:<22} {:<8} trials={:<6} failures={:<4} {}  [{} ms]",
        if r.passed { "PASS" } else { "FAIL" },
        r.suite,
        r.mode.as_str(),
        r.trials,
        r.failure_count,
        residual,
        r.elapsed.as_millis()
    )
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    if args.trials == 0 {
        return Err("--trials must be positive".into());
    }
    let config = VerifyConfig {
        seed: args.seed,
        trials: args.trials,
        modes: match args.field {
            VerifyField::Rational => vec![FieldMode::Rational],
            VerifyField::Float => vec![FieldMode::Float],
            VerifyField::Both => vec![FieldMode::Rational, FieldMode::Float],
        },
        tolerance: args.tolerance,
        suites: if args.suites.is_empty() { SuiteId::ALL.to_vec() } else { args.suites },
    };
    let reports = harness::run_all(&config);
    let json_lines: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    if let Some(path) = &args.report {
        std::fs::write(path, &json_lines).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    match args.format {
        ReportFormat::Json => write_out(&json_lines)?,
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&summary_line(r));
                out.push('\n');
                for note in &r.notes {
                    out.push_str(&format!("      {note}\n"));
                }
                for f in &r.failures {
                    let at = f.trial.map(|t| format!("trial {t}: ")).unwrap_or_default();
                    out.push_str(&format!("      ! {at}{}\n", f.message));
                    for input in &f.inputs {
                        out.push_str(&format!(
                            "        {}\n",
                            serde_json::to_string(input).expect("element is serializable")
                        ));
                    }
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            out.push_str(&format!("{passed}/{} suites passed\n", reports.len()));
            write_out(&out)?;
        }
    }
    Ok(if harness::all_passed(&reports) { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn cmd_sample(args: SampleArgs) -> CmdResult {
    if args.count == 0 {
        return Err("--count must be at least 1".into());
    }
    if !(args.rho.is_finite() && args.rho > 0.0) {
        return Err(format!("--rho must be positive and finite, got {}", args.rho));
    }
    let mut out = String::new();
    for i in 0..args.count {
        let x = sample_s7(harness::sub_seed(args.seed, i), args.rho, args.lambda).map_err(|e| e.to_string())?;
        out.push_str(&x.to_json());
        out.push('\n');
    }
    write_out(&out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SplitJson {
    s: String,
    p: String,
}

#[derive(Serialize)]
struct EvalReport {
    lambda: Orientation,
    field: FieldMode,
    coeffs: Vec<String>,
    norm_a: f64,
    norm_a_sq: String,
    /// `None` when the ε part of X X† is nonzero.
    norm_b: Option<f64>,
    qform: Option<SplitJson>,
    norm_b_residual: Option<SplitJson>,
    constraint_f: String,
    q_r: Vec<String>,
    q_d: Vec<String>,
}

fn quaternion_strings<F: Field>(q: &Quaternion<F>) -> Vec<String> {
    q.coeffs.iter().map(Field::format_coeff).collect()
}

fn evaluate<F: Field>(x: &KElement<F>, tol: f64) -> Result<EvalReport, String> {
    let split = |v: &kappa_core::SplitScalar<F>| SplitJson { s: v.s.format_coeff(), p: v.p.format_coeff() };
    let q = qform(x).map_err(|e| e.to_string())?;
    let (norm_b, residual) = match norm_b_sq(x, tol) {
        Ok(v) => (Some(v.to_f64().sqrt()), None),
        Err(NormError::Residual(r)) => (None, Some(split(&r.value))),
        Err(NormError::Kappa(e)) => return Err(e.to_string()),
    };
    let dq = to_dual_quaternion(x);
    Ok(EvalReport {
        lambda: x.lambda,
        field: F::MODE,
        coeffs: x.coeffs.iter().map(Field::format_coeff).collect(),
        norm_a: x.norm_a(),
        norm_a_sq: x.norm_a_sq().format_coeff(),
        norm_b,
        qform: Some(split(&q)),
        norm_b_residual: residual,
        constraint_f: x.constraint_f().format_coeff(),
        q_r: quaternion_strings(&dq.q_r),
        q_d: quaternion_strings(&dq.q_d),
    })
}

fn eval_text(r: &EvalReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("lambda       {}\n", r.lambda));
    out.push_str(&format!("field        {}\n", r.field));
    out.push_str(&format!("coeffs       [{}]\n", r.coeffs.join(", ")));
    out.push_str(&format!("norm_a       {} (squared {})\n", r.norm_a, r.norm_a_sq));
    match (&r.norm_b, &r.norm_b_residual) {
        (Some(v), _) => out.push_str(&format!("norm_b       {v}\n")),
        (None, Some(res)) => out.push_str(&format!(
            "norm_b       undefined: X X\u{2020} = {} + ({}) \u{03b5}\n",
            res.s, res.p
        )),
        (None, None) => out.push_str("norm_b       undefined\n"),
    }
    out.push_str(&format!("f_K          {}\n", r.constraint_f));
    out.push_str(&format!("q_r          [{}]\n", r.q_r.join(", ")));
    out.push_str(&format!("q_d          [{}]\n", r.q_d.join(", ")));
    out
}

fn cmd_eval(args: EvalArgs) -> CmdResult {
    let text = match args.element {
        Some(t) => t,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
            buf
        }
    };
    let mut reports = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let report = match args.field {
            FieldArg::Rational => evaluate(&KElement::<Rational>::from_json(line).map_err(|e| e.to_string())?, 0.0),
            FieldArg::Float => {
                evaluate(&KElement::<f64>::from_json(line).map_err(|e| e.to_string())?, args.tolerance)
            }
        }?;
        reports.push(report);
    }
    if reports.is_empty() {
        return Err("no element given".into());
    }
    let out: String = match args.format {
        ReportFormat::Json => reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report is serializable") + "\n")
            .collect(),
        ReportFormat::Text => reports.iter().map(eval_text).collect::<Vec<_>>().join("\n"),
    };
    write_out(&out)?;
    Ok(ExitCode::SUCCESS)
}
