//! The `rnmx` command line, as a library so it can be driven from tests.
//!
//! Exit codes: 0 valid / success / agreement, 1 invalid or unprovable,
//! 2 usage, parse or engine errors, 3 cross-check disagreement.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rnmx::decision::{
    cross_check, decide_ipl, decide_s4, decide_s4_direct, DecideError, Mode, Verdict,
};
use rnmx::formula::{parse, Formula, ParseError, Signature, Style, SubformulaClosure};
use rnmx::nmatrix::MatrixKind;
use rnmx::oracle::g4ip_prove;
use rnmx::refinement::{refine, refine_fixpoint};
use rnmx::render;
use rnmx::tabulation::{generate_table, Bounds};
use rnmx::translation::TranslationResult;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "rnmx",
    version,
    about = "Decide IPL and S4 with refined non-deterministic truth tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide validity or entailment; prints a JSON verdict.
    Decide(DecideArgs),
    /// Print the initial and refined tables, optionally every cycle.
    Table(TableArgs),
    /// Print the box translation and semi-translation of an IPL formula.
    Translate(TranslateArgs),
    /// Print the row-count bounds next to the actual counts.
    Bounds(BoundsArgs),
    /// Run the sequent-calculus prover.
    Oracle(OracleArgs),
    /// Compare the IPL tables, the S4 tables on the box translation, and the prover.
    Xcheck(XcheckArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Logic {
    #[default]
    Ipl,
    S4,
}

impl Logic {
    fn signature(self) -> Signature {
        match self {
            Logic::Ipl => Signature::Ipl,
            Logic::S4 => Signature::S4,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum StyleArg {
    Ascii,
    #[default]
    Unicode,
}

impl From<StyleArg> for Style {
    fn from(s: StyleArg) -> Style {
        match s {
            StyleArg::Ascii => Style::Ascii,
            StyleArg::Unicode => Style::Unicode,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum ModeArg {
    #[default]
    Designated,
    Necessity,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum TableFormat {
    #[default]
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum VerdictFormat {
    #[default]
    Json,
    Text,
}

/// Which S4 matrix to tabulate.
#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum MatrixArg {
    /// The original S4 matrix.
    Full,
    /// The reduced S4 matrix used for deciding.
    #[default]
    Reduced,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t)]
    logic: Logic,
    /// Output formula style.
    #[arg(long, value_enum, default_value_t)]
    style: StyleArg,
}

#[derive(Args, Debug)]
struct DecideArgs {
    #[command(flatten)]
    common: Common,
    /// A premise; repeat for several.
    #[arg(long = "premise", value_name = "FORMULA")]
    premises: Vec<String>,
    /// S4 only: accept values 1 and 2 (designated) or only 2 (necessity).
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
    /// S4 only: check premises row by row instead of folding them into
    /// the conclusion.
    #[arg(long)]
    direct: bool,
    #[arg(long, value_enum, default_value_t)]
    format: VerdictFormat,
    formula: String,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long = "premise", value_name = "FORMULA")]
    premises: Vec<String>,
    /// Print every refinement cycle and the final validators.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t)]
    format: TableFormat,
    #[arg(long, value_enum, default_value_t)]
    matrix: MatrixArg,
    formula: String,
}

#[derive(Args, Debug)]
struct TranslateArgs {
    #[arg(long, value_enum, default_value_t)]
    style: StyleArg,
    #[arg(long)]
    json: bool,
    formula: String,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t)]
    matrix: MatrixArg,
    formula: String,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long = "premise", value_name = "FORMULA")]
    premises: Vec<String>,
    formula: String,
}

#[derive(Args, Debug)]
struct XcheckArgs {
    #[arg(long, value_enum, default_value_t)]
    style: StyleArg,
    formula: String,
}

/// Parse or engine failure, already rendered for stderr.
struct Failure(String);

impl From<DecideError> for Failure {
    fn from(e: DecideError) -> Self {
        Failure(format!("error: {e}\n"))
    }
}

fn parse_formula(text: &str, sig: Signature) -> Result<Formula, Failure> {
    parse(text, sig).map_err(|e| Failure(describe_parse_error(text, &e)))
}

fn describe_parse_error(text: &str, e: &ParseError) -> String {
    let col = text[..e.offset().min(text.len())].chars().count();
    format!(
        "error: cannot parse formula: {e}\n  {text}\n  {}^\n",
        " ".repeat(col)
    )
}

fn parse_all(texts: &[String], sig: Signature) -> Result<Vec<Formula>, Failure> {
    texts.iter().map(|t| parse_formula(t, sig)).collect()
}

fn kind_for(logic: Logic, matrix: MatrixArg) -> MatrixKind {
    match (logic, matrix) {
        (Logic::Ipl, _) => MatrixKind::Ipl,
        (Logic::S4, MatrixArg::Full) => MatrixKind::S4,
        (Logic::S4, MatrixArg::Reduced) => MatrixKind::S4Reduced,
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_color(argv, false)
}

pub fn run_with_color<I, T>(argv: I, color: bool) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(EXIT_OK, text)
            };
        }
    };
    let result = match cli.command {
        Command::Decide(a) => decide(a, color),
        Command::Table(a) => table(a),
        Command::Translate(a) => translate(a),
        Command::Bounds(a) => bounds(a),
        Command::Oracle(a) => oracle(a),
        Command::Xcheck(a) => xcheck(a),
    };
    result.unwrap_or_else(|Failure(msg)| Outcome::usage(msg))
}

fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_owned()
    }
}

fn decide(a: DecideArgs, color: bool) -> Result<Outcome, Failure> {
    let sig = a.common.logic.signature();
    let style = a.common.style.into();
    let premises = parse_all(&a.premises, sig)?;
    let conclusion = parse_formula(&a.formula, sig)?;
    let mode = match a.mode {
        ModeArg::Designated => Mode::Designated,
        ModeArg::Necessity => Mode::Necessity,
    };
    let verdict = match a.common.logic {
        Logic::Ipl => decide_ipl(&premises, &conclusion)?,
        Logic::S4 if a.direct => decide_s4_direct(&premises, &conclusion)?,
        Logic::S4 => decide_s4(&premises, &conclusion, mode)?,
    };
    let code = if verdict.valid { EXIT_OK } else { EXIT_INVALID };
    let out = match a.format {
        VerdictFormat::Json => format!("{}\n", pretty(&verdict.to_json(style))),
        VerdictFormat::Text => verdict_text(&verdict, style, color),
    };
    Ok(Outcome::ok(code, out))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn verdict_text(v: &Verdict, style: Style, color: bool) -> String {
    let mut out = if v.valid {
        paint("valid", "32", color)
    } else {
        paint("invalid", "31", color)
    };
    out.push_str(&format!(
        " ({}; {} → {} rows in {} cycle{}; lb {}, ub {})\n",
        v.logic,
        v.initial_rows,
        v.final_rows,
        v.cycles,
        if v.cycles == 1 { "" } else { "s" },
        v.lb,
        v.ub
    ));
    if let (Some(row), Some(assignment)) = (&v.countermodel, v.assignment()) {
        out.push_str(&format!("countermodel: row {}\n", row.id));
        for (f, value) in assignment {
            out.push_str(&format!("  {} = {value}\n", f.print(style)));
        }
    }
    out
}

fn table(a: TableArgs) -> Result<Outcome, Failure> {
    let sig = a.common.logic.signature();
    let style: Style = a.common.style.into();
    let mut roots = parse_all(&a.premises, sig)?;
    roots.push(parse_formula(&a.formula, sig)?);
    let closure = SubformulaClosure::new(&roots).expect("at least one root");
    let kind = kind_for(a.common.logic, a.matrix);
    let initial = generate_table(&closure, kind).map_err(|e| Failure(format!("error: {e}\n")))?;
    let out = if a.trace {
        let (refined, trace) = refine_fixpoint(&initial);
        match a.format {
            TableFormat::Md => render::trace_markdown(&initial, &trace, style),
            TableFormat::Csv => render::trace_csv(&initial, &trace, style).map_err(csv_failure)?,
            TableFormat::Json => {
                format!(
                    "{}\n",
                    pretty(&render::trace_json(&initial, &refined, Some(&trace), style))
                )
            }
        }
    } else {
        let (refined, _) = refine(&initial);
        match a.format {
            TableFormat::Md => render::summary_markdown(&initial, &refined, style),
            TableFormat::Csv => {
                render::summary_csv(&initial, &refined, style).map_err(csv_failure)?
            }
            TableFormat::Json => format!(
                "{}\n",
                pretty(&render::trace_json(&initial, &refined, None, style))
            ),
        }
    };
    Ok(Outcome::ok(EXIT_OK, out))
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure(format!("error: {e}\n"))
}

fn translate(a: TranslateArgs) -> Result<Outcome, Failure> {
    let style: Style = a.style.into();
    let f = parse_formula(&a.formula, Signature::Ipl)?;
    let t = TranslationResult::new(&f).map_err(|e| Failure(format!("error: {e}\n")))?;
    let out = if a.json {
        format!(
            "{}\n",
            pretty(&json!({
                "source": t.source.print(style),
                "boxed": t.boxed.print(style),
                "semi": t.semi.print(style),
            }))
        )
    } else {
        format!(
            "boxed: {}\nsemi:  {}\n",
            t.boxed.print(style),
            t.semi.print(style)
        )
    };
    Ok(Outcome::ok(EXIT_OK, out))
}

fn bounds(a: BoundsArgs) -> Result<Outcome, Failure> {
    let f = parse_formula(&a.formula, a.common.logic.signature())?;
    let closure = SubformulaClosure::of(&f);
    let kind = kind_for(a.common.logic, a.matrix);
    let b = Bounds::for_closure(&closure, kind);
    let initial = generate_table(&closure, kind).map_err(|e| Failure(format!("error: {e}\n")))?;
    let (refined, cycles) = refine(&initial);
    let out = pretty(&json!({
        "matrix": kind.nmatrix().name(),
        "subformulas": closure.len(),
        "atoms": closure.atom_count(),
        "lb": bound_json(b.lower),
        "ub": bound_json(b.upper),
        "initial_rows": initial.len(),
        "final_rows": refined.len(),
        "cycles": cycles,
    }));
    Ok(Outcome::ok(EXIT_OK, format!("{out}\n")))
}

/// Bounds as JSON numbers when they fit, decimal strings otherwise.
fn bound_json(b: u128) -> serde_json::Value {
    u64::try_from(b).map_or_else(|_| b.to_string().into(), Into::into)
}

fn oracle(a: OracleArgs) -> Result<Outcome, Failure> {
    let premises = parse_all(&a.premises, Signature::Ipl)?;
    let f = parse_formula(&a.formula, Signature::Ipl)?;
    Ok(if g4ip_prove(&premises, &f) {
        Outcome::ok(EXIT_OK, "provable\n".into())
    } else {
        Outcome::ok(EXIT_INVALID, "unprovable\n".into())
    })
}

fn xcheck(a: XcheckArgs) -> Result<Outcome, Failure> {
    let f = parse_formula(&a.formula, Signature::Ipl)?;
    let report = cross_check(&f)?;
    let code = if report.agree { EXIT_OK } else { EXIT_DISAGREE };
    Ok(Outcome::ok(
        code,
        format!("{}\n", pretty(&report.to_json(a.style.into()))),
    ))
}
