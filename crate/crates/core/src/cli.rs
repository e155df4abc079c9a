//! Command-line front end: statistics of one element, enumerated and closed
//! generating functions, and the verification suite.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::closed::Formula;
use crate::enumerate::{DescentClassTable, Limits, Restrict, WeightSpec};
use crate::error::{Error, Result};
use crate::group::{parse_window, Element, GroupElement, IndexSet, Kind};
use crate::odd::{chessboard_class, odd_length_a, odd_length_b, odd_stats_b, ChessboardClass};
use crate::poly::IntPolynomial;
use crate::verify::{run_suite, suite_passed, IdentityId, Status, SuiteConfig};

/// Exit status and emitted text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "oddlength",
    version,
    about = "Odd length generating functions on S_n and B_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Length, odd length, descents and chessboard class of one element.
    Stats(StatsArgs),
    /// Sum of (-1)^length x^(odd length) over a parabolic quotient, by enumeration.
    Gf(GfArgs),
    /// Evaluate a closed product formula.
    Closed(ClosedArgs),
    /// Run identity checks by exhaustive enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RestrictArg {
    All,
    Chess,
    Plus,
    Minus,
}

impl From<RestrictArg> for Restrict {
    fn from(r: RestrictArg) -> Self {
        match r {
            RestrictArg::All => Restrict::All,
            RestrictArg::Chess => Restrict::Chessboard,
            RestrictArg::Plus => Restrict::Plus,
            RestrictArg::Minus => Restrict::Minus,
        }
    }
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long)]
    group: Kind,
    /// Comma-separated window, e.g. -2,4,3,-1
    #[arg(long, allow_hyphen_values = true)]
    window: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct GfArgs {
    #[arg(long)]
    group: Kind,
    #[arg(long)]
    n: usize,
    /// Comma-separated generator indices; empty for the whole group
    #[arg(
        long,
        required_unless_present = "all_sets",
        conflicts_with = "all_sets"
    )]
    set: Option<String>,
    /// Emit one row per index set
    #[arg(long)]
    all_sets: bool,
    #[arg(long, value_enum, default_value_t = RestrictArg::All)]
    restrict: RestrictArg,
    /// Weight chessboard elements by their character
    #[arg(long)]
    chi: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ClosedArgs {
    #[arg(long)]
    formula: Formula,
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "all_sets")]
    set: Option<String>,
    #[arg(long)]
    all_sets: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `default` or a comma-separated list of identity ids
    #[arg(long, default_value = "default")]
    suite: String,
    #[arg(long)]
    max_n_a: Option<usize>,
    #[arg(long)]
    max_n_b: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Stats(a) => stats(&a).map(|s| (0, s)),
        Command::Gf(a) => gf(&a).map(|s| (0, s)),
        Command::Closed(a) => closed(&a).map(|s| (0, s)),
        Command::Verify(a) => verify(&a),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let code = match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_USAGE,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn coeff_list(p: &IntPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn stats(args: &StatsArgs) -> Result<String> {
    let element = match parse_window(args.group, &args.window, None)? {
        Element::A(w) => {
            let r = Row::new(&w, odd_length_a(&w), None);
            return Ok(r.render(args.format));
        }
        Element::B(w) => w,
    };
    let s = odd_stats_b(&element);
    let r = Row::new(
        &element,
        odd_length_b(&element),
        Some((s.oinv, s.oneg, s.onsp)),
    );
    Ok(r.render(args.format))
}

#[derive(Serialize)]
struct Row {
    group: Kind,
    window: Vec<i32>,
    length: u64,
    odd_length: u64,
    descents: Vec<usize>,
    left_descents: Vec<usize>,
    class: String,
    chi: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oinv: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oneg: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    onsp: Option<u64>,
}

impl Row {
    fn new<E: GroupElement>(w: &E, odd: u64, b: Option<(u64, u64, u64)>) -> Self {
        let class: ChessboardClass = chessboard_class(w);
        Row {
            group: E::KIND,
            window: w.window().to_vec(),
            length: w.length(),
            odd_length: odd,
            descents: w.right_descents().members().collect(),
            left_descents: w.left_descents().members().collect(),
            class: class.to_string(),
            chi: class.chi(),
            oinv: b.map(|t| t.0),
            oneg: b.map(|t| t.1),
            onsp: b.map(|t| t.2),
        }
    }

    fn render(&self, format: Format) -> String {
        let list = |v: &[usize]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let window = self
            .window
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let chi = self.chi.map_or("none".to_string(), |c| c.to_string());
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "group: {}", self.group).unwrap();
                writeln!(out, "window: [{window}]").unwrap();
                writeln!(out, "length: {}", self.length).unwrap();
                writeln!(out, "odd_length: {}", self.odd_length).unwrap();
                writeln!(out, "descents: {{{}}}", list(&self.descents)).unwrap();
                writeln!(out, "left_descents: {{{}}}", list(&self.left_descents)).unwrap();
                writeln!(out, "class: {}", self.class).unwrap();
                writeln!(out, "chi: {chi}").unwrap();
                if let (Some(a), Some(b), Some(c)) = (self.oinv, self.oneg, self.onsp) {
                    writeln!(out, "oinv: {a}\noneg: {b}\nonsp: {c}").unwrap();
                }
                out
            }
            Format::Csv => {
                let mut out =
                    String::from("group,window,length,odd_length,descents,left_descents,class,chi");
                let mut row = format!(
                    "{},{},{},{},{},{},{},{}",
                    self.group,
                    csv_quote(&window),
                    self.length,
                    self.odd_length,
                    csv_quote(&list(&self.descents)),
                    csv_quote(&list(&self.left_descents)),
                    self.class,
                    chi
                );
                if let (Some(a), Some(b), Some(c)) = (self.oinv, self.oneg, self.onsp) {
                    out.push_str(",oinv,oneg,onsp");
                    write!(row, ",{a},{b},{c}").unwrap();
                }
                format!("{out}\n{row}\n")
            }
        }
    }
}

/// One polynomial result keyed by rank and index set.
#[derive(Serialize)]
struct PolyRow {
    n: usize,
    set: Vec<usize>,
    polynomial: IntPolynomial,
}

fn render_rows(rows: &[PolyRow], header: serde_json::Value, batch: bool, format: Format) -> String {
    match format {
        Format::Text => rows
            .iter()
            .map(|r| {
                if batch {
                    let set = r
                        .set
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{{{set}}}: {}\n", r.polynomial)
                } else {
                    format!("{}\n", r.polynomial)
                }
            })
            .collect(),
        Format::Json => {
            let mut doc = header;
            if batch {
                doc["results"] = serde_json::to_value(rows).expect("serializable rows");
            } else {
                let r = &rows[0];
                doc["n"] = json!(r.n);
                doc["set"] = json!(r.set);
                doc["polynomial"] =
                    serde_json::to_value(&r.polynomial).expect("serializable polynomial");
            }
            to_json(&doc)
        }
        Format::Csv => {
            let mut out = String::from("n,set,coefficients\n");
            for r in rows {
                let set = r
                    .set
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(
                    out,
                    "{},{},{}",
                    r.n,
                    csv_quote(&set),
                    csv_quote(&coeff_list(&r.polynomial))
                )
                .unwrap();
            }
            out
        }
    }
}

fn gf(args: &GfArgs) -> Result<String> {
    let weight = WeightSpec::new(args.restrict.into(), args.chi)?;
    let limits = Limits::default();
    limits.check(args.group, args.n)?;
    let single = match &args.set {
        Some(text) => Some(IndexSet::parse(args.group, args.n, text)?),
        None => None,
    };
    let table = DescentClassTable::build(args.group, args.n, args.threads.max(1), &limits)?;
    let rows: Vec<PolyRow> = match &single {
        Some(set) => vec![PolyRow {
            n: args.n,
            set: set.members().collect(),
            polynomial: table.gf_quotient(set, &weight)?,
        }],
        None => IndexSet::all(args.group, args.n)?
            .zip(table.all_quotients(&weight))
            .map(|(set, polynomial)| PolyRow {
                n: args.n,
                set: set.members().collect(),
                polynomial,
            })
            .collect(),
    };
    let restrict = format!("{:?}", args.restrict).to_lowercase();
    let header = json!({ "group": args.group.to_string(), "restrict": restrict, "chi": args.chi });
    Ok(render_rows(&rows, header, single.is_none(), args.format))
}

fn closed(args: &ClosedArgs) -> Result<String> {
    let kind = args.formula.kind();
    let sets: Vec<Option<IndexSet>> = if args.all_sets {
        if args.formula.takes_set() {
            IndexSet::all(kind, args.n)?.map(Some).collect()
        } else {
            vec![None]
        }
    } else {
        match (&args.set, args.formula.takes_set()) {
            (Some(text), true) => vec![Some(IndexSet::parse(kind, args.n, text)?)],
            (None, true) => {
                return Err(Error::Parse(format!(
                    "formula {} needs --set",
                    args.formula
                )));
            }
            (_, false) => vec![None],
        }
    };
    let rows = sets
        .iter()
        .map(|set| {
            Ok(PolyRow {
                n: args.n,
                set: set
                    .as_ref()
                    .map(|s| s.members().collect())
                    .unwrap_or_default(),
                polynomial: args.formula.evaluate(args.n, set.as_ref())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let header = json!({ "formula": args.formula.tag() });
    Ok(render_rows(
        &rows,
        header,
        args.all_sets && args.formula.takes_set(),
        args.format,
    ))
}

fn verify(args: &VerifyArgs) -> Result<(i32, String)> {
    let ids = match args.suite.trim() {
        "default" | "all" => IdentityId::ALL.to_vec(),
        list => list
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<IdentityId>>>()?,
    };
    let mut config = SuiteConfig {
        ids,
        max_n_a: args.max_n_a,
        max_n_b: args.max_n_b,
        ..Default::default()
    };
    if let Some(t) = args.threads {
        config.threads = t.max(1);
    }
    config.validate()?;
    let reports = run_suite(&config);
    let out = match args.report {
        ReportFormat::Json => to_json(&reports),
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                let status = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Error => "ERROR",
                };
                let caps = [("A", r.params.max_n_a), ("B", r.params.max_n_b)]
                    .iter()
                    .filter_map(|(k, c)| c.map(|c| format!("{k}<={c}")))
                    .collect::<Vec<_>>()
                    .join(" ");
                write!(
                    out,
                    "{status:5} {:28} {caps:12} instances={:<8} {} ms",
                    r.identity.tag(),
                    r.params.instances,
                    r.elapsed_ms
                )
                .unwrap();
                if let Some(m) = &r.message {
                    write!(out, "  ({m})").unwrap();
                }
                out.push('\n');
                if let Some(cx) = &r.counterexample {
                    writeln!(
                        out,
                        "      instance: {}",
                        serde_json::to_string(&cx.instance).unwrap()
                    )
                    .unwrap();
                    writeln!(out, "      lhs: {}", cx.lhs).unwrap();
                    writeln!(out, "      rhs: {}", cx.rhs).unwrap();
                }
            }
            let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
            writeln!(out, "{passed}/{} checks passed", reports.len()).unwrap();
            out
        }
    };
    Ok((
        if suite_passed(&reports) {
            0
        } else {
            EXIT_FAILURE
        },
        out,
    ))
}
