//! Command-line front end: `count`, `render` and `verify`.
//!
//! [`run`] does all the work and returns what would be written, so the
//! binary is a thin wrapper and tests can drive commands in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::complex::{mu_side, MultiplicityTrace};
use crate::counts::{complex_count, known_value, maximality_report, real_count, CountReport};
use crate::error::Error;
use crate::geometry::{BoundaryEdge, LatticePoint, Side};
use crate::path::{build_maximal_path, MarkedConfig};
use crate::real::{ronga_sign_sequence, theorem_sign_sequence, SignSequence};
use crate::render::{render, Format, RenderSpec, Scene, Show};

pub const SCHEMA: &str = "tz/1";

#[derive(Debug, Parser)]
#[command(name = "zeuthen", version, about = "Lattice-path counts of curves through points tangent to lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sum path multiplicities over all marked-point selections; prints JSON.
    Count(CountArgs),
    /// Draw the maximal path for one marked-point selection.
    Render(RenderArgs),
    /// Check the one- and two-line totals against their closed forms; prints CSV.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    degree: i64,
    /// Comma-separated tangency edges from h, v, b (may be empty).
    #[arg(long, allow_hyphen_values = true)]
    edges: String,
    /// `ronga`, `theorem`, `none`, or an explicit sequence like `-+,++,++`.
    #[arg(long, default_value = "none", allow_hyphen_values = true)]
    signs: String,
    /// Include each selection's path and corner-cut traces.
    #[arg(long)]
    per_path: bool,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    degree: i64,
    /// Marked points as `x,y;x,y` (may be empty).
    #[arg(long, default_value = "")]
    marked: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Svg)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Pixels per lattice unit (svg).
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(1..))]
    scale: u32,
    /// Layers to leave out, comma-separated from path, marked, subdivision, labels.
    #[arg(long, default_value = "")]
    hide: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Svg,
    Ascii,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 8)]
    max_degree: i64,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Inconsistency(_) => 1,
            _ => 2,
        };
        Self::fail(code, e)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(e.to_string());
            }
            // Keep the message block before the usage hint, on one line.
            let rendered = e.to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty() && !l.starts_with("Usage"))
                .map(str::trim)
                .collect();
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("{}\n", message.join(" ")),
            };
        }
    };
    let result = match cli.command {
        Command::Count(a) => cmd_count(&a),
        Command::Render(a) => cmd_render(&a),
        Command::Verify(a) => return cmd_verify(&a),
    };
    result.unwrap_or_else(Outcome::from_error)
}

pub fn parse_edges(text: &str) -> Result<Vec<BoundaryEdge>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let mut chars = t.chars();
            match (chars.next().and_then(BoundaryEdge::from_letter), chars.next()) {
                (Some(e), None) => Ok(e),
                _ => Err(format!("unknown edge {t:?}; expected h, v or b")),
            }
        })
        .collect()
}

pub fn parse_marked(text: &str) -> Result<Vec<LatticePoint>, String> {
    text.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let coords: Vec<&str> = t.split(',').map(str::trim).collect();
            match coords.as_slice() {
                [x, y] => match (x.parse(), y.parse()) {
                    (Ok(x), Ok(y)) => Ok(LatticePoint::new(x, y)),
                    _ => Err(format!("malformed point {t:?}")),
                },
                _ => Err(format!("malformed point {t:?}; expected x,y")),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub side: Side,
    pub mu: u64,
    /// `[pivot, factor]` per corner cut.
    pub cuts: Vec<[u64; 2]>,
    pub dead: bool,
}

impl From<&MultiplicityTrace> for TraceJson {
    fn from(t: &MultiplicityTrace) -> Self {
        Self {
            side: t.side,
            mu: t.replay(),
            cuts: t.steps.iter().map(|s| [s.pivot as u64, s.factor]).collect(),
            dead: t.terminal == crate::complex::Terminal::Dead,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionJson {
    pub marked: Vec<[i64; 2]>,
    pub mu: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_real: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<TraceJson>>,
}

/// The document printed by `count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountJson {
    pub schema: String,
    pub degree: i64,
    pub edges: Vec<String>,
    pub total_complex: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_real: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<u64>,
    pub unverified: bool,
    pub selections: Vec<SelectionJson>,
}

impl CountJson {
    pub fn from_report(report: &CountReport, per_path: bool) -> Self {
        let selections = report
            .per_selection
            .iter()
            .map(|s| {
                let (path, traces) = if per_path {
                    let cfg = MarkedConfig::from_points(report.degree, &s.marked)
                        .expect("selection came from a valid config");
                    let path = build_maximal_path(&cfg);
                    let traces = Side::BOTH
                        .iter()
                        .map(|&side| TraceJson::from(&mu_side(&path, side).1))
                        .collect();
                    (Some(path.points().iter().map(|p| [p.x, p.y]).collect()), Some(traces))
                } else {
                    (None, None)
                };
                SelectionJson {
                    marked: s.marked.iter().map(|p| [p.x, p.y]).collect(),
                    mu: s.mu,
                    mu_real: s.mu_real,
                    path,
                    traces,
                }
            })
            .collect();
        Self {
            schema: SCHEMA.to_string(),
            degree: report.degree,
            edges: report.edges.iter().map(|e| e.letter().to_string()).collect(),
            total_complex: report.total_complex,
            total_real: report.total_real,
            signs: report.sign_sequence.as_ref().map(|s| s.to_string()),
            expected: known_value(report.degree, report.edges.len()),
            unverified: report.is_unverified(),
            selections,
        }
    }
}

fn resolve_signs(
    spec: &str,
    degree: i64,
    edges: &[BoundaryEdge],
) -> Result<Option<SignSequence>, Error> {
    match spec.trim() {
        "none" => Ok(None),
        "theorem" => theorem_sign_sequence(degree).map(Some),
        "ronga" => match edges {
            [e] => ronga_sign_sequence(degree, *e).map(Some),
            _ => Err(Error::SignParse(
                "ronga sequences need exactly one edge".to_string(),
            )),
        },
        other => other.parse().map(Some),
    }
}

fn cmd_count(a: &CountArgs) -> Result<Outcome, Error> {
    let edges = match parse_edges(&a.edges) {
        Ok(e) => e,
        Err(msg) => return Ok(Outcome::fail(2, msg)),
    };
    let signs = resolve_signs(&a.signs, a.degree, &edges)?;
    let report = match &signs {
        Some(s) => real_count(a.degree, &edges, s)?,
        None => complex_count(a.degree, &edges)?,
    };
    let doc = CountJson::from_report(&report, a.per_path);
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    Ok(Outcome::ok(text))
}

fn cmd_render(a: &RenderArgs) -> Result<Outcome, Error> {
    let marked = match parse_marked(&a.marked) {
        Ok(m) => m,
        Err(msg) => return Ok(Outcome::fail(2, msg)),
    };
    let mut show = Show::default();
    for layer in a.hide.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match layer {
            "path" => show.path = false,
            "marked" => show.marked_points = false,
            "subdivision" => show.subdivision = false,
            "labels" => show.labels = false,
            other => return Ok(Outcome::fail(2, format!("unknown layer {other:?}"))),
        }
    }
    let config = MarkedConfig::from_points(a.degree, &marked)?;
    let spec = RenderSpec {
        format: match a.format {
            FormatArg::Svg => Format::Svg,
            FormatArg::Ascii => Format::Ascii,
        },
        show,
        scale: a.scale,
    };
    let picture = render(&Scene::new(config), &spec);
    match &a.out {
        Some(path) => match std::fs::write(path, &picture) {
            Ok(()) => Ok(Outcome::ok(String::new())),
            Err(e) => Ok(Outcome::fail(2, format!("cannot write {}: {e}", path.display()))),
        },
        None => Ok(Outcome::ok(picture)),
    }
}

/// One line of the `verify` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub degree: i64,
    pub one_line: u64,
    pub one_line_expected: u64,
    pub two_line: u64,
    pub two_line_expected: u64,
    pub two_line_real: u64,
    pub maximal: bool,
}

impl VerifyRow {
    pub fn compute(degree: i64) -> Result<Self, Error> {
        let one = complex_count(degree, &[BoundaryEdge::Hypotenuse])?;
        let max = maximality_report(degree)?;
        let two_line_real = max.real.total_real.unwrap_or(0);
        Ok(Self {
            degree,
            one_line: one.total_complex,
            one_line_expected: known_value(degree, 1).unwrap_or(0),
            two_line: max.complex.total_complex,
            two_line_expected: known_value(degree, 2).unwrap_or(0),
            two_line_real,
            maximal: max.equal,
        })
    }

    pub fn passes(&self) -> bool {
        self.one_line == self.one_line_expected
            && self.two_line == self.two_line_expected
            && self.two_line_real == self.two_line
            && self.maximal
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.degree,
            self.one_line,
            self.one_line_expected,
            self.two_line,
            self.two_line_expected,
            self.two_line_real,
            if self.maximal { "yes" } else { "no" }
        )
    }
}

pub const VERIFY_HEADER: &str =
    "d,n1_complex,n1_expected,n2_complex,n2_expected,n2_real,maximal";

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    if a.max_degree < 2 {
        return Outcome::fail(2, format!("--max-degree must be at least 2, got {}", a.max_degree));
    }
    let mut out = Outcome::ok(format!("{VERIFY_HEADER}\n"));
    for d in 2..=a.max_degree {
        let row = match VerifyRow::compute(d) {
            Ok(row) => row,
            Err(e) => {
                let mut fail = Outcome::from_error(e);
                fail.stdout = out.stdout;
                return fail;
            }
        };
        out.stdout.push_str(&row.csv());
        out.stdout.push('\n');
        if !row.passes() && out.code == 0 {
            out.code = 1;
            out.stderr = format!("first failing row: {}\n", row.csv());
        }
    }
    out
}
