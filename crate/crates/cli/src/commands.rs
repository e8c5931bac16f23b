//! The subcommands, as functions from input text to a JSON report and an
//! exit code.

use std::fmt;
use std::io::Read;

use serde_json::{json, Value};
use sfcontact::blowdown_route::{decide_route_report, RouteVerdict};
use sfcontact::consistency::{implication_sweep, route_oracle_sweep};
use sfcontact::decide::{decide as decide_question, shadow_check, Question};
use sfcontact::enumeration::SeifertFamily;
use sfcontact::plumbing::{build_plumbing, determinant, intersection_matrix, is_negative_definite};
use sfcontact::realizability::is_realizable;
use sfcontact::seifert::{normalize, orientation_double_cover};
use sfcontact::{GammaVector, SeifertData};

use crate::parse::{parse_gammas, parse_seifert, ParseError};
use crate::report;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Invalid(String),
    Inconsistent(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error at {e}"),
            CliError::Invalid(msg) | CliError::Inconsistent(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<sfcontact::Error> for CliError {
    fn from(e: sfcontact::Error) -> Self {
        match e {
            sfcontact::Error::Internal(_) => CliError::Inconsistent(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// A JSON report and the exit code to leave with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, code: 0 }
    }

    /// The report as printed: pretty JSON and a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// The argument itself, or standard input when it is `-`.
pub fn read_input(arg: &str) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
    Ok(buf)
}

/// Parse and validate a Seifert expression.
pub fn seifert_input(text: &str) -> Result<SeifertData, CliError> {
    let m = parse_seifert(text)?;
    m.validate()?;
    Ok(m)
}

pub fn gamma_input(text: &str) -> Result<GammaVector, CliError> {
    Ok(GammaVector::new(parse_gammas(text)?)?)
}

pub fn invariants(text: &str) -> Result<Outcome, CliError> {
    let m = normalize(&seifert_input(text)?)?;
    Ok(Outcome::ok(json!({
        "manifold": report::invariants(&m),
        "reversed": report::invariants(&m.reversed()),
    })))
}

/// Exits with [`EXIT_INCONSISTENT`] when the realizability search and the
/// blow-down route disagree on a `Γ` the contact decision consulted.
pub fn decide(question: Question, text: &str) -> Result<Outcome, CliError> {
    let d = decide_question(question, &seifert_input(text)?)?;
    let code = if shadow_check(&d).is_err() { EXIT_INCONSISTENT } else { 0 };
    Ok(Outcome { report: report::decision(&d), code })
}

pub fn realizable(text: &str) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(match is_realizable(&gamma_input(text)?)? {
        Some(c) => json!({ "realizable": true, "certificate": report::certificate(&c) }),
        None => json!({ "realizable": false }),
    }))
}

/// The report and the DOT rendering of the plumbing.
pub fn plumbing(text: &str, double_cover: bool) -> Result<(Outcome, String), CliError> {
    let mut m = normalize(&seifert_input(text)?)?;
    if double_cover {
        m = orientation_double_cover(&m)?;
    } else if !m.is_orientable_base() {
        return Err(CliError::Invalid(format!(
            "{m} has a non-orientable base; pass --double-cover to plumb its orientable double cover"
        )));
    }
    let graph = build_plumbing(&m)?;
    let q = intersection_matrix(&graph);
    let mut body = report::plumbing(&graph);
    let fields = body.as_object_mut().expect("plumbing report is an object");
    fields.insert("manifold".into(), Value::String(m.to_string()));
    fields.insert("determinant".into(), report::int(&determinant(&q)?));
    fields.insert("negative_definite".into(), Value::Bool(is_negative_definite(&q)?));
    Ok((Outcome::ok(body), graph.to_dot()))
}

/// Route verdict and trace. Exits with [`EXIT_INCONSISTENT`] when the
/// route is inconclusive or contradicts the realizability search.
pub fn blowdown_trace(text: &str) -> Result<Outcome, CliError> {
    let gammas = gamma_input(text)?;
    let route = decide_route_report(&gammas)?;
    let search = is_realizable(&gammas)?.is_some();
    let agrees = !matches!(route.verdict, RouteVerdict::Inconclusive { .. }) && route.verdict.is_realizable() == search;
    let seqs = route.input.as_ref().map(|input| {
        json!({
            "d": report::int(input.d()),
            "n": input.n_seq().iter().map(report::int).collect::<Vec<_>>(),
            "m": input.m_seq().iter().map(report::int).collect::<Vec<_>>(),
        })
    });
    Ok(Outcome {
        report: json!({
            "gamma": report::gammas(&gammas),
            "verdict": report::verdict(&route.verdict),
            "search_agrees": agrees,
            "sequences": seqs,
            "trace": report::trace(&route.trace),
        }),
        code: if agrees { 0 } else { EXIT_INCONSISTENT },
    })
}

/// The family the implication half of `sweep` runs over: `r` bounds the
/// number of fibers and `max_denominator` the multiplicities.
pub fn sweep_family(r: usize, max_denominator: i64) -> SeifertFamily {
    SeifertFamily { genera: -2..=2, b: -3..=3, max_r: r, max_alpha: max_denominator }
}

pub fn sweep(r: usize, max_denominator: i64, jobs: Option<usize>) -> Result<Outcome, CliError> {
    if r < 3 || max_denominator < 2 {
        return Err(CliError::Invalid(format!(
            "sweep needs r ≥ 3 and a maximal denominator ≥ 2, got r = {r}, {max_denominator}"
        )));
    }
    let route = route_oracle_sweep::<i64>(r, max_denominator, jobs)?;
    let family = sweep_family(r, max_denominator);
    let implications = implication_sweep::<i64>(&family, jobs)?;
    let clean = route.is_clean() && implications.failures.is_empty();
    let mut fam = report::implication_sweep(&implications);
    fam.as_object_mut().expect("sweep report is an object").insert(
        "family".into(),
        json!({
            "genera": [family.genera.start(), family.genera.end()],
            "b": [family.b.start(), family.b.end()],
            "max_r": family.max_r,
            "max_alpha": family.max_alpha,
        }),
    );
    Ok(Outcome {
        report: json!({ "route_oracle": report::route_sweep(&route), "implications": fam, "clean": clean }),
        code: if clean { 0 } else { EXIT_INCONSISTENT },
    })
}
