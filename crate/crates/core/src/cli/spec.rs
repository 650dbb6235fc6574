use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{ModuleExpr, RingSpec, Variable};
use crate::grading::{Degree, Window};
use crate::scalar::Characteristic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Hilbert,
    Kseries,
    Betti,
    TorsionDim,
    Serre,
    KoszulVerify,
    Invert,
    EulerCheck,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Hilbert,
        Command::Kseries,
        Command::Betti,
        Command::TorsionDim,
        Command::Serre,
        Command::KoszulVerify,
        Command::Invert,
        Command::EulerCheck,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Hilbert => "hilbert",
            Command::Kseries => "kseries",
            Command::Betti => "betti",
            Command::TorsionDim => "torsion-dim",
            Command::Serre => "serre",
            Command::KoszulVerify => "koszul-verify",
            Command::Invert => "invert",
            Command::EulerCheck => "euler-check",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown command `{s}`")))
    }
}

impl Serialize for Command {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            other => Err(Error::Parse(format!("unknown output format `{other}`"))),
        }
    }
}

/// A ring given inline, either as matrix-ring column sizes or as an explicit
/// variable list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingInput {
    Columns { columns: Vec<u32> },
    Variables { variables: Vec<Variable> },
}

impl RingInput {
    pub fn build(&self) -> RingSpec {
        match self {
            RingInput::Columns { columns } => RingSpec::matrix(columns),
            RingInput::Variables { variables } => RingSpec::new(variables.clone()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RingField {
    Inline(RingInput),
    Path(String),
}

/// The raw JSON document before validation.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    command: Option<String>,
    ring: Option<RingField>,
    module: Option<ModuleExpr>,
    right: Option<ModuleExpr>,
    window: Option<Window>,
    at: Option<Degree>,
    series: Option<Vec<(Degree, i64)>>,
    sequence: Option<Vec<String>>,
    output: Option<String>,
    char: Option<u64>,
}

/// Settings supplied on the command line; they take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub command: Option<String>,
    pub output: Option<String>,
    pub characteristic: Option<u64>,
}

/// A fully validated job.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JobSpec {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingInput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleExpr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<ModuleExpr>,
    pub window: Window,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<Degree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<Vec<(Degree, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<String>>,
    pub output: OutputFormat,
    #[serde(rename = "char", serialize_with = "serialize_char")]
    pub characteristic: Characteristic,
}

fn serialize_char<S: serde::Serializer>(c: &Characteristic, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(c.as_u64())
}

impl JobSpec {
    /// Canonical JSON form; parsing it yields the same job.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job specs serialize")
    }
}

/// Parses and validates a job document with inline ring only.
pub fn parse_spec(text: &str) -> Result<JobSpec> {
    parse_spec_with(text, None, &Overrides::default())
}

/// Parses a job document. A string-valued `ring` is a path to a JSON ring
/// file, resolved against `base`.
pub fn parse_spec_with(text: &str, base: Option<&Path>, overrides: &Overrides) -> Result<JobSpec> {
    let raw: RawJob = serde_json::from_str(text).map_err(json_error)?;

    let command = overrides
        .command
        .clone()
        .or(raw.command)
        .ok_or_else(|| Error::Parse("no command given".into()))?
        .parse::<Command>()?;
    let output = match overrides.output.clone().or(raw.output) {
        Some(s) => s.parse()?,
        None => OutputFormat::default(),
    };
    let p = overrides.characteristic.or(raw.char).unwrap_or(0);
    let characteristic = Characteristic::from_u64(p)
        .ok_or_else(|| Error::Parse(format!("characteristic {p} is neither 0 nor a prime below 2^31")))?;

    let ring = match raw.ring {
        None => None,
        Some(RingField::Inline(r)) => Some(r),
        Some(RingField::Path(p)) => {
            let Some(base) = base else {
                return Err(Error::Parse(format!("ring file `{p}` given but no base directory to resolve it")));
            };
            let path = base.join(&p);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("cannot read ring file {}: {e}", path.display())))?;
            Some(serde_json::from_str(&text).map_err(json_error)?)
        }
    };

    let window = raw.window.ok_or_else(|| Error::Parse("missing `window`".into()))?;
    if window.is_empty() {
        return Err(Error::Parse("`window` must have at least one ceiling".into()));
    }

    let job = JobSpec {
        command,
        ring,
        module: raw.module,
        right: raw.right,
        window,
        at: raw.at,
        series: raw.series,
        sequence: raw.sequence,
        output,
        characteristic,
    };
    check_arity(&job)?;
    Ok(job)
}

fn check_arity(job: &JobSpec) -> Result<()> {
    let needs_module = job.command != Command::Invert;
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    let mut expect = |name: &'static str, present: bool, wanted: bool| {
        if wanted && !present {
            missing.push(name);
        } else if present && !wanted {
            extra.push(name);
        }
    };
    expect("ring", job.ring.is_some(), needs_module);
    expect("module", job.module.is_some(), needs_module);
    expect("right", job.right.is_some(), job.command == Command::Serre);
    expect("at", job.at.is_some(), job.command == Command::TorsionDim);
    expect("series", job.series.is_some(), job.command == Command::Invert);
    if job.sequence.is_some() && !matches!(job.command, Command::KoszulVerify | Command::EulerCheck) {
        extra.push("sequence");
    }
    if !missing.is_empty() {
        return Err(Error::Parse(format!("`{}` requires {}", job.command, quoted(&missing))));
    }
    if !extra.is_empty() {
        return Err(Error::Parse(format!("`{}` does not take {}", job.command, quoted(&extra))));
    }
    Ok(())
}

fn quoted(names: &[&str]) -> String {
    names.iter().map(|n| format!("`{n}`")).collect::<Vec<_>>().join(", ")
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "command": "kseries",
        "ring": {"columns": [1, 1]},
        "module": {"quotient": [[1, 1]]},
        "window": [[[1, 3], [2, 3]]]
    }"#;

    #[test]
    fn minimal_spec() {
        let job = parse_spec(MINIMAL).unwrap();
        assert_eq!(job.command, Command::Kseries);
        assert_eq!(job.output, OutputFormat::Json);
        assert_eq!(job.characteristic, Characteristic::Zero);
        assert_eq!(job.ring, Some(RingInput::Columns { columns: vec![1, 1] }));
        assert_eq!(job.module, Some(ModuleExpr::Quotient(vec![vec![1, 1]])));
    }

    #[test]
    fn zero_coefficient_is_rejected() {
        let text = MINIMAL.replace("[[1, 3], [2, 3]]", "[[1, 3], [2, 0]]");
        let err = parse_spec(&text).unwrap_err();
        assert_eq!(err.kind(), crate::ErrorKind::Parse);
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn unknown_command_is_named() {
        let text = MINIMAL.replace("kseries", "frobnicate");
        let err = parse_spec(&text).unwrap_err();
        assert_eq!(err.kind(), crate::ErrorKind::Parse);
        assert!(err.to_string().contains("frobnicate"));
    }

    #[test]
    fn arity_is_checked() {
        let text = MINIMAL.replace("kseries", "serre");
        assert!(parse_spec(&text).unwrap_err().to_string().contains("`right`"));
        let text = MINIMAL.replace("kseries", "torsion-dim");
        assert!(parse_spec(&text).unwrap_err().to_string().contains("`at`"));
        let invert = r#"{"command": "invert", "series": [[[], 1]], "window": [[[1, 4]]], "module": {"free": [[]]}}"#;
        assert!(parse_spec(invert).unwrap_err().to_string().contains("does not take"));
    }

    #[test]
    fn empty_window_is_rejected() {
        let text = MINIMAL.replace("[[[1, 3], [2, 3]]]", "[]");
        assert!(parse_spec(&text).is_err());
    }

    #[test]
    fn overrides_take_precedence() {
        let o = Overrides { command: Some("betti".into()), output: Some("csv".into()), characteristic: Some(2) };
        let job = parse_spec_with(MINIMAL, None, &o).unwrap();
        assert_eq!(job.command, Command::Betti);
        assert_eq!(job.output, OutputFormat::Csv);
        assert_eq!(job.characteristic, Characteristic::Prime(2));
        let o = Overrides { characteristic: Some(4), ..Overrides::default() };
        assert!(parse_spec_with(MINIMAL, None, &o).is_err());
    }

    #[test]
    fn canonical_round_trip() {
        let job = parse_spec(MINIMAL).unwrap();
        let canonical = job.to_json();
        let again = parse_spec(&canonical).unwrap();
        assert_eq!(job, again);
        assert_eq!(canonical, again.to_json());
    }
}
