//! Reading fans and completion pairs from `example:NAME` or JSON files.

use std::fmt;
use std::fs;

use serde::Deserialize;
use toric_weights::catalogue::{builtin_example, Example};
use toric_weights::deligne::{validate_completion, CompletionPair};
use toric_weights::{Fan, FanDescription};

#[derive(Debug)]
pub enum CliError {
    Core(toric_weights::Error),
    /// A core error with advice on what to run instead.
    Hinted(toric_weights::Error, &'static str),
    Io(String),
    Parse(String),
    Unsupported(String),
    Usage(String),
    /// Two computations that must agree did not.
    Inconsistent(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) | CliError::Hinted(e, _) => e.code(),
            CliError::Io(_) => "IoError",
            CliError::Parse(_) => "ParseError",
            CliError::Unsupported(_) => "Unsupported",
            CliError::Usage(_) => "UsageError",
            CliError::Inconsistent(_) => "Inconsistent",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            CliError::Inconsistent(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{}: {}", e.code(), e),
            CliError::Hinted(e, hint) => write!(f, "{}: {} ({hint})", e.code(), e),
            CliError::Io(m)
            | CliError::Parse(m)
            | CliError::Unsupported(m)
            | CliError::Usage(m)
            | CliError::Inconsistent(m) => {
                write!(f, "{}: {}", self.code(), m)
            }
        }
    }
}

impl From<toric_weights::Error> for CliError {
    fn from(e: toric_weights::Error) -> Self {
        CliError::Core(e)
    }
}

/// The fan file format; nonmaximal faces are implied.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub ambient: FanFile,
    pub open_rays: Vec<usize>,
}

impl From<FanDescription> for FanFile {
    fn from(d: FanDescription) -> Self {
        FanFile {
            rank: d.rank,
            rays: d.rays,
            maximal_cones: d.maximal_cones,
        }
    }
}

impl FanFile {
    fn validate(self) -> Result<Fan, CliError> {
        if let Some((i, r)) = self.rays.iter().enumerate().find(|(_, r)| r.len() != self.rank) {
            return Err(CliError::Parse(format!(
                "ray {i} has {} coordinates, expected {}",
                r.len(),
                self.rank
            )));
        }
        Ok(toric_weights::validate_fan(self.rank, self.rays, self.maximal_cones)?)
    }
}

pub enum Input {
    Fan(Fan),
    Pair(CompletionPair),
}

impl Input {
    /// The fan, or the ambient fan of a pair.
    pub fn into_fan(self) -> Fan {
        match self {
            Input::Fan(f) => f,
            Input::Pair(p) => p.ambient().clone(),
        }
    }

    pub fn into_pair(self) -> Result<CompletionPair, CliError> {
        match self {
            Input::Pair(p) => Ok(p),
            Input::Fan(_) => Err(CliError::Usage(
                "expected a completion pair {\"ambient\": ..., \"open_rays\": [...]}".into(),
            )),
        }
    }
}

pub fn load(source: &str) -> Result<Input, CliError> {
    if let Some(name) = source.strip_prefix("example:") {
        return Ok(match builtin_example(name)? {
            Example::Fan(f) => Input::Fan(f),
            Example::Completion(p) => Input::Pair(p),
        });
    }
    let text = fs::read_to_string(source).map_err(|e| CliError::Io(format!("{source}: {e}")))?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Input, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if value.get("ambient").is_some() {
        let pair: PairFile = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
        let ambient = pair.ambient.validate()?;
        Ok(Input::Pair(validate_completion(ambient, &pair.open_rays)?))
    } else {
        let fan: FanFile = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Input::Fan(fan.validate()?))
    }
}
