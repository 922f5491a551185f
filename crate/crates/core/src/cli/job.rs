//! Job files: a key-value header followed by one tuple per line, or the same
//! content as a JSON object.
//!
//! ```text
//! # C5
//! q = 2
//! r = 3, 35
//! bounds = ht, bch
//! 0,5
//! 0,7
//! (0,15)
//! 1,0
//! ```

use serde::{Deserialize, Serialize};

use crate::dsbounds::BoundSet;
use crate::error::{Error, Result};
use crate::orbits::{CodeShape, DefiningSet, IndexTuple};

/// Command-specific settings that may come from the job file; command-line
/// flags take precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobOptions {
    pub over_u: bool,
    pub trace: bool,
    pub seed: Option<u64>,
    pub max_codewords: Option<u64>,
    pub max_orbit_subsets: Option<u64>,
    pub trials: Option<usize>,
    pub check: Option<String>,
}

/// A parsed but not yet validated job.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default)]
    pub q: Option<u64>,
    pub r: Vec<usize>,
    #[serde(default)]
    pub reps: Vec<IndexTuple>,
    #[serde(default, deserialize_with = "bounds_list")]
    pub bounds: Vec<String>,
    #[serde(default)]
    pub options: JobOptions,
}

fn bounds_list<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<String>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        One(String),
        Many(Vec<String>),
    }
    Ok(match Either::deserialize(d)? {
        Either::One(s) => split_list(&s),
        Either::Many(v) => v,
    })
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(String::from)
        .collect()
}

impl JobSpec {
    /// Parses either format; JSON is recognised by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("job JSON: {e}")))
        } else {
            Self::parse_text(text)
        }
    }

    fn parse_text(text: &str) -> Result<Self> {
        let mut spec = JobSpec::default();
        let mut seen_r = false;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", no + 1));
            if line.starts_with(|c: char| c.is_ascii_digit() || c == '(') {
                spec.reps
                    .push(line.parse().map_err(|e: Error| at(e.to_string()))?);
                continue;
            }
            let (key, value) = line
                .split_once(['=', ':'])
                .ok_or_else(|| at(format!("expected `key = value` or a tuple, got {line:?}")))?;
            let value = value.trim();
            let int = |v: &str| -> Result<u64> {
                v.parse()
                    .map_err(|_| at(format!("expected an integer, got {v:?}")))
            };
            let flag = |v: &str| -> Result<bool> {
                match v.to_ascii_lowercase().as_str() {
                    "true" | "yes" | "1" => Ok(true),
                    "false" | "no" | "0" => Ok(false),
                    _ => Err(at(format!("expected true or false, got {v:?}"))),
                }
            };
            match key.trim().to_ascii_lowercase().replace('-', "_").as_str() {
                "q" => spec.q = Some(int(value)?),
                "r" => {
                    let t: IndexTuple = value.parse().map_err(|e: Error| at(e.to_string()))?;
                    spec.r = t.0;
                    seen_r = true;
                }
                "bounds" => spec.bounds = split_list(value),
                "over_u" => spec.options.over_u = flag(value)?,
                "trace" => spec.options.trace = flag(value)?,
                "seed" => spec.options.seed = Some(int(value)?),
                "max_codewords" => spec.options.max_codewords = Some(int(value)?),
                "max_orbit_subsets" => spec.options.max_orbit_subsets = Some(int(value)?),
                "trials" => spec.options.trials = Some(int(value)? as usize),
                "check" => spec.options.check = Some(value.to_string()),
                other => return Err(at(format!("unknown key {other:?}"))),
            }
        }
        if !seen_r {
            return Err(Error::Parse("missing `r = ...` line".into()));
        }
        Ok(spec)
    }

    pub fn shape(&self) -> Result<CodeShape> {
        let q = self
            .q
            .ok_or_else(|| Error::Config("the job does not give q".into()))?;
        CodeShape::new(q, self.r.clone())
    }

    pub fn defining_set(&self) -> Result<DefiningSet> {
        DefiningSet::from_reps(&self.shape()?, &self.reps)
    }

    /// The bound set, with `override_list` (from the command line) taking
    /// precedence over the job file; defaults to BCH and HT.
    pub fn bound_set(&self, override_list: Option<&str>) -> Result<BoundSet> {
        match override_list {
            Some(list) => BoundSet::from_names(list),
            None if self.bounds.is_empty() => Ok(BoundSet::bch_ht()),
            None => BoundSet::from_names(&self.bounds.join(",")),
        }
    }
}
