//! JSON profile documents.
//!
//! ```json
//! { "name": "P2", "N": 4, "orientation": "lefschetz",
//!   "blocks": [ { "label": "a0", "euler": 0, "nonzero": false }, ... ] }
//! ```
//!
//! `nonzero` may be omitted and then follows `euler != 0`. Unknown keys are
//! rejected. Output is pretty-printed with keys in the order above.

use serde::{Deserialize, Serialize};

use crate::profile::{LefschetzProfile, Orientation, PrimitiveBlock};
use crate::Profile;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown orientation `{0}` (expected `lefschetz` or `dual`)")]
    Orientation(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockDoc {
    label: String,
    euler: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nonzero: Option<bool>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDoc {
    name: String,
    #[serde(rename = "N")]
    n: usize,
    orientation: String,
    blocks: Vec<BlockDoc>,
}

pub(crate) fn parse_orientation(s: &str) -> Result<Orientation, FormatError> {
    match s {
        "lefschetz" => Ok(Orientation::Lefschetz),
        "dual" => Ok(Orientation::DualLefschetz),
        other => Err(FormatError::Orientation(other.to_string())),
    }
}

impl ProfileDoc {
    fn into_profile(self) -> Result<Profile, FormatError> {
        let orientation = parse_orientation(&self.orientation)?;
        let blocks = self
            .blocks
            .into_iter()
            .map(|b| match b.nonzero {
                Some(nz) => PrimitiveBlock::with_marker(b.label, b.euler, nz),
                None => PrimitiveBlock::new(b.label, b.euler),
            })
            .collect();
        Ok(LefschetzProfile::new(self.name, self.n, orientation, blocks))
    }

    fn from_profile(p: &Profile) -> Self {
        ProfileDoc {
            name: p.name.clone(),
            n: p.n,
            orientation: p.orientation.as_str().to_string(),
            blocks: p
                .blocks
                .iter()
                .map(|b| BlockDoc { label: b.label.clone(), euler: b.euler, nonzero: Some(b.nonzero) })
                .collect(),
        }
    }
}

pub fn profile_from_json(text: &str) -> Result<Profile, FormatError> {
    serde_json::from_str::<ProfileDoc>(text)?.into_profile()
}

pub(crate) fn profile_from_value(v: serde_json::Value) -> Result<Profile, FormatError> {
    serde_json::from_value::<ProfileDoc>(v)?.into_profile()
}

pub(crate) fn profile_to_value(p: &Profile) -> serde_json::Value {
    serde_json::to_value(ProfileDoc::from_profile(p)).expect("plain data serializes")
}

/// Canonical text with a trailing newline.
pub fn profile_to_json(p: &Profile) -> String {
    let mut s = serde_json::to_string_pretty(&ProfileDoc::from_profile(p)).expect("plain data serializes");
    s.push('\n');
    s
}
