use alloc::string::String;
use core::fmt;

use crate::domain::{Confederation, Stage};

/// An unrecognised enum code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseEnumError {
    pub kind: &'static str,
    pub value: String,
}

impl ParseEnumError {
    pub fn new(kind: &'static str, value: &str) -> Self {
        ParseEnumError {
            kind,
            value: String::from(value),
        }
    }
}

impl fmt::Display for ParseEnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown {} '{}'", self.kind, self.value)
    }
}

impl core::error::Error for ParseEnumError {}

/// Invalid matches, datasets or configuration.
#[derive(Clone, Debug, PartialEq)]
pub enum DataError {
    Field { field: &'static str, message: String },
    Config(String),
    DuplicateKey { edition: u16, date_order: u32 },
    ExcludedPlayoffPresent { edition: u16, team_a: String, team_b: String },
    ImpossibleStage { edition: u16, stage: Stage },
    InfeasibleCaps(String),
    MissingRating(Confederation),
}

impl fmt::Display for DataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DataError::Field { field, message } => write!(f, "field '{field}': {message}"),
            DataError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            DataError::DuplicateKey { edition, date_order } => {
                write!(f, "duplicate match key edition {edition}, date_order {date_order}")
            }
            DataError::ExcludedPlayoffPresent { edition, team_a, team_b } => write!(
                f,
                "the {edition} play-off {team_a} vs {team_b} must not be in the dataset"
            ),
            DataError::ImpossibleStage { edition, stage } => {
                write!(f, "stage {stage} cannot occur in {edition}")
            }
            DataError::InfeasibleCaps(msg) => write!(f, "caps cannot be satisfied: {msg}"),
            DataError::MissingRating(c) => write!(f, "no rating for {c}"),
        }
    }
}

impl core::error::Error for DataError {}
