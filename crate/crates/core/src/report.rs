//! Condition records shared by the group condition suite and the
//! membership battery.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Which neighbourhood intersection broke quadrangularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    In,
    Out,
}

/// Concrete evidence attached to a condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Arc { from: usize, to: usize },
    Edge { a: usize, b: usize },
    Vertex { v: usize },
    Pair { a: usize, b: usize, side: Side },
    Subset { members: Vec<usize> },
    Elements { members: Vec<String> },
    Note { text: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

impl Condition {
    pub fn pass(name: &str) -> Self {
        Condition {
            name: name.to_string(),
            status: Status::Pass,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(name: &str, witnesses: Vec<Witness>) -> Self {
        Condition {
            name: name.to_string(),
            status: Status::Fail,
            witnesses,
        }
    }

    pub fn not_applicable(name: &str, why: &str) -> Self {
        Condition {
            name: name.to_string(),
            status: Status::NotApplicable,
            witnesses: vec![Witness::Note {
                text: why.to_string(),
            }],
        }
    }

    /// `pass` when `ok`, otherwise `fail` with the given witnesses.
    pub fn check(name: &str, ok: bool, witnesses: Vec<Witness>) -> Self {
        if ok {
            Condition::pass(name)
        } else {
            Condition::fail(name, witnesses)
        }
    }

    pub fn with_note(mut self, text: impl Into<String>) -> Self {
        self.witnesses.push(Witness::Note { text: text.into() });
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a",
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Arc { from, to } => write!(f, "arc ({from},{to})"),
            Witness::Edge { a, b } => write!(f, "edge {{{a},{b}}}"),
            Witness::Vertex { v } => write!(f, "vertex {v}"),
            Witness::Pair { a, b, side } => write!(f, "pair {{{a},{b}}} ({side:?})"),
            Witness::Subset { members } => write!(f, "subset {members:?}"),
            Witness::Elements { members } => write!(f, "elements [{}]", members.join(", ")),
            Witness::Note { text } => f.write_str(text),
        }
    }
}
