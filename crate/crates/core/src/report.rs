//! Check records shared by the verification corpus and the command line.

use serde::Serialize;
use serde_json::{json, Value};

use crate::exactlin::{Rat, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotSatisfied,
    Error,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Error)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotSatisfied => "hypothesis-not-satisfied",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: Value) -> Self {
        Check {
            name: name.into(),
            status,
            detail,
        }
    }

    pub fn error(name: impl Into<String>, err: &crate::Error) -> Self {
        Check::new(name, Status::Error, json!({ "error": err.to_string() }))
    }
}

pub fn rat_json(v: &Rat) -> Value {
    Value::String(v.to_string())
}

pub fn vector_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().iter().map(|v| vector_json(v)).collect())
}
