//! Structured verification results.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "inconclusive" => Some(Status::Inconclusive),
            _ => None,
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Witness payload: a small JSON-like tree with ordered maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Witness>),
    Map(Vec<(String, Witness)>),
}

impl Witness {
    pub fn map() -> Self {
        Witness::Map(Vec::new())
    }

    /// Appends a key to a map witness; panics on non-maps.
    pub fn with(mut self, key: &str, value: impl Into<Witness>) -> Self {
        match &mut self {
            Witness::Map(entries) => entries.push((key.to_string(), value.into())),
            _ => panic!("Witness::with on a non-map"),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&Witness> {
        match self {
            Witness::Map(entries) => entries.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Witness::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Witness::Bool(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Witness::Text(v) => Some(v),
            _ => None,
        }
    }
}

impl From<bool> for Witness {
    fn from(v: bool) -> Self {
        Witness::Bool(v)
    }
}

impl From<i64> for Witness {
    fn from(v: i64) -> Self {
        Witness::Int(v)
    }
}

impl From<usize> for Witness {
    fn from(v: usize) -> Self {
        Witness::Int(v as i64)
    }
}

impl From<u32> for Witness {
    fn from(v: u32) -> Self {
        Witness::Int(v as i64)
    }
}

impl From<&str> for Witness {
    fn from(v: &str) -> Self {
        Witness::Text(v.to_string())
    }
}

impl From<String> for Witness {
    fn from(v: String) -> Self {
        Witness::Text(v)
    }
}

impl<T: Into<Witness>> From<Vec<T>> for Witness {
    fn from(v: Vec<T>) -> Self {
        Witness::List(v.into_iter().map(Into::into).collect())
    }
}

/// Outcome of one checked claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub claim: String,
    pub params: Vec<(String, i64)>,
    pub status: Status,
    pub witness: Witness,
}

impl Certificate {
    pub fn new(claim: &str, status: Status) -> Self {
        Certificate { claim: claim.to_string(), params: Vec::new(), status, witness: Witness::map() }
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.push((key.to_string(), value));
        self
    }

    pub fn witness(mut self, witness: Witness) -> Self {
        self.witness = witness;
        self
    }

    pub fn get_param(&self, key: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
