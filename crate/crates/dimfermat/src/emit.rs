//! Report rendering.

use clap::ValueEnum;
use dimfermat_core::{Certificate, Status};

use crate::json;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    #[value(alias = "json-like", alias = "structured")]
    Json,
}

fn tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "OK",
        Status::Fail => "FAIL",
        Status::Inconclusive => "INCONCLUSIVE",
    }
}

/// `OK claim k=v ...`
pub fn headline(c: &Certificate) -> String {
    let mut line = format!("{} {}", tag(c.status), c.claim);
    for (k, v) in &c.params {
        line.push_str(&format!(" {k}={v}"));
    }
    line
}

/// One line per certificate; anything that did not pass is followed by its witness.
pub fn emit_text(certs: &[Certificate]) -> String {
    let mut out = String::new();
    for c in certs {
        out.push_str(&headline(c));
        out.push('\n');
        if c.status != Status::Pass {
            out.push_str("  witness: ");
            out.push_str(&json::witness_to_json(&c.witness).to_string());
            out.push('\n');
        }
    }
    out
}

pub fn emit_json(certs: &[Certificate]) -> String {
    let mut s = serde_json::to_string_pretty(&json::document(certs)).expect("serializable");
    s.push('\n');
    s
}

pub fn emit(certs: &[Certificate], format: Format) -> String {
    match format {
        Format::Text => emit_text(certs),
        Format::Json => emit_json(certs),
    }
}
