//! Certificates as JSON trees.

use dimfermat_core::{Certificate, Status, Witness};
use serde_json::{Map, Value};

pub fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::Bool(b) => Value::Bool(*b),
        Witness::Int(i) => Value::from(*i),
        Witness::Text(s) => Value::String(s.clone()),
        Witness::List(items) => Value::Array(items.iter().map(witness_to_json).collect()),
        Witness::Map(entries) => Value::Object(entries.iter().map(|(k, v)| (k.clone(), witness_to_json(v))).collect()),
    }
}

/// Inverse of [`witness_to_json`]; `None` for nulls and non-integral numbers.
pub fn witness_from_json(v: &Value) -> Option<Witness> {
    Some(match v {
        Value::Null => return None,
        Value::Bool(b) => Witness::Bool(*b),
        Value::Number(n) => Witness::Int(n.as_i64()?),
        Value::String(s) => Witness::Text(s.clone()),
        Value::Array(items) => Witness::List(items.iter().map(witness_from_json).collect::<Option<_>>()?),
        Value::Object(entries) => {
            Witness::Map(entries.iter().map(|(k, v)| Some((k.clone(), witness_from_json(v)?))).collect::<Option<_>>()?)
        }
    })
}

pub fn certificate_to_json(c: &Certificate) -> Value {
    let params: Map<String, Value> = c.params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    let mut obj = Map::new();
    obj.insert("claim".into(), Value::String(c.claim.clone()));
    obj.insert("params".into(), Value::Object(params));
    obj.insert("status".into(), Value::String(c.status.as_str().into()));
    obj.insert("witness".into(), witness_to_json(&c.witness));
    Value::Object(obj)
}

pub fn certificate_from_json(v: &Value) -> Option<Certificate> {
    let obj = v.as_object()?;
    let params =
        obj.get("params")?.as_object()?.iter().map(|(k, v)| Some((k.clone(), v.as_i64()?))).collect::<Option<_>>()?;
    Some(Certificate {
        claim: obj.get("claim")?.as_str()?.to_string(),
        params,
        status: Status::parse(obj.get("status")?.as_str()?)?,
        witness: witness_from_json(obj.get("witness")?)?,
    })
}

/// Counts of each status, in the order pass, fail, inconclusive.
pub fn tally(certs: &[Certificate]) -> [usize; 3] {
    let count = |s| certs.iter().filter(|c| c.status == s).count();
    [count(Status::Pass), count(Status::Fail), count(Status::Inconclusive)]
}

/// A self-contained report document.
pub fn document(certs: &[Certificate]) -> Value {
    let [pass, fail, inconclusive] = tally(certs);
    serde_json::json!({
        "certificates": certs.iter().map(certificate_to_json).collect::<Vec<_>>(),
        "summary": { "pass": pass, "fail": fail, "inconclusive": inconclusive },
    })
}

/// Certificates of a document produced by [`document`].
pub fn parse_document(text: &str) -> Option<Vec<Certificate>> {
    let v: Value = serde_json::from_str(text).ok()?;
    v.get("certificates")?.as_array()?.iter().map(certificate_from_json).collect()
}
