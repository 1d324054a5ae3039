//! Plain-text and JSON rendering of monomials, binomials, and integer
//! vectors, with caller-supplied variable labels.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use toricdeg::binomial::{Binomial, Monomial};
use toricdeg::IntVec;

use crate::problem::vec_strings;

pub fn monomial_string(m: &Monomial, labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exps().0.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if e.is_one() {
            parts.push(labels[i].clone());
        } else {
            parts.push(format!("{}^{}", labels[i], e));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn binomial_string(b: &Binomial, labels: &[String]) -> String {
    format!(
        "{} - {}",
        monomial_string(&b.lead, labels),
        monomial_string(&b.trail, labels)
    )
}

pub fn binomial_json(b: &Binomial, labels: &[String]) -> Value {
    json!({
        "lead": vec_strings(b.lead.exps()),
        "trail": vec_strings(b.trail.exps()),
        "text": binomial_string(b, labels),
    })
}

pub fn basis_json(basis: &[Binomial], labels: &[String]) -> Value {
    Value::Array(basis.iter().map(|b| binomial_json(b, labels)).collect())
}

pub fn vectors_json(vs: &[IntVec]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| Value::Array(vec_strings(v).into_iter().map(Value::String).collect()))
            .collect(),
    )
}

pub fn vector_json(v: &IntVec) -> Value {
    Value::Array(vec_strings(v).into_iter().map(Value::String).collect())
}

/// Labels for the degenerated ring: the base labels plus the trailing `t`.
pub fn extended_labels(labels: &[String]) -> Vec<String> {
    let mut out = labels.to_vec();
    out.push("t".into());
    out
}
