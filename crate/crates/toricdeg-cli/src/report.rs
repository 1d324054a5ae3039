//! Machine-readable command reports.  Field order is fixed by the struct and
//! `serde_json` maps are sorted, so identical inputs (and seeds) produce
//! byte-identical output; anything nondeterministic like wall time stays out.

use serde::Serialize;
use serde_json::Value;

use crate::problem::ProblemFile;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: ProblemFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Value,
}

impl Report {
    pub fn new(command: &str, input: &ProblemFile, results: Value) -> Report {
        Report {
            command: command.into(),
            input: input.clone(),
            seed: None,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Output of one subcommand run: the structured report, the human-readable
/// text, and whether a verification inside it failed (exit 1).
pub struct CommandOutput {
    pub report: Report,
    pub text: String,
    pub failed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn identical_inputs_give_identical_bytes() {
        let file = ProblemFile::parse_str(r#"{ "generators": [["2"],["3"]] }"#).unwrap();
        let a = Report::new("toric", &file, json!({"k": ["1", "2"]})).to_json();
        let b = Report::new("toric", &file, json!({"k": ["1", "2"]})).to_json();
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }
}
