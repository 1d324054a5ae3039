//! Problem-file format: one JSON object per configuration, integers written
//! as decimal strings so arbitrary precision survives the round trip.

use std::path::Path;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use toricdeg::binomial::Tiebreak;
use toricdeg::toric::SemigroupPresentation;
use toricdeg::{GeneratorMatrix, Int, IntVec};

use crate::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Generator columns `a_i`, one inner list per generator.
    pub generators: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderSpec {
    /// "lex" or "degrevlex"
    pub tiebreak: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
}

pub fn parse_int(s: &str) -> CliResult<Int> {
    Int::from_str(s.trim())
        .map_err(|e| CliError::Usage(format!("bad integer {s:?}: {e}")))
}

pub fn parse_vec(entries: &[String]) -> CliResult<IntVec> {
    Ok(IntVec(
        entries
            .iter()
            .map(|s| parse_int(s))
            .collect::<CliResult<_>>()?,
    ))
}

pub fn vec_strings(v: &IntVec) -> Vec<String> {
    v.0.iter().map(|e| e.to_string()).collect()
}

impl ProblemFile {
    pub fn parse_str(text: &str) -> CliResult<ProblemFile> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Usage(format!(
                "problem file parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn load(path: &Path) -> CliResult<ProblemFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        ProblemFile::parse_str(&text)
    }

    pub fn print(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn presentation(&self) -> CliResult<SemigroupPresentation> {
        if self.generators.is_empty() {
            return Err(CliError::Usage("problem file has no generators".into()));
        }
        let d = self.generators[0].len();
        let mut columns = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if g.len() != d {
                return Err(CliError::Usage(format!(
                    "generator {:?} has {} entries, expected {d}",
                    g,
                    g.len()
                )));
            }
            columns.push(parse_vec(g)?);
        }
        let matrix = GeneratorMatrix::new(columns, d)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(SemigroupPresentation::new(matrix))
    }

    pub fn weight_vec(&self) -> CliResult<Option<IntVec>> {
        let Some(ws) = &self.weights else {
            return Ok(None);
        };
        if ws.len() != self.generators.len() {
            return Err(CliError::Usage(format!(
                "{} weights for {} generators",
                ws.len(),
                self.generators.len()
            )));
        }
        let w = parse_vec(ws)?;
        if w.0.iter().any(|e| e.is_negative()) {
            return Err(CliError::Usage("weights must be nonnegative".into()));
        }
        Ok(Some(w))
    }

    /// Tiebreak from the file's order block; `degrevlex` when absent.
    pub fn tiebreak(&self) -> CliResult<Tiebreak> {
        match self.order.as_ref().map(|o| o.tiebreak.as_str()) {
            None | Some("degrevlex") => Ok(Tiebreak::Degrevlex),
            Some("lex") => Ok(Tiebreak::Lex),
            Some(other) => Err(CliError::Usage(format!(
                "unknown tiebreak {other:?}; use lex or degrevlex"
            ))),
        }
    }

    /// Variable names for display: the file's labels or x1, x2, ….
    pub fn var_labels(&self) -> Vec<String> {
        match &self.labels {
            Some(ls) if ls.len() == self.generators.len() => ls.clone(),
            _ => (1..=self.generators.len()).map(|i| format!("x{i}")).collect(),
        }
    }
}

pub fn parse_tiebreak_flag(flag: Option<&str>, file: &ProblemFile) -> CliResult<Tiebreak> {
    match flag {
        None => file.tiebreak(),
        Some("lex") => Ok(Tiebreak::Lex),
        Some("degrevlex") => Ok(Tiebreak::Degrevlex),
        Some(other) => Err(CliError::Usage(format!(
            "unknown tiebreak {other:?}; use lex or degrevlex"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        let file = ProblemFile {
            name: Some("demo".into()),
            generators: vec![vec!["6".into()], vec!["10".into()], vec!["15".into()]],
            weights: Some(vec!["1".into(), "1".into(), "1".into()]),
            order: Some(OrderSpec {
                tiebreak: "lex".into(),
                permutation: None,
            }),
            labels: None,
        };
        let printed = file.print();
        let reparsed = ProblemFile::parse_str(&printed).unwrap();
        assert_eq!(reparsed, file);
        assert_eq!(reparsed.print(), printed);
    }

    #[test]
    fn big_integers_survive() {
        let big = "123456789012345678901234567890";
        let file = ProblemFile {
            name: None,
            generators: vec![vec![big.into()]],
            weights: None,
            order: None,
            labels: None,
        };
        let reparsed = ProblemFile::parse_str(&file.print()).unwrap();
        assert_eq!(reparsed.generators[0][0], big);
        let s = reparsed.presentation().unwrap();
        assert_eq!(s.matrix().column(0).0[0].to_string(), big);
    }

    #[test]
    fn errors_carry_position() {
        let err = ProblemFile::parse_str("{ \"generators\": [[3,]] }").unwrap_err();
        match err {
            CliError::Usage(m) => assert!(m.contains("line 1")),
            CliError::Failure(m) => panic!("wrong class: {m}"),
        }
    }

    #[test]
    fn weight_length_checked() {
        let file = ProblemFile {
            name: None,
            generators: vec![vec!["2".into()], vec!["3".into()]],
            weights: Some(vec!["1".into()]),
            order: None,
            labels: None,
        };
        assert!(matches!(file.weight_vec(), Err(CliError::Usage(_))));
    }
}
