//! Subcommand implementations.  Each returns a [`CommandOutput`] holding the
//! structured report, the text rendering, and a failure flag that drives the
//! process exit code.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use toricdeg::binomial::{self, TermOrder, Tiebreak};
use toricdeg::error::Error;
use toricdeg::invariants::{self, BettiReport, SaturationReport};
use toricdeg::moebius::{self, MoebiusContext};
use toricdeg::toric;
use toricdeg::{Int, IntVec};

use crate::problem::{parse_int, vec_strings, ProblemFile};
use crate::render::{basis_json, binomial_string, extended_labels, vector_json, vectors_json};
use crate::report::{CommandOutput, Report};
use crate::{CliError, CliResult};

/// Weight handling for `toric`: the canonical order, or the problem file's
/// weight vector refined by the tiebreak.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum OrderChoice {
    Canonical,
    Weight,
}

pub fn parse_order_flag(flag: Option<&str>) -> CliResult<OrderChoice> {
    match flag {
        None | Some("canonical") => Ok(OrderChoice::Canonical),
        Some("weight") => Ok(OrderChoice::Weight),
        Some(other) => Err(CliError::Usage(format!(
            "unknown order {other:?}; use canonical or weight"
        ))),
    }
}

fn friendly(e: Error) -> CliError {
    match e {
        Error::NotPointed => CliError::Failure(
            "the configuration is not pointed: the semigroup admits a unit, so fibers \
             are infinite and degree-by-degree arguments do not apply"
                .into(),
        ),
        other => CliError::Failure(other.to_string()),
    }
}

pub fn cmd_toric(
    file: &ProblemFile,
    order: OrderChoice,
    tiebreak: Tiebreak,
) -> CliResult<CommandOutput> {
    let s = file.presentation()?;
    let labels = file.var_labels();
    let weight = match order {
        OrderChoice::Canonical => IntVec::zero(s.nvars()),
        OrderChoice::Weight => file
            .weight_vec()?
            .ok_or_else(|| CliError::Usage("--order weight needs weights in the file".into()))?,
    };
    let term_order = TermOrder::weighted(weight, tiebreak);
    let gb = binomial::reduce_basis(s.toric_ideal(), &term_order);
    let mut text = format!(
        "configuration: {} generators in dimension {} (pointed: {})\n",
        s.nvars(),
        s.dim(),
        s.is_pointed()
    );
    writeln!(text, "reduced Groebner basis ({} elements):", gb.len()).unwrap();
    for b in &gb {
        writeln!(text, "  {}", binomial_string(b, &labels)).unwrap();
    }
    let results = json!({
        "nvars": s.nvars(),
        "dim": s.dim(),
        "pointed": s.is_pointed(),
        "full_lattice": s.is_full_lattice(),
        "groebner_basis": basis_json(&gb, &labels),
    });
    Ok(CommandOutput {
        report: Report::new("toric", file, results),
        text,
        failed: false,
    })
}

pub fn cmd_degenerate(file: &ProblemFile, tiebreak: Tiebreak) -> CliResult<CommandOutput> {
    let s = file.presentation()?;
    let w = file
        .weight_vec()?
        .ok_or_else(|| CliError::Usage("degenerate needs weights in the problem file".into()))?;
    let labels = extended_labels(&file.var_labels());
    let ctx = toric::build_context(s, w).map_err(friendly)?;
    let gt = toric::degenerate_ideal(&ctx, tiebreak);
    let verdict = toric::verify_theorem_main(&ctx, tiebreak);
    let mut text = String::new();
    writeln!(text, "extended configuration columns:").unwrap();
    for c in ctx.a_w().columns() {
        writeln!(text, "  ({})", vec_strings(c).join(", ")).unwrap();
    }
    writeln!(text, "degenerated generators:").unwrap();
    for b in &gt {
        writeln!(text, "  {}", binomial_string(b, &labels)).unwrap();
    }
    writeln!(
        text,
        "degeneration equals the toric ideal of the extended configuration: {}",
        verdict.equal
    )
    .unwrap();
    let results = json!({
        "extended_columns": vectors_json(ctx.a_w().columns()),
        "degenerated_generators": basis_json(&gt, &labels),
        "degenerated_gb": basis_json(&verdict.degenerated_gb, &labels),
        "independent_gb": basis_json(&verdict.independent_gb, &labels),
        "equal": verdict.equal,
    });
    Ok(CommandOutput {
        report: Report::new("degenerate", file, results),
        text,
        failed: !verdict.equal,
    })
}

fn betti_json(rep: &BettiReport) -> Value {
    json!({
        "betti": vectors_json(&rep.betti),
        "betti_minimal": vectors_json(&rep.betti_minimal),
        "beta1_counts": rep
            .beta1_counts
            .iter()
            .map(|(d, c)| json!({"degree": vector_json(d), "count": c}))
            .collect::<Vec<_>>(),
        "uniquely_presented": rep.uniquely_presented,
    })
}

fn saturation_json(rep: &SaturationReport) -> Value {
    json!({
        "saturated": rep.saturated,
        "witness": rep.witness.as_ref().map(vector_json),
        "failures": vectors_json(&rep.failures),
        "checked_points": rep.checked_points,
    })
}

pub fn cmd_invariants(file: &ProblemFile, which: &str) -> CliResult<CommandOutput> {
    let s = file.presentation()?;
    let w = file.weight_vec()?;
    let degenerated = match &w {
        Some(w) => Some(toric::build_context(s.clone(), w.clone()).map_err(friendly)?),
        None => None,
    };
    let mut results = Map::new();
    let mut text = String::new();
    match which {
        "betti" => {
            let base = invariants::betti_elements(&s).map_err(friendly)?;
            writeln!(
                text,
                "Betti degrees: {:?} (uniquely presented: {})",
                base.betti.iter().map(vec_strings).collect::<Vec<_>>(),
                base.uniquely_presented
            )
            .unwrap();
            results.insert("base".into(), betti_json(&base));
            if let Some(ctx) = &degenerated {
                let deg = invariants::betti_elements(ctx.degenerated()).map_err(friendly)?;
                writeln!(
                    text,
                    "degenerated Betti degrees: {:?} (uniquely presented: {})",
                    deg.betti.iter().map(vec_strings).collect::<Vec<_>>(),
                    deg.uniquely_presented
                )
                .unwrap();
                results.insert("degenerated".into(), betti_json(&deg));
            }
        }
        "saturation" => {
            let base = invariants::is_saturated(&s).map_err(friendly)?;
            writeln!(text, "saturated: {}", base.saturated).unwrap();
            results.insert("base".into(), saturation_json(&base));
            if let Some(ctx) = &degenerated {
                let deg = invariants::is_saturated(ctx.degenerated()).map_err(friendly)?;
                writeln!(text, "degenerated saturated: {}", deg.saturated).unwrap();
                if let Some(wit) = &deg.witness {
                    writeln!(text, "  witness: ({})", vec_strings(wit).join(", ")).unwrap();
                }
                results.insert("degenerated".into(), saturation_json(&deg));
            }
        }
        "approx" => {
            let ctx = degenerated
                .as_ref()
                .ok_or_else(|| CliError::Usage("approx needs weights in the file".into()))?;
            let a = invariants::approximation_element(&s).map_err(friendly)?;
            let cert = invariants::approx_degeneration(ctx, &a).map_err(friendly)?;
            writeln!(
                text,
                "approximation element ({}) lifts with height {}",
                vec_strings(&cert.a).join(", "),
                cert.delta
            )
            .unwrap();
            results.insert("a".into(), vector_json(&cert.a));
            results.insert("delta".into(), Value::String(cert.delta.to_string()));
            results.insert(
                "points".into(),
                Value::Array(
                    cert.per_point
                        .iter()
                        .map(|p| {
                            json!({
                                "point": vector_json(&p.point),
                                "case": format!("{:?}", p.tag),
                                "delta_i": p.delta_i.to_string(),
                            })
                        })
                        .collect(),
                ),
            );
        }
        "unique" => {
            let base = invariants::betti_elements(&s).map_err(friendly)?;
            writeln!(text, "uniquely presented: {}", base.uniquely_presented).unwrap();
            results.insert(
                "base_uniquely_presented".into(),
                Value::Bool(base.uniquely_presented),
            );
            if let Some(ctx) = &degenerated {
                let deg = invariants::betti_elements(ctx.degenerated()).map_err(friendly)?;
                let mg = binomial::minimal_generators(ctx.degenerated().toric_ideal(), ctx.a_w())
                    .map_err(friendly)?;
                let criterion =
                    invariants::monomial_degree_criterion(&mg.generators(), ctx.a_w());
                writeln!(
                    text,
                    "degenerated uniquely presented: {} (monomial-degree criterion: {})",
                    deg.uniquely_presented, criterion
                )
                .unwrap();
                results.insert(
                    "degenerated_uniquely_presented".into(),
                    Value::Bool(deg.uniquely_presented),
                );
                results.insert("monomial_degree_criterion".into(), Value::Bool(criterion));
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown invariant {other:?}; use betti, saturation, approx, or unique"
            )))
        }
    }
    Ok(CommandOutput {
        report: Report::new("invariants", file, Value::Object(results)),
        text,
        failed: false,
    })
}

pub fn cmd_moebius(
    file: &ProblemFile,
    z_arg: &str,
    lambda_arg: Option<&str>,
) -> CliResult<CommandOutput> {
    let s = file.presentation()?;
    let w = file.weight_vec()?;
    let z = parse_point(z_arg)?;
    if z.dim() != s.dim() {
        return Err(CliError::Usage(format!(
            "point has {} coordinates, configuration lives in dimension {}",
            z.dim(),
            s.dim()
        )));
    }
    let lambda = lambda_arg.map(parse_int).transpose()?;
    if lambda.is_some() && w.is_none() {
        return Err(CliError::Usage(
            "a height needs weights in the problem file".into(),
        ));
    }
    let brute = moebius::mu_bruteforce(&s, &z).map_err(friendly)?;
    let mut results = Map::new();
    let mut text = String::new();
    let mut failed = false;
    results.insert("mu_bruteforce".into(), Value::String(brute.to_string()));
    writeln!(text, "mu (brute force) = {brute}").unwrap();
    let ctx = match &w {
        Some(w) => MoebiusContext::with_degeneration(s.clone(), w.clone()),
        None => MoebiusContext::new(s.clone()),
    };
    match ctx {
        Ok(ctx) if ctx.unique_betti().is_some() => {
            let closed = moebius::mu_closed(&ctx, &z).map_err(friendly)?;
            let agree = closed == brute;
            failed |= !agree;
            writeln!(text, "mu (closed formula) = {closed} (agreement: {agree})").unwrap();
            results.insert("mu_closed".into(), Value::String(closed.to_string()));
            results.insert("closed_agrees".into(), Value::Bool(agree));
            if let Some(lambda) = &lambda {
                if ctx.d_w().is_some() {
                    let deg = moebius::mu_degeneration(&ctx, &z, lambda).map_err(friendly)?;
                    let sw = ctx.degenerated().expect("degeneration attached");
                    let deg_brute =
                        moebius::mu_bruteforce(sw, &z.extended(lambda.clone())).map_err(friendly)?;
                    let agree = deg == deg_brute;
                    failed |= !agree;
                    writeln!(
                        text,
                        "mu of degeneration at height {lambda} = {deg} (agreement: {agree})"
                    )
                    .unwrap();
                    results.insert("mu_degeneration".into(), Value::String(deg.to_string()));
                    results
                        .insert("mu_degeneration_bruteforce".into(), Value::String(deg_brute.to_string()));
                    results.insert("degeneration_agrees".into(), Value::Bool(agree));
                } else {
                    writeln!(
                        text,
                        "degenerated semigroup lacks a unique Betti element; brute force only"
                    )
                    .unwrap();
                    results.insert("mode".into(), Value::String("bruteforce-only".into()));
                }
            }
        }
        Ok(_) | Err(Error::HypothesisViolated(_)) => {
            writeln!(text, "closed-formula hypotheses fail; brute force only").unwrap();
            results.insert("mode".into(), Value::String("bruteforce-only".into()));
            if let Some(lambda) = &lambda {
                let w = w.clone().expect("checked above");
                let ctx = toric::build_context(s, w).map_err(friendly)?;
                let deg_brute = moebius::mu_bruteforce(
                    ctx.degenerated(),
                    &z.extended(lambda.clone()),
                )
                .map_err(friendly)?;
                writeln!(text, "mu of degeneration at height {lambda} = {deg_brute}").unwrap();
                results.insert(
                    "mu_degeneration_bruteforce".into(),
                    Value::String(deg_brute.to_string()),
                );
            }
        }
        Err(e) => return Err(friendly(e)),
    }
    Ok(CommandOutput {
        report: Report::new("moebius", file, Value::Object(results)),
        text,
        failed,
    })
}

fn parse_point(arg: &str) -> CliResult<IntVec> {
    let entries: Vec<Int> = arg
        .split(',')
        .map(|p| parse_int(p))
        .collect::<CliResult<_>>()?;
    Ok(IntVec(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numerical_file() -> ProblemFile {
        ProblemFile::parse_str(
            r#"{ "generators": [["6"],["10"],["15"]], "weights": ["1","1","1"] }"#,
        )
        .unwrap()
    }

    #[test]
    fn toric_reports_the_pinned_basis() {
        let out = cmd_toric(&numerical_file(), OrderChoice::Canonical, Tiebreak::Degrevlex)
            .unwrap();
        assert!(!out.failed);
        let gb = out.report.results["groebner_basis"].as_array().unwrap();
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn degenerate_verdict_true() {
        let out = cmd_degenerate(&numerical_file(), Tiebreak::Lex).unwrap();
        assert!(!out.failed);
        assert_eq!(out.report.results["equal"], Value::Bool(true));
    }

    #[test]
    fn invariants_betti_pinned() {
        let out = cmd_invariants(&numerical_file(), "betti").unwrap();
        let betti = out.report.results["base"]["betti"].as_array().unwrap();
        assert_eq!(betti.len(), 1);
        assert_eq!(betti[0], json!(["30"]));
        let deg = out.report.results["degenerated"]["betti"].as_array().unwrap();
        assert_eq!(deg.len(), 2);
    }

    #[test]
    fn moebius_agreement_on_small_point() {
        let file =
            ProblemFile::parse_str(r#"{ "generators": [["2"],["3"]] }"#).unwrap();
        let out = cmd_moebius(&file, "2", None).unwrap();
        assert!(!out.failed);
        assert_eq!(out.report.results["mu_bruteforce"], Value::String("-1".into()));
        assert_eq!(out.report.results["mu_closed"], Value::String("-1".into()));
    }

    #[test]
    fn unknown_invariant_is_usage_error() {
        assert!(matches!(
            cmd_invariants(&numerical_file(), "nope"),
            Err(CliError::Usage(_))
        ));
    }
}
