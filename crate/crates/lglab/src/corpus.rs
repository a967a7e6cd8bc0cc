//! Corpus files: one entry per line,
//! `name | polynomial | vars | expectations as key=value pairs`.
//! Blank lines and lines starting with `#` are skipped.
//!
//! Supported expectation keys: `mu=<int>`, `expect=<report|torsion-growth>`,
//! `assume_tame=<true|false>`, `weights=<r1;r2;...>`.

use lgcore::Rat;

use crate::jobs::{parse_rat, rat_text, run, Command, JobError, JobSpec};
use crate::report::{
    Conventions, CorpusEntryResult, CorpusPayload, CrossCheck, JobEcho, Payload, Report, ToolInfo,
    SCHEMA_VERSION,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    Report,
    TorsionGrowth,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub poly: String,
    pub vars: Vec<String>,
    pub mu: Option<usize>,
    pub expect: Expectation,
    pub assume_tame: bool,
    pub weights: Option<Vec<Rat>>,
}

/// Parses the corpus format; errors carry the offending line number.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, JobError> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(JobError::Parse(format!(
                "corpus line {}: expected 4 '|'-separated fields, found {}",
                lineno + 1,
                parts.len()
            )));
        }
        let name = parts[0].to_string();
        let poly = parts[1].to_string();
        let vars: Vec<String> = parts[2]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        if vars.is_empty() {
            return Err(JobError::Parse(format!(
                "corpus line {}: empty variable list",
                lineno + 1
            )));
        }
        let mut entry = CorpusEntry {
            name,
            poly,
            vars,
            mu: None,
            expect: Expectation::Report,
            assume_tame: false,
            weights: None,
        };
        for kv in parts[3].split_whitespace() {
            let Some((key, value)) = kv.split_once('=') else {
                return Err(JobError::Parse(format!(
                    "corpus line {}: expectation '{kv}' is not key=value",
                    lineno + 1
                )));
            };
            match key {
                "mu" => {
                    entry.mu = Some(value.parse().map_err(|_| {
                        JobError::Parse(format!("corpus line {}: bad mu value", lineno + 1))
                    })?)
                }
                "expect" => {
                    entry.expect = match value {
                        "report" => Expectation::Report,
                        "torsion-growth" => Expectation::TorsionGrowth,
                        other => {
                            return Err(JobError::Parse(format!(
                                "corpus line {}: unknown expectation '{other}'",
                                lineno + 1
                            )))
                        }
                    }
                }
                "assume_tame" => {
                    entry.assume_tame = match value {
                        "true" => true,
                        "false" => false,
                        _ => {
                            return Err(JobError::Parse(format!(
                                "corpus line {}: assume_tame must be true or false",
                                lineno + 1
                            )))
                        }
                    }
                }
                "weights" => {
                    let ws: Option<Vec<Rat>> = value.split(';').map(parse_rat).collect();
                    entry.weights = Some(ws.ok_or_else(|| {
                        JobError::Parse(format!("corpus line {}: bad weights", lineno + 1))
                    })?);
                }
                other => {
                    return Err(JobError::Parse(format!(
                        "corpus line {}: unknown expectation key '{other}'",
                        lineno + 1
                    )))
                }
            }
        }
        entries.push(entry);
    }
    Ok(entries)
}

fn entry_job(entry: &CorpusEntry, command: Command, seed: u64) -> JobSpec {
    JobSpec {
        command,
        poly: entry.poly.clone(),
        vars: entry.vars.clone(),
        trunc_u: 6,
        deg_ladder: None,
        samples_override: None,
        assume_tame: entry.assume_tame,
        seed,
    }
}

fn run_entry(entry: &CorpusEntry, seed: u64) -> CorpusEntryResult {
    let mut failures = Vec::new();
    let mut cross_checks = Vec::new();
    match entry.expect {
        Expectation::TorsionGrowth => {
            match run(&entry_job(entry, Command::Fibers, seed)) {
                Ok(report) => {
                    if let Payload::Fibers(p) = &report.payload {
                        cross_checks.push(CrossCheck::new(
                            "verdict",
                            p.verdict.clone(),
                            "torsion-growth".into(),
                        ));
                        if p.verdict != "torsion-growth" {
                            failures.push(format!("expected torsion-growth, got {}", p.verdict));
                        }
                    }
                }
                Err(e) => failures.push(format!("fibers job failed: {}", e.message())),
            }
        }
        Expectation::Report => match run(&entry_job(entry, Command::Report, seed)) {
            Ok(report) => {
                cross_checks = report.cross_checks.clone();
                for check in &report.cross_checks {
                    if !check.pass {
                        failures.push(format!(
                            "{}: computed {} vs predicted {}",
                            check.name, check.computed, check.predicted
                        ));
                    }
                }
                if let (Some(expected_mu), Payload::Report(full)) = (entry.mu, &report.payload) {
                    cross_checks.push(CrossCheck::new(
                        "mu_expectation",
                        full.milnor.mu.to_string(),
                        expected_mu.to_string(),
                    ));
                    if full.milnor.mu != expected_mu {
                        failures.push(format!(
                            "mu = {} but corpus expects {}",
                            full.milnor.mu, expected_mu
                        ));
                    }
                }
                if let (Some(weights), Payload::Report(full)) = (&entry.weights, &report.payload) {
                    let expected: Vec<String> = weights.iter().map(rat_text).collect();
                    match &full.spectrum {
                        Some(sp) => {
                            cross_checks.push(CrossCheck::new(
                                "weights_expectation",
                                format!("{:?}", sp.weights),
                                format!("{expected:?}"),
                            ));
                            if sp.weights != expected {
                                failures.push(format!(
                                    "weights {:?} but corpus expects {expected:?}",
                                    sp.weights
                                ));
                            }
                        }
                        None => failures.push("corpus expects weights but input is not \
                             quasi-homogeneous"
                            .into()),
                    }
                }
            }
            Err(e) => failures.push(format!("report job failed: {}", e.message())),
        },
    }
    CorpusEntryResult {
        name: entry.name.clone(),
        poly: entry.poly.clone(),
        passed: failures.is_empty(),
        failures,
        cross_checks,
    }
}

/// Runs every corpus entry in order; the aggregate is deterministic for a
/// fixed seed.
pub fn run_corpus(text: &str, seed: u64) -> Result<Report, JobError> {
    let entries = parse_corpus(text)?;
    let results: Vec<CorpusEntryResult> = entries.iter().map(|e| run_entry(e, seed)).collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    let total = results.len();
    let cross_checks: Vec<CrossCheck> = results
        .iter()
        .map(|r| CrossCheck::flag(&format!("entry_{}", r.name), r.passed, r.failures.join("; ")))
        .collect();
    let ok = failed == 0;
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        tool: ToolInfo::current(),
        conventions: Conventions::current(),
        timestamp_unix: crate::jobs::now_unix(),
        job: JobEcho {
            command: "corpus".into(),
            poly: String::new(),
            vars: Vec::new(),
            trunc_u: 6,
            deg_ladder: Vec::new(),
            samples: Vec::new(),
            assume_tame: false,
            seed,
        },
        payload: Payload::Corpus(CorpusPayload {
            entries: results,
            total,
            failed,
        }),
        cross_checks,
        ok,
    })
}

/// The corpus bundled with the tool.
pub const STANDARD_CORPUS: &str = include_str!("../corpus/standard.txt");

#[cfg(test)]
mod tests {
    use super::*;
    use lgcore::polyalg::parse_poly;

    #[test]
    fn bundled_corpus_parses() {
        let entries = parse_corpus(STANDARD_CORPUS).unwrap();
        assert!(entries.len() >= 14);
        assert!(entries.iter().any(|e| e.expect == Expectation::TorsionGrowth));
    }

    #[test]
    fn corpus_polynomials_round_trip() {
        for entry in parse_corpus(STANDARD_CORPUS).unwrap() {
            let vars: Vec<&str> = entry.vars.iter().map(String::as_str).collect();
            let p = parse_poly(&entry.poly, &vars).unwrap();
            let printed = p.to_text(&vars);
            assert_eq!(parse_poly(&printed, &vars).unwrap(), p, "{}", entry.name);
        }
    }

    #[test]
    fn corpus_rejects_malformed_lines() {
        assert!(parse_corpus("one | two | three").is_err());
        assert!(parse_corpus("a | x | x | mu=notanumber").is_err());
        assert!(parse_corpus("a | x | x | what=ever").is_err());
        assert!(parse_corpus("a | x | x | mu").is_err());
    }
}
