//! Per-formula construction measurements and their CSV rendering.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::parse::parse;
use crate::syntax::Formula;
use crate::tableau::{build_with, merge_edges, BuildOptions, Nfa};

pub const CSV_HEADER: &str = "id,formula,size,states,edges,time_s";
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

/// What the `edges` column counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeCount {
    /// Symbolic edges after merging, at most one per state pair.
    #[default]
    Merged,
    /// One edge per normal-form clause, before merging.
    Clauses,
    /// Concrete `(state, symbol, state)` transitions after merging.
    Concrete,
}

impl FromStr for EdgeCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "merged" => Ok(EdgeCount::Merged),
            "clauses" => Ok(EdgeCount::Clauses),
            "concrete" => Ok(EdgeCount::Concrete),
            other => Err(Error::UnsupportedFormat(other.to_owned())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Built { states: usize, edges: usize },
    Timeout,
    Failed(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub formula_id: usize,
    pub formula: String,
    pub size: usize,
    pub outcome: Outcome,
    pub time: Duration,
}

impl BenchRecord {
    pub fn states(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Built { states, .. } => Some(states),
            _ => None,
        }
    }

    pub fn edges(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Built { edges, .. } => Some(edges),
            _ => None,
        }
    }
}

fn count_edges(raw: &Nfa, merged: &Nfa, mode: EdgeCount) -> Result<usize> {
    match mode {
        EdgeCount::Merged => Ok(merged.edge_count()),
        EdgeCount::Clauses => Ok(raw.edge_count()),
        EdgeCount::Concrete => merged.concrete_transition_count(),
    }
}

/// Build and merge each formula, timing each separately. Ids start at 1.
pub fn bench(formulas: &[Formula], timeout: Duration, edges: EdgeCount) -> Vec<BenchRecord> {
    formulas
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let start = Instant::now();
            let options = BuildOptions { deadline: Some(start + timeout), ..Default::default() };
            let result = build_with(f, &options).and_then(|raw| {
                let merged = merge_edges(&raw);
                Ok((merged.state_count(), count_edges(&raw, &merged, edges)?))
            });
            let time = start.elapsed();
            let outcome = match result {
                Ok((states, edges)) if time <= timeout => Outcome::Built { states, edges },
                Ok(_) | Err(Error::Timeout) => Outcome::Timeout,
                Err(e) => Outcome::Failed(e.to_string()),
            };
            BenchRecord { formula_id: i + 1, formula: f.to_string(), size: f.size(), outcome, time }
        })
        .collect()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// CSV with a header line. Failed rows leave `states` and `edges` empty.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in records {
        let opt = |v: Option<usize>| v.map(|n| n.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.6}",
            r.formula_id,
            quote(&r.formula),
            r.size,
            opt(r.states()),
            opt(r.edges()),
            r.time.as_secs_f64()
        );
    }
    out
}

/// One formula per line; blank lines and `#` comments are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<Formula>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_atom() {
        let a = vec![Formula::atom("a")];
        let merged = bench(&a, DEFAULT_TIMEOUT, EdgeCount::Merged);
        assert_eq!(merged.len(), 1);
        assert_eq!(merged[0].size, 1);
        assert_eq!(merged[0].states(), Some(2));
        assert_eq!(merged[0].edges(), Some(2));
        let concrete = bench(&a, DEFAULT_TIMEOUT, EdgeCount::Concrete);
        assert_eq!(concrete[0].edges(), Some(3));
        assert!(merged[0].time > Duration::ZERO);
    }

    #[test]
    fn empty_input() {
        assert!(bench(&[], DEFAULT_TIMEOUT, EdgeCount::Merged).is_empty());
        assert_eq!(to_csv(&[]), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn csv_rows() {
        let mut records = bench(&[parse("a U b").unwrap()], DEFAULT_TIMEOUT, EdgeCount::Merged);
        records[0].time = Duration::from_millis(1234);
        records.push(BenchRecord {
            formula_id: 2,
            formula: "x".into(),
            size: 1,
            outcome: Outcome::Timeout,
            time: Duration::from_secs(60),
        });
        let csv = to_csv(&records);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[1], "1,\"a U b\",3,2,3,1.234000");
        assert_eq!(lines[2], "2,\"x\",1,,,60.000000");
    }

    #[test]
    fn zero_timeout_is_recorded() {
        let r = bench(&[parse("G F a").unwrap()], Duration::ZERO, EdgeCount::Merged);
        assert_eq!(r[0].outcome, Outcome::Timeout);
    }

    #[test]
    fn corpus_file() {
        let fs = parse_corpus("# comment\na U b\n\n  G a\n").unwrap();
        assert_eq!(fs.len(), 2);
        assert!(parse_corpus("a U").is_err());
    }
}
