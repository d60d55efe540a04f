//! DOT and JSON renderings of an automaton, and JSON import.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::parse;
use crate::syntax::PropName;
use crate::tableau::{Edge, Nfa, NfaState, StateId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::UnsupportedFormat(other.to_owned())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct NfaJson {
    alphabet: Vec<String>,
    initial: usize,
    states: Vec<StateJson>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    id: usize,
    formulas: Vec<String>,
    accepting: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    guard: String,
}

pub fn export(nfa: &Nfa, format: Format) -> String {
    match format {
        Format::Dot => to_dot(nfa),
        Format::Json => to_json(nfa),
    }
}

fn sorted_edges(nfa: &Nfa) -> Vec<&Edge> {
    let mut edges: Vec<&Edge> = nfa.edges.iter().collect();
    edges.sort();
    edges
}

pub fn to_json(nfa: &Nfa) -> String {
    let doc = NfaJson {
        alphabet: nfa.alphabet.iter().map(|a| a.to_string()).collect(),
        initial: nfa.initial.0,
        states: nfa
            .states
            .iter()
            .map(|s| StateJson {
                id: s.id.0,
                formulas: s.formulas.iter().map(|f| f.to_string()).collect(),
                accepting: s.accepting,
            })
            .collect(),
        edges: sorted_edges(nfa)
            .into_iter()
            .map(|e| EdgeJson { from: e.from.0, to: e.to.0, guard: e.guard.to_string() })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("automaton serializes");
    out.push('\n');
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(nfa: &Nfa) -> String {
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n  init [shape=point];\n");
    let _ = writeln!(out, "  init -> {};", nfa.initial);
    for s in &nfa.states {
        let shape = if s.accepting { "doublecircle" } else { "circle" };
        let formulas: Vec<String> = s.formulas.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(
            out,
            "  {} [shape={shape}, label=\"{}\", tooltip=\"{{{}}}\"];",
            s.id,
            s.id,
            dot_escape(&formulas.join(", "))
        );
    }
    for e in sorted_edges(nfa) {
        let _ = writeln!(out, "  {} -> {} [label=\"{}\"];", e.from, e.to, dot_escape(&e.guard.to_string()));
    }
    out.push_str("}\n");
    out
}

/// Rebuild an automaton from its JSON export.
pub fn from_json(text: &str) -> Result<Nfa> {
    let doc: NfaJson = serde_json::from_str(text).map_err(|e| Error::Import(e.to_string()))?;
    let alphabet = doc
        .alphabet
        .iter()
        .map(|a| PropName::new(a))
        .collect::<Result<_>>()?;
    let mut states = Vec::with_capacity(doc.states.len());
    for (i, s) in doc.states.into_iter().enumerate() {
        if s.id != i {
            return Err(Error::Import(format!("state {} listed at position {i}", s.id)));
        }
        let formulas = s.formulas.iter().map(|f| parse(f)).collect::<Result<_>>()?;
        states.push(NfaState { id: StateId(s.id), formulas, accepting: s.accepting });
    }
    let in_range = |id: usize| -> Result<StateId> {
        if id < states.len() {
            Ok(StateId(id))
        } else {
            Err(Error::Import(format!("state {id} does not exist")))
        }
    };
    let initial = in_range(doc.initial)?;
    let edges = doc
        .edges
        .into_iter()
        .map(|e| {
            let guard = parse(&e.guard)?;
            if !guard.is_propositional() {
                return Err(Error::NotPropositional(e.guard));
            }
            Ok(Edge { from: in_range(e.from)?, to: in_range(e.to)?, guard })
        })
        .collect::<Result<_>>()?;
    Ok(Nfa { alphabet, states, initial, edges })
}
