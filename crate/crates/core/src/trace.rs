//! Finite traces and their line-oriented text format.
//!
//! One trace per line, states separated by `;`, each state a whitespace
//! separated list of atoms. `<eps>` is the empty trace, so `a b; ; a` is the
//! three-state trace `[{a,b}, {}, {a}]` and an empty line is the one-state
//! trace `[{}]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::{AlphabetSymbol, PropName};

pub const EMPTY_TRACE: &str = "<eps>";

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trace(pub Vec<AlphabetSymbol>);

impl Trace {
    pub fn empty() -> Self {
        Trace(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `π_i`, defined for `i < |π|`.
    pub fn get(&self, i: usize) -> Option<&AlphabetSymbol> {
        self.0.get(i)
    }

    /// `π(i)`, defined for `i <= |π|`.
    pub fn suffix(&self, i: usize) -> Option<&[AlphabetSymbol]> {
        self.0.get(i..)
    }

    pub fn symbols(&self) -> &[AlphabetSymbol] {
        &self.0
    }

    /// Position of the final state; `None` on the empty trace.
    pub fn last(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn atoms(&self) -> BTreeSet<PropName> {
        self.0.iter().flat_map(|s| s.props().cloned()).collect()
    }

    /// Every trace of length `0..=max_len` over `2^alphabet`, shortest first.
    pub fn enumerate(alphabet: &BTreeSet<PropName>, max_len: usize) -> Vec<Trace> {
        let symbols = all_symbols(alphabet);
        let mut out = vec![Trace::empty()];
        let mut frontier = vec![Trace::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(frontier.len() * symbols.len());
            for t in &frontier {
                for s in &symbols {
                    let mut v = t.0.clone();
                    v.push(s.clone());
                    next.push(Trace(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Parse every line of a trace file.
    pub fn parse_lines(text: &str) -> Result<Vec<Trace>> {
        text.lines()
            .enumerate()
            .map(|(n, line)| {
                parse_trace(line).map_err(|msg| Error::Trace { line: n + 1, msg })
            })
            .collect()
    }
}

/// All subsets of `alphabet`, ordered by the binary counter over its sorted atoms.
pub fn all_symbols(alphabet: &BTreeSet<PropName>) -> Vec<AlphabetSymbol> {
    let atoms: Vec<&PropName> = alphabet.iter().collect();
    (0..1usize << atoms.len())
        .map(|bits| {
            atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, a)| (*a).clone())
                .collect()
        })
        .collect()
}

fn parse_trace(line: &str) -> std::result::Result<Trace, String> {
    if line.trim() == EMPTY_TRACE {
        return Ok(Trace::empty());
    }
    line.split(';')
        .map(|state| {
            state
                .split_whitespace()
                .map(|name| PropName::new(name).map_err(|_| format!("invalid atom `{name}`")))
                .collect::<std::result::Result<AlphabetSymbol, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Trace)
}

impl FromStr for Trace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_trace(s).map_err(|msg| Error::Trace { line: 1, msg })
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_TRACE);
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, a) in s.props().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}
