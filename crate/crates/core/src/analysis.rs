//! Consumers of built automata: trace acceptance, satisfiability witnesses and
//! bounded equivalence checking.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::semantics::{eval_prop, sat};
use crate::syntax::{AlphabetSymbol, Formula, PropName};
use crate::tableau::{build, merge_edges, Nfa, StateId};
use crate::trace::Trace;

/// Does the automaton accept `trace`?
pub fn run(nfa: &Nfa, trace: &Trace) -> Result<bool> {
    run_from(nfa, nfa.initial, trace)
}

/// Acceptance of `trace` starting from an arbitrary state.
pub fn run_from(nfa: &Nfa, start: StateId, trace: &Trace) -> Result<bool> {
    if let Some(extra) = trace.atoms().into_iter().find(|a| !nfa.alphabet.contains(a)) {
        return Err(Error::AlphabetMismatch(extra));
    }
    let mut current = vec![false; nfa.state_count()];
    current[start.0] = true;
    for symbol in trace.symbols() {
        let mut next = vec![false; nfa.state_count()];
        for e in &nfa.edges {
            if current[e.from.0] && !next[e.to.0] && eval_prop(symbol, &e.guard) {
                next[e.to.0] = true;
            }
        }
        current = next;
    }
    Ok(nfa.states.iter().any(|s| s.accepting && current[s.id.0]))
}

/// A trace accepted by an automaton, with the states it passes through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub trace: Trace,
    pub states_visited: Vec<StateId>,
}

/// Shortest accepted trace of `formula`'s automaton, if its language is non-empty.
pub fn is_satisfiable(formula: &Formula) -> Option<Witness> {
    shortest_witness(&merge_edges(&build(formula)))
}

/// Breadth-first search from the initial state to the nearest accepting one.
pub fn shortest_witness(nfa: &Nfa) -> Option<Witness> {
    let mut parent: Vec<Option<(StateId, usize)>> = vec![None; nfa.state_count()];
    let mut seen = vec![false; nfa.state_count()];
    let mut queue = VecDeque::from([nfa.initial]);
    seen[nfa.initial.0] = true;
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nfa.state_count()];
    for (i, e) in nfa.edges.iter().enumerate() {
        outgoing[e.from.0].push(i);
    }

    while let Some(q) = queue.pop_front() {
        if nfa.state(q).accepting {
            let mut states = vec![q];
            let mut symbols = Vec::new();
            let mut cur = q;
            while let Some((prev, edge)) = parent[cur.0] {
                symbols.push(witness_symbol(&nfa.edges[edge].guard)?);
                states.push(prev);
                cur = prev;
            }
            states.reverse();
            symbols.reverse();
            return Some(Witness { trace: Trace(symbols), states_visited: states });
        }
        for &i in &outgoing[q.0] {
            let to = nfa.edges[i].to;
            if !seen[to.0] && witness_symbol(&nfa.edges[i].guard).is_some() {
                seen[to.0] = true;
                parent[to.0] = Some((q, i));
                queue.push_back(to);
            }
        }
    }
    None
}

/// The satisfying assignment of `guard` with the fewest atoms, ties broken by
/// lexicographic order of the atom lists. Atoms not in the guard are absent.
pub fn witness_symbol(guard: &Formula) -> Option<AlphabetSymbol> {
    let atoms: Vec<PropName> = guard.atoms().into_iter().collect();
    (0..=atoms.len())
        .flat_map(|k| atoms.iter().cloned().combinations(k))
        .map(AlphabetSymbol::from_iter)
        .find(|s| eval_prop(s, guard))
}

/// Largest alphabet [`equivalent`] will enumerate.
pub const MAX_EQUIV_ATOMS: usize = 4;

/// Brute-force `≡_e` check on every trace up to `max_len` over the combined
/// alphabet of both formulas.
pub fn equivalent(f1: &Formula, f2: &Formula, max_len: usize) -> Result<bool> {
    let alphabet: BTreeSet<PropName> = f1.atoms().union(&f2.atoms()).cloned().collect();
    if alphabet.len() > MAX_EQUIV_ATOMS {
        return Err(Error::AlphabetTooLarge { size: alphabet.len(), max: MAX_EQUIV_ATOMS });
    }
    Ok(Trace::enumerate(&alphabet, max_len)
        .iter()
        .all(|t| sat(t, f1) == sat(t, f2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }
    fn t(s: &str) -> Trace {
        s.parse().unwrap()
    }

    #[test]
    fn run_examples() {
        let nfa = build(&f("a U b"));
        assert!(run(&nfa, &t("a; a; b")).unwrap());
        assert!(!run(&nfa, &t("a; a")).unwrap());
        let not_next = build(&f("!(X true)"));
        assert!(run(&not_next, &Trace::empty()).unwrap());
        assert!(matches!(run(&not_next, &t("a")), Err(Error::AlphabetMismatch(_))));
        let ga = build(&f("G a"));
        for tr in ["<eps>", "a", "a; a", "a; a; a"] {
            assert!(!run(&ga, &t(tr)).unwrap());
        }
    }

    #[test]
    fn witnesses() {
        let w = is_satisfiable(&f("F a")).unwrap();
        assert_eq!(w.trace, t("a"));
        assert_eq!(w.states_visited.len(), 2);
        let w = is_satisfiable(&f("F !a")).unwrap();
        assert_eq!(w.trace, Trace::empty());
        assert_eq!(w.states_visited, vec![StateId(0)]);
        assert!(is_satisfiable(&f("G a")).is_none());
        let w = is_satisfiable(&f("X X b & a")).unwrap();
        assert_eq!(w.trace, t("a; ; b"));
    }

    #[test]
    fn witness_symbol_choice() {
        let s = |g: &str| witness_symbol(&f(g)).map(|s| Trace(vec![s]).to_string());
        assert_eq!(s("true").unwrap(), "");
        assert_eq!(s("a | b").unwrap(), "a");
        assert_eq!(s("b | c & a").unwrap(), "b");
        assert_eq!(s("!a & b").unwrap(), "b");
        assert_eq!(s("a & b | c & d").unwrap(), "a b");
        assert!(s("a & !a").is_none());
    }

    #[test]
    fn bounded_equivalence() {
        assert!(equivalent(&f("X true & a"), &f("a"), 3).unwrap());
        assert!(equivalent(&f("W false"), &f("!(X true)"), 3).unwrap());
        assert!(!equivalent(&f("a"), &f("b"), 1).unwrap());
        assert!(matches!(
            equivalent(&f("a & b & c"), &f("d & e"), 1),
            Err(Error::AlphabetTooLarge { size: 5, max: 4 })
        ));
    }
}
