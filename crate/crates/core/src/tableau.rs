//! Tableau construction of an NFA from a formula.
//!
//! States are sets of PNF subformulas of the input. Starting from `{φ}`, each
//! unexpanded state `q` is put in automaton normal form and every clause
//! `guard ∧ N(⋀F)` becomes an edge labelled `guard` to the state for `F`.
//! A state accepts iff the empty trace satisfies the conjunction of its
//! formulas, which is decided syntactically.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::time::Instant;

use crate::boolean;
use crate::error::{Error, Result};
use crate::normalform::{anf, anf_relaxed};
use crate::semantics::{eps, eval_prop};
use crate::syntax::{Formula, PropName};
use crate::trace::all_symbols;

/// Dense state index in discovery order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfaState {
    pub id: StateId,
    pub formulas: BTreeSet<Formula>,
    pub accepting: bool,
}

/// Symbolic transition: stands for every `(from, A, to)` with `A ⊨_p guard`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: StateId,
    pub to: StateId,
    pub guard: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub alphabet: BTreeSet<PropName>,
    pub states: Vec<NfaState>,
    pub initial: StateId,
    pub edges: Vec<Edge>,
}

/// Which normal form drives edge creation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Arbitrary propositional guards, clauses grouped by successor.
    #[default]
    Relaxed,
    /// One edge per ANF clause, guarded by its literal conjunction.
    Strict,
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    pub mode: Mode,
    /// Declared alphabet; defaults to the atoms of the formula.
    pub alphabet: Option<BTreeSet<PropName>>,
    pub deadline: Option<Instant>,
}

impl BuildOptions {
    pub fn strict() -> Self {
        BuildOptions { mode: Mode::Strict, ..Default::default() }
    }

    pub fn with_alphabet(mut self, alphabet: BTreeSet<PropName>) -> Self {
        self.alphabet = Some(alphabet);
        self
    }
}

/// Build the automaton for `formula` with default options.
pub fn build(formula: &Formula) -> Nfa {
    build_with(formula, &BuildOptions::default()).expect("no alphabet or deadline to violate")
}

pub fn build_with(formula: &Formula, options: &BuildOptions) -> Result<Nfa> {
    let alphabet = match &options.alphabet {
        Some(ap) => {
            if let Some(extra) = formula.atoms().into_iter().find(|a| !ap.contains(a)) {
                return Err(Error::AlphabetMismatch(extra));
            }
            ap.clone()
        }
        None => formula.atoms(),
    };
    let root = formula.to_pnf();

    let mut states: Vec<NfaState> = Vec::new();
    let mut index: HashMap<BTreeSet<Formula>, StateId> = HashMap::new();
    let mut queue: VecDeque<StateId> = VecDeque::new();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();

    let mut intern = |set: BTreeSet<Formula>, states: &mut Vec<NfaState>, queue: &mut VecDeque<StateId>| {
        if let Some(&id) = index.get(&set) {
            return id;
        }
        let id = StateId(states.len());
        states.push(NfaState { id, accepting: mark_accepting(&set), formulas: set.clone() });
        index.insert(set, id);
        queue.push_back(id);
        id
    };

    let initial = intern(BTreeSet::from([root]), &mut states, &mut queue);
    while let Some(q) = queue.pop_front() {
        if options.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Timeout);
        }
        let conj = Formula::conjunction(&states[q.0].formulas);
        let clauses: Vec<(Formula, BTreeSet<Formula>)> = match options.mode {
            Mode::Relaxed => anf_relaxed(&conj)?
                .into_iter()
                .map(|c| (c.guard, c.nf))
                .collect(),
            Mode::Strict => anf(&conj)?
                .clauses
                .into_iter()
                .map(|c| (c.guard(), c.nf))
                .collect(),
        };
        for (guard, nf) in clauses {
            // A successor containing `false` has an empty language.
            let Some(target) = canonical_state(&nf) else { continue };
            let to = intern(target, &mut states, &mut queue);
            edges.insert(Edge { from: q, to, guard });
        }
    }

    Ok(Nfa { alphabet, states, initial, edges: edges.into_iter().collect() })
}

/// Flatten conjunctions and drop `true`; `None` if the set contains `false`.
fn canonical_state(nf: &BTreeSet<Formula>) -> Option<BTreeSet<Formula>> {
    fn add(f: &Formula, out: &mut BTreeSet<Formula>) -> bool {
        match f {
            Formula::True => true,
            Formula::False => false,
            Formula::And(l, r) => add(l, out) && add(r, out),
            other => {
                out.insert(other.clone());
                true
            }
        }
    }
    let mut out = BTreeSet::new();
    nf.iter().all(|f| add(f, &mut out)).then_some(out)
}

/// `ε ⊨_e ⋀q`, decided syntactically. Members must be in PNF.
pub fn mark_accepting(q: &BTreeSet<Formula>) -> bool {
    debug_assert!(q.iter().all(Formula::is_pnf));
    q.iter().all(eps)
}

/// Collapse parallel edges into one whose guard is the simplified
/// disjunction; edges whose guard is unsatisfiable disappear.
pub fn merge_edges(nfa: &Nfa) -> Nfa {
    let mut groups: BTreeMap<(StateId, StateId), Vec<Formula>> = BTreeMap::new();
    for e in &nfa.edges {
        groups.entry((e.from, e.to)).or_default().push(e.guard.clone());
    }
    let edges = groups
        .into_iter()
        .filter_map(|((from, to), guards)| {
            let guard = boolean::simplify(&Formula::disjunction(&guards));
            (guard != Formula::False && !boolean::is_unsatisfiable(&guard))
                .then_some(Edge { from, to, guard })
        })
        .collect();
    Nfa { edges, ..nfa.clone() }
}

/// Remove states from which no accepting state is reachable (the initial
/// state is always kept). Surviving states keep their relative order.
pub fn prune_dead(nfa: &Nfa) -> Nfa {
    let mut live: HashSet<StateId> = nfa.states.iter().filter(|s| s.accepting).map(|s| s.id).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for e in &nfa.edges {
            if live.contains(&e.to) && live.insert(e.from) {
                changed = true;
            }
        }
    }
    let mut kept = live.clone();
    kept.insert(nfa.initial);

    let mut renumber: HashMap<StateId, StateId> = HashMap::new();
    let mut states = Vec::new();
    for s in nfa.states.iter().filter(|s| kept.contains(&s.id)) {
        let id = StateId(states.len());
        renumber.insert(s.id, id);
        states.push(NfaState { id, ..s.clone() });
    }
    let edges = nfa
        .edges
        .iter()
        .filter(|e| live.contains(&e.to))
        .filter_map(|e| {
            Some(Edge { from: *renumber.get(&e.from)?, to: *renumber.get(&e.to)?, guard: e.guard.clone() })
        })
        .collect();
    Nfa { alphabet: nfa.alphabet.clone(), states, initial: renumber[&nfa.initial], edges }
}

impl Nfa {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn state(&self, id: StateId) -> &NfaState {
        &self.states[id.0]
    }

    pub fn accepting(&self) -> impl Iterator<Item = &NfaState> {
        self.states.iter().filter(|s| s.accepting)
    }

    pub fn outgoing(&self, id: StateId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == id)
    }

    /// Number of distinct concrete transitions `(q, A, q')` over `2^AP`.
    pub fn concrete_transition_count(&self) -> Result<usize> {
        const MAX: usize = 16;
        if self.alphabet.len() > MAX {
            return Err(Error::AlphabetTooLarge { size: self.alphabet.len(), max: MAX });
        }
        let symbols = all_symbols(&self.alphabet);
        let mut seen: HashSet<(StateId, StateId, usize)> = HashSet::new();
        for e in &self.edges {
            for (i, s) in symbols.iter().enumerate() {
                if eval_prop(s, &e.guard) {
                    seen.insert((e.from, e.to, i));
                }
            }
        }
        Ok(seen.len())
    }
}
