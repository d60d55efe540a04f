//! Formula representation for Extended Finite LTL.
//!
//! Formulas are immutable trees with `Arc`-shared children. Equality, ordering
//! and hashing are structural, so sets of formulas (`BTreeSet<Formula>`) are
//! the natural representation for automaton states and normal-form clauses.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Words reserved by the concrete syntax; they can never be atom names.
pub const KEYWORDS: &[&str] = &["true", "false", "X", "W", "F", "G", "U", "R"];

/// Name of an atomic proposition: a letter followed by letters, digits or `_`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropName(Arc<str>);

impl PropName {
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            && !KEYWORDS.contains(&name);
        if valid {
            Ok(PropName(name.into()))
        } else {
            Err(Error::Parse {
                pos: 0,
                msg: format!("`{name}` is not a valid proposition name"),
            })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PropName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for PropName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// One letter of the alphabet `2^AP`: the set of propositions that hold.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlphabetSymbol(pub BTreeSet<PropName>);

impl AlphabetSymbol {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, atom: &PropName) -> bool {
        self.0.contains(atom)
    }

    pub fn props(&self) -> impl Iterator<Item = &PropName> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<PropName> for AlphabetSymbol {
    fn from_iter<I: IntoIterator<Item = PropName>>(iter: I) -> Self {
        AlphabetSymbol(iter.into_iter().collect())
    }
}

/// Extended Finite LTL formula.
///
/// The derived variant order matters: it is the total structural order used to
/// canonicalize formula sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(PropName),
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Next(Arc<Formula>),
    WeakNext(Arc<Formula>),
    Until(Arc<Formula>, Arc<Formula>),
    Release(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    /// Atom constructor for names known to be valid; panics otherwise.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(PropName::new(name).expect("invalid proposition name"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Arc::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Arc::new(l), Arc::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Arc::new(l), Arc::new(r))
    }

    pub fn next(f: Formula) -> Formula {
        Formula::Next(Arc::new(f))
    }

    pub fn weak_next(f: Formula) -> Formula {
        Formula::WeakNext(Arc::new(f))
    }

    pub fn until(l: Formula, r: Formula) -> Formula {
        Formula::Until(Arc::new(l), Arc::new(r))
    }

    pub fn release(l: Formula, r: Formula) -> Formula {
        Formula::Release(Arc::new(l), Arc::new(r))
    }

    /// `F φ`, i.e. `true U φ`.
    pub fn eventually(f: Formula) -> Formula {
        Formula::until(Formula::True, f)
    }

    /// `G φ` in positive form, `false R φ`.
    pub fn always(f: Formula) -> Formula {
        Formula::release(Formula::False, f)
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::or(Formula::not(l), r)
    }

    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::and(
            Formula::implies(l.clone(), r.clone()),
            Formula::implies(r, l),
        )
    }

    /// Conjunction of a set of formulas, nested to the left; `true` when empty.
    pub fn conjunction<'a, I>(items: I) -> Formula
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        items
            .into_iter()
            .cloned()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Disjunction of a set of formulas, nested to the left; `false` when empty.
    pub fn disjunction<'a, I>(items: I) -> Formula
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        items
            .into_iter()
            .cloned()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    pub fn children(&self) -> impl Iterator<Item = &Formula> {
        let (l, r): (Option<&Formula>, Option<&Formula>) = match self {
            Formula::True | Formula::False | Formula::Atom(_) => (None, None),
            Formula::Not(f) | Formula::Next(f) | Formula::WeakNext(f) => (Some(f), None),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Until(a, b)
            | Formula::Release(a, b) => (Some(a), Some(b)),
        };
        l.into_iter().chain(r)
    }

    /// `S(φ)`: all (not necessarily proper) subformulas, deduplicated.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.contains(self) {
            return;
        }
        out.insert(self.clone());
        for c in self.children() {
            c.collect_subformulas(out);
        }
    }

    /// `|φ|`, the number of distinct subformulas.
    pub fn size(&self) -> usize {
        self.subformulas().len()
    }

    /// Number of AST nodes, counting shared subtrees once per occurrence.
    pub fn node_count(&self) -> usize {
        1 + self.children().map(Formula::node_count).sum::<usize>()
    }

    pub fn atoms(&self) -> BTreeSet<PropName> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<PropName>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            _ => self.children().for_each(|c| c.collect_atoms(out)),
        }
    }

    /// No `X`, `W`, `U` or `R` anywhere.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Next(_) | Formula::WeakNext(_) | Formula::Until(..) | Formula::Release(..) => {
                false
            }
            _ => self.children().all(Formula::is_propositional),
        }
    }

    /// Uses only the core operators `¬ ∧ X U` over atoms and constants.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::Or(..) | Formula::WeakNext(_) | Formula::Release(..) => false,
            _ => self.children().all(Formula::is_core),
        }
    }

    pub fn is_literal(&self) -> bool {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => true,
            Formula::Not(f) => matches!(**f, Formula::Atom(_)),
            _ => false,
        }
    }

    /// Every negation is applied directly to an atom.
    pub fn is_pnf(&self) -> bool {
        match self {
            Formula::Not(f) => matches!(**f, Formula::Atom(_)),
            _ => self.children().all(Formula::is_pnf),
        }
    }

    /// Push negations down to atoms using the dual operators.
    pub fn to_pnf(&self) -> Formula {
        pnf(self, false)
    }
}

fn pnf(f: &Formula, negate: bool) -> Formula {
    use Formula::*;
    match (f, negate) {
        (True, false) | (False, true) => True,
        (False, false) | (True, true) => False,
        (Atom(_), false) => f.clone(),
        (Atom(_), true) => Formula::not(f.clone()),
        (Not(g), _) => pnf(g, !negate),
        (And(l, r), false) => Formula::and(pnf(l, false), pnf(r, false)),
        (And(l, r), true) => Formula::or(pnf(l, true), pnf(r, true)),
        (Or(l, r), false) => Formula::or(pnf(l, false), pnf(r, false)),
        (Or(l, r), true) => Formula::and(pnf(l, true), pnf(r, true)),
        (Next(g), false) => Formula::next(pnf(g, false)),
        (Next(g), true) => Formula::weak_next(pnf(g, true)),
        (WeakNext(g), false) => Formula::weak_next(pnf(g, false)),
        (WeakNext(g), true) => Formula::next(pnf(g, true)),
        (Until(l, r), false) => Formula::until(pnf(l, false), pnf(r, false)),
        (Until(l, r), true) => Formula::release(pnf(l, true), pnf(r, true)),
        (Release(l, r), false) => Formula::release(pnf(l, false), pnf(r, false)),
        (Release(l, r), true) => Formula::until(pnf(l, true), pnf(r, true)),
    }
}

// Printing. Precedence levels, loosest first.
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_TEMPORAL: u8 = 3;
const PREC_UNARY: u8 = 4;
const PREC_ATOMIC: u8 = 5;

impl Formula {
    fn precedence(&self) -> u8 {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => PREC_ATOMIC,
            Formula::Not(_) | Formula::Next(_) | Formula::WeakNext(_) => PREC_UNARY,
            Formula::Until(..) | Formula::Release(..) => PREC_TEMPORAL,
            Formula::And(..) => PREC_AND,
            Formula::Or(..) => PREC_OR,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Not(g) => {
                f.write_str("!")?;
                g.fmt_operand(f, g.precedence() < PREC_ATOMIC)
            }
            Formula::Next(g) | Formula::WeakNext(g) => {
                f.write_str(if matches!(self, Formula::Next(_)) { "X " } else { "W " })?;
                g.fmt_operand(f, g.precedence() < PREC_ATOMIC)
            }
            Formula::Until(l, r) | Formula::Release(l, r) => {
                // Non-atomic operands are always bracketed so the output reads
                // the same whichever of U or a prefix operator binds tighter.
                l.fmt_operand(f, l.precedence() < PREC_ATOMIC)?;
                f.write_str(if matches!(self, Formula::Until(..)) { " U " } else { " R " })?;
                r.fmt_operand(f, r.precedence() < PREC_ATOMIC)
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let (prec, op) = if matches!(self, Formula::And(..)) {
                    (PREC_AND, " & ")
                } else {
                    (PREC_OR, " | ")
                };
                l.fmt_operand(f, l.precedence() < prec)?;
                f.write_str(op)?;
                r.fmt_operand(f, r.precedence() <= prec)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}
