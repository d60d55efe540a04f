//! Reference evaluators.
//!
//! These are deliberately naive structural recursions over trace positions;
//! every other module is tested against them.

use crate::error::{Error, Result};
use crate::syntax::{AlphabetSymbol, Formula};
use crate::trace::Trace;

/// `π ⊨_e φ` for Extended Finite LTL. Any formula, any trace (including `ε`).
pub fn sat(trace: &Trace, formula: &Formula) -> bool {
    sat_at(trace.symbols(), 0, formula)
}

/// Satisfaction by the suffix `π(i)`; `i` may equal `|π|` (the empty suffix).
fn sat_at(pi: &[AlphabetSymbol], i: usize, f: &Formula) -> bool {
    use Formula::*;
    let n = pi.len();
    match f {
        True => true,
        False => false,
        Atom(a) => i < n && pi[i].contains(a),
        Not(g) => !sat_at(pi, i, g),
        And(l, r) => sat_at(pi, i, l) && sat_at(pi, i, r),
        Or(l, r) => sat_at(pi, i, l) || sat_at(pi, i, r),
        Next(g) => i < n && sat_at(pi, i + 1, g),
        WeakNext(g) => i == n || sat_at(pi, i + 1, g),
        Until(l, r) => until_at(pi, i, |j| sat_at(pi, j, l), |j| sat_at(pi, j, r)),
        // φ1 R φ2 ≡ ¬((¬φ1) U (¬φ2))
        Release(l, r) => !until_at(pi, i, |j| !sat_at(pi, j, l), |j| !sat_at(pi, j, r)),
    }
}

/// `∃j ∈ [i, |π|]: right(j) ∧ ∀k ∈ [i, j): left(k)`.
fn until_at(
    pi: &[AlphabetSymbol],
    i: usize,
    left: impl Fn(usize) -> bool,
    right: impl Fn(usize) -> bool,
) -> bool {
    for j in i..=pi.len() {
        if right(j) {
            return true;
        }
        if !left(j) {
            return false;
        }
    }
    false
}

/// `A ⊨_p γ` for propositional `γ`.
pub fn sat_prop(symbol: &AlphabetSymbol, formula: &Formula) -> Result<bool> {
    if !formula.is_propositional() {
        return Err(Error::NotPropositional(formula.to_string()));
    }
    Ok(eval_prop(symbol, formula))
}

/// Propositional evaluation without the upfront check; callers guarantee
/// `formula` is propositional.
pub(crate) fn eval_prop(symbol: &AlphabetSymbol, formula: &Formula) -> bool {
    use Formula::*;
    match formula {
        True => true,
        False => false,
        Atom(a) => symbol.contains(a),
        Not(g) => !eval_prop(symbol, g),
        And(l, r) => eval_prop(symbol, l) && eval_prop(symbol, r),
        Or(l, r) => eval_prop(symbol, l) || eval_prop(symbol, r),
        Next(_) | WeakNext(_) | Until(..) | Release(..) => {
            unreachable!("temporal operator in propositional formula")
        }
    }
}

/// `(π, 0) ⊨_f φ` under LTL_f semantics; always false on the empty trace.
pub fn sat_ltlf(trace: &Trace, formula: &Formula) -> bool {
    match trace.last() {
        Some(last) => ltlf_at(trace.symbols(), last, 0, formula),
        None => false,
    }
}

fn ltlf_at(pi: &[AlphabetSymbol], last: usize, i: usize, f: &Formula) -> bool {
    use Formula::*;
    let at = |j: usize, g: &Formula| ltlf_at(pi, last, j, g);
    match f {
        True => true,
        False => false,
        Atom(a) => pi[i].contains(a),
        Not(g) => !at(i, g),
        And(l, r) => at(i, l) && at(i, r),
        Or(l, r) => at(i, l) || at(i, r),
        Next(g) => i < last && at(i + 1, g),
        WeakNext(g) => i == last || at(i + 1, g),
        Until(l, r) => (i..=last)
            .find_map(|j| {
                if at(j, r) {
                    Some(true)
                } else if !at(j, l) {
                    Some(false)
                } else {
                    None
                }
            })
            .unwrap_or(false),
        Release(l, r) => {
            let dual = Formula::not(Formula::until(
                Formula::not((**l).clone()),
                Formula::not((**r).clone()),
            ));
            at(i, &dual)
        }
    }
}

/// The LTL_f to Finite LTL transformation `T`.
///
/// Atoms pass through, negations are strengthened with `X true` so they
/// exclude the empty trace, and the remaining operators recurse. `∨`, `W`
/// and `R` are first rewritten through their core duals, and `true` maps to
/// `X true`, which is what `¬false ∧ X true` reduces to.
pub fn translate_ltlf(formula: &Formula) -> Formula {
    use Formula::*;
    let nonempty = || Formula::next(Formula::True);
    match formula {
        Atom(_) | False => formula.clone(),
        True => nonempty(),
        Not(g) => Formula::and(Formula::not(translate_ltlf(g)), nonempty()),
        And(l, r) => Formula::and(translate_ltlf(l), translate_ltlf(r)),
        Next(g) => Formula::next(translate_ltlf(g)),
        Until(l, r) => Formula::until(translate_ltlf(l), translate_ltlf(r)),
        Or(l, r) => translate_ltlf(&Formula::not(Formula::and(
            Formula::not((**l).clone()),
            Formula::not((**r).clone()),
        ))),
        WeakNext(g) => translate_ltlf(&Formula::not(Formula::next(Formula::not(
            (**g).clone(),
        )))),
        Release(l, r) => translate_ltlf(&Formula::not(Formula::until(
            Formula::not((**l).clone()),
            Formula::not((**r).clone()),
        ))),
    }
}

/// Decide `ε ⊨_e φ` from the syntax of a PNF formula alone.
pub fn epsilon_sat(formula: &Formula) -> Result<bool> {
    if !formula.is_pnf() {
        return Err(Error::NotPnf(formula.to_string()));
    }
    Ok(eps(formula))
}

pub(crate) fn eps(f: &Formula) -> bool {
    use Formula::*;
    match f {
        True | Not(_) | WeakNext(_) => true,
        False | Atom(_) | Next(_) => false,
        And(l, r) => eps(l) && eps(r),
        Or(l, r) => eps(l) || eps(r),
        Until(_, r) | Release(_, r) => eps(r),
    }
}
