//! Simplification of propositional edge guards.
//!
//! Guards are first put in negation normal form and cleaned up by local rules
//! (constant folding, flattening, idempotence, complements, absorption). When
//! a guard mentions at most [`EXACT_LIMIT`] atoms it is then replaced by a
//! canonical irredundant sum of products computed from its truth table, so
//! equivalent guards print identically.

use std::collections::BTreeSet;

use crate::semantics::eval_prop;
use crate::syntax::{AlphabetSymbol, Formula, PropName};

/// Largest number of atoms for which guards are minimized exactly.
pub const EXACT_LIMIT: usize = 6;

/// Largest number of atoms for which satisfiability is decided by enumeration.
const ENUM_LIMIT: usize = 16;

/// Simplify a propositional formula. Non-propositional input is returned as is.
pub fn simplify(guard: &Formula) -> Formula {
    if !guard.is_propositional() {
        return guard.clone();
    }
    let atoms: Vec<PropName> = guard.atoms().into_iter().collect();
    if atoms.len() <= EXACT_LIMIT {
        minimize(truth_table(guard, &atoms), &atoms)
    } else {
        simplify_rules(guard)
    }
}

/// Rule-based simplification only.
pub fn simplify_rules(guard: &Formula) -> Formula {
    Nnf::from_formula(&guard.to_pnf()).normalize().to_formula()
}

/// True iff no assignment satisfies `guard`. Guards over more than
/// `ENUM_LIMIT` atoms are only recognised when rule simplification folds
/// them to `false`.
pub fn is_unsatisfiable(guard: &Formula) -> bool {
    let atoms: Vec<PropName> = guard.atoms().into_iter().collect();
    if atoms.len() > ENUM_LIMIT {
        return simplify_rules(guard) == Formula::False;
    }
    !(0u64..1 << atoms.len()).any(|bits| eval_prop(&assignment(&atoms, bits), guard))
}

/// `γ1 ≡_p γ2`, by enumeration over the union of their atoms.
pub fn equivalent(g1: &Formula, g2: &Formula) -> bool {
    let atoms: Vec<PropName> = g1.atoms().union(&g2.atoms()).cloned().collect();
    assert!(atoms.len() <= ENUM_LIMIT, "too many atoms to compare guards");
    (0u64..1 << atoms.len()).all(|bits| {
        let a = assignment(&atoms, bits);
        eval_prop(&a, g1) == eval_prop(&a, g2)
    })
}

/// Bit `i` of the result is the value of `guard` under assignment `i`, where
/// bit `j` of `i` gives the value of `atoms[j]`.
pub fn truth_table(guard: &Formula, atoms: &[PropName]) -> u64 {
    assert!(atoms.len() <= EXACT_LIMIT);
    (0u64..1 << atoms.len())
        .filter(|&bits| eval_prop(&assignment(atoms, bits), guard))
        .fold(0, |acc, bits| acc | 1 << bits)
}

pub(crate) fn assignment(atoms: &[PropName], bits: u64) -> AlphabetSymbol {
    atoms
        .iter()
        .enumerate()
        .filter(|(j, _)| bits >> j & 1 == 1)
        .map(|(_, a)| a.clone())
        .collect()
}

/// A product term: `mask` marks the atoms it mentions, `value` their polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Cube {
    mask: u32,
    value: u32,
}

impl Cube {
    fn covers(&self, minterm: u32) -> bool {
        minterm & self.mask == self.value
    }

    fn literals(&self) -> u32 {
        self.mask.count_ones()
    }
}

/// Quine–McCluskey with an exact minimum cover.
fn minimize(table: u64, atoms: &[PropName]) -> Formula {
    let n = atoms.len();
    let full: u32 = (1u32 << n) - 1;
    let minterms: Vec<u32> = (0..1u32 << n).filter(|m| table >> m & 1 == 1).collect();
    if minterms.is_empty() {
        return Formula::False;
    }
    if minterms.len() == 1 << n {
        return Formula::True;
    }

    // Prime implicants by repeated merging of adjacent cubes.
    let mut current: BTreeSet<Cube> = minterms
        .iter()
        .map(|&m| Cube { mask: full, value: m })
        .collect();
    let mut primes: BTreeSet<Cube> = BTreeSet::new();
    while !current.is_empty() {
        let cubes: Vec<Cube> = current.iter().copied().collect();
        let mut merged_flags = vec![false; cubes.len()];
        let mut next = BTreeSet::new();
        for i in 0..cubes.len() {
            for j in i + 1..cubes.len() {
                let (a, b) = (cubes[i], cubes[j]);
                if a.mask != b.mask {
                    continue;
                }
                let diff = a.value ^ b.value;
                if diff.count_ones() == 1 {
                    next.insert(Cube {
                        mask: a.mask & !diff,
                        value: a.value & !diff,
                    });
                    merged_flags[i] = true;
                    merged_flags[j] = true;
                }
            }
        }
        for (c, merged) in cubes.iter().zip(&merged_flags) {
            if !merged {
                primes.insert(*c);
            }
        }
        current = next;
    }
    let mut primes: Vec<Cube> = primes.into_iter().collect();
    primes.sort_by_key(|c| (c.literals(), c.mask, c.value));

    let cover = min_cover(&primes, &minterms);
    let mut terms: Vec<Formula> = cover
        .iter()
        .map(|c| {
            let lits: Vec<Formula> = (0..n)
                .filter(|j| c.mask >> j & 1 == 1)
                .map(|j| {
                    let atom = Formula::Atom(atoms[j].clone());
                    if c.value >> j & 1 == 1 {
                        atom
                    } else {
                        Formula::not(atom)
                    }
                })
                .collect();
            Formula::conjunction(&lits)
        })
        .collect();
    terms.sort();
    Formula::disjunction(&terms)
}

/// Smallest set of primes covering every minterm; ties broken by literal
/// count, then by the order of `primes`.
fn min_cover(primes: &[Cube], minterms: &[u32]) -> Vec<Cube> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut uncovered: Vec<u32> = minterms.to_vec();

    // Essential primes.
    for &m in minterms {
        let covering: Vec<usize> = (0..primes.len()).filter(|&p| primes[p].covers(m)).collect();
        if covering.len() == 1 && !chosen.contains(&covering[0]) {
            chosen.push(covering[0]);
        }
    }
    uncovered.retain(|&m| !chosen.iter().any(|&p| primes[p].covers(m)));

    let candidates: Vec<usize> = (0..primes.len()).filter(|p| !chosen.contains(p)).collect();
    let mut best: Option<(usize, u32, Vec<usize>)> = None;
    let mut stack = Vec::new();
    search_cover(primes, &candidates, &uncovered, &mut stack, &mut best);
    if let Some((_, _, extra)) = best {
        chosen.extend(extra);
    }
    chosen.sort();
    chosen.into_iter().map(|p| primes[p]).collect()
}

fn search_cover(
    primes: &[Cube],
    candidates: &[usize],
    uncovered: &[u32],
    stack: &mut Vec<usize>,
    best: &mut Option<(usize, u32, Vec<usize>)>,
) {
    let cost = |sel: &[usize]| -> (usize, u32) {
        (sel.len(), sel.iter().map(|&p| primes[p].literals()).sum())
    };
    if let Some((bn, _, _)) = best {
        if stack.len() >= *bn && !uncovered.is_empty() {
            return;
        }
    }
    let Some(&m) = uncovered.first() else {
        let (n, lits) = cost(stack);
        if best.as_ref().is_none_or(|(bn, bl, _)| (n, lits) < (*bn, *bl)) {
            *best = Some((n, lits, stack.clone()));
        }
        return;
    };
    // Branch on the primes covering the first uncovered minterm.
    for &p in candidates.iter().filter(|&&p| primes[p].covers(m)) {
        stack.push(p);
        let rest: Vec<u32> = uncovered.iter().copied().filter(|&x| !primes[p].covers(x)).collect();
        search_cover(primes, candidates, &rest, stack, best);
        stack.pop();
    }
}

/// N-ary negation normal form used by the rule-based simplifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Nnf {
    Const(bool),
    Lit(PropName, bool),
    And(Vec<Nnf>),
    Or(Vec<Nnf>),
}

impl Nnf {
    fn from_formula(f: &Formula) -> Nnf {
        match f {
            Formula::True => Nnf::Const(true),
            Formula::False => Nnf::Const(false),
            Formula::Atom(a) => Nnf::Lit(a.clone(), true),
            Formula::Not(g) => match &**g {
                Formula::Atom(a) => Nnf::Lit(a.clone(), false),
                other => Nnf::from_formula(&Formula::not(other.clone()).to_pnf()),
            },
            Formula::And(l, r) => Nnf::And(vec![Nnf::from_formula(l), Nnf::from_formula(r)]),
            Formula::Or(l, r) => Nnf::Or(vec![Nnf::from_formula(l), Nnf::from_formula(r)]),
            _ => unreachable!("temporal operator in guard"),
        }
    }

    fn normalize(self) -> Nnf {
        match self {
            Nnf::And(items) => Nnf::junction(items, true),
            Nnf::Or(items) => Nnf::junction(items, false),
            leaf => leaf,
        }
    }

    /// Shared logic for `∧` (`conj = true`) and `∨`.
    fn junction(items: Vec<Nnf>, conj: bool) -> Nnf {
        let unit = conj; // neutral element: true for ∧, false for ∨
        let mut flat: Vec<Nnf> = Vec::new();
        for item in items.into_iter().map(Nnf::normalize) {
            match item {
                Nnf::Const(c) if c == unit => {}
                Nnf::Const(c) => return Nnf::Const(c),
                Nnf::And(xs) if conj => flat.extend(xs),
                Nnf::Or(xs) if !conj => flat.extend(xs),
                other => flat.push(other),
            }
        }
        flat.sort();
        flat.dedup();
        for item in &flat {
            if let Nnf::Lit(a, pol) = item {
                if flat.contains(&Nnf::Lit(a.clone(), !pol)) {
                    return Nnf::Const(!unit);
                }
            }
        }
        // Absorption: x ∨ (x ∧ y) = x, x ∧ (x ∨ y) = x.
        let parts = |n: &Nnf| -> Vec<Nnf> {
            match n {
                Nnf::Or(xs) if conj => xs.clone(),
                Nnf::And(xs) if !conj => xs.clone(),
                other => vec![other.clone()],
            }
        };
        let keep: Vec<bool> = (0..flat.len())
            .map(|i| {
                let pi = parts(&flat[i]);
                !(0..flat.len()).any(|j| {
                    j != i && {
                        let pj = parts(&flat[j]);
                        pj.len() < pi.len() && pj.iter().all(|x| pi.contains(x))
                    }
                })
            })
            .collect();
        let mut flat: Vec<Nnf> = flat
            .into_iter()
            .zip(keep)
            .filter_map(|(n, k)| k.then_some(n))
            .collect();
        match flat.len() {
            0 => Nnf::Const(unit),
            1 => flat.pop().unwrap(),
            _ if conj => Nnf::And(flat),
            _ => Nnf::Or(flat),
        }
    }

    fn to_formula(&self) -> Formula {
        match self {
            Nnf::Const(true) => Formula::True,
            Nnf::Const(false) => Formula::False,
            Nnf::Lit(a, true) => Formula::Atom(a.clone()),
            Nnf::Lit(a, false) => Formula::not(Formula::Atom(a.clone())),
            Nnf::And(xs) => Formula::conjunction(&xs.iter().map(Nnf::to_formula).collect::<Vec<_>>()),
            Nnf::Or(xs) => Formula::disjunction(&xs.iter().map(Nnf::to_formula).collect::<Vec<_>>()),
        }
    }
}
