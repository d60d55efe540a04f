//! Formula generators for tests and benchmarks: exhaustive enumeration in a
//! fixed canonical order, seeded random formulas, and the benchmark corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Unary {
    Not,
    Next,
    WeakNext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Binary {
    And,
    Or,
    Until,
    Release,
}

const UNARY: [Unary; 3] = [Unary::Not, Unary::Next, Unary::WeakNext];
const BINARY: [Binary; 4] = [Binary::And, Binary::Or, Binary::Until, Binary::Release];

fn unary(op: Unary, f: Formula) -> Formula {
    match op {
        Unary::Not => Formula::not(f),
        Unary::Next => Formula::next(f),
        Unary::WeakNext => Formula::weak_next(f),
    }
}

fn binary(op: Binary, l: Formula, r: Formula) -> Formula {
    match op {
        Binary::And => Formula::and(l, r),
        Binary::Or => Formula::or(l, r),
        Binary::Until => Formula::until(l, r),
        Binary::Release => Formula::release(l, r),
    }
}

fn leaves(atoms: &[&str]) -> Vec<Formula> {
    let mut out: Vec<Formula> = atoms.iter().map(|a| Formula::atom(a)).collect();
    out.push(Formula::True);
    out.push(Formula::False);
    out
}

/// Every formula over `atoms`, `true`, `false`, `¬ X W ∧ ∨ U R` with at most
/// `max_nodes` syntax-tree nodes, stopping after `cap` formulas.
///
/// Order: by node count, then leaves, unary operators and binary operators
/// (split by left operand node count) in declaration order.
pub fn enumerate(atoms: &[&str], max_nodes: usize, cap: usize) -> Vec<Formula> {
    let mut levels: Vec<Vec<Formula>> = vec![Vec::new()];
    let mut out = Vec::new();
    for n in 1..=max_nodes {
        let mut level = Vec::new();
        let full = |level: &Vec<Formula>, out: &Vec<Formula>| out.len() + level.len() >= cap;
        if n == 1 {
            level = leaves(atoms);
            level.truncate(cap - out.len());
        } else {
            'fill: {
                for op in UNARY {
                    for f in &levels[n - 1] {
                        if full(&level, &out) {
                            break 'fill;
                        }
                        level.push(unary(op, f.clone()));
                    }
                }
                for op in BINARY {
                    for k in 1..n - 1 {
                        for l in &levels[k] {
                            for r in &levels[n - 1 - k] {
                                if full(&level, &out) {
                                    break 'fill;
                                }
                                level.push(binary(op, l.clone(), r.clone()));
                            }
                        }
                    }
                }
            }
        }
        out.extend(level.iter().cloned());
        levels.push(level);
        if out.len() >= cap {
            break;
        }
    }
    out
}

/// The exhaustive test set: formulas over `{a, b}` with up to 7 nodes, first 20 000.
pub fn enumerate_small() -> Vec<Formula> {
    enumerate(&["a", "b"], 7, 20_000)
}

/// Random formula with exactly `nodes` syntax-tree nodes.
pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[&str], nodes: usize) -> Formula {
    let nodes = nodes.max(1);
    if nodes == 1 {
        return if rng.gen_bool(0.85) {
            Formula::atom(atoms.choose(rng).expect("at least one atom"))
        } else if rng.gen_bool(0.5) {
            Formula::True
        } else {
            Formula::False
        };
    }
    if nodes == 2 || rng.gen_bool(0.35) {
        let op = *UNARY.choose(rng).unwrap();
        return unary(op, random_formula(rng, atoms, nodes - 1));
    }
    let op = *BINARY.choose(rng).unwrap();
    let left = rng.gen_range(1..nodes - 1);
    binary(op, random_formula(rng, atoms, left), random_formula(rng, atoms, nodes - 1 - left))
}

/// `count` random formulas over `{a, b}` of at most `max_nodes` nodes.
pub fn random_formulas(seed: u64, count: usize, max_nodes: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_nodes);
            random_formula(&mut rng, &["a", "b"], n)
        })
        .collect()
}

/// Random formula over the core operators `¬ ∧ X U`.
pub fn random_core_formula<R: Rng>(rng: &mut R, atoms: &[&str], nodes: usize) -> Formula {
    let nodes = nodes.max(1);
    if nodes == 1 {
        return if rng.gen_bool(0.9) {
            Formula::atom(atoms.choose(rng).expect("at least one atom"))
        } else if rng.gen_bool(0.5) {
            Formula::True
        } else {
            Formula::False
        };
    }
    if nodes == 2 || rng.gen_bool(0.4) {
        let sub = random_core_formula(rng, atoms, nodes - 1);
        return if rng.gen_bool(0.5) { Formula::not(sub) } else { Formula::next(sub) };
    }
    let left = rng.gen_range(1..nodes - 1);
    let l = random_core_formula(rng, atoms, left);
    let r = random_core_formula(rng, atoms, nodes - 1 - left);
    if rng.gen_bool(0.5) {
        Formula::and(l, r)
    } else {
        Formula::until(l, r)
    }
}

pub fn random_core_formulas(seed: u64, count: usize, max_nodes: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_nodes);
            random_core_formula(&mut rng, &["a", "b"], n)
        })
        .collect()
}

/// Hand-picked pattern formulas in the style of common LTL benchmark suites.
const PATTERNS: &[&str] = &[
    "a",
    "!a",
    "X a",
    "F a",
    "G a",
    "a U b",
    "a R b",
    "G F a",
    "F G a",
    "G (a -> F b)",
    "G (a -> X b)",
    "F a & F b",
    "G a | G b",
    "a U (b U c)",
    "(a U b) U c",
    "G (a -> (b U c))",
    "F (a & X (b & X c))",
    "G (a -> X (b R c))",
    "!a U (b & !c)",
    "G F a -> G F b",
    "F G a | G F b",
    "G (a | b) & F c",
    "(G F a & G F b) -> G F c",
    "G (a -> (F b & F c))",
    "F (a & F (b & F (c & F d)))",
    "G (a & !b -> (!c U b))",
    "G ((a & !b & F b) -> (!c U b))",
    "G (a -> G (b -> F c))",
    "(a U b) & (c R d)",
    "X X X a",
    "W W (a | b)",
    "G (a -> W b)",
    "F (a & W false)",
    "(a R b) U (c R d)",
    "G (!a | F (b & X c))",
    "F (a U (b & G c))",
];

const CORPUS_ATOMS: [&str; 4] = ["a", "b", "c", "d"];
/// Base formulas before negation.
pub const CORPUS_BASE: usize = 92;
pub const CORPUS_MAX_SIZE: usize = 27;

/// The benchmark corpus: `CORPUS_BASE` formulas and their negations,
/// interleaved, covering sizes `1..=CORPUS_MAX_SIZE + 1`.
///
/// The base set is the pattern list topped up with random formulas whose
/// sizes are spread evenly up to `CORPUS_MAX_SIZE`.
pub fn corpus(seed: u64) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base: Vec<Formula> = PATTERNS
        .iter()
        .map(|s| crate::parse::parse(s).expect("pattern parses"))
        .collect();
    let extra = CORPUS_BASE - base.len();
    for i in 0..extra {
        let target = 2 + (i * (CORPUS_MAX_SIZE - 2)) / (extra - 1);
        let f = loop {
            let atoms = &CORPUS_ATOMS[..rng.gen_range(1..=4)];
            let candidate = random_formula(&mut rng, atoms, target);
            if candidate.size() == target && !base.contains(&candidate) {
                break candidate;
            }
        };
        base.push(f);
    }
    base.into_iter()
        .flat_map(|f| [f.clone(), Formula::not(f)])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn enumeration_counts() {
        let by_nodes = |n| enumerate(&["a", "b"], n, usize::MAX).len();
        assert_eq!(by_nodes(1), 4);
        assert_eq!(by_nodes(2), 4 + 12);
        assert_eq!(by_nodes(3), 4 + 12 + 100);
        assert_eq!(by_nodes(4), 116 + 684);
    }

    #[test]
    fn enumeration_is_capped_and_distinct() {
        let all = enumerate_small();
        assert_eq!(all.len(), 20_000);
        assert!(all.iter().all(|f| f.size() <= 7));
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), all.len());
        assert_eq!(all[0], Formula::atom("a"));
        assert_eq!(all[4], Formula::not(Formula::atom("a")));
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random_formulas(7, 50, 14), random_formulas(7, 50, 14));
        assert_ne!(random_formulas(7, 50, 14), random_formulas(8, 50, 14));
        assert!(random_formulas(7, 500, 14).iter().all(|f| f.node_count() <= 14));
        assert!(random_core_formulas(1, 500, 14).iter().all(Formula::is_core));
    }

    #[test]
    fn corpus_shape() {
        let c = corpus(2016);
        assert_eq!(c.len(), 2 * CORPUS_BASE);
        let sizes: Vec<usize> = c.iter().map(Formula::size).collect();
        assert_eq!(*sizes.iter().min().unwrap(), 1);
        assert_eq!(*sizes.iter().max().unwrap(), CORPUS_MAX_SIZE + 1);
        assert!(c.iter().all(|f| f.atoms().len() <= 4));
        assert_eq!(c[1], Formula::not(c[0].clone()));
        assert_eq!(c, corpus(2016));
    }
}
