//! Automaton normal form.
//!
//! `anf = an ∘ pa ∘ gt`: unroll every `U`/`R` not yet under a next operator
//! (`gt`), distribute into a disjunction of pseudo-clauses treating `X`/`W`
//! formulas as opaque literals (`pa`), then merge the next-operators of each
//! pseudo-clause into one (`ct`, `an`).
//!
//! Clauses that can never be satisfied (complementary literals, a `false`
//! literal, or `X false`) are dropped, and `true` is dropped from literal and
//! next-formula sets. Both rewrites preserve `≡_e`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::boolean;
use crate::error::{Error, Result};
use crate::syntax::{Formula, PropName};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    True,
    False,
    Pos(PropName),
    Neg(PropName),
}

impl Literal {
    pub fn from_formula(f: &Formula) -> Option<Literal> {
        match f {
            Formula::True => Some(Literal::True),
            Formula::False => Some(Literal::False),
            Formula::Atom(a) => Some(Literal::Pos(a.clone())),
            Formula::Not(g) => match &**g {
                Formula::Atom(a) => Some(Literal::Neg(a.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Literal::True => Formula::True,
            Literal::False => Formula::False,
            Literal::Pos(a) => Formula::Atom(a.clone()),
            Literal::Neg(a) => Formula::not(Formula::Atom(a.clone())),
        }
    }

    pub fn complement(&self) -> Literal {
        match self {
            Literal::True => Literal::False,
            Literal::False => Literal::True,
            Literal::Pos(a) => Literal::Neg(a.clone()),
            Literal::Neg(a) => Literal::Pos(a.clone()),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

/// The next operator of a clause. `Strong` sorts after `Weak`, so `max`
/// implements domination of `X` over `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NextOp {
    Weak,
    Strong,
}

impl NextOp {
    pub fn apply(self, f: Formula) -> Formula {
        match self {
            NextOp::Strong => Formula::next(f),
            NextOp::Weak => Formula::weak_next(f),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            NextOp::Strong => "X",
            NextOp::Weak => "W",
        }
    }
}

/// `(⋀ lits) ∧ N(⋀ nf)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnfClause {
    pub lits: BTreeSet<Literal>,
    pub next: NextOp,
    pub nf: BTreeSet<Formula>,
}

impl AnfClause {
    pub fn guard(&self) -> Formula {
        let lits: Vec<Formula> = self.lits.iter().map(Literal::to_formula).collect();
        Formula::conjunction(&lits)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::and(self.guard(), self.next.apply(Formula::conjunction(&self.nf)))
    }
}

impl fmt::Display for AnfClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {}",
            join(self.lits.iter(), " & ", "true"),
            self.next.symbol(),
            join(self.nf.iter().map(Paren), " & ", "true")
        )
    }
}

/// `⋁ clauses`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AnfFormula {
    pub clauses: BTreeSet<AnfClause>,
}

impl AnfFormula {
    pub fn to_formula(&self) -> Formula {
        let cs: Vec<Formula> = self.clauses.iter().map(AnfClause::to_formula).collect();
        Formula::disjunction(&cs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PseudoLiteral {
    Lit(Literal),
    Next(NextOp, Formula),
}

/// Conjunction of pseudo-literals.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PseudoClause(pub BTreeSet<PseudoLiteral>);

impl PseudoClause {
    pub fn to_formula(&self) -> Formula {
        let parts: Vec<Formula> = self
            .0
            .iter()
            .map(|p| match p {
                PseudoLiteral::Lit(l) => l.to_formula(),
                PseudoLiteral::Next(op, f) => op.apply(f.clone()),
            })
            .collect();
        Formula::conjunction(&parts)
    }

    fn is_contradictory(&self) -> bool {
        self.0.iter().any(|p| match p {
            PseudoLiteral::Lit(Literal::False) => true,
            PseudoLiteral::Lit(l) => self.0.contains(&PseudoLiteral::Lit(l.complement())),
            PseudoLiteral::Next(NextOp::Strong, Formula::False) => true,
            PseudoLiteral::Next(..) => false,
        })
    }
}

/// `guard ∧ N(⋀ nf)` with an arbitrary propositional guard.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelaxedClause {
    pub guard: Formula,
    pub next: NextOp,
    pub nf: BTreeSet<Formula>,
}

impl RelaxedClause {
    pub fn to_formula(&self) -> Formula {
        Formula::and(self.guard.clone(), self.next.apply(Formula::conjunction(&self.nf)))
    }
}

impl fmt::Display for RelaxedClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {}",
            self.guard,
            self.next.symbol(),
            join(self.nf.iter().map(Paren), " & ", "true")
        )
    }
}

/// Prints a formula bracketed unless it is atomic or unary.
struct Paren<'a>(&'a Formula);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Formula::And(..) | Formula::Or(..) => write!(f, "({})", self.0),
            g => write!(f, "{g}"),
        }
    }
}

fn join<T: fmt::Display>(items: impl Iterator<Item = T>, sep: &str, empty: &str) -> String {
    let parts: Vec<String> = items.map(|i| i.to_string()).collect();
    if parts.is_empty() {
        empty.to_owned()
    } else {
        parts.join(sep)
    }
}

fn require_pnf(f: &Formula) -> Result<()> {
    if f.is_pnf() {
        Ok(())
    } else {
        Err(Error::NotPnf(f.to_string()))
    }
}

/// Guardedness transformation: unroll `U`/`R` occurrences that are not
/// already under `X`/`W`.
pub fn gt(formula: &Formula) -> Result<Formula> {
    require_pnf(formula)?;
    Ok(Guarder::default().gt(formula))
}

#[derive(Default)]
struct Guarder {
    memo: HashMap<Formula, Formula>,
}

impl Guarder {
    fn gt(&mut self, f: &Formula) -> Formula {
        use Formula::*;
        if let Some(done) = self.memo.get(f) {
            return done.clone();
        }
        let out = match f {
            True | False | Atom(_) | Next(_) | WeakNext(_) => f.clone(),
            Not(g) => Formula::not(self.gt(g)),
            And(l, r) => Formula::and(self.gt(l), self.gt(r)),
            Or(l, r) => Formula::or(self.gt(l), self.gt(r)),
            Until(l, r) => Formula::or(
                self.gt(r),
                Formula::and(self.gt(l), Formula::next(f.clone())),
            ),
            Release(l, r) => Formula::and(
                self.gt(r),
                Formula::or(self.gt(l), Formula::weak_next(f.clone())),
            ),
        };
        self.memo.insert(f.clone(), out.clone());
        out
    }
}

/// Every `U`/`R` occurrence lies inside the operand of some `X`/`W`.
pub fn is_guarded(formula: &Formula) -> bool {
    match formula {
        Formula::Until(..) | Formula::Release(..) => false,
        Formula::Next(_) | Formula::WeakNext(_) => true,
        _ => formula.children().all(is_guarded),
    }
}

/// Disjunctive normal form over pseudo-literals of a guarded PNF formula.
pub fn pa(formula: &Formula) -> Result<BTreeSet<PseudoClause>> {
    require_pnf(formula)?;
    pa_rec(formula)
}

fn pa_rec(f: &Formula) -> Result<BTreeSet<PseudoClause>> {
    use Formula::*;
    let single = |p: PseudoLiteral| BTreeSet::from([PseudoClause(BTreeSet::from([p]))]);
    Ok(match f {
        True => BTreeSet::from([PseudoClause::default()]),
        False => BTreeSet::new(),
        Atom(_) | Not(_) => single(PseudoLiteral::Lit(
            Literal::from_formula(f).expect("PNF negation applies to an atom"),
        )),
        Next(g) => single(PseudoLiteral::Next(NextOp::Strong, (**g).clone())),
        WeakNext(g) => single(PseudoLiteral::Next(NextOp::Weak, (**g).clone())),
        Or(l, r) => {
            let mut out = pa_rec(l)?;
            out.extend(pa_rec(r)?);
            out
        }
        And(l, r) => {
            let (ls, rs) = (pa_rec(l)?, pa_rec(r)?);
            let mut out = BTreeSet::new();
            for lc in &ls {
                for rc in &rs {
                    let merged = PseudoClause(lc.0.union(&rc.0).cloned().collect());
                    if !merged.is_contradictory() {
                        out.insert(merged);
                    }
                }
            }
            out
        }
        Until(..) | Release(..) => return Err(Error::Unguarded(f.to_string())),
    })
}

/// Merge the next-operators of a pseudo-clause: `X` if any was `X`.
pub fn ct(clause: &PseudoClause) -> AnfClause {
    let mut lits = BTreeSet::new();
    let mut next = NextOp::Weak;
    let mut nf = BTreeSet::new();
    for p in &clause.0 {
        match p {
            PseudoLiteral::Lit(l) => {
                lits.insert(l.clone());
            }
            PseudoLiteral::Next(op, f) => {
                next = next.max(*op);
                nf.insert(f.clone());
            }
        }
    }
    AnfClause { lits, next, nf }
}

/// `ct` over every pseudo-clause, dropping unsatisfiable clauses.
pub fn an(clauses: &BTreeSet<PseudoClause>) -> AnfFormula {
    let clauses = clauses
        .iter()
        .map(ct)
        .filter_map(|mut c| {
            c.lits.remove(&Literal::True);
            c.nf.remove(&Formula::True);
            let contradictory = c.lits.contains(&Literal::False)
                || c.lits.iter().any(|l| c.lits.contains(&l.complement()))
                || (c.next == NextOp::Strong && c.nf.contains(&Formula::False));
            (!contradictory).then_some(c)
        })
        .collect();
    AnfFormula { clauses }
}

pub fn anf(formula: &Formula) -> Result<AnfFormula> {
    Ok(an(&pa(&gt(formula)?)?))
}

type Group = (NextOp, BTreeSet<Formula>);

/// ANF with arbitrary propositional guards: clauses sharing a next operator
/// and next-formula set are merged by disjoining their guards, and the
/// propositional parts are never expanded into DNF.
pub fn anf_relaxed(formula: &Formula) -> Result<Vec<RelaxedClause>> {
    let guarded = gt(formula)?;
    let groups = relax(&guarded)?;
    Ok(groups
        .into_iter()
        .filter_map(|((next, nf), guard)| {
            let guard = boolean::simplify_rules(&guard);
            (guard != Formula::False && !boolean::is_unsatisfiable(&guard))
                .then_some(RelaxedClause { guard, next, nf })
        })
        .collect())
}

fn relax(f: &Formula) -> Result<BTreeMap<Group, Formula>> {
    use Formula::*;
    if f.is_propositional() {
        return Ok(BTreeMap::from([((NextOp::Weak, BTreeSet::new()), f.clone())]));
    }
    let leaf = |op: NextOp, g: &Formula| -> BTreeMap<Group, Formula> {
        match (op, g) {
            (NextOp::Strong, False) => BTreeMap::new(),
            (_, True) => BTreeMap::from([((op, BTreeSet::new()), True)]),
            _ => BTreeMap::from([((op, BTreeSet::from([g.clone()])), True)]),
        }
    };
    match f {
        Next(g) => Ok(leaf(NextOp::Strong, g)),
        WeakNext(g) => Ok(leaf(NextOp::Weak, g)),
        Or(l, r) => {
            let mut out = relax(l)?;
            for (k, g) in relax(r)? {
                insert_or(&mut out, k, g);
            }
            Ok(out)
        }
        And(l, r) => {
            let (ls, rs) = (relax(l)?, relax(r)?);
            let mut out = BTreeMap::new();
            for ((lop, lnf), lg) in &ls {
                for ((rop, rnf), rg) in &rs {
                    let guard = and_guard(lg, rg);
                    if guard == False {
                        continue;
                    }
                    let key = ((*lop).max(*rop), lnf.union(rnf).cloned().collect());
                    insert_or(&mut out, key, guard);
                }
            }
            Ok(out)
        }
        Until(..) | Release(..) => Err(Error::Unguarded(f.to_string())),
        _ => Err(Error::NotPnf(f.to_string())),
    }
}

fn insert_or(map: &mut BTreeMap<Group, Formula>, key: Group, guard: Formula) {
    match map.remove(&key) {
        Some(prev) => {
            let g = match (&prev, &guard) {
                (Formula::True, _) | (_, Formula::True) => Formula::True,
                (Formula::False, _) => guard,
                (_, Formula::False) => prev,
                _ => Formula::or(prev, guard),
            };
            map.insert(key, g);
        }
        None => {
            map.insert(key, guard);
        }
    }
}

fn and_guard(l: &Formula, r: &Formula) -> Formula {
    match (l, r) {
        (Formula::False, _) | (_, Formula::False) => Formula::False,
        (Formula::True, g) | (g, Formula::True) => g.clone(),
        _ => Formula::and(l.clone(), r.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }
    fn lits(names: &[&str]) -> BTreeSet<Literal> {
        names
            .iter()
            .map(|n| Literal::from_formula(&f(n)).unwrap())
            .collect()
    }
    fn fs(items: &[&str]) -> BTreeSet<Formula> {
        items.iter().map(|s| f(s)).collect()
    }
    fn pc(items: &[PseudoLiteral]) -> PseudoClause {
        PseudoClause(items.iter().cloned().collect())
    }
    fn lit(s: &str) -> PseudoLiteral {
        PseudoLiteral::Lit(Literal::from_formula(&f(s)).unwrap())
    }
    fn nx(op: NextOp, s: &str) -> PseudoLiteral {
        PseudoLiteral::Next(op, f(s))
    }

    #[test]
    fn gt_examples() {
        assert_eq!(
            gt(&f("a U (b R c)")).unwrap(),
            f("c & (b | W (b R c)) | a & X (a U (b R c))")
        );
        assert_eq!(gt(&f("X a")).unwrap(), f("X a"));
        assert_eq!(gt(&f("a & b")).unwrap(), f("a & b"));
        assert!(matches!(gt(&f("!(a & b)")), Err(Error::NotPnf(_))));
    }

    #[test]
    fn guardedness() {
        assert!(!is_guarded(&f("(a U b) & X (a U b)")));
        assert!(is_guarded(&f("(b | a & X (a U b)) & X (a U b)")));
        assert!(is_guarded(&f("a")));
    }

    #[test]
    fn pa_examples() {
        let phi0 = "a U (b R c)";
        let got = pa(&f("c & (b | W (b R c)) | a & X (a U (b R c))")).unwrap();
        let want = BTreeSet::from([
            pc(&[lit("c"), lit("b")]),
            pc(&[lit("c"), nx(NextOp::Weak, "b R c")]),
            pc(&[lit("a"), nx(NextOp::Strong, phi0)]),
        ]);
        assert_eq!(got, want);
        assert_eq!(
            pa(&f("a | b")).unwrap(),
            BTreeSet::from([pc(&[lit("a")]), pc(&[lit("b")])])
        );
        assert_eq!(
            pa(&f("(a | b) & X c")).unwrap(),
            BTreeSet::from([
                pc(&[lit("a"), nx(NextOp::Strong, "c")]),
                pc(&[lit("b"), nx(NextOp::Strong, "c")]),
            ])
        );
        assert!(matches!(pa(&f("a U b")), Err(Error::Unguarded(_))));
    }

    #[test]
    fn ct_examples() {
        let c = ct(&pc(&[lit("c"), lit("b")]));
        assert_eq!(c, AnfClause { lits: lits(&["b", "c"]), next: NextOp::Weak, nf: BTreeSet::new() });
        let c = ct(&pc(&[lit("a"), nx(NextOp::Strong, "a U b"), nx(NextOp::Weak, "c")]));
        assert_eq!(
            c,
            AnfClause { lits: lits(&["a"]), next: NextOp::Strong, nf: fs(&["a U b", "c"]) }
        );
        let c = ct(&pc(&[nx(NextOp::Weak, "a"), nx(NextOp::Weak, "b")]));
        assert_eq!(c, AnfClause { lits: BTreeSet::new(), next: NextOp::Weak, nf: fs(&["a", "b"]) });
    }

    #[test]
    fn anf_golden() {
        let got = anf(&f("a U (b R c)")).unwrap();
        let want = BTreeSet::from([
            AnfClause { lits: lits(&["c", "b"]), next: NextOp::Weak, nf: BTreeSet::new() },
            AnfClause { lits: lits(&["c"]), next: NextOp::Weak, nf: fs(&["b R c"]) },
            AnfClause { lits: lits(&["a"]), next: NextOp::Strong, nf: fs(&["a U (b R c)"]) },
        ]);
        assert_eq!(got.clauses, want);
    }

    #[test]
    fn anf_constants() {
        assert!(anf(&Formula::False).unwrap().clauses.is_empty());
        assert_eq!(
            anf(&Formula::True).unwrap().clauses,
            BTreeSet::from([AnfClause { lits: BTreeSet::new(), next: NextOp::Weak, nf: BTreeSet::new() }])
        );
        assert!(anf(&f("a & !a")).unwrap().clauses.is_empty());
        assert!(anf(&f("X false")).unwrap().clauses.is_empty());
    }

    #[test]
    fn relaxed_examples() {
        assert_eq!(
            anf_relaxed(&f("(a | b) & X c")).unwrap(),
            vec![RelaxedClause { guard: f("a | b"), next: NextOp::Strong, nf: fs(&["c"]) }]
        );
        assert_eq!(
            anf_relaxed(&f("a U b")).unwrap(),
            vec![
                RelaxedClause { guard: f("b"), next: NextOp::Weak, nf: BTreeSet::new() },
                RelaxedClause { guard: f("a"), next: NextOp::Strong, nf: fs(&["a U b"]) },
            ]
        );
        assert_eq!(
            anf_relaxed(&Formula::True).unwrap(),
            vec![RelaxedClause { guard: Formula::True, next: NextOp::Weak, nf: BTreeSet::new() }]
        );
        assert!(anf_relaxed(&f("a & !a & X b")).unwrap().is_empty());
    }

    #[test]
    fn clause_display() {
        let got: Vec<String> = anf(&f("a U (b R c)"))
            .unwrap()
            .clauses
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(got, ["a | X | a U (b R c)", "b & c | W | true", "c | W | b R c"]);
    }
}
