//! Compiler from Finite LTL to nondeterministic finite automata.
//!
//! Formulas are interpreted over finite, possibly empty, sequences of
//! proposition sets. [`tableau::build`] turns a formula into an NFA whose
//! language is exactly the formula's set of models; [`analysis`] runs traces
//! through the automaton, extracts satisfiability witnesses and benchmarks the
//! construction, and [`semantics`] holds the reference evaluators everything
//! else is tested against.

pub mod analysis;
pub mod bench;
pub mod boolean;
pub mod error;
pub mod export;
pub mod gen;
pub mod normalform;
pub mod parse;
pub mod semantics;
pub mod syntax;
pub mod tableau;
pub mod trace;

pub use error::{Error, Result};
pub use parse::parse;
pub use syntax::{AlphabetSymbol, Formula, PropName};
pub use tableau::{build, Nfa};
pub use trace::Trace;
