//! Decide whether a regular language is FC-definable.
//!
//! FC is first-order logic over the factors of a word, with a single ternary
//! concatenation relation `x = y . z`. The regular languages definable in FC
//! coincide with three independently checkable conditions on the language:
//!
//! * the minimal DFA has no *loop-step cycle* (n >= 2 distinct states fixed by
//!   a word `w` and cyclically shifted by a word `v` whose primitive root
//!   differs from `w`'s), see [`loopstep`];
//! * the syntactic morphism is *group primitive* (every periodic monoid
//!   element has a preimage contained in a single `r*`), see [`monoid`];
//! * the language lies in the star-free closure of `{ w* | w in Sigma* }`,
//!   the expression class implemented by [`sfr`].
//!
//! This crate implements all three criteria exactly, with machine-checkable
//! witnesses for the negative case, plus a compiler from [`sfr`] expressions
//! to FC sentences ([`fc`]) and brute-force oracles for cross-checking
//! ([`oracle`]). The [`decide`] module bundles the criteria into one report.

pub mod automata;
pub mod decide;
pub mod fc;
pub mod loopstep;
pub mod monoid;
pub mod oracle;
pub mod sfr;
#[cfg(test)]
pub(crate) mod testutil;
pub mod words;

pub use automata::{Alphabet, Dfa, Nfa, StateId};
pub use decide::{DecideOptions, DecisionReport};
pub use fc::FcFormula;
pub use loopstep::LoopStepWitness;
pub use monoid::{NonPrimitivityWitness, TransitionMonoid};
pub use sfr::SfrExpr;
pub use words::RootDecomposition;
