//! FC formulas: first-order logic whose models are the factors of a word,
//! with one ternary relation `x = y . z` read as concatenation.
//!
//! The universe of the structure for a word `w` is `facts(w)`, the set of
//! factors of `w`. Quantifiers range over factors only. A letter constant
//! denotes its one-letter factor when the letter occurs in `w` and is
//! otherwise undefined, making every atom that touches it false; `eps`
//! always denotes the empty factor.

mod compile;
mod eval;
mod parse;

pub use compile::compile_sfr_to_fc;
pub use eval::{eval_fc, fc_language, FcInterpretation};
pub use parse::{parse_fc, FcParseError};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FcError {
    #[error("formula is not a sentence; free variables: {}", .0.join(", "))]
    FreeVariables(Vec<String>),
    #[error("assignment value for `{var}` is not a factor of the word")]
    NotAFactor { var: String },
}

/// A term of an atom: a variable, a letter constant or the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcTerm {
    Var(String),
    Letter(char),
    Epsilon,
}

/// An FC formula. `Atom(x, y, z)` is `x = y . z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcFormula {
    Atom(FcTerm, FcTerm, FcTerm),
    And(Box<FcFormula>, Box<FcFormula>),
    Or(Box<FcFormula>, Box<FcFormula>),
    Not(Box<FcFormula>),
    Exists(String, Box<FcFormula>),
    Forall(String, Box<FcFormula>),
}

impl FcFormula {
    pub fn and(a: FcFormula, b: FcFormula) -> FcFormula {
        FcFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: FcFormula, b: FcFormula) -> FcFormula {
        FcFormula::Or(Box::new(a), Box::new(b))
    }

    // constructor named after the connective, not the operator trait
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: FcFormula) -> FcFormula {
        FcFormula::Not(Box::new(a))
    }

    pub fn exists(var: impl Into<String>, body: FcFormula) -> FcFormula {
        FcFormula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: FcFormula) -> FcFormula {
        FcFormula::Forall(var.into(), Box::new(body))
    }

    /// Maximum quantifier nesting depth: atoms have rank 0, negation keeps
    /// the rank, binary connectives take the maximum, quantifiers add one.
    pub fn quantifier_rank(&self) -> usize {
        match self {
            FcFormula::Atom(..) => 0,
            FcFormula::Not(a) => a.quantifier_rank(),
            FcFormula::And(a, b) | FcFormula::Or(a, b) => {
                a.quantifier_rank().max(b.quantifier_rank())
            }
            FcFormula::Exists(_, a) | FcFormula::Forall(_, a) => a.quantifier_rank() + 1,
        }
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        match self {
            FcFormula::Atom(x, y, z) => [x, y, z]
                .into_iter()
                .filter_map(|t| match t {
                    FcTerm::Var(v) => Some(v.clone()),
                    _ => None,
                })
                .collect(),
            FcFormula::Not(a) => a.free_variables(),
            FcFormula::And(a, b) | FcFormula::Or(a, b) => {
                let mut s = a.free_variables();
                s.extend(b.free_variables());
                s
            }
            FcFormula::Exists(v, a) | FcFormula::Forall(v, a) => {
                let mut s = a.free_variables();
                s.remove(v);
                s
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }
}

impl fmt::Display for FcTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FcTerm::Var(v) => write!(f, "{v}"),
            FcTerm::Letter(c) => write!(f, "'{c}'"),
            FcTerm::Epsilon => write!(f, "eps"),
        }
    }
}

// Precedence levels matching the grammar: quantified formula 0, disjunction
// 1, conjunction 2, unit 3. A subformula whose level is below the context's
// minimum gets parenthesized, so printing round-trips through the parser.
fn level(f: &FcFormula) -> usize {
    match f {
        FcFormula::Exists(..) | FcFormula::Forall(..) => 0,
        FcFormula::Or(..) => 1,
        FcFormula::And(..) => 2,
        FcFormula::Not(..) | FcFormula::Atom(..) => 3,
    }
}

fn write_prec(f: &FcFormula, min: usize, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < min {
        write!(out, "(")?;
        write_prec(f, 0, out)?;
        return write!(out, ")");
    }
    match f {
        FcFormula::Atom(x, y, z) => {
            if *z == FcTerm::Epsilon {
                write!(out, "{x} = {y}")
            } else {
                write!(out, "{x} = {y} . {z}")
            }
        }
        FcFormula::Not(a) => {
            write!(out, "!")?;
            write_prec(a, 3, out)
        }
        FcFormula::And(a, b) => {
            write_prec(a, 2, out)?;
            write!(out, " & ")?;
            write_prec(b, 3, out)
        }
        FcFormula::Or(a, b) => {
            write_prec(a, 1, out)?;
            write!(out, " | ")?;
            write_prec(b, 2, out)
        }
        FcFormula::Exists(v, a) => {
            write!(out, "E {v}: ")?;
            write_prec(a, 0, out)
        }
        FcFormula::Forall(v, a) => {
            write!(out, "A {v}: ")?;
            write_prec(a, 0, out)
        }
    }
}

impl fmt::Display for FcFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, 0, f)
    }
}
