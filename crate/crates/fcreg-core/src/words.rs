//! Primitive words, primitive roots and the combinatorial facts the rest of
//! the crate leans on.
//!
//! A nonempty word is *primitive* when it is not a proper power of a shorter
//! word; every nonempty word is a power of a unique primitive root. Two
//! independent primitivity tests ship in this crate: the border-array route
//! here, and the internal-factor scan (`w` is primitive iff it is not an
//! internal factor of `ww`), which the test-suite plays against this module.

use std::collections::BTreeSet;
use thiserror::Error;

use crate::automata::{Alphabet, AutomataError, Dfa};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("the empty word has no primitive root")]
    EmptyWord,
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

/// A word written as `root` repeated `exponent` times, with `root` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: String,
    pub exponent: usize,
}

/// Decomposes a nonempty word into its primitive root and exponent.
///
/// Uses the smallest period: with `b` the longest proper border of `w`, the
/// period `|w| - |b|` divides `|w|` exactly when `w` is a repetition of its
/// prefix of that length.
pub fn primitive_root(w: &str) -> Result<RootDecomposition, WordError> {
    let chars: Vec<char> = w.chars().collect();
    let n = chars.len();
    if n == 0 {
        return Err(WordError::EmptyWord);
    }
    // Border array (failure function): border[i] = length of the longest
    // proper border of the prefix of length i.
    let mut border = vec![0usize; n + 1];
    let mut k = 0usize;
    for i in 1..n {
        while k > 0 && chars[i] != chars[k] {
            k = border[k];
        }
        if chars[i] == chars[k] {
            k += 1;
        }
        border[i + 1] = k;
    }
    let period = n - border[n];
    if n.is_multiple_of(period) {
        Ok(RootDecomposition { root: chars[..period].iter().collect(), exponent: n / period })
    } else {
        Ok(RootDecomposition { root: w.to_string(), exponent: 1 })
    }
}

/// True iff the nonempty word is not a proper power.
pub fn is_primitive(w: &str) -> Result<bool, WordError> {
    Ok(primitive_root(w)?.exponent == 1)
}

/// True iff `w = x u y` with both `x` and `y` nonempty.
pub fn is_internal_factor(u: &str, w: &str) -> bool {
    let u: Vec<char> = u.chars().collect();
    let w: Vec<char> = w.chars().collect();
    if u.len() + 2 > w.len() {
        return false;
    }
    (1..w.len() - u.len()).any(|i| w[i..i + u.len()] == u[..])
}

/// Minimal complete DFA for `{ w^n | n >= 0 }`; for `w` empty this is `{eps}`.
pub fn wstar_dfa(w: &str, alphabet: &Alphabet) -> Result<Dfa, WordError> {
    alphabet.check_word(w)?;
    let chars: Vec<char> = w.chars().collect();
    let k = alphabet.len();
    let n = chars.len();
    // Position automaton: states 0..n track progress through w, state n is
    // the sink; reading w[i] at position i advances cyclically.
    let sink = n.max(1);
    let mut delta = vec![vec![sink; k]; sink + 1];
    for (i, &c) in chars.iter().enumerate() {
        let li = alphabet.index_of(c)?;
        delta[i][li] = (i + 1) % n;
    }
    let d = Dfa::new(alphabet.clone(), delta, 0, BTreeSet::from([0]))?;
    Ok(d.minimize())
}

/// How many distinct primitive roots a regular language exhibits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootsClassification {
    /// The language contains no nonempty word.
    EmptyOrEpsilonOnly,
    /// Every nonempty word in the language is a power of this root.
    Single(String),
    /// Two accepted words with different primitive roots.
    AtLeastTwo(String, String),
}

/// Classifies the set of primitive roots of `L`'s nonempty words.
///
/// If the shortest nonempty accepted word `u` exists, its root `r` is the only
/// candidate: any further word either lies in `r*` or yields a second root
/// (a word outside `r*` cannot be a power of `r`). Witnesses are the
/// length-lexicographically least choices, so the classification is
/// deterministic.
pub fn roots_of_language(l: &Dfa) -> RootsClassification {
    let Some(u) = l.shortest_accepted(true) else {
        return RootsClassification::EmptyOrEpsilonOnly;
    };
    let root = primitive_root(&u).expect("shortest nonempty word").root;
    let rstar = wstar_dfa(&root, l.alphabet()).expect("root uses the language's alphabet");
    if l.included(&rstar).expect("same alphabet") {
        return RootsClassification::Single(root);
    }
    let outside = l
        .product(&rstar.complement(), crate::automata::ProductMode::Intersect)
        .expect("same alphabet")
        .shortest_accepted(true)
        .expect("non-inclusion yields a witness");
    RootsClassification::AtLeastTwo(u, outside)
}

/// True iff `uv = vu`; equivalently the words are powers of a common root.
pub fn commutes(u: &str, v: &str) -> bool {
    let mut uv = String::with_capacity(u.len() + v.len());
    uv.push_str(u);
    uv.push_str(v);
    let mut vu = String::with_capacity(u.len() + v.len());
    vu.push_str(v);
    vu.push_str(u);
    uv == vu
}
