//! Finite-automata kernel: complete DFAs, NFAs, determinization, canonical
//! minimization and the usual Boolean/query operations.
//!
//! Every [`Dfa`] is complete by construction (the transition table is total),
//! and [`Dfa::minimize`] renumbers states canonically (BFS from the initial
//! state, letters in sorted order), so two minimized DFAs are structurally
//! equal exactly when they accept the same language.

mod format;
mod nfa;

pub use format::{dfa_to_text, parse_dfa, DfaFormatError};
pub use nfa::Nfa;

use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// States are plain indices `0..n`.
pub type StateId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomataError {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(char),
    #[error("letter `{0}` is not in the alphabet")]
    ForeignLetter(char),
    #[error("state {state} out of range (automaton has {count} states)")]
    InvalidState { state: StateId, count: usize },
    #[error("operands have different alphabets")]
    AlphabetMismatch,
    #[error("transition table shape does not match state count and alphabet")]
    MalformedDelta,
    #[error("initial or accepting state out of range")]
    BadStateSet,
}

/// An ordered set of distinct single-character letters.
///
/// The order is canonical (sorted), so letter indices are stable across all
/// automata over the same alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self, AutomataError> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        for pair in letters.windows(2) {
            if pair[0] == pair[1] {
                return Err(AutomataError::DuplicateLetter(pair[0]));
            }
        }
        if letters.is_empty() {
            return Err(AutomataError::EmptyAlphabet);
        }
        Ok(Alphabet { letters })
    }

    /// The two-letter alphabet `{a, b}` used throughout the test corpus.
    pub fn ab() -> Self {
        Alphabet::new("ab".chars()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one letter by construction
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, letter: char) -> Result<usize, AutomataError> {
        self.letters.binary_search(&letter).map_err(|_| AutomataError::ForeignLetter(letter))
    }

    pub fn contains(&self, letter: char) -> bool {
        self.letters.binary_search(&letter).is_ok()
    }

    /// Checks that every letter of `word` belongs to the alphabet.
    pub fn check_word(&self, word: &str) -> Result<(), AutomataError> {
        for c in word.chars() {
            self.index_of(c)?;
        }
        Ok(())
    }
}

/// How the accepting set of a [`Dfa::product`] is derived from the operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Intersect,
    Union,
    Difference,
}

/// A complete deterministic finite automaton.
///
/// `delta[q][i]` is the successor of state `q` on the `i`-th alphabet letter;
/// the table is total, so every `Dfa` is a complete DFA. Minimized DFAs are
/// canonical: structural equality coincides with language equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<StateId>>,
    initial: StateId,
    accepting: BTreeSet<StateId>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: BTreeSet<StateId>,
    ) -> Result<Self, AutomataError> {
        let n = delta.len();
        if n == 0 {
            return Err(AutomataError::MalformedDelta);
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(AutomataError::MalformedDelta);
            }
            for &t in row {
                if t >= n {
                    return Err(AutomataError::InvalidState { state: t, count: n });
                }
            }
        }
        if initial >= n {
            return Err(AutomataError::BadStateSet);
        }
        if accepting.iter().any(|&q| q >= n) {
            return Err(AutomataError::BadStateSet);
        }
        Ok(Dfa { alphabet, delta, initial, accepting })
    }

    /// The one-state DFA accepting nothing.
    pub fn empty_language(alphabet: Alphabet) -> Dfa {
        let k = alphabet.len();
        Dfa::new(alphabet, vec![vec![0; k]], 0, BTreeSet::new()).unwrap()
    }

    /// The one-state DFA accepting every word.
    pub fn full_language(alphabet: Alphabet) -> Dfa {
        let k = alphabet.len();
        Dfa::new(alphabet, vec![vec![0; k]], 0, BTreeSet::from([0])).unwrap()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    pub fn step(&self, q: StateId, letter_idx: usize) -> StateId {
        self.delta[q][letter_idx]
    }

    /// Runs the automaton from `from`, returning the state reached.
    pub fn run(&self, from: StateId, word: &str) -> Result<StateId, AutomataError> {
        if from >= self.state_count() {
            return Err(AutomataError::InvalidState { state: from, count: self.state_count() });
        }
        let mut q = from;
        for c in word.chars() {
            q = self.delta[q][self.alphabet.index_of(c)?];
        }
        Ok(q)
    }

    /// True iff `word` is in the language. Errors on letters outside the alphabet.
    pub fn accepts(&self, word: &str) -> Result<bool, AutomataError> {
        Ok(self.is_accepting(self.run(self.initial, word)?))
    }

    /// The state map `q -> delta*(q, word)` induced by `word`.
    pub fn word_action(&self, word: &str) -> Result<Vec<StateId>, AutomataError> {
        self.alphabet.check_word(word)?;
        let mut action: Vec<StateId> = (0..self.state_count()).collect();
        for c in word.chars() {
            let i = self.alphabet.index_of(c).unwrap();
            for q in action.iter_mut() {
                *q = self.delta[*q][i];
            }
        }
        Ok(action)
    }

    /// Flips the accepting set; the language becomes its complement.
    pub fn complement(&self) -> Dfa {
        let accepting = (0..self.state_count()).filter(|q| !self.accepting.contains(q)).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
            initial: self.initial,
            accepting,
        }
    }

    /// Pair construction over the reachable part of the state product.
    pub fn product(&self, other: &Dfa, mode: ProductMode) -> Result<Dfa, AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut order: Vec<(StateId, StateId)> = Vec::new();
        let mut queue = VecDeque::new();
        let start = (self.initial, other.initial);
        ids.insert(start, 0);
        order.push(start);
        queue.push_back(start);
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        while let Some((p, q)) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for i in 0..k {
                let succ = (self.delta[p][i], other.delta[q][i]);
                let id = *ids.entry(succ).or_insert_with(|| {
                    order.push(succ);
                    queue.push_back(succ);
                    order.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
        }
        let accepting = order
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| {
                let a = self.is_accepting(p);
                let b = other.is_accepting(q);
                match mode {
                    ProductMode::Intersect => a && b,
                    ProductMode::Union => a || b,
                    ProductMode::Difference => a && !b,
                }
            })
            .map(|(id, _)| id)
            .collect();
        Dfa::new(self.alphabet.clone(), delta, 0, accepting)
    }

    /// True iff no accepting state is reachable from the initial state.
    pub fn is_empty(&self) -> bool {
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            if self.is_accepting(q) {
                return false;
            }
            for &t in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        true
    }

    /// The length-lexicographically least accepted word, if any.
    ///
    /// With `nonempty_word_only`, the empty word is skipped even when the
    /// initial state accepts.
    pub fn shortest_accepted(&self, nonempty_word_only: bool) -> Option<String> {
        let mut seen = vec![false; self.state_count()];
        let mut queue: VecDeque<(StateId, String)> = VecDeque::new();
        if nonempty_word_only {
            // Seed with the one-letter successors so the initial state can be
            // rediscovered via a nonempty word.
            for (i, &c) in self.alphabet.letters().iter().enumerate() {
                let t = self.delta[self.initial][i];
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back((t, c.to_string()));
                }
            }
        } else {
            seen[self.initial] = true;
            queue.push_back((self.initial, String::new()));
        }
        while let Some((q, word)) = queue.pop_front() {
            if self.is_accepting(q) {
                return Some(word);
            }
            for (i, &c) in self.alphabet.letters().iter().enumerate() {
                let t = self.delta[q][i];
                if !seen[t] {
                    seen[t] = true;
                    let mut w = word.clone();
                    w.push(c);
                    queue.push_back((t, w));
                }
            }
        }
        None
    }

    /// All accepted words of length at most `max_len`, in length-then-lexicographic order.
    pub fn enumerate_language(&self, max_len: usize) -> Vec<String> {
        let mut out = Vec::new();
        for len in 0..=max_len {
            self.enumerate_rec(len, self.initial, &mut String::new(), &mut out);
        }
        out
    }

    fn enumerate_rec(
        &self,
        remaining: usize,
        q: StateId,
        prefix: &mut String,
        out: &mut Vec<String>,
    ) {
        if remaining == 0 {
            if self.is_accepting(q) {
                out.push(prefix.clone());
            }
            return;
        }
        for (i, &c) in self.alphabet.letters().iter().enumerate() {
            prefix.push(c);
            self.enumerate_rec(remaining - 1, self.delta[q][i], prefix, out);
            prefix.pop();
        }
    }

    /// The language `{ u | delta*(p, u) = q }`: same automaton with initial
    /// state `p` and accepting set `{q}`.
    pub fn between_states(&self, p: StateId, q: StateId) -> Result<Dfa, AutomataError> {
        let n = self.state_count();
        for s in [p, q] {
            if s >= n {
                return Err(AutomataError::InvalidState { state: s, count: n });
            }
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
            initial: p,
            accepting: BTreeSet::from([q]),
        })
    }

    /// Language inclusion via emptiness of the difference product.
    pub fn included(&self, other: &Dfa) -> Result<bool, AutomataError> {
        Ok(self.product(other, ProductMode::Difference)?.is_empty())
    }

    /// Language equality via emptiness of the symmetric difference.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomataError> {
        Ok(self.included(other)? && other.included(self)?)
    }

    /// The unique minimal complete DFA for the language, canonically numbered.
    ///
    /// Unreachable states are dropped, Myhill-Nerode-equivalent states merged,
    /// and the result renumbered by BFS from the initial state with letters in
    /// sorted order. Equal languages therefore yield structurally equal values.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        // Reachable restriction.
        let mut reach_id = vec![usize::MAX; self.state_count()];
        let mut reach: Vec<StateId> = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        reach_id[self.initial] = 0;
        reach.push(self.initial);
        while let Some(q) = queue.pop_front() {
            for &t in &self.delta[q] {
                if reach_id[t] == usize::MAX {
                    reach_id[t] = reach.len();
                    reach.push(t);
                    queue.push_back(t);
                }
            }
        }
        let n = reach.len();
        let delta: Vec<Vec<usize>> =
            reach.iter().map(|&q| self.delta[q].iter().map(|&t| reach_id[t]).collect()).collect();
        let accepting: Vec<bool> = reach.iter().map(|&q| self.is_accepting(q)).collect();
        let initial = 0usize;

        // Moore partition refinement. Class ids are always assigned by first
        // occurrence in state order, so equal partitions have equal vectors
        // and the fixpoint test is plain equality.
        let renumber = |keys: Vec<Vec<usize>>| -> Vec<usize> {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            keys.into_iter()
                .map(|key| {
                    let fresh = ids.len();
                    *ids.entry(key).or_insert(fresh)
                })
                .collect()
        };
        let mut class = renumber(accepting.iter().map(|&a| vec![usize::from(a)]).collect());
        loop {
            let sigs: Vec<Vec<usize>> = (0..n)
                .map(|s| {
                    let mut sig = Vec::with_capacity(k + 1);
                    sig.push(class[s]);
                    for i in 0..k {
                        sig.push(class[delta[s][i]]);
                    }
                    sig
                })
                .collect();
            let next = renumber(sigs);
            if next == class {
                break;
            }
            class = next;
        }
        let class_count = class.iter().copied().max().unwrap_or(0) + 1;

        // Canonical BFS renumbering over the quotient.
        let mut canon = vec![usize::MAX; class_count];
        let mut order: Vec<usize> = Vec::with_capacity(class_count);
        let mut repr = vec![usize::MAX; class_count];
        for s in 0..n {
            if repr[class[s]] == usize::MAX {
                repr[class[s]] = s;
            }
        }
        let start = class[initial];
        canon[start] = 0;
        order.push(start);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let s = repr[c];
            for i in 0..k {
                let tc = class[delta[s][i]];
                if canon[tc] == usize::MAX {
                    canon[tc] = order.len();
                    order.push(tc);
                    queue.push_back(tc);
                }
            }
        }
        debug_assert_eq!(order.len(), class_count);

        let min_delta: Vec<Vec<StateId>> = order
            .iter()
            .map(|&c| {
                let s = repr[c];
                (0..k).map(|i| canon[class[delta[s][i]]]).collect()
            })
            .collect();
        let min_accepting: BTreeSet<StateId> = order
            .iter()
            .enumerate()
            .filter(|(_, &c)| accepting[repr[c]])
            .map(|(id, _)| id)
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: min_delta,
            initial: 0,
            accepting: min_accepting,
        }
    }
}
