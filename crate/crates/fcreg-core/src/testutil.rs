//! Fixture automata shared by the unit tests.

use std::collections::BTreeSet;

use crate::automata::{Alphabet, Dfa};

pub fn dfa(letters: &str, delta: &[&[usize]], initial: usize, accepting: &[usize]) -> Dfa {
    let alphabet = Alphabet::new(letters.chars()).unwrap();
    let delta: Vec<Vec<usize>> = delta.iter().map(|row| row.to_vec()).collect();
    let accepting: BTreeSet<usize> = accepting.iter().copied().collect();
    Dfa::new(alphabet, delta, initial, accepting).unwrap()
}

/// Two-state machine over {a,b} accepting the words with an even number of a's.
pub fn even_a() -> Dfa {
    dfa("ab", &[&[1, 0], &[0, 1]], 0, &[0])
}

/// Minimal DFA for (aa | ab | ba)*: rows a,b per state.
pub fn blocks_aa_ab_ba() -> Dfa {
    dfa("ab", &[&[1, 2], &[0, 0], &[0, 3], &[3, 3]], 0, &[0])
}

/// Minimal DFA for (aa | ab | bb)*.
pub fn blocks_aa_ab_bb() -> Dfa {
    dfa("ab", &[&[1, 2], &[0, 0], &[3, 0], &[3, 3]], 0, &[0])
}

/// Minimal DFA for (aa)* over {a,b}.
pub fn aa_star() -> Dfa {
    dfa("ab", &[&[1, 2], &[0, 2], &[2, 2]], 0, &[0])
}

/// Minimal DFA for (aa | bb)* over {a,b}.
pub fn aa_or_bb_star() -> Dfa {
    dfa("ab", &[&[1, 2], &[0, 3], &[3, 0], &[3, 3]], 0, &[0])
}

/// Minimal DFA for a* over {a,b}.
pub fn a_star() -> Dfa {
    dfa("ab", &[&[0, 1], &[1, 1]], 0, &[0])
}

/// Minimal DFA for a a* over {a,b}.
pub fn a_plus() -> Dfa {
    dfa("ab", &[&[1, 2], &[1, 2], &[2, 2]], 0, &[1])
}

/// Minimal DFA for b* over {a,b}.
pub fn b_star() -> Dfa {
    dfa("ab", &[&[1, 0], &[1, 1]], 0, &[0])
}

/// Minimal DFA for a (aa)* over {a,b}.
pub fn a_odd_power() -> Dfa {
    dfa("ab", &[&[1, 2], &[0, 2], &[2, 2]], 0, &[1])
}

/// Minimal DFA for b (bb)* over {a,b}.
pub fn b_odd_power() -> Dfa {
    dfa("ab", &[&[2, 1], &[2, 0], &[2, 2]], 0, &[1])
}
