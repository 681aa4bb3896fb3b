//! Shared instances for the benchmarks.

use fcreg_core::automata::{parse_dfa, Dfa};

/// Minimal DFA for the words with an even number of a's.
pub fn even_a() -> Dfa {
    parse_dfa(include_str!("../../../samples/even_a.dfa"), false).unwrap().minimize()
}

/// Minimal DFA for (aa | ab | bb)*, a language with no loop-step cycle.
pub fn blocks_aa_ab_bb() -> Dfa {
    parse_dfa(include_str!("../../../samples/blocks_aa_ab_bb.dfa"), false).unwrap().minimize()
}
