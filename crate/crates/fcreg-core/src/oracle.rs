//! Brute-force oracles, instance generators and corpus enumeration backing
//! the cross-method checks.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::automata::{Alphabet, Dfa, StateId};
use crate::loopstep::LoopStepWitness;
use crate::words;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("corpus enumeration is capped at 4 states (asked for {0})")]
    EnumerationGuard(usize),
    #[error("the two words have the same primitive root `{0}`")]
    EqualRoots(String),
    #[error("words must be nonempty and the repetition count at least 2")]
    BadHardPairInput,
    #[error("the empty set has no canonical word encoding")]
    EmptySet,
}

/// A deduplicated list of canonical minimal DFAs over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaCorpus {
    pub alphabet: Alphabet,
    pub members: Vec<Dfa>,
}

/// Every language recognized by a complete DFA with at most `max_states`
/// states: all transition tables, initial states and accepting subsets are
/// enumerated, minimized and deduplicated (canonical minimization makes
/// structural equality language equality). Guarded at 4 states.
pub fn enumerate_minimal_dfas(
    alphabet: &Alphabet,
    max_states: usize,
) -> Result<DfaCorpus, OracleError> {
    if max_states > 4 {
        return Err(OracleError::EnumerationGuard(max_states));
    }
    let k = alphabet.len();
    let mut seen: HashSet<Dfa> = HashSet::new();
    for n in 1..=max_states {
        let slots = n * k;
        let tables = (n as u64).pow(slots as u32);
        for code in 0..tables {
            let mut c = code;
            let mut delta = vec![vec![0usize; k]; n];
            for row in delta.iter_mut() {
                for slot in row.iter_mut() {
                    *slot = (c % n as u64) as usize;
                    c /= n as u64;
                }
            }
            for initial in 0..n {
                for acc_bits in 0..(1u32 << n) {
                    let accepting: BTreeSet<StateId> =
                        (0..n).filter(|q| acc_bits & (1 << q) != 0).collect();
                    let d = Dfa::new(alphabet.clone(), delta.clone(), initial, accepting)
                        .expect("enumerated table is well-formed");
                    seen.insert(d.minimize());
                }
            }
        }
    }
    let mut members: Vec<Dfa> = seen.into_iter().collect();
    members.sort();
    Ok(DfaCorpus { alphabet: alphabet.clone(), members })
}

/// A seeded pseudo-random complete DFA, minimized into canonical form.
/// Transitions are uniform and independent; the accepting subset is uniform
/// over the subsets that are neither empty nor full (for a single state,
/// where no such subset exists, the state accepts).
pub fn random_minimal_dfa(alphabet: &Alphabet, states: usize, seed: u64) -> Dfa {
    assert!(states >= 1, "a complete DFA needs at least one state");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = alphabet.len();
    let delta: Vec<Vec<StateId>> =
        (0..states).map(|_| (0..k).map(|_| rng.gen_range(0..states)).collect()).collect();
    let initial = rng.gen_range(0..states);
    let accepting: BTreeSet<StateId> = if states == 1 {
        BTreeSet::from([0])
    } else {
        loop {
            let set: BTreeSet<StateId> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
            if !set.is_empty() && set.len() < states {
                break set;
            }
        }
    };
    Dfa::new(alphabet.clone(), delta, initial, accepting)
        .expect("random table is well-formed")
        .minimize()
}

/// Every ordered tuple of `n` distinct states, no rotation quotienting.
fn all_distinct_tuples(states: usize, n: usize) -> Vec<Vec<StateId>> {
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(n);
    fn rec(states: usize, n: usize, tuple: &mut Vec<StateId>, out: &mut Vec<Vec<StateId>>) {
        if tuple.len() == n {
            out.push(tuple.clone());
            return;
        }
        for q in 0..states {
            if !tuple.contains(&q) {
                tuple.push(q);
                rec(states, n, tuple, out);
                tuple.pop();
            }
        }
    }
    rec(states, n, &mut tuple, &mut out);
    out
}

/// Bounded search for a loop-step cycle: every state tuple against every
/// word pair of length up to `max_word_len`. A returned witness is sound;
/// `None` only means no witness with words that short.
pub fn brute_force_loop_step(d: &Dfa, max_word_len: usize) -> Option<LoopStepWitness> {
    let n_states = d.state_count();
    let mut words_pool: Vec<String> = Vec::new();
    let mut level: Vec<String> = vec![String::new()];
    for _ in 0..max_word_len {
        let mut next = Vec::new();
        for w in &level {
            for &c in d.alphabet().letters() {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        words_pool.extend(next.iter().cloned());
        level = next;
    }
    let actions: Vec<Vec<StateId>> =
        words_pool.iter().map(|w| d.word_action(w).expect("pool words use the alphabet")).collect();

    for n in 2..=n_states {
        for tuple in all_distinct_tuples(n_states, n) {
            for (w, wact) in words_pool.iter().zip(&actions) {
                if tuple.iter().any(|&p| wact[p] != p) {
                    continue;
                }
                for (v, vact) in words_pool.iter().zip(&actions) {
                    if words::primitive_root(w).unwrap().root
                        == words::primitive_root(v).unwrap().root
                    {
                        continue;
                    }
                    let steps_ok = tuple
                        .iter()
                        .enumerate()
                        .all(|(i, &p)| vact[p] == tuple[(i + 1) % tuple.len()]);
                    if steps_ok {
                        return Some(LoopStepWitness {
                            states: tuple.clone(),
                            w: w.clone(),
                            v: v.clone(),
                        });
                    }
                }
            }
        }
    }
    None
}

/// The equal-length distinct-root pair `w^(n|v|) v^(n|w|+n+1)` and
/// `w^(2n|v|) v^(n+1)`. Both words are primitive and neither is a prefix or
/// suffix of the other; both lengths equal `2n|v||w| + n|v| + |v|`.
pub fn hard_pair(w: &str, v: &str, n: usize) -> Result<(String, String), OracleError> {
    if w.is_empty() || v.is_empty() || n < 2 {
        return Err(OracleError::BadHardPairInput);
    }
    let rw = words::primitive_root(w).expect("nonempty").root;
    let rv = words::primitive_root(v).expect("nonempty").root;
    if rw == rv {
        return Err(OracleError::EqualRoots(rw));
    }
    let wl = w.chars().count();
    let vl = v.chars().count();
    let h0 = format!("{}{}", w.repeat(n * vl), v.repeat(n * wl + n + 1));
    let h1 = format!("{}{}", w.repeat(2 * n * vl), v.repeat(n + 1));
    Ok((h0, h1))
}

/// Canonical word encoding of a nonempty finite set `{a_1 < .. < a_m}` over
/// the letters 0/1: `1 0^(a_1) 1 0^(a_2) 1 .. 1 0^(a_m) 1`. The empty set is
/// rejected: the definition does not extend to it.
pub fn encode_set_word(set: &BTreeSet<usize>) -> Result<String, OracleError> {
    if set.is_empty() {
        return Err(OracleError::EmptySet);
    }
    let mut out = String::from("1");
    for &a in set {
        out.push_str(&"0".repeat(a));
        out.push('1');
    }
    Ok(out)
}
