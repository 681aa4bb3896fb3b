//! Loop-step cycle detection, by exact root analysis of per-tuple languages
//! and by exhaustive simulation of the nondeterministic guess-and-track
//! procedure over its finite configuration graph.
//!
//! A minimal DFA has a *loop-step cycle* when some `n >= 2` pairwise distinct
//! states `p_0 .. p_{n-1}` admit nonempty words `w`, `v` with different
//! primitive roots such that `w` fixes every `p_i` and `v` maps each `p_i` to
//! `p_{i+1 mod n}`.
//!
//! For a fixed tuple let `S` be the set of nonempty words fixing every `p_i`
//! and `C` the set of words stepping the cycle. If either set is empty, the
//! tuple admits no witness. When both are nonempty, a pair `(w, v)` in
//! `S x C` with distinct roots exists if and only if `S` and `C` are *not*
//! subsets of one `r*` for the same primitive `r`:
//!
//! * if both sets lie in the same `r*`, all candidate roots equal `r`, so no
//!   pair qualifies;
//! * otherwise either each set has a single root and the two roots differ
//!   (pick one word from each), or some set contains two words of different
//!   roots, at least one of which differs from the root of any fixed word
//!   drawn from the other set.
//!
//! [`detect_loop_step`] applies exactly this case split via
//! [`words::roots_of_language`], so the per-tuple check is a complete
//! decision, not a bounded search.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{Dfa, StateId};
use crate::words::{self, RootsClassification};

/// Default bound on the state count before tuple enumeration aborts.
pub const DEFAULT_STATE_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopStepError {
    #[error("automaton has {states} states, above the cap of {cap} for loop-step search; rerun with a larger --state-cap")]
    StateCapExceeded { states: usize, cap: usize },
}

/// Certificate that a loop-step cycle exists; replayable via [`verify_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopStepWitness {
    /// Pairwise distinct states in cyclic order.
    pub states: Vec<StateId>,
    /// Nonempty word fixing every listed state.
    pub w: String,
    /// Nonempty word stepping each listed state to the next; its primitive
    /// root differs from `w`'s.
    pub v: String,
}

/// Replays all three witness clauses on the automaton.
pub fn verify_witness(d: &Dfa, witness: &LoopStepWitness) -> bool {
    let n = witness.states.len();
    if n < 2 || witness.w.is_empty() || witness.v.is_empty() {
        return false;
    }
    if witness.states.iter().collect::<HashSet<_>>().len() != n {
        return false;
    }
    if witness.states.iter().any(|&q| q >= d.state_count()) {
        return false;
    }
    let (Ok(rw), Ok(rv)) = (words::primitive_root(&witness.w), words::primitive_root(&witness.v))
    else {
        return false;
    };
    if rw.root == rv.root {
        return false;
    }
    for (i, &p) in witness.states.iter().enumerate() {
        let next = witness.states[(i + 1) % n];
        match (d.run(p, &witness.w), d.run(p, &witness.v)) {
            (Ok(stay), Ok(step)) => {
                if stay != p || step != next {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// All cyclic tuples of `n` distinct states, one representative per rotation
/// (the smallest state comes first), in lexicographic order. Reflections are
/// kept: the step direction matters.
fn cyclic_tuples(states: usize, n: usize) -> Vec<Vec<StateId>> {
    fn rec(
        states: usize,
        n: usize,
        used: &mut Vec<bool>,
        tuple: &mut Vec<StateId>,
        out: &mut Vec<Vec<StateId>>,
    ) {
        if tuple.len() == n {
            out.push(tuple.clone());
            return;
        }
        // elements after the first must exceed it, so each rotation class
        // appears exactly once
        let lo = tuple.first().map_or(0, |&f| f + 1);
        for q in lo..states {
            if used[q] {
                continue;
            }
            used[q] = true;
            tuple.push(q);
            rec(states, n, used, tuple, out);
            tuple.pop();
            used[q] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; states];
    rec(states, n, &mut used, &mut Vec::with_capacity(n), &mut out);
    out
}

/// The synchronized-tracking DFA of a tuple: states are the vectors reachable
/// from `start` under componentwise transitions, numbered in BFS order.
/// Vector 0 is `start`; `target_id` is the id of `target` if reached.
struct VectorDfa {
    dfa: Dfa,
    start_id: StateId,
    target_id: Option<StateId>,
}

fn vector_dfa(d: &Dfa, start: &[StateId], target: &[StateId]) -> VectorDfa {
    let k = d.alphabet().len();
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut vectors: Vec<Vec<StateId>> = vec![start.to_vec()];
    ids.insert(start.to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut delta: Vec<Vec<StateId>> = Vec::new();
    while let Some(id) = queue.pop_front() {
        let vec = vectors[id].clone();
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let succ: Vec<StateId> = vec.iter().map(|&q| d.step(q, i)).collect();
            let next = *ids.entry(succ.clone()).or_insert_with(|| {
                vectors.push(succ);
                queue.push_back(vectors.len() - 1);
                vectors.len() - 1
            });
            row.push(next);
        }
        delta.push(row);
    }
    let target_id = ids.get(target).copied();
    let accepting: BTreeSet<StateId> = target_id.into_iter().collect();
    let dfa = Dfa::new(d.alphabet().clone(), delta, 0, accepting)
        .expect("vector graph is a well-formed DFA");
    VectorDfa { dfa, start_id: 0, target_id }
}

/// Extracts a distinct-root pair `(w, v)` from the two classifications,
/// where `stab_dfa`/`cyc_dfa` supply representative words for the `Single`
/// cases (the root itself need not be in the language). Returns `None`
/// exactly when both sides are `Single` with the same root.
fn extract_pair(
    stab_dfa: &Dfa,
    cyc_dfa: &Dfa,
    stab: &RootsClassification,
    cyc: &RootsClassification,
) -> Option<(String, String)> {
    use RootsClassification::*;
    let root_of = |w: &str| words::primitive_root(w).expect("witnesses are nonempty").root;
    let rep = |dfa: &Dfa| dfa.shortest_accepted(true).expect("classification saw a nonempty word");
    match (stab, cyc) {
        (EmptyOrEpsilonOnly, _) | (_, EmptyOrEpsilonOnly) => None,
        (Single(r1), Single(r2)) => {
            if r1 == r2 {
                None
            } else {
                Some((rep(stab_dfa), rep(cyc_dfa)))
            }
        }
        (Single(r1), AtLeastTwo(u, u2)) => {
            let v = if root_of(u) != *r1 { u } else { u2 };
            Some((rep(stab_dfa), v.clone()))
        }
        (AtLeastTwo(u, u2), Single(r2)) => {
            let w = if root_of(u) != *r2 { u } else { u2 };
            Some((w.clone(), rep(cyc_dfa)))
        }
        (AtLeastTwo(u1, u1b), AtLeastTwo(u2, _)) => {
            let w = if root_of(u1) != root_of(u2) { u1 } else { u1b };
            Some((w.clone(), u2.clone()))
        }
    }
}

/// Decides, exactly, whether one specific tuple of pairwise distinct states
/// carries a loop-step cycle, returning a witness if so.
pub fn witness_for_tuple(d: &Dfa, tuple: &[StateId]) -> Option<LoopStepWitness> {
    let n = tuple.len();
    assert!(n >= 2, "a loop-step cycle involves at least two states");
    let shifted: Vec<StateId> = (0..n).map(|i| tuple[(i + 1) % n]).collect();
    // words fixing every tuple state (epsilon included; the root
    // classification only looks at nonempty words)
    let stab = vector_dfa(d, tuple, tuple);
    debug_assert_eq!(stab.target_id, Some(stab.start_id));
    let cyc = vector_dfa(d, tuple, &shifted);
    cyc.target_id?;
    let stab_class = words::roots_of_language(&stab.dfa);
    let cyc_class = words::roots_of_language(&cyc.dfa);
    let (w, v) = extract_pair(&stab.dfa, &cyc.dfa, &stab_class, &cyc_class)?;
    let witness = LoopStepWitness { states: tuple.to_vec(), w, v };
    debug_assert!(verify_witness(d, &witness));
    Some(witness)
}

/// Exact loop-step detection. Returns the first witness in enumeration order
/// (cycle length ascending, rotation representatives lexicographic), or
/// `None` when no tuple admits one.
pub fn detect_loop_step(
    d: &Dfa,
    state_cap: usize,
) -> Result<Option<LoopStepWitness>, LoopStepError> {
    let n_states = d.state_count();
    if n_states > state_cap {
        return Err(LoopStepError::StateCapExceeded { states: n_states, cap: state_cap });
    }
    for n in 2..=n_states {
        for tuple in cyclic_tuples(n_states, n) {
            if let Some(witness) = witness_for_tuple(d, &tuple) {
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

/// Deterministic exhaustive run of the nondeterministic tracking procedure:
/// for every tuple `A` of `2..=n_max` distinct states, search the
/// configuration graph over `(B, C, diff)` - two synchronized state vectors
/// and a flag recording whether the letter streams ever differed - from
/// `(A, A, false)`, accepting when `B = C` equals the one-step rotation of
/// `A` with `diff` set.
///
/// Equivalent to loop-step existence when `n_max >= |Q|`: an accepting run
/// yields equal-length distinct words `u, v` (hence of different roots) with
/// `A.u = A.v = rot(A)`, so `(v^n, u)` is a loop-step witness pair; and a
/// loop-step cycle `(w, v)` conversely drives the two tracks with
/// `w^(n|v|) v^(n|w|+n+1)` and `w^(2n|v|) v^(n+1)`, equal-length distinct
/// words that both rotate the tuple one step.
pub fn algorithm1_exact(d: &Dfa, n_max: usize, state_cap: usize) -> Result<bool, LoopStepError> {
    let n_states = d.state_count();
    if n_states > state_cap {
        return Err(LoopStepError::StateCapExceeded { states: n_states, cap: state_cap });
    }
    let k = d.alphabet().len();
    for n in 2..=n_states.min(n_max) {
        for tuple in cyclic_tuples(n_states, n) {
            let target: Vec<StateId> = (0..n).map(|i| tuple[(i + 1) % n]).collect();
            let mut seen: HashSet<(Vec<StateId>, Vec<StateId>, bool)> = HashSet::new();
            let mut queue: VecDeque<(Vec<StateId>, Vec<StateId>, bool)> = VecDeque::new();
            let start = (tuple.clone(), tuple.clone(), false);
            seen.insert(start.clone());
            queue.push_back(start);
            while let Some((b, c, diff)) = queue.pop_front() {
                if diff && b == c && b == target {
                    return Ok(true);
                }
                for i in 0..k {
                    let nb: Vec<StateId> = b.iter().map(|&q| d.step(q, i)).collect();
                    for j in 0..k {
                        let nc: Vec<StateId> = c.iter().map(|&q| d.step(q, j)).collect();
                        let ndiff = diff || i != j;
                        let config = (nb.clone(), nc, ndiff);
                        if !seen.contains(&config) {
                            seen.insert(config.clone());
                            queue.push_back(config);
                        }
                    }
                }
            }
        }
    }
    Ok(false)
}
