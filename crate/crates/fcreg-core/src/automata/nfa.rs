//! Nondeterministic automata with epsilon transitions, used as the
//! compilation target for expressions before determinization.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::{Alphabet, AutomataError, Dfa, StateId};

/// An NFA with epsilon moves (`label = None`).
#[derive(Debug, Clone)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    transitions: BTreeMap<(StateId, Option<char>), BTreeSet<StateId>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize) -> Nfa {
        Nfa {
            alphabet,
            states,
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            transitions: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn add_state(&mut self) -> StateId {
        self.states += 1;
        self.states - 1
    }

    pub fn add_initial(&mut self, q: StateId) -> Result<(), AutomataError> {
        self.check_state(q)?;
        self.initial.insert(q);
        Ok(())
    }

    pub fn add_accepting(&mut self, q: StateId) -> Result<(), AutomataError> {
        self.check_state(q)?;
        self.accepting.insert(q);
        Ok(())
    }

    /// Adds a transition; `label = None` is an epsilon move.
    pub fn add_transition(
        &mut self,
        from: StateId,
        label: Option<char>,
        to: StateId,
    ) -> Result<(), AutomataError> {
        self.check_state(from)?;
        self.check_state(to)?;
        if let Some(c) = label {
            self.alphabet.index_of(c)?;
        }
        self.transitions.entry((from, label)).or_default().insert(to);
        Ok(())
    }

    fn check_state(&self, q: StateId) -> Result<(), AutomataError> {
        if q >= self.states {
            return Err(AutomataError::InvalidState { state: q, count: self.states });
        }
        Ok(())
    }

    /// An NFA with the same language as `d`.
    pub fn from_dfa(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone(), d.state_count());
        n.initial.insert(d.initial());
        n.accepting = d.accepting().clone();
        for q in 0..d.state_count() {
            for (i, &c) in d.alphabet().letters().iter().enumerate() {
                n.transitions.entry((q, Some(c))).or_default().insert(d.step(q, i));
            }
        }
        n
    }

    /// Disjoint union of the two automata; accepts `L(a) union L(b)`.
    pub fn union(a: &Nfa, b: &Nfa) -> Result<Nfa, AutomataError> {
        if a.alphabet != b.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let mut n = Nfa::new(a.alphabet.clone(), a.states + b.states);
        n.initial =
            a.initial.iter().copied().chain(b.initial.iter().map(|&q| q + a.states)).collect();
        n.accepting =
            a.accepting.iter().copied().chain(b.accepting.iter().map(|&q| q + a.states)).collect();
        for ((from, label), tos) in &a.transitions {
            n.transitions.insert((*from, *label), tos.clone());
        }
        for ((from, label), tos) in &b.transitions {
            n.transitions
                .insert((*from + a.states, *label), tos.iter().map(|&t| t + a.states).collect());
        }
        Ok(n)
    }

    /// Concatenation `L(a) . L(b)` via epsilon moves from `a`'s accepting
    /// states to `b`'s initial states.
    pub fn concat(a: &Nfa, b: &Nfa) -> Result<Nfa, AutomataError> {
        if a.alphabet != b.alphabet {
            return Err(AutomataError::AlphabetMismatch);
        }
        let mut n = Nfa::new(a.alphabet.clone(), a.states + b.states);
        n.initial = a.initial.clone();
        n.accepting = b.accepting.iter().map(|&q| q + a.states).collect();
        for ((from, label), tos) in &a.transitions {
            n.transitions.insert((*from, *label), tos.clone());
        }
        for ((from, label), tos) in &b.transitions {
            n.transitions
                .insert((*from + a.states, *label), tos.iter().map(|&t| t + a.states).collect());
        }
        for &q in &a.accepting {
            for &i in &b.initial {
                n.transitions.entry((q, None)).or_default().insert(i + a.states);
            }
        }
        Ok(n)
    }

    fn epsilon_closure(&self, set: &BTreeSet<StateId>) -> BTreeSet<StateId> {
        let mut closure = set.clone();
        let mut queue: VecDeque<StateId> = set.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            if let Some(tos) = self.transitions.get(&(q, None)) {
                for &t in tos {
                    if closure.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        closure
    }

    /// Subset construction with epsilon closure. The result is a complete DFA
    /// (the dead subset becomes an explicit sink when reached) accepting the
    /// same language.
    pub fn determinize(&self) -> Dfa {
        let letters: Vec<char> = self.alphabet.letters().to_vec();
        let start = self.epsilon_closure(&self.initial);
        let mut ids: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
        let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
        let mut queue: VecDeque<StateId> = VecDeque::new();
        ids.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0);
        let mut delta: Vec<Vec<StateId>> = Vec::new();
        while let Some(id) = queue.pop_front() {
            let subset = subsets[id].clone();
            let mut row = Vec::with_capacity(letters.len());
            for &c in &letters {
                let mut succ = BTreeSet::new();
                for &q in &subset {
                    if let Some(tos) = self.transitions.get(&(q, Some(c))) {
                        succ.extend(tos.iter().copied());
                    }
                }
                let succ = self.epsilon_closure(&succ);
                let next_id = *ids.entry(succ.clone()).or_insert_with(|| {
                    subsets.push(succ);
                    queue.push_back(subsets.len() - 1);
                    subsets.len() - 1
                });
                row.push(next_id);
            }
            delta.push(row);
        }
        let accepting = subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.iter().any(|q| self.accepting.contains(q)))
            .map(|(id, _)| id)
            .collect();
        Dfa::new(self.alphabet.clone(), delta, 0, accepting).unwrap()
    }
}
