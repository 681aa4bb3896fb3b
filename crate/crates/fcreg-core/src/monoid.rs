//! Transition monoids of minimal DFAs, element classification and the
//! group-primitivity check.
//!
//! The syntactic monoid of a regular language is realized as the transition
//! monoid of its minimal DFA: two words are syntactically congruent exactly
//! when they act identically on the states of the minimal automaton, so the
//! state transformations carry the full monoid structure. Every element
//! stores the length-lexicographically least word inducing it.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{Dfa, StateId};
use crate::words::{self, RootsClassification};

/// Index of an element inside a [`TransitionMonoid`].
pub type ElemId = usize;

/// Default bound on the number of monoid elements before construction aborts.
pub const DEFAULT_MONOID_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error(
        "transition monoid exceeds the cap of {cap} elements; rerun with a larger --monoid-cap"
    )]
    CapExceeded { cap: usize },
}

/// The transition monoid of a minimal DFA.
///
/// Elements are the distinct state transformations induced by words, closed
/// under composition; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct TransitionMonoid {
    base: Dfa,
    elements: Vec<Vec<StateId>>,
    witnesses: Vec<String>,
    table: Vec<Vec<ElemId>>,
    generators: Vec<ElemId>,
}

impl TransitionMonoid {
    /// BFS closure of the identity under right-composition with the letter
    /// transformations. Witness words grow letter by letter, so each element's
    /// witness is the length-lexicographically least word inducing it.
    pub fn build(d: &Dfa, cap: usize) -> Result<TransitionMonoid, MonoidError> {
        let n = d.state_count();
        let k = d.alphabet().len();
        let letter_maps: Vec<Vec<StateId>> =
            (0..k).map(|i| (0..n).map(|q| d.step(q, i)).collect()).collect();

        let identity: Vec<StateId> = (0..n).collect();
        let mut ids: HashMap<Vec<StateId>, ElemId> = HashMap::new();
        let mut elements: Vec<Vec<StateId>> = Vec::new();
        let mut witnesses: Vec<String> = Vec::new();
        ids.insert(identity.clone(), 0);
        elements.push(identity);
        witnesses.push(String::new());
        let mut queue: VecDeque<ElemId> = VecDeque::from([0]);
        while let Some(e) = queue.pop_front() {
            for (i, lm) in letter_maps.iter().enumerate() {
                let composed: Vec<StateId> = elements[e].iter().map(|&q| lm[q]).collect();
                if !ids.contains_key(&composed) {
                    if elements.len() >= cap {
                        return Err(MonoidError::CapExceeded { cap });
                    }
                    let id = elements.len();
                    ids.insert(composed.clone(), id);
                    elements.push(composed);
                    let mut w = witnesses[e].clone();
                    w.push(d.alphabet().letters()[i]);
                    witnesses.push(w);
                    queue.push_back(id);
                }
            }
        }

        let m = elements.len();
        let mut table = vec![vec![0; m]; m];
        for x in 0..m {
            for y in 0..m {
                // x . y acts as "apply x, then y"
                let composed: Vec<StateId> = elements[x].iter().map(|&q| elements[y][q]).collect();
                table[x][y] = *ids.get(&composed).expect("composition stays in the closure");
            }
        }
        let generators =
            (0..k).map(|i| *ids.get(&letter_maps[i]).expect("letter maps are elements")).collect();
        Ok(TransitionMonoid { base: d.clone(), elements, witnesses, table, generators })
    }

    pub fn base(&self) -> &Dfa {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// The transformation of an element: index `q` maps to `element[q]`.
    pub fn transformation(&self, x: ElemId) -> &[StateId] {
        &self.elements[x]
    }

    /// The least word (length, then alphabet order) inducing the element.
    pub fn witness(&self, x: ElemId) -> &str {
        &self.witnesses[x]
    }

    pub fn multiply(&self, x: ElemId, y: ElemId) -> ElemId {
        self.table[x][y]
    }

    /// The monoid element of each alphabet letter, in letter order.
    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    /// The element a word maps to under the syntactic morphism.
    pub fn element_of_word(&self, w: &str) -> Result<ElemId, crate::automata::AutomataError> {
        let mut e = self.identity();
        for c in w.chars() {
            let i = self.base.alphabet().index_of(c)?;
            e = self.multiply(e, self.generators[i]);
        }
        Ok(e)
    }

    /// The least `(j, p)` with `x^(j+p) = x^j`.
    pub fn index_period(&self, x: ElemId) -> (usize, usize) {
        let mut seen: HashMap<ElemId, usize> = HashMap::new();
        let mut power = x;
        let mut exp = 1usize;
        loop {
            if let Some(&j) = seen.get(&power) {
                return (j, exp - j);
            }
            seen.insert(power, exp);
            power = self.multiply(power, x);
            exp += 1;
        }
    }

    /// An element is periodic when its eventual period is at least 2.
    pub fn is_periodic(&self, x: ElemId) -> bool {
        self.index_period(x).1 >= 2
    }

    /// DFA for the preimage of `x` under the syntactic morphism: states are
    /// monoid elements, transitions extend the represented word on the right.
    pub fn preimage_dfa(&self, x: ElemId) -> Dfa {
        let k = self.base.alphabet().len();
        let delta: Vec<Vec<StateId>> = (0..self.size())
            .map(|e| (0..k).map(|i| self.multiply(e, self.generators[i])).collect())
            .collect();
        Dfa::new(self.base.alphabet().clone(), delta, self.identity(), BTreeSet::from([x]))
            .expect("monoid graph is a well-formed DFA")
    }
}

/// Certificate that a language is not group primitive: a periodic element
/// whose preimage contains two words with different primitive roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonPrimitivityWitness {
    /// Index of the offending monoid element.
    pub element: ElemId,
    pub word1: String,
    pub word2: String,
    /// Least `j` with `element^(j+period) = element^j`.
    pub index: usize,
    /// Eventual period of the element; at least 2.
    pub period: usize,
}

/// Outcome of the group-primitivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupPrimitivity {
    Primitive,
    NotPrimitive(NonPrimitivityWitness),
}

impl GroupPrimitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, GroupPrimitivity::Primitive)
    }

    pub fn witness(&self) -> Option<&NonPrimitivityWitness> {
        match self {
            GroupPrimitivity::Primitive => None,
            GroupPrimitivity::NotPrimitive(w) => Some(w),
        }
    }
}

/// Decides whether the language of a minimal DFA is group primitive: every
/// periodic element of the syntactic monoid must have a preimage whose
/// nonempty words share one primitive root.
pub fn is_group_primitive(d: &Dfa, cap: usize) -> Result<GroupPrimitivity, MonoidError> {
    let m = TransitionMonoid::build(d, cap)?;
    Ok(is_group_primitive_of(&m))
}

/// Group-primitivity over an already-built monoid.
pub fn is_group_primitive_of(m: &TransitionMonoid) -> GroupPrimitivity {
    for x in 0..m.size() {
        let (index, period) = m.index_period(x);
        if period < 2 {
            continue;
        }
        match words::roots_of_language(&m.preimage_dfa(x)) {
            RootsClassification::EmptyOrEpsilonOnly => {
                // Only the identity maps the empty word, and the identity is
                // aperiodic; a periodic element always has a nonempty preimage.
                unreachable!("periodic element {x} has an empty preimage");
            }
            RootsClassification::Single(_) => {}
            RootsClassification::AtLeastTwo(word1, word2) => {
                return GroupPrimitivity::NotPrimitive(NonPrimitivityWitness {
                    element: x,
                    word1,
                    word2,
                    index,
                    period,
                });
            }
        }
    }
    GroupPrimitivity::Primitive
}

/// Replays a [`NonPrimitivityWitness`] directly on the DFA, independently of
/// the monoid construction: both words must induce the same state
/// transformation, their primitive roots must differ, and that transformation
/// must have eventual period `period >= 2` with index `index`.
pub fn verify_non_primitivity(d: &Dfa, w: &NonPrimitivityWitness) -> bool {
    if w.word1.is_empty() || w.word2.is_empty() || w.index < 1 || w.period < 2 {
        return false;
    }
    let (Ok(t1), Ok(t2)) = (d.word_action(&w.word1), d.word_action(&w.word2)) else {
        return false;
    };
    if t1 != t2 {
        return false;
    }
    let (Ok(r1), Ok(r2)) = (words::primitive_root(&w.word1), words::primitive_root(&w.word2))
    else {
        return false;
    };
    if r1.root == r2.root {
        return false;
    }
    // Index/period replay on raw transformations.
    let compose =
        |f: &[StateId], g: &[StateId]| -> Vec<StateId> { f.iter().map(|&q| g[q]).collect() };
    let mut powers: Vec<Vec<StateId>> = vec![t1.clone()];
    for _ in 1..w.index + w.period {
        let next = compose(powers.last().unwrap(), &t1);
        powers.push(next);
    }
    powers[w.index + w.period - 1] == powers[w.index - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Alphabet, Dfa, ProductMode};
    use crate::testutil::*;
    use std::collections::HashSet;

    fn aa_star_monoid() -> TransitionMonoid {
        TransitionMonoid::build(&aa_star(), DEFAULT_MONOID_CAP).unwrap()
    }

    #[test]
    fn aa_star_monoid_matches_known_table() {
        let m = aa_star_monoid();
        assert_eq!(m.size(), 3);
        let e = m.identity();
        let x = m.element_of_word("a").unwrap();
        let y = m.element_of_word("b").unwrap();
        assert_eq!(m.witness(e), "");
        assert_eq!(m.witness(x), "a");
        assert_eq!(m.witness(y), "b");
        assert_eq!(m.multiply(x, x), e);
        assert_eq!(m.multiply(y, x), y);
        assert_eq!(m.multiply(x, y), y);
        assert_eq!(m.multiply(y, y), y);
    }

    #[test]
    fn even_a_monoid_is_the_two_element_group() {
        let m = TransitionMonoid::build(&even_a(), DEFAULT_MONOID_CAP).unwrap();
        assert_eq!(m.size(), 2);
        let x = m.element_of_word("a").unwrap();
        assert_eq!(m.element_of_word("b").unwrap(), m.identity());
        assert_eq!(m.multiply(x, x), m.identity());
    }

    /// Independent closure: iterate transformation sets to a fixpoint without
    /// witnesses, queue or table bookkeeping.
    fn naive_transformation_closure(d: &Dfa) -> HashSet<Vec<StateId>> {
        let n = d.state_count();
        let letters: Vec<Vec<StateId>> =
            (0..d.alphabet().len()).map(|i| (0..n).map(|q| d.step(q, i)).collect()).collect();
        let mut set: HashSet<Vec<StateId>> = HashSet::new();
        set.insert((0..n).collect());
        loop {
            let mut grew = false;
            for t in set.clone() {
                for lm in &letters {
                    let composed: Vec<StateId> = t.iter().map(|&q| lm[q]).collect();
                    grew |= set.insert(composed);
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn monoid_matches_naive_closure() {
        for d in [blocks_aa_ab_bb(), blocks_aa_ab_ba(), even_a(), aa_star()] {
            let m = TransitionMonoid::build(&d, DEFAULT_MONOID_CAP).unwrap();
            let naive = naive_transformation_closure(&d);
            assert_eq!(m.size(), naive.len());
            for x in 0..m.size() {
                assert!(naive.contains(m.transformation(x)));
            }
        }
    }

    #[test]
    fn index_period_examples() {
        let m = aa_star_monoid();
        let x = m.element_of_word("a").unwrap();
        let y = m.element_of_word("b").unwrap();
        assert_eq!(m.index_period(m.identity()), (1, 1));
        assert_eq!(m.index_period(y), (1, 1));
        assert_eq!(m.index_period(x), (1, 2));
        let even = TransitionMonoid::build(&even_a(), DEFAULT_MONOID_CAP).unwrap();
        let xe = even.element_of_word("a").unwrap();
        assert_eq!(even.index_period(xe), (1, 2));
    }

    #[test]
    fn periodicity_examples() {
        let m = aa_star_monoid();
        assert!(m.is_periodic(m.element_of_word("a").unwrap()));
        assert!(!m.is_periodic(m.element_of_word("b").unwrap()));
        assert!(!m.is_periodic(m.identity()));
    }

    #[test]
    fn preimage_examples() {
        let m = aa_star_monoid();
        let x = m.element_of_word("a").unwrap();
        assert!(m.preimage_dfa(x).equivalent(&a_odd_power()).unwrap());
        let even = TransitionMonoid::build(&even_a(), DEFAULT_MONOID_CAP).unwrap();
        assert!(even.preimage_dfa(even.identity()).equivalent(&even_a()).unwrap());
    }

    #[test]
    fn preimages_partition_all_words() {
        let m = TransitionMonoid::build(&blocks_aa_ab_bb(), DEFAULT_MONOID_CAP).unwrap();
        let mut union = Dfa::empty_language(Alphabet::ab());
        for x in 0..m.size() {
            let pre = m.preimage_dfa(x);
            assert!(!pre.is_empty());
            union = union.product(&pre, ProductMode::Union).unwrap();
        }
        assert!(union.equivalent(&Dfa::full_language(Alphabet::ab())).unwrap());
        // disjointness at a small word bound
        for w in Dfa::full_language(Alphabet::ab()).enumerate_language(6) {
            let hits = (0..m.size()).filter(|&x| m.preimage_dfa(x).accepts(&w).unwrap()).count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn monoid_laws_hold() {
        let m = TransitionMonoid::build(&blocks_aa_ab_ba(), DEFAULT_MONOID_CAP).unwrap();
        for x in 0..m.size() {
            assert_eq!(m.multiply(m.identity(), x), x);
            assert_eq!(m.multiply(x, m.identity()), x);
            for y in 0..m.size() {
                for z in 0..m.size() {
                    assert_eq!(m.multiply(m.multiply(x, y), z), m.multiply(x, m.multiply(y, z)));
                }
            }
        }
    }

    #[test]
    fn witnesses_induce_their_transformations() {
        let m = TransitionMonoid::build(&blocks_aa_ab_bb(), DEFAULT_MONOID_CAP).unwrap();
        for x in 0..m.size() {
            let action = m.base().word_action(m.witness(x)).unwrap();
            assert_eq!(&action, m.transformation(x));
        }
    }

    #[test]
    fn group_primitivity_examples() {
        assert!(is_group_primitive(&aa_star(), DEFAULT_MONOID_CAP).unwrap().is_primitive());
        let even = is_group_primitive(&even_a(), DEFAULT_MONOID_CAP).unwrap();
        let w = even.witness().expect("even-a is not group primitive").clone();
        assert!(verify_non_primitivity(&even_a(), &w));
        assert!(w.period >= 2);
        assert!(is_group_primitive(&Dfa::full_language(Alphabet::ab()), DEFAULT_MONOID_CAP)
            .unwrap()
            .is_primitive());
    }

    #[test]
    fn witness_replay_rejects_tampering() {
        let even = is_group_primitive(&even_a(), DEFAULT_MONOID_CAP).unwrap();
        let w = even.witness().unwrap();
        let mut bad = w.clone();
        bad.word2 = bad.word1.clone(); // equal roots now
        assert!(!verify_non_primitivity(&even_a(), &bad));
        let mut bad = w.clone();
        bad.period = 1;
        assert!(!verify_non_primitivity(&even_a(), &bad));
    }

    #[test]
    fn cap_is_enforced() {
        let d = blocks_aa_ab_bb();
        assert_eq!(
            TransitionMonoid::build(&d, 3).unwrap_err(),
            MonoidError::CapExceeded { cap: 3 }
        );
    }
}
