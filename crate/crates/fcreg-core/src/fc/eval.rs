//! Model checking FC formulas over the factor structure of a word.
//!
//! Quantifiers range over the deduplicated factor set of the word. Results of
//! subformulas are memoized keyed by the values of the subformula's free
//! variables, which keeps deeply nested compiled formulas polynomial to
//! evaluate without changing semantics.

use std::collections::{BTreeMap, HashMap};

use super::{FcError, FcFormula, FcTerm};
use crate::automata::{Alphabet, Dfa};

/// A word together with an assignment of factors to variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FcInterpretation {
    word: String,
    assignment: BTreeMap<String, String>,
}

impl FcInterpretation {
    /// Every assigned value must be a factor of the word.
    pub fn new(
        word: impl Into<String>,
        assignment: BTreeMap<String, String>,
    ) -> Result<Self, FcError> {
        let word = word.into();
        for (var, value) in &assignment {
            if !is_factor(value, &word) {
                return Err(FcError::NotAFactor { var: var.clone() });
            }
        }
        Ok(FcInterpretation { word, assignment })
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    /// Evaluates a formula whose free variables are all assigned.
    pub fn eval(&self, phi: &FcFormula) -> Result<bool, FcError> {
        let unassigned: Vec<String> =
            phi.free_variables().into_iter().filter(|v| !self.assignment.contains_key(v)).collect();
        if !unassigned.is_empty() {
            return Err(FcError::FreeVariables(unassigned));
        }
        let (nodes, root) = lower(phi);
        let mut ev = Evaluator::new(&self.word, &nodes);
        let mut env: HashMap<String, usize> = HashMap::new();
        for (var, value) in &self.assignment {
            env.insert(var.clone(), ev.fact_ids[value.as_str()]);
        }
        Ok(ev.eval(root, &mut env))
    }
}

fn is_factor(u: &str, w: &str) -> bool {
    u.is_empty() || w.contains(u)
}

/// True iff the sentence holds in the factor structure of `word`.
pub fn eval_fc(word: &str, phi: &FcFormula) -> Result<bool, FcError> {
    FcInterpretation::new(word, BTreeMap::new())?.eval(phi)
}

/// All words over `alphabet` of length at most `max_len` satisfying the
/// sentence, in length-then-lexicographic order.
pub fn fc_language(
    phi: &FcFormula,
    alphabet: &Alphabet,
    max_len: usize,
) -> Result<Vec<String>, FcError> {
    let free: Vec<String> = phi.free_variables().into_iter().collect();
    if !free.is_empty() {
        return Err(FcError::FreeVariables(free));
    }
    let (nodes, root) = lower(phi);
    let mut out = Vec::new();
    for w in Dfa::full_language(alphabet.clone()).enumerate_language(max_len) {
        let mut ev = Evaluator::new(&w, &nodes);
        if ev.eval(root, &mut HashMap::new()) {
            out.push(w);
        }
    }
    Ok(out)
}

enum Kind {
    Atom(FcTerm, FcTerm, FcTerm),
    And(usize, usize),
    Or(usize, usize),
    Not(usize),
    Exists(String, usize),
    Forall(String, usize),
}

struct Node {
    kind: Kind,
    /// Sorted free variables; the memo key is their assigned values.
    free: Vec<String>,
}

fn lower(phi: &FcFormula) -> (Vec<Node>, usize) {
    fn rec(phi: &FcFormula, nodes: &mut Vec<Node>) -> usize {
        let kind = match phi {
            FcFormula::Atom(x, y, z) => Kind::Atom(x.clone(), y.clone(), z.clone()),
            FcFormula::And(a, b) => Kind::And(rec(a, nodes), rec(b, nodes)),
            FcFormula::Or(a, b) => Kind::Or(rec(a, nodes), rec(b, nodes)),
            FcFormula::Not(a) => Kind::Not(rec(a, nodes)),
            FcFormula::Exists(v, a) => Kind::Exists(v.clone(), rec(a, nodes)),
            FcFormula::Forall(v, a) => Kind::Forall(v.clone(), rec(a, nodes)),
        };
        let free: Vec<String> = phi.free_variables().into_iter().collect();
        nodes.push(Node { kind, free });
        nodes.len() - 1
    }
    let mut nodes = Vec::new();
    let root = rec(phi, &mut nodes);
    (nodes, root)
}

struct Evaluator<'a> {
    nodes: &'a [Node],
    facts: Vec<String>,
    fact_ids: HashMap<String, usize>,
    eps_id: usize,
    memo: HashMap<(usize, Vec<usize>), bool>,
}

impl<'a> Evaluator<'a> {
    fn new(word: &str, nodes: &'a [Node]) -> Evaluator<'a> {
        let chars: Vec<char> = word.chars().collect();
        let mut fact_ids: HashMap<String, usize> = HashMap::new();
        let mut facts: Vec<String> = Vec::new();
        let add = |s: String, facts: &mut Vec<String>, ids: &mut HashMap<String, usize>| {
            if !ids.contains_key(&s) {
                ids.insert(s.clone(), facts.len());
                facts.push(s);
            }
        };
        add(String::new(), &mut facts, &mut fact_ids);
        for i in 0..chars.len() {
            for j in i + 1..=chars.len() {
                add(chars[i..j].iter().collect(), &mut facts, &mut fact_ids);
            }
        }
        let eps_id = fact_ids[""];
        Evaluator { nodes, facts, fact_ids, eps_id, memo: HashMap::new() }
    }

    fn term_value(&self, t: &FcTerm, env: &HashMap<String, usize>) -> Option<usize> {
        match t {
            FcTerm::Var(v) => Some(env[v.as_str()]),
            // a letter constant denotes its factor only when it occurs
            FcTerm::Letter(c) => self.fact_ids.get(c.to_string().as_str()).copied(),
            FcTerm::Epsilon => Some(self.eps_id),
        }
    }

    fn eval(&mut self, node: usize, env: &mut HashMap<String, usize>) -> bool {
        let key: Vec<usize> = self.nodes[node].free.iter().map(|v| env[v.as_str()]).collect();
        if let Some(&cached) = self.memo.get(&(node, key.clone())) {
            return cached;
        }
        let result = match &self.nodes[node].kind {
            Kind::Atom(x, y, z) => {
                match (self.term_value(x, env), self.term_value(y, env), self.term_value(z, env)) {
                    (Some(a), Some(b), Some(c)) => {
                        let (a, b, c) = (&self.facts[a], &self.facts[b], &self.facts[c]);
                        a.len() == b.len() + c.len()
                            && a.starts_with(b.as_str())
                            && a.ends_with(c.as_str())
                    }
                    // an undefined letter constant falsifies the atom
                    _ => false,
                }
            }
            Kind::And(a, b) => {
                let (a, b) = (*a, *b);
                self.eval(a, env) && self.eval(b, env)
            }
            Kind::Or(a, b) => {
                let (a, b) = (*a, *b);
                self.eval(a, env) || self.eval(b, env)
            }
            Kind::Not(a) => {
                let a = *a;
                !self.eval(a, env)
            }
            Kind::Exists(v, body) => {
                let (v, body) = (v.clone(), *body);
                let saved = env.get(&v).copied();
                let mut found = false;
                for f in 0..self.facts.len() {
                    env.insert(v.clone(), f);
                    if self.eval(body, env) {
                        found = true;
                        break;
                    }
                }
                restore(env, &v, saved);
                found
            }
            Kind::Forall(v, body) => {
                let (v, body) = (v.clone(), *body);
                let saved = env.get(&v).copied();
                let mut all = true;
                for f in 0..self.facts.len() {
                    env.insert(v.clone(), f);
                    if !self.eval(body, env) {
                        all = false;
                        break;
                    }
                }
                restore(env, &v, saved);
                all
            }
        };
        self.memo.insert((node, key), result);
        result
    }
}

fn restore(env: &mut HashMap<String, usize>, var: &str, saved: Option<usize>) {
    match saved {
        Some(old) => {
            env.insert(var.to_string(), old);
        }
        None => {
            env.remove(var);
        }
    }
}
