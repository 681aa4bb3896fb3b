//! Line-oriented text format for DFAs.
//!
//! ```text
//! alphabet: a b
//! states: 4
//! initial: 0
//! accepting: 0 2
//! trans: 0 a 1
//! trans: 0 b 3
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The transition
//! function must be total; with `insert_sink` a fresh sink state absorbs any
//! missing transitions instead.

use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

use super::{Alphabet, AutomataError, Dfa, StateId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DfaFormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `{0}:` line")]
    MissingField(&'static str),
    #[error("line {line}: duplicate `{field}:` line")]
    DuplicateField { line: usize, field: &'static str },
    #[error("line {line}: duplicate transition from state {state} on `{letter}`")]
    DuplicateTransition { line: usize, state: StateId, letter: char },
    #[error("incomplete transition function: state {state} has no transition on `{letter}` (use --complete to insert a sink)")]
    Incomplete { state: StateId, letter: char },
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

fn syntax(line: usize, msg: impl Into<String>) -> DfaFormatError {
    DfaFormatError::Syntax { line, msg: msg.into() }
}

/// Parses the text format. `insert_sink` completes a partial transition
/// function with a fresh non-accepting sink state.
pub fn parse_dfa(text: &str, insert_sink: bool) -> Result<Dfa, DfaFormatError> {
    let mut alphabet: Option<(usize, Alphabet)> = None;
    let mut states: Option<(usize, usize)> = None;
    let mut initial: Option<(usize, StateId)> = None;
    let mut accepting: Option<(usize, BTreeSet<StateId>)> = None;
    let mut trans: Vec<(usize, StateId, char, StateId)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) =
            line.split_once(':').ok_or_else(|| syntax(line_no, "expected `key: value`"))?;
        let rest = rest.trim();
        match key.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(DfaFormatError::DuplicateField {
                        line: line_no,
                        field: "alphabet",
                    });
                }
                let mut letters = Vec::new();
                for tok in rest.split_whitespace() {
                    let mut chars = tok.chars();
                    let c = chars.next().ok_or_else(|| syntax(line_no, "empty letter"))?;
                    if chars.next().is_some() {
                        return Err(syntax(
                            line_no,
                            format!("letter `{tok}` is not a single character"),
                        ));
                    }
                    letters.push(c);
                }
                alphabet = Some((line_no, Alphabet::new(letters)?));
            }
            "states" => {
                if states.is_some() {
                    return Err(DfaFormatError::DuplicateField { line: line_no, field: "states" });
                }
                let n: usize = rest
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad state count `{rest}`")))?;
                if n == 0 {
                    return Err(syntax(line_no, "state count must be at least 1"));
                }
                states = Some((line_no, n));
            }
            "initial" => {
                if initial.is_some() {
                    return Err(DfaFormatError::DuplicateField { line: line_no, field: "initial" });
                }
                let q =
                    rest.parse().map_err(|_| syntax(line_no, format!("bad state id `{rest}`")))?;
                initial = Some((line_no, q));
            }
            "accepting" => {
                if accepting.is_some() {
                    return Err(DfaFormatError::DuplicateField {
                        line: line_no,
                        field: "accepting",
                    });
                }
                let mut set = BTreeSet::new();
                for tok in rest.split_whitespace() {
                    let q: StateId = tok
                        .parse()
                        .map_err(|_| syntax(line_no, format!("bad state id `{tok}`")))?;
                    set.insert(q);
                }
                accepting = Some((line_no, set));
            }
            "trans" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(syntax(line_no, "expected `trans: <state> <letter> <state>`"));
                }
                let from: StateId = toks[0]
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad state id `{}`", toks[0])))?;
                let mut chars = toks[1].chars();
                let letter = chars.next().ok_or_else(|| syntax(line_no, "empty letter"))?;
                if chars.next().is_some() {
                    return Err(syntax(
                        line_no,
                        format!("letter `{}` is not a single character", toks[1]),
                    ));
                }
                let to: StateId = toks[2]
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad state id `{}`", toks[2])))?;
                trans.push((line_no, from, letter, to));
            }
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        }
    }

    let (_, alphabet) = alphabet.ok_or(DfaFormatError::MissingField("alphabet"))?;
    let (_, n) = states.ok_or(DfaFormatError::MissingField("states"))?;
    let (init_line, initial) = initial.ok_or(DfaFormatError::MissingField("initial"))?;
    let (acc_line, accepting) = accepting.ok_or(DfaFormatError::MissingField("accepting"))?;

    if initial >= n {
        return Err(syntax(
            init_line,
            format!("initial state {initial} out of range (states: {n})"),
        ));
    }
    if let Some(&q) = accepting.iter().find(|&&q| q >= n) {
        return Err(syntax(acc_line, format!("accepting state {q} out of range (states: {n})")));
    }

    let k = alphabet.len();
    let mut table: Vec<Vec<Option<StateId>>> = vec![vec![None; k]; n];
    let mut seen: HashMap<(StateId, char), usize> = HashMap::new();
    for (line_no, from, letter, to) in trans {
        if from >= n || to >= n {
            let bad = if from >= n { from } else { to };
            return Err(syntax(line_no, format!("state {bad} out of range (states: {n})")));
        }
        let i = alphabet.index_of(letter)?;
        if seen.insert((from, letter), line_no).is_some() {
            return Err(DfaFormatError::DuplicateTransition { line: line_no, state: from, letter });
        }
        table[from][i] = Some(to);
    }

    let missing: Vec<(StateId, char)> = (0..n)
        .flat_map(|q| {
            let alphabet = &alphabet;
            let table = &table;
            (0..k).filter(move |&i| table[q][i].is_none()).map(move |i| (q, alphabet.letters()[i]))
        })
        .collect();

    let delta: Vec<Vec<StateId>> = if missing.is_empty() {
        table.into_iter().map(|row| row.into_iter().map(|t| t.unwrap()).collect()).collect()
    } else if insert_sink {
        let sink = n;
        let mut delta: Vec<Vec<StateId>> = table
            .into_iter()
            .map(|row| row.into_iter().map(|t| t.unwrap_or(sink)).collect())
            .collect();
        delta.push(vec![sink; k]);
        delta
    } else {
        let (state, letter) = missing[0];
        return Err(DfaFormatError::Incomplete { state, letter });
    };

    Ok(Dfa::new(alphabet, delta, initial, accepting)?)
}

/// Renders a DFA in the text format, transitions sorted by state then letter.
pub fn dfa_to_text(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("alphabet:");
    for &c in d.alphabet().letters() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    out.push_str(&format!("states: {}\n", d.state_count()));
    out.push_str(&format!("initial: {}\n", d.initial()));
    out.push_str("accepting:");
    for q in d.accepting() {
        out.push_str(&format!(" {q}"));
    }
    out.push('\n');
    for q in 0..d.state_count() {
        for (i, &c) in d.alphabet().letters().iter().enumerate() {
            out.push_str(&format!("trans: {q} {c} {}\n", d.step(q, i)));
        }
    }
    out
}
