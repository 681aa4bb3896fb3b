//! Human-readable and DOT renderings of reports, monoids and summaries.

use std::fmt::Write as _;

use fcreg_core::automata::Dfa;
use fcreg_core::decide::DecisionReport;
use fcreg_core::monoid::TransitionMonoid;

use crate::CrosscheckSummary;

pub fn render_report(r: &DecisionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", r.input);
    let _ = writeln!(out, "minimal DFA: {} states, monoid size {}", r.states, r.monoid_size);
    match &r.loop_step {
        Some(w) => {
            let _ = writeln!(out, "loop-step cycle: found");
            let states: Vec<String> = w.states.iter().map(|q| q.to_string()).collect();
            let _ = writeln!(out, "  states: {}", states.join(" "));
            let _ = writeln!(out, "  w: \"{}\"", w.w);
            let _ = writeln!(out, "  v: \"{}\"", w.v);
        }
        None => {
            let _ = writeln!(out, "loop-step cycle: none");
        }
    }
    if r.group_primitive.primitive {
        let _ = writeln!(out, "group primitive: yes");
    } else {
        let _ = writeln!(out, "group primitive: no");
        if let Some(w) = &r.group_primitive.witness {
            let _ = writeln!(
                out,
                "  element {}: words \"{}\" and \"{}\" share it but have different roots (index {}, period {})",
                w.element, w.word1, w.word2, w.index, w.period
            );
        }
    }
    if let Some(a1) = r.algorithm1 {
        let _ = writeln!(
            out,
            "tracking simulation: {}",
            if a1 { "loop-step cycle found" } else { "no loop-step cycle" }
        );
    }
    let _ = writeln!(out, "methods agree: {}", if r.methods_agree { "yes" } else { "NO" });
    let _ = writeln!(out, "FC-definable: {}", if r.fc_definable { "yes" } else { "no" });
    out
}

pub fn render_monoid(m: &TransitionMonoid) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", m.size());
    let letters = m.base().alphabet().letters().to_vec();
    let gens: Vec<String> =
        letters.iter().zip(m.generators()).map(|(c, e)| format!("{c} -> {e}")).collect();
    let _ = writeln!(out, "generators: {}", gens.join(", "));
    let _ = writeln!(out, "witnesses:");
    for x in 0..m.size() {
        let note = if x == m.identity() { "  (identity)" } else { "" };
        let _ = writeln!(out, "  {x}: \"{}\"{note}", m.witness(x));
    }
    let periodic: Vec<String> = (0..m.size())
        .filter(|&x| m.is_periodic(x))
        .map(|x| {
            let (j, p) = m.index_period(x);
            format!("{x} (index {j}, period {p})")
        })
        .collect();
    let _ = writeln!(
        out,
        "periodic elements: {}",
        if periodic.is_empty() { "none".to_string() } else { periodic.join(", ") }
    );
    let _ = writeln!(out, "table (row . column):");
    let width = (m.size() - 1).to_string().len().max(1);
    let _ = write!(out, "  {:>width$} |", "");
    for y in 0..m.size() {
        let _ = write!(out, " {y:>width$}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "  {}-+-{}", "-".repeat(width), "-".repeat((width + 1) * m.size()));
    for x in 0..m.size() {
        let _ = write!(out, "  {x:>width$} |");
        for y in 0..m.size() {
            let _ = write!(out, " {:>width$}", m.multiply(x, y));
        }
        let _ = writeln!(out);
    }
    out
}

pub fn monoid_json(m: &TransitionMonoid) -> serde_json::Value {
    let letters = m.base().alphabet().letters();
    let generators: serde_json::Map<String, serde_json::Value> = letters
        .iter()
        .zip(m.generators())
        .map(|(c, e)| (c.to_string(), serde_json::json!(e)))
        .collect();
    let table: Vec<Vec<usize>> =
        (0..m.size()).map(|x| (0..m.size()).map(|y| m.multiply(x, y)).collect()).collect();
    let periodic: Vec<usize> = (0..m.size()).filter(|&x| m.is_periodic(x)).collect();
    serde_json::json!({
        "size": m.size(),
        "identity": m.identity(),
        "generators": generators,
        "witnesses": (0..m.size()).map(|x| m.witness(x).to_string()).collect::<Vec<_>>(),
        "periodic": periodic,
        "table": table,
    })
}

pub fn render_crosscheck(s: &CrosscheckSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instances: {}", s.total);
    let _ = writeln!(out, "agreed: {}", s.agreed);
    for d in &s.disagreements {
        let _ = writeln!(out, "DISAGREEMENT on {}:", d.id);
        let _ = writeln!(out, "--- automaton ---");
        let _ = write!(out, "{}", d.dfa);
        let _ = writeln!(out, "--- report ---");
        let _ = write!(out, "{}", render_report(&d.report));
        if let Some(w) = &d.brute_force_witness {
            let states: Vec<String> = w.states.iter().map(|q| q.to_string()).collect();
            let _ = writeln!(
                out,
                "--- brute-force witness: states {} w \"{}\" v \"{}\" ---",
                states.join(" "),
                w.w,
                w.v
            );
        }
    }
    if s.disagreements.is_empty() {
        let _ = writeln!(out, "all methods agree");
    }
    out
}

pub fn render_dot(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph dfa {{");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  __start [shape=point];");
    let _ = writeln!(out, "  __start -> q{};", d.initial());
    for q in 0..d.state_count() {
        let shape = if d.is_accepting(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [shape={shape}];");
    }
    for q in 0..d.state_count() {
        // merge parallel edges into one label
        let mut by_target: Vec<(usize, Vec<char>)> = Vec::new();
        for (i, &c) in d.alphabet().letters().iter().enumerate() {
            let t = d.step(q, i);
            match by_target.iter_mut().find(|(target, _)| *target == t) {
                Some((_, labels)) => labels.push(c),
                None => by_target.push((t, vec![c])),
            }
        }
        for (t, labels) in by_target {
            let label: String = labels.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"{label}\"];");
        }
    }
    let _ = writeln!(out, "}}");
    out
}
