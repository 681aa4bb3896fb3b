//! The full decision pipeline: minimize, run the independent criteria,
//! cross-check them and assemble a report.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::Dfa;
use crate::loopstep::{self, LoopStepWitness};
use crate::monoid::{self, NonPrimitivityWitness, TransitionMonoid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error(transparent)]
    LoopStep(#[from] loopstep::LoopStepError),
    #[error(transparent)]
    Monoid(#[from] monoid::MonoidError),
}

/// Caps and switches for [`decide_dfa`].
#[derive(Debug, Clone)]
pub struct DecideOptions {
    /// Maximum state count for the loop-step searches.
    pub state_cap: usize,
    /// Maximum transition-monoid size.
    pub monoid_cap: usize,
    /// Also run the configuration-graph tracking simulation.
    pub run_tracking_simulation: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            state_cap: loopstep::DEFAULT_STATE_CAP,
            monoid_cap: monoid::DEFAULT_MONOID_CAP,
            run_tracking_simulation: false,
        }
    }
}

/// Group-primitivity verdict as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPrimitiveReport {
    pub primitive: bool,
    pub witness: Option<NonPrimitivityWitness>,
}

/// Wall-clock cost of each method, in microseconds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub loop_step_us: u64,
    pub group_primitive_us: u64,
    pub algorithm1_us: Option<u64>,
}

/// Machine-readable outcome of a `decide` run.
///
/// `methods_agree` must be true on every successful run; a disagreement
/// between the criteria would falsify the characterization (or reveal a bug)
/// and makes the CLI exit nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    /// What was decided (file name or expression text).
    pub input: String,
    /// State count of the minimal DFA.
    pub states: usize,
    /// Size of its transition monoid.
    pub monoid_size: usize,
    pub fc_definable: bool,
    pub loop_step: Option<LoopStepWitness>,
    pub group_primitive: GroupPrimitiveReport,
    /// Tracking-simulation verdict, when requested.
    pub algorithm1: Option<bool>,
    pub methods_agree: bool,
    pub timings: Timings,
}

/// Minimizes `d`, runs loop-step detection and the group-primitivity check
/// (plus the tracking simulation when requested) and cross-checks the
/// verdicts. The language is FC-definable exactly when no loop-step cycle
/// exists.
pub fn decide_dfa(
    d: &Dfa,
    input: &str,
    opts: &DecideOptions,
) -> Result<DecisionReport, DecideError> {
    let minimal = d.minimize();

    let t0 = Instant::now();
    let loop_step = loopstep::detect_loop_step(&minimal, opts.state_cap)?;
    let loop_step_us = t0.elapsed().as_micros() as u64;

    let t1 = Instant::now();
    let m = TransitionMonoid::build(&minimal, opts.monoid_cap)?;
    let primitivity = monoid::is_group_primitive_of(&m);
    let group_primitive_us = t1.elapsed().as_micros() as u64;

    let (algorithm1, algorithm1_us) = if opts.run_tracking_simulation {
        let t2 = Instant::now();
        let verdict = loopstep::algorithm1_exact(&minimal, minimal.state_count(), opts.state_cap)?;
        (Some(verdict), Some(t2.elapsed().as_micros() as u64))
    } else {
        (None, None)
    };

    let has_cycle = loop_step.is_some();
    let methods_agree =
        has_cycle == !primitivity.is_primitive() && algorithm1.is_none_or(|a| a == has_cycle);

    Ok(DecisionReport {
        input: input.to_string(),
        states: minimal.state_count(),
        monoid_size: m.size(),
        fc_definable: !has_cycle,
        loop_step,
        group_primitive: GroupPrimitiveReport {
            primitive: primitivity.is_primitive(),
            witness: primitivity.witness().cloned(),
        },
        algorithm1,
        methods_agree,
        timings: Timings { loop_step_us, group_primitive_us, algorithm1_us },
    })
}
