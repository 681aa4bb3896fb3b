//! `fcreg`: decide whether a regular language is FC-definable, with
//! machine-checkable witnesses and cross-checked methods.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use fcreg_core::automata::{dfa_to_text, parse_dfa, Alphabet, Dfa};
use fcreg_core::decide::{decide_dfa, DecideOptions, DecisionReport};
use fcreg_core::fc::{compile_sfr_to_fc, eval_fc, parse_fc};
use fcreg_core::loopstep::{self, DEFAULT_STATE_CAP};
use fcreg_core::monoid::{self, TransitionMonoid, DEFAULT_MONOID_CAP};
use fcreg_core::oracle;
use fcreg_core::sfr::{compile_sfr, parse_sfr};

#[derive(Parser)]
#[command(name = "fcreg", version, about = "Decide FC-definability of regular languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the language under inspection comes from: a DFA file or an SF(R)
/// expression.
#[derive(Args)]
struct InputArgs {
    /// DFA file in the line-oriented text format
    file: Option<PathBuf>,
    /// SF(R) expression (star-free with word stars) instead of a file
    #[arg(long, conflicts_with = "file")]
    regex: Option<String>,
    /// Alphabet letters used with --regex
    #[arg(long, default_value = "ab")]
    alphabet: String,
    /// Complete a partial transition function with a sink state
    #[arg(long)]
    complete: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide FC-definability; exit 0 when definable, 1 when not, 2 on errors
    Decide {
        #[command(flatten)]
        input: InputArgs,
        /// Also run the exhaustive tracking simulation
        #[arg(long)]
        all: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// State-count cap for the loop-step searches
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
        /// Element cap for the transition monoid
        #[arg(long, default_value_t = DEFAULT_MONOID_CAP)]
        monoid_cap: usize,
    },
    /// Print the canonical minimal DFA
    Minimize {
        #[command(flatten)]
        input: InputArgs,
        /// Emit Graphviz DOT instead of the text format
        #[arg(long)]
        dot: bool,
    },
    /// Print the transition monoid: elements, witnesses, table, periodic elements
    Monoid {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_MONOID_CAP)]
        monoid_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an FC sentence on a word
    FcEval {
        /// The model word (may be empty)
        #[arg(long, default_value = "")]
        word: String,
        /// FC formula text
        #[arg(long)]
        formula: String,
    },
    /// Compile an SF(R) expression to an FC sentence
    FcCompile {
        /// SF(R) expression
        #[arg(long)]
        regex: String,
        #[arg(long, default_value = "ab")]
        alphabet: String,
    },
    /// Run the three decision methods against each other on a corpus
    Crosscheck {
        /// Check every language recognizable with up to this many states
        #[arg(long)]
        max_states: Option<usize>,
        /// Additionally check this many seeded random machines
        #[arg(long)]
        random: Option<usize>,
        /// State count for the random machines
        #[arg(long, default_value_t = 5)]
        states: usize,
        /// Base seed for the random machines
        #[arg(long, env = "FCREG_SEED", default_value_t = 0)]
        seed: u64,
        /// Word-length bound for the brute-force consistency check (0 skips it)
        #[arg(long, default_value_t = 3)]
        word_bound: usize,
        #[arg(long, default_value = "ab")]
        alphabet: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
        #[arg(long, default_value_t = DEFAULT_MONOID_CAP)]
        monoid_cap: usize,
    },
    /// List the accepted words up to a length bound
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_alphabet(letters: &str) -> Result<Alphabet> {
    Alphabet::new(letters.chars()).map_err(|e| anyhow!("bad alphabet `{letters}`: {e}"))
}

/// Loads the DFA plus a human-readable descriptor of where it came from.
fn load_input(input: &InputArgs) -> Result<(Dfa, String)> {
    match (&input.file, &input.regex) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let dfa = parse_dfa(&text, input.complete)
                .with_context(|| format!("cannot parse {}", path.display()))?;
            Ok((dfa, path.display().to_string()))
        }
        (None, Some(expr)) => {
            let alphabet = parse_alphabet(&input.alphabet)?;
            let parsed = parse_sfr(expr, &alphabet)
                .with_context(|| format!("cannot parse expression `{expr}`"))?;
            let dfa = compile_sfr(&parsed, &alphabet)?;
            Ok((dfa, format!("regex:{expr}")))
        }
        (None, None) => bail!("pass a DFA file or --regex <EXPR>"),
        (Some(_), Some(_)) => unreachable!("clap rejects file together with --regex"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Decide { input, all, json, state_cap, monoid_cap } => {
            let (dfa, descriptor) = load_input(&input)?;
            let opts = DecideOptions { state_cap, monoid_cap, run_tracking_simulation: all };
            let report = decide_dfa(&dfa, &descriptor, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", output::render_report(&report));
            }
            if !report.methods_agree {
                eprintln!(
                    "error: decision methods disagree; this contradicts the characterization"
                );
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::from(u8::from(!report.fc_definable)))
        }
        Command::Minimize { input, dot } => {
            let (dfa, _) = load_input(&input)?;
            let minimal = dfa.minimize();
            if dot {
                print!("{}", output::render_dot(&minimal));
            } else {
                print!("{}", dfa_to_text(&minimal));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Monoid { input, monoid_cap, json } => {
            let (dfa, _) = load_input(&input)?;
            let minimal = dfa.minimize();
            let m = TransitionMonoid::build(&minimal, monoid_cap)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&output::monoid_json(&m))?);
            } else {
                print!("{}", output::render_monoid(&m));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FcEval { word, formula } => {
            let phi = parse_fc(&formula).with_context(|| "cannot parse the formula")?;
            let free = phi.free_variables();
            if !free.is_empty() {
                eprintln!(
                    "warning: formula has free variables: {}",
                    free.into_iter().collect::<Vec<_>>().join(", ")
                );
            }
            let value = eval_fc(&word, &phi)?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::FcCompile { regex, alphabet } => {
            let alphabet = parse_alphabet(&alphabet)?;
            let expr = parse_sfr(&regex, &alphabet)
                .with_context(|| format!("cannot parse expression `{regex}`"))?;
            println!("{}", compile_sfr_to_fc(&expr));
            Ok(ExitCode::SUCCESS)
        }
        Command::Crosscheck {
            max_states,
            random,
            states,
            seed,
            word_bound,
            alphabet,
            json,
            state_cap,
            monoid_cap,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            if max_states.is_none() && random.is_none() {
                bail!("pass --max-states and/or --random");
            }
            let mut machines: Vec<(String, Dfa)> = Vec::new();
            if let Some(n) = max_states {
                let corpus = oracle::enumerate_minimal_dfas(&alphabet, n)?;
                for (i, d) in corpus.members.into_iter().enumerate() {
                    machines.push((format!("corpus/{i}"), d));
                }
            }
            if let Some(count) = random {
                for i in 0..count as u64 {
                    let d = oracle::random_minimal_dfa(&alphabet, states, seed + i);
                    machines.push((format!("random/seed-{}", seed + i), d));
                }
            }
            let summary = crosscheck(&machines, word_bound, state_cap, monoid_cap)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&summary)?);
            } else {
                print!("{}", output::render_crosscheck(&summary));
            }
            if summary.disagreements.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "error: {} instance(s) with disagreeing methods",
                    summary.disagreements.len()
                );
                Ok(ExitCode::from(2))
            }
        }
        Command::Enumerate { input, max_len, json } => {
            let (dfa, _) = load_input(&input)?;
            let words = dfa.enumerate_language(max_len);
            if json {
                println!("{}", serde_json::to_string(&words)?);
            } else {
                for w in words {
                    println!("{w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Debug, serde::Serialize)]
pub struct InstanceVerdict {
    pub id: String,
    pub states: usize,
    pub loop_step: bool,
    pub group_primitive: bool,
    pub algorithm1: bool,
    /// Whether the bounded brute-force search found a witness, when run.
    pub brute_force: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, serde::Serialize)]
pub struct Disagreement {
    pub id: String,
    pub dfa: String,
    pub report: DecisionReport,
    pub brute_force_witness: Option<loopstep::LoopStepWitness>,
}

#[derive(Debug, serde::Serialize)]
pub struct CrosscheckSummary {
    pub total: usize,
    pub agreed: usize,
    pub disagreements: Vec<Disagreement>,
    pub instances: Vec<InstanceVerdict>,
}

fn crosscheck(
    machines: &[(String, Dfa)],
    word_bound: usize,
    state_cap: usize,
    monoid_cap: usize,
) -> Result<CrosscheckSummary> {
    let mut instances = Vec::with_capacity(machines.len());
    let mut disagreements = Vec::new();
    for (id, d) in machines {
        let detected = loopstep::detect_loop_step(d, state_cap)?;
        let simulated = loopstep::algorithm1_exact(d, d.state_count(), state_cap)?;
        let primitivity = monoid::is_group_primitive(d, monoid_cap)?;
        let brute = (word_bound > 0).then(|| oracle::brute_force_loop_step(d, word_bound));
        let has_cycle = detected.is_some();

        let witness_ok = detected.as_ref().is_none_or(|w| loopstep::verify_witness(d, w));
        let brute_consistent = match &brute {
            // a brute-force witness means exact detection must find one too
            Some(Some(_)) => has_cycle,
            _ => true,
        };
        let agree = witness_ok
            && has_cycle == simulated
            && has_cycle == !primitivity.is_primitive()
            && brute_consistent;

        instances.push(InstanceVerdict {
            id: id.clone(),
            states: d.state_count(),
            loop_step: has_cycle,
            group_primitive: primitivity.is_primitive(),
            algorithm1: simulated,
            brute_force: brute.as_ref().map(|b| b.is_some()),
            agree,
        });
        if !agree {
            let opts = DecideOptions { state_cap, monoid_cap, run_tracking_simulation: true };
            disagreements.push(Disagreement {
                id: id.clone(),
                dfa: dfa_to_text(d),
                report: decide_dfa(d, id, &opts)?,
                brute_force_witness: brute.flatten(),
            });
        }
    }
    let agreed = instances.iter().filter(|v| v.agree).count();
    Ok(CrosscheckSummary { total: instances.len(), agreed, disagreements, instances })
}
