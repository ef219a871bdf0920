//! `threshold-spectra`: analyze, render and exhaustively verify threshold graphs.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or sweep
//! cap exceeded, 3 the eigensolver did not converge.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use threshold_spectra::format::fmt_sig;
use threshold_spectra::spectra::{assemble_q, eigensolve, DEFAULT_TOLERANCE};
use threshold_spectra::{
    analyze, ferrers, full_spectrum, parse_sequence, verify, AnalyzeOptions, Check, Error,
    GraphSummary, SweepConfig, SweepRow, ThresholdGraph, CHECK_TOLERANCE,
};

const CAP_ENV: &str = "THRESHOLD_SPECTRA_MAX_N";
const DEFAULT_CAP: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "threshold-spectra", version, about = "Signless Laplacian spectra of threshold graphs")]
struct Cli {
    #[command(flatten)]
    output: OutputFlags,

    /// Slack tolerance for the inequality checks; a negative value demands that margin.
    #[arg(long, global = true, default_value_t = CHECK_TOLERANCE, allow_negative_numbers = true)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputFlags {
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectrum, interlacing chains and the partial-sum bound for one graph (JSON).
    Analyze {
        /// Creation sequence, e.g. `001101010111` or `0^2,1^2,0,1`.
        sequence: String,
        /// Also check appending a one.
        #[arg(long)]
        t11: bool,
    },
    /// Run checks over every graph with 2 <= n <= max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Comma-separated subset of t8,t9,l5,l7,t11,brouwer,lemmas, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Ferrers diagram of the degree sequence.
    Ferrers { sequence: String },
    /// Creation sequence of the complement.
    Complement { sequence: String },
    /// Eigenvalues with their source.
    Spectrum {
        sequence: String,
        /// Solve the full matrix instead of merging block values.
        #[arg(long)]
        dense: bool,
    },
}

enum Failure {
    Input(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn load(sequence: &str) -> Result<ThresholdGraph, Failure> {
    let raw = parse_sequence(sequence).map_err(|e| Failure::Input(format!("{sequence:?}: {e}")))?;
    Ok(ThresholdGraph::normalize(&raw))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn sweep_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{CAP_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    if !cli.tol.is_finite() {
        return Err(Failure::Input(format!("--tol must be finite, got {}", cli.tol)));
    }
    let OutputFlags { json, csv } = cli.output;
    match &cli.command {
        Command::Analyze { sequence, t11 } => {
            let g = load(sequence)?;
            let bundle = analyze(&g, AnalyzeOptions { tol: cli.tol, append_one: *t11 })?;
            let text = if csv {
                let mut out = String::from("k,partial_sum,bound,slack\n");
                for e in &bundle.brouwer.entries {
                    let _ = writeln!(out, "{},{},{},{}", e.k, fmt_sig(e.partial_sum), e.bound, fmt_sig(e.slack));
                }
                out
            } else {
                to_json(&bundle)
            };
            Ok(Outcome { text, pass: bundle.pass })
        }
        Command::Verify { max_n, checks, jobs } => {
            let cap = sweep_cap()?;
            if *max_n < 2 || *max_n > cap {
                return Err(Failure::Input(format!(
                    "--max-n must lie in 2..={cap} (raise the cap with {CAP_ENV})"
                )));
            }
            if *jobs == 0 {
                return Err(Failure::Input("--jobs must be at least 1".into()));
            }
            let config = SweepConfig {
                min_n: 2,
                max_n: *max_n,
                checks: Check::parse_list(checks)?,
                jobs: *jobs,
                tol: cli.tol,
                collect_rows: csv,
            };
            let (summary, rows) = verify(&config)?;
            let text = if csv {
                let mut out = format!("{}\n", SweepRow::CSV_HEADER);
                for row in &rows {
                    out.push_str(&row.to_csv());
                    out.push('\n');
                }
                out
            } else if json {
                to_json(&summary)
            } else {
                let mut out = String::new();
                for s in &summary.per_n {
                    let _ = writeln!(out, "n={:<3} graphs={:<6} failures={}", s.n, s.graphs, s.failures);
                }
                for c in &summary.per_check {
                    let _ = writeln!(
                        out,
                        "{:<8} failures={} min_slack={} at {}",
                        c.check,
                        c.failures,
                        c.min_slack.map_or("-".into(), fmt_sig),
                        c.min_slack_graph.as_deref().unwrap_or("-")
                    );
                }
                if let Some(ce) = &summary.first_counterexample {
                    let _ = writeln!(out, "counterexample: {} ({})", ce.sequence, ce.check);
                }
                let _ = writeln!(
                    out,
                    "{} graphs, {} failures: {}",
                    summary.graphs,
                    summary.failures,
                    if summary.pass { "PASS" } else { "FAIL" }
                );
                out
            };
            Ok(Outcome { text, pass: summary.pass })
        }
        Command::Ferrers { sequence } => {
            let g = load(sequence)?;
            let diagram = ferrers(&g);
            Ok(Outcome::ok(if json {
                to_json(&json!({
                    "sequence": g.bit_string(),
                    "rows": g.degrees().degree_sequence.iter().rev().collect::<Vec<_>>(),
                    "diagram": diagram,
                }))
            } else {
                diagram
            }))
        }
        Command::Complement { sequence } => {
            let c = load(sequence)?.complement();
            Ok(Outcome::ok(if json {
                to_json(&GraphSummary::new(&c))
            } else {
                format!("{}\n", c.bit_string())
            }))
        }
        Command::Spectrum { sequence, dense } => {
            let g = load(sequence)?;
            let spectrum = if *dense {
                eigensolve(&assemble_q(&g), DEFAULT_TOLERANCE)?
            } else {
                full_spectrum(&g)?
            };
            Ok(Outcome::ok(if json {
                to_json(&spectrum)
            } else {
                let mut out = String::new();
                if csv {
                    out.push_str("i,value,provenance\n");
                }
                let sep = if csv { "," } else { "\t" };
                for (i, (v, p)) in spectrum.values.iter().zip(&spectrum.provenance).enumerate() {
                    let _ = writeln!(out, "{}{sep}{}{sep}{}", i + 1, fmt_sig(*v), p);
                }
                out
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
