//! Exhaustive verification sweeps over all threshold graphs up to `max_n`.
//!
//! For each `n` the enumeration counter range is split into `jobs`
//! contiguous pieces, each checked on its own thread. Partial results are
//! merged with order-insensitive reductions (sums, and minima keyed by
//! `(value, n, counter)`), so the summary does not depend on `jobs`.

use std::fmt;
use std::str::FromStr;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::brouwer::check_brouwer;
use crate::enumerate::{enumerate, graph_at, Enumeration};
use crate::error::{Error, Result};
use crate::format::{sig12, sig12_opt};
use crate::graph::ThresholdGraph;
use crate::interlace::{
    check_append_one, check_complement_interlacing, check_condensed_interlacing,
    check_degree_interlacing, CHECK_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    T8,
    T9,
    L5,
    L7,
    T11,
    Brouwer,
    Lemmas,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::T8,
        Check::T9,
        Check::L5,
        Check::L7,
        Check::T11,
        Check::Brouwer,
        Check::Lemmas,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::T8 => "t8",
            Check::T9 => "t9",
            Check::L5 => "l5",
            Check::L7 => "l7",
            Check::T11 => "t11",
            Check::Brouwer => "brouwer",
            Check::Lemmas => "lemmas",
        }
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item.eq_ignore_ascii_case("all") {
                out.extend(Check::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument("no checks selected".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Check::ALL
            .into_iter()
            .find(|c| c.name() == lower)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub tol: f64,
    /// Keep one [`SweepRow`] per graph.
    pub collect_rows: bool,
}

impl SweepConfig {
    pub fn new(max_n: usize, checks: Vec<Check>) -> Self {
        Self { min_n: 2, max_n, checks, jobs: 1, tol: CHECK_TOLERANCE, collect_rows: false }
    }
}

/// Per-graph line of the CSV export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub sequence: String,
    pub kbar: usize,
    pub edges: usize,
    pub k_min_slack: usize,
    pub min_slack: f64,
    /// All selected checks passed on this graph.
    pub pass: bool,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str = "n,sequence,kbar,E,k_min_slack,min_slack,pass";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.sequence,
            self.kbar,
            self.edges,
            self.k_min_slack,
            crate::format::fmt_sig(self.min_slack),
            self.pass
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub n: usize,
    pub graphs: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: Check,
    pub graphs: u64,
    pub failures: u64,
    #[serde(serialize_with = "sig12_opt")]
    pub min_slack: Option<f64>,
    /// Graph attaining `min_slack`, in run-length form.
    pub min_slack_graph: Option<String>,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub sequence: String,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub min_n: usize,
    pub max_n: usize,
    #[serde(serialize_with = "sig12")]
    pub tolerance: f64,
    pub graphs: u64,
    pub failures: u64,
    pub pass: bool,
    pub per_n: Vec<SizeSummary>,
    pub per_check: Vec<CheckSummary>,
    pub first_counterexample: Option<Counterexample>,
}

/// `(n, counter)`, ordered like the enumeration.
type GraphId = (usize, u64);

#[derive(Debug, Clone, Default)]
struct CheckAcc {
    graphs: u64,
    failures: u64,
    min: Option<(f64, GraphId)>,
    first_failure: Option<GraphId>,
}

impl CheckAcc {
    fn record(&mut self, id: GraphId, slack: Option<f64>, pass: bool) {
        self.graphs += 1;
        if let Some(s) = slack {
            let better = match self.min {
                None => true,
                Some((m, mid)) => s.total_cmp(&m).then(id.cmp(&mid)).is_lt(),
            };
            if better {
                self.min = Some((s, id));
            }
        }
        if !pass {
            self.failures += 1;
            self.first_failure = Some(self.first_failure.map_or(id, |f| f.min(id)));
        }
    }

    fn merge(&mut self, other: CheckAcc) {
        self.graphs += other.graphs;
        self.failures += other.failures;
        if let Some((s, id)) = other.min {
            let better = match self.min {
                None => true,
                Some((m, mid)) => s.total_cmp(&m).then(id.cmp(&mid)).is_lt(),
            };
            if better {
                self.min = Some((s, id));
            }
        }
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

#[derive(Debug, Default)]
struct Partial {
    graphs: u64,
    failures: u64,
    checks: Vec<CheckAcc>,
    rows: Vec<SweepRow>,
}

/// Slack and verdict of one check on one graph.
fn run_check(check: Check, g: &ThresholdGraph, tol: f64) -> Result<(Option<f64>, bool)> {
    Ok(match check {
        Check::T8 => {
            let r = check_condensed_interlacing(g, tol)?;
            (Some(r.min_slack), r.pass)
        }
        Check::T9 => {
            let r = check_degree_interlacing(g, tol)?;
            (Some(r.min_slack), r.pass)
        }
        Check::L5 => {
            let r = check_complement_interlacing(g, tol)?.signless;
            (Some(r.min_slack), r.pass)
        }
        Check::L7 => {
            let r = check_complement_interlacing(g, tol)?.condensed;
            (Some(r.min_slack), r.pass)
        }
        Check::T11 => {
            let r = check_append_one(g, tol)?;
            (Some(r.min_slack), r.pass)
        }
        Check::Brouwer => {
            let r = check_brouwer(g, tol)?;
            (Some(r.min_slack), r.pass)
        }
        Check::Lemmas => {
            let r = check_brouwer(g, tol)?;
            (r.lemma15_min().map(|s| s as f64), r.lemmas_pass())
        }
    })
}

fn sweep_range(range: Enumeration, config: &SweepConfig) -> Result<Partial> {
    let n = range.n();
    let mut part = Partial {
        checks: vec![CheckAcc::default(); config.checks.len()],
        ..Default::default()
    };
    for (counter, g) in range {
        let id = (n, counter);
        let mut all_pass = true;
        for (acc, &check) in part.checks.iter_mut().zip(&config.checks) {
            let (slack, pass) = run_check(check, &g, config.tol)?;
            acc.record(id, slack, pass);
            all_pass &= pass;
        }
        part.graphs += 1;
        if !all_pass {
            part.failures += 1;
        }
        if config.collect_rows {
            let b = check_brouwer(&g, config.tol)?;
            part.rows.push(SweepRow {
                n,
                sequence: g.bit_string(),
                kbar: g.kbar(),
                edges: g.edge_count(),
                k_min_slack: b.argmin_k,
                min_slack: b.min_slack,
                pass: all_pass,
            });
        }
    }
    Ok(part)
}

fn sweep_n(n: usize, config: &SweepConfig) -> Result<Partial> {
    let pieces = enumerate(n)?.split(config.jobs.max(1));
    let results: Vec<Result<Partial>> = if pieces.len() <= 1 {
        pieces.into_iter().map(|p| sweep_range(p, config)).collect()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = pieces
                .into_iter()
                .map(|p| scope.spawn(move || sweep_range(p, config)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };

    let mut total = Partial {
        checks: vec![CheckAcc::default(); config.checks.len()],
        ..Default::default()
    };
    for part in results {
        let part = part?;
        total.graphs += part.graphs;
        total.failures += part.failures;
        for (acc, other) in total.checks.iter_mut().zip(part.checks) {
            acc.merge(other);
        }
        total.rows.extend(part.rows);
    }
    Ok(total)
}

fn describe(id: GraphId) -> String {
    graph_at(id.0, id.1)
        .map(|g| g.bit_string())
        .unwrap_or_default()
}

/// Runs the selected checks on every graph with `min_n <= n <= max_n`.
pub fn verify(config: &SweepConfig) -> Result<(SweepSummary, Vec<SweepRow>)> {
    if config.min_n < 2 || config.max_n < config.min_n {
        return Err(Error::InvalidArgument(format!(
            "sweep range {}..={} must satisfy 2 <= min_n <= max_n",
            config.min_n, config.max_n
        )));
    }
    if config.checks.is_empty() {
        return Err(Error::InvalidArgument("no checks selected".into()));
    }

    let mut per_n = Vec::new();
    let mut checks = vec![CheckAcc::default(); config.checks.len()];
    let mut rows = Vec::new();
    let (mut graphs, mut failures) = (0, 0);
    for n in config.min_n..=config.max_n {
        let part = sweep_n(n, config)?;
        per_n.push(SizeSummary { n, graphs: part.graphs, failures: part.failures });
        graphs += part.graphs;
        failures += part.failures;
        for (acc, other) in checks.iter_mut().zip(part.checks) {
            acc.merge(other);
        }
        rows.extend(part.rows);
    }

    let first_counterexample = config
        .checks
        .iter()
        .zip(&checks)
        .filter_map(|(&check, acc)| acc.first_failure.map(|id| (id, check)))
        .min()
        .map(|(id, check)| Counterexample { n: id.0, sequence: describe(id), check });

    let per_check = config
        .checks
        .iter()
        .zip(checks)
        .map(|(&check, acc)| CheckSummary {
            check,
            graphs: acc.graphs,
            failures: acc.failures,
            min_slack: acc.min.map(|(s, _)| s),
            min_slack_graph: acc.min.map(|(_, id)| describe(id)),
            first_counterexample: acc.first_failure.map(describe),
        })
        .collect();

    let summary = SweepSummary {
        min_n: config.min_n,
        max_n: config.max_n,
        tolerance: config.tol,
        graphs,
        failures,
        pass: failures == 0,
        per_n,
        per_check,
        first_counterexample,
    };
    Ok((summary, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_checks() {
        assert_eq!(Check::parse_list("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            Check::parse_list("brouwer, T8,t8").unwrap(),
            vec![Check::T8, Check::Brouwer]
        );
        assert!(Check::parse_list("t8,t10").is_err());
        assert!(Check::parse_list("").is_err());
    }

    #[test]
    fn two_vertex_sweep() {
        let (s, _) = verify(&SweepConfig::new(2, Check::ALL.to_vec())).unwrap();
        assert_eq!(s.graphs, 2);
        assert!(s.pass);
        assert!(s.first_counterexample.is_none());
    }

    #[test]
    fn jobs_do_not_change_summary() {
        let mut config = SweepConfig::new(8, Check::ALL.to_vec());
        config.collect_rows = true;
        let serial = verify(&config).unwrap();
        config.jobs = 5;
        let parallel = verify(&config).unwrap();
        assert_eq!(serial, parallel);
        assert_eq!(serial.0.graphs, (2..=8).map(|n| 1u64 << (n - 1)).sum::<u64>());
        assert_eq!(serial.1.len() as u64, serial.0.graphs);
    }

    #[test]
    fn failing_tolerance_reports_counterexample() {
        // a positive "tolerance" of -1 demands slack >= 1, which K_2 cannot meet
        let mut config = SweepConfig::new(3, vec![Check::T8]);
        config.tol = -1.0;
        let (s, _) = verify(&config).unwrap();
        assert!(!s.pass);
        let ce = s.first_counterexample.unwrap();
        assert_eq!(ce.n, 2);
        assert_eq!(ce.check, Check::T8);
    }

    #[test]
    fn rejects_bad_range() {
        assert!(verify(&SweepConfig::new(1, vec![Check::T8])).is_err());
        assert!(verify(&SweepConfig::new(3, vec![])).is_err());
    }

    #[test]
    fn csv_row() {
        let row = SweepRow {
            n: 4,
            sequence: "0001".into(),
            kbar: 1,
            edges: 3,
            k_min_slack: 1,
            min_slack: 0.0,
            pass: true,
        };
        assert_eq!(row.to_csv(), "4,0001,1,3,1,0,true");
    }
}
