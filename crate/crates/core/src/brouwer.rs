//! Partial eigenvalue sums and the bound `S_k <= |E| + k(k+1)/2`.
//!
//! Two integer audits of the degree sequence ride along: the degree
//! `d_{n-k̄} = k̄ - q_1 b_1` of the first zero block, and the lower bound
//! on `|E|` from the `k` largest degrees.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::format::sig12;
use crate::graph::ThresholdGraph;
use crate::spectra::{full_spectrum, Spectrum};

/// `m choose 2`, zero for `m < 2`.
fn choose2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// `S_k` for `k = 1..=n`: sums of the `k` largest eigenvalues.
pub fn partial_sums(spectrum: &Spectrum) -> Vec<f64> {
    spectrum
        .values
        .iter()
        .rev()
        .scan(0.0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrouwerEntry {
    pub k: usize,
    #[serde(serialize_with = "sig12")]
    pub partial_sum: f64,
    /// `|E| + k(k+1)/2`.
    pub bound: u64,
    #[serde(serialize_with = "sig12")]
    pub slack: f64,
    /// The slack as an integer when it lies within `1e-6` of one.
    pub certified_slack: Option<i64>,
}

/// Outcome of the `d_{n-k̄}` identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Lemma14Status {
    Holds { index: usize, degree: i64 },
    Fails { index: usize, degree: i64, expected: i64 },
    /// `k̄ = 0` or `k̄ = n`: there is no zero block or no one.
    NotApplicable,
}

impl Lemma14Status {
    pub fn is_failure(&self) -> bool {
        matches!(self, Lemma14Status::Fails { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrouwerReport {
    pub edge_count: usize,
    pub pass: bool,
    #[serde(serialize_with = "sig12")]
    pub min_slack: f64,
    /// `k` attaining `min_slack` (smallest such `k`).
    pub argmin_k: usize,
    pub entries: Vec<BrouwerEntry>,
    pub lemma14: Lemma14Status,
    /// `|E| - LHS` for `k = 1..=k̄`.
    pub lemma15: Vec<i64>,
}

impl BrouwerReport {
    pub fn lemmas_pass(&self) -> bool {
        !self.lemma14.is_failure() && self.lemma15.iter().all(|&s| s >= 0)
    }

    pub fn partial_sums(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.partial_sum).collect()
    }

    /// Smallest Lemma-15 slack, if any `k` was checked.
    pub fn lemma15_min(&self) -> Option<i64> {
        self.lemma15.iter().copied().min()
    }
}

/// Checks `S_k <= |E| + k(k+1)/2` for every `k` using the merged spectrum.
pub fn check_brouwer(g: &ThresholdGraph, tol: f64) -> Result<BrouwerReport> {
    let spectrum = full_spectrum(g)?;
    Ok(brouwer_from_spectrum(g, &spectrum, tol))
}

pub fn brouwer_from_spectrum(g: &ThresholdGraph, spectrum: &Spectrum, tol: f64) -> BrouwerReport {
    let edges = g.edge_count() as u64;
    let entries: Vec<BrouwerEntry> = partial_sums(spectrum)
        .into_iter()
        .enumerate()
        .map(|(i, partial_sum)| {
            let k = i + 1;
            let bound = edges + (k * (k + 1) / 2) as u64;
            let slack = bound as f64 - partial_sum;
            let certified_slack =
                ((slack - slack.round()).abs() < 1e-6).then(|| (slack + 0.5).floor() as i64);
            BrouwerEntry { k, partial_sum, bound, slack, certified_slack }
        })
        .collect();
    let (argmin_k, min_slack) = entries
        .iter()
        .fold((0, f64::INFINITY), |best, e| if e.slack < best.1 { (e.k, e.slack) } else { best });
    BrouwerReport {
        edge_count: g.edge_count(),
        pass: min_slack >= -tol,
        min_slack,
        argmin_k,
        entries,
        lemma14: check_lemma14(g),
        lemma15: check_lemma15(g),
    }
}

/// `d_{n-k̄} = k̄ - q_1 b_1`, exact.
pub fn check_lemma14(g: &ThresholdGraph) -> Lemma14Status {
    let n = g.n();
    let kbar = g.kbar();
    if kbar == 0 || kbar == n {
        return Lemma14Status::NotApplicable;
    }
    let first = g.block(1);
    let index = n - kbar;
    let degree = g.degrees().d(index) as i64;
    let expected = kbar as i64 - (first.size * first.b()) as i64;
    if degree == expected {
        Lemma14Status::Holds { index, degree }
    } else {
        Lemma14Status::Fails { index, degree, expected }
    }
}

/// `|E| - [sum_{i>n-k} d_i - C(k,2) + C(k̄-k,2) + q_1 (k̄-k)(1-b_1)]` for `k = 1..=k̄`.
pub fn check_lemma15(g: &ThresholdGraph) -> Vec<i64> {
    let n = g.n();
    let kbar = g.kbar() as i64;
    let first = g.block(1);
    let q1 = first.size as i64;
    let not_b1 = 1 - first.b() as i64;
    let edges = g.edge_count() as i64;
    let degrees = &g.degrees().degree_sequence;

    let mut top_sum = 0i64;
    (1..=kbar)
        .map(|k| {
            top_sum += degrees[n - k as usize] as i64;
            let lhs = top_sum - choose2(k) + choose2(kbar - k) + q1 * (kbar - k) * not_b1;
            edges - lhs
        })
        .collect()
}
