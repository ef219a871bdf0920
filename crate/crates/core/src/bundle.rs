//! Single-graph analysis: summary, spectrum and every check in one value.

use serde::{Deserialize, Serialize};

use crate::brouwer::{brouwer_from_spectrum, BrouwerReport};
use crate::error::Result;
use crate::graph::ThresholdGraph;
use crate::interlace::{
    check_append_one, check_complement_interlacing, check_condensed_interlacing,
    check_degree_interlacing, InterlacingReport, CHECK_TOLERANCE,
};
use crate::spectra::{full_spectrum, Spectrum};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    /// Canonical `0`/`1` sequence.
    pub sequence: String,
    /// Run-length form, e.g. `0^2,1^2,0,1^3`.
    pub run_length: String,
    /// `[b_k, q_k]` pairs.
    pub blocks: Vec<(u8, usize)>,
    pub n: usize,
    pub r: usize,
    pub kbar: usize,
    pub block_degrees: Vec<usize>,
    /// Ascending.
    pub degrees: Vec<usize>,
    pub edge_count: usize,
}

impl GraphSummary {
    pub fn new(g: &ThresholdGraph) -> Self {
        Self {
            sequence: g.bit_string(),
            run_length: g.to_string(),
            blocks: g.blocks().iter().map(|b| (b.b() as u8, b.size)).collect(),
            n: g.n(),
            r: g.r(),
            kbar: g.kbar(),
            block_degrees: g.degrees().block_degrees.clone(),
            degrees: g.degrees().degree_sequence.clone(),
            edge_count: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzeOptions {
    pub tol: f64,
    /// Also run the append-one check (two more spectra).
    pub append_one: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { tol: CHECK_TOLERANCE, append_one: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisBundle {
    pub graph: GraphSummary,
    pub pass: bool,
    pub spectrum: Spectrum,
    /// T8, T9, L5, L7 and optionally T11; empty for a single vertex.
    pub interlacing: Vec<InterlacingReport>,
    pub brouwer: BrouwerReport,
}

pub fn analyze(g: &ThresholdGraph, options: AnalyzeOptions) -> Result<AnalysisBundle> {
    let tol = options.tol;
    let spectrum = full_spectrum(g)?;
    let mut interlacing = Vec::new();
    if g.n() >= 2 {
        interlacing.push(check_condensed_interlacing(g, tol)?);
        interlacing.push(check_degree_interlacing(g, tol)?);
        let complement = check_complement_interlacing(g, tol)?;
        interlacing.push(complement.signless);
        interlacing.push(complement.condensed);
        if options.append_one {
            interlacing.push(check_append_one(g, tol)?);
        }
    }
    let brouwer = brouwer_from_spectrum(g, &spectrum, tol);
    let pass = interlacing.iter().all(|r| r.pass) && brouwer.pass && brouwer.lemmas_pass();
    Ok(AnalysisBundle {
        graph: GraphSummary::new(g),
        pass,
        spectrum,
        interlacing,
        brouwer,
    })
}
