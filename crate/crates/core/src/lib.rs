//! Threshold graphs and their signless Laplacian spectra.
//!
//! A threshold graph is grown from a binary creation sequence: `0` adds an
//! isolated vertex, `1` a dominating one. This crate parses such sequences,
//! builds the signless Laplacian `Q = D + A` and its condensed `r x r` form,
//! computes spectra two independent ways (closed-form block eigenvalues
//! merged with the condensed matrix, and a dense Jacobi solve of `Q`), and
//! checks the degree/eigenvalue interlacing chains and the bound
//! `S_k <= |E| + k(k+1)/2` on the sum of the `k` largest eigenvalues.
//!
//! ```
//! use threshold_spectra::{parse_sequence, ThresholdGraph, full_spectrum};
//!
//! let g = ThresholdGraph::normalize(&parse_sequence("0001").unwrap());
//! let spectrum = full_spectrum(&g).unwrap();
//! assert!((spectrum.max() - 4.0).abs() < 1e-12);
//! ```

pub mod brouwer;
pub mod bundle;
pub mod enumerate;
pub mod error;
pub mod ferrers;
pub mod format;
pub mod graph;
pub mod interlace;
pub mod sequence;
pub mod spectra;
pub mod sweep;

pub use brouwer::{check_brouwer, check_lemma14, check_lemma15, partial_sums, BrouwerReport, Lemma14Status};
pub use bundle::{analyze, AnalysisBundle, AnalyzeOptions, GraphSummary};
pub use enumerate::{enumerate, graph_at, graph_count, Enumeration};
pub use error::{Error, Result};
pub use ferrers::ferrers;
pub use graph::{Block, DegreeProfile, ThresholdGraph};
pub use interlace::{
    check_append_one, check_complement_interlacing, check_condensed_interlacing,
    check_degree_interlacing, ChainLink, InterlacingReport, TheoremId, CHECK_TOLERANCE,
};
pub use sequence::{parse_raw, parse_run_length, parse_sequence, RawSequence};
pub use spectra::{
    assemble_condensed, assemble_q, condensed_complement, direct_eigenpairs, eigensolve,
    full_spectrum, Provenance, Spectrum, SymMatrix,
};
pub use sweep::{verify, Check, SweepConfig, SweepRow, SweepSummary};
