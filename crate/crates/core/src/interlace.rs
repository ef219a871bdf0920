//! Numeric audits of the interlacing chains.
//!
//! Every check produces an [`InterlacingReport`]: a list of inequalities
//! `lhs <= rhs`, each with its slack `rhs - lhs`. A report passes when the
//! smallest slack is at least `-tol`. Chains written with `>=` are stored
//! with the sides swapped so that the slack convention is uniform.
//!
//! | id    | matrices        | chain                                                       |
//! |-------|-----------------|-------------------------------------------------------------|
//! | `T8`  | `C(G)`          | eigenvalues of `C` against zero-block degrees and one-block degrees minus one |
//! | `T9`  | `Q(G)`          | eigenvalues of `Q` against the degree sequence              |
//! | `L5`  | `Q`, `Q̄`        | `λ(Q)` against `n - 2 - λ(Q̄)` reversed                      |
//! | `L7`  | `C`, `C̄`        | same chain for the condensed matrices                       |
//! | `T11` | `Q(G)`, `Q(G')` | `G'` = `G` with a dominating vertex appended                |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::sig12;
use crate::graph::ThresholdGraph;
use crate::spectra::{
    assemble_condensed, assemble_q, condensed_complement, eigenvalues, full_spectrum,
    DEFAULT_TOLERANCE,
};

/// Default slack tolerance for all theorem checks.
pub const CHECK_TOLERANCE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T8,
    T9,
    L5,
    L7,
    T11,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One inequality `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainLink {
    pub lhs: String,
    #[serde(serialize_with = "sig12")]
    pub lhs_value: f64,
    pub rhs: String,
    #[serde(serialize_with = "sig12")]
    pub rhs_value: f64,
    #[serde(serialize_with = "sig12")]
    pub slack: f64,
}

impl ChainLink {
    fn le(lhs: &Term, rhs: &Term) -> Self {
        Self {
            lhs: lhs.0.clone(),
            lhs_value: lhs.1,
            rhs: rhs.0.clone(),
            rhs_value: rhs.1,
            slack: rhs.1 - lhs.1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterlacingReport {
    pub theorem: TheoremId,
    pub pass: bool,
    #[serde(serialize_with = "sig12")]
    pub min_slack: f64,
    pub chain: Vec<ChainLink>,
}

impl InterlacingReport {
    fn new(theorem: TheoremId, chain: Vec<ChainLink>, tol: f64) -> Self {
        let min_slack = chain.iter().map(|l| l.slack).fold(f64::INFINITY, f64::min);
        Self { theorem, pass: min_slack >= -tol, min_slack, chain }
    }

    /// Links whose slack is below `-tol`.
    pub fn violations(&self, tol: f64) -> impl Iterator<Item = &ChainLink> {
        self.chain.iter().filter(move |l| l.slack < -tol)
    }
}

type Term = (String, f64);

fn term(label: impl Into<String>, value: f64) -> Term {
    (label.into(), value)
}

/// Consecutive terms read `t_0 <= t_1 <= ...`.
fn ascending(terms: &[Term]) -> Vec<ChainLink> {
    terms.windows(2).map(|w| ChainLink::le(&w[0], &w[1])).collect()
}

/// Consecutive terms read `t_0 >= t_1 >= ...`.
fn descending(terms: &[Term]) -> Vec<ChainLink> {
    terms.windows(2).map(|w| ChainLink::le(&w[1], &w[0])).collect()
}

fn require_two_vertices(g: &ThresholdGraph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::InvalidArgument(
            "interlacing checks need at least two vertices".into(),
        ));
    }
    Ok(())
}

/// Eigenvalues of `C(G)` against the block degrees.
///
/// With `z` zero blocks, `λ_1(C) .. λ_z(C)` interleave the zero-block
/// degrees in increasing order (starting from `0 <= λ_1(C)`), and
/// `λ_{z+1}(C) .. λ_r(C)` interleave the one-block degrees minus one.
pub fn check_condensed_interlacing(g: &ThresholdGraph, tol: f64) -> Result<InterlacingReport> {
    require_two_vertices(g)?;
    let r = g.r();
    let b1 = g.block(1).b();
    let br = g.block(r).b();
    let z = g.zero_block_count();
    assert_eq!(2 * z, r + 1 - br - b1, "zero-block count disagrees with alternation");

    let gamma = eigenvalues(&assemble_condensed(g), DEFAULT_TOLERANCE)?;
    let lambda = |i: usize| term(format!("λ{i}(C)"), gamma[i - 1]);

    // zero blocks have decreasing degree with the block index, one blocks increasing
    let zeros: Vec<usize> = (1..=r).rev().filter(|&k| !g.block(k).bit).collect();
    let ones: Vec<usize> = (1..=r).filter(|&k| g.block(k).bit).collect();

    let mut chain = Vec::with_capacity(2 * r);
    if z > 0 {
        let mut terms = vec![term("0", 0.0)];
        for (i, &k) in zeros.iter().enumerate() {
            terms.push(lambda(i + 1));
            terms.push(term(format!("p{k}"), g.p(k) as f64));
        }
        chain.extend(ascending(&terms));
    }
    if !ones.is_empty() {
        let mut terms = Vec::with_capacity(2 * ones.len());
        for (i, &k) in ones.iter().enumerate() {
            terms.push(term(format!("p{k}-1"), g.p(k) as f64 - 1.0));
            terms.push(lambda(z + i + 1));
        }
        chain.extend(ascending(&terms));
    }
    Ok(InterlacingReport::new(TheoremId::T8, chain, tol))
}

/// Eigenvalues of `Q(G)` against the ascending degree sequence.
///
/// The chain has `2n + 1` terms and `2n` comparisons:
///
/// ```text
/// λ_n >= d_n - 1 >= λ_{n-1} >= ... >= λ_{n+1-k̄} >= d_{n+1-k̄} - 1
///     >= d_{n-k̄} >= λ_{n-k̄} >= d_{n-k̄-1} >= ... >= d_1 >= λ_1 >= 0
/// ```
///
/// When `b_1 = 1` and `k̄ > q_1`, `λ_{n-k̄+q_1} >= d_{n-k̄+q_1}` is appended.
pub fn check_degree_interlacing(g: &ThresholdGraph, tol: f64) -> Result<InterlacingReport> {
    require_two_vertices(g)?;
    let spectrum = full_spectrum(g)?;
    let degrees = g.degrees();
    let n = g.n();
    let kbar = g.kbar();
    let lambda = |i: usize| term(format!("λ{i}"), spectrum.lambda(i));
    let d = |i: usize| degrees.d(i) as f64;

    let mut terms = Vec::with_capacity(2 * n + 1);
    for i in (n + 1 - kbar..=n).rev() {
        terms.push(lambda(i));
        terms.push(term(format!("d{i}-1"), d(i) - 1.0));
    }
    for i in (1..=n - kbar).rev() {
        terms.push(term(format!("d{i}"), d(i)));
        terms.push(lambda(i));
    }
    terms.push(term("0", 0.0));
    let mut chain = descending(&terms);

    let first = g.block(1);
    if first.bit && kbar > first.size {
        let i = n - kbar + first.size;
        chain.push(ChainLink::le(&term(format!("d{i}"), d(i)), &lambda(i)));
    }
    Ok(InterlacingReport::new(TheoremId::T9, chain, tol))
}

/// The complement chain for one matrix pair.
///
/// `values` and `complement_values` are ascending spectra of a matrix `X`
/// and of `shift I + z zᵀ - X`:
///
/// ```text
/// max{s - μ_m, 0} <= λ_1 <= s - μ_{m-1} <= λ_2 <= ... <= λ_{m-1} <= s - μ_1 <= min{s, λ_m}
/// ```
fn complement_chain(
    theorem: TheoremId,
    tag: &str,
    values: &[f64],
    complement_values: &[f64],
    shift: f64,
    tol: f64,
) -> InterlacingReport {
    let m = values.len();
    let lam = |i: usize| term(format!("λ{i}({tag})"), values[i - 1]);
    let mirrored = |j: usize| {
        term(
            format!("n-2-λ{j}({tag}')"),
            shift - complement_values[j - 1],
        )
    };

    let mut terms = vec![term(
        format!("max{{n-2-λ{m}({tag}'),0}}"),
        (shift - complement_values[m - 1]).max(0.0),
    )];
    if m == 1 {
        terms.push(lam(1));
    } else {
        for i in 1..m {
            terms.push(lam(i));
            terms.push(mirrored(m - i));
        }
        terms.push(term(
            format!("min{{n-2,λ{m}({tag})}}"),
            shift.min(values[m - 1]),
        ));
    }
    InterlacingReport::new(theorem, ascending(&terms), tol)
}

/// Both complement chains of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplementInterlacing {
    /// `Q(G)` against `Q(Ḡ)`, both from dense solves.
    pub signless: InterlacingReport,
    /// `C(G)` against `C̄ = (n-2) I + q̂ q̂ᵀ - C`.
    pub condensed: InterlacingReport,
}

pub fn check_complement_interlacing(
    g: &ThresholdGraph,
    tol: f64,
) -> Result<ComplementInterlacing> {
    require_two_vertices(g)?;
    let shift = g.n() as f64 - 2.0;

    let q = eigenvalues(&assemble_q(g), DEFAULT_TOLERANCE)?;
    let q_bar = eigenvalues(&assemble_q(&g.complement()), DEFAULT_TOLERANCE)?;
    let signless = complement_chain(TheoremId::L5, "Q", &q, &q_bar, shift, tol);

    let c = assemble_condensed(g);
    let c_bar = condensed_complement(&c, &g.block_sizes())?;
    let gamma = eigenvalues(&c, DEFAULT_TOLERANCE)?;
    let gamma_bar = eigenvalues(&c_bar, DEFAULT_TOLERANCE)?;
    let condensed = complement_chain(TheoremId::L7, "C", &gamma, &gamma_bar, shift, tol);

    Ok(ComplementInterlacing { signless, condensed })
}

/// Spectrum growth when a dominating vertex is appended:
/// `0 <= λ'_1 <= λ_1 + 1 <= λ'_2 <= ... <= λ_n + 1 <= λ'_{n+1}` followed by
/// `max{n + 1, λ_n + 2} <= λ'_{n+1}`.
pub fn check_append_one(g: &ThresholdGraph, tol: f64) -> Result<InterlacingReport> {
    require_two_vertices(g)?;
    let n = g.n();
    let before = full_spectrum(g)?;
    let after = full_spectrum(&g.append_one())?;
    let grown = |i: usize| term(format!("λ'{i}"), after.lambda(i));

    let mut terms = vec![term("0", 0.0)];
    for i in 1..=n {
        terms.push(grown(i));
        terms.push(term(format!("λ{i}+1"), before.lambda(i) + 1.0));
    }
    terms.push(grown(n + 1));
    let mut chain = ascending(&terms);

    let top = term(
        format!("max{{n+1,λ{n}+2}}"),
        (n as f64 + 1.0).max(before.lambda(n) + 2.0),
    );
    chain.push(ChainLink::le(&top, &grown(n + 1)));
    Ok(InterlacingReport::new(TheoremId::T11, chain, tol))
}
