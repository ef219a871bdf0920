use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::format::sig12_vec;
use crate::graph::ThresholdGraph;

use super::direct::direct_eigenpairs;
use super::jacobi::{self, DEFAULT_TOLERANCE};
use super::matrix::{assemble_condensed, SymMatrix};

/// Tolerance for matching the merged spectrum against a dense solve.
pub const MERGE_TOLERANCE: f64 = 1e-8;

/// Where an eigenvalue came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Closed-form value `p_k - b_k` of block `k` (1-based).
    Direct(usize),
    /// Eigenvalue of the condensed matrix.
    Condensed,
    /// Dense solve of a full matrix.
    Dense,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Direct(k) => write!(f, "direct:{k}"),
            Provenance::Condensed => f.write_str("condensed"),
            Provenance::Dense => f.write_str("dense"),
        }
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "condensed" => Ok(Provenance::Condensed),
            "dense" => Ok(Provenance::Dense),
            _ => s
                .strip_prefix("direct:")
                .and_then(|k| k.parse().ok())
                .map(Provenance::Direct)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown provenance {s:?}"))),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Provenance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn default_tolerance() -> f64 {
    MERGE_TOLERANCE
}

/// Ascending eigenvalues, each tagged with its source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub n: usize,
    #[serde(serialize_with = "sig12_vec")]
    pub values: Vec<f64>,
    pub provenance: Vec<Provenance>,
    #[serde(skip, default = "default_tolerance")]
    pub tolerance: f64,
}

impl Spectrum {
    /// Sorts `(value, provenance)` pairs; ties keep provenance order.
    pub fn from_tagged(mut tagged: Vec<(f64, Provenance)>, tolerance: f64) -> Self {
        tagged.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let (values, provenance): (Vec<_>, Vec<_>) = tagged.into_iter().unzip();
        Self { n: values.len(), values, provenance, tolerance }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i`, 1-based.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Groups consecutive values closer than `tolerance` as `(value, multiplicity)`.
    pub fn multiplicities(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((head, count)) if (v - *head).abs() <= self.tolerance => *count += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// Largest pairwise difference after sorting both; `None` on length mismatch.
    pub fn max_pairwise_diff(&self, other: &[f64]) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(other)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Dense solve, tagged [`Provenance::Dense`].
pub fn eigensolve(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    let values = jacobi::eigenvalues(m, tol)?;
    Ok(Spectrum::from_tagged(
        values.into_iter().map(|v| (v, Provenance::Dense)).collect(),
        MERGE_TOLERANCE,
    ))
}

/// Direct block eigenvalues merged with the eigenvalues of `C(G)`.
///
/// Coincident values stay separate multiset elements.
pub fn full_spectrum(g: &ThresholdGraph) -> Result<Spectrum> {
    let direct = direct_eigenpairs(g);
    let condensed = jacobi::eigenvalues(&assemble_condensed(g), DEFAULT_TOLERANCE)?;
    let mut tagged: Vec<(f64, Provenance)> = Vec::with_capacity(g.n());
    for blk in &direct.blocks {
        tagged.extend(
            std::iter::repeat_n((blk.eigenvalue as f64, Provenance::Direct(blk.block)), blk.multiplicity()),
        );
    }
    tagged.extend(condensed.into_iter().map(|v| (v, Provenance::Condensed)));
    debug_assert_eq!(tagged.len(), g.n());
    Ok(Spectrum::from_tagged(tagged, MERGE_TOLERANCE))
}
