//! Creation sequences in their raw (pre-normalization) form.
//!
//! Two text forms are accepted:
//!
//! ```text
//! 001101010111              one character per vertex, leftmost first
//! 0^2,1^2,0,1,0,1,0,1^3     comma-separated run-length tokens `b` or `b^q`
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// Binary creation sequence, leftmost bit = first vertex added.
///
/// Bit `true` adds a dominating vertex, `false` an isolated one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawSequence {
    bits: Vec<bool>,
}

impl RawSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Appends one vertex.
    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }
}

impl fmt::Display for RawSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses the plain `0`/`1` form.
pub fn parse_raw(text: &str) -> Result<RawSequence> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bits = text
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            found => Err(Error::InvalidChar { position: i + 1, found }),
        })
        .collect::<Result<Vec<_>>>()?;
    RawSequence::new(bits)
}

/// Parses the run-length form, e.g. `0^2,1^2,0,1^3`.
pub fn parse_run_length(text: &str) -> Result<RawSequence> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut bits = Vec::new();
    let mut offset = 0;
    for raw_token in text.split(',') {
        let token_pos = offset + 1;
        offset += raw_token.chars().count() + 1;
        let token = raw_token.trim();
        let bad = || Error::BadToken {
            position: token_pos,
            token: raw_token.to_string(),
        };
        let (digit, count) = match token.split_once('^') {
            Some((d, q)) => (d, q.parse::<usize>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let bit = match digit {
            "0" => false,
            "1" => true,
            _ => return Err(bad()),
        };
        if count == 0 {
            return Err(bad());
        }
        bits.extend(std::iter::repeat_n(bit, count));
    }
    RawSequence::new(bits)
}

/// Accepts either text form; run-length is detected by `^` or `,`.
pub fn parse_sequence(text: &str) -> Result<RawSequence> {
    let text = text.trim();
    if text.contains(['^', ',']) {
        parse_run_length(text)
    } else {
        parse_raw(text)
    }
}
