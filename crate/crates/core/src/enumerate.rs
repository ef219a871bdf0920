//! Exhaustive enumeration of threshold graphs on `n` vertices.
//!
//! Graph number `c` (the counter) assigns bits `2..=n` of the creation
//! sequence as a big-endian binary number, bit 2 most significant; bit 1
//! is forced equal to bit 2. Counter ranges can be handed to separate
//! workers.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{Block, ThresholdGraph};

/// Largest `n` for which the counter fits in a `u64`.
pub const MAX_ENUMERATION_N: usize = 64;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("vertex count must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::InvalidArgument(format!(
            "vertex count {n} exceeds enumeration limit {MAX_ENUMERATION_N}"
        )));
    }
    Ok(())
}

/// Number of threshold graphs on `n` labelled-by-sequence vertices.
pub fn graph_count(n: usize) -> Result<u64> {
    check_n(n)?;
    Ok(if n == 1 { 1 } else { 1u64 << (n - 1) })
}

/// The graph with the given counter value.
///
/// For `n = 1` the only graph is the single block `(0, 1)`.
pub fn graph_at(n: usize, counter: u64) -> Result<ThresholdGraph> {
    let count = graph_count(n)?;
    if counter >= count {
        return Err(Error::InvalidArgument(format!(
            "counter {counter} out of range for n = {n}"
        )));
    }
    if n == 1 {
        return ThresholdGraph::from_blocks(vec![Block::new(false, 1)]);
    }
    let mut blocks: Vec<Block> = Vec::new();
    for pos in 1..n {
        let bit = (counter >> (n - 1 - pos)) & 1 == 1;
        // the forced first bit joins the block of bit 2
        let weight = if pos == 1 { 2 } else { 1 };
        match blocks.last_mut() {
            Some(last) if last.bit == bit => last.size += weight,
            _ => blocks.push(Block::new(bit, weight)),
        }
    }
    ThresholdGraph::from_blocks(blocks)
}

/// Counter value of a graph, the inverse of [`graph_at`].
pub fn counter_of(g: &ThresholdGraph) -> u64 {
    g.expand().bits()[1..]
        .iter()
        .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
}

/// Iterator over a counter range of the enumeration for a fixed `n`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    range: Range<u64>,
}

impl Enumeration {
    pub fn new(n: usize) -> Result<Self> {
        let count = graph_count(n)?;
        Ok(Self { n, range: 0..count })
    }

    /// A sub-range of the enumeration, clamped to the valid counters.
    pub fn range(n: usize, range: Range<u64>) -> Result<Self> {
        let count = graph_count(n)?;
        let end = range.end.min(count);
        Ok(Self { n, range: range.start.min(end)..end })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Splits into at most `parts` contiguous, non-empty ranges in order.
    pub fn split(&self, parts: usize) -> Vec<Enumeration> {
        let total = self.range.end - self.range.start;
        let parts = (parts.max(1) as u64).min(total.max(1));
        let chunk = total.div_ceil(parts);
        (0..parts)
            .map(|i| {
                let start = self.range.start + i * chunk;
                let end = (start + chunk).min(self.range.end);
                Enumeration { n: self.n, range: start.min(end)..end }
            })
            .filter(|e| !e.range.is_empty() || total == 0)
            .collect()
    }
}

impl Iterator for Enumeration {
    type Item = (u64, ThresholdGraph);

    fn next(&mut self) -> Option<Self::Item> {
        let counter = self.range.next()?;
        let g = graph_at(self.n, counter).expect("counter within range");
        Some((counter, g))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

/// All threshold graphs on `n` vertices in counter order.
pub fn enumerate(n: usize) -> Result<Enumeration> {
    Enumeration::new(n)
}
