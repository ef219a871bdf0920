//! Threshold graphs in normalized block form `b_1^{q_1} ... b_r^{q_r}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::RawSequence;

/// A maximal run of equal bits in the creation sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    /// `true` for dominating vertices.
    pub bit: bool,
    pub size: usize,
}

impl Block {
    pub fn new(bit: bool, size: usize) -> Self {
        Self { bit, size }
    }

    /// The bit as 0 or 1, for the arithmetic in the degree formulas.
    pub fn b(&self) -> usize {
        usize::from(self.bit)
    }
}

/// Degrees of a threshold graph, all exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// Common degree `p_k` of the vertices in block `k` (index `k - 1`).
    pub block_degrees: Vec<usize>,
    /// Ascending degree sequence `d_1 <= ... <= d_n`.
    pub degree_sequence: Vec<usize>,
    pub edge_count: usize,
}

impl DegreeProfile {
    fn from_blocks(blocks: &[Block]) -> Self {
        // ones_after[k] = sum_{h >= k} b_h q_h
        let mut ones_after = vec![0; blocks.len() + 1];
        for (k, blk) in blocks.iter().enumerate().rev() {
            ones_after[k] = ones_after[k + 1] + blk.b() * blk.size;
        }
        let mut prefix = 0;
        let block_degrees: Vec<usize> = blocks
            .iter()
            .enumerate()
            .map(|(k, blk)| {
                prefix += blk.size;
                if blk.bit {
                    prefix - 1 + ones_after[k + 1]
                } else {
                    ones_after[k]
                }
            })
            .collect();

        let mut degree_sequence: Vec<usize> = blocks
            .iter()
            .zip(&block_degrees)
            .flat_map(|(blk, &p)| std::iter::repeat_n(p, blk.size))
            .collect();
        degree_sequence.sort_unstable();
        let degree_sum: usize = degree_sequence.iter().sum();
        debug_assert_eq!(degree_sum % 2, 0);

        Self {
            block_degrees,
            degree_sequence,
            edge_count: degree_sum / 2,
        }
    }

    /// `d_i` with the 1-based index used in the interlacing chains.
    pub fn d(&self, i: usize) -> usize {
        self.degree_sequence[i - 1]
    }

    pub fn degree_sum(&self) -> usize {
        2 * self.edge_count
    }
}

/// A threshold graph given by its alternating block sequence.
///
/// Invariants: blocks alternate, every size is positive, and `q_1 >= 2`
/// whenever `n >= 2`. A single vertex is kept as the block `(b, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdGraph {
    blocks: Vec<Block>,
    n: usize,
    kbar: usize,
    degrees: DegreeProfile,
}

impl ThresholdGraph {
    /// Builds a graph from an already normalized block list.
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(k) = blocks.iter().position(|b| b.size == 0) {
            return Err(Error::InvalidArgument(format!("block {} is empty", k + 1)));
        }
        if let Some(k) = blocks.windows(2).position(|w| w[0].bit == w[1].bit) {
            return Err(Error::InvalidArgument(format!(
                "blocks {} and {} do not alternate",
                k + 1,
                k + 2
            )));
        }
        let n: usize = blocks.iter().map(|b| b.size).sum();
        if n >= 2 && blocks[0].size < 2 {
            return Err(Error::InvalidArgument(
                "first block must hold at least two vertices".into(),
            ));
        }
        let kbar = blocks.iter().map(|b| b.b() * b.size).sum();
        let degrees = DegreeProfile::from_blocks(&blocks);
        Ok(Self { blocks, n, kbar, degrees })
    }

    /// Overwrites the first bit with the second, then run-length encodes.
    pub fn normalize(seq: &RawSequence) -> Self {
        let bits = seq.bits();
        let mut blocks: Vec<Block> = Vec::new();
        for (i, &bit) in bits.iter().enumerate() {
            let bit = if i == 0 && bits.len() >= 2 { bits[1] } else { bit };
            match blocks.last_mut() {
                Some(last) if last.bit == bit => last.size += 1,
                _ => blocks.push(Block::new(bit, 1)),
            }
        }
        Self::from_blocks(blocks).expect("run-length encoding is normalized")
    }

    /// Canonical raw sequence (first bit equal to the second).
    pub fn expand(&self) -> RawSequence {
        let bits = self
            .blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.bit, b.size))
            .collect();
        RawSequence::new(bits).expect("graph has at least one vertex")
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> Block {
        self.blocks[k - 1]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.size).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    /// Number of ones in the creation sequence.
    pub fn kbar(&self) -> usize {
        self.kbar
    }

    pub fn zero_block_count(&self) -> usize {
        self.blocks.iter().filter(|b| !b.bit).count()
    }

    pub fn degrees(&self) -> &DegreeProfile {
        &self.degrees
    }

    /// `p_k`, 1-based.
    pub fn p(&self, k: usize) -> usize {
        self.degrees.block_degrees[k - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.edge_count
    }

    /// `n_k = q_1 + ... + q_k`; `n_0 = 0`.
    pub fn prefix_len(&self, k: usize) -> usize {
        self.blocks[..k].iter().map(|b| b.size).sum()
    }

    /// 1-based block index holding 1-based vertex `v`.
    pub fn block_of(&self, v: usize) -> Result<usize> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { index: v, n: self.n });
        }
        let mut end = 0;
        for (k, blk) in self.blocks.iter().enumerate() {
            end += blk.size;
            if v <= end {
                return Ok(k + 1);
            }
        }
        unreachable!("vertex index checked against n")
    }

    /// Edge test on 1-based vertices; the pair may be given in either order.
    pub fn is_edge(&self, i: usize, j: usize) -> Result<bool> {
        if i == j {
            self.block_of(i)?;
            return Err(Error::SamePair(i));
        }
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        self.block_of(lo)?;
        Ok(self.block(self.block_of(hi)?).bit)
    }

    /// Flips every block bit. Alternation and `q_1 >= 2` carry over.
    pub fn complement(&self) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block::new(!b.bit, b.size))
            .collect();
        Self::from_blocks(blocks).expect("complement of a normalized graph is normalized")
    }

    /// The graph with one dominating vertex appended to the creation sequence.
    pub fn append_one(&self) -> Self {
        let mut seq = self.expand();
        seq.push(true);
        Self::normalize(&seq)
    }

    /// Plain `0`/`1` form of the canonical sequence.
    pub fn bit_string(&self) -> String {
        self.expand().to_string()
    }
}

/// Run-length form, e.g. `0^2,1^2,0,1^3`.
impl fmt::Display for ThresholdGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let digit = if b.bit { '1' } else { '0' };
            if b.size == 1 {
                write!(f, "{digit}")?;
            } else {
                write!(f, "{digit}^{}", b.size)?;
            }
        }
        Ok(())
    }
}
