//! Closed-form eigenpairs of `Q(G)` supported inside single blocks.
//!
//! Block `k` contributes the eigenvalue `p_k - b_k` with multiplicity
//! `q_k - 1`. Its `j`-th vector (`j = 1..q_k-1`) has entries `1/j` on the
//! first `j` positions of the block, `-1` on position `j + 1`, and zeros
//! elsewhere; these vectors are pairwise orthogonal.

use serde::{Deserialize, Serialize};

use crate::graph::ThresholdGraph;

/// Sparse vector with 1-based positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseVector {
    pub entries: Vec<(usize, f64)>,
}

impl SparseVector {
    pub fn to_dense(&self, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n];
        for &(pos, v) in &self.entries {
            out[pos - 1] = v;
        }
        out
    }

    pub fn dot(&self, other: &SparseVector) -> f64 {
        self.entries
            .iter()
            .filter_map(|&(i, a)| {
                other
                    .entries
                    .iter()
                    .find(|&&(j, _)| j == i)
                    .map(|&(_, b)| a * b)
            })
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectBlock {
    /// 1-based block index.
    pub block: usize,
    /// `p_k - b_k`.
    pub eigenvalue: i64,
    pub vectors: Vec<SparseVector>,
}

impl DirectBlock {
    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }
}

/// Direct eigenpairs of every block with `q_k >= 2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectEigenpairs {
    pub blocks: Vec<DirectBlock>,
}

impl DirectEigenpairs {
    /// Total number of direct eigenvalues, `n - r`.
    pub fn count(&self) -> usize {
        self.blocks.iter().map(DirectBlock::multiplicity).sum()
    }
}

pub fn direct_eigenpairs(g: &ThresholdGraph) -> DirectEigenpairs {
    let mut start = 0;
    let mut blocks = Vec::new();
    for (k, blk) in g.blocks().iter().enumerate() {
        if blk.size >= 2 {
            let vectors = (1..blk.size)
                .map(|j| {
                    let lead = 1.0 / j as f64;
                    let mut entries: Vec<(usize, f64)> =
                        (1..=j).map(|i| (start + i, lead)).collect();
                    entries.push((start + j + 1, -1.0));
                    SparseVector { entries }
                })
                .collect();
            blocks.push(DirectBlock {
                block: k + 1,
                eigenvalue: g.p(k + 1) as i64 - blk.b() as i64,
                vectors,
            });
        }
        start += blk.size;
    }
    DirectEigenpairs { blocks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;
    use crate::spectra::matrix::assemble_q;

    fn graph(text: &str) -> ThresholdGraph {
        ThresholdGraph::normalize(&parse_sequence(text).unwrap())
    }

    fn values(d: &DirectEigenpairs) -> Vec<(usize, i64, usize)> {
        d.blocks
            .iter()
            .map(|b| (b.block, b.eigenvalue, b.multiplicity()))
            .collect()
    }

    #[test]
    fn complete_graph() {
        for n in 2..8 {
            let d = direct_eigenpairs(&graph(&"1".repeat(n)));
            assert_eq!(values(&d), vec![(1, n as i64 - 2, n - 1)]);
        }
    }

    #[test]
    fn twelve_vertex_graph() {
        let d = direct_eigenpairs(&graph("001101010111"));
        assert_eq!(values(&d), vec![(1, 7, 1), (2, 7, 1), (8, 10, 2)]);
        assert_eq!(d.count(), 12 - 8);
    }

    #[test]
    fn star() {
        let d = direct_eigenpairs(&graph("0001"));
        assert_eq!(values(&d), vec![(1, 1, 2)]);
        assert_eq!(
            d.blocks[0].vectors[1].entries,
            vec![(1, 0.5), (2, 0.5), (3, -1.0)]
        );
    }

    #[test]
    fn residuals_and_orthogonality() {
        let g = graph("0^4,1^3,0^2,1^5");
        let q = assemble_q(&g);
        for blk in direct_eigenpairs(&g).blocks {
            for (a, va) in blk.vectors.iter().enumerate() {
                let dense = va.to_dense(g.n());
                let qv = q.mul_vec(&dense);
                for (x, y) in qv.iter().zip(&dense) {
                    assert!((x - blk.eigenvalue as f64 * y).abs() <= 1e-12);
                }
                for vb in &blk.vectors[a + 1..] {
                    assert!(va.dot(vb).abs() <= 1e-12);
                }
            }
        }
    }
}
