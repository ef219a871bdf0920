use crate::error::{Error, Result};
use crate::graph::ThresholdGraph;

/// Dense real symmetric matrix. Writes go to both triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, data: vec![0.0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from rows, using the upper triangle and checking symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidArgument("matrix must have order >= 1".into()));
        }
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} entries, expected {order}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::NonFinite { row: i + 1, col: j + 1 });
                }
                if j < i && v != rows[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "entries ({}, {}) and ({}, {}) differ",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                if j >= i {
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 0-based access.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.order).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest absolute entrywise difference; `None` on order mismatch.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> Option<f64> {
        (self.order == other.order).then(|| {
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }
}

/// Signless Laplacian `Q = D + A` with exact integer entries.
pub fn assemble_q(g: &ThresholdGraph) -> SymMatrix {
    let n = g.n();
    let mut q = SymMatrix::zeros(n);
    let mut start = 0;
    for (k, blk) in g.blocks().iter().enumerate() {
        for v in start..start + blk.size {
            q.set(v, v, g.p(k + 1) as f64);
            if blk.bit {
                for u in 0..v {
                    q.set(u, v, 1.0);
                }
            }
        }
        start += blk.size;
    }
    q
}

/// Condensed signless Laplacian `C(G)` of order `r`.
///
/// Diagonal `p_k + b_k (q_k - 1)`, off-diagonal `(i, j)` with `i < j`
/// equal to `b_j sqrt(q_i q_j)`, one square root per entry.
pub fn assemble_condensed(g: &ThresholdGraph) -> SymMatrix {
    let r = g.r();
    let blocks = g.blocks();
    let mut c = SymMatrix::zeros(r);
    for (i, bi) in blocks.iter().enumerate() {
        c.set(i, i, (g.p(i + 1) + bi.b() * (bi.size - 1)) as f64);
        for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
            if bj.bit {
                c.set(i, j, ((bi.size * bj.size) as f64).sqrt());
            }
        }
    }
    c
}

/// `C(complement) = (n - 2) I + q̂ q̂ᵀ - C` with `q̂ = (sqrt(q_1), ..., sqrt(q_r))`.
pub fn condensed_complement(c: &SymMatrix, sizes: &[usize]) -> Result<SymMatrix> {
    let r = c.order();
    if sizes.len() != r {
        return Err(Error::DimensionMismatch { matrix: r, blocks: sizes.len() });
    }
    let n: usize = sizes.iter().sum();
    let shift = n as f64 - 2.0;
    let mut out = SymMatrix::zeros(r);
    for i in 0..r {
        for j in i..r {
            let outer = ((sizes[i] * sizes[j]) as f64).sqrt();
            let diag = if i == j { shift } else { 0.0 };
            out.set(i, j, diag + outer - c.get(i, j));
        }
    }
    Ok(out)
}

/// `Q(K_n) = (n - 2) I + 1 1ᵀ`.
pub fn complete_q(n: usize) -> SymMatrix {
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, if i == j { n as f64 - 1.0 } else { 1.0 });
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Block;
    use crate::sequence::parse_sequence;

    fn graph(text: &str) -> ThresholdGraph {
        ThresholdGraph::normalize(&parse_sequence(text).unwrap())
    }

    #[test]
    fn q_small_graphs() {
        assert_eq!(assemble_q(&graph("11")).rows(), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        assert_eq!(assemble_q(&graph("000")), SymMatrix::zeros(3));
        let q = assemble_q(&graph("0011"));
        let expected = vec![
            vec![2.0, 0.0, 1.0, 1.0],
            vec![0.0, 2.0, 1.0, 1.0],
            vec![1.0, 1.0, 3.0, 1.0],
            vec![1.0, 1.0, 1.0, 3.0],
        ];
        assert_eq!(q.rows(), expected);
    }

    #[test]
    fn condensed_small_graphs() {
        for n in 1..6 {
            let k = ThresholdGraph::from_blocks(vec![Block::new(true, n)]).unwrap();
            assert_eq!(assemble_condensed(&k).rows(), vec![vec![2.0 * n as f64 - 2.0]]);
        }
        let s3 = 3f64.sqrt();
        assert_eq!(
            assemble_condensed(&graph("0001")).rows(),
            vec![vec![1.0, s3], vec![s3, 3.0]]
        );
        assert_eq!(
            assemble_condensed(&graph("0011")).rows(),
            vec![vec![2.0, 2.0], vec![2.0, 4.0]]
        );
    }

    #[test]
    fn condensed_complement_small_cases() {
        let k2 = SymMatrix::from_rows(&[vec![2.0]]).unwrap();
        assert_eq!(condensed_complement(&k2, &[2]).unwrap().rows(), vec![vec![0.0]]);

        let c = assemble_condensed(&graph("0011"));
        let cc = condensed_complement(&c, &[2, 2]).unwrap();
        assert_eq!(cc.rows(), vec![vec![2.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(cc, assemble_condensed(&graph("1100")));

        assert_eq!(
            condensed_complement(&c, &[4]),
            Err(Error::DimensionMismatch { matrix: 2, blocks: 1 })
        );
    }

    #[test]
    fn complement_identity_on_q() {
        let g = graph("001101010111");
        let q = assemble_q(&g);
        let qc = assemble_q(&g.complement());
        let k = complete_q(12);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(q.get(i, j) + qc.get(i, j), k.get(i, j));
            }
        }
    }

    #[test]
    fn from_rows_validation() {
        assert!(SymMatrix::from_rows(&[]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
        assert_eq!(
            SymMatrix::from_rows(&[vec![f64::NAN]]),
            Err(Error::NonFinite { row: 1, col: 1 })
        );
    }
}
