//! Text Ferrers diagram of the degree sequence.
//!
//! One row per vertex in descending degree order. Each row starts with a
//! fixed-width gutter naming the block the vertex belongs to (`b8`), then
//! `" | "`, then one [`BOX_GLYPH`] per unit of degree:
//!
//! ```text
//! b2 | ###
//! b1 | #
//! b1 | #
//! b1 | #
//! ```
//!
//! Rows of vertices with equal degree always come from the same block
//! (block degrees are pairwise distinct), so no tie-breaking is visible.

use crate::graph::ThresholdGraph;

pub const BOX_GLYPH: char = '#';

/// Row lengths of the diagram, i.e. the degrees in descending order.
pub fn row_lengths(g: &ThresholdGraph) -> Vec<usize> {
    rows(g).into_iter().map(|(_, d)| d).collect()
}

fn rows(g: &ThresholdGraph) -> Vec<(usize, usize)> {
    let mut rows: Vec<(usize, usize)> = g
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(k, blk)| std::iter::repeat_n((k + 1, g.p(k + 1)), blk.size))
        .collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    rows
}

/// Renders the diagram; every line ends with `\n`.
pub fn ferrers(g: &ThresholdGraph) -> String {
    let width = format!("b{}", g.r()).len();
    let mut out = String::new();
    for (block, degree) in rows(g) {
        let label = format!("b{block}");
        let line = format!(
            "{label:<width$} | {}",
            BOX_GLYPH.to_string().repeat(degree)
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;

    fn graph(text: &str) -> ThresholdGraph {
        ThresholdGraph::normalize(&parse_sequence(text).unwrap())
    }

    #[test]
    fn regular_and_star() {
        assert_eq!(row_lengths(&graph("111")), vec![2, 2, 2]);
        assert_eq!(row_lengths(&graph("0001")), vec![3, 1, 1, 1]);
        assert_eq!(ferrers(&graph("0001")), "b2 | ###\nb1 | #\nb1 | #\nb1 | #\n");
    }

    #[test]
    fn twelve_vertex_rows_and_labels() {
        let g = graph("001101010111");
        assert_eq!(row_lengths(&g), vec![11, 11, 11, 10, 9, 8, 8, 7, 7, 5, 4, 3]);
        let text = ferrers(&g);
        let labels: Vec<&str> = text
            .lines()
            .map(|l| l.split_whitespace().next().unwrap())
            .collect();
        assert_eq!(
            labels,
            ["b8", "b8", "b8", "b6", "b4", "b2", "b2", "b1", "b1", "b3", "b5", "b7"]
        );
    }

    #[test]
    fn isolated_vertex() {
        assert_eq!(ferrers(&graph("1")), "b1 |\n");
        assert_eq!(ferrers(&graph("0111")), "b1 | ###\n".repeat(4));
    }

    #[test]
    fn gutter_is_fixed_width() {
        let g = graph("0^2,1,0,1,0,1,0,1,0,1");
        let r = g.r();
        assert!(r >= 10);
        for line in ferrers(&g).lines() {
            assert_eq!(line.find('|'), Some(4));
        }
    }
}
