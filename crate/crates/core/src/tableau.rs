//! Standard Young tableaux of (skew) shapes.

use crate::partition::{Cell, Partition};
use crate::skew::SkewShape;

/// A standard filling of a skew shape, stored as the entry of each box in
/// standard-label order: `entries[l − 1]` is the entry of the box labelled `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

impl StandardTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entry of the box with standard label `label` (1-based).
    pub fn entry_of_label(&self, label: usize) -> usize {
        self.entries[label - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `order[k − 1]` is the standard label of the box holding `k`.
    pub fn label_order(&self) -> Vec<usize> {
        let mut order = vec![0; self.entries.len()];
        for (i, &e) in self.entries.iter().enumerate() {
            order[e - 1] = i + 1;
        }
        order
    }

    /// Box holding entry `k` (1-based).
    pub fn cell_of(&self, k: usize) -> Cell {
        self.shape.cells()[self.label_order()[k - 1] - 1]
    }

    pub fn is_standard(&self) -> bool {
        let cells = self.shape.cells();
        let entry = |c: Cell| cells.iter().position(|&x| x == c).map(|i| self.entries[i]);
        cells.iter().enumerate().all(|(i, c)| {
            let e = self.entries[i];
            entry(Cell::new(c.row, c.col + 1)).is_none_or(|r| r > e)
                && entry(Cell::new(c.row + 1, c.col)).is_none_or(|b| b > e)
        })
    }
}

/// Calls `visit` once per standard tableau of `shape` with the sequence of
/// added boxes: `path[k]` is the box holding entry `k + 1`.
///
/// Tableaux are produced by growing the inner shape one outer corner at a
/// time, top row first, which fixes the enumeration order.
pub fn for_each_syt_path<F: FnMut(&[Cell])>(shape: &SkewShape, mut visit: F) {
    fn go<F: FnMut(&[Cell])>(
        outer: &Partition,
        current: &mut Vec<usize>,
        path: &mut Vec<Cell>,
        remaining: usize,
        visit: &mut F,
    ) {
        if remaining == 0 {
            visit(path);
            return;
        }
        for r in 0..outer.len() {
            let len = current[r];
            if len < outer.parts()[r] && (r == 0 || current[r - 1] > len) {
                current[r] += 1;
                path.push(Cell::new(r + 1, len + 1));
                go(outer, current, path, remaining - 1, visit);
                path.pop();
                current[r] -= 1;
            }
        }
    }
    let outer = shape.outer();
    let mut current: Vec<usize> = (1..=outer.len()).map(|r| shape.inner().row_len(r)).collect();
    let mut path = Vec::with_capacity(shape.size());
    go(outer, &mut current, &mut path, shape.size(), &mut visit);
}

/// Like [`for_each_syt_path`] but reports standard labels instead of boxes.
pub fn for_each_syt_labels<F: FnMut(&[usize])>(shape: &SkewShape, mut visit: F) {
    let labels = shape.standard_labelling();
    let mut order = Vec::with_capacity(shape.size());
    for_each_syt_path(shape, |path| {
        order.clear();
        order.extend(path.iter().map(|c| labels[c]));
        visit(&order);
    });
}

/// Every standard Young tableau of `shape`, each once, in a fixed order.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    for_each_syt_labels(shape, |order| {
        let mut entries = vec![0; order.len()];
        for (k, &label) in order.iter().enumerate() {
            entries[label - 1] = k + 1;
        }
        out.push(StandardTableau {
            shape: shape.clone(),
            entries,
        });
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::{dim, partitions_of, subpartitions};
    use brute::permutations;
    use std::collections::BTreeSet;

    mod brute {
        /// All permutations of `0..n` (test oracle, no external crate).
        pub fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
    }

    #[test]
    fn counts_examples() {
        assert_eq!(enumerate_syt(&SkewShape::straight(partition![2, 2, 1])).len(), 5);
        assert_eq!(enumerate_syt(&SkewShape::straight(partition![1])).len(), 1);
        assert_eq!(enumerate_syt(&SkewShape::straight(partition![3, 1])).len(), 3);
    }

    #[test]
    fn straight_counts_equal_dim() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(enumerate_syt(&SkewShape::straight(lam.clone())).len() as u64, dim(&lam));
            }
        }
    }

    #[test]
    fn skew_tableaux_match_brute_force_fillings() {
        // Oracle: every bijective filling, filtered by the row/column rule.
        for n in 0..=6 {
            for outer in partitions_of(n) {
                for inner in subpartitions(&outer) {
                    let shape = SkewShape::new(outer.clone(), inner).unwrap();
                    let got: BTreeSet<Vec<usize>> =
                        enumerate_syt(&shape).iter().map(|t| t.entries().to_vec()).collect();
                    let m = shape.size();
                    let mut expect = BTreeSet::new();
                    for perm in permutations(m) {
                        let entries: Vec<usize> = perm.iter().map(|&v| v + 1).collect();
                        let t = StandardTableau { shape: shape.clone(), entries: entries.clone() };
                        if t.is_standard() {
                            expect.insert(entries);
                        }
                    }
                    assert_eq!(got, expect, "{shape}");
                    assert_eq!(got.len(), enumerate_syt(&shape).len(), "duplicates in {shape}");
                }
            }
        }
    }

    #[test]
    fn label_order_inverts_entries() {
        let shape: SkewShape = "3,2,2,1/1,1".parse().unwrap();
        for t in enumerate_syt(&shape) {
            let order = t.label_order();
            for (k, &label) in order.iter().enumerate() {
                assert_eq!(t.entry_of_label(label), k + 1);
            }
            assert!(t.is_standard());
        }
    }
}
