//! Skew Young diagrams and the border-strip vocabulary: connectivity, 2×2
//! blocks, heights, sharp corners, dull boxes and the standard labelling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkewClassification {
    pub is_border_strip: bool,
    pub is_broken_border_strip: bool,
    pub connected_components: usize,
    /// Sum over components of (rows occupied − 1); present iff the shape is a
    /// broken border strip.
    pub height: Option<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Boxes in row-major order; the position in this list plus one is the
    /// standard label of the box.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|r| {
                (self.inner.row_len(r) + 1..=self.outer.row_len(r)).map(move |c| Cell::new(r, c))
            })
            .collect()
    }

    /// Labels boxes `1..=m` left to right in each row, top row first.
    pub fn standard_labelling(&self) -> BTreeMap<Cell, usize> {
        self.cells().into_iter().zip(1..).collect()
    }

    /// Connected components under edge adjacency, each listed row-major.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let cells = self.cells();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &cells {
            if !seen.insert(start) {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = vec![start];
            while let Some(c) = stack.pop() {
                let mut neighbours = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
                if c.row > 1 {
                    neighbours.push(Cell::new(c.row - 1, c.col));
                }
                if c.col > 1 {
                    neighbours.push(Cell::new(c.row, c.col - 1));
                }
                for nb in neighbours {
                    if self.contains(nb) && seen.insert(nb) {
                        stack.push(nb);
                        comp.push(nb);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// True if some `(r,c),(r,c+1),(r+1,c),(r+1,c+1)` all lie in the shape.
    pub fn has_2x2_block(&self) -> bool {
        self.cells().into_iter().any(|c| {
            self.contains(Cell::new(c.row, c.col + 1))
                && self.contains(Cell::new(c.row + 1, c.col))
                && self.contains(Cell::new(c.row + 1, c.col + 1))
        })
    }

    pub fn classify(&self) -> SkewClassification {
        let components = self.components();
        let broken = !self.has_2x2_block();
        let height = broken.then(|| {
            components
                .iter()
                .map(|comp| {
                    let rows: BTreeSet<usize> = comp.iter().map(|c| c.row).collect();
                    rows.len() - 1
                })
                .sum()
        });
        SkewClassification {
            is_border_strip: broken && components.len() == 1,
            is_broken_border_strip: broken,
            connected_components: components.len(),
            height,
        }
    }

    fn require_broken(&self) -> Result<()> {
        if self.has_2x2_block() {
            Err(Error::NotBrokenBorderStrip(self.to_string()))
        } else {
            Ok(())
        }
    }

    /// Boxes with a box of the shape below them and one to their right.
    pub fn sharp_corners(&self) -> Result<Vec<Cell>> {
        self.require_broken()?;
        Ok(self
            .cells()
            .into_iter()
            .filter(|c| {
                self.contains(Cell::new(c.row + 1, c.col)) && self.contains(Cell::new(c.row, c.col + 1))
            })
            .collect())
    }

    /// Boxes with no box of the shape below them and none to their right.
    pub fn dull_boxes(&self) -> Result<Vec<Cell>> {
        self.require_broken()?;
        Ok(self
            .cells()
            .into_iter()
            .filter(|c| {
                !self.contains(Cell::new(c.row + 1, c.col)) && !self.contains(Cell::new(c.row, c.col + 1))
            })
            .collect())
    }

    /// Pairs of standard labels `(i, j)`, `i < j`, whose boxes are adjacent in
    /// a row, in a column, or along a diagonal `(r,c)–(r+1,c+1)`.
    pub fn adjacent_label_pairs(&self) -> AdjacentPairs {
        let labels = self.standard_labelling();
        let mut pairs = AdjacentPairs::default();
        for (&cell, &i) in &labels {
            if let Some(&j) = labels.get(&Cell::new(cell.row, cell.col + 1)) {
                pairs.row.push((i, j));
            }
            if let Some(&j) = labels.get(&Cell::new(cell.row + 1, cell.col)) {
                pairs.column.push((i, j));
            }
            if let Some(&j) = labels.get(&Cell::new(cell.row + 1, cell.col + 1)) {
                pairs.diagonal.push((i, j));
            }
        }
        pairs
    }
}

/// Label pairs produced by [`SkewShape::adjacent_label_pairs`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdjacentPairs {
    pub row: Vec<(usize, usize)>,
    pub column: Vec<(usize, usize)>,
    pub diagonal: Vec<(usize, usize)>,
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `outer/inner`, e.g. `3,2,1/1,1`; a bare partition is a straight shape.
    fn from_str(input: &str) -> Result<Self> {
        let (outer, inner) = match input.split_once('/') {
            Some((o, i)) => {
                let outer: Partition = o.parse()?;
                let inner: Partition = i.parse().map_err(|e| match e {
                    Error::Parse { what, position, message, .. } => Error::Parse {
                        what,
                        input: input.to_string(),
                        position: position + o.len() + 1,
                        message,
                    },
                    other => other,
                })?;
                (outer, inner)
            }
            None => (input.parse()?, Partition::empty()),
        };
        SkewShape::new(outer, inner)
    }
}

/// Every skew shape `λ/ν` with `1 ≤ |λ/ν| ≤ max_boxes` and `|λ| ≤ max_outer`
/// whose first row and first column are occupied. The last condition drops
/// translated copies of the same box configuration.
pub fn skew_shapes_up_to(max_boxes: usize, max_outer: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in 1..=max_outer {
        for lam in crate::partition::partitions_of(size) {
            for k in size.saturating_sub(max_boxes)..size {
                for nu in crate::partition::subpartitions_of_size(&lam, k) {
                    if nu.row_len(1) < lam.row_len(1) && nu.len() < lam.len() {
                        out.push(SkewShape::new(lam.clone(), nu).expect("ν ⊆ λ"));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::partitions_of;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// The two-component, 19-box broken border strip used as a running example.
    pub(crate) fn nineteen_box_strip() -> SkewShape {
        SkewShape::new(
            partition![11, 9, 8, 7, 7, 4, 4, 4, 4, 4, 1, 1, 1],
            partition![8, 8, 8, 6, 4, 3, 3, 3, 3],
        )
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = shape("2,2").classify();
        assert_eq!(
            c,
            SkewClassification {
                is_border_strip: false,
                is_broken_border_strip: false,
                connected_components: 1,
                height: None
            }
        );
        let c = shape("3,1").classify();
        assert_eq!(
            c,
            SkewClassification {
                is_border_strip: true,
                is_broken_border_strip: true,
                connected_components: 1,
                height: Some(1)
            }
        );
        let s = nineteen_box_strip();
        assert_eq!(s.size(), 19);
        let c = s.classify();
        assert!(!c.is_border_strip);
        assert!(c.is_broken_border_strip);
        // rows 1–2, rows 4–5 and rows 6–13; the last two only meet at a corner
        assert_eq!(c.connected_components, 3);
        assert_eq!(c.height, Some(1 + 1 + 7));
        assert_eq!(corner_joined_components(&s), 2);
    }

    /// Components when boxes sharing only a corner also count as adjacent.
    fn corner_joined_components(s: &SkewShape) -> usize {
        let cells = s.cells();
        let mut seen = vec![false; cells.len()];
        let mut count = 0;
        for start in 0..cells.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                for (k, other) in cells.iter().enumerate() {
                    let near = cells[i].row.abs_diff(other.row) <= 1 && cells[i].col.abs_diff(other.col) <= 1;
                    if near && !seen[k] {
                        seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
        count
    }

    #[test]
    fn empty_shape_is_broken_with_no_components() {
        let c = shape("2,1/2,1").classify();
        assert_eq!(
            c,
            SkewClassification {
                is_border_strip: false,
                is_broken_border_strip: true,
                connected_components: 0,
                height: Some(0)
            }
        );
    }

    #[test]
    fn nineteen_box_corners() {
        let s = nineteen_box_strip();
        let labels = s.standard_labelling();
        let sc: Vec<usize> = s.sharp_corners().unwrap().iter().map(|c| labels[c]).collect();
        let db: Vec<usize> = s.dull_boxes().unwrap().iter().map(|c| labels[c]).collect();
        assert_eq!(sc, vec![1, 13]);
        assert_eq!(db, vec![3, 4, 8, 16, 19]);
    }

    #[test]
    fn corner_examples() {
        let single = shape("1");
        assert!(single.sharp_corners().unwrap().is_empty());
        assert_eq!(single.dull_boxes().unwrap(), vec![Cell::new(1, 1)]);
        let hook = shape("3,1");
        assert_eq!(hook.sharp_corners().unwrap(), vec![Cell::new(1, 1)]);
        assert_eq!(hook.dull_boxes().unwrap(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
        assert!(matches!(shape("2,2").dull_boxes(), Err(Error::NotBrokenBorderStrip(_))));
    }

    #[test]
    fn standard_labelling_examples() {
        let s = shape("3,2,2,1/1,1");
        let labels = s.standard_labelling();
        let expect = [
            (Cell::new(1, 2), 1),
            (Cell::new(1, 3), 2),
            (Cell::new(2, 2), 3),
            (Cell::new(3, 1), 4),
            (Cell::new(3, 2), 5),
            (Cell::new(4, 1), 6),
        ];
        assert_eq!(labels, expect.into_iter().collect());
        assert_eq!(shape("1").standard_labelling(), [(Cell::new(1, 1), 1)].into_iter().collect());
        let s = shape("2,2,1/1");
        let got: Vec<usize> = s.cells().iter().map(|c| s.standard_labelling()[c]).collect();
        assert_eq!(got, vec![1, 2, 3, 4]);
    }

    fn all_skew_shapes(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max_outer {
            for outer in partitions_of(n) {
                for inner in crate::partition::subpartitions(&outer) {
                    out.push(SkewShape::new(outer.clone(), inner).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn border_strip_iff_connected_without_block() {
        // Independent oracle: a grid flood fill and a raw block scan.
        for s in all_skew_shapes(8) {
            if s.size() > 8 {
                continue;
            }
            let width = s.outer().row_len(1) + 2;
            let height = s.outer().len() + 2;
            let mut grid = vec![vec![false; width]; height];
            for c in s.cells() {
                grid[c.row][c.col] = true;
            }
            let mut block = false;
            for r in 0..height - 1 {
                for c in 0..width - 1 {
                    block |= grid[r][c] && grid[r + 1][c] && grid[r][c + 1] && grid[r + 1][c + 1];
                }
            }
            let mut comps = 0;
            let mut seen = vec![vec![false; width]; height];
            for r in 0..height {
                for c in 0..width {
                    if grid[r][c] && !seen[r][c] {
                        comps += 1;
                        let mut stack = vec![(r, c)];
                        seen[r][c] = true;
                        while let Some((a, b)) = stack.pop() {
                            for (x, y) in [(a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)] {
                                if grid[x][y] && !seen[x][y] {
                                    seen[x][y] = true;
                                    stack.push((x, y));
                                }
                            }
                        }
                    }
                }
            }
            let c = s.classify();
            assert_eq!(c.connected_components, comps, "{s}");
            assert_eq!(c.is_broken_border_strip, !block, "{s}");
            assert_eq!(c.is_border_strip, !block && comps == 1, "{s}");
        }
    }

    #[test]
    fn removing_a_dull_box_keeps_a_broken_border_strip() {
        for s in all_skew_shapes(8) {
            if s.size() == 0 || s.size() > 8 || !s.classify().is_broken_border_strip {
                continue;
            }
            for d in s.dull_boxes().unwrap() {
                let smaller = s
                    .outer()
                    .without_box_in_row(d.row)
                    .filter(|mu| mu.row_len(d.row) + 1 == d.col)
                    .expect("a dull box is a removable corner of the outer shape");
                let rest = SkewShape::new(smaller, s.inner().clone()).unwrap();
                assert!(rest.classify().is_broken_border_strip, "{s} minus {d}");
            }
        }
    }

    #[test]
    fn labelling_is_row_major_bijection() {
        for s in all_skew_shapes(7) {
            let labels = s.standard_labelling();
            let mut values: Vec<usize> = labels.values().copied().collect();
            values.sort();
            assert_eq!(values, (1..=s.size()).collect::<Vec<_>>());
            for (a, b) in labels.iter().zip(labels.iter().skip(1)) {
                assert!(a.0 < b.0 && a.1 < b.1);
            }
        }
    }

    #[test]
    fn parse_skew() {
        let s = shape("3,2,1/1,1");
        assert_eq!(s.outer(), &partition![3, 2, 1]);
        assert_eq!(s.inner(), &partition![1, 1]);
        assert_eq!(s.to_string(), "3,2,1/1,1");
        assert!(matches!("2/3".parse::<SkewShape>(), Err(Error::NotContained { .. })));
        match "3,2/1,y".parse::<SkewShape>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
    }
}
