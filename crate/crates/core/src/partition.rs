//! Integer partitions and the boxes of their Young diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram at `(row, col)`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col − row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive parts, stored without trailing
/// zeros. The derived order is lexicographic on parts, so sorting descending
/// gives the reverse-lexicographic order used for table layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates that `parts` is weakly decreasing; zeros are only allowed as
    /// a trailing run and are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Parse {
                    what: "partition",
                    input: format!("{parts:?}"),
                    position: i + 1,
                    message: format!("part {} is larger than the part before it", w[1]),
                });
            }
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
                position: i,
                message: "zero part before a positive part".into(),
            });
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row_len(cell.row) >= cell.col
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Multiplicity of each part size: `m[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Multiset union of parts, `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts_unsorted(parts)
    }

    /// Removes one part equal to `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Adds a box at the end of `row` (1-based), if the result is a partition.
    pub fn with_box_in_row(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.row_len(row - 1) <= self.row_len(row) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Removes the last box of `row` (1-based), if the result is a partition.
    pub fn without_box_in_row(&self, row: usize) -> Option<Partition> {
        let len = self.row_len(row);
        if row == 0 || len == 0 || self.row_len(row + 1) >= len {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::new(parts).expect("removing a corner keeps a partition"))
    }

    /// If `self` is obtained from `mu` by adding one box, returns that box.
    pub fn added_cell(&self, mu: &Partition) -> Option<Cell> {
        if self.size() != mu.size() + 1 || !self.contains(mu) {
            return None;
        }
        (1..=self.len())
            .find(|&r| self.row_len(r) != mu.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r)))
    }

    /// Writes the parts as `(a,b,c)` with `*` after the part in `marked_row`.
    pub fn marked_text(&self, marked_row: Option<usize>) -> String {
        let body: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if marked_row == Some(i + 1) {
                    format!("{p}*")
                } else {
                    p.to_string()
                }
            })
            .collect();
        format!("({})", body.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// `partition!(3, 2, 1)`; panics on invalid parts, so only for literals.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts such as `3,2,1`; `-` (or nothing) is the empty
    /// partition. Errors carry the character offset of the bad token.
    fn from_str(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let lead = input.len() - input.trim_start().len();
        let mut parts = Vec::new();
        let mut offset = lead;
        for token in trimmed.split(',') {
            let t = token.trim();
            let pos = offset + (token.len() - token.trim_start().len());
            let value: usize = t.parse().map_err(|_| Error::Parse {
                what: "partition",
                input: input.to_string(),
                position: pos,
                message: format!("{t:?} is not a positive integer"),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    what: "partition",
                    input: input.to_string(),
                    position: pos,
                    message: "parts must be positive".into(),
                });
            }
            if parts.last().is_some_and(|&last| last < value) {
                return Err(Error::Parse {
                    what: "partition",
                    input: input.to_string(),
                    position: pos,
                    message: "parts must be weakly decreasing".into(),
                });
            }
            parts.push(value);
            offset += token.len() + 1;
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `λ` with `μ ↗ λ`, paired with the added box, top row first.
pub fn add_box_positions(mu: &Partition) -> Vec<(Partition, Cell)> {
    (1..=mu.len() + 1)
        .filter_map(|row| {
            mu.with_box_in_row(row)
                .map(|lam| (lam, Cell::new(row, mu.row_len(row) + 1)))
        })
        .collect()
}

/// All `μ` with `μ ↗ λ`, paired with the removed box, top row first.
pub fn remove_box_positions(lam: &Partition) -> Vec<(Partition, Cell)> {
    (1..=lam.len())
        .filter_map(|row| {
            lam.without_box_in_row(row)
                .map(|mu| (mu, Cell::new(row, lam.row_len(row))))
        })
        .collect()
}

/// Every `ν ⊆ outer` with `|ν| = size`, in reverse-lexicographic order.
pub fn subpartitions_of_size(outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if row > outer.len() {
            return;
        }
        let max = cap.min(outer.row_len(row)).min(rest);
        // Remaining rows can hold at most `part` boxes each.
        for part in (1..=max).rev() {
            let room: usize = (row + 1..=outer.len()).map(|r| outer.row_len(r).min(part)).sum();
            if part + room < rest {
                break;
            }
            prefix.push(part);
            go(outer, row + 1, rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if size <= outer.size() {
        go(outer, 1, size, usize::MAX, &mut Vec::new(), &mut out);
    }
    out
}

/// Every `ν ⊆ outer`, all sizes.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size())
        .flat_map(|k| subpartitions_of_size(outer, k))
        .collect()
}

static DIM_CACHE: LazyLock<RwLock<HashMap<Partition, u64>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Number of standard Young tableaux of shape `lam`, i.e. `χ^λ(e)`.
/// Uses the branching recursion `dim λ = Σ_{μ↗λ} dim μ`.
pub fn dim(lam: &Partition) -> u64 {
    if lam.size() <= 1 {
        return 1;
    }
    if let Some(&d) = DIM_CACHE.read().expect("dim cache poisoned").get(lam) {
        return d;
    }
    let d = remove_box_positions(lam).iter().map(|(mu, _)| dim(mu)).sum();
    DIM_CACHE
        .write()
        .expect("dim cache poisoned")
        .insert(lam.clone(), d);
    d
}

/// `n!` as `u64`; fine for the desk-scale `n ≤ 20`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
