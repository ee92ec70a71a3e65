//! `S(n−1)`-conjugacy classes of `S(n)`.
//!
//! Two permutations of `S(n)` are conjugate under `S(n−1)` exactly when they
//! have the same cycle type and the cycle through `n` has the same length.
//! A class is therefore a pair `(j, ρ)` with `ρ ⊢ n − j`, or equivalently a
//! partition of `n` with a marked row: the lowest row of length `j`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassIndex {
    n: usize,
    j: usize,
    rho: Partition,
}

impl ClassIndex {
    pub fn new(j: usize, rho: Partition) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidClass("the cycle through n has length ≥ 1".into()));
        }
        Ok(ClassIndex { n: j + rho.size(), j, rho })
    }

    /// Like [`ClassIndex::new`] but also checks `j + |ρ| = n`.
    pub fn with_n(n: usize, j: usize, rho: Partition) -> Result<Self> {
        let c = ClassIndex::new(j, rho)?;
        if c.n != n {
            return Err(Error::InvalidClass(format!(
                "j + |rho| = {} but n = {n}",
                c.n
            )));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    /// `(ρ_full, σ)`: `ρ_full = ρ ∪ {j}` and `σ ↗ ρ_full` drops one box from the
    /// lowest row of length `j`.
    pub fn marked_partition(&self) -> (Partition, Partition) {
        let full = self.rho.union(&Partition::new(vec![self.j]).expect("positive part"));
        let row = self.marked_row();
        let sigma = full
            .without_box_in_row(row)
            .expect("the lowest row of a given length ends in a corner");
        (full, sigma)
    }

    /// 1-based index of the marked row in `ρ_full`.
    pub fn marked_row(&self) -> usize {
        let full = self.rho.union(&Partition::new(vec![self.j]).expect("positive part"));
        full.parts().iter().rposition(|&p| p == self.j).expect("j is a part") + 1
    }

    /// Inverse of [`ClassIndex::marked_partition`].
    pub fn from_marked(full: &Partition, sigma: &Partition) -> Result<Self> {
        let cell = full.added_cell(sigma).ok_or_else(|| Error::NotAddable {
            lam: full.to_string(),
            mu: sigma.to_string(),
        })?;
        let j = full.row_len(cell.row);
        let rho = full.without_part(j).expect("j is a part of the full partition");
        ClassIndex::new(j, rho)
    }

    /// The marked form, e.g. `(3*,2,2)`.
    pub fn marked_text(&self) -> String {
        let (full, _) = self.marked_partition();
        full.marked_text(Some(self.marked_row()))
    }

    /// Number of elements, `(n−1)!/z_ρ`.
    pub fn size(&self) -> u64 {
        factorial(self.n - 1) / z_factor(&self.rho)
    }

    /// A permutation in standard form: cycles of `ρ` (largest first) on
    /// consecutive symbols, then the `j`-cycle ending at `n`.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut next = 1;
        for &part in self.rho.parts().iter().chain(std::iter::once(&self.j)) {
            cycles.push((next..next + part).collect());
            next += part;
        }
        Permutation::from_cycles(self.n, &cycles).expect("disjoint cycles")
    }

    /// Layout order: descending on `ρ_full`, then descending on `σ`.
    pub fn layout_cmp(&self, other: &ClassIndex) -> Ordering {
        let (a_full, a_sigma) = self.marked_partition();
        let (b_full, b_sigma) = other.marked_partition();
        b_full.cmp(&a_full).then_with(|| b_sigma.cmp(&a_sigma))
    }
}

impl PartialOrd for ClassIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClassIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.layout_cmp(other))
    }
}

impl fmt::Display for ClassIndex {
    /// `j=3;rho=2,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j={};rho={}", self.j, self.rho)
    }
}

impl FromStr for ClassIndex {
    type Err = Error;

    /// Accepts `j=3;rho=2,2` and the marked form `3*,2,2` (parentheses optional).
    fn from_str(input: &str) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            what: "class",
            input: input.to_string(),
            position,
            message: message.to_string(),
        };
        let trimmed = input.trim();
        if let Some(rest) = trimmed.strip_prefix("j=") {
            let (j_text, rho_text) = rest.split_once(';').unwrap_or((rest, "rho=-"));
            let j: usize = j_text.trim().parse().map_err(|_| err(2, "expected an integer j"))?;
            let rho_offset = 2 + j_text.len() + 1;
            let rho_body = rho_text
                .trim()
                .strip_prefix("rho=")
                .ok_or_else(|| err(rho_offset, "expected rho="))?;
            let rho: Partition = rho_body.parse().map_err(|e| match e {
                Error::Parse { position, message, .. } => err(rho_offset + 4 + position, &message),
                other => other,
            })?;
            return ClassIndex::new(j, rho);
        }
        let body = trimmed.trim_start_matches('(').trim_end_matches(')');
        let offset = input.find(body).unwrap_or(0);
        let mut parts = Vec::new();
        let mut marked = None;
        let mut pos = offset;
        for (i, tok) in body.split(',').enumerate() {
            let t = tok.trim();
            let (num, star) = match t.strip_suffix('*') {
                Some(n) => (n, true),
                None => (t, false),
            };
            let v: usize = num.parse().map_err(|_| err(pos, "expected a positive part"))?;
            if v == 0 {
                return Err(err(pos, "parts must be positive"));
            }
            if star {
                if marked.is_some() {
                    return Err(err(pos, "more than one marked row"));
                }
                marked = Some(i);
            }
            parts.push(v);
            pos += tok.len() + 1;
        }
        let marked = marked.ok_or_else(|| err(offset, "no marked row (use '*')"))?;
        let full = Partition::new(parts.clone()).map_err(|_| err(offset, "parts must be weakly decreasing"))?;
        let j = parts[marked];
        if parts.iter().rposition(|&p| p == j) != Some(marked) {
            return Err(err(offset, "the marked row must be the lowest row of its length"));
        }
        let rho = full.without_part(j).expect("marked part present");
        ClassIndex::new(j, rho)
    }
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z_factor(rho: &Partition) -> u64 {
    rho.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u64).pow(m as u32) * factorial(m))
        .product()
}

pub fn z_factor_big(rho: &Partition) -> BigInt {
    BigInt::from(z_factor(rho))
}

/// The class of `p`: `j` is the length of the cycle through `n`, `ρ` the cycle
/// type of the remaining cycles.
pub fn class_of_permutation(p: &Permutation) -> ClassIndex {
    let n = p.degree();
    assert!(n >= 1, "S(0) has no S(n−1)-classes");
    let mut j = 0;
    let mut rest = Vec::new();
    for cycle in p.cycles() {
        if cycle.contains(&n) {
            j = cycle.len();
        } else {
            rest.push(cycle.len());
        }
    }
    ClassIndex::new(j, Partition::from_parts_unsorted(rest)).expect("j ≥ 1")
}

pub fn class_size(c: &ClassIndex) -> u64 {
    c.size()
}

/// All classes of `S(n)` in layout order.
pub fn classes_of(n: usize) -> Vec<ClassIndex> {
    let mut out: Vec<ClassIndex> = (1..=n)
        .flat_map(|j| {
            partitions_of(n - j)
                .into_iter()
                .map(move |rho| ClassIndex::new(j, rho).expect("j ≥ 1"))
        })
        .collect();
    out.sort_by(|a, b| a.layout_cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::perm::all_permutations;
    use std::collections::{BTreeSet, HashMap};

    #[test]
    fn z_examples() {
        assert_eq!(z_factor(&partition![2, 1]), 2);
        assert_eq!(z_factor(&partition![1, 1, 1]), 6);
        assert_eq!(z_factor(&Partition::empty()), 1);
        assert_eq!(z_factor(&partition![2, 2, 1]), 8);
    }

    #[test]
    fn class_of_examples() {
        let p = Permutation::parse_cycles("(127)(45)(36)", Some(7)).unwrap();
        assert_eq!(class_of_permutation(&p), ClassIndex::new(3, partition![2, 2]).unwrap());
        assert_eq!(
            class_of_permutation(&Permutation::identity(5)),
            ClassIndex::new(1, partition![1, 1, 1, 1]).unwrap()
        );
        let cycle = Permutation::from_cycles(6, &[(1..=6).collect()]).unwrap();
        assert_eq!(class_of_permutation(&cycle), ClassIndex::new(6, Partition::empty()).unwrap());
    }

    #[test]
    fn marked_examples() {
        let c = ClassIndex::new(3, partition![2, 2]).unwrap();
        assert_eq!(c.marked_partition(), (partition![3, 2, 2], partition![2, 2, 2]));
        assert_eq!(c.marked_text(), "(3*,2,2)");
        let c = ClassIndex::new(1, partition![1, 1]).unwrap();
        assert_eq!(c.marked_partition(), (partition![1, 1, 1], partition![1, 1]));
        let c = ClassIndex::new(4, Partition::empty()).unwrap();
        assert_eq!(c.marked_partition(), (partition![4], partition![3]));
    }

    #[test]
    fn size_examples() {
        assert_eq!(ClassIndex::with_n(4, 1, partition![3]).unwrap().size(), 2);
        assert_eq!(ClassIndex::with_n(4, 4, Partition::empty()).unwrap().size(), 6);
        assert_eq!(ClassIndex::with_n(4, 2, partition![2]).unwrap().size(), 3);
        assert!(ClassIndex::with_n(5, 2, partition![2]).is_err());
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 1..=8 {
            let total: u64 = classes_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn class_sizes_match_element_counts() {
        for n in 1..=6 {
            let mut counts: HashMap<ClassIndex, u64> = HashMap::new();
            for p in all_permutations(n) {
                *counts.entry(class_of_permutation(&p)).or_default() += 1;
            }
            for c in classes_of(n) {
                assert_eq!(counts[&c], c.size(), "{c}");
                assert_eq!(class_of_permutation(&c.representative()), c);
            }
        }
    }

    #[test]
    fn class_is_invariant_under_s_n_minus_1_conjugation() {
        for n in 1..=5 {
            let group = all_permutations(n);
            let sub: Vec<Permutation> = all_permutations(n - 1).iter().map(|k| k.extend(1)).collect();
            for p in &group {
                let c = class_of_permutation(p);
                for k in &sub {
                    assert_eq!(class_of_permutation(&p.conjugate_by(k)), c);
                }
            }
        }
    }

    #[test]
    fn marked_partition_is_a_bijection() {
        for n in 1..=8 {
            let mut image = BTreeSet::new();
            for c in classes_of(n) {
                let (full, sigma) = c.marked_partition();
                assert!(full.added_cell(&sigma).is_some());
                assert_eq!(ClassIndex::from_marked(&full, &sigma).unwrap(), c);
                image.insert((full, sigma));
            }
            let pairs: BTreeSet<(Partition, Partition)> = partitions_of(n)
                .into_iter()
                .flat_map(|full| {
                    crate::partition::remove_box_positions(&full)
                        .into_iter()
                        .map(move |(s, _)| (full.clone(), s))
                })
                .collect();
            assert_eq!(image, pairs);
        }
    }

    #[test]
    fn layout_order_degree_four() {
        let got: Vec<String> = classes_of(4).iter().map(ClassIndex::marked_text).collect();
        assert_eq!(
            got,
            ["(4*)", "(3,1*)", "(3*,1)", "(2,2*)", "(2,1,1*)", "(2*,1,1)", "(1,1,1,1*)"]
        );
    }

    #[test]
    fn text_forms() {
        let c: ClassIndex = "j=3;rho=2,2".parse().unwrap();
        assert_eq!(c, ClassIndex::new(3, partition![2, 2]).unwrap());
        assert_eq!(c.to_string(), "j=3;rho=2,2");
        let m: ClassIndex = "3*,2,2".parse().unwrap();
        assert_eq!(m, c);
        let m: ClassIndex = "(2,1,1*)".parse().unwrap();
        assert_eq!(m, ClassIndex::new(1, partition![2, 1]).unwrap());
        assert!("2*,2".parse::<ClassIndex>().is_err());
        assert!("j=4".parse::<ClassIndex>().unwrap().rho().is_empty());
        match "j=2;rho=1,x".parse::<ClassIndex>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("{other:?}"),
        }
    }
}
