//! Permutations of `{1..n}` with 1-based cycle notation for I/O.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection of `{1..n}`, stored 0-based: `images[i]` is the image of `i + 1`
/// minus one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 0-based images; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{images:?}"),
                    position: i,
                    message: "images do not form a bijection".into(),
                });
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1..n}` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n || images[x - 1].is_some() {
                    return Err(Error::Parse {
                        what: "permutation",
                        input: format!("{cycles:?}"),
                        position: i,
                        message: format!("symbol {x} is out of range or repeated"),
                    });
                }
                images[x - 1] = Some(y - 1);
            }
        }
        let images = images.into_iter().enumerate().map(|(i, x)| x.unwrap_or(i)).collect();
        Permutation::from_images(images)
    }

    /// Parses cycle notation such as `(127)(45)(36)` or `(1,2,7)(4,5)`.
    /// Without commas or spaces inside a cycle every digit is one symbol.
    /// `n` defaults to the largest symbol mentioned.
    pub fn parse_cycles(input: &str, n: Option<usize>) -> Result<Self> {
        let err = |position: usize, message: &str| Error::Parse {
            what: "permutation",
            input: input.to_string(),
            position,
            message: message.to_string(),
        };
        let mut cycles = Vec::new();
        let mut chars = input.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            match ch {
                c if c.is_whitespace() => continue,
                '(' => {
                    let mut body = String::new();
                    let start = pos + 1;
                    loop {
                        match chars.next() {
                            Some((_, ')')) => break,
                            Some((_, c)) => body.push(c),
                            None => return Err(err(pos, "unclosed cycle")),
                        }
                    }
                    let separated = body.contains(',') || body.trim().contains(' ');
                    let mut cycle = Vec::new();
                    if separated {
                        let mut offset = start;
                        for tok in body.split([',', ' ']) {
                            if !tok.is_empty() {
                                cycle.push(tok.parse::<usize>().map_err(|_| err(offset, "expected a symbol"))?);
                            }
                            offset += tok.len() + 1;
                        }
                    } else {
                        for (i, c) in body.chars().enumerate() {
                            let d = c.to_digit(10).ok_or_else(|| err(start + i, "expected a digit"))?;
                            cycle.push(d as usize);
                        }
                    }
                    if let Some(i) = cycle.iter().position(|&x| x == 0) {
                        return Err(err(start + i, "symbols are 1-based"));
                    }
                    cycles.push(cycle);
                }
                _ => return Err(err(pos, "expected '('")),
            }
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        if max > n {
            return Err(err(0, &format!("symbol {max} exceeds n = {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in cycles.iter().flatten() {
            if std::mem::replace(&mut seen[x], true) {
                return Err(err(0, &format!("symbol {x} appears twice")));
            }
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based symbol `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `k · self · k⁻¹`.
    pub fn conjugate_by(&self, k: &Permutation) -> Permutation {
        k.compose(self).compose(&k.inverse())
    }

    /// Disjoint cycles (1-based), each starting at its smallest symbol,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Extends to `S(n + extra)` by fixing the new symbols.
    pub fn extend(&self, extra: usize) -> Permutation {
        let n = self.images.len();
        let mut images = self.images.clone();
        images.extend(n..n + extra);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; `()` for the identity. Symbols are
    /// comma-separated once `n ≥ 10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() >= 10 { "," } else { "" };
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

/// Every element of `S(n)` in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { images: images.clone() });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rfind(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (0..n).rfind(|&j| images[j] > images[i]).expect("pivot exists");
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::factorial;

    #[test]
    fn parse_and_print_cycles() {
        let p = Permutation::parse_cycles("(127)(45)(36)", Some(7)).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(7), 1);
        assert_eq!(p.apply(3), 6);
        assert_eq!(p.to_string(), "(127)(36)(45)");
        assert_eq!(p.cycle_type(), partition![3, 2, 2]);
        let q = Permutation::parse_cycles("(1,10)(2 3)", None).unwrap();
        assert_eq!(q.degree(), 10);
        assert_eq!(q.to_string(), "(1,10)(2,3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles("(12)(23)", None).is_err());
        match Permutation::parse_cycles("(12)x", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn group_axioms_on_s4() {
        let all = all_permutations(4);
        assert_eq!(all.len() as u64, factorial(4));
        let e = Permutation::identity(4);
        for p in &all {
            assert_eq!(p.compose(&p.inverse()), e);
            assert_eq!(
                Permutation::parse_cycles(&p.to_string(), Some(4)).unwrap(),
                *p
            );
        }
    }
}
