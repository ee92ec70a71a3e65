//! Tables of generalized characters, indexed by pairs `μ ↗ λ` (rows) and
//! `S(n−1)`-classes (columns).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classes::{classes_of, ClassIndex};
use crate::error::{Error, Result};
use crate::gamma::{char_pairs_of, gamma_mn, CharPair};
use crate::partition::{dim, factorial};
use crate::rational::{int, to_text, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scaling {
    /// The values `Γ^{λ,μ}` themselves.
    Raw,
    /// `Γ^{λ,μ} · (n−1)!/dim μ`, the normalisation of the published tables.
    #[serde(rename = "paper")]
    PaperScaled,
}

impl Scaling {
    pub fn name(self) -> &'static str {
        match self {
            Scaling::Raw => "raw",
            Scaling::PaperScaled => "paper",
        }
    }

    /// Factor applied to every entry of the row of `pair`.
    pub fn factor(self, pair: &CharPair) -> Rational {
        match self {
            Scaling::Raw => int(1),
            Scaling::PaperScaled => int(factorial(pair.n() - 1) as i64) / int(dim(pair.mu()) as i64),
        }
    }
}

impl fmt::Display for Scaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scaling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Scaling::Raw),
            "paper" | "paper_scaled" => Ok(Scaling::PaperScaled),
            _ => Err(Error::Parse {
                what: "scaling",
                input: s.to_string(),
                position: 0,
                message: "expected 'raw' or 'paper'".to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCharacterTable {
    n: usize,
    scaling: Scaling,
    classes: Vec<ClassIndex>,
    pairs: Vec<CharPair>,
    values: Vec<Vec<Rational>>,
}

fn table_row(pair: &CharPair, classes: &[ClassIndex], scaling: Scaling) -> Result<Vec<Rational>> {
    let factor = scaling.factor(pair);
    classes.iter().map(|c| Ok(gamma_mn(pair, c)? * &factor)).collect()
}

/// Every `Γ^{λ,μ}_{(j,ρ)}` of degree `n`, rows and columns in layout order.
pub fn build_table(n: usize, scaling: Scaling) -> Result<GeneralizedCharacterTable> {
    let classes = classes_of(n);
    let pairs = char_pairs_of(n);
    let values = pairs
        .iter()
        .map(|p| table_row(p, &classes, scaling))
        .collect::<Result<_>>()?;
    Ok(GeneralizedCharacterTable { n, scaling, classes, pairs, values })
}

/// [`build_table`] with rows computed in parallel.
pub fn build_table_parallel(n: usize, scaling: Scaling) -> Result<GeneralizedCharacterTable> {
    let classes = classes_of(n);
    let pairs = char_pairs_of(n);
    let values = pairs
        .par_iter()
        .map(|p| table_row(p, &classes, scaling))
        .collect::<Result<_>>()?;
    Ok(GeneralizedCharacterTable { n, scaling, classes, pairs, values })
}

impl GeneralizedCharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scaling(&self) -> Scaling {
        self.scaling
    }

    pub fn classes(&self) -> &[ClassIndex] {
        &self.classes
    }

    pub fn pairs(&self) -> &[CharPair] {
        &self.pairs
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn value(&self, pair: &CharPair, class: &ClassIndex) -> Option<&Rational> {
        let r = self.pairs.iter().position(|p| p == pair)?;
        let c = self.classes.iter().position(|k| k == class)?;
        Some(&self.values[r][c])
    }

    /// Plain-text layout: a `Class` header of marked partitions, an `Order`
    /// row of class sizes, then one row per generalized character.
    pub fn render_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["Class".to_string()];
        header.extend(self.classes.iter().map(|c| c.marked_text()));
        grid.push(header);
        let mut orders = vec!["Order".to_string()];
        orders.extend(self.classes.iter().map(|c| c.size().to_string()));
        grid.push(orders);
        for (pair, row) in self.pairs.iter().zip(&self.values) {
            let mut line = vec![format!("Γ^{}", pair.marked_text())];
            line.extend(row.iter().map(to_text));
            grid.push(line);
        }
        let cols = grid[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|line| line[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = match self.scaling {
            Scaling::PaperScaled => format!("Degree {}\n", self.n),
            Scaling::Raw => format!("Degree {} (raw)\n", self.n),
        };
        for line in &grid {
            let cells: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(c, cell)| {
                    let pad = " ".repeat(widths[c] - cell.chars().count());
                    if c == 0 {
                        format!("{cell}{pad}")
                    } else {
                        format!("{pad}{cell}")
                    }
                })
                .collect();
            out.push_str(&cells.join(" | "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "j": c.j(),
                    "rho": c.rho().parts(),
                    "marked": c.marked_text(),
                    "order": c.size(),
                })
            })
            .collect();
        let rows: Vec<Value> = self
            .pairs
            .iter()
            .zip(&self.values)
            .map(|(p, row)| {
                json!({
                    "lam": p.lam().parts(),
                    "mu": p.mu().parts(),
                    "values": row.iter().map(to_text).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "scaling": self.scaling.name(),
            "classes": classes,
            "rows": rows,
        })
    }
}
