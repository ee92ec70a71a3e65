//! Generalized characters `Γ^{λ,μ↗λ}` on `S(n−1)`-classes: the
//! Murnaghan–Nakayama type rule, two independent oracles and the `n`-cycle
//! closed form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characters::chi;
use crate::classes::{class_of_permutation, ClassIndex};
use crate::error::{Error, Result};
use crate::greene::{phi, MarkedSkewTriple};
use crate::partition::{
    dim, factorial, partitions_of, remove_box_positions, subpartitions_of_size, Cell, Partition,
};
use crate::perm::{all_permutations, Permutation};
use crate::rational::{frac, int, one, sign, zero, Rational};
use crate::skew::SkewShape;
use crate::tableau::for_each_syt_path;

/// A pair `μ ↗ λ` labelling one generalized character.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharPair {
    lam: Partition,
    mu: Partition,
}

impl CharPair {
    pub fn new(lam: Partition, mu: Partition) -> Result<Self> {
        if lam.added_cell(&mu).is_none() {
            return Err(Error::NotAddable {
                lam: lam.to_string(),
                mu: mu.to_string(),
            });
        }
        Ok(CharPair { lam, mu })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.lam.size()
    }

    /// The box `λ/μ`.
    pub fn marked_cell(&self) -> Cell {
        self.lam.added_cell(&self.mu).expect("checked on construction")
    }

    /// `λ` with the row of `λ/μ` starred, e.g. `(2*,1)` for `λ=(2,1)`, `μ=(1,1)`.
    pub fn marked_text(&self) -> String {
        self.lam.marked_text(Some(self.marked_cell().row))
    }

    /// Parses the starred form `(2*,1)`.
    pub fn from_marked(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
        let stars = trimmed.matches('*').count();
        let star_err = |message: &str| Error::Parse {
            what: "marked partition",
            input: text.to_string(),
            position: trimmed.find('*').unwrap_or(0),
            message: message.to_string(),
        };
        if stars != 1 {
            return Err(star_err("expected exactly one '*'"));
        }
        let mut row = 0;
        for (i, piece) in trimmed.split(',').enumerate() {
            if piece.trim().ends_with('*') {
                row = i + 1;
            }
        }
        let lam: Partition = trimmed.replace('*', "").parse()?;
        let mu = lam
            .without_box_in_row(row)
            .ok_or_else(|| star_err("starred row does not end in a removable box"))?;
        CharPair::new(lam, mu)
    }
}

impl fmt::Display for CharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.marked_text())
    }
}

impl FromStr for CharPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CharPair::from_marked(s)
    }
}

/// All pairs `μ ↗ λ` with `|λ| = n`: `λ` in reverse-lexicographic order, then
/// `μ` descending.
pub fn char_pairs_of(n: usize) -> Vec<CharPair> {
    let mut out = Vec::new();
    for lam in partitions_of(n) {
        let mut mus: Vec<Partition> = remove_box_positions(&lam).into_iter().map(|(mu, _)| mu).collect();
        mus.sort_by(|a, b| b.cmp(a));
        out.extend(mus.into_iter().map(|mu| CharPair { lam: lam.clone(), mu }));
    }
    out
}

fn check_degree(pair: &CharPair, n: usize) -> Result<()> {
    if pair.n() == n {
        Ok(())
    } else {
        Err(Error::SizeMismatch(format!(
            "pair {} has degree {} but the class lives in S({n})",
            pair,
            pair.n()
        )))
    }
}

/// `Γ^{λ,μ}_{(j,ρ)} = Σ_{ν ⊆ μ, |ν| = n−j} φ(μ/ν; λ/ν) χ^ν_ρ`.
pub fn gamma_mn(pair: &CharPair, class: &ClassIndex) -> Result<Rational> {
    let n = class.n();
    check_degree(pair, n)?;
    let mut total = zero();
    for nu in subpartitions_of_size(&pair.mu, n - class.j()) {
        let triple = MarkedSkewTriple::new(pair.lam.clone(), pair.mu.clone(), nu.clone())?;
        let coeff = phi(&triple);
        if coeff == zero() {
            continue;
        }
        total += coeff * int(chi(&nu, class.rho())?);
    }
    Ok(total)
}

/// `Γ^{λ,μ}(x) = dim μ/(n−1)! · Σ_{y ∈ S(n−1)} χ^λ(x y⁻¹) χ^μ(y)`, summed
/// element by element.
pub fn gamma_def_oracle(pair: &CharPair, x: &Permutation) -> Result<Rational> {
    let n = x.degree();
    check_degree(pair, n)?;
    let mut total: i64 = 0;
    for y in all_permutations(n - 1) {
        let chi_mu = chi(&pair.mu, &y.cycle_type())?;
        if chi_mu == 0 {
            continue;
        }
        let xy = x.compose(&y.extend(1).inverse());
        total += chi(&pair.lam, &xy.cycle_type())? * chi_mu;
    }
    Ok(int(total) * int(dim(&pair.mu) as i64) / int(factorial(n - 1) as i64))
}

/// `Γ^{λ,μ}(π) = Σ_{T ∈ SYT(λ), T(λ/μ) = n} Π_{k ∉ {b_1..b_K}} 1/(c_T(k+1) − c_T(k))`
/// for `π` the standard-form representative of the class, whose cycles end at
/// `b_1 < … < b_K = n`.
pub fn gamma_syt_oracle(pair: &CharPair, class: &ClassIndex) -> Result<Rational> {
    let n = class.n();
    check_degree(pair, n)?;
    let mut cycle_ends = vec![false; n + 1];
    let mut acc = 0;
    for &part in class.rho().parts() {
        acc += part;
        cycle_ends[acc] = true;
    }
    cycle_ends[n] = true;
    let marked = pair.marked_cell();
    let mut total = zero();
    let mut contents = Vec::with_capacity(n);
    for_each_syt_path(&SkewShape::straight(pair.mu.clone()), |path| {
        contents.clear();
        contents.extend(path.iter().map(|c| c.content()));
        contents.push(marked.content());
        let mut denom: i64 = 1;
        for k in 1..n {
            if !cycle_ends[k] {
                denom *= contents[k] - contents[k - 1];
            }
        }
        total += frac(1, denom);
    });
    Ok(total)
}

/// `Γ^{λ,μ}` on the `n`-cycle: `(−1)^b a/(a+b)` when `λ = (a+1,1^b)` and
/// `μ = (a,1^b)`, `(−1)^b b/(a+b)` when `μ = (a+1,1^{b−1})`, and 0 when `λ`
/// is not a hook.
pub fn gamma_ncycle(pair: &CharPair) -> Rational {
    let n = pair.n();
    if n == 1 {
        return one();
    }
    let parts = pair.lam.parts();
    if parts[1..].iter().any(|&p| p != 1) {
        return zero();
    }
    let a = parts[0] - 1;
    let b = parts.len() - 1;
    let removed_from_arm = pair.marked_cell().row == 1;
    let numer = if removed_from_arm { a } else { b };
    sign(b) * frac(numer as i64, (a + b) as i64)
}

/// `Γ` at every class of `S(n)`, in layout order.
pub fn gamma_row(pair: &CharPair, classes: &[ClassIndex]) -> Result<Vec<Rational>> {
    classes.iter().map(|c| gamma_mn(pair, c)).collect()
}

/// `Γ^{λ,μ}(x)` for an arbitrary permutation, through its class.
pub fn gamma_at(pair: &CharPair, x: &Permutation) -> Result<Rational> {
    gamma_mn(pair, &class_of_permutation(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::classes_of;
    use crate::partition;

    fn pair(l: Partition, m: Partition) -> CharPair {
        CharPair::new(l, m).unwrap()
    }

    fn class(j: usize, rho: Partition) -> ClassIndex {
        ClassIndex::new(j, rho).unwrap()
    }

    #[test]
    fn worked_value_three_ways() {
        let p = pair(partition![3, 2, 1], partition![3, 2]);
        let c = class(3, partition![2, 1]);
        assert_eq!(gamma_mn(&p, &c).unwrap(), frac(-1, 2));
        assert_eq!(gamma_syt_oracle(&p, &c).unwrap(), frac(-1, 2));
        assert_eq!(gamma_def_oracle(&p, &c.representative()).unwrap(), frac(-1, 2));
    }

    #[test]
    fn simple_values() {
        let p = pair(partition![3], partition![2]);
        assert_eq!(gamma_mn(&p, &class(3, Partition::empty())).unwrap(), one());
        let p = pair(partition![2, 2], partition![2, 1]);
        assert_eq!(gamma_mn(&p, &class(4, Partition::empty())).unwrap(), zero());
        let p = pair(partition![1], Partition::empty());
        assert_eq!(gamma_mn(&p, &class(1, Partition::empty())).unwrap(), one());
        assert_eq!(gamma_syt_oracle(&p, &class(1, Partition::empty())).unwrap(), one());
    }

    #[test]
    fn degree_two_is_trivial_and_sign() {
        let pairs = char_pairs_of(2);
        let classes = classes_of(2);
        let rows: Vec<Vec<Rational>> = pairs.iter().map(|p| gamma_row(p, &classes).unwrap()).collect();
        // columns: the transposition (2*), then the identity (1,1*)
        assert_eq!(rows, vec![vec![one(), one()], vec![int(-1), one()]]);
    }

    #[test]
    fn pair_layout_order() {
        let text: Vec<String> = char_pairs_of(3).iter().map(|p| p.marked_text()).collect();
        assert_eq!(text, ["(3*)", "(2,1*)", "(2*,1)", "(1,1,1*)"]);
        let text: Vec<String> = char_pairs_of(4).iter().map(|p| p.marked_text()).collect();
        assert_eq!(text, ["(4*)", "(3,1*)", "(3*,1)", "(2,2*)", "(2,1,1*)", "(2*,1,1)", "(1,1,1,1*)"]);
    }

    #[test]
    fn marked_parse_round_trip() {
        for n in 1..=6 {
            for p in char_pairs_of(n) {
                assert_eq!(p.marked_text().parse::<CharPair>().unwrap(), p);
            }
        }
        assert!("(2*,2,1)".parse::<CharPair>().is_err());
        assert!("(2,1)".parse::<CharPair>().is_err());
    }

    #[test]
    fn not_addable_is_rejected() {
        assert!(matches!(
            CharPair::new(partition![3, 1], partition![2, 2]),
            Err(Error::NotAddable { .. })
        ));
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let p = pair(partition![2, 1], partition![2]);
        assert!(gamma_mn(&p, &class(2, partition![1, 1])).is_err());
    }

    #[test]
    fn ncycle_examples() {
        assert_eq!(gamma_ncycle(&pair(partition![3, 1], partition![3])), frac(-1, 3));
        assert_eq!(gamma_ncycle(&pair(partition![3, 1], partition![2, 1])), frac(-2, 3));
        assert_eq!(gamma_ncycle(&pair(partition![2, 2], partition![2, 1])), zero());
    }

    #[test]
    fn syt_oracle_matches_rule_small() {
        for n in 1..=5 {
            for p in char_pairs_of(n) {
                for c in classes_of(n) {
                    assert_eq!(gamma_mn(&p, &c).unwrap(), gamma_syt_oracle(&p, &c).unwrap(), "{p} at {c}");
                }
            }
        }
    }

    #[test]
    fn def_oracle_matches_rule_small() {
        for n in 1..=4 {
            for p in char_pairs_of(n) {
                for c in classes_of(n) {
                    let x = c.representative();
                    assert_eq!(gamma_mn(&p, &c).unwrap(), gamma_def_oracle(&p, &x).unwrap(), "{p} at {c}");
                }
            }
        }
    }
}
