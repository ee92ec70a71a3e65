//! The ring `Λ` of symmetric functions in the power-sum, complete and Schur
//! bases. Power sums are the working basis; the other two are converted
//! through it.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::characters::chi;
use crate::classes::z_factor;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{int, zero, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymBasis {
    #[serde(rename = "powersum")]
    PowerSum,
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "schur")]
    Schur,
}

impl SymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            SymBasis::PowerSum => "p",
            SymBasis::Complete => "h",
            SymBasis::Schur => "s",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymBasis::PowerSum => "powersum",
            SymBasis::Complete => "complete",
            SymBasis::Schur => "schur",
        }
    }
}

/// A finite linear combination of basis elements indexed by partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    basis: SymBasis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(basis: SymBasis) -> Self {
        SymPoly {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1, which is the `∅` element of every basis.
    pub fn one(basis: SymBasis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: SymBasis, lam: Partition) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lam, int(1));
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(basis: SymBasis, terms: I) -> Self {
        let mut out = Self::zero(basis);
        for (lam, c) in terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn coeff(&self, lam: &Partition) -> Rational {
        self.coeffs.get(lam).cloned().unwrap_or_else(zero)
    }

    /// Terms in ascending partition order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lam: Partition, c: Rational) {
        if c == zero() {
            return;
        }
        match self.coeffs.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymPoly, factor: &Rational) {
        let other = other.to_basis(self.basis);
        for (lam, c) in other.coeffs {
            self.add_term(lam, c * factor);
        }
    }

    pub fn plus(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn minus(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, factor: &Rational) -> SymPoly {
        let mut out = Self::zero(self.basis);
        for (lam, c) in &self.coeffs {
            out.add_term(lam.clone(), c * factor);
        }
        out
    }

    /// Product, computed in the power-sum basis and returned in `self`'s basis.
    pub fn times(&self, other: &SymPoly) -> SymPoly {
        let a = self.to_basis(SymBasis::PowerSum);
        let b = other.to_basis(SymBasis::PowerSum);
        union_product(&a, &b).to_basis(self.basis)
    }

    pub fn to_basis(&self, target: SymBasis) -> SymPoly {
        if self.basis == target {
            return self.clone();
        }
        let mut p = SymPoly::zero(SymBasis::PowerSum);
        for (lam, c) in &self.coeffs {
            let image = match self.basis {
                SymBasis::PowerSum => SymPoly::basis_element(SymBasis::PowerSum, lam.clone()),
                SymBasis::Complete => complete_to_p(lam),
                SymBasis::Schur => s_to_p(lam),
            };
            p.add_scaled(&image, c);
        }
        let mut out = SymPoly::zero(target);
        for (rho, c) in &p.coeffs {
            let image = match target {
                SymBasis::PowerSum => SymPoly::basis_element(SymBasis::PowerSum, rho.clone()),
                SymBasis::Complete => p_to_h(rho),
                SymBasis::Schur => p_to_s(rho),
            };
            out.add_scaled(&image, c);
        }
        out
    }

    /// Whether every basis element has total degree `n`.
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.coeffs.keys().all(|lam| lam.size() == n)
    }

    pub fn render(&self) -> String {
        render_terms(self.coeffs.iter().rev().map(|(lam, c)| (c, String::new(), self.basis, lam)))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Writes `c·t^k·b[λ]` terms joined by ` + ` and ` - `, dropping unit
/// coefficients; `0` for no terms.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (&'a Rational, String, SymBasis, &'a Partition)>,
{
    let mut out = String::new();
    for (c, t_part, basis, lam) in terms {
        let negative = *c < zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude != int(1) {
            out.push_str(&format!("{magnitude}·"));
        }
        out.push_str(&t_part);
        let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("{}[{}]", basis.symbol(), parts.join(",")));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn union_product(a: &SymPoly, b: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero(a.basis);
    for (la, ca) in &a.coeffs {
        for (lb, cb) in &b.coeffs {
            out.add_term(la.union(lb), ca * cb);
        }
    }
    out
}

/// Product in the power-sum basis, `p_λ · p_μ = p_{λ∪μ}`.
pub fn p_multiply(a: &SymPoly, b: &SymPoly) -> Result<SymPoly> {
    for x in [a, b] {
        if x.basis != SymBasis::PowerSum {
            return Err(Error::BasisMismatch {
                expected: SymBasis::PowerSum.name(),
                got: x.basis.name(),
            });
        }
    }
    Ok(union_product(a, b))
}

/// `h_k = Σ_{ρ ⊢ k} z_ρ⁻¹ p_ρ`.
pub fn h_to_p(k: usize) -> SymPoly {
    SymPoly::from_terms(
        SymBasis::PowerSum,
        partitions_of(k)
            .into_iter()
            .map(|rho| {
                let z = int(z_factor(&rho) as i64);
                (rho, z.recip())
            }),
    )
}

fn complete_to_p(lam: &Partition) -> SymPoly {
    lam.parts()
        .iter()
        .fold(SymPoly::one(SymBasis::PowerSum), |acc, &k| union_product(&acc, &h_to_p(k)))
}

static S_TO_P: LazyLock<RwLock<HashMap<Partition, SymPoly>>> = LazyLock::new(Default::default);

/// `s_ν = Σ_ρ z_ρ⁻¹ χ^ν_ρ p_ρ`.
pub fn s_to_p(nu: &Partition) -> SymPoly {
    if let Some(v) = S_TO_P.read().expect("s_to_p cache poisoned").get(nu) {
        return v.clone();
    }
    let value = SymPoly::from_terms(
        SymBasis::PowerSum,
        partitions_of(nu.size()).into_iter().map(|rho| {
            let c = int(chi(nu, &rho).expect("same size")) / int(z_factor(&rho) as i64);
            (rho, c)
        }),
    );
    S_TO_P.write().expect("s_to_p cache poisoned").insert(nu.clone(), value.clone());
    value
}

/// `p_ρ = Σ_λ χ^λ_ρ s_λ`.
pub fn p_to_s(rho: &Partition) -> SymPoly {
    SymPoly::from_terms(
        SymBasis::Schur,
        partitions_of(rho.size()).into_iter().map(|lam| {
            let c = int(chi(&lam, rho).expect("same size"));
            (lam, c)
        }),
    )
}

/// `p_k` in the complete basis from Newton's identity
/// `p_k = k h_k − Σ_{i<k} p_i h_{k−i}`.
fn power_in_h(k: usize) -> SymPoly {
    let mut out = SymPoly::basis_element(SymBasis::Complete, Partition::new(vec![k]).expect("k ≥ 1"));
    out = out.scale(&int(k as i64));
    for i in 1..k {
        let shifted = union_product(&power_in_h(i), &SymPoly::basis_element(SymBasis::Complete, Partition::new(vec![k - i]).expect("positive")));
        out.add_scaled(&shifted, &int(-1));
    }
    out
}

/// `p_ρ` in the complete basis.
pub fn p_to_h(rho: &Partition) -> SymPoly {
    rho.parts()
        .iter()
        .fold(SymPoly::one(SymBasis::Complete), |acc, &k| union_product(&acc, &power_in_h(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rational::frac;

    fn p(lam: Partition) -> SymPoly {
        SymPoly::basis_element(SymBasis::PowerSum, lam)
    }

    #[test]
    fn p_multiply_examples() {
        assert_eq!(p_multiply(&p(partition![2]), &p(partition![1])).unwrap(), p(partition![2, 1]));
        let a = p(partition![3, 1]).plus(&p(partition![2])).scale(&frac(2, 3));
        assert_eq!(p_multiply(&p(Partition::empty()), &a).unwrap(), a);
        let x = p(partition![1]).plus(&p(partition![2]));
        let sq = p_multiply(&x, &x).unwrap();
        let expect = SymPoly::from_terms(
            SymBasis::PowerSum,
            [(partition![1, 1], int(1)), (partition![2, 1], int(2)), (partition![2, 2], int(1))],
        );
        assert_eq!(sq, expect);
        let s = SymPoly::basis_element(SymBasis::Schur, partition![1]);
        assert!(matches!(p_multiply(&s, &x), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn h_to_p_examples() {
        assert_eq!(h_to_p(0), p(Partition::empty()));
        assert_eq!(
            h_to_p(2),
            SymPoly::from_terms(SymBasis::PowerSum, [(partition![2], frac(1, 2)), (partition![1, 1], frac(1, 2))])
        );
        assert_eq!(
            h_to_p(3),
            SymPoly::from_terms(
                SymBasis::PowerSum,
                [(partition![3], frac(1, 3)), (partition![2, 1], frac(1, 2)), (partition![1, 1, 1], frac(1, 6))]
            )
        );
    }

    #[test]
    fn schur_power_sum_examples() {
        assert_eq!(
            s_to_p(&partition![1, 1]),
            SymPoly::from_terms(SymBasis::PowerSum, [(partition![1, 1], frac(1, 2)), (partition![2], frac(-1, 2))])
        );
        assert_eq!(
            p_to_s(&partition![2]),
            SymPoly::from_terms(SymBasis::Schur, [(partition![2], int(1)), (partition![1, 1], int(-1))])
        );
        assert_eq!(s_to_p(&Partition::empty()), p(Partition::empty()));
    }

    #[test]
    fn round_trips() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let x = p(lam.clone());
                assert_eq!(x.to_basis(SymBasis::Schur).to_basis(SymBasis::PowerSum), x);
                let s = SymPoly::basis_element(SymBasis::Schur, lam.clone());
                assert_eq!(s.to_basis(SymBasis::PowerSum).to_basis(SymBasis::Schur), s);
                if n <= 6 {
                    assert_eq!(x.to_basis(SymBasis::Complete).to_basis(SymBasis::PowerSum), x);
                }
            }
        }
    }

    #[test]
    fn complete_is_schur_of_a_row() {
        for k in 0..=6 {
            let row = Partition::new(if k == 0 { vec![] } else { vec![k] }).unwrap();
            assert_eq!(h_to_p(k), s_to_p(&row));
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(h_to_p(2).render(), "1/2·p[2] + 1/2·p[1,1]");
        assert_eq!(p_to_s(&partition![2]).render(), "s[2] - s[1,1]");
        assert_eq!(SymPoly::zero(SymBasis::Schur).render(), "0");
    }
}
