//! `Λ[t]`, polynomials in `t` with coefficients in `Λ`, and the tensor square
//! used by the Cauchy-type identity.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::z_factor_big;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{int, parse, to_text, zero, Rational};

use super::sym::{render_terms, SymBasis, SymPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LtBasis {
    #[serde(rename = "powersum")]
    PowerSum,
    #[serde(rename = "schur")]
    Schur,
}

impl LtBasis {
    fn sym(self) -> SymBasis {
        match self {
            LtBasis::PowerSum => SymBasis::PowerSum,
            LtBasis::Schur => SymBasis::Schur,
        }
    }

    pub fn name(self) -> &'static str {
        self.sym().name()
    }
}

/// `Σ c_{k,λ} t^k b_λ` over a basis `b` of `Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtPoly {
    basis: LtBasis,
    coeffs: BTreeMap<(usize, Partition), Rational>,
}

/// One serialised term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtTerm {
    pub t_degree: usize,
    pub partition: Partition,
    pub coeff: String,
    pub basis: LtBasis,
}

impl LtPoly {
    pub fn zero(basis: LtBasis) -> Self {
        LtPoly {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// `t^k`.
    pub fn t_power(k: usize) -> Self {
        Self::term(LtBasis::PowerSum, k, Partition::empty(), int(1))
    }

    pub fn term(basis: LtBasis, k: usize, lam: Partition, c: Rational) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(k, lam, c);
        out
    }

    /// `t^k f` for `f ∈ Λ`; complete-basis input is stored in power sums.
    pub fn from_sym(f: &SymPoly, k: usize) -> Self {
        let basis = match f.basis() {
            SymBasis::Schur => LtBasis::Schur,
            _ => LtBasis::PowerSum,
        };
        let f = f.to_basis(basis.sym());
        let mut out = Self::zero(basis);
        for (lam, c) in f.terms() {
            out.add_term(k, lam.clone(), c.clone());
        }
        out
    }

    pub fn basis(&self) -> LtBasis {
        self.basis
    }

    pub fn coeff(&self, k: usize, lam: &Partition) -> Rational {
        self.coeffs.get(&(k, lam.clone())).cloned().unwrap_or_else(zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Partition, &Rational)> {
        self.coeffs.iter().map(|((k, lam), c)| (*k, lam, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, k: usize, lam: Partition, c: Rational) {
        if c == zero() {
            return;
        }
        match self.coeffs.entry((k, lam)) {
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

    /// The coefficient of `t^k`, an element of `Λ`.
    pub fn t_slice(&self, k: usize) -> SymPoly {
        SymPoly::from_terms(
            self.basis.sym(),
            self.terms()
                .filter(|(d, _, _)| *d == k)
                .map(|(_, lam, c)| (lam.clone(), c.clone())),
        )
    }

    fn t_degrees(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.coeffs.keys().map(|(k, _)| *k).collect();
        ks.dedup();
        ks
    }

    pub fn to_basis(&self, target: LtBasis) -> LtPoly {
        if target == self.basis {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for k in self.t_degrees() {
            for (lam, c) in self.t_slice(k).to_basis(target.sym()).terms() {
                out.add_term(k, lam.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_powersum(&self) -> LtPoly {
        self.to_basis(LtBasis::PowerSum)
    }

    pub fn to_schur(&self) -> LtPoly {
        self.to_basis(LtBasis::Schur)
    }

    pub fn add_scaled(&mut self, other: &LtPoly, factor: &Rational) {
        let other = other.to_basis(self.basis);
        for ((k, lam), c) in other.coeffs {
            self.add_term(k, lam, c * factor);
        }
    }

    pub fn plus(&self, other: &LtPoly) -> LtPoly {
        let mut out = self.clone();
        out.add_scaled(other, &int(1));
        out
    }

    pub fn minus(&self, other: &LtPoly) -> LtPoly {
        let mut out = self.clone();
        out.add_scaled(other, &int(-1));
        out
    }

    pub fn scale(&self, factor: &Rational) -> LtPoly {
        let mut out = Self::zero(self.basis);
        out.add_scaled(self, factor);
        out
    }

    /// Product, computed in power sums and returned in `self`'s basis.
    pub fn times(&self, other: &LtPoly) -> LtPoly {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut out = Self::zero(LtBasis::PowerSum);
        for ((ka, la), ca) in &a.coeffs {
            for ((kb, lb), cb) in &b.coeffs {
                out.add_term(ka + kb, la.union(lb), ca * cb);
            }
        }
        out.to_basis(self.basis)
    }

    /// `⟨t^k p_λ, t^j p_μ⟩ = z_λ δ_{kj} δ_{λμ}`, extended bilinearly.
    pub fn scalar_product(&self, other: &LtPoly) -> Rational {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut total = zero();
        for (key, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(key) {
                total += ca * cb * Rational::from_integer(z_factor_big(&key.1));
            }
        }
        total
    }

    pub fn render(&self) -> String {
        let sym = self.basis.sym();
        let mut ordered: Vec<(&(usize, Partition), &Rational)> = self.coeffs.iter().collect();
        ordered.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| b.0 .1.cmp(&a.0 .1)));
        render_terms(ordered.into_iter().map(|((k, lam), c)| {
            let t = match k {
                0 => String::new(),
                1 => "t·".to_string(),
                _ => format!("t^{k}·"),
            };
            (c, t, sym, lam)
        }))
    }

    pub fn to_terms(&self) -> Vec<LtTerm> {
        let mut ordered: Vec<(&(usize, Partition), &Rational)> = self.coeffs.iter().collect();
        ordered.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| b.0 .1.cmp(&a.0 .1)));
        ordered
            .into_iter()
            .map(|((k, lam), c)| LtTerm {
                t_degree: *k,
                partition: lam.clone(),
                coeff: to_text(c),
                basis: self.basis,
            })
            .collect()
    }

    pub fn from_terms(basis: LtBasis, terms: &[LtTerm]) -> Result<LtPoly> {
        let mut out = Self::zero(basis);
        for term in terms {
            let c = parse(&term.coeff).ok_or_else(|| Error::Parse {
                what: "coefficient",
                input: term.coeff.clone(),
                position: 0,
                message: "expected an integer or p/q".to_string(),
            })?;
            out.add_scaled(&LtPoly::term(term.basis, term.t_degree, term.partition.clone(), c), &int(1));
        }
        Ok(out)
    }
}

impl fmt::Display for LtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `Σ c t^k p_α ⊗ p_β`, with a single shared `t`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorLtPoly {
    coeffs: BTreeMap<(usize, Partition, Partition), Rational>,
}

impl TensorLtPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, k: usize, x: Partition, y: Partition, c: Rational) {
        if c == zero() {
            return;
        }
        match self.coeffs.entry((k, x, y)) {
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

    /// Adds `factor · a ⊗ b`, merging the two `t`-degrees.
    pub fn add_tensor(&mut self, a: &LtPoly, b: &LtPoly, factor: &Rational) {
        let a = a.to_powersum();
        let b = b.to_powersum();
        for (ka, la, ca) in a.terms() {
            for (kb, lb, cb) in b.terms() {
                self.add_term(ka + kb, la.clone(), lb.clone(), ca * cb * factor);
            }
        }
    }

    pub fn coeff(&self, k: usize, x: &Partition, y: &Partition) -> Rational {
        self.coeffs
            .get(&(k, x.clone(), y.clone()))
            .cloned()
            .unwrap_or_else(zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rational::frac;

    #[test]
    fn text_forms() {
        let mut a = LtPoly::term(LtBasis::Schur, 0, partition![1], int(1));
        a.add_term(1, Partition::empty(), int(1));
        assert_eq!(a.render(), "s[1] + t·s[]");
        let mut b = LtPoly::zero(LtBasis::PowerSum);
        b.add_term(0, partition![1, 1], frac(1, 2));
        b.add_term(0, partition![2], frac(1, 2));
        assert_eq!(b.render(), "1/2·p[2] + 1/2·p[1,1]");
        let mut c = LtPoly::t_power(2);
        c.add_term(1, partition![1], int(-3));
        assert_eq!(c.render(), "-3·t·p[1] + t^2·p[]");
        assert_eq!(LtPoly::zero(LtBasis::Schur).render(), "0");
    }

    #[test]
    fn pairing_on_basis() {
        let tp1 = LtPoly::term(LtBasis::PowerSum, 1, partition![1], int(1));
        assert_eq!(tp1.scalar_product(&tp1), int(1));
        let p21 = LtPoly::term(LtBasis::PowerSum, 0, partition![2, 1], int(1));
        assert_eq!(p21.scalar_product(&p21), int(2));
        assert_eq!(p21.scalar_product(&LtPoly::term(LtBasis::PowerSum, 1, partition![2, 1], int(1))), zero());
    }

    #[test]
    fn serialisation_round_trip() {
        let mut a = LtPoly::term(LtBasis::Schur, 0, partition![2, 1], frac(-3, 4));
        a.add_term(2, Partition::empty(), int(5));
        let json = serde_json::to_string(&a.to_terms()).unwrap();
        assert!(json.contains("\"coeff\":\"-3/4\""));
        assert!(json.contains("\"basis\":\"schur\""));
        let terms: Vec<LtTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(LtPoly::from_terms(LtBasis::Schur, &terms).unwrap(), a);
    }

    #[test]
    fn schur_powersum_round_trip_per_slice() {
        let mut a = LtPoly::term(LtBasis::Schur, 0, partition![2, 1], int(2));
        a.add_term(3, partition![1, 1], frac(1, 3));
        assert_eq!(a.to_powersum().to_schur(), a);
    }

    #[test]
    fn product_adds_t_degrees() {
        let a = LtPoly::term(LtBasis::PowerSum, 1, partition![2], int(2));
        let b = LtPoly::term(LtBasis::PowerSum, 2, partition![1], int(3));
        assert_eq!(a.times(&b), LtPoly::term(LtBasis::PowerSum, 3, partition![2, 1], int(6)));
    }
}
