//! The characteristic maps `Ch: C → Λ` and `Ch′: C′ → Λ[t]`, generalized Schur
//! functions and the identities relating them to the character tables.

use std::collections::BTreeMap;

use crate::classes::{class_of_permutation, classes_of, z_factor, ClassIndex};
use crate::error::{Error, Result};
use crate::gamma::{char_pairs_of, gamma_mn, CharPair};
use crate::greene::{phi, MarkedSkewTriple};
use crate::partition::{dim, factorial, partitions_of, subpartitions, Partition};
use crate::perm::{all_permutations, Permutation};
use crate::rational::{int, sign, zero, Rational};

use super::lt::{LtBasis, LtPoly, TensorLtPoly};
use super::sym::{h_to_p, SymBasis, SymPoly};

/// `Ch(f) = Σ_{ρ ⊢ m} z_ρ⁻¹ f_ρ p_ρ` for a class function on `S(m)` given by
/// cycle type.
pub fn ch(values: &BTreeMap<Partition, Rational>, m: usize) -> Result<SymPoly> {
    let mut out = SymPoly::zero(SymBasis::PowerSum);
    for rho in partitions_of(m) {
        let v = values
            .get(&rho)
            .ok_or_else(|| Error::MissingClassValue(format!("cycle type ({rho})")))?;
        out.add_term(rho.clone(), v / int(z_factor(&rho) as i64));
    }
    Ok(out)
}

/// `Ch′(g) = Σ_j t^{j−1} Σ_{ρ ⊢ n−j} z_ρ⁻¹ g_{(j,ρ)} p_ρ`.
pub fn ch_prime(values: &BTreeMap<ClassIndex, Rational>, n: usize) -> Result<LtPoly> {
    let mut out = LtPoly::zero(LtBasis::PowerSum);
    for class in classes_of(n) {
        let v = values
            .get(&class)
            .ok_or_else(|| Error::MissingClassValue(class.to_string()))?;
        let z = int(z_factor(class.rho()) as i64);
        out.add_term(class.j() - 1, class.rho().clone(), v / z);
    }
    Ok(out)
}

/// `Γ^{λ,μ}` on every class of `S(n)`.
pub fn gamma_values(pair: &CharPair) -> Result<BTreeMap<ClassIndex, Rational>> {
    classes_of(pair.n())
        .into_iter()
        .map(|c| Ok((c.clone(), gamma_mn(pair, &c)?)))
        .collect()
}

/// `S^{λ,μ} = Σ_{ν ⊆ μ} φ(μ/ν; λ/ν) t^{|λ/ν|−1} s_ν`, in the Schur basis.
pub fn gen_schur(pair: &CharPair) -> LtPoly {
    let mut out = LtPoly::zero(LtBasis::Schur);
    for nu in subpartitions(pair.mu()) {
        let triple = MarkedSkewTriple::new(pair.lam().clone(), pair.mu().clone(), nu.clone()).expect("ν ⊆ μ ↗ λ");
        let k = pair.n() - nu.size() - 1;
        out.add_term(k, nu, phi(&triple));
    }
    out
}

/// `Ch′(Γ^{λ,μ})` from the table values.
pub fn gen_schur_from_characters(pair: &CharPair) -> Result<LtPoly> {
    ch_prime(&gamma_values(pair)?, pair.n())
}

/// The pairing `⟨t^k p_λ, t^j p_μ⟩ = z_λ δ_{kj} δ_{λμ}`.
pub fn lt_scalar_product(a: &LtPoly, b: &LtPoly) -> Rational {
    a.scalar_product(b)
}

/// `h_k` in `Λ[t]`, with `h_0 = 1` and `h_k = 0` for `k < 0`.
fn complete(k: i64) -> LtPoly {
    if k < 0 {
        LtPoly::zero(LtBasis::PowerSum)
    } else {
        LtPoly::from_sym(&h_to_p(k as usize), 0)
    }
}

/// `h′_k = Σ_{j=1}^k t^{j−1} h_{k−j}`.
pub fn h_prime(k: usize) -> LtPoly {
    let mut out = LtPoly::zero(LtBasis::PowerSum);
    for j in 1..=k {
        out.add_scaled(&LtPoly::from_sym(&h_to_p(k - j), j - 1), &int(1));
    }
    out
}

/// Determinant by cofactor expansion along the first column, skipping zero
/// entries.
pub fn determinant(m: &[Vec<LtPoly>]) -> LtPoly {
    let size = m.len();
    if size == 0 {
        return LtPoly::t_power(0);
    }
    if size == 1 {
        return m[0][0].to_powersum();
    }
    let mut out = LtPoly::zero(LtBasis::PowerSum);
    for i in 0..size {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LtPoly>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = m[i][0].times(&determinant(&minor));
        out.add_scaled(&term, &sign(i));
    }
    out
}

/// The `m × m` matrix whose row `i` is `h_{1−i+1}, …, h_{m−1−i+1}, h′_{m−i+1}`.
fn t_power_matrix(m: usize) -> Vec<Vec<LtPoly>> {
    (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    if j == m {
                        h_prime(m - i + 1)
                    } else {
                        complete(j as i64 - i as i64 + 1)
                    }
                })
                .collect()
        })
        .collect()
}

/// `(−1)^{m−1} det` of the matrix with `h′` in its last column; equals `t^{m−1}`.
pub fn t_power_determinant(m: usize) -> LtPoly {
    determinant(&t_power_matrix(m)).scale(&sign(m - 1))
}

/// `s_ν = det(h_{ν_i − i + j})`.
pub fn jacobi_trudi(nu: &Partition) -> LtPoly {
    let l = nu.len();
    let matrix: Vec<Vec<LtPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| complete(nu.row_len(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// `S^{λ,μ}` from the determinantal formula: each `t^{m−1} s_ν` is replaced
/// by the `h′`-determinant times the Jacobi–Trudi determinant of `s_ν`.
pub fn gen_schur_jt(pair: &CharPair) -> LtPoly {
    let mut out = LtPoly::zero(LtBasis::PowerSum);
    for nu in subpartitions(pair.mu()) {
        let triple = MarkedSkewTriple::new(pair.lam().clone(), pair.mu().clone(), nu.clone()).expect("ν ⊆ μ ↗ λ");
        let coeff = phi(&triple);
        if coeff == zero() {
            continue;
        }
        let m = pair.n() - nu.size();
        let term = t_power_determinant(m).times(&jacobi_trudi(&nu));
        out.add_scaled(&term, &coeff);
    }
    out
}

/// `dim λ / (n dim μ)`, the reciprocal of `⟨S^{λ,μ}, S^{λ,μ}⟩`.
pub fn frobenius_weight(pair: &CharPair) -> Rational {
    int(dim(pair.lam()) as i64) / int((pair.n() as u64 * dim(pair.mu())) as i64)
}

/// Coefficients of `t^{j−1} p_ρ` in the basis `S^{λ,μ}`:
/// `dim λ/(n dim μ) · Γ^{λ,μ}_{(j,ρ)}`.
pub fn frobenius_expand(class: &ClassIndex) -> Result<Vec<(CharPair, Rational)>> {
    char_pairs_of(class.n())
        .into_iter()
        .map(|p| {
            let g = gamma_mn(&p, class)?;
            let w = frobenius_weight(&p);
            Ok((p, g * w))
        })
        .collect()
}

/// `Σ c_{λ,μ} S^{λ,μ}` in power sums, with `c = w·Γ` if `weighted` and `c = Γ`
/// as printed otherwise.
pub fn frobenius_sum(class: &ClassIndex, weighted: bool) -> Result<LtPoly> {
    let mut out = LtPoly::zero(LtBasis::PowerSum);
    for p in char_pairs_of(class.n()) {
        let mut c = gamma_mn(&p, class)?;
        if weighted {
            c *= frobenius_weight(&p);
        }
        out.add_scaled(&gen_schur(&p), &c);
    }
    Ok(out)
}

/// Whether `t^{j−1} p_ρ` equals [`frobenius_sum`].
pub fn frobenius_holds(class: &ClassIndex, weighted: bool) -> Result<bool> {
    let target = LtPoly::term(LtBasis::PowerSum, class.j() - 1, class.rho().clone(), int(1));
    Ok(frobenius_sum(class, weighted)? == target)
}

/// `Σ_{|λ| = n} n⁻¹ (dim λ/dim μ) S^{λ,μ} ⊗ S^{λ,μ}`.
pub fn cauchy_lhs(n: usize) -> TensorLtPoly {
    let mut out = TensorLtPoly::new();
    for p in char_pairs_of(n) {
        let s = gen_schur(&p).to_powersum();
        let w = int(dim(p.lam()) as i64) / int((n as u64 * dim(p.mu())) as i64);
        out.add_tensor(&s, &s, &w);
    }
    out
}

/// `Σ_{k + |λ| = n−1} t^{2k} z_λ⁻¹ p_λ ⊗ p_λ`.
pub fn cauchy_rhs(n: usize) -> TensorLtPoly {
    let mut out = TensorLtPoly::new();
    for k in 0..n {
        for lam in partitions_of(n - 1 - k) {
            let c = int(z_factor(&lam) as i64).recip();
            out.add_term(2 * k, lam.clone(), lam, c);
        }
    }
    out
}

/// For each graded piece `1..=max_degree`, whether both sides agree.
pub fn cauchy_check(max_degree: usize) -> Vec<(usize, bool)> {
    (1..=max_degree)
        .map(|n| (n, cauchy_lhs(n) == cauchy_rhs(n)))
        .collect()
}

/// `⟨f, g⟩′ = (1/(n−1)!) Σ_w f(w) g(w⁻¹)`, summed class by class.
pub fn class_pairing(f: &BTreeMap<ClassIndex, Rational>, g: &BTreeMap<ClassIndex, Rational>, n: usize) -> Result<Rational> {
    let mut total = zero();
    for c in classes_of(n) {
        let fv = f.get(&c).ok_or_else(|| Error::MissingClassValue(c.to_string()))?;
        let gv = g.get(&c).ok_or_else(|| Error::MissingClassValue(c.to_string()))?;
        total += fv * gv * int(c.size() as i64);
    }
    Ok(total / int(factorial(n - 1) as i64))
}

/// `(f ∗ g)(π) = 1/(m!(k−1)!) Σ_{σ ∈ S(m+k−1)} (f × g)(σ⁻¹πσ)`, where `f × g`
/// lives on `S(m) × S(k)` with `S(m)` on the first `m` symbols. `f` is given by
/// cycle type on `S(m)`, `g` by class on `S(k)`; the result is by class on
/// `S(m+k)`.
pub fn star_product(
    f: &BTreeMap<Partition, Rational>,
    m: usize,
    g: &BTreeMap<ClassIndex, Rational>,
    k: usize,
) -> Result<BTreeMap<ClassIndex, Rational>> {
    let n = m + k;
    let sigmas: Vec<Permutation> = all_permutations(n - 1).into_iter().map(|s| s.extend(1)).collect();
    let norm = int((factorial(m) * factorial(k - 1)) as i64);
    let mut out = BTreeMap::new();
    for class in classes_of(n) {
        let pi = class.representative();
        let mut total = zero();
        for s in &sigmas {
            let tau = s.inverse().compose(&pi).compose(s);
            let images = tau.images();
            if images[..m].iter().any(|&x| x >= m) {
                continue;
            }
            let left = Permutation::from_images(images[..m].to_vec())?;
            let right = Permutation::from_images(images[m..].iter().map(|&x| x - m).collect())?;
            let fv = f
                .get(&left.cycle_type())
                .ok_or_else(|| Error::MissingClassValue(format!("cycle type ({})", left.cycle_type())))?;
            let rc = class_of_permutation(&right);
            let gv = g.get(&rc).ok_or_else(|| Error::MissingClassValue(rc.to_string()))?;
            total += fv * gv;
        }
        out.insert(class, total / &norm);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::rational::frac;

    fn pair(l: Partition, m: Partition) -> CharPair {
        CharPair::new(l, m).unwrap()
    }

    fn lt(terms: &[(usize, Partition, Rational)], basis: LtBasis) -> LtPoly {
        let mut out = LtPoly::zero(basis);
        for (k, lam, c) in terms {
            out.add_term(*k, lam.clone(), c.clone());
        }
        out
    }

    #[test]
    fn ch_prime_degree_two() {
        let p = pair(partition![2], partition![1]);
        let expect = lt(&[(0, partition![1], int(1)), (1, Partition::empty(), int(1))], LtBasis::PowerSum);
        assert_eq!(gen_schur_from_characters(&p).unwrap(), expect);
        let p = pair(partition![1, 1], partition![1]);
        let expect = lt(&[(0, partition![1], int(1)), (1, Partition::empty(), int(-1))], LtBasis::PowerSum);
        assert_eq!(gen_schur_from_characters(&p).unwrap(), expect);
    }

    #[test]
    fn ch_prime_requires_every_class() {
        let mut values = gamma_values(&pair(partition![2, 1], partition![2])).unwrap();
        values.pop_first();
        assert!(matches!(ch_prime(&values, 3), Err(Error::MissingClassValue(_))));
    }

    #[test]
    fn identity_character_maps_to_h_prime() {
        for n in 1..=6 {
            let ones: BTreeMap<ClassIndex, Rational> = classes_of(n).into_iter().map(|c| (c, int(1))).collect();
            assert_eq!(ch_prime(&ones, n).unwrap(), h_prime(n));
        }
    }

    #[test]
    fn gen_schur_examples() {
        let s = gen_schur(&pair(partition![2], partition![1]));
        assert_eq!(s.render(), "s[1] + t·s[]");
        let s = gen_schur(&pair(partition![1, 1], partition![1]));
        assert_eq!(s.render(), "s[1] - t·s[]");
    }

    #[test]
    fn scalar_product_examples() {
        let a = gen_schur(&pair(partition![2], partition![1]));
        let b = gen_schur(&pair(partition![1, 1], partition![1]));
        assert_eq!(lt_scalar_product(&a, &a), int(2));
        assert_eq!(lt_scalar_product(&a, &b), zero());
    }

    #[test]
    fn h_prime_examples() {
        assert_eq!(h_prime(1), LtPoly::t_power(0));
        let expect = LtPoly::from_sym(&h_to_p(1), 0).plus(&LtPoly::t_power(1));
        assert_eq!(h_prime(2), expect);
        let expect = LtPoly::from_sym(&h_to_p(2), 0)
            .plus(&LtPoly::from_sym(&h_to_p(1), 1))
            .plus(&LtPoly::t_power(2));
        assert_eq!(h_prime(3), expect);
    }

    #[test]
    fn t_power_identity() {
        for m in 1..=6 {
            assert_eq!(t_power_determinant(m), LtPoly::t_power(m - 1), "m = {m}");
        }
    }

    #[test]
    fn jacobi_trudi_gives_schur() {
        for n in 0..=5 {
            for nu in partitions_of(n) {
                let s = LtPoly::term(LtBasis::Schur, 0, nu.clone(), int(1));
                assert_eq!(jacobi_trudi(&nu), s.to_powersum(), "{nu}");
            }
        }
    }

    #[test]
    fn determinantal_formula_small() {
        for p in [pair(partition![2], partition![1]), pair(partition![1, 1], partition![1])] {
            assert_eq!(gen_schur_jt(&p), gen_schur(&p).to_powersum());
        }
    }

    #[test]
    fn frobenius_degree_two() {
        let c = ClassIndex::new(1, partition![1]).unwrap();
        let coeffs: Vec<Rational> = frobenius_expand(&c).unwrap().into_iter().map(|(_, v)| v).collect();
        assert_eq!(coeffs, [frac(1, 2), frac(1, 2)]);
        let c = ClassIndex::new(2, Partition::empty()).unwrap();
        let coeffs: Vec<Rational> = frobenius_expand(&c).unwrap().into_iter().map(|(_, v)| v).collect();
        assert_eq!(coeffs, [frac(1, 2), frac(-1, 2)]);
        assert!(frobenius_holds(&c, true).unwrap());
        assert!(!frobenius_holds(&c, false).unwrap());
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_check(3).into_iter().all(|(_, ok)| ok));
        let rhs = cauchy_rhs(3);
        assert_eq!(rhs.coeff(0, &partition![1, 1], &partition![1, 1]), frac(1, 2));
        assert_eq!(rhs.coeff(2, &partition![1], &partition![1]), int(1));
        assert_eq!(rhs.coeff(4, &Partition::empty(), &Partition::empty()), int(1));
    }

    #[test]
    fn module_product_small() {
        // indicator of the transposition class of S(2) times the identity of C′(2)
        let f: BTreeMap<Partition, Rational> = [(partition![2], int(1)), (partition![1, 1], zero())].into();
        let g: BTreeMap<ClassIndex, Rational> = classes_of(2).into_iter().map(|c| (c, int(1))).collect();
        let fg = star_product(&f, 2, &g, 2).unwrap();
        let lhs = ch_prime(&fg, 4).unwrap();
        let rhs = LtPoly::from_sym(&ch(&f, 2).unwrap(), 0).times(&ch_prime(&g, 2).unwrap());
        assert_eq!(lhs, rhs);
    }
}
