//! Symmetric functions `Λ`, the module `Λ[t]`, and the characteristic map
//! `Ch′` identifying `Λ[t]` with `S(n−1)`-invariant functions on `S(n)`.

mod charmap;
mod lt;
mod sym;

pub use charmap::{
    cauchy_check, cauchy_lhs, cauchy_rhs, ch, ch_prime, class_pairing, determinant, frobenius_expand,
    frobenius_holds, frobenius_sum, frobenius_weight, gamma_values, gen_schur, gen_schur_from_characters,
    gen_schur_jt, h_prime, jacobi_trudi, lt_scalar_product, star_product, t_power_determinant,
};
pub use lt::{LtBasis, LtPoly, LtTerm, TensorLtPoly};
pub use sym::{h_to_p, p_multiply, p_to_h, p_to_s, s_to_p, SymBasis, SymPoly};
