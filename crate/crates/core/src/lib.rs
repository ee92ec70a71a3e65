//! Exact computation of the generalized characters of the symmetric group.
//!
//! The generalized characters `Γ^{λ,μ↗λ}` are the zonal spherical functions of
//! the Gelfand pair `(S(n) × S(n−1), Diag S(n−1))`, scaled by `dim μ`. They are
//! constant on `S(n−1)`-conjugacy classes of `S(n)`, which are labelled by pairs
//! `(j, ρ)`: `j` is the length of the cycle containing `n` and `ρ` is the cycle
//! type of the rest.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`], [`skew`], [`tableau`]: Young diagram combinatorics.
//! - [`perm`], [`classes`], [`characters`]: permutations, `S(n−1)`-classes and
//!   classical Murnaghan–Nakayama characters.
//! - [`greene`]: the rational functions `X_{λ/ν}`, `X_{λ/ν,μ/ν}` and the
//!   coefficients `Δ`, `φ`.
//! - [`gamma`], [`table`]: generalized characters by the Murnaghan–Nakayama type
//!   rule, two independent oracles, and character tables.
//! - [`symfunc`]: `Λ`, `Λ[t]`, the characteristic map `Ch′` and generalized Schur
//!   functions.
//! - [`verify`]: invariant suites shared by the CLI and the test targets.
//!
//! All values are exact; [`Rational`] is an arbitrary-precision rational.

pub mod characters;
pub mod classes;
pub mod error;
pub mod gamma;
pub mod greene;
pub mod partition;
pub mod perm;
pub mod rational;
pub mod skew;
pub mod symfunc;
pub mod table;
pub mod tableau;
pub mod verify;

pub use characters::chi;
pub use classes::{class_of_permutation, class_size, classes_of, z_factor, ClassIndex};
pub use error::{Error, Result};
pub use gamma::{
    char_pairs_of, gamma_def_oracle, gamma_mn, gamma_ncycle, gamma_syt_oracle, CharPair,
};
pub use greene::{
    delta_pair, delta_skew, phi, x_pair_closed, x_pair_def, x_skew_closed, x_skew_def,
    EvaluationPoint, MarkedSkewTriple,
};
pub use partition::{dim, partitions_of, Cell, Partition};
pub use perm::Permutation;
pub use rational::Rational;
pub use skew::{SkewClassification, SkewShape};
pub use table::{build_table, build_table_parallel, GeneralizedCharacterTable, Scaling};
pub use tableau::{enumerate_syt, StandardTableau};
