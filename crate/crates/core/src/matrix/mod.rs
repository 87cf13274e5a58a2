//! `GL₁(2,K[t])` as a free product of the groups `E_δ`, and the isomorphism
//! `ψ` with `Aut₁ K²`.
//!
//! `E_δ` is the group of matrices `id + t·f(t)·e_δ` where `e_δ` is the
//! canonical square-zero matrix with image `δ` (see [`crate::proj::NilEndo`]).
//! `ψ` sends `τ_δ(f)` to `id + (f/t)·e_δ` and composition to the matrix
//! product in the same order.

mod factor;
mod pingpong;
mod psi;

pub use factor::{
    bilinear_bracket, efactor_product, gls_membership, matrix_factor, matrix_factor_steps, matrix_free_nf, EFactor,
    FactorStep, MatFreeWord,
};
pub use pingpong::{pingpong_check, PolyVec};
pub use psi::{from_matrix, psi_inverse_word, psi_word, to_matrix};
