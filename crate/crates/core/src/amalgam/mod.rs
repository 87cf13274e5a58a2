//! Reduced words in `Aut K² = Aff(2,K) *_B Elem(K)` and the free-product
//! structure of `Aut₁ K²`.
//!
//! `B` is the group of affine elementary maps `(z1·x + t0, z2·y + c·x + d)`,
//! so its linear parts are lower triangular.

mod corner;
mod factor;
mod format;
mod free;
mod word;

pub use corner::{conjugate_to_corner, hypothesis_h_witness, in_congruence_borel, HContext, Witness, WitnessRecord};
pub use factor::{invert, power, vdk_factor};
pub use format::{parse_word, WORD_FORMAT_VERSION};
pub use free::{free1_decompose, FreeWord};
pub use word::{affine_rep, elem_rep, normal_form, word_type, AmalgamWord, Factor, Side, WordType};
