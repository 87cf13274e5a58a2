//! Exact computations in the automorphism group of the affine plane.
//!
//! The crate factors polynomial automorphisms of K² into reduced words of
//! the amalgam `Aff(2,K) *_B Elem(K)`, decomposes the subgroup `Aut₁` of maps
//! tangent to the identity at the origin into a free product of shear groups,
//! and carries that decomposition to `GL₁(2,K[t])`, the 2×2 polynomial
//! matrices with value `id` at `t = 0`. A set of finite checks covers the
//! group-theoretic facts behind linearity obstructions for these groups.
//!
//! All arithmetic is exact. Everything is generic over [`scalar::Field`]:
//! rationals, prime fields, and rational functions in `z` over either.
//!
//! ```
//! use autk2::prelude::*;
//!
//! let t: PlaneAuto<Rational> = "x, y + x^2".parse().unwrap();
//! let word = vdk_factor(&t).unwrap();
//! assert_eq!(word.recompose(), t);
//! assert_eq!(to_matrix(&t).unwrap().to_string(), "1, 0 ; t, 1");
//! ```

pub mod amalgam;
pub mod auto;
pub mod error;
pub mod lab;
pub mod mat2;
pub mod matrix;
pub mod parse;
pub mod poly1;
pub mod poly2;
pub mod proj;
pub mod random;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};

/// The commonly used types and functions.
pub mod prelude {
    pub use crate::amalgam::{
        conjugate_to_corner, free1_decompose, hypothesis_h_witness, invert, normal_form, parse_word, vdk_factor,
        word_type, AmalgamWord, Factor, FreeWord, HContext, Side, WordType,
    };
    pub use crate::auto::{
        g_n_element, named_generator, tau_delta, AffineAuto, ElemAuto, Flags, GnElem, Named, PlaneAuto,
    };
    pub use crate::error::{Error, Result};
    pub use crate::mat2::{Mat2, PolyMat2};
    pub use crate::matrix::{
        from_matrix, matrix_factor, matrix_free_nf, pingpong_check, to_matrix, EFactor, MatFreeWord, PolyVec,
    };
    pub use crate::parse::{parse_mat, parse_poly2, parse_poly_t, parse_poly_x, parse_polymat, parse_scalar};
    pub use crate::poly1::{Degree, Poly1};
    pub use crate::poly2::{Mono, Poly2};
    pub use crate::proj::{NilEndo, ProjPoint};
    pub use crate::report::{Record, Report};
    pub use crate::scalar::{Field, Fp, RatFunc, Rational};
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/automorphisms.md")]
    mod automorphisms {}
    #[doc = include_str!("../../../book/src/amalgam.md")]
    mod amalgam {}
    #[doc = include_str!("../../../book/src/free-product.md")]
    mod free_product {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/lab.md")]
    mod lab {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
