//! Points of the projective line and their square-zero endomorphisms.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::scalar::Field;

/// A line through the origin in K², stored as its canonical representative:
/// `(a, 1)` in the affine chart or `(1, 0)` at infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<F: Field> {
    a: F,
    b: F,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(a: &F, b: &F) -> Result<Self> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::ZeroVector);
            }
            return Ok(Self::infinity());
        }
        Ok(ProjPoint {
            a: a.div(b).unwrap(),
            b: F::one(),
        })
    }

    /// The point `(a, 1)`.
    pub fn affine(a: F) -> Self {
        ProjPoint { a, b: F::one() }
    }

    /// The point `(1, 0)`.
    pub fn infinity() -> Self {
        ProjPoint {
            a: F::one(),
            b: F::zero(),
        }
    }

    /// The line `(0, 1)`, i.e. the `y`-axis, along which plain elementary
    /// shears `(x, y + f(x))` act.
    pub fn vertical() -> Self {
        Self::affine(F::zero())
    }

    pub fn from_vec(v: &[F; 2]) -> Result<Self> {
        Self::new(&v[0], &v[1])
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    pub fn pair(&self) -> [F; 2] {
        [self.a.clone(), self.b.clone()]
    }

    pub fn is_infinity(&self) -> bool {
        self.b.is_zero()
    }

    /// Whether the nonzero vector `v` lies on this line.
    pub fn contains(&self, v: &[F; 2]) -> bool {
        self.a.mul(&v[1]) == self.b.mul(&v[0])
    }

    /// The canonical square-zero endomorphism with image this line.
    pub fn nil_endo(&self) -> NilEndo<F> {
        NilEndo::new(self)
    }

    pub fn sample<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Self {
        if rng.gen_ratio(1, 6) {
            Self::infinity()
        } else {
            Self::affine(F::sample(rng, height))
        }
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl<F: Field> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{self}")
    }
}

impl<F: Field> Serialize for ProjPoint<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string()].serialize(s)
    }
}

/// A rank-one square-zero 2×2 matrix `e_δ`.
///
/// For `δ = (a, 1)` this is `v·wᵀ` with `v = (a, 1)` and `w = (1, -a)`. At
/// infinity the sign is flipped to `w = (0, 1)`, giving `e = [[0,1],[0,0]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NilEndo<F: Field> {
    e: Mat2<F>,
    w: [F; 2],
}

impl<F: Field> NilEndo<F> {
    pub fn new(delta: &ProjPoint<F>) -> Self {
        let [a, b] = delta.pair();
        let w = if delta.is_infinity() {
            [F::zero(), F::one()]
        } else {
            [b.clone(), a.neg()]
        };
        NilEndo {
            e: Mat2::new(a.mul(&w[0]), a.mul(&w[1]), b.mul(&w[0]), b.mul(&w[1])),
            w,
        }
    }

    pub fn matrix(&self) -> &Mat2<F> {
        &self.e
    }

    /// The row vector `w` with `e = v·wᵀ`; its kernel is the line itself.
    pub fn covector(&self) -> &[F; 2] {
        &self.w
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(ProjPoint::new(&q(0), &q(5)).unwrap(), ProjPoint::affine(q(0)));
        assert_eq!(ProjPoint::new(&q(3), &q(0)).unwrap(), ProjPoint::infinity());
        assert_eq!(
            ProjPoint::new(&q(2), &q(4)).unwrap(),
            ProjPoint::new(&q(1), &q(2)).unwrap()
        );
        assert_eq!(ProjPoint::new(&q(1), &q(2)).unwrap().a(), &Q::new(1, 2));
        assert_eq!(ProjPoint::<Q>::new(&q(0), &q(0)), Err(Error::ZeroVector));
    }

    #[test]
    fn nil_endo_examples() {
        let e0 = ProjPoint::<Q>::vertical().nil_endo();
        assert_eq!(e0.matrix(), &Mat2::from_i64(0, 0, 1, 0));
        let einf = ProjPoint::<Q>::infinity().nil_endo();
        assert_eq!(einf.matrix(), &Mat2::from_i64(0, 1, 0, 0));
        for d in [ProjPoint::affine(q(3)), ProjPoint::infinity()] {
            let e = d.nil_endo();
            assert!(e.matrix().mul(e.matrix()).is_zero());
        }
    }
}
