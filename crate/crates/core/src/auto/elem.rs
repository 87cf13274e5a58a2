use std::fmt;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::{Degree, Poly1};
use crate::poly2::Poly2;
use crate::scalar::Field;

use super::PlaneAuto;

/// The elementary map `(x, y) ↦ (z1·x + t0, z2·y + f(x))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemAuto<F: Field> {
    pub z1: F,
    pub t0: F,
    pub z2: F,
    pub f: Poly1<F>,
}

impl<F: Field> ElemAuto<F> {
    pub fn new(z1: F, t0: F, z2: F, f: Poly1<F>) -> Result<Self> {
        if z1.is_zero() || z2.is_zero() {
            return Err(Error::NotAnAutomorphism("elementary map with a zero unit".into()));
        }
        Ok(ElemAuto { z1, t0, z2, f })
    }

    pub fn identity() -> Self {
        Self::shear(Poly1::zero())
    }

    /// `(x, y + f(x))`.
    pub fn shear(f: Poly1<F>) -> Self {
        ElemAuto {
            z1: F::one(),
            t0: F::zero(),
            z2: F::one(),
            f,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.z1.is_one() && self.t0.is_zero() && self.z2.is_one() && self.f.is_zero()
    }

    /// Membership in `B = Aff ∩ Elem`, i.e. `deg f ≤ 1`.
    pub fn in_b(&self) -> bool {
        self.f.degree() <= Degree::Finite(1)
    }

    pub fn to_plane(&self) -> PlaneAuto<F> {
        let p = Poly2::linear(self.z1.clone(), F::zero(), self.t0.clone());
        let q = &Poly2::linear(F::zero(), self.z2.clone(), F::zero()) + &Poly2::from_poly_x(&self.f);
        PlaneAuto::new(p, q)
    }

    pub fn from_plane(a: &PlaneAuto<F>) -> Option<Self> {
        let (p, q) = a.components();
        if p.degree() != Degree::Finite(1) || !p.coeff_xy(0, 1).is_zero() {
            return None;
        }
        let z1 = p.coeff_xy(1, 0);
        let t0 = p.coeff_xy(0, 0);
        let z2 = q.coeff_xy(0, 1);
        if z1.is_zero() || z2.is_zero() {
            return None;
        }
        let rest = q - &Poly2::linear(F::zero(), z2.clone(), F::zero());
        let f = rest.as_poly_x()?;
        Some(ElemAuto { z1, t0, z2, f })
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let inner = Poly1::from_coeffs(vec![o.t0.clone(), o.z1.clone()]);
        ElemAuto {
            z1: self.z1.mul(&o.z1),
            t0: self.z1.mul(&o.t0).add(&self.t0),
            z2: self.z2.mul(&o.z2),
            f: &o.f.scale(&self.z2) + &self.f.compose(&inner),
        }
    }

    pub fn inverse(&self) -> Self {
        let z1i = self.z1.inv().unwrap();
        let z2i = self.z2.inv().unwrap();
        // x = (X - t0)/z1, y = (Y - f(x))/z2
        let xof = Poly1::from_coeffs(vec![self.t0.neg().mul(&z1i), z1i.clone()]);
        ElemAuto {
            z1: z1i,
            t0: self.t0.neg().mul(&self.z1.inv().unwrap()),
            z2: z2i.clone(),
            f: self.f.compose(&xof).scale(&z2i.neg()),
        }
    }

    /// As an affine map, when `deg f ≤ 1`.
    pub fn as_affine(&self) -> Option<AffineAuto<F>> {
        if !self.in_b() {
            return None;
        }
        let l = Mat2::new(self.z1.clone(), F::zero(), self.f.coeff(1), self.z2.clone());
        Some(AffineAuto {
            l,
            v: [self.t0.clone(), self.f.coeff(0)],
        })
    }
}

impl<F: Field> fmt::Display for ElemAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {} | {}", self.z1, self.t0, self.z2, self.f.fmt_var("x"))
    }
}

impl<F: Field> fmt::Debug for ElemAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElemAuto({self})")
    }
}

/// The affine map `v ↦ L·v + b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineAuto<F: Field> {
    pub l: Mat2<F>,
    pub v: [F; 2],
}

impl<F: Field> AffineAuto<F> {
    pub fn new(l: Mat2<F>, v: [F; 2]) -> Result<Self> {
        if l.det().is_zero() {
            return Err(Error::NotAnAutomorphism(format!("singular linear part [{l}]")));
        }
        Ok(AffineAuto { l, v })
    }

    pub fn linear(l: Mat2<F>) -> Self {
        AffineAuto {
            l,
            v: [F::zero(), F::zero()],
        }
    }

    pub fn identity() -> Self {
        Self::linear(Mat2::identity())
    }

    pub fn is_identity(&self) -> bool {
        self.l.is_identity() && self.v.iter().all(F::is_zero)
    }

    /// Membership in `B`: the linear part is lower triangular.
    pub fn in_b(&self) -> bool {
        self.l.is_lower_triangular()
    }

    pub fn to_plane(&self) -> PlaneAuto<F> {
        let [[a, b], [c, d]] = &self.l.m;
        PlaneAuto::new(
            Poly2::linear(a.clone(), b.clone(), self.v[0].clone()),
            Poly2::linear(c.clone(), d.clone(), self.v[1].clone()),
        )
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let w = self.l.apply(&o.v);
        AffineAuto {
            l: self.l.mul(&o.l),
            v: [w[0].add(&self.v[0]), w[1].add(&self.v[1])],
        }
    }

    pub fn inverse(&self) -> Self {
        let li = self.l.inv().unwrap();
        let w = li.apply(&self.v);
        AffineAuto {
            l: li,
            v: [w[0].neg(), w[1].neg()],
        }
    }

    /// As an elementary map, when the affine map lies in `B`.
    pub fn as_elem(&self) -> Option<ElemAuto<F>> {
        if !self.in_b() {
            return None;
        }
        let [[a, _], [c, d]] = &self.l.m;
        Some(ElemAuto {
            z1: a.clone(),
            t0: self.v[0].clone(),
            z2: d.clone(),
            f: Poly1::from_coeffs(vec![self.v[1].clone(), c.clone()]),
        })
    }
}

impl<F: Field> fmt::Display for AffineAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}, {}", self.l, self.v[0], self.v[1])
    }
}

impl<F: Field> fmt::Debug for AffineAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineAuto({self})")
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

    fn e(z1: i64, t0: i64, z2: i64, f: &[i64]) -> ElemAuto<Q> {
        ElemAuto::new(
            q(z1),
            q(t0),
            q(z2),
            Poly1::from_coeffs(f.iter().map(|&c| q(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn elem_compose_matches_plane() {
        let a = e(2, 1, -3, &[0, 1, 0, 5]);
        let b = e(-1, 4, 7, &[2, 0, 3]);
        assert_eq!(a.compose(&b).to_plane(), a.to_plane().compose(&b.to_plane()));
        assert_eq!(ElemAuto::from_plane(&a.to_plane()), Some(a.clone()));
    }

    #[test]
    fn elem_inverse() {
        let a = e(2, 1, -3, &[0, 1, 0, 5]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn affine_round_trips() {
        let a = AffineAuto::new(Mat2::from_i64(1, 2, 3, 5), [q(1), q(-1)]).unwrap();
        let b = AffineAuto::new(Mat2::from_i64(0, 1, 1, 0), [q(2), q(0)]).unwrap();
        assert_eq!(a.compose(&b).to_plane(), a.to_plane().compose(&b.to_plane()));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.to_plane().as_affine(), Some(a));
    }

    #[test]
    fn b_membership_agrees() {
        let a = AffineAuto::new(Mat2::from_i64(2, 0, 3, 5), [q(1), q(-1)]).unwrap();
        let el = a.as_elem().unwrap();
        assert_eq!(el.to_plane(), a.to_plane());
        assert_eq!(el.as_affine(), Some(a));
    }
}
