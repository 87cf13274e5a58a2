use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::parse::{parse_poly2_at, split_exact};
use crate::poly1::Degree;
use crate::poly2::{Mono, Poly2};
use crate::scalar::Field;

use super::{AffineAuto, ElemAuto};

/// A polynomial map `(x, y) ↦ (P(x, y), Q(x, y))`.
///
/// Composition is `(φ∘ψ)(v) = φ(ψ(v))`: the right factor acts first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneAuto<F: Field> {
    p: Poly2<F>,
    q: Poly2<F>,
}

/// Subgroup membership flags of a plane map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Jacobian is a nonzero constant.
    pub jacobian_unit: bool,
    pub is_affine: bool,
    pub is_elementary: bool,
    pub in_b: bool,
    pub in_aut0: bool,
    pub in_aut1: bool,
    pub in_saut: bool,
}

impl Flags {
    /// Names of the flags that are set, in declaration order.
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.jacobian_unit, "jacobian_unit"),
            (self.is_affine, "is_affine"),
            (self.is_elementary, "is_elementary"),
            (self.in_b, "in_B"),
            (self.in_aut0, "in_Aut0"),
            (self.in_aut1, "in_Aut1"),
            (self.in_saut, "in_SAut"),
        ]
        .into_iter()
        .filter_map(|(on, n)| on.then_some(n))
        .collect()
    }
}

impl<F: Field> PlaneAuto<F> {
    pub fn new(p: Poly2<F>, q: Poly2<F>) -> Self {
        PlaneAuto { p, q }
    }

    pub fn identity() -> Self {
        PlaneAuto {
            p: Poly2::x(),
            q: Poly2::y(),
        }
    }

    /// The linear map with the given matrix, acting on column vectors.
    pub fn linear(m: &Mat2<F>) -> Self {
        AffineAuto::linear(m.clone()).to_plane()
    }

    pub fn p(&self) -> &Poly2<F> {
        &self.p
    }

    pub fn q(&self) -> &Poly2<F> {
        &self.q
    }

    pub fn components(&self) -> (&Poly2<F>, &Poly2<F>) {
        (&self.p, &self.q)
    }

    pub fn is_identity(&self) -> bool {
        self.p == Poly2::x() && self.q == Poly2::y()
    }

    /// Maximum total degree of the two components.
    pub fn degree(&self) -> Degree {
        self.p.degree().max(self.q.degree())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let [p, q]: [Poly2<F>; 2] = Poly2::substitute_many(&[&self.p, &self.q], &other.p, &other.q)
            .try_into()
            .unwrap();
        PlaneAuto { p, q }
    }

    pub fn eval(&self, a: &F, b: &F) -> [F; 2] {
        [self.p.eval(a, b), self.q.eval(a, b)]
    }

    pub fn jacobian(&self) -> Poly2<F> {
        &(&self.p.partial_x() * &self.q.partial_y()) - &(&self.p.partial_y() * &self.q.partial_x())
    }

    /// The Jacobian when it is a nonzero constant.
    pub fn jacobian_unit(&self) -> Option<F> {
        self.jacobian().as_constant().filter(|c| !c.is_zero())
    }

    /// Differential at the origin.
    pub fn linear_part(&self) -> Mat2<F> {
        Mat2::new(
            self.p.coeff_xy(1, 0),
            self.p.coeff_xy(0, 1),
            self.q.coeff_xy(1, 0),
            self.q.coeff_xy(0, 1),
        )
    }

    /// Image of the origin.
    pub fn translation(&self) -> [F; 2] {
        [self.p.coeff(Mono::ONE), self.q.coeff(Mono::ONE)]
    }

    pub fn as_affine(&self) -> Option<AffineAuto<F>> {
        if self.degree() > Degree::Finite(1) {
            return None;
        }
        AffineAuto::new(self.linear_part(), self.translation()).ok()
    }

    pub fn as_elementary(&self) -> Option<ElemAuto<F>> {
        ElemAuto::from_plane(self)
    }

    pub fn classify(&self) -> Flags {
        let jac = self.jacobian().as_constant();
        let jacobian_unit = jac.as_ref().is_some_and(|c| !c.is_zero());
        let is_affine = self.as_affine().is_some();
        let is_elementary = self.as_elementary().is_some();
        let [t0, t1] = self.translation();
        let in_aut0 = jacobian_unit && t0.is_zero() && t1.is_zero();
        Flags {
            jacobian_unit,
            is_affine,
            is_elementary,
            in_b: is_affine && is_elementary,
            in_aut0,
            in_aut1: in_aut0 && self.linear_part().is_identity(),
            in_saut: jac.is_some_and(|c| c.is_one()),
        }
    }

    /// `g ∘ self ∘ g⁻¹`, given `g` and its inverse.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.compose(&self.compose(g_inv))
    }

    /// Non-negative power by repeated composition.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> PlaneAuto<G> {
        PlaneAuto {
            p: self.p.map_coeffs(&f),
            q: self.q.map_coeffs(&f),
        }
    }

    pub(crate) fn parse_at(src: &str, base: usize) -> Result<Self> {
        let parts = split_exact(src, base, ',', 2, "automorphism")?;
        Ok(PlaneAuto {
            p: parse_poly2_at(&parts[0].1, parts[0].0)?,
            q: parse_poly2_at(&parts[1].1, parts[1].0)?,
        })
    }
}

impl<F: Field> FromStr for PlaneAuto<F> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_at(s, 0)
    }
}

impl<F: Field> fmt::Display for PlaneAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.p, self.q)
    }
}

impl<F: Field> fmt::Debug for PlaneAuto<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneAuto({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn a(s: &str) -> PlaneAuto<Q> {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = a("x, y + x^2");
        assert_eq!(t.compose(&t), a("x, y + 2*x^2"));
        assert_eq!(t.compose(&PlaneAuto::identity()), t);
        let s = a("x/2, y/2");
        let s_inv = a("2*x, 2*y");
        assert_eq!(t.conjugate_by(&s, &s_inv), t.compose(&t));
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(a("x, y + x^2").jacobian(), Poly2::one());
        assert_eq!(a("x/2, y/2").jacobian(), Poly2::constant(Q::new(1, 4)));
        assert_eq!(a("x^2, y").jacobian().to_string(), "2*x");
    }

    #[test]
    fn classify_examples() {
        let f = a("x, y + x^2").classify();
        assert_eq!(
            f.names(),
            ["jacobian_unit", "is_elementary", "in_Aut0", "in_Aut1", "in_SAut"]
        );
        let f = a("x + y, x").classify();
        assert!(f.is_affine && f.in_aut0 && !f.in_saut && !f.is_elementary);
        let f = a("x + 1, y").classify();
        assert!(f.is_affine && f.is_elementary && f.in_b && !f.in_aut0);
    }

    #[test]
    fn parse_print_round_trip() {
        let s = "y + 2*x^2 - 1/3*x*y^2, x";
        assert_eq!(a(s).to_string(), "y + 2*x^2 - 1/3*x*y^2, x");
        assert!(matches!("x".parse::<PlaneAuto<Q>>(), Err(Error::Parse { .. })));
    }
}
