use std::fmt;

use serde::Serialize;

use crate::auto::{AffineAuto, ElemAuto, PlaneAuto};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::Poly1;
use crate::poly2::Poly2;
use crate::scalar::Field;

/// One letter of a word in `Aff *_B Elem`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Factor<F: Field> {
    Affine(AffineAuto<F>),
    Elem(ElemAuto<F>),
}

/// Which factor group a letter comes from: 1 for affine, 2 for elementary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Affine = 1,
    Elem = 2,
}

impl<F: Field> Factor<F> {
    pub fn side(&self) -> Side {
        match self {
            Factor::Affine(_) => Side::Affine,
            Factor::Elem(_) => Side::Elem,
        }
    }

    pub fn in_b(&self) -> bool {
        match self {
            Factor::Affine(a) => a.in_b(),
            Factor::Elem(e) => e.in_b(),
        }
    }

    pub fn to_plane(&self) -> PlaneAuto<F> {
        match self {
            Factor::Affine(a) => a.to_plane(),
            Factor::Elem(e) => e.to_plane(),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Factor::Affine(a) => Factor::Affine(a.inverse()),
            Factor::Elem(e) => Factor::Elem(e.inverse()),
        }
    }

    /// `self ∘ inner`, cheap when `self` is the small map.
    pub fn apply_outer(&self, inner: &PlaneAuto<F>) -> PlaneAuto<F> {
        let (p, q) = inner.components();
        match self {
            Factor::Affine(a) => {
                let [[m00, m01], [m10, m11]] = &a.l.m;
                let c = |v: &F| Poly2::constant(v.clone());
                PlaneAuto::new(
                    &(&p.scale(m00) + &q.scale(m01)) + &c(&a.v[0]),
                    &(&p.scale(m10) + &q.scale(m11)) + &c(&a.v[1]),
                )
            }
            Factor::Elem(e) => PlaneAuto::new(
                &p.scale(&e.z1) + &Poly2::constant(e.t0.clone()),
                &q.scale(&e.z2) + &p.apply_poly1(&e.f),
            ),
        }
    }

    /// Compose `self ∘ o` for two letters on the same side.
    fn compose_same(&self, o: &Self) -> Self {
        match (self, o) {
            (Factor::Affine(a), Factor::Affine(b)) => Factor::Affine(a.compose(b)),
            (Factor::Elem(a), Factor::Elem(b)) => Factor::Elem(a.compose(b)),
            _ => unreachable!("compose_same on different sides"),
        }
    }

    fn as_b_elem(&self) -> ElemAuto<F> {
        match self {
            Factor::Affine(a) => a.as_elem().expect("affine letter not in B"),
            Factor::Elem(e) => e.clone(),
        }
    }

    /// Split a letter outside `B` as `rep ∘ b` with `rep` the canonical left
    /// coset representative and `b ∈ B`.
    pub fn split(&self) -> (Self, ElemAuto<F>) {
        match self {
            Factor::Affine(a) => {
                let rep = affine_rep(a);
                let b = rep.inverse().compose(a);
                (Factor::Affine(rep), b.as_elem().expect("coset split left B"))
            }
            Factor::Elem(e) => {
                let rep = elem_rep(e);
                let b = rep.inverse().compose(e);
                debug_assert!(b.in_b());
                (Factor::Elem(rep), b)
            }
        }
    }

    /// Whether the letter is its own canonical coset representative.
    pub fn is_canonical_rep(&self) -> bool {
        !self.in_b() && self.split().0 == *self
    }
}

/// Canonical representative of the left coset `aB`, for `a ∉ B`.
///
/// `aB` is determined by the line through the second column `(b, d)` of the
/// linear part, with `b ≠ 0`. The representative is `(x, y) ↦ (y, x + μy)`
/// with `μ = d/b`.
pub fn affine_rep<F: Field>(a: &AffineAuto<F>) -> AffineAuto<F> {
    let b = a.l.get(0, 1);
    let d = a.l.get(1, 1);
    let mu = d.div(b).expect("affine letter in B has no representative");
    AffineAuto::linear(Mat2::new(F::zero(), F::one(), F::one(), mu))
}

/// Canonical representative of the left coset `eB`, for `e ∉ B`:
/// `(x, y + g(x))` where `g(x) = f((x - t0)/z1)` with its constant and
/// linear terms removed.
pub fn elem_rep<F: Field>(e: &ElemAuto<F>) -> ElemAuto<F> {
    let z1i = e.z1.inv().unwrap();
    let xof = Poly1::from_coeffs(vec![e.t0.neg().mul(&z1i), z1i]);
    ElemAuto::shear(e.f.compose(&xof).truncate_below(2))
}

/// A word `x₁ ∘ … ∘ xₙ ∘ x₀` with tail `x₀ ∈ B`.
///
/// Words built by hand may contain letters in `B` or repeated sides;
/// [`normal_form`] turns any word into the unique reduced word of the same
/// element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AmalgamWord<F: Field> {
    pub factors: Vec<Factor<F>>,
    pub tail: ElemAuto<F>,
}

/// Type of a reduced word: `A` for the empty word, else the sides of the
/// first and last letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WordType {
    A,
    Gamma(Side, Side),
}

impl fmt::Display for WordType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordType::A => f.write_str("A"),
            WordType::Gamma(a, b) => write!(f, "Gamma{}{}", *a as u8, *b as u8),
        }
    }
}

impl<F: Field> AmalgamWord<F> {
    pub fn identity() -> Self {
        AmalgamWord {
            factors: Vec::new(),
            tail: ElemAuto::identity(),
        }
    }

    pub fn new(factors: Vec<Factor<F>>, tail: ElemAuto<F>) -> Result<Self> {
        if !tail.in_b() {
            return Err(Error::Precondition(format!("tail {tail} is not in B")));
        }
        Ok(AmalgamWord { factors, tail })
    }

    /// A raw word from letters, with identity tail.
    pub fn from_factors(factors: Vec<Factor<F>>) -> Self {
        AmalgamWord {
            factors,
            tail: ElemAuto::identity(),
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The word with the tail appended as an ordinary letter.
    fn letters(&self) -> impl Iterator<Item = Factor<F>> + '_ {
        self.factors
            .iter()
            .cloned()
            .chain(std::iter::once(Factor::Elem(self.tail.clone())))
    }

    /// The automorphism the word denotes.
    pub fn recompose(&self) -> PlaneAuto<F> {
        let mut acc = self.tail.to_plane();
        for f in self.factors.iter().rev() {
            acc = f.apply_outer(&acc);
        }
        acc
    }

    /// Word for `self ∘ other`, not normalized.
    pub fn concat(&self, other: &Self) -> Self {
        let mut factors: Vec<_> = self.letters().collect();
        factors.extend(other.factors.iter().cloned());
        AmalgamWord {
            factors,
            tail: other.tail.clone(),
        }
    }

    /// Word for the inverse, not normalized.
    pub fn inverse_raw(&self) -> Self {
        let factors = self
            .letters()
            .collect::<Vec<_>>()
            .iter()
            .rev()
            .map(Factor::inverse)
            .collect();
        AmalgamWord {
            factors,
            tail: ElemAuto::identity(),
        }
    }

    /// Normal form of the inverse.
    pub fn inverse(&self) -> Self {
        normal_form(&self.inverse_raw())
    }

    /// Normal form of `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Self {
        normal_form(&self.concat(other))
    }

    /// Normal form of `γ ∘ self ∘ γ⁻¹`.
    pub fn conjugate_by(&self, gamma: &Self) -> Self {
        normal_form(&gamma.concat(self).concat(&gamma.inverse_raw()))
    }

    /// Check the reduced-word invariants.
    pub fn check_normalized(&self) -> Result<()> {
        if !self.tail.in_b() {
            return Err(Error::NotNormalized("tail is not in B".into()));
        }
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 && self.factors[i - 1].side() == f.side() {
                return Err(Error::NotNormalized(format!(
                    "letters {} and {} are on the same side",
                    i - 1,
                    i
                )));
            }
            if !f.is_canonical_rep() {
                return Err(Error::NotNormalized(format!(
                    "letter {i} is not a canonical coset representative"
                )));
            }
        }
        Ok(())
    }

    pub fn is_normalized(&self) -> bool {
        self.check_normalized().is_ok()
    }
}

impl<F: Field> fmt::Display for Factor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Affine(a) => write!(f, "affine: {a}"),
            Factor::Elem(e) => write!(f, "elementary: {e}"),
        }
    }
}

impl<F: Field> fmt::Debug for Factor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Debug for AmalgamWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AmalgamWord")
            .field("factors", &self.factors)
            .field("tail", &self.tail)
            .finish()
    }
}

/// The unique reduced word of the element `w` denotes.
///
/// Letters are consumed left to right while keeping the product equal to
/// `stack ∘ carry` with `carry ∈ B`. Each new letter absorbs the carry, merges
/// with the top of the stack when on the same side, and is split back into a
/// representative and a new carry.
pub fn normal_form<F: Field>(w: &AmalgamWord<F>) -> AmalgamWord<F> {
    let mut stack: Vec<Factor<F>> = Vec::with_capacity(w.factors.len());
    let mut carry = ElemAuto::identity();
    for g in w.letters() {
        let mut h = Factor::Elem(carry.clone()).then_b_left(&g);
        if let Some(top) = stack.last() {
            if top.side() == h.side() {
                let top = stack.pop().unwrap();
                h = top.compose_same(&h);
            }
        }
        if h.in_b() {
            carry = h.as_b_elem();
        } else {
            let (rep, b) = h.split();
            stack.push(rep);
            carry = b;
        }
    }
    AmalgamWord {
        factors: stack,
        tail: carry,
    }
}

impl<F: Field> Factor<F> {
    /// `self ∘ g` where `self` holds a `B`-element, typed on `g`'s side.
    fn then_b_left(&self, g: &Self) -> Self {
        let b = self.as_b_elem();
        match g {
            Factor::Affine(a) => Factor::Affine(b.as_affine().unwrap().compose(a)),
            Factor::Elem(e) => Factor::Elem(b.compose(e)),
        }
    }
}

/// Type of a normalized word.
pub fn word_type<F: Field>(w: &AmalgamWord<F>) -> Result<WordType> {
    w.check_normalized()?;
    Ok(match (w.factors.first(), w.factors.last()) {
        (Some(a), Some(b)) => WordType::Gamma(a.side(), b.side()),
        _ => WordType::A,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn shear(f: &[i64]) -> Factor<Q> {
        Factor::Elem(ElemAuto::shear(Poly1::from_coeffs(f.iter().map(|&c| q(c)).collect())))
    }

    fn lin(a: i64, b: i64, c: i64, d: i64) -> Factor<Q> {
        Factor::Affine(AffineAuto::linear(Mat2::from_i64(a, b, c, d)))
    }

    #[test]
    fn identity_normalizes_to_empty() {
        let w = AmalgamWord::from_factors(vec![shear(&[0, 0, 1]), shear(&[0, 0, -1])]);
        assert_eq!(normal_form(&w), AmalgamWord::identity());
    }

    #[test]
    fn absorb_right() {
        let a = lin(1, 1, 1, 0);
        let b = Factor::Affine(AffineAuto::new(Mat2::from_i64(2, 0, 1, 3), [q(1), q(2)]).unwrap());
        let e =
            Factor::Elem(ElemAuto::new(q(1), q(1), q(2), Poly1::from_coeffs(vec![q(0), q(0), q(0), q(1)])).unwrap());
        let ab = a.compose_same(&b);
        let be = Factor::Elem(b.as_b_elem().compose(match &e {
            Factor::Elem(e) => e,
            _ => unreachable!(),
        }));
        let w1 = AmalgamWord::from_factors(vec![ab, e]);
        let w2 = AmalgamWord::from_factors(vec![a, be]);
        assert_eq!(normal_form(&w1), normal_form(&w2));
        assert_eq!(w1.recompose(), w2.recompose());
        assert_eq!(normal_form(&w1).recompose(), w1.recompose());
    }

    #[test]
    fn types() {
        let sp = lin(1, 1, 1, 0);
        let t = shear(&[0, 0, 1]);
        let w = normal_form(&AmalgamWord::from_factors(vec![sp.clone(), t.clone(), sp]));
        assert_eq!(word_type(&w), Ok(WordType::Gamma(Side::Affine, Side::Affine)));
        let w = normal_form(&AmalgamWord::from_factors(vec![t]));
        assert_eq!(word_type(&w), Ok(WordType::Gamma(Side::Elem, Side::Elem)));
        assert_eq!(word_type(&AmalgamWord::<Q>::identity()), Ok(WordType::A));
        let raw = AmalgamWord::from_factors(vec![lin(1, 0, 0, 1)]);
        assert!(matches!(word_type(&raw), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn reps_are_canonical() {
        let a = AffineAuto::new(Mat2::from_i64(3, 2, 1, 4), [q(5), q(-1)]).unwrap();
        let (rep, b) = Factor::Affine(a.clone()).split();
        assert!(rep.is_canonical_rep());
        assert_eq!(rep.to_plane().compose(&b.to_plane()), a.to_plane());
    }
}
