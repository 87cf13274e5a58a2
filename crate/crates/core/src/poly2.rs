//! Sparse bivariate polynomials in `x` and `y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly1::{owned_ops, Degree, Poly1};
use crate::scalar::{render_sum, Field};

/// The monomial `x^x * y^y`.
///
/// Ordered by total degree, then by descending `x` exponent, which is the
/// canonical printing order (`x` before `y` within a degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub x: u32,
    pub y: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Mono { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    fn render(self) -> String {
        let part = |v: &str, e: u32| match e {
            0 => None,
            1 => Some(v.to_string()),
            _ => Some(format!("{v}^{e}")),
        };
        [part("x", self.x), part("y", self.y)]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly2<F: Field> {
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> Default for Poly2<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly2<F> {
    pub fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, Mono::ONE)
    }

    pub fn monomial(c: F, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly2 { terms }
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), Mono::new(1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(F::one(), Mono::new(0, 1))
    }

    /// `a*x + b*y + c`.
    pub fn linear(a: F, b: F, c: F) -> Self {
        Self::from_terms([(Mono::new(1, 0), a), (Mono::new(0, 1), b), (Mono::ONE, c)])
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// `f(x)`.
    pub fn from_poly_x(f: &Poly1<F>) -> Self {
        Poly2 {
            terms: f.terms().map(|(e, c)| (Mono::new(e, 0), c.clone())).collect(),
        }
    }

    /// `f(y)`.
    pub fn from_poly_y(f: &Poly1<F>) -> Self {
        Poly2 {
            terms: f.terms().map(|(e, c)| (Mono::new(0, e), c.clone())).collect(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: &F) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |m| Degree::Finite(m.degree()))
    }

    pub fn degree_x(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.x)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn degree_y(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.y)
            .max()
            .map_or(Degree::MinusInfinity, Degree::Finite)
    }

    pub fn coeff(&self, m: Mono) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff_xy(&self, x: u32, y: u32) -> F {
        self.coeff(Mono::new(x, y))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Mono, &F)> + '_ {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.degree() {
            Degree::MinusInfinity => Some(F::zero()),
            Degree::Finite(0) => Some(self.coeff(Mono::ONE)),
            _ => None,
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        Poly2 {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    /// Top-degree homogeneous component; zero for the zero polynomial.
    pub fn leading_form(&self) -> Self {
        match self.degree() {
            Degree::MinusInfinity => Self::zero(),
            Degree::Finite(d) => self.homogeneous(d),
        }
    }

    /// `Some(f)` when the polynomial depends on `x` only.
    pub fn as_poly_x(&self) -> Option<Poly1<F>> {
        if self.terms.keys().any(|m| m.y != 0) {
            return None;
        }
        Some(Poly1::from_terms(self.terms.iter().map(|(m, c)| (m.x, c.clone()))))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&m, a)| (m, a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Successive powers `self^0 ..= self^n`.
    pub fn powers(&self, n: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(Self::one());
        for i in 1..=n as usize {
            let next = &out[i - 1] * self;
            out.push(next);
        }
        out
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Mono::new(m.x - 1, m.y), c.mul(&F::from_i64(m.x as i64)))),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (Mono::new(m.x, m.y - 1), c.mul(&F::from_i64(m.y as i64)))),
        )
    }

    pub fn eval(&self, a: &F, b: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            acc.add(&c.mul(&a.pow(m.x as u64)).mul(&b.pow(m.y as u64)))
        })
    }

    /// `self(u, v)`: replace `x` by `u` and `y` by `v`.
    pub fn substitute(&self, u: &Self, v: &Self) -> Self {
        Self::substitute_many(&[self], u, v).pop().unwrap()
    }

    /// Substitute `(u, v)` into each polynomial, sharing the powers of `u`
    /// and `v`.
    pub fn substitute_many(polys: &[&Self], u: &Self, v: &Self) -> Vec<Self> {
        let dx = polys.iter().filter_map(|p| p.degree_x().finite()).max().unwrap_or(0);
        let dy = polys.iter().filter_map(|p| p.degree_y().finite()).max().unwrap_or(0);
        let upow = u.powers(dx);
        let vpow = v.powers(dy);
        polys
            .iter()
            .map(|p| {
                // Group by the y exponent so each power of v is multiplied once.
                let mut by_y: BTreeMap<u32, Self> = BTreeMap::new();
                for (m, c) in &p.terms {
                    let slot = by_y.entry(m.y).or_default();
                    *slot = &*slot + &upow[m.x as usize].scale(c);
                }
                let mut acc = Self::zero();
                for (j, coeff) in by_y {
                    acc = &acc + &(&coeff * &vpow[j as usize]);
                }
                acc
            })
            .collect()
    }

    /// `f(self)` for a univariate `f`, by Horner's rule over the sparse terms.
    pub fn apply_poly1(&self, f: &Poly1<F>) -> Self {
        let mut terms = f.terms().rev();
        let Some((mut prev, c)) = terms.next() else {
            return Self::zero();
        };
        let mut acc = Self::constant(c.clone());
        for (e, c) in terms {
            acc = &(&acc * &self.pow(prev - e)) + &Self::constant(c.clone());
            prev = e;
        }
        &acc * &self.pow(prev)
    }

    /// Apply a map to every coefficient, dropping zeros.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly2<G> {
        Poly2::from_terms(self.terms.iter().map(|(&m, c)| (m, f(c))))
    }
}

impl<F: Field> fmt::Display for Poly2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(self.terms.iter().map(|(m, c)| (c, m.render()))))
    }
}

impl<F: Field> fmt::Debug for Poly2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl<'a, F: Field> Add<&'a Poly2<F>> for &'a Poly2<F> {
    type Output = Poly2<F>;
    fn add(self, rhs: &Poly2<F>) -> Poly2<F> {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (&m, c) in &small.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Poly2<F>> for &'a Poly2<F> {
    type Output = Poly2<F>;
    fn sub(self, rhs: &Poly2<F>) -> Poly2<F> {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, &c.neg());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a Poly2<F>> for &'a Poly2<F> {
    type Output = Poly2<F>;
    fn mul(self, rhs: &Poly2<F>) -> Poly2<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly2::zero();
        }
        let a: Vec<(Mono, &F)> = self.terms.iter().map(|(&m, c)| (m, c)).collect();
        let b: Vec<(Mono, &F)> = rhs.terms.iter().map(|(&m, c)| (m, c)).collect();
        Poly2 {
            terms: F::convolve(&a, &b, |m1, m2| Mono::new(m1.x + m2.x, m1.y + m2.y))
                .into_iter()
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Poly2<F> {
    type Output = Poly2<F>;
    fn neg(self) -> Poly2<F> {
        Poly2 {
            terms: self.terms.iter().map(|(&m, c)| (m, c.neg())).collect(),
        }
    }
}

owned_ops!(Poly2);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    fn x() -> Poly2<Q> {
        Poly2::x()
    }
    fn y() -> Poly2<Q> {
        Poly2::y()
    }

    #[test]
    fn canonical_order() {
        let p = &(&y() + &x().pow(2).scale(&Q::from_i64(2))) + &x();
        assert_eq!(p.to_string(), "x + y + 2*x^2");
        let q = &x() - &y().pow(2);
        assert_eq!(q.to_string(), "x - y^2");
        assert_eq!((&x() * &y()).pow(2).to_string(), "x^2*y^2");
    }

    #[test]
    fn substitute_hand_expansion() {
        let p = &y() + &x().pow(2);
        let v = &y() + &x().pow(2);
        let r = p.substitute(&x(), &v);
        assert_eq!(r, &y() + &x().pow(2).scale(&Q::from_i64(2)));
        assert_eq!(x().substitute(&v, &x()), v);
    }

    #[test]
    fn substitute_is_multiplicative() {
        let a = &x() + &y().pow(3);
        let b = &(&x() * &y()) - &Poly2::one();
        let u = &y() + &x().pow(2);
        let v = x().scale(&Q::from_i64(-3));
        assert_eq!(
            (&a * &b).substitute(&u, &v),
            &a.substitute(&u, &v) * &b.substitute(&u, &v)
        );
    }

    #[test]
    fn partial_derivatives_in_char_2() {
        let p: Poly2<Fp<2>> = Poly2::x().pow(2);
        assert!(p.partial_x().is_zero());
    }

    #[test]
    fn apply_poly1_matches_substitute() {
        let f = Poly1::from_coeffs(vec![
            Q::from_i64(1),
            Q::zero(),
            Q::from_i64(3),
            Q::zero(),
            Q::from_i64(-2),
        ]);
        let p = &x() + &y().pow(2);
        assert_eq!(p.apply_poly1(&f), Poly2::from_poly_x(&f).substitute(&p, &y()));
    }

    #[test]
    fn leading_form() {
        let p = &(&x().pow(3) + &(&x() * &y().pow(2))) + &y();
        assert_eq!(p.leading_form().to_string(), "x^3 + x*y^2");
    }
}
