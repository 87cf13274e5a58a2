//! Sparse univariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{render_sum, Field};

/// Degree of a polynomial. The zero polynomial has degree
/// [`Degree::MinusInfinity`], which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Finite value, with `-inf` mapped to 0. Only for places where the zero
    /// case has already been ruled out or is harmless.
    pub fn or_zero(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in one formal variable, stored as exponent -> coefficient
/// with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly1<F: Field> {
    terms: BTreeMap<u32, F>,
}

impl<F: Field> Default for Poly1<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly1<F> {
    pub fn zero() -> Self {
        Poly1 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: F, e: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly1 { terms }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// From dense coefficients in ascending order.
    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c))
            .collect();
        Poly1 { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, F)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: u32, c: &F) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(F::is_one)
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |&d| Degree::Finite(d))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, e: u32) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &F)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<F> {
        match self.degree() {
            Degree::MinusInfinity => Some(F::zero()),
            Degree::Finite(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly1 {
            terms: self.terms.iter().map(|(&e, a)| (e, a.mul(c))).collect(),
        }
    }

    /// Multiply by `var^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        Poly1 {
            terms: self.terms.iter().map(|(&e, a)| (e + k, a.clone())).collect(),
        }
    }

    /// Exact division by `var^k`; `None` if some term has exponent below `k`.
    pub fn shift_down(&self, k: u32) -> Option<Self> {
        if self.valuation().is_some_and(|v| v < k) {
            return None;
        }
        Some(Poly1 {
            terms: self.terms.iter().map(|(&e, a)| (e - k, a.clone())).collect(),
        })
    }

    /// Drop every term of exponent `< k`.
    pub fn truncate_below(&self, k: u32) -> Self {
        Poly1 {
            terms: self.terms.range(k..).map(|(&e, a)| (e, a.clone())).collect(),
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

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        let mut prev = match self.degree() {
            Degree::MinusInfinity => return acc,
            Degree::Finite(d) => d,
        };
        for (e, c) in self.terms.iter().rev() {
            acc = acc.mul(&x.pow((prev - e) as u64)).add(c);
            prev = *e;
        }
        acc.mul(&x.pow(prev as u64))
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        let mut prev = match self.degree() {
            Degree::MinusInfinity => return acc,
            Degree::Finite(d) => d,
        };
        for (e, c) in self.terms.iter().rev() {
            acc = &(&acc * &g.pow(prev - e)) + &Self::constant(c.clone());
            prev = *e;
        }
        &acc * &g.pow(prev)
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c.mul(&F::from_i64(e as i64)))),
        )
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().finite().expect("division by the zero polynomial");
        let lc_inv = d.leading_coeff().unwrap().inv().unwrap();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Degree::Finite(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading_coeff().unwrap().mul(&lc_inv);
            let t = Self::monomial(c, rd - dd);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        (q, r)
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Render with the given variable name.
    pub fn fmt_var(&self, var: &str) -> String {
        render_sum(self.terms.iter().map(|(&e, c)| (c, mono1(var, e))))
    }
}

fn mono1(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl<F: Field> fmt::Display for Poly1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl<F: Field> fmt::Debug for Poly1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({})", self.fmt_var("t"))
    }
}

impl<'a, F: Field> Add<&'a Poly1<F>> for &'a Poly1<F> {
    type Output = Poly1<F>;
    fn add(self, rhs: &Poly1<F>) -> Poly1<F> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a, F: Field> Sub<&'a Poly1<F>> for &'a Poly1<F> {
    type Output = Poly1<F>;
    fn sub(self, rhs: &Poly1<F>) -> Poly1<F> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &c.neg());
        }
        out
    }
}

impl<'a, F: Field> Mul<&'a Poly1<F>> for &'a Poly1<F> {
    type Output = Poly1<F>;
    fn mul(self, rhs: &Poly1<F>) -> Poly1<F> {
        let mut out = Poly1::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }
}

impl<F: Field> Neg for &Poly1<F> {
    type Output = Poly1<F>;
    fn neg(self) -> Poly1<F> {
        Poly1 {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($ty:ident) => {
        impl<F: Field> std::ops::Add for $ty<F> {
            type Output = $ty<F>;
            fn add(self, rhs: $ty<F>) -> $ty<F> {
                &self + &rhs
            }
        }
        impl<F: Field> std::ops::Sub for $ty<F> {
            type Output = $ty<F>;
            fn sub(self, rhs: $ty<F>) -> $ty<F> {
                &self - &rhs
            }
        }
        impl<F: Field> std::ops::Mul for $ty<F> {
            type Output = $ty<F>;
            fn mul(self, rhs: $ty<F>) -> $ty<F> {
                &self * &rhs
            }
        }
        impl<F: Field> std::ops::Neg for $ty<F> {
            type Output = $ty<F>;
            fn neg(self) -> $ty<F> {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(Poly1);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn p(coeffs: &[i64]) -> Poly1<Q> {
        Poly1::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn zero_has_minus_infinity_degree() {
        let z = Poly1::<Q>::zero();
        assert_eq!(z.degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Degree::Finite(2));
    }

    #[test]
    fn no_zero_coefficients_after_cancellation() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 2, 3]);
        let d = &a - &b;
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d, Poly1::one());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[-1, 1]);
        let (qq, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(qq, p(&[1, 1, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]).scale(&q(3)) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn compose_and_eval_agree() {
        let f = p(&[1, 0, 2]);
        let g = p(&[3, 1]);
        let h = f.compose(&g);
        for x in -3..4 {
            assert_eq!(h.eval(&q(x)), f.eval(&g.eval(&q(x))));
        }
    }

    #[test]
    fn derivative_in_char_p() {
        let f: Poly1<Fp<5>> = Poly1::monomial(Fp::new(1), 5);
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn prints_ascending() {
        assert_eq!(p(&[1, 0, 1]).to_string(), "1 + t^2");
        assert_eq!(p(&[0, -1, 0, 2]).fmt_var("x"), "-x + 2*x^3");
        assert_eq!(Poly1::<Q>::zero().to_string(), "0");
    }
}
