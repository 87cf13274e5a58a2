//! 2×2 matrices over a field and over `K[t]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly1::{Degree, Poly1};
use crate::scalar::Field;

/// A 2×2 scalar matrix, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2<F: Field> {
    pub m: [[F; 2]; 2],
}

impl<F: Field> Mat2<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(F::from_i64(a), F::from_i64(b), F::from_i64(c), F::from_i64(d))
    }

    pub fn identity() -> Self {
        Self::new(F::one(), F::zero(), F::zero(), F::one())
    }

    pub fn zero() -> Self {
        Self::new(F::zero(), F::zero(), F::zero(), F::zero())
    }

    pub fn diag(a: F, d: F) -> Self {
        Self::new(a, F::zero(), F::zero(), d)
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.m[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn det(&self) -> F {
        self.m[0][0].mul(&self.m[1][1]).sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    pub fn trace(&self) -> F {
        self.m[0][0].add(&self.m[1][1])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][0].mul(&o.m[0][j]).add(&self.m[i][1].mul(&o.m[1][j]));
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].add(&o.m[i][j]);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].sub(&o.m[i][j]);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, c: &F) -> Self {
        let e = |i: usize, j: usize| self.m[i][j].mul(c);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn inv(&self) -> Option<Self> {
        let d = self.det().inv()?;
        let [[a, b], [c, e]] = &self.m;
        Some(Self::new(e.mul(&d), b.neg().mul(&d), c.neg().mul(&d), a.mul(&d)))
    }

    pub fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    pub fn apply(&self, v: &[F; 2]) -> [F; 2] {
        [
            self.m[0][0].mul(&v[0]).add(&self.m[0][1].mul(&v[1])),
            self.m[1][0].mul(&v[0]).add(&self.m[1][1].mul(&v[1])),
        ]
    }

    pub fn column(&self, j: usize) -> [F; 2] {
        [self.m[0][j].clone(), self.m[1][j].clone()]
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.m[1][0].is_zero()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.m[0][1].is_zero()
    }

    /// Rank over the field: 0, 1 or 2.
    pub fn rank(&self) -> usize {
        if self.is_zero() {
            0
        } else if self.det().is_zero() {
            1
        } else {
            2
        }
    }

    /// `det(A+B) - det A - det B`.
    pub fn bracket(&self, o: &Self) -> F {
        self.add(o).det().sub(&self.det()).sub(&o.det())
    }
}

impl<F: Field> fmt::Display for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "{a}, {b} ; {c}, {d}")
    }
}

impl<F: Field> fmt::Debug for Mat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2[{self}]")
    }
}

/// A 2×2 matrix over `K[t]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMat2<F: Field> {
    pub m: [[Poly1<F>; 2]; 2],
}

impl<F: Field> PolyMat2<F> {
    pub fn new(a: Poly1<F>, b: Poly1<F>, c: Poly1<F>, d: Poly1<F>) -> Self {
        PolyMat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(Poly1::one(), Poly1::zero(), Poly1::zero(), Poly1::one())
    }

    pub fn constant(a: &Mat2<F>) -> Self {
        let e = |i: usize, j: usize| Poly1::constant(a.m[i][j].clone());
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// `id + h(t)·e`.
    pub fn id_plus(h: &Poly1<F>, e: &Mat2<F>) -> Self {
        let mut out = Self::identity();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = &out.m[i][j] + &h.scale(&e.m[i][j]);
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly1<F> {
        &self.m[i][j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &o.m[0][j]) + &(&self.m[i][1] * &o.m[1][j]);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> Poly1<F> {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    /// Maximum entry degree.
    pub fn degree(&self) -> Degree {
        self.m.iter().flatten().map(Poly1::degree).max().unwrap()
    }

    /// The coefficient matrix `A_k` of `t^k`.
    pub fn coeff(&self, k: u32) -> Mat2<F> {
        let e = |i: usize, j: usize| self.m[i][j].coeff(k);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn eval(&self, t: &F) -> Mat2<F> {
        let e = |i: usize, j: usize| self.m[i][j].eval(t);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Error unless the determinant is the constant 1.
    pub fn check_det_one(&self) -> Result<()> {
        if self.det().is_one() {
            Ok(())
        } else {
            Err(Error::NotInGl1(format!("determinant is {}", self.det())))
        }
    }

    /// Error unless the matrix lies in GL₁(2,K[t]): determinant 1 and value
    /// id at `t = 0`.
    pub fn check_gl1(&self) -> Result<()> {
        self.check_det_one()?;
        if !self.coeff(0).is_identity() {
            return Err(Error::NotInGl1(format!("value at t=0 is [{}]", self.coeff(0))));
        }
        Ok(())
    }

    pub fn apply(&self, v: &[Poly1<F>; 2]) -> [Poly1<F>; 2] {
        [
            &(&self.m[0][0] * &v[0]) + &(&self.m[0][1] * &v[1]),
            &(&self.m[1][0] * &v[0]) + &(&self.m[1][1] * &v[1]),
        ]
    }
}

impl<F: Field> fmt::Display for PolyMat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "{a}, {b} ; {c}, {d}")
    }
}

impl<F: Field> fmt::Debug for PolyMat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMat2[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn t() -> Poly1<Q> {
        Poly1::var()
    }

    #[test]
    fn worked_product() {
        let lower = PolyMat2::new(Poly1::one(), Poly1::zero(), t(), Poly1::one());
        let upper = PolyMat2::new(Poly1::one(), t(), Poly1::zero(), Poly1::one());
        let p = lower.mul(&upper);
        assert_eq!(p.to_string(), "1, t ; t, 1 + t^2");
        assert!(p.check_gl1().is_ok());
    }

    #[test]
    fn bracket_of_identity() {
        let id = Mat2::<Q>::identity();
        assert_eq!(id.bracket(&id), Q::from_i64(2));
    }

    #[test]
    fn inverse() {
        let a = Mat2::<Q>::from_i64(1, 1, 1, 0);
        assert_eq!(a.inv().unwrap(), Mat2::from_i64(0, 1, 1, -1));
        assert_eq!(a.pow(-3).unwrap().mul(&a.pow(3).unwrap()), Mat2::identity());
    }

    #[test]
    fn det_one_check() {
        let g = PolyMat2::new(&Poly1::one() + &t(), Poly1::zero(), Poly1::zero(), Poly1::one());
        assert!(matches!(g.check_gl1(), Err(Error::NotInGl1(_))));
    }
}
