use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{display_rendered, Field, Rendered};

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

/// A common denominator and the matching integer numerators.
fn clear_denominators<K: Copy>(xs: &[(K, &Rational)]) -> (BigInt, Vec<(K, BigInt)>) {
    let den = xs.iter().fold(BigInt::one(), |d, (_, x)| d.lcm(x.0.denom()));
    let nums = xs
        .iter()
        .map(|(k, x)| (*k, x.0.numer() * (&den / x.0.denom())))
        .collect();
    (den, nums)
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    /// Fraction-free: integer products are summed and each result is reduced
    /// once.
    fn convolve<K: Copy + Eq + Hash>(a: &[(K, &Self)], b: &[(K, &Self)], join: impl Fn(K, K) -> K) -> Vec<(K, Self)> {
        let (da, na) = clear_denominators(a);
        let (db, nb) = clear_denominators(b);
        let mut acc: HashMap<K, BigInt> = HashMap::with_capacity(a.len() * b.len());
        for (ka, x) in &na {
            for (kb, y) in &nb {
                *acc.entry(join(*ka, *kb)).or_default() += x * y;
            }
        }
        let den = da * db;
        acc.into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(k, n)| (k, Rational(BigRational::new(n, den.clone()))))
            .collect()
    }

    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }
    fn characteristic() -> u64 {
        0
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Self {
        let h = height.max(1) as i64;
        let num = rng.gen_range(-h..=h);
        let den = rng.gen_range(1..=h);
        Rational::new(num, den)
    }
    fn render(&self) -> Rendered {
        let abs = self.0.abs();
        let body = if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        Rendered {
            negative: self.0.is_negative(),
            body,
            atomic: true,
        }
    }
    fn name() -> String {
        "Q".into()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_rendered(&self.render()))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_i64(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_reduced() {
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::new(-6, 3).to_string(), "-2");
        assert_eq!(Rational::new(0, 5).to_string(), "0");
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Rational::zero().inv().is_none());
        assert_eq!(Rational::new(3, 7).inv(), Some(Rational::new(7, 3)));
    }
}
