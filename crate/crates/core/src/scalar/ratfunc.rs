use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use rand::Rng;

use super::{display_rendered, Field, Rendered};
use crate::poly1::Poly1;

/// A rational function `num/den` in one variable `z` over `F`.
///
/// Stored reduced with a monic denominator, so structural equality is
/// equality of functions. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc<F: Field> {
    num: Poly1<F>,
    den: Poly1<F>,
}

impl<F: Field> RatFunc<F> {
    /// `num/den`, reduced. Returns `None` when `den` is zero.
    pub fn new(num: Poly1<F>, den: Poly1<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lc = d.leading_coeff().unwrap().inv().unwrap();
        Some(RatFunc {
            num: n.scale(&lc),
            den: d.scale(&lc),
        })
    }

    pub fn from_poly(p: Poly1<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly1::one(),
        }
    }

    pub fn from_base(c: F) -> Self {
        Self::from_poly(Poly1::constant(c))
    }

    pub fn numer(&self) -> &Poly1<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly1<F> {
        &self.den
    }

    /// `Some(p)` when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly1<F>> {
        self.den.is_one().then_some(&self.num)
    }

    /// The constant value when the function is constant.
    pub fn as_base(&self) -> Option<F> {
        self.as_poly().and_then(Poly1::as_constant)
    }
}

impl<F: Field> Hash for RatFunc<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(Poly1::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly1::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        // A polynomial plus a reduced fraction is already reduced.
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return rhs.add(self);
        }
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::new(n, &self.den * &rhs.den).unwrap()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Both operands are reduced, so cancelling across is enough.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_rem(&g1).0 * &rhs.num.div_rem(&g2).0;
        let den = &self.den.div_rem(&g2).0 * &rhs.den.div_rem(&g1).0;
        let lc = den.leading_coeff().unwrap().inv().unwrap();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Self::new(self.den.clone(), self.num.clone())
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_base(F::from_i64(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_base(F::from_bigint(n))
    }
    fn characteristic() -> u64 {
        F::characteristic()
    }
    fn variable_z() -> Option<Self> {
        Some(Self::from_poly(Poly1::var()))
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Self {
        let deg = rng.gen_range(0..=2u32);
        let num = Poly1::from_coeffs((0..=deg).map(|_| F::sample(rng, height)).collect());
        if rng.gen_bool(0.5) {
            return Self::from_poly(num);
        }
        let den = loop {
            let d = Poly1::from_coeffs(vec![F::sample(rng, height), F::one()]);
            if !d.is_zero() {
                break d;
            }
        };
        Self::new(num, den).unwrap()
    }
    fn render(&self) -> Rendered {
        let negative = self.num.leading_coeff().is_some_and(|c| c.render().negative);
        let num = if negative { -&self.num } else { self.num.clone() };
        if self.den.is_one() {
            Rendered {
                negative,
                atomic: num.num_terms() <= 1 && num.terms().all(|(_, c)| c.render().atomic),
                body: num.fmt_var("z"),
            }
        } else {
            let group = |p: &Poly1<F>| match p.num_terms() {
                1 => p.fmt_var("z"),
                _ => format!("({})", p.fmt_var("z")),
            };
            Rendered {
                negative,
                body: format!("{}/{}", group(&num), group(&self.den)),
                atomic: true,
            }
        }
    }
    fn name() -> String {
        format!("{}(z)", F::name())
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_rendered(&self.render()))
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
