//! Exact scalar fields.
//!
//! Three backends implement [`Field`]: arbitrary-precision rationals
//! ([`Rational`]), prime fields with a compile-time modulus ([`Fp`]), and
//! rational functions in one variable `z` over either ([`RatFunc`]).
//! Everything else in the crate is generic over `F: Field`.

mod fp;
mod ratfunc;
mod rational;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use rand::Rng;

pub use fp::{is_prime, Fp};
pub use ratfunc::RatFunc;
pub use rational::Rational;

/// A commutative field with exact arithmetic and decidable equality.
///
/// Arithmetic takes operands by reference so big-number backends do not
/// clone on every operation.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// All products `a_i * b_j`, summed over equal joined keys. Zero sums are
    /// dropped. Backends with costly normalization override this.
    fn convolve<K: Copy + Eq + Hash>(a: &[(K, &Self)], b: &[(K, &Self)], join: impl Fn(K, K) -> K) -> Vec<(K, Self)> {
        let mut acc: HashMap<K, Self> = HashMap::with_capacity(a.len() * b.len());
        for (ka, x) in a {
            for (kb, y) in b {
                let prod = x.mul(y);
                match acc.get_mut(&join(*ka, *kb)) {
                    Some(slot) => *slot = slot.add(&prod),
                    None => {
                        acc.insert(join(*ka, *kb), prod);
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;

    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    /// The transcendental `z` for rational-function backends.
    fn variable_z() -> Option<Self> {
        None
    }

    /// A random element. `height` bounds numerators and denominators of
    /// rational coefficients; prime fields sample uniformly.
    fn sample<R: Rng + ?Sized>(rng: &mut R, height: u32) -> Self;

    /// Printing pieces used by the polynomial printers.
    fn render(&self) -> Rendered;

    /// Short name of the backend, e.g. `Q`, `F5`, `Q(z)`.
    fn name() -> String;
}

/// How a scalar prints as a coefficient: a sign, the absolute body, and
/// whether the body can be juxtaposed with `*monomial` without parentheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub negative: bool,
    pub body: String,
    pub atomic: bool,
}

/// Print a sum of `coefficient * monomial` terms in the given order.
/// An empty monomial string denotes the constant term.
pub(crate) fn render_sum<'a, F: Field>(terms: impl Iterator<Item = (&'a F, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let r = c.render();
        let piece = if mono.is_empty() {
            if r.atomic {
                r.body
            } else {
                format!("({})", r.body)
            }
        } else if r.body == "1" {
            mono
        } else if r.atomic {
            format!("{}*{}", r.body, mono)
        } else {
            format!("({})*{}", r.body, mono)
        };
        if out.is_empty() {
            if r.negative {
                out.push('-');
            }
        } else {
            out.push_str(if r.negative { " - " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `Rendered` to its plain display string.
pub(crate) fn display_rendered(r: &Rendered) -> String {
    match (r.negative, r.atomic) {
        (false, _) => r.body.clone(),
        (true, true) => format!("-{}", r.body),
        (true, false) => format!("-({})", r.body),
    }
}
