use std::fmt;

use crate::auto::{tau_delta, PlaneAuto};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::Poly1;
use crate::proj::ProjPoint;
use crate::scalar::Field;

use super::factor::vdk_factor;
use super::word::Factor;

/// A product `τ_{δ₁}(f₁) ∘ … ∘ τ_{δₘ}(fₘ)` with `fᵢ ∈ t²K[t] \ 0` and
/// consecutive lines distinct.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord<F: Field> {
    pub pairs: Vec<(ProjPoint<F>, Poly1<F>)>,
}

impl<F: Field> FreeWord<F> {
    pub fn new() -> Self {
        FreeWord { pairs: Vec::new() }
    }

    /// Append `τ_δ(f)`, merging with the last pair when the lines agree.
    pub fn push(&mut self, delta: ProjPoint<F>, f: Poly1<F>) {
        if let Some((d, g)) = self.pairs.last_mut() {
            if *d == delta {
                *g = &*g + &f;
                if g.is_zero() {
                    self.pairs.pop();
                }
                return;
            }
        }
        if !f.is_zero() {
            self.pairs.push((delta, f));
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Check the normal-form invariants.
    pub fn check(&self) -> Result<()> {
        for (i, (d, f)) in self.pairs.iter().enumerate() {
            if f.is_zero() || f.valuation().is_none_or(|v| v < 2) {
                return Err(Error::NotNormalized(format!(
                    "pair {i} has parameter {f} outside t^2 K[t] minus 0"
                )));
            }
            if i > 0 && self.pairs[i - 1].0 == *d {
                return Err(Error::NotNormalized(format!(
                    "pairs {} and {i} share the line {d}",
                    i - 1
                )));
            }
        }
        Ok(())
    }

    pub fn recompose(&self) -> PlaneAuto<F> {
        let mut acc = PlaneAuto::identity();
        for (d, f) in self.pairs.iter().rev() {
            acc = tau_delta(d, f)
                .expect("free word parameter outside t^2 K[t]")
                .compose(&acc);
        }
        acc
    }

    /// Degrees `mᵢ = deg fᵢ`.
    pub fn degrees(&self) -> Vec<u32> {
        self.pairs.iter().map(|(_, f)| f.degree().or_zero()).collect()
    }
}

impl<F: Field> fmt::Display for FreeWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, p)) in self.pairs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d} | {p}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for FreeWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.pairs.iter().map(|(d, p)| format!("{d} | {p}")))
            .finish()
    }
}

/// Decompose `φ ∈ Aut₁` as a product of shears `τ_δ(f)`.
///
/// Walks the reduced word keeping the product `L` of the affine letters seen
/// so far. An elementary letter `(x, y + g(x))` is then conjugated by `L`
/// into `τ_δ(f)` with `δ` the line of `L·e₂` and `f(s) = λ·g(μs)`, where
/// `L·e₂ = λ·(a, b)` and the first row of `L⁻¹` is `μ·(b, −a)`.
///
/// ```
/// use autk2::prelude::*;
///
/// let d0 = ProjPoint::<Rational>::vertical();
/// let t2 = Poly1::monomial(Rational::from_i64(1), 2);
/// let t3 = Poly1::monomial(Rational::from_i64(1), 3);
/// let phi = tau_delta(&d0, &t2).unwrap().compose(&tau_delta(&d0, &t3).unwrap());
/// let w = free1_decompose(&phi).unwrap();
/// assert_eq!(w.pairs, vec![(d0, &t2 + &t3)]);
/// ```
pub fn free1_decompose<F: Field>(phi: &PlaneAuto<F>) -> Result<FreeWord<F>> {
    let [t0, t1] = phi.translation();
    if !(t0.is_zero() && t1.is_zero() && phi.linear_part().is_identity()) {
        return Err(Error::Precondition(
            "map is not tangent to the identity at the origin".into(),
        ));
    }
    let w = vdk_factor(phi)?;
    let mut l = Mat2::identity();
    let mut out = FreeWord::new();
    for letter in &w.factors {
        match letter {
            Factor::Affine(a) => l = l.mul(&a.l),
            Factor::Elem(e) => {
                let col = l.column(1);
                let delta = ProjPoint::from_vec(&col)?;
                let row = l.inv().unwrap().m[0].clone();
                let (lambda, mu) = if delta.is_infinity() {
                    (col[0].clone(), row[1].neg())
                } else {
                    (col[1].clone(), row[0].clone())
                };
                let f = Poly1::from_terms(e.f.terms().map(|(k, c)| (k, c.mul(&lambda).mul(&mu.pow(k as u64)))));
                out.push(delta, f);
            }
        }
    }
    let tail = w.tail.as_affine().unwrap();
    if !l.mul(&tail.l).is_identity() || !tail.v.iter().all(F::is_zero) {
        return Err(Error::Precondition(
            "accumulated linear part is not the identity".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn t2() -> Poly1<Q> {
        Poly1::monomial(Q::from_i64(1), 2)
    }

    #[test]
    fn generator_is_its_own_word() {
        let d = ProjPoint::vertical();
        let w = free1_decompose(&tau_delta(&d, &t2()).unwrap()).unwrap();
        assert_eq!(w.pairs, vec![(d, t2())]);
    }

    #[test]
    fn two_lines_in_order() {
        let d0 = ProjPoint::vertical();
        let d1 = ProjPoint::infinity();
        let phi = tau_delta(&d0, &t2()).unwrap().compose(&tau_delta(&d1, &t2()).unwrap());
        let w = free1_decompose(&phi).unwrap();
        assert_eq!(w.pairs, vec![(d0, t2()), (d1, t2())]);
        assert_eq!(w.recompose(), phi);
        assert!(w.check().is_ok());
    }

    #[test]
    fn affine_chart_lines() {
        let d = ProjPoint::affine(Q::new(2, 3));
        let f = Poly1::from_coeffs(vec![Q::zero(), Q::zero(), Q::from_i64(5), Q::new(-1, 7)]);
        let phi = tau_delta(&d, &f).unwrap();
        assert_eq!(free1_decompose(&phi).unwrap().pairs, vec![(d, f)]);
    }

    #[test]
    fn rejects_outside_aut1() {
        let phi: PlaneAuto<Q> = "x + 1, y".parse().unwrap();
        assert!(matches!(free1_decompose(&phi), Err(Error::Precondition(_))));
    }
}
