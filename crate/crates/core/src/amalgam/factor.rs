use crate::auto::{AffineAuto, ElemAuto, PlaneAuto};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::{Degree, Poly1};
use crate::poly2::Poly2;
use crate::scalar::Field;

use super::word::{normal_form, AmalgamWord, Factor};

/// If `lf(q) = c·lf(p)^k` for leading forms `lf`, return `(c, k)`.
fn leading_power<F: Field>(p: &Poly2<F>, q: &Poly2<F>) -> Option<(F, u32)> {
    let dp = p.degree().finite()?;
    let dq = q.degree().finite()?;
    if dp == 0 || dq == 0 || dq % dp != 0 {
        return None;
    }
    let k = dq / dp;
    let lp = p.leading_form().pow(k);
    let lq = q.leading_form();
    let (m, top) = lq.terms().next_back()?;
    let c = top.div(&lp.coeff(m))?;
    (lp.scale(&c) == lq).then_some((c, k))
}

/// Powers of a fixed polynomial, computed on demand.
struct PowerCache<F: Field> {
    pows: Vec<Poly2<F>>,
}

impl<F: Field> PowerCache<F> {
    fn new(p: &Poly2<F>) -> Self {
        PowerCache {
            pows: vec![Poly2::one(), p.clone()],
        }
    }

    fn get(&mut self, k: u32) -> &Poly2<F> {
        while self.pows.len() <= k as usize {
            let next = &self.pows[self.pows.len() - 1] * &self.pows[1];
            self.pows.push(next);
        }
        &self.pows[k as usize]
    }
}

/// Factor an automorphism into a reduced word of `Aff *_B Elem`.
///
/// Letters are peeled from the left. While the degree exceeds one, the
/// leading form of the higher-degree component must be a constant times a
/// power of the other leading form; subtracting that power is an elementary
/// letter, and a coordinate swap handles the other orientation. The final
/// degree-one map is the last affine letter. The raw word is then brought to
/// normal form. Success of the reduction is itself the automorphism test, so
/// the Jacobian is only computed to explain a failure.
///
/// ```
/// use autk2::prelude::*;
///
/// let phi: PlaneAuto<Rational> = "y + x^2, x".parse().unwrap();
/// let w = vdk_factor(&phi).unwrap();
/// assert_eq!(w.len(), 2);
/// assert_eq!(w.recompose(), phi);
/// assert!(vdk_factor(&"x^2, y".parse::<PlaneAuto<Rational>>().unwrap()).is_err());
/// ```
pub fn vdk_factor<F: Field>(phi: &PlaneAuto<F>) -> Result<AmalgamWord<F>> {
    let reject = |why: String| {
        let why = match phi.jacobian_unit() {
            None => format!("jacobian {} is not a nonzero constant", phi.jacobian()),
            Some(_) => why,
        };
        Err(Error::NotAnAutomorphism(why))
    };
    let swap = Factor::Affine(AffineAuto::linear(Mat2::from_i64(0, 1, 1, 0)));
    let (mut p, mut q) = (phi.p().clone(), phi.q().clone());
    let mut letters = Vec::new();
    let mut cache = PowerCache::new(&p);
    loop {
        let (dp, dq) = (p.degree(), q.degree());
        if dp <= Degree::Finite(1) && dq <= Degree::Finite(1) {
            break;
        }
        // Reduce q against p first (this also settles ties), swap otherwise.
        if dq >= dp {
            if let Some((c, k)) = leading_power(&p, &q) {
                letters.push(Factor::Elem(ElemAuto::shear(Poly1::monomial(c.clone(), k))));
                q = &q - &cache.get(k).scale(&c);
                continue;
            }
        }
        if dp >= dq && leading_power(&q, &p).is_some() {
            letters.push(swap.clone());
            std::mem::swap(&mut p, &mut q);
            cache = PowerCache::new(&p);
            continue;
        }
        return reject(format!(
            "leading forms of degrees {dp} and {dq} are not related by a power"
        ));
    }
    let fin = PlaneAuto::new(p, q);
    let Ok(lin) = AffineAuto::new(fin.linear_part(), fin.translation()) else {
        return reject("final affine map is singular".into());
    };
    letters.push(Factor::Affine(lin));
    Ok(normal_form(&AmalgamWord::from_factors(letters)))
}

/// Inverse automorphism, via the reduced word.
///
/// ```
/// use autk2::prelude::*;
///
/// let phi: PlaneAuto<Rational> = "y + x^2, x".parse().unwrap();
/// assert_eq!(invert(&phi).unwrap().to_string(), "y, x - y^2");
/// ```
pub fn invert<F: Field>(phi: &PlaneAuto<F>) -> Result<PlaneAuto<F>> {
    Ok(vdk_factor(phi)?.inverse().recompose())
}

/// Integer power, negative exponents through [`invert`].
pub fn power<F: Field>(phi: &PlaneAuto<F>, n: i64) -> Result<PlaneAuto<F>> {
    let base = if n < 0 { invert(phi)? } else { phi.clone() };
    Ok(base.pow(n.unsigned_abs() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    fn a<F: Field>(s: &str) -> PlaneAuto<F> {
        s.parse().unwrap()
    }

    #[test]
    fn single_elementary() {
        let w = vdk_factor(&a::<Q>("x, y + x^3")).unwrap();
        assert_eq!(w.len(), 1);
        assert!(matches!(w.factors[0], Factor::Elem(_)));
    }

    #[test]
    fn rejects_non_automorphisms() {
        assert!(matches!(
            vdk_factor(&a::<Q>("x^2, y")),
            Err(Error::NotAnAutomorphism(_))
        ));
        // Jacobian 1 in characteristic 2, yet not invertible.
        let bad = a::<Fp<2>>("x + x^2, y");
        assert!(matches!(vdk_factor(&bad), Err(Error::NotAnAutomorphism(_))));
    }

    #[test]
    fn inverses() {
        assert_eq!(invert(&a::<Q>("x, y + x^2")).unwrap(), a("x, y - x^2"));
        assert_eq!(invert(&a::<Q>("x + y, x")).unwrap(), a("y, x - y"));
        let phi = a::<Q>("y + x^2, x");
        let inv = invert(&phi).unwrap();
        assert!(phi.compose(&inv).is_identity());
        assert!(inv.compose(&phi).is_identity());
    }

    #[test]
    fn tie_breaking() {
        let phi = a::<Q>("x + y + x^3, 2*x + 3*y + 3*x^3");
        let w = vdk_factor(&phi).unwrap();
        assert_eq!(w.recompose(), phi);
    }
}
