use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::mat2::PolyMat2;
use crate::poly1::Poly1;
use crate::proj::ProjPoint;
use crate::report::{Record, Report};
use crate::scalar::Field;

use super::factor::{EFactor, MatFreeWord};

/// A nonzero vector of `K[t]²`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyVec<F: Field> {
    pub v: [Poly1<F>; 2],
}

impl<F: Field> PolyVec<F> {
    pub fn new(a: Poly1<F>, b: Poly1<F>) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(PolyVec { v: [a, b] })
    }

    pub fn degree(&self) -> u32 {
        self.v[0].degree().max(self.v[1].degree()).or_zero()
    }

    /// The highest component `hc(v)`, the coefficient of the top power.
    pub fn hc(&self) -> [F; 2] {
        let n = self.degree();
        [self.v[0].coeff(n), self.v[1].coeff(n)]
    }

    pub fn hc_line(&self) -> ProjPoint<F> {
        ProjPoint::from_vec(&self.hc()).expect("nonzero vector has a highest component")
    }

    pub fn apply(&self, g: &PolyMat2<F>) -> Result<Self> {
        let [a, b] = g.apply(&self.v);
        Self::new(a, b)
    }

    /// A random vector of degree at most `deg`.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, deg: u32, height: u32) -> Self {
        loop {
            let mut entry = || {
                let mut terms = Vec::new();
                for k in 0..=deg {
                    if rng.gen_bool(0.6) {
                        terms.push((k, F::sample(rng, height)));
                    }
                }
                Poly1::from_terms(terms)
            };
            let (a, b) = (entry(), entry());
            if let Ok(v) = Self::new(a, b) {
                return v;
            }
        }
    }
}

impl<F: Field> fmt::Display for PolyVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.v[0], self.v[1])
    }
}

impl<F: Field> fmt::Debug for PolyVec<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyVec{self}")
    }
}

/// Check the ping-pong inclusions `E*_δ · Ω_{δ'} ⊂ Ω_δ` for `δ ≠ δ'`, and
/// that each reduced word moves a vector whose highest component avoids the
/// lines at both ends of the word.
///
/// Pairs with `δ = δ'` are skipped. Words whose end lines leave no sample
/// available are reported as failures.
///
/// ```
/// use autk2::prelude::*;
///
/// let h = EFactor::new(ProjPoint::infinity(), Rational::from_i64(1), 1).unwrap();
/// let one = Poly1::one();
/// let v = PolyVec::new(one.clone(), one).unwrap();
/// let rep = pingpong_check(&[h], &[v], &[]).unwrap();
/// assert!(rep.pass());
/// assert_eq!(rep.records.len(), 1);
/// ```
pub fn pingpong_check<F: Field>(
    factors: &[EFactor<F>],
    samples: &[PolyVec<F>],
    words: &[MatFreeWord<F>],
) -> Result<Report> {
    let mut rep = Report::new();
    for (i, h) in factors.iter().enumerate() {
        let m = h.matrix();
        for (j, v) in samples.iter().enumerate() {
            let line = v.hc_line();
            if line == h.delta {
                continue;
            }
            let hv = v.apply(&m)?;
            let got = ProjPoint::from_vec(&hv.hc())?;
            rep.push(Record::new(
                "inclusion",
                format!("factor={i} sample={j} from={line}"),
                format!("hc on {}", h.delta),
                format!("hc on {got}"),
                got == h.delta,
            ));
        }
    }
    for (i, w) in words.iter().enumerate() {
        let (Some((first, _)), Some((last, _))) = (w.pairs.first(), w.pairs.last()) else {
            continue;
        };
        let Some(v) = samples.iter().find(|v| {
            let l = v.hc_line();
            l != *first && l != *last
        }) else {
            rep.push(Record::new(
                "moves",
                format!("word={i}"),
                "moved",
                "no off-line sample",
                false,
            ));
            continue;
        };
        let wv = v.apply(&w.product())?;
        let moved = wv != *v;
        rep.push(Record::new(
            "moves",
            format!("word={i} length={} sample={v}", w.len()),
            "moved",
            if moved { "moved" } else { "fixed" },
            moved,
        ));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn one() -> Poly1<Q> {
        Poly1::one()
    }

    #[test]
    fn worked_inclusion() {
        let h = EFactor::new(ProjPoint::infinity(), Q::one(), 1).unwrap();
        let v = PolyVec::new(one(), one()).unwrap();
        let hv = v.apply(&h.matrix()).unwrap();
        assert_eq!(hv.to_string(), "[1 + t, 1]");
        assert_eq!(hv.hc_line(), ProjPoint::infinity());
    }

    #[test]
    fn same_line_is_skipped() {
        let h = EFactor::new(ProjPoint::infinity(), Q::one(), 2).unwrap();
        let v = PolyVec::new(one(), Poly1::zero()).unwrap();
        assert!(pingpong_check(&[h], &[v], &[]).unwrap().records.is_empty());
    }

    #[test]
    fn word_moves_sample() {
        let t = Poly1::<Q>::var();
        let mut w = MatFreeWord::new();
        w.push(ProjPoint::vertical(), t.clone());
        w.push(ProjPoint::infinity(), t.clone());
        w.push(ProjPoint::vertical(), t);
        let v = PolyVec::new(one(), one()).unwrap();
        let rep = pingpong_check(&[], &[v], &[w]).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.records.len(), 1);
    }

    #[test]
    fn zero_vector_rejected() {
        assert!(matches!(
            PolyVec::<Q>::new(Poly1::zero(), Poly1::zero()),
            Err(Error::ZeroVector)
        ));
    }
}
