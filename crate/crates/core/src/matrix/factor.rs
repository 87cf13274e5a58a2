use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::{Mat2, PolyMat2};
use crate::poly1::{Degree, Poly1};
use crate::proj::ProjPoint;
use crate::scalar::Field;

/// `⟨A|B⟩ = det(A+B) − det A − det B`.
pub fn bilinear_bracket<F: Field>(a: &Mat2<F>, b: &Mat2<F>) -> F {
    a.bracket(b)
}

/// The matrix `id + c·t^k·e_δ` of `E_δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EFactor<F: Field> {
    pub delta: ProjPoint<F>,
    pub c: F,
    pub k: u32,
}

impl<F: Field> EFactor<F> {
    pub fn new(delta: ProjPoint<F>, c: F, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("E_delta factor needs k >= 1".into()));
        }
        if c.is_zero() {
            return Err(Error::Precondition("E_delta factor needs c != 0".into()));
        }
        Ok(EFactor { delta, c, k })
    }

    /// `c·t^k`.
    pub fn poly(&self) -> Poly1<F> {
        Poly1::monomial(self.c.clone(), self.k)
    }

    pub fn matrix(&self) -> PolyMat2<F> {
        PolyMat2::id_plus(&self.poly(), self.delta.nil_endo().matrix())
    }

    pub fn inverse(&self) -> Self {
        EFactor {
            delta: self.delta.clone(),
            c: self.c.neg(),
            k: self.k,
        }
    }
}

impl<F: Field> fmt::Display for EFactor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.delta, self.c, self.k)
    }
}

impl<F: Field> Serialize for EFactor<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EFactor", 3)?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("c", &self.c.to_string())?;
        st.serialize_field("k", &self.k)?;
        st.end()
    }
}

/// Product of a factor list, left to right.
pub fn efactor_product<F: Field>(factors: &[EFactor<F>]) -> PolyMat2<F> {
    factors.iter().fold(PolyMat2::identity(), |acc, f| acc.mul(&f.matrix()))
}

/// One pass of the factorization loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorStep<F: Field> {
    pub factor: EFactor<F>,
    /// The index `n` of the coefficient used to solve for `c`.
    pub pivot: u32,
    pub degree_before: u32,
    pub degree_after: Degree,
}

/// Whether every column of `a` lies on `delta`.
fn columns_on<F: Field>(a: &Mat2<F>, delta: &ProjPoint<F>) -> bool {
    (0..2).all(|j| {
        let c = a.column(j);
        (c[0].is_zero() && c[1].is_zero()) || delta.contains(&c)
    })
}

/// The line spanned by the columns of a rank-one matrix.
fn image_line<F: Field>(a: &Mat2<F>) -> Option<ProjPoint<F>> {
    if a.rank() != 1 {
        return None;
    }
    (0..2).find_map(|j| ProjPoint::from_vec(&a.column(j)).ok())
}

/// Solve `c·x = y` at the first nonzero entry of `x`, and confirm it on all
/// entries.
fn solve_scalar<F: Field>(x: &Mat2<F>, y: &Mat2<F>) -> Option<F> {
    let (i, j) = (0..4).map(|n| (n / 2, n % 2)).find(|&(i, j)| !x.get(i, j).is_zero())?;
    let c = y.get(i, j).div(x.get(i, j))?;
    (x.scale(&c) == *y).then_some(c)
}

/// The factorization loop with a record of each pass.
///
/// At degree `N` the top coefficient `A_N` has rank one with image `δ`. Let
/// `n` be the largest index with `A_n` not mapping into `δ`, and solve
/// `c·e_δ·A_n = A_N`. Then `id + c·t^{N−n}·e_δ` is split off on the left and
/// the remainder has smaller degree.
pub fn matrix_factor_steps<F: Field>(g: &PolyMat2<F>) -> Result<Vec<FactorStep<F>>> {
    g.check_gl1()?;
    let mut h = g.clone();
    let mut steps = Vec::new();
    while !h.is_identity() {
        let n_top = h.degree().or_zero();
        let top = h.coeff(n_top);
        let delta = image_line(&top).ok_or(Error::InternalRank { degree: n_top })?;
        let e = delta.nil_endo().matrix().clone();
        let pivot = (0..n_top)
            .rev()
            .find(|&k| !columns_on(&h.coeff(k), &delta))
            .ok_or(Error::InternalRank { degree: n_top })?;
        let c = solve_scalar(&e.mul(&h.coeff(pivot)), &top).ok_or(Error::InternalRank { degree: n_top })?;
        let factor = EFactor::new(delta, c, n_top - pivot)?;
        h = factor.inverse().matrix().mul(&h);
        let after = h.degree();
        if after >= Degree::Finite(n_top) {
            return Err(Error::InternalRank { degree: n_top });
        }
        h.check_gl1()?;
        steps.push(FactorStep {
            factor,
            pivot,
            degree_before: n_top,
            degree_after: after,
        });
    }
    Ok(steps)
}

/// Factor `G ∈ GL₁(2,K[t])` into `E_δ` factors whose product is `G`.
///
/// ```
/// use autk2::prelude::*;
///
/// let g = parse_polymat::<Rational>("1, t ; t, 1 + t^2").unwrap();
/// let fs = matrix_factor(&g).unwrap();
/// let shown: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
/// assert_eq!(shown, ["(0, 1) | 1 | 1", "(1, 0) | 1 | 1"]);
/// ```
pub fn matrix_factor<F: Field>(g: &PolyMat2<F>) -> Result<Vec<EFactor<F>>> {
    Ok(matrix_factor_steps(g)?.into_iter().map(|s| s.factor).collect())
}

/// A reduced word `∏ (id + hᵢ·e_{δᵢ})` with `hᵢ ∈ tK[t] \ 0` and consecutive
/// lines distinct.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MatFreeWord<F: Field> {
    pub pairs: Vec<(ProjPoint<F>, Poly1<F>)>,
}

impl<F: Field> MatFreeWord<F> {
    pub fn new() -> Self {
        MatFreeWord { pairs: Vec::new() }
    }

    /// Append `id + h·e_δ`, merging equal neighbouring lines.
    pub fn push(&mut self, delta: ProjPoint<F>, h: Poly1<F>) {
        if let Some((d, g)) = self.pairs.last_mut() {
            if *d == delta {
                *g = &*g + &h;
                if g.is_zero() {
                    self.pairs.pop();
                }
                return;
            }
        }
        if !h.is_zero() {
            self.pairs.push((delta, h));
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn product(&self) -> PolyMat2<F> {
        self.pairs.iter().fold(PolyMat2::identity(), |acc, (d, h)| {
            acc.mul(&PolyMat2::id_plus(h, d.nil_endo().matrix()))
        })
    }

    pub fn check(&self) -> Result<()> {
        for (i, (d, h)) in self.pairs.iter().enumerate() {
            if h.valuation().is_none_or(|v| v < 1) {
                return Err(Error::NotNormalized(format!(
                    "pair {i} has parameter {h} outside t K[t] minus 0"
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

    pub fn inverse(&self) -> Self {
        MatFreeWord {
            pairs: self.pairs.iter().rev().map(|(d, h)| (d.clone(), -h)).collect(),
        }
    }
}

impl<F: Field> fmt::Display for MatFreeWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, h)) in self.pairs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d} | {h}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MatFreeWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.pairs.iter().map(|(d, h)| format!("{d} | {h}")))
            .finish()
    }
}

/// The reduced word of `G` in the free product of the `E_δ`.
pub fn matrix_free_nf<F: Field>(g: &PolyMat2<F>) -> Result<MatFreeWord<F>> {
    let mut w = MatFreeWord::new();
    for f in matrix_factor(g)? {
        let h = f.poly();
        w.push(f.delta, h);
    }
    Ok(w)
}

/// Whether `G(0)` satisfies `s`, for `G` of constant nonzero determinant.
pub fn gls_membership<F: Field>(g: &PolyMat2<F>, s: impl Fn(&Mat2<F>) -> bool) -> Result<bool> {
    let det = g.det();
    match det.as_constant() {
        Some(c) if !c.is_zero() => Ok(s(&g.coeff(0))),
        _ => Err(Error::NotInGl1(format!("determinant {det} is not a nonzero constant"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polymat;
    use crate::scalar::Rational;

    type Q = Rational;

    fn m(s: &str) -> PolyMat2<Q> {
        parse_polymat(s).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let id = Mat2::<Q>::identity();
        assert_eq!(bilinear_bracket(&id, &id), Q::from_i64(2));
        let a = Mat2::<Q>::from_i64(0, 0, 1, 0);
        let b = Mat2::<Q>::from_i64(0, 0, 3, 0);
        assert_eq!(bilinear_bracket(&a, &b), Q::zero());
    }

    #[test]
    fn worked_example() {
        let g = m("1, t ; t, 1 + t^2");
        let steps = matrix_factor_steps(&g).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(
            steps[0].factor,
            EFactor::new(ProjPoint::vertical(), Q::one(), 1).unwrap()
        );
        assert_eq!(steps[0].pivot, 1);
        assert_eq!(
            steps[1].factor,
            EFactor::new(ProjPoint::infinity(), Q::one(), 1).unwrap()
        );
        assert_eq!(steps[0].factor.matrix(), m("1, 0 ; t, 1"));
        assert_eq!(steps[1].factor.matrix(), m("1, t ; 0, 1"));
    }

    #[test]
    fn trivial_cases() {
        assert!(matrix_factor(&PolyMat2::<Q>::identity()).unwrap().is_empty());
        let fs = matrix_factor(&m("1, 0 ; t, 1")).unwrap();
        assert_eq!(fs, vec![EFactor::new(ProjPoint::vertical(), Q::one(), 1).unwrap()]);
        assert!(matches!(matrix_factor(&m("2, 0 ; 0, 1/2")), Err(Error::NotInGl1(_))));
        assert!(matches!(matrix_factor(&m("1 + t, 0 ; 0, 1")), Err(Error::NotInGl1(_))));
    }

    #[test]
    fn merging_and_cancellation() {
        let d = ProjPoint::affine(Q::new(1, 2));
        let e = d.nil_endo().matrix().clone();
        let t = Poly1::<Q>::var();
        let t2 = Poly1::monomial(Q::one(), 2);
        let g = PolyMat2::id_plus(&t, &e).mul(&PolyMat2::id_plus(&t2, &e));
        let w = matrix_free_nf(&g).unwrap();
        assert_eq!(w.pairs, vec![(d.clone(), &t + &t2)]);
        let g = PolyMat2::id_plus(&t, &e).mul(&PolyMat2::id_plus(&-&t, &e));
        assert!(matrix_free_nf(&g).unwrap().is_empty());
    }

    #[test]
    fn alternating_word_is_reduced() {
        let d0 = ProjPoint::<Q>::vertical();
        let d1 = ProjPoint::infinity();
        let t = Poly1::<Q>::var();
        let mut w = MatFreeWord::new();
        for d in [&d0, &d1, &d0, &d1] {
            w.push(d.clone(), t.clone());
        }
        assert_eq!(matrix_free_nf(&w.product()).unwrap(), w);
        assert!(w.check().is_ok());
    }

    #[test]
    fn gls() {
        assert!(gls_membership(&PolyMat2::<Q>::identity(), |a| a.is_identity()).unwrap());
        assert!(gls_membership(&m("2, t ; 0, 1/2"), |a| a.is_upper_triangular()).unwrap());
        assert!(gls_membership(&m("1 + t, 0 ; 0, 1"), |_| true).is_err());
    }
}
