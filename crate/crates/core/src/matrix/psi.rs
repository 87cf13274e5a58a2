use crate::amalgam::{free1_decompose, FreeWord};
use crate::auto::{tau_delta, PlaneAuto};
use crate::error::{Error, Result};
use crate::mat2::PolyMat2;
use crate::scalar::Field;

use super::factor::{matrix_free_nf, MatFreeWord};

/// Image of a shear word: `τ_δ(f) ↦ id + (f/t)·e_δ` on each pair.
pub fn psi_word<F: Field>(w: &FreeWord<F>) -> MatFreeWord<F> {
    let mut out = MatFreeWord::new();
    for (d, f) in &w.pairs {
        let h = f.shift_down(1).expect("free word parameter divisible by t");
        out.push(d.clone(), h);
    }
    out
}

/// Preimage of a matrix word: `id + h·e_δ ↦ τ_δ(t·h)`.
pub fn psi_inverse_word<F: Field>(w: &MatFreeWord<F>) -> FreeWord<F> {
    let mut out = FreeWord::new();
    for (d, h) in &w.pairs {
        out.push(d.clone(), h.shift_up(1));
    }
    out
}

/// `ψ(φ)` for `φ ∈ Aut₁ K²`.
///
/// ```
/// use autk2::prelude::*;
///
/// let t2: PlaneAuto<Rational> = "x, y + x^2".parse().unwrap();
/// let s2: PlaneAuto<Rational> = "x + y^2, y".parse().unwrap();
/// assert_eq!(to_matrix(&t2).unwrap().to_string(), "1, 0 ; t, 1");
/// assert_eq!(to_matrix(&t2.compose(&s2)).unwrap().to_string(), "1, t ; t, 1 + t^2");
/// ```
pub fn to_matrix<F: Field>(phi: &PlaneAuto<F>) -> Result<PolyMat2<F>> {
    Ok(psi_word(&free1_decompose(phi)?).product())
}

/// `ψ⁻¹(G)` for `G ∈ GL₁(2,K[t])`.
///
/// ```
/// use autk2::prelude::*;
///
/// let g = parse_polymat::<Rational>("1, t ; t, 1 + t^2").unwrap();
/// let phi = from_matrix(&g).unwrap();
/// assert_eq!(phi.to_string(), "x + y^2, y + x^2 + 2*x*y^2 + y^4");
/// assert_eq!(to_matrix(&phi).unwrap(), g);
/// ```
pub fn from_matrix<F: Field>(g: &PolyMat2<F>) -> Result<PlaneAuto<F>> {
    let w = psi_inverse_word(&matrix_free_nf(g)?);
    let mut acc = PlaneAuto::identity();
    for (d, f) in w.pairs.iter().rev() {
        acc = tau_delta(d, f)
            .map_err(|e| Error::NotInGl1(e.to_string()))?
            .compose(&acc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polymat;
    use crate::poly1::Poly1;
    use crate::proj::ProjPoint;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn identity_both_ways() {
        assert!(to_matrix(&PlaneAuto::<Q>::identity()).unwrap().is_identity());
        assert!(from_matrix(&PolyMat2::<Q>::identity()).unwrap().is_identity());
    }

    #[test]
    fn single_shear() {
        let g = parse_polymat::<Q>("1, 0 ; t, 1").unwrap();
        assert_eq!(from_matrix(&g).unwrap(), "x, y + x^2".parse().unwrap());
    }

    #[test]
    fn homomorphism_on_two_lines() {
        let d = ProjPoint::affine(Q::new(-3, 2));
        let f = Poly1::from_coeffs(vec![Q::zero(), Q::zero(), Q::one(), Q::new(2, 5)]);
        let a = tau_delta(&d, &f).unwrap();
        let b = tau_delta(&ProjPoint::infinity(), &Poly1::monomial(Q::from_i64(4), 4)).unwrap();
        let ab = a.compose(&b);
        assert_eq!(
            to_matrix(&ab).unwrap(),
            to_matrix(&a).unwrap().mul(&to_matrix(&b).unwrap())
        );
        assert_eq!(from_matrix(&to_matrix(&ab).unwrap()).unwrap(), ab);
    }

    #[test]
    fn rejects_non_members() {
        let g = parse_polymat::<Q>("1 + t, 0 ; 0, 1").unwrap();
        assert!(matches!(from_matrix(&g), Err(Error::NotInGl1(_))));
        let phi: PlaneAuto<Q> = "2*x, y".parse().unwrap();
        assert!(to_matrix(&phi).is_err());
    }
}
