use serde::Serialize;

use crate::auto::{AffineAuto, ElemAuto, PlaneAuto};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::Poly1;
use crate::scalar::{Field, RatFunc};

use super::factor::vdk_factor;
use super::word::{normal_form, word_type, AmalgamWord, Factor, Side, WordType};

/// Which Borel subgroup an element is taken from when looking for a
/// conjugate outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HContext<F: Field> {
    /// `SB₀(K)`: maps in `B` fixing the origin with Jacobian 1.
    SAut0,
    /// All of `B(K)`.
    Borel,
    /// `B(I)` for an ideal `I = (r)`: maps `(x + u, y + v + w·x)` with
    /// `u, v, w ∈ I`. Conjugators are `γ = (x + r·y, y)` and
    /// `φ = (x, y + r·xⁿ)` with `n` prime to the characteristic.
    Congruence { r: F },
}

/// A conjugator `γ` and the conjugate `γ∘g∘γ⁻¹`, which lies outside `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<F: Field> {
    pub label: String,
    pub conjugator: PlaneAuto<F>,
    pub conjugate: PlaneAuto<F>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub label: String,
    pub conjugator: String,
    pub conjugate: String,
}

impl<F: Field> Witness<F> {
    pub fn record(&self) -> WitnessRecord {
        WitnessRecord {
            label: self.label.clone(),
            conjugator: self.conjugator.to_string(),
            conjugate: self.conjugate.to_string(),
        }
    }
}

fn shear<F: Field>(c: F, n: u32) -> Factor<F> {
    Factor::Elem(ElemAuto::shear(Poly1::monomial(c, n)))
}

fn linear<F: Field>(m: Mat2<F>) -> Factor<F> {
    Factor::Affine(AffineAuto::linear(m))
}

fn word_of<F: Field>(letters: &[Factor<F>]) -> AmalgamWord<F> {
    normal_form(&AmalgamWord::from_factors(letters.to_vec()))
}

/// Try candidates in order and return the first whose conjugate leaves `B`.
fn first_outside<F: Field>(g: &PlaneAuto<F>, candidates: Vec<(String, Vec<Factor<F>>)>) -> Result<Witness<F>> {
    for (label, letters) in candidates {
        let w = word_of(&letters);
        let gamma = w.recompose();
        let gamma_inv = w.inverse().recompose();
        let conj = g.conjugate_by(&gamma, &gamma_inv);
        if !conj.classify().in_b {
            return Ok(Witness {
                label,
                conjugator: gamma,
                conjugate: conj,
            });
        }
    }
    Err(Error::Precondition(format!("no listed conjugator moves {g} out of B")))
}

fn check_in_b<F: Field>(g: &PlaneAuto<F>) -> Result<AffineAuto<F>> {
    if g.is_identity() {
        return Err(Error::Precondition("the identity has no witness".into()));
    }
    match g.as_affine() {
        Some(a) if a.in_b() => Ok(a),
        _ => Err(Error::Precondition(format!("{g} is not in B"))),
    }
}

/// Exponent `n ≥ 3` prime to the characteristic.
fn odd_exponent<F: Field>() -> u32 {
    if F::characteristic() == 3 {
        4
    } else {
        3
    }
}

/// Find a conjugate of `g` outside the Borel subgroup named by `ctx`.
///
/// ```
/// use autk2::prelude::*;
///
/// let g: PlaneAuto<Rational> = "-x, -y".parse().unwrap();
/// let w = hypothesis_h_witness(&g, &HContext::SAut0).unwrap();
/// assert_eq!(w.conjugator.to_string(), "x, y + x^2");
/// assert_eq!(w.conjugate.to_string(), "-x, -y + 2*x^2");
/// ```
pub fn hypothesis_h_witness<F: Field>(g: &PlaneAuto<F>, ctx: &HContext<F>) -> Result<Witness<F>> {
    let a = check_in_b(g)?;
    let one = F::one;
    let zero = F::zero;
    match ctx {
        HContext::SAut0 => {
            if !a.v.iter().all(F::is_zero) || !a.l.det().is_one() {
                return Err(Error::Precondition(format!("{g} is not in SB0")));
            }
            let homothety = a.l.m[1][0].is_zero() && a.l.m[0][0] == a.l.m[1][1];
            if homothety {
                if F::characteristic() == 2 {
                    return Err(Error::Unsupported("homothety case in characteristic 2".into()));
                }
                return first_outside(g, vec![("(x, y + x^2)".into(), vec![shear(one(), 2)])]);
            }
            first_outside(
                g,
                vec![
                    (
                        "rotation (y, -x)".into(),
                        vec![linear(Mat2::new(zero(), one(), one().neg(), zero()))],
                    ),
                    (
                        "shear (x + y, y)".into(),
                        vec![linear(Mat2::new(one(), one(), zero(), one()))],
                    ),
                ],
            )
        }
        HContext::Borel => {
            let swap = || linear(Mat2::new(zero(), one(), one(), zero()));
            first_outside(
                g,
                vec![
                    ("swap".into(), vec![swap()]),
                    ("(x, y + x^2)".into(), vec![shear(one(), 2)]),
                    ("(x, y + x^3)".into(), vec![shear(one(), 3)]),
                    ("(x, y + x^4)".into(), vec![shear(one(), 4)]),
                    ("(x, y + x^3) o swap".into(), vec![shear(one(), 3), swap()]),
                    ("(x, y + x^4) o swap".into(), vec![shear(one(), 4), swap()]),
                ],
            )
        }
        HContext::Congruence { r } => {
            if r.is_zero() {
                return Err(Error::Precondition("the ideal generator must be nonzero".into()));
            }
            let [[p, b], [w, d]] = &a.l.m;
            if !p.is_one() || !b.is_zero() || !d.is_one() {
                return Err(Error::Precondition(format!(
                    "{g} is not of the form (x + u, y + v + w*x)"
                )));
            }
            let n = odd_exponent::<F>();
            let gamma = || linear(Mat2::new(one(), r.clone(), zero(), one()));
            let phi = || shear(r.clone(), n);
            let (label, letters) = if !w.is_zero() {
                ("gamma".to_string(), vec![gamma()])
            } else if !a.v[0].is_zero() {
                ("phi".to_string(), vec![phi()])
            } else {
                ("phi o gamma".to_string(), vec![phi(), gamma()])
            };
            first_outside(g, vec![(label, letters)])
        }
    }
}

/// Whether every coefficient of `g - id` is a polynomial in `z` divisible
/// by `r`, i.e. `g ∈ B((r))` inside `B(K(z))`.
pub fn in_congruence_borel<G: Field>(g: &PlaneAuto<RatFunc<G>>, r: &Poly1<G>) -> bool {
    let Some(a) = g.as_affine() else {
        return false;
    };
    let [[p, b], [w, d]] = &a.l.m;
    if !p.is_one() || !b.is_zero() || !d.is_one() {
        return false;
    }
    let integral = |c: &RatFunc<G>| c.as_poly().is_some_and(|poly| poly.div_rem(r).1.is_zero());
    integral(w) && integral(&a.v[0]) && integral(&a.v[1])
}

/// A conjugator `γ` with `γ∘w∘γ⁻¹` of the requested corner type
/// (`Γ₁₁` or `Γ₂₂`).
///
/// Words in `B` are first moved out of `B` with a [`HContext::Borel`]
/// witness. Mixed types are fixed by an elementary conjugator `γ` chosen so
/// the first letter does not collapse into `B`; at most one of
/// `(x, y + x²)` and `(x, y + x³)` can fail, since their inverse cosets
/// differ. A final swap or shear moves between the two pure corners.
///
/// ```
/// use autk2::prelude::*;
///
/// let t = vdk_factor(&"x, y + x^2".parse::<PlaneAuto<Rational>>().unwrap()).unwrap();
/// let gamma = conjugate_to_corner(&t, Side::Affine).unwrap();
/// let c = t.conjugate_by(&gamma);
/// assert_eq!(word_type(&c).unwrap(), WordType::Gamma(Side::Affine, Side::Affine));
/// ```
pub fn conjugate_to_corner<F: Field>(w: &AmalgamWord<F>, corner: Side) -> Result<AmalgamWord<F>> {
    let mut g = normal_form(w);
    if g.is_empty() && g.tail.is_identity() {
        return Err(Error::Precondition("the identity has no corner".into()));
    }
    let target = WordType::Gamma(corner, corner);
    let mut acc = AmalgamWord::identity();
    let one = F::one;
    let elem = |n: u32| word_of(&[shear(one(), n)]);
    let swap = word_of(&[linear(Mat2::new(F::zero(), one(), one(), F::zero()))]);
    let mut apply = |g: &mut AmalgamWord<F>, gamma: AmalgamWord<F>| {
        *g = g.conjugate_by(&gamma);
        acc = gamma.mul(&acc);
    };
    for _ in 0..4 {
        let ty = word_type(&g)?;
        if ty == target {
            return Ok(acc);
        }
        match ty {
            WordType::A => {
                let wit = hypothesis_h_witness(&g.recompose(), &HContext::Borel)?;
                apply(&mut g, vdk_factor(&wit.conjugator)?);
            }
            WordType::Gamma(Side::Elem, Side::Elem) => apply(&mut g, swap.clone()),
            WordType::Gamma(Side::Affine, Side::Affine) => apply(&mut g, elem(2)),
            WordType::Gamma(_, _) => {
                let pure = WordType::Gamma(Side::Elem, Side::Elem);
                let pick = [elem(2), elem(3)]
                    .into_iter()
                    .find(|c| word_type(&g.conjugate_by(c)).ok() == Some(pure))
                    .ok_or_else(|| Error::Precondition("no elementary conjugator reaches Gamma22".into()))?;
                apply(&mut g, pick);
            }
        }
    }
    Err(Error::Precondition(format!("could not reach {target}")))
}
