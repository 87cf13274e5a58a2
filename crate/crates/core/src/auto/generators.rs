use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::Poly1;
use crate::poly2::Poly2;
use crate::proj::ProjPoint;
use crate::scalar::Field;

use super::{ElemAuto, PlaneAuto};

/// Named automorphisms used throughout the crate and the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named<F: Field> {
    /// `(x/2, y/2)`.
    S,
    /// The linear map with rows `(1, 1), (1, 0)`.
    SPrime,
    /// `(x, y + x²)`.
    T,
    /// `(2x, y/2)`.
    H,
    /// `(x, y + xⁿ)`, `n ≥ 1`.
    U(u32),
    /// `(x + r·y, y)`.
    Gamma(F),
    /// `(x, y + r·xⁿ)`.
    Phi(F, u32),
}

impl<F: Field> Named<F> {
    pub fn build(&self) -> Result<PlaneAuto<F>> {
        let half = || {
            F::from_i64(2)
                .inv()
                .ok_or_else(|| Error::Unsupported(format!("{self} needs 1/2, which {} lacks", F::name())))
        };
        Ok(match self {
            Named::S => PlaneAuto::linear(&Mat2::diag(half()?, half()?)),
            Named::SPrime => PlaneAuto::linear(&Mat2::from_i64(1, 1, 1, 0)),
            Named::T => ElemAuto::shear(Poly1::monomial(F::one(), 2)).to_plane(),
            Named::H => PlaneAuto::linear(&Mat2::diag(F::from_i64(2), half()?)),
            Named::U(n) => {
                if *n < 1 {
                    return Err(Error::Precondition("u_n needs n >= 1".into()));
                }
                ElemAuto::shear(Poly1::monomial(F::one(), *n)).to_plane()
            }
            Named::Gamma(r) => PlaneAuto::linear(&Mat2::new(F::one(), r.clone(), F::zero(), F::one())),
            Named::Phi(r, n) => ElemAuto::shear(Poly1::monomial(r.clone(), *n)).to_plane(),
        })
    }
}

/// Look up a generator by name: `S`, `S'`, `T`, `h`, `u_<n>`,
/// `gamma_<r>` or `phi_<r>_<n>`.
///
/// ```
/// use autk2::auto::named_generator;
/// use autk2::scalar::Rational;
///
/// let g = named_generator::<Rational>("S'").unwrap();
/// assert_eq!(g.to_string(), "x + y, x");
/// ```
pub fn named_generator<F: Field>(name: &str) -> Result<PlaneAuto<F>> {
    name.parse::<Named<F>>()?.build()
}

impl<F: Field> FromStr for Named<F> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGenerator(s.to_string());
        let int = |v: &str| v.parse::<u32>().map_err(|_| unknown());
        let scalar = |v: &str| crate::parse::parse_scalar::<F>(v).map_err(|_| unknown());
        Ok(match s {
            "S" => Named::S,
            "S'" | "Sp" | "S_prime" => Named::SPrime,
            "T" => Named::T,
            "h" => Named::H,
            _ => {
                if let Some(n) = s.strip_prefix("u_") {
                    Named::U(int(n)?)
                } else if let Some(r) = s.strip_prefix("gamma_") {
                    Named::Gamma(scalar(r)?)
                } else if let Some(rest) = s.strip_prefix("phi_") {
                    let (r, n) = rest.rsplit_once('_').ok_or_else(unknown)?;
                    Named::Phi(scalar(r)?, int(n)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

impl<F: Field> fmt::Display for Named<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::S => f.write_str("S"),
            Named::SPrime => f.write_str("S'"),
            Named::T => f.write_str("T"),
            Named::H => f.write_str("h"),
            Named::U(n) => write!(f, "u_{n}"),
            Named::Gamma(r) => write!(f, "gamma_{r}"),
            Named::Phi(r, n) => write!(f, "phi_{r}_{n}"),
        }
    }
}

/// The shear `τ_δ(f) = (x + a·f(bx − ay), y + b·f(bx − ay))` for the
/// canonical representative `(a, b)` of `δ`.
///
/// `f` must lie in `t²K[t]`. `f = 0` gives the identity.
pub fn tau_delta<F: Field>(delta: &ProjPoint<F>, f: &Poly1<F>) -> Result<PlaneAuto<F>> {
    if f.valuation().is_some_and(|v| v < 2) {
        return Err(Error::Precondition(format!(
            "tau parameter must have no constant or linear term, got {f}"
        )));
    }
    let [a, b] = delta.pair();
    let s = Poly2::linear(b.clone(), a.neg(), F::zero());
    let fs = Poly2::from_poly_x(f).substitute(&s, &Poly2::zero());
    Ok(PlaneAuto::new(&Poly2::x() + &fs.scale(&a), &Poly2::y() + &fs.scale(&b)))
}

/// `(z·x, z⁻¹·y + a·x^{n-1})`, the literal parametrization of `G_n(K)`.
///
/// This literal form is not a homomorphism for the law
/// `(z,a)·(z',a') = (zz', z'ⁿa + a')`; use [`GnElem::to_auto`] for that.
pub fn g_n_element<F: Field>(n: u32, z: &F, a: &F) -> Result<ElemAuto<F>> {
    if n < 2 {
        return Err(Error::Precondition("G_n needs n >= 2".into()));
    }
    let zi = z.inv().ok_or(Error::DivisionByZero)?;
    ElemAuto::new(z.clone(), F::zero(), zi, Poly1::monomial(a.clone(), n - 1))
}

/// An element `(z, a)` of `G_n(K)` with law `(z,a)·(z',a') = (zz', z'ⁿa + a')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnElem<F: Field> {
    pub n: u32,
    pub z: F,
    pub a: F,
}

impl<F: Field> GnElem<F> {
    pub fn new(n: u32, z: F, a: F) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition("G_n needs n >= 2".into()));
        }
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GnElem { n, z, a })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "G_n elements with different n");
        GnElem {
            n: self.n,
            z: self.z.mul(&o.z),
            a: o.z.pow(self.n as u64).mul(&self.a).add(&o.a),
        }
    }

    /// `(z·x, z⁻¹·y + (a/z)·x^{n-1})`. This embedding turns the group law
    /// into composition: `to_auto(g·g') = to_auto(g) ∘ to_auto(g')`.
    pub fn to_auto(&self) -> ElemAuto<F> {
        let zi = self.z.inv().unwrap();
        ElemAuto {
            z1: self.z.clone(),
            t0: F::zero(),
            z2: zi.clone(),
            f: Poly1::monomial(self.a.mul(&zi), self.n - 1),
        }
    }

    /// Inverse of [`GnElem::to_auto`] on its image.
    pub fn from_auto(n: u32, e: &ElemAuto<F>) -> Option<Self> {
        let expected = Poly1::monomial(e.f.coeff(n - 1), n - 1);
        if !e.t0.is_zero() || e.z1.mul(&e.z2) != F::one() || e.f != expected {
            return None;
        }
        Some(GnElem {
            n,
            z: e.z1.clone(),
            a: e.f.coeff(n - 1).mul(&e.z1),
        })
    }
}
