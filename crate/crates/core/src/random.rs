//! Random elements for property tests and the verification suites.
//!
//! Every generator takes the RNG by reference, so a seeded RNG gives a
//! reproducible corpus.

use rand::Rng;

use crate::amalgam::{AmalgamWord, Factor, FreeWord};
use crate::auto::{tau_delta, AffineAuto, ElemAuto, PlaneAuto};
use crate::mat2::Mat2;
use crate::matrix::EFactor;
use crate::poly1::Poly1;
use crate::proj::ProjPoint;
use crate::scalar::{Field, RatFunc};

pub fn nonzero<F: Field, R: Rng + ?Sized>(rng: &mut R, height: u32) -> F {
    loop {
        let c = F::sample(rng, height);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn invertible_mat2<F: Field, R: Rng + ?Sized>(rng: &mut R, height: u32) -> Mat2<F> {
    loop {
        let m = Mat2::new(
            F::sample(rng, height),
            F::sample(rng, height),
            F::sample(rng, height),
            F::sample(rng, height),
        );
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn affine<F: Field, R: Rng + ?Sized>(rng: &mut R, height: u32) -> AffineAuto<F> {
    AffineAuto::new(
        invertible_mat2(rng, height),
        [F::sample(rng, height), F::sample(rng, height)],
    )
    .expect("matrix is invertible")
}

/// A polynomial with the given degree and random lower coefficients,
/// starting from degree `low`.
pub fn poly_of_degree<F: Field, R: Rng + ?Sized>(rng: &mut R, low: u32, deg: u32, height: u32) -> Poly1<F> {
    let mut terms: Vec<(u32, F)> = (low..deg).map(|k| (k, F::sample(rng, height))).collect();
    terms.push((deg, nonzero(rng, height)));
    Poly1::from_terms(terms)
}

/// `(z1·x + t0, z2·y + f(x))` with `2 ≤ deg f ≤ max_deg`.
pub fn elementary<F: Field, R: Rng + ?Sized>(rng: &mut R, height: u32, max_deg: u32) -> ElemAuto<F> {
    let deg = rng.gen_range(2..=max_deg.max(2));
    ElemAuto::new(
        nonzero(rng, height),
        F::sample(rng, height),
        nonzero(rng, height),
        poly_of_degree(rng, 0, deg, height),
    )
    .expect("units are nonzero")
}

/// A word of `1..=max_factors` random affine and elementary letters, with
/// sides chosen independently, so the word is usually not reduced.
pub fn tame_word<F: Field, R: Rng + ?Sized>(
    rng: &mut R,
    max_factors: usize,
    height: u32,
    max_deg: u32,
) -> AmalgamWord<F> {
    let n = rng.gen_range(1..=max_factors.max(1));
    let factors = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Factor::Affine(affine(rng, height))
            } else {
                Factor::Elem(elementary(rng, height, max_deg))
            }
        })
        .collect();
    AmalgamWord::from_factors(factors)
}

/// A product of `1..=max_tau` shears `τ_δ(f)` with `2 ≤ deg f ≤ max_deg`,
/// and the product of the degrees at most `degree_cap`. Returned as the raw
/// list of pairs, which may repeat a line.
pub fn aut1_pairs<F: Field, R: Rng + ?Sized>(
    rng: &mut R,
    max_tau: usize,
    max_deg: u32,
    degree_cap: u32,
    height: u32,
) -> Vec<(ProjPoint<F>, Poly1<F>)> {
    let n = rng.gen_range(1..=max_tau.max(1));
    let mut out = Vec::with_capacity(n);
    let mut total = 1u32;
    for _ in 0..n {
        let room = (degree_cap / total).min(max_deg);
        if room < 2 {
            break;
        }
        let deg = rng.gen_range(2..=room);
        total *= deg;
        out.push((ProjPoint::sample(rng, height), poly_of_degree(rng, 2, deg, height)));
    }
    out
}

/// The automorphism `∏ τ_δ(f)` of a pair list.
pub fn pairs_auto<F: Field>(pairs: &[(ProjPoint<F>, Poly1<F>)]) -> PlaneAuto<F> {
    let mut acc = PlaneAuto::identity();
    for (d, f) in pairs.iter().rev() {
        acc = tau_delta(d, f).expect("parameter in t^2 K[t]").compose(&acc);
    }
    acc
}

/// The reduced form of a pair list, merging repeated lines.
pub fn pairs_word<F: Field>(pairs: &[(ProjPoint<F>, Poly1<F>)]) -> FreeWord<F> {
    let mut w = FreeWord::new();
    for (d, f) in pairs {
        w.push(d.clone(), f.clone());
    }
    w
}

/// `1..=max` random factors `id + c·t^k·e_δ` with `1 ≤ k ≤ max_k` and the
/// product of the `k + 1` at most `degree_cap`, which bounds the degree of
/// the matching automorphism.
pub fn efactors<F: Field, R: Rng + ?Sized>(
    rng: &mut R,
    max: usize,
    max_k: u32,
    degree_cap: u32,
    height: u32,
) -> Vec<EFactor<F>> {
    let n = rng.gen_range(1..=max.max(1));
    let mut out = Vec::with_capacity(n);
    let mut total = 1u32;
    for _ in 0..n {
        let room = (degree_cap / total).min(max_k + 1);
        if room < 2 {
            break;
        }
        let k = rng.gen_range(1..room);
        total *= k + 1;
        out.push(EFactor::new(ProjPoint::sample(rng, height), nonzero(rng, height), k).expect("c and k are valid"));
    }
    out
}

/// A nontrivial element `(z·x, z⁻¹·y + c·x)` of `SB₀(K)`.
pub fn sb0<F: Field, R: Rng + ?Sized>(rng: &mut R, height: u32) -> PlaneAuto<F> {
    loop {
        let z: F = nonzero(rng, height);
        let c = if rng.gen_bool(0.7) {
            F::sample(rng, height)
        } else {
            F::zero()
        };
        let m = Mat2::new(z.clone(), F::zero(), c, z.inv().unwrap());
        if !m.is_identity() {
            return PlaneAuto::linear(&m);
        }
    }
}

/// A nontrivial element `(x + u, y + v + w·x)` of `B((z))` with `u`, `v`,
/// `w` polynomials in `z` divisible by `z`.
pub fn congruence_borel<G: Field, R: Rng + ?Sized>(rng: &mut R, height: u32) -> PlaneAuto<RatFunc<G>> {
    let entry = |rng: &mut R| {
        if rng.gen_bool(0.4) {
            RatFunc::zero()
        } else {
            let deg = rng.gen_range(1..=2);
            RatFunc::from_poly(poly_of_degree(rng, 1, deg, height))
        }
    };
    loop {
        let (u, v, w) = (entry(rng), entry(rng), entry(rng));
        let a = AffineAuto::new(Mat2::new(RatFunc::one(), RatFunc::zero(), w, RatFunc::one()), [u, v])
            .expect("unipotent matrix");
        if !a.is_identity() {
            return a.to_plane();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn caps_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let pairs = aut1_pairs::<Rational, _>(&mut rng, 4, 6, 36, 8);
            let prod: u32 = pairs.iter().map(|(_, f)| f.degree().or_zero()).product();
            assert!(prod <= 36 && !pairs.is_empty());
            let w = tame_word::<Rational, _>(&mut rng, 6, 8, 3);
            assert!((1..=6).contains(&w.len()));
        }
    }

    #[test]
    fn borel_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let g = sb0::<Rational, _>(&mut rng, 8);
            let f = g.classify();
            assert!(f.in_b && f.in_saut && f.in_aut0 && !g.is_identity());
            let h = congruence_borel::<Rational, _>(&mut rng, 8);
            assert!(crate::amalgam::in_congruence_borel(&h, &Poly1::var()));
        }
    }
}
