use autk2::mat2::{Mat2, PolyMat2};
use autk2::parse::{parse_poly2, parse_scalar};
use autk2::poly1::Poly1;
use autk2::poly2::{Mono, Poly2};
use autk2::proj::ProjPoint;
use autk2::random;
use autk2::scalar::{Field, Fp, RatFunc, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;
type F5 = Fp<5>;
type Qz = RatFunc<Rational>;

fn poly2<F: Field>(rng: &mut ChaCha8Rng, max_deg: u32, height: u32) -> Poly2<F> {
    // Rational-function coefficients get expensive quickly, so keep them sparse.
    let (max_terms, max_deg) = if F::variable_z().is_some() {
        (3, max_deg.min(2))
    } else {
        (6, max_deg)
    };
    let n = rng.gen_range(0..=max_terms);
    Poly2::from_terms((0..n).map(|_| {
        let d = rng.gen_range(0..=max_deg);
        let x = rng.gen_range(0..=d);
        (Mono::new(x, d - x), F::sample(rng, height))
    }))
}

fn poly1<F: Field>(rng: &mut ChaCha8Rng, max_deg: u32, height: u32) -> Poly1<F> {
    let d = rng.gen_range(0..=max_deg);
    Poly1::from_coeffs((0..=d).map(|_| F::sample(rng, height)).collect())
}

#[allow(clippy::eq_op)]
fn ring_laws<F: Field>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, q, r) = (
        poly2::<F>(&mut rng, 3, 5),
        poly2::<F>(&mut rng, 3, 5),
        poly2::<F>(&mut rng, 3, 5),
    );
    assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    assert_eq!(&p * &q, &q * &p);
    assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    assert!((&p - &p).is_zero());

    let (u, v) = (poly2::<F>(&mut rng, 2, 5), poly2::<F>(&mut rng, 2, 5));
    assert_eq!(
        (&p * &q).substitute(&u, &v),
        &p.substitute(&u, &v) * &q.substitute(&u, &v)
    );
    assert_eq!(
        (&p + &q).substitute(&u, &v),
        &p.substitute(&u, &v) + &q.substitute(&u, &v)
    );

    let (a, b, c) = (
        poly1::<F>(&mut rng, 4, 5),
        poly1::<F>(&mut rng, 4, 5),
        poly1::<F>(&mut rng, 4, 5),
    );
    assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    assert_eq!(&a * &b, &b * &a);
    assert_eq!((&a * &b).compose(&c), &a.compose(&c) * &b.compose(&c));
    if !b.is_zero() {
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(&(&quo * &b) + &rem, a);
        assert!(rem.degree() < b.degree());
    }
}

fn nil_endo_laws<F: Field>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = ProjPoint::<F>::sample(&mut rng, 9);
    let e = delta.nil_endo();
    let m = e.matrix();
    assert!(m.trace().is_zero());
    assert!(m.det().is_zero());
    assert!(m.mul(m).is_zero());
    assert_eq!(m.rank(), 1);
    for j in 0..2 {
        let col = m.column(j);
        if !col.iter().all(F::is_zero) {
            assert_eq!(ProjPoint::from_vec(&col).unwrap(), delta);
        }
    }
}

fn scale_invariance<F: Field>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = (F::sample(&mut rng, 9), F::sample(&mut rng, 9));
    let lambda: F = random::nonzero(&mut rng, 9);
    if a.is_zero() && b.is_zero() {
        assert!(ProjPoint::new(&a, &b).is_err());
        return;
    }
    let p = ProjPoint::new(&a, &b).unwrap();
    assert_eq!(ProjPoint::new(&a.mul(&lambda), &b.mul(&lambda)).unwrap(), p);
    assert!(p.contains(&[a, b]));
}

fn det_multiplicative<F: Field>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = || {
        PolyMat2::new(
            poly1::<F>(&mut rng, 2, 4),
            poly1::<F>(&mut rng, 2, 4),
            poly1::<F>(&mut rng, 2, 4),
            poly1::<F>(&mut rng, 2, 4),
        )
    };
    let (a, b) = (m(), m());
    assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
    let mut c = || F::sample(&mut rng, 6);
    let (x, y) = (Mat2::new(c(), c(), c(), c()), Mat2::new(c(), c(), c(), c()));
    assert_eq!(x.mul(&y).det(), x.det().mul(&y.det()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws_over_q(seed in any::<u64>()) { ring_laws::<Q>(seed) }

    #[test]
    fn ring_laws_over_f5(seed in any::<u64>()) { ring_laws::<F5>(seed) }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn ring_laws_over_qz(seed in any::<u64>()) { ring_laws::<Qz>(seed) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nil_endo_over_q(seed in any::<u64>()) { nil_endo_laws::<Q>(seed) }

    #[test]
    fn nil_endo_over_f5(seed in any::<u64>()) { nil_endo_laws::<F5>(seed) }

    #[test]
    fn projective_points_are_lines(seed in any::<u64>()) {
        scale_invariance::<Q>(seed);
        scale_invariance::<F5>(seed);
        scale_invariance::<Qz>(seed);
    }

    #[test]
    fn determinants_multiply(seed in any::<u64>()) {
        det_multiplicative::<Q>(seed);
        det_multiplicative::<F5>(seed);
    }

    #[test]
    fn rational_parse_print_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let r = Q::new(n, d);
        prop_assert_eq!(parse_scalar::<Q>(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn poly2_parse_print_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = poly2::<Q>(&mut rng, 4, 9);
        prop_assert_eq!(parse_poly2::<Q>(&p.to_string()).unwrap(), p.clone());
        let z = poly2::<Qz>(&mut rng, 2, 4);
        prop_assert_eq!(parse_poly2::<Qz>(&z.to_string()).unwrap(), z);
    }
}

#[test]
fn hundred_lines_have_square_zero_endos() {
    for seed in 0..100 {
        nil_endo_laws::<Q>(seed);
    }
}
