use autk2::amalgam::invert;
use autk2::auto::{named_generator, tau_delta, ElemAuto, PlaneAuto};
use autk2::mat2::Mat2;
use autk2::poly1::Poly1;
use autk2::random;
use autk2::scalar::{Field, Fp, Rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational;
type F5 = Fp<5>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tame<F: Field>(r: &mut ChaCha8Rng) -> PlaneAuto<F> {
    random::tame_word::<F, _>(r, 2, 5, 3).recompose()
}

fn associative<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let (a, b, c) = (tame::<F>(&mut r), tame::<F>(&mut r), tame::<F>(&mut r));
    assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    assert_eq!(a.compose(&PlaneAuto::identity()), a);
    assert_eq!(PlaneAuto::identity().compose(&a), a);
}

fn chain_rule<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let (a, b) = (tame::<F>(&mut r), tame::<F>(&mut r));
    let lhs = a.compose(&b).jacobian();
    let rhs = &a.jacobian().substitute(b.p(), b.q()) * &b.jacobian();
    assert_eq!(lhs, rhs);
}

fn conjugation_flags<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let (phi, g) = (tame::<F>(&mut r), tame::<F>(&mut r));
    let g_inv = invert(&g).unwrap();
    let c = phi.conjugate_by(&g, &g_inv);
    assert_eq!(c.classify().in_saut, phi.classify().in_saut);
    assert_eq!(c.jacobian_unit(), phi.jacobian_unit());

    let pairs = random::aut1_pairs::<F, _>(&mut r, 2, 3, 9, 5);
    let psi = random::pairs_auto(&pairs);
    assert!(psi.classify().in_aut1);
    let l = PlaneAuto::linear(&random::invertible_mat2::<F, _>(&mut r, 5));
    let l_inv = invert(&l).unwrap();
    assert!(psi.conjugate_by(&l, &l_inv).classify().in_aut1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        associative::<Q>(seed);
        associative::<F5>(seed);
    }

    #[test]
    fn jacobian_chain_rule(seed in any::<u64>()) {
        chain_rule::<Q>(seed);
        chain_rule::<F5>(seed);
    }

    #[test]
    fn flags_under_conjugation(seed in any::<u64>()) {
        conjugation_flags::<Q>(seed);
        conjugation_flags::<F5>(seed);
    }

    #[test]
    fn elementary_structure_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = random::elementary::<Q, _>(&mut r, 6, 4);
        prop_assert_eq!(ElemAuto::from_plane(&e.to_plane()), Some(e.clone()));
        prop_assert!(e.compose(&e.inverse()).is_identity());
        let a = random::affine::<Q, _>(&mut r, 6);
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.to_plane().as_affine(), Some(a));
    }

    #[test]
    fn shears_along_a_line_add(seed in any::<u64>()) {
        let mut r = rng(seed);
        let delta = autk2::proj::ProjPoint::<Q>::sample(&mut r, 6);
        let f = random::poly_of_degree::<Q, _>(&mut r, 2, 4, 6);
        let g = random::poly_of_degree::<Q, _>(&mut r, 2, 3, 6);
        let lhs = tau_delta(&delta, &f).unwrap().compose(&tau_delta(&delta, &g).unwrap());
        prop_assert_eq!(lhs, tau_delta(&delta, &(&f + &g)).unwrap());
    }
}

#[test]
fn generator_relations() {
    let s = named_generator::<Q>("S").unwrap();
    let s_prime = named_generator::<Q>("S'").unwrap();
    let t = named_generator::<Q>("T").unwrap();
    assert_eq!(s.compose(&s_prime), s_prime.compose(&s));
    let s_inv = invert(&s).unwrap();
    assert_eq!(s.compose(&t).compose(&s_inv), t.compose(&t));
}

#[test]
fn unipotent_shears_scale_under_h() {
    let h = named_generator::<Q>("h").unwrap();
    let h_inv = invert(&h).unwrap();
    for n in 1..=4u32 {
        let u = named_generator::<Q>(&format!("u_{n}")).unwrap();
        let lhs = h_inv.compose(&u).compose(&h);
        assert_eq!(lhs, u.pow(1 << (n + 1)), "n = {n}");
        let k = Q::from_i64(1 << (n + 1));
        assert_eq!(lhs, ElemAuto::shear(Poly1::monomial(k, n)).to_plane());
    }
}

#[test]
fn linear_maps_compose_like_matrices() {
    let a = Mat2::<Q>::from_i64(1, 2, 3, 5);
    let b = Mat2::<Q>::from_i64(0, 1, 1, 1);
    assert_eq!(
        PlaneAuto::linear(&a).compose(&PlaneAuto::linear(&b)),
        PlaneAuto::linear(&a.mul(&b))
    );
}
