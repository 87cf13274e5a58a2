use autk2::lab::random_mat_word;
use autk2::mat2::{Mat2, PolyMat2};
use autk2::matrix::{
    bilinear_bracket, efactor_product, from_matrix, gls_membership, matrix_factor_steps, matrix_free_nf, to_matrix,
    EFactor, MatFreeWord, PolyVec,
};
use autk2::poly1::Degree;
use autk2::proj::ProjPoint;
use autk2::random;
use autk2::scalar::{Field, Fp, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;
type F5 = Fp<5>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn homomorphism<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let pairs = random::aut1_pairs::<F, _>(&mut r, 4, 4, 16, 5);
    let split = r.gen_range(0..=pairs.len());
    let (a, b) = (random::pairs_auto(&pairs[..split]), random::pairs_auto(&pairs[split..]));
    let ab = a.compose(&b);
    let m = to_matrix(&ab).unwrap();
    assert_eq!(m, to_matrix(&a).unwrap().mul(&to_matrix(&b).unwrap()));
    assert!(m.check_gl1().is_ok());
    assert_eq!(from_matrix(&m).unwrap(), ab);
}

fn bijection<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let fs = random::efactors::<F, _>(&mut r, 5, 3, 16, 5);
    let g = efactor_product(&fs);
    assert_eq!(to_matrix(&from_matrix(&g).unwrap()).unwrap(), g);
}

fn factor_loop<F: Field>(seed: u64) {
    let mut r = rng(seed);
    let fs = random::efactors::<F, _>(&mut r, 6, 3, 64, 5);
    let g = efactor_product(&fs);
    let steps = matrix_factor_steps(&g).unwrap();
    assert!(steps.len() as u32 <= g.degree().or_zero());
    let mut h = g.clone();
    for s in &steps {
        assert_eq!(Degree::Finite(s.degree_before), h.degree());
        assert!(s.degree_after < Degree::Finite(s.degree_before));
        h = s.factor.inverse().matrix().mul(&h);
        assert_eq!(h.degree(), s.degree_after);
        assert!(h.det().is_one());
        assert!(h.eval(&F::zero()).is_identity());
    }
    assert!(h.is_identity());

    // The free normal form is the merged input word.
    let mut expect = MatFreeWord::new();
    for f in &fs {
        expect.push(f.delta.clone(), f.poly());
    }
    let nf = matrix_free_nf(&g).unwrap();
    assert!(nf.check().is_ok());
    assert_eq!(nf, expect);
    assert_eq!(nf.product(), g);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psi_is_multiplicative_over_q(seed in any::<u64>()) { homomorphism::<Q>(seed) }

    #[test]
    fn psi_is_multiplicative_over_f5(seed in any::<u64>()) { homomorphism::<F5>(seed) }

    #[test]
    fn psi_is_onto_over_q(seed in any::<u64>()) { bijection::<Q>(seed) }

    #[test]
    fn psi_is_onto_over_f5(seed in any::<u64>()) { bijection::<F5>(seed) }

    #[test]
    fn factor_loop_over_q(seed in any::<u64>()) { factor_loop::<Q>(seed) }

    #[test]
    fn factor_loop_over_f5(seed in any::<u64>()) { factor_loop::<F5>(seed) }

    #[test]
    fn bracket_is_symmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut m = || Mat2::<Q>::new(Q::sample(&mut r, 9), Q::sample(&mut r, 9), Q::sample(&mut r, 9), Q::sample(&mut r, 9));
        let (a, b) = (m(), m());
        prop_assert_eq!(bilinear_bracket(&a, &b), bilinear_bracket(&b, &a));
        let d = ProjPoint::<Q>::sample(&mut r, 9);
        let e = d.nil_endo().matrix().clone();
        prop_assert!(bilinear_bracket(&e, &e.scale(&Q::from_i64(3))).is_zero());
    }

    #[test]
    fn shears_pull_vectors_onto_their_line(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = EFactor::<Q>::new(ProjPoint::sample(&mut r, 8), random::nonzero(&mut r, 8), r.gen_range(1..=3)).unwrap();
        let v = PolyVec::<Q>::sample(&mut r, 3, 8);
        prop_assume!(v.hc_line() != f.delta);
        let w = v.apply(&f.matrix()).unwrap();
        prop_assert!(f.delta.contains(&w.hc()));
        prop_assert!(w.degree() > v.degree());
    }

    #[test]
    fn reduced_words_move_vectors(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_mat_word(&mut r, 5);
        let (first, _) = w.pairs.first().unwrap();
        let (last, _) = w.pairs.last().unwrap();
        let v = PolyVec::<Q>::sample(&mut r, 2, 8);
        prop_assume!(v.hc_line() != *first && v.hc_line() != *last);
        let out = v.apply(&w.product()).unwrap();
        prop_assert_eq!(&out.hc_line(), first);
        prop_assert!(out != v);
    }

    #[test]
    fn gl_s_uses_the_constant_term(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = efactor_product(&random::efactors::<Q, _>(&mut r, 4, 3, 64, 5));
        let d = Mat2::diag(Q::from_i64(2), Q::new(1, 2));
        let scaled = PolyMat2::constant(&d).mul(&g);
        prop_assert!(gls_membership(&g, |m| m.is_identity()).unwrap());
        prop_assert!(gls_membership(&scaled, |m| m.is_upper_triangular()).unwrap());
        prop_assert!(!gls_membership(&scaled, |m| m.is_identity()).unwrap());
    }
}
