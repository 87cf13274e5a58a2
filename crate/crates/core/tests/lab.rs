use autk2::lab::{
    central_series, central_series_brute_force, cyclic_module_is_free, default_bound, fp_power_sum_violations,
    nilpotent_exp, power_sum_identity, quasi_unipotent_order, unipotent_log, MatN, PAdicExpansion, PGroup, PGroupElem,
};
use autk2::scalar::{Field, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = Rational;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_int_mat(r: &mut ChaCha8Rng, n: usize, h: i64) -> MatN<Q> {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| Q::from_i64(r.gen_range(-h..=h))).collect())
        .collect();
    MatN::new(rows).unwrap()
}

fn invertible(r: &mut ChaCha8Rng, n: usize) -> (MatN<Q>, MatN<Q>) {
    loop {
        let g = random_int_mat(r, n, 3);
        if let Some(gi) = g.inv() {
            return (g, gi);
        }
    }
}

/// Blocks of known finite order, with that order.
fn finite_order_blocks() -> Vec<(MatN<Q>, u64)> {
    vec![
        (MatN::from_i64(&[&[1, 0], &[0, 1]]).unwrap(), 1),
        (MatN::from_i64(&[&[-1, 0], &[0, -1]]).unwrap(), 2),
        (MatN::from_i64(&[&[0, -1], &[1, -1]]).unwrap(), 3),
        (MatN::from_i64(&[&[0, -1], &[1, 0]]).unwrap(), 4),
        (MatN::from_i64(&[&[1, -1], &[1, 0]]).unwrap(), 6),
        (MatN::from_i64(&[&[-1, 1], &[0, -1]]).unwrap(), 2),
    ]
}

fn group_elem(g: &PGroup, r: &mut ChaCha8Rng) -> PGroupElem {
    let p = g.p;
    PGroupElem {
        u: (0..g.r).map(|_| r.gen_range(0..p)).collect(),
        f: (0..g.e_order()).map(|_| r.gen_range(0..p)).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quasi_unipotent_order_is_minimal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=3);
        let u = random_int_mat(&mut r, n, 2);
        prop_assume!(u.inv().is_some());
        match quasi_unipotent_order(&u).unwrap() {
            Some(k) => {
                prop_assert!(u.pow(k).is_unipotent());
                for j in 1..k {
                    prop_assert!(!u.pow(j).is_unipotent(), "power {} already unipotent", j);
                }
            }
            None => {
                for j in 1..=12 {
                    prop_assert!(!u.pow(j).is_unipotent());
                }
            }
        }
    }

    #[test]
    fn conjugated_blocks_keep_their_order(seed in any::<u64>(), which in 0usize..6) {
        let mut r = rng(seed);
        let (block, order) = finite_order_blocks().swap_remove(which);
        let (g, gi) = invertible(&mut r, 2);
        let u = g.mul(&block).mul(&gi);
        prop_assert_eq!(quasi_unipotent_order(&u).unwrap(), Some(order));
    }

    #[test]
    fn log_and_exp_are_inverse(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=4);
        let u = MatN::<Q>::sample_unipotent(&mut r, n, 6);
        let l = unipotent_log(&u).unwrap();
        prop_assert_eq!(nilpotent_exp(&l).unwrap(), u.clone());
        prop_assert_eq!(unipotent_log(&u.pow(2)).unwrap(), l.scale(&Q::from_i64(2)));
    }

    #[test]
    fn pgroup_law(seed in any::<u64>(), which in 0usize..4) {
        let mut r = rng(seed);
        let (p, rank) = [(2, 1), (2, 2), (3, 1), (3, 2)][which];
        let g = PGroup::new(p, rank).unwrap();
        let (a, b, c) = (group_elem(&g, &mut r), group_elem(&g, &mut r), group_elem(&g, &mut r));
        prop_assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        prop_assert_eq!(g.mul(&a, &g.inv(&a)), g.identity());
        prop_assert_eq!(g.mul(&g.identity(), &a), a.clone());
        let ba = g.mul(&b, &a);
        prop_assert_eq!(g.mul(&g.commutator(&a, &b), &ba), g.mul(&a, &b));
    }

    #[test]
    fn freeness_is_decided_by_augmentation(seed in any::<u64>(), which in 0usize..3) {
        let mut r = rng(seed);
        let (p, rank) = [(2, 1), (2, 2), (3, 1)][which];
        let q = (p as usize).pow(rank);
        let f: Vec<u64> = (0..q).map(|_| r.gen_range(0..p)).collect();
        let res = cyclic_module_is_free(p, rank, &f, default_bound()).unwrap();
        prop_assert!(res.consistent());
        prop_assert_eq!(res.criterion, res.free);
        prop_assert_eq!(res.free, f.iter().sum::<u64>() % p != 0);
    }

    #[test]
    fn padic_digits_reconstruct(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), n in 0u64..1_000_000) {
        let e = PAdicExpansion::new(p, n);
        prop_assert!(e.digits.iter().all(|&d| d < p));
        prop_assert_eq!(e.value(), n);
    }
}

#[test]
fn structural_series_matches_enumeration() {
    for (p, r) in [(2, 1), (2, 2), (3, 1)] {
        let g = PGroup::new(p, r).unwrap();
        assert_eq!(
            central_series(&g, default_bound()).unwrap(),
            central_series_brute_force(&g).unwrap(),
            "(p, r) = ({p}, {r})"
        );
    }
}

#[test]
fn power_sums_vanish_off_multiples_of_p_minus_one() {
    assert!(fp_power_sum_violations(7, 30).is_empty());
}

#[test]
fn power_sum_identity_for_small_groups() {
    for (p, r) in [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 1),
    ] {
        assert!(power_sum_identity(p, r, 27).unwrap(), "(p, r) = ({p}, {r})");
    }
}
