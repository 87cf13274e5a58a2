//! The verification suites behind `autk2 lab`, each returning a report.

use rand::Rng;

use crate::error::Result;
use crate::matrix::{pingpong_check, EFactor, MatFreeWord, PolyVec};
use crate::poly1::Poly1;
use crate::proj::ProjPoint;
use crate::random;
use crate::report::{Record, Report};
use crate::scalar::Rational;

use super::digits::digit_lemma_scan;
use super::pgroup::{central_series, central_series_brute_force, PGroup, BRUTE_FORCE_LIMIT};
use super::powersum::{power_sum, DEFAULT_POWER_SUM_BOUND};
use super::quasi::{log_scaling_check, log_scaling_identity, MatN};

/// Nilpotency index against `p·r`, the enumeration oracle where the group
/// is small enough, and the power-sum identity where `p^r` is within its
/// bound.
pub fn pgroup_suite(cases: &[(u64, u32)], bound: u128) -> Result<Report> {
    let mut rep = Report::new();
    for &(p, r) in cases {
        let g = PGroup::new(p, r)?;
        let params = format!("p={p} r={r}");
        let s = central_series(&g, bound)?;
        rep.push(Record::new(
            "pgroup",
            &params,
            (p * r as u64).to_string(),
            format!("index={}", s.index()),
            s.index() as u64 == p * r as u64,
        ));
        if g.order() <= BRUTE_FORCE_LIMIT.min(64) {
            let b = central_series_brute_force(&g)?;
            rep.push(Record::eq(
                "pgroup-oracle",
                &params,
                format!("{:?}", b.orders),
                format!("{:?}", s.orders),
            ));
        }
        if p.checked_pow(r).is_some_and(|q| q <= DEFAULT_POWER_SUM_BOUND) {
            let ps = power_sum(p, r, DEFAULT_POWER_SUM_BOUND)?;
            let got = ps.c.map_or("no constant".to_string(), |c| format!("c={c}"));
            rep.push(Record::new("power-sum", &params, "c=1", got, ps.holds()));
        }
    }
    Ok(rep)
}

/// The digit scan as a single record.
pub fn digits_suite(p: u64, n_max: u32) -> Result<Report> {
    let v = digit_lemma_scan(p, n_max)?;
    let mut rep = Report::new();
    rep.push(Record::new(
        "digits",
        format!("p={p} N={n_max}"),
        "0",
        format!("{} counterexamples", v.len()),
        v.is_empty(),
    ));
    for c in v.iter().take(20) {
        rep.push(Record::new(
            "digits-counterexample",
            format!("N={} a={} n={} m={}", c.big_n, c.a, c.n, c.m),
            "none",
            &c.reason,
            false,
        ));
    }
    Ok(rep)
}

fn mat2(rows: [[i64; 2]; 2]) -> MatN<Rational> {
    MatN::from_i64(&[&rows[0], &rows[1]]).expect("square")
}

/// The base instance `u = [[1,1],[0,1]]`, `h = diag(2,1)`, `k = 1`, then
/// `random` instances `h = diag(2^k, 1)` conjugated by a random invertible
/// matrix, then a mismatched `k` as a negative control.
pub fn logscale_suite<R: Rng + ?Sized>(rng: &mut R, random: usize) -> Result<Report> {
    let mut rep = Report::new();
    let u = mat2([[1, 1], [0, 1]]);
    let h = mat2([[2, 0], [0, 1]]);
    rep.push(Record::eq(
        "logscale",
        "u=[1,1;0,1] h=diag(2,1) k=1",
        true,
        log_scaling_check(&h, &u, 1)?,
    ));
    for i in 0..random {
        let k = rng.gen_range(1..=3u32);
        let g = MatN::from_mat2(&random::invertible_mat2::<Rational, _>(rng, 8));
        let gi = g.inv().expect("invertible");
        let hk = mat2([[1 << k, 0], [0, 1]]);
        let (u2, h2) = (g.mul(&u).mul(&gi), g.mul(&hk).mul(&gi));
        rep.push(Record::eq(
            "logscale",
            format!("instance={i} k={k} u=[{u2}] h=[{h2}]"),
            true,
            log_scaling_check(&h2, &u2, k)?,
        ));
    }
    rep.push(Record::eq(
        "logscale-control",
        "u=[1,1;0,1] h=diag(2,1) k=2",
        false,
        log_scaling_identity(&h, &u, 2)?,
    ));
    Ok(rep)
}

fn random_h<R: Rng + ?Sized>(rng: &mut R, low: u32, max_deg: u32) -> Poly1<Rational> {
    let deg = rng.gen_range(low.max(1)..=max_deg);
    random::poly_of_degree(rng, 1, deg, 8)
}

/// A random reduced word of `2..=max_len` pairs with consecutive lines
/// distinct.
pub fn random_mat_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> MatFreeWord<Rational> {
    let len = rng.gen_range(2..=max_len.max(2));
    let mut w = MatFreeWord::new();
    while w.len() < len {
        let d = ProjPoint::sample(rng, 8);
        if w.pairs.last().is_some_and(|(l, _)| *l == d) {
            continue;
        }
        let h = random_h(rng, 1, 3);
        w.push(d, h);
    }
    w
}

/// `pairs` random factor and sample pairs on distinct lines, and `words`
/// random reduced words applied to a vector off their end lines.
pub fn pingpong_suite<R: Rng + ?Sized>(rng: &mut R, pairs: usize, words: usize) -> Result<Report> {
    let mut rep = Report::new();
    let mut done = 0;
    while done < pairs {
        let f = EFactor::new(ProjPoint::sample(rng, 8), random::nonzero(rng, 8), rng.gen_range(1..=3))?;
        let v = PolyVec::<Rational>::sample(rng, 3, 8);
        if v.hc_line() == f.delta {
            continue;
        }
        let mut r = pingpong_check(&[f], &[v], &[])?;
        for rec in &mut r.records {
            rec.parameters = format!("pair={done}");
        }
        rep.extend(r);
        done += 1;
    }
    let pool: Vec<PolyVec<Rational>> = (0..16).map(|_| PolyVec::sample(rng, 2, 8)).collect();
    let ws: Vec<MatFreeWord<Rational>> = (0..words).map(|_| random_mat_word(rng, 5)).collect();
    rep.extend(pingpong_check(&[], &pool, &ws)?);
    Ok(rep)
}
