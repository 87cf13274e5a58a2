//! The power-sum identity `Σ_{u ∈ E} u^{p^r − 1} = ∏_{u ∈ E∖0} u` in
//! `F_p[x₁, …, x_r]`, with `E` the span of the variables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::is_prime;

use super::linalg::inv_mod;

/// Default bound on `p^r`.
pub const DEFAULT_POWER_SUM_BOUND: u64 = 27;

/// A polynomial over `F_p` in `r` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub p: u64,
    pub terms: BTreeMap<Vec<u32>, u64>,
}

impl MPoly {
    pub fn constant(p: u64, r: usize, c: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_multiple_of(p) {
            terms.insert(vec![0; r], c % p);
        }
        MPoly { p, terms }
    }

    /// `Σ λᵢ xᵢ`.
    pub fn linear(p: u64, coeffs: &[u64]) -> Self {
        let r = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c % p != 0)
            .map(|(i, &c)| {
                let mut e = vec![0; r];
                e[i] = 1;
                (e, c % p)
            })
            .collect();
        MPoly { p, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let v = (terms.get(e).copied().unwrap_or(0) + c) % self.p;
            if v == 0 {
                terms.remove(e);
            } else {
                terms.insert(e.clone(), v);
            }
        }
        MPoly { p: self.p, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = terms.entry(e).or_insert(0);
                *v = (*v + c1 * c2) % self.p;
            }
        }
        terms.retain(|_, c| *c != 0);
        MPoly { p: self.p, terms }
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|v| *v = *v * c % self.p);
        out.terms.retain(|_, v| *v != 0);
        out
    }

    pub fn pow(&self, n: u64) -> Self {
        let r = self.terms.keys().next().map_or(0, Vec::len);
        let mut acc = MPoly::constant(self.p, r, 1);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Both sides of the identity and the constant relating them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSum {
    pub p: u64,
    pub r: u32,
    /// `c` with `lhs = c·rhs`, if one exists.
    pub c: Option<u64>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
}

impl PowerSum {
    pub fn holds(&self) -> bool {
        self.c == Some(1)
    }
}

fn vectors(p: u64, r: u32) -> impl Iterator<Item = Vec<u64>> {
    let q = p.pow(r);
    (0..q).map(move |mut n| {
        (0..r)
            .map(|_| {
                let d = n % p;
                n /= p;
                d
            })
            .collect()
    })
}

/// Evaluate both sides and find `c`.
pub fn power_sum(p: u64, r: u32, bound: u64) -> Result<PowerSum> {
    if !is_prime(p) || r == 0 {
        return Err(Error::Precondition(format!(
            "need a prime p and r >= 1, got p={p} r={r}"
        )));
    }
    let q = p
        .checked_pow(r)
        .filter(|&q| q <= bound)
        .ok_or_else(|| Error::BoundExceeded(format!("p^r for p={p} r={r} exceeds the bound {bound}")))?;
    let mut lhs = MPoly::constant(p, r as usize, 0);
    let mut rhs = MPoly::constant(p, r as usize, 1);
    for v in vectors(p, r) {
        let u = MPoly::linear(p, &v);
        if u.is_zero() {
            continue;
        }
        lhs = lhs.add(&u.pow(q - 1));
        rhs = rhs.mul(&u);
    }
    let c = rhs.terms.iter().next().and_then(|(e, rc)| {
        let lc = lhs.terms.get(e).copied().unwrap_or(0);
        let c = lc * inv_mod(*rc, p) % p;
        (rhs.scale(c) == lhs).then_some(c)
    });
    Ok(PowerSum {
        p,
        r,
        c,
        lhs_terms: lhs.terms.len(),
        rhs_terms: rhs.terms.len(),
    })
}

/// Whether `Σ_{u ∈ E} u^{p^r − 1} = ∏_{u ∈ E∖0} u` with constant 1.
///
/// ```
/// use autk2::lab::{power_sum_identity, DEFAULT_POWER_SUM_BOUND};
///
/// assert!(power_sum_identity(2, 2, DEFAULT_POWER_SUM_BOUND).unwrap());
/// assert!(power_sum_identity(3, 3, DEFAULT_POWER_SUM_BOUND).unwrap());
/// assert!(power_sum_identity(5, 3, DEFAULT_POWER_SUM_BOUND).is_err());
/// ```
pub fn power_sum_identity(p: u64, r: u32, bound: u64) -> Result<bool> {
    Ok(power_sum(p, r, bound)?.holds())
}

/// `Σ_{λ ∈ F_p} λⁿ` as an element of `[0, p)`, with `0⁰ = 1`.
pub fn fp_power_sum(p: u64, n: u64) -> u64 {
    (0..p)
        .map(|l| {
            let mut acc = 1u64;
            for _ in 0..n {
                acc = acc * l % p;
            }
            acc
        })
        .sum::<u64>()
        % p
}

/// Pairs `(p, n)` with `p ≤ max_p` prime and `n ≤ max_n` where the sum
/// `Σ λⁿ` fails to be `0` exactly off the positive multiples of `p − 1`.
pub fn fp_power_sum_violations(max_p: u64, max_n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in (2..=max_p).filter(|&p| is_prime(p)) {
        for n in 0..=max_n {
            let special = n > 0 && n % (p - 1) == 0;
            let s = fp_power_sum(p, n);
            if special != (s != 0) {
                out.push((p, n));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let s = power_sum(2, 1, 27).unwrap();
        assert_eq!(s.c, Some(1));
        assert!(power_sum_identity(3, 1, 27).unwrap());
        assert!(power_sum_identity(2, 3, 27).unwrap());
        assert!(power_sum_identity(3, 2, 27).unwrap());
        assert!(power_sum_identity(5, 1, 27).unwrap());
    }

    #[test]
    fn rank_two_mod_two_by_hand() {
        // x³ + y³ + (x + y)³ = x²y + xy² over F_2.
        let x = MPoly::linear(2, &[1, 0]);
        let y = MPoly::linear(2, &[0, 1]);
        let lhs = x.pow(3).add(&y.pow(3)).add(&x.add(&y).pow(3));
        let rhs = x.mul(&y).mul(&x.add(&y));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.terms.len(), 2);
    }

    #[test]
    fn eigenvalue_sums() {
        assert!(fp_power_sum_violations(7, 30).is_empty());
        assert_eq!(fp_power_sum(3, 2), 2);
        assert_eq!(fp_power_sum(5, 0), 0);
    }
}
