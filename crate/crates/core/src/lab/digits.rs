//! The digit argument for `n ≡ m·p^a (mod p^N − 1)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::is_prime;

/// Base-`p` digits `n₀, n₁, …`, least significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicExpansion {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PAdicExpansion {
    pub fn new(p: u64, mut n: u64) -> Self {
        let mut digits = Vec::new();
        while n > 0 {
            digits.push(n % p);
            n /= p;
        }
        PAdicExpansion { p, digits }
    }

    pub fn digit(&self, k: usize) -> u64 {
        self.digits.get(k).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    /// `Σ_{k<N} m_k p^{[a+k]}` with `[j] = j mod N`, the residue of
    /// `m·p^a` modulo `p^N − 1` written digit by digit.
    pub fn rotate(&self, a: u32, n: u32) -> u64 {
        (0..n).map(|k| self.digit(k as usize) * self.p.pow((a + k) % n)).sum()
    }
}

/// A case where the digit argument or its conclusion fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitViolation {
    pub big_n: u32,
    pub a: u32,
    pub n: u64,
    pub m: u64,
    pub reason: String,
}

/// Scan every `N ≤ n_max`, `a < N` and `n, m ≥ 1` prime to `p` with
/// `n·m < p^N`. Whenever `n ≡ m·p^a (mod p^N − 1)`, check that `n` equals
/// the rotated digit sum of `m`, and that `a = 0` and `n = m`.
///
/// ```
/// use autk2::lab::digit_lemma_scan;
///
/// assert!(digit_lemma_scan(2, 3).unwrap().is_empty());
/// ```
pub fn digit_lemma_scan(p: u64, n_max: u32) -> Result<Vec<DigitViolation>> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if p.checked_pow(n_max).is_none_or(|v| v >= 1 << 40) {
        return Err(Error::BoundExceeded(format!("p^N = {p}^{n_max} is too large to scan")));
    }
    let cases: Vec<(u32, u32)> = (1..=n_max)
        .flat_map(|big_n| (0..big_n).map(move |a| (big_n, a)))
        .collect();
    let mut found: Vec<(usize, Vec<DigitViolation>)> = cases
        .par_iter()
        .enumerate()
        .map(|(i, &(big_n, a))| (i, scan_one(p, big_n, a)))
        .collect();
    found.sort_by_key(|(i, _)| *i);
    Ok(found.into_iter().flat_map(|(_, v)| v).collect())
}

fn scan_one(p: u64, big_n: u32, a: u32) -> Vec<DigitViolation> {
    let pn = p.pow(big_n);
    let modulus = pn - 1;
    let mut out = Vec::new();
    let coprime = |v: u64| !v.is_multiple_of(p);
    for n in (1..pn).filter(|&n| coprime(n)) {
        for m in (1..pn).filter(|&m| coprime(m)) {
            if n * m >= pn {
                break;
            }
            let lhs = n % modulus;
            let rhs = (m as u128 * p.pow(a) as u128 % modulus as u128) as u64;
            if lhs != rhs {
                continue;
            }
            let rotated = PAdicExpansion::new(p, m).rotate(a, big_n);
            let mut v = |reason: String| out.push(DigitViolation { big_n, a, n, m, reason });
            if rotated != n {
                v(format!("rotated digit sum {rotated} differs from n"));
            } else if a != 0 || n != m {
                v("congruence holds with a != 0 or n != m".into());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion() {
        let e = PAdicExpansion::new(3, 47);
        assert_eq!(e.digits, vec![2, 0, 2, 1]);
        assert_eq!(e.value(), 47);
        // The digits 1, 0, 1 of 5 move to places 1, 2, 0.
        assert_eq!(PAdicExpansion::new(2, 5).rotate(1, 3), 3);
    }

    #[test]
    fn scans() {
        assert!(digit_lemma_scan(2, 3).unwrap().is_empty());
        assert!(digit_lemma_scan(3, 4).unwrap().is_empty());
        assert!(digit_lemma_scan(4, 2).is_err());
    }

    #[test]
    fn equal_pairs_are_not_reported() {
        // n = m = 1 with a = 0 satisfies the congruence for every N.
        assert!(scan_one(2, 2, 0).is_empty());
    }
}
