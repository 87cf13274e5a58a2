//! Quasi-unipotent matrices, their quasi-order, and unipotent logarithms.

use std::fmt;

use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::poly1::Poly1;
use crate::scalar::{Field, Rational};

/// A square matrix, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatN<F: Field> {
    pub rows: Vec<Vec<F>>,
}

impl<F: Field> MatN<F> {
    pub fn new(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix must be square and nonempty".into()));
        }
        Ok(MatN { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_mat2(m: &Mat2<F>) -> Self {
        MatN {
            rows: m.m.iter().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        MatN {
            rows: (0..n)
                .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
                .collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        MatN {
            rows: vec![vec![F::zero(); n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(F::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, F::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, F::sub)
    }

    fn zip(&self, o: &Self, op: impl Fn(&F, &F) -> F) -> Self {
        MatN {
            rows: self
                .rows
                .iter()
                .zip(&o.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| op(x, y)).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        MatN {
            rows: self.rows.iter().map(|r| r.iter().map(|v| v.mul(c)).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.size();
        MatN {
            rows: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).fold(F::zero(), |acc, k| acc.add(&self.rows[i][k].mul(&o.rows[k][j]))))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.size());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> F {
        (0..self.size()).fold(F::zero(), |acc, i| acc.add(&self.rows[i][i]))
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inv(&self) -> Option<Self> {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut b = Self::identity(n).rows;
        for col in 0..n {
            let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
            a.swap(col, piv);
            b.swap(col, piv);
            let inv = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&inv);
                b[col][j] = b[col][j].mul(&inv);
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let c = a[i][col].clone();
                    for j in 0..n {
                        a[i][j] = a[i][j].sub(&c.mul(&a[col][j]));
                        b[i][j] = b[i][j].sub(&c.mul(&b[col][j]));
                    }
                }
            }
        }
        Some(MatN { rows: b })
    }

    /// Characteristic polynomial `det(t·id − A)` by Faddeev–LeVerrier.
    /// Needs characteristic zero or larger than the size.
    pub fn char_poly(&self) -> Result<Poly1<F>> {
        let n = self.size();
        let ch = F::characteristic();
        if ch != 0 && ch <= n as u64 {
            return Err(Error::Unsupported(format!(
                "characteristic polynomial of size {n} in characteristic {ch}"
            )));
        }
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = self.mul(&m).add(&Self::identity(n).scale(&coeffs[n + 1 - k]));
            let c = self.mul(&m).trace().neg().div(&F::from_i64(k as i64)).unwrap();
            coeffs[n - k] = c;
        }
        Ok(Poly1::from_coeffs(coeffs))
    }

    /// Whether `(A − id)^n = 0`.
    pub fn is_unipotent(&self) -> bool {
        self.sub(&Self::identity(self.size())).pow(self.size() as u64).is_zero()
    }

    pub fn sample_unipotent<R: Rng + ?Sized>(rng: &mut R, n: usize, height: u32) -> Self {
        let upper = |rng: &mut R| {
            let mut m = Self::identity(n);
            for i in 0..n {
                for j in i + 1..n {
                    m.rows[i][j] = F::sample(rng, height);
                }
            }
            m
        };
        let lower = |rng: &mut R| {
            let mut m = Self::identity(n);
            for i in 0..n {
                for j in 0..i {
                    m.rows[i][j] = F::sample(rng, height);
                }
            }
            m
        };
        let g = upper(rng).mul(&lower(rng));
        let gi = g.inv().expect("product of unitriangular matrices is invertible");
        g.mul(&upper(rng)).mul(&gi)
    }
}

impl<F: Field> fmt::Display for MatN<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MatN<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatN[{self}]")
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let (mut n, mut out, mut d) = (n, n, 2);
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// `Φ_d` over ℚ, from `t^d − 1 = ∏_{e | d} Φ_e`.
pub fn cyclotomic(d: u64) -> Poly1<Rational> {
    let mut p = &Poly1::monomial(Rational::one(), d as u32) - &Poly1::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p.div_rem(&cyclotomic(e)).0;
    }
    p
}

/// All `d` with `φ(d) ≤ n`, in increasing order.
pub fn cyclotomic_orders(n: usize) -> Vec<u64> {
    // φ(d) ≥ √(d/2), so d ≤ 2n² covers every case.
    let limit = (2 * n * n).max(2) as u64;
    (1..=limit).filter(|&d| euler_phi(d) <= n as u64).collect()
}

/// The least `n ≥ 1` with `uⁿ` unipotent, or `None` if some eigenvalue is
/// not a root of unity.
///
/// The characteristic polynomial is divided by every `Φ_d` with
/// `φ(d) ≤ size` for as long as it goes; the eigenvalues are roots of unity
/// exactly when nothing is left, and then `n` is the lcm of the `d` used.
pub fn quasi_unipotent_order(u: &MatN<Rational>) -> Result<Option<u64>> {
    if u.inv().is_none() {
        return Err(Error::Precondition("matrix is singular".into()));
    }
    let mut chi = u.char_poly()?;
    let mut order = 1u64;
    for d in cyclotomic_orders(u.size()) {
        let phi = cyclotomic(d);
        loop {
            let (q, r) = chi.div_rem(&phi);
            if !r.is_zero() {
                break;
            }
            chi = q;
            order = order.lcm(&d);
        }
    }
    Ok(chi.is_one().then_some(order))
}

fn require_char_zero<F: Field>() -> Result<()> {
    if F::characteristic() != 0 {
        return Err(Error::Unsupported(
            "logarithms and exponentials need characteristic zero".into(),
        ));
    }
    Ok(())
}

/// `log u = −Σ_{m≥1} (1 − u)^m / m`, a finite sum for unipotent `u`.
pub fn unipotent_log<F: Field>(u: &MatN<F>) -> Result<MatN<F>> {
    require_char_zero::<F>()?;
    if !u.is_unipotent() {
        return Err(Error::Precondition("matrix is not unipotent".into()));
    }
    let n = u.size();
    let x = MatN::identity(n).sub(u);
    let mut power = x.clone();
    let mut acc = MatN::zero(n);
    for m in 1..=n {
        acc = acc.sub(&power.scale(&F::from_i64(m as i64).inv().unwrap()));
        power = power.mul(&x);
    }
    Ok(acc)
}

/// `exp x = Σ x^k / k!` for nilpotent `x`.
pub fn nilpotent_exp<F: Field>(x: &MatN<F>) -> Result<MatN<F>> {
    require_char_zero::<F>()?;
    let n = x.size();
    if !x.pow(n as u64).is_zero() {
        return Err(Error::Precondition("matrix is not nilpotent".into()));
    }
    let mut term = MatN::identity(n);
    let mut acc = term.clone();
    for k in 1..n {
        term = term.mul(x).scale(&F::from_i64(k as i64).inv().unwrap());
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `h·e·h⁻¹ = 2^k·e` for `e = log uⁿ`, `n` the quasi-order of `u`, without
/// checking that `h·u·h⁻¹ = u^{2^k}`.
pub fn log_scaling_identity(h: &MatN<Rational>, u: &MatN<Rational>, k: u32) -> Result<bool> {
    let n = quasi_unipotent_order(u)?.ok_or_else(|| Error::Precondition("matrix is not quasi-unipotent".into()))?;
    let e = unipotent_log(&u.pow(n))?;
    let hi = h.inv().ok_or_else(|| Error::Precondition("h is singular".into()))?;
    let two_k = Rational::from_i64(2).pow(k as u64);
    Ok(h.mul(&e).mul(&hi) == e.scale(&two_k))
}

/// Check `h·e·h⁻¹ = 2^k·e` for `e = log uⁿ`, given `h·u·h⁻¹ = u^{2^k}`.
///
/// A failed hypothesis is an error, distinct from a `false` verdict.
///
/// ```
/// use autk2::lab::{log_scaling_check, MatN};
/// use autk2::scalar::Rational;
///
/// let u = MatN::<Rational>::from_i64(&[&[1, 1], &[0, 1]]).unwrap();
/// let h = MatN::from_i64(&[&[2, 0], &[0, 1]]).unwrap();
/// assert!(log_scaling_check(&h, &u, 1).unwrap());
/// assert!(log_scaling_check(&h, &u, 2).is_err());
/// ```
pub fn log_scaling_check(h: &MatN<Rational>, u: &MatN<Rational>, k: u32) -> Result<bool> {
    let hi = h.inv().ok_or_else(|| Error::Precondition("h is singular".into()))?;
    if h.mul(u).mul(&hi) != u.pow(1u64 << k) {
        return Err(Error::Precondition(format!("h u h^-1 != u^(2^{k})")));
    }
    log_scaling_identity(h, u, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    type Q = Rational;

    fn m(rows: &[&[i64]]) -> MatN<Q> {
        MatN::from_i64(rows).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(quasi_unipotent_order(&m(&[&[1, 1], &[0, 1]])).unwrap(), Some(1));
        assert_eq!(quasi_unipotent_order(&m(&[&[-1, 0], &[0, -1]])).unwrap(), Some(2));
        assert_eq!(quasi_unipotent_order(&m(&[&[0, -1], &[1, 0]])).unwrap(), Some(4));
        assert_eq!(quasi_unipotent_order(&m(&[&[0, -1], &[1, 1]])).unwrap(), Some(6));
        assert_eq!(quasi_unipotent_order(&m(&[&[2, 0], &[0, 1]])).unwrap(), None);
        assert_eq!(quasi_unipotent_order(&m(&[&[1, 1], &[1, 0]])).unwrap(), None);
        assert!(quasi_unipotent_order(&m(&[&[1, 1], &[1, 1]])).is_err());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic_orders(2), vec![1, 2, 3, 4, 6]);
        assert_eq!(cyclotomic(6).to_string(), "1 - t + t^2");
        assert_eq!(cyclotomic(12).to_string(), "1 - t^2 + t^4");
        assert_eq!(euler_phi(36), 12);
    }

    #[test]
    fn char_poly_matches_trace_and_det() {
        let a = m(&[&[2, 1, 0], &[0, 3, 4], &[5, 0, 1]]);
        let chi = a.char_poly().unwrap();
        assert_eq!(chi.coeff(2), a.trace().neg());
        // det = 2·3·1 + 1·4·5 = 26, so the constant term is −26.
        assert_eq!(chi.coeff(0), Q::from_i64(-26));
    }

    #[test]
    fn log_examples() {
        assert!(unipotent_log(&MatN::<Q>::identity(3)).unwrap().is_zero());
        assert_eq!(unipotent_log(&m(&[&[1, 1], &[0, 1]])).unwrap(), m(&[&[0, 1], &[0, 0]]));
        let u = m(&[&[1, 2, 3], &[0, 1, 4], &[0, 0, 1]]);
        let l = unipotent_log(&u).unwrap();
        assert_eq!(nilpotent_exp(&l).unwrap(), u);
        assert_eq!(unipotent_log(&u.pow(2)).unwrap(), l.scale(&Q::from_i64(2)));
        let uf = MatN::<Fp<5>>::from_i64(&[&[1, 1], &[0, 1]]).unwrap();
        assert!(matches!(unipotent_log(&uf), Err(Error::Unsupported(_))));
        assert!(unipotent_log(&m(&[&[2, 0], &[0, 1]])).is_err());
    }

    #[test]
    fn scaling() {
        let u = m(&[&[1, 1], &[0, 1]]);
        let h = m(&[&[2, 0], &[0, 1]]);
        assert!(log_scaling_check(&h, &u, 1).unwrap());
        assert!(!log_scaling_identity(&h, &u, 2).unwrap());
        let minus = m(&[&[-1, 0], &[0, -1]]);
        assert!(log_scaling_check(&MatN::identity(2), &minus, 0).unwrap());
    }
}
