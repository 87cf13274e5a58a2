//! The groups `G(r) = E ⋉ F_p[E]` for `E = F_p^r` acting by translation.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::is_prime;

use super::linalg::{kernel, rank, solve, Row};

/// Environment variable overriding [`default_bound`].
pub const WORK_BOUND_ENV: &str = "AUTK2_WORK_BOUND";

/// Largest group order accepted by default; admits `(p, r)` in
/// `{(2,1), (2,2), (2,3), (3,1), (3,2)}`.
pub const DEFAULT_WORK_BOUND: u128 = 200_000;

/// Largest order the enumeration oracle accepts.
pub const BRUTE_FORCE_LIMIT: u128 = 4096;

/// [`DEFAULT_WORK_BOUND`], or the value of [`WORK_BOUND_ENV`] if set.
pub fn default_bound() -> u128 {
    std::env::var(WORK_BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_WORK_BOUND)
}

/// `G(r)` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PGroup {
    pub p: u64,
    pub r: u32,
}

/// An element `(u, f)` with `u ∈ E` and `f = Σ f(w)·e^w ∈ F_p[E]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PGroupElem {
    pub u: Vec<u64>,
    pub f: Vec<u64>,
}

impl PGroup {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::Precondition("rank must be at least 1".into()));
        }
        Ok(PGroup { p, r })
    }

    /// `|E| = p^r`.
    pub fn e_order(&self) -> usize {
        (self.p as usize).pow(self.r)
    }

    /// `|G(r)| = p^r · p^{p^r}`, saturating.
    pub fn order(&self) -> u128 {
        let q = self.e_order() as u32;
        (self.p as u128)
            .checked_pow(q)
            .and_then(|m| m.checked_mul(self.e_order() as u128))
            .unwrap_or(u128::MAX)
    }

    fn check_bound(&self, bound: u128) -> Result<()> {
        if self.order() > bound {
            return Err(Error::BoundExceeded(format!(
                "|G| = {} for p={} r={} exceeds the work bound {bound}",
                if self.order() == u128::MAX {
                    "overflow".to_string()
                } else {
                    self.order().to_string()
                },
                self.p,
                self.r
            )));
        }
        Ok(())
    }

    /// Base-`p` digits of an index into `E`.
    pub fn digits(&self, mut idx: usize) -> Vec<u64> {
        (0..self.r)
            .map(|_| {
                let d = (idx % self.p as usize) as u64;
                idx /= self.p as usize;
                d
            })
            .collect()
    }

    pub fn index(&self, u: &[u64]) -> usize {
        u.iter().rev().fold(0, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn add_idx(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        self.index(&x.iter().zip(&y).map(|(s, t)| (s + t) % self.p).collect::<Vec<_>>())
    }

    /// `T_u f`, moving `e^w` to `e^{w+u}`.
    pub fn translate(&self, f: &[u64], u: &[u64]) -> Vec<u64> {
        let ui = self.index(u);
        let mut out = vec![0; f.len()];
        for (w, &c) in f.iter().enumerate() {
            out[self.add_idx(w, ui)] = c;
        }
        out
    }

    pub fn identity(&self) -> PGroupElem {
        PGroupElem {
            u: vec![0; self.r as usize],
            f: vec![0; self.e_order()],
        }
    }

    /// `(u, f)·(u', f') = (u + u', T_{u'} f + f')`.
    pub fn mul(&self, a: &PGroupElem, b: &PGroupElem) -> PGroupElem {
        let p = self.p;
        let u = a.u.iter().zip(&b.u).map(|(s, t)| (s + t) % p).collect();
        let f = self
            .translate(&a.f, &b.u)
            .iter()
            .zip(&b.f)
            .map(|(s, t)| (s + t) % p)
            .collect();
        PGroupElem { u, f }
    }

    pub fn inv(&self, a: &PGroupElem) -> PGroupElem {
        let p = self.p;
        let u: Vec<u64> = a.u.iter().map(|d| (p - d) % p).collect();
        let f = self.translate(&a.f, &u).iter().map(|c| (p - c) % p).collect();
        PGroupElem { u, f }
    }

    /// `[a, b] = a·b·a⁻¹·b⁻¹`.
    pub fn commutator(&self, a: &PGroupElem, b: &PGroupElem) -> PGroupElem {
        let ab = self.mul(a, b);
        self.mul(&self.mul(&ab, &self.inv(a)), &self.inv(b))
    }

    /// `(e_j, 0)` for the basis of `E`, and `(0, e^0)`.
    pub fn generators(&self) -> Vec<PGroupElem> {
        let mut gens: Vec<PGroupElem> = (0..self.r as usize)
            .map(|j| {
                let mut g = self.identity();
                g.u[j] = 1;
                g
            })
            .collect();
        let mut g = self.identity();
        g.f[0] = 1;
        gens.push(g);
        gens
    }

    fn elem(&self, u_idx: usize, f: Vec<u64>) -> PGroupElem {
        PGroupElem {
            u: self.digits(u_idx),
            f,
        }
    }
}

/// The direction space of an affine subspace of `F_p[E]`.
#[derive(Clone, Debug)]
struct Fiber {
    dirs: Vec<Row>,
}

/// Orders of the terms `Z_0 = 1 ⊂ Z_1 ⊂ … ⊂ Z_c = G` of the upper central
/// series. The nilpotency index is `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralSeries {
    pub orders: Vec<u128>,
}

impl CentralSeries {
    pub fn index(&self) -> usize {
        self.orders.len() - 1
    }
}

fn annihilator(dirs: &[Row], n: usize, p: u64) -> Vec<Row> {
    if dirs.is_empty() {
        return (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
    }
    kernel(dirs, n, p)
}

/// Upper central series of `G(r)` by linear algebra.
///
/// Every commutator lies in `F_p[E]`, so `g` is central modulo `Z_{i-1}`
/// exactly when its commutators with the generators land in the subspace
/// `W = Z_{i-1} ∩ F_p[E]`. For fixed `u` that is an affine condition on
/// `f`, so each fibre of `Z_i` over `E` is an affine subspace, found by
/// solving a linear system. Only `W` is carried from one step to the next.
pub fn central_series(g: &PGroup, bound: u128) -> Result<CentralSeries> {
    g.check_bound(bound)?;
    let p = g.p;
    let q = g.e_order();
    let gens = g.generators();
    let full = g.order();
    let mut w_dirs: Vec<Row> = Vec::new();
    let mut orders = vec![1u128];
    loop {
        let ann = annihilator(&w_dirs, q, p);
        let mut fibers: Vec<Option<Fiber>> = Vec::with_capacity(q);
        for ui in 0..q {
            let mut lhs: Vec<Row> = Vec::new();
            let mut rhs: Vec<u64> = Vec::new();
            for x in &gens {
                let b = g.commutator(&g.elem(ui, vec![0; q]), x).f;
                let cols: Vec<Row> = (0..q)
                    .map(|j| {
                        let mut f = vec![0; q];
                        f[j] = 1;
                        let c = g.commutator(&g.elem(ui, f), x).f;
                        c.iter().zip(&b).map(|(s, t)| (s + p - t) % p).collect()
                    })
                    .collect();
                for a in &ann {
                    lhs.push(
                        (0..q)
                            .map(|j| a.iter().zip(&cols[j]).map(|(s, t)| s * t).sum::<u64>() % p)
                            .collect(),
                    );
                    rhs.push((p - a.iter().zip(&b).map(|(s, t)| s * t).sum::<u64>() % p) % p);
                }
            }
            fibers.push(if lhs.is_empty() {
                Some(Fiber {
                    dirs: annihilator(&[], q, p),
                })
            } else {
                solve(&lhs, &rhs, q, p).map(|(_, dirs)| Fiber { dirs })
            });
        }
        let order: u128 = fibers
            .iter()
            .flatten()
            .map(|fb| (p as u128).pow(fb.dirs.len() as u32))
            .sum();
        if order == *orders.last().unwrap() {
            return Err(Error::Precondition(
                "upper central series stalled before reaching G".into(),
            ));
        }
        orders.push(order);
        if order == full {
            return Ok(CentralSeries { orders });
        }
        w_dirs = fibers[0].as_ref().expect("identity fibre is nonempty").dirs.clone();
    }
}

/// Nilpotency index of `G(r)`, the length of its upper central series.
pub fn pgroup_nilpotency_index(p: u64, r: u32, bound: u128) -> Result<usize> {
    Ok(central_series(&PGroup::new(p, r)?, bound)?.index())
}

/// Upper central series by enumerating the whole group and testing
/// commutators against every element.
pub fn central_series_brute_force(g: &PGroup) -> Result<CentralSeries> {
    g.check_bound(BRUTE_FORCE_LIMIT)?;
    let q = g.e_order();
    let fcount = (g.p as usize).pow(q as u32);
    let decode = |mut n: usize| -> Vec<u64> {
        (0..q)
            .map(|_| {
                let d = (n % g.p as usize) as u64;
                n /= g.p as usize;
                d
            })
            .collect()
    };
    let elems: Vec<PGroupElem> = (0..q)
        .flat_map(|ui| (0..fcount).map(move |fi| (ui, fi)))
        .map(|(ui, fi)| g.elem(ui, decode(fi)))
        .collect();
    let pos: HashMap<&PGroupElem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut member = vec![false; elems.len()];
    member[pos[&g.identity()]] = true;
    let mut orders = vec![1u128];
    loop {
        let next: Vec<bool> = elems
            .iter()
            .map(|a| elems.iter().all(|b| member[pos[&g.commutator(a, b)]]))
            .collect();
        let order = next.iter().filter(|&&m| m).count() as u128;
        if order == *orders.last().unwrap() {
            return Err(Error::Precondition(
                "upper central series stalled before reaching G".into(),
            ));
        }
        orders.push(order);
        if order == elems.len() as u128 {
            return Ok(CentralSeries { orders });
        }
        member = next;
    }
}

/// Freeness of the cyclic module `F_p[E]·f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Freeness {
    /// `Σ_{u ∈ E} u·f ≠ 0`, the sufficient condition.
    pub criterion: bool,
    /// The annihilator of `f` is zero.
    pub free: bool,
}

impl Freeness {
    /// False when the criterion holds yet the module is not free.
    pub fn consistent(&self) -> bool {
        !self.criterion || self.free
    }
}

/// Decide freeness of `F_p[E]·f` both by the criterion and by the rank of
/// `a ↦ a·f`.
pub fn cyclic_module_is_free(p: u64, r: u32, f: &[u64], bound: u128) -> Result<Freeness> {
    let g = PGroup::new(p, r)?;
    let q = g.e_order();
    if (q as u128).saturating_mul(q as u128) > bound {
        return Err(Error::BoundExceeded(format!(
            "group algebra of dimension {q} exceeds the work bound {bound}"
        )));
    }
    if f.len() != q {
        return Err(Error::Precondition(format!(
            "f needs {q} coefficients, got {}",
            f.len()
        )));
    }
    let f: Vec<u64> = f.iter().map(|c| c % p).collect();
    let translates: Vec<Row> = (0..q).map(|ui| g.translate(&f, &g.digits(ui))).collect();
    let sum: Vec<u64> = (0..q)
        .map(|w| translates.iter().map(|t| t[w]).sum::<u64>() % p)
        .collect();
    Ok(Freeness {
        criterion: sum.iter().any(|&c| c != 0),
        free: rank(&translates, p) == q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law() {
        let g = PGroup::new(3, 1).unwrap();
        let a = PGroupElem {
            u: vec![1],
            f: vec![1, 2, 0],
        };
        let b = PGroupElem {
            u: vec![2],
            f: vec![0, 1, 1],
        };
        let c = PGroupElem {
            u: vec![1],
            f: vec![2, 2, 1],
        };
        assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        assert_eq!(g.mul(&a, &g.inv(&a)), g.identity());
        assert_eq!(g.translate(&[1, 2, 0], &[1]), vec![0, 1, 2]);
    }

    #[test]
    fn order_8_case() {
        let g = PGroup::new(2, 1).unwrap();
        assert_eq!(g.order(), 8);
        let s = central_series(&g, DEFAULT_WORK_BOUND).unwrap();
        assert_eq!(s.orders, vec![1, 2, 8]);
        assert_eq!(central_series_brute_force(&g).unwrap(), s);
    }

    #[test]
    fn oracle_agrees_on_rank_two() {
        let g = PGroup::new(2, 2).unwrap();
        assert_eq!(
            central_series(&g, DEFAULT_WORK_BOUND).unwrap(),
            central_series_brute_force(&g).unwrap()
        );
    }

    #[test]
    fn bound() {
        assert!(matches!(
            pgroup_nilpotency_index(5, 2, DEFAULT_WORK_BOUND),
            Err(Error::BoundExceeded(_))
        ));
        assert!(PGroup::new(4, 1).is_err());
    }

    #[test]
    fn freeness() {
        let one = cyclic_module_is_free(2, 1, &[1, 0], 1000).unwrap();
        assert!(one.criterion && one.free);
        let n = cyclic_module_is_free(2, 1, &[1, 1], 1000).unwrap();
        assert!(!n.criterion && !n.free && n.consistent());
        // `1 + e^u` over F_3 has augmentation 2, so it is free.
        let x = cyclic_module_is_free(3, 1, &[1, 1, 0], 1000).unwrap();
        assert!(x.criterion && x.free);
    }
}
