//! The group generated by `S`, `S'` and `T` over ℚ.

use rand::Rng;

use crate::amalgam::vdk_factor;
use crate::auto::{named_generator, PlaneAuto};
use crate::error::Result;
use crate::mat2::Mat2;
use crate::report::{Record, Report};
use crate::scalar::{Field, Rational};

type Q = Rational;

/// One letter of a word in `S`, `S'`, `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaLetter {
    S(i64),
    SPrime(i64),
    T(i64),
}

impl GammaLetter {
    pub fn to_auto(self) -> PlaneAuto<Q> {
        match self {
            GammaLetter::S(n) => {
                let two_n = Q::from_i64(2).pow(n.unsigned_abs());
                let c = if n > 0 { two_n.inv().unwrap() } else { two_n };
                PlaneAuto::linear(&Mat2::identity().scale(&c))
            }
            GammaLetter::SPrime(n) => PlaneAuto::linear(&Mat2::from_i64(1, 1, 1, 0).pow(n).expect("S' is invertible")),
            GammaLetter::T(n) => format!("x, y + {n}*x^2").parse().expect("literal"),
        }
    }
}

impl std::fmt::Display for GammaLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GammaLetter::S(n) => write!(f, "S^{n}"),
            GammaLetter::SPrime(n) => write!(f, "S'^{n}"),
            GammaLetter::T(n) => write!(f, "T^{n}"),
        }
    }
}

/// A random reduced word: alternating nonzero powers of `S'` and `T`,
/// followed by a power of `S`.
pub fn random_gamma_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Vec<GammaLetter> {
    let len = rng.gen_range(1..=max_len);
    let mut on_sprime = rng.gen_bool(0.5);
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        let e = rng.gen_range(1..=2) * if rng.gen_bool(0.5) { 1 } else { -1 };
        out.push(if on_sprime {
            GammaLetter::SPrime(e)
        } else {
            GammaLetter::T(e)
        });
        on_sprime = !on_sprime;
    }
    out.push(GammaLetter::S(rng.gen_range(-2..=2)));
    out
}

pub fn word_auto(letters: &[GammaLetter]) -> PlaneAuto<Q> {
    letters
        .iter()
        .fold(PlaneAuto::identity(), |acc, l| acc.compose(&l.to_auto()))
}

fn render(letters: &[GammaLetter]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("*")
}

/// Length of the reduced word of the element, counting a nontrivial tail
/// as one letter; zero exactly for the identity.
fn nf_weight(phi: &PlaneAuto<Q>) -> Result<usize> {
    let w = vdk_factor(phi)?;
    Ok(w.len() + usize::from(!w.tail.is_identity()))
}

/// The commutation relations, non-triangularity of the powers of `S'`, and
/// that `random_words` random reduced words are not the identity.
pub fn gamma_relations_check<R: Rng + ?Sized>(rng: &mut R, random_words: usize) -> Result<Report> {
    let s: PlaneAuto<Q> = named_generator("S")?;
    let sp: PlaneAuto<Q> = named_generator("S'")?;
    let t: PlaneAuto<Q> = named_generator("T")?;
    let s_inv = PlaneAuto::linear(&Mat2::identity().scale(&Q::from_i64(2)));
    let mut rep = Report::new();

    let lhs = s.compose(&sp);
    let rhs = sp.compose(&s);
    rep.push(Record::new(
        "relation",
        "S S' = S' S",
        rhs.to_string(),
        lhs.to_string(),
        lhs == rhs,
    ));
    let lhs = s.compose(&t).compose(&s_inv);
    let rhs = t.compose(&t);
    rep.push(Record::new(
        "relation",
        "S T S^-1 = T^2",
        rhs.to_string(),
        lhs.to_string(),
        lhs == rhs,
    ));

    let spm = Mat2::<Q>::from_i64(1, 1, 1, 0);
    let bad: Vec<i64> = (-20..=20i64)
        .filter(|&n| n != 0)
        .filter(|&n| {
            let m = spm.pow(n).unwrap();
            m.is_upper_triangular() || m.is_lower_triangular()
        })
        .collect();
    rep.push(Record::new(
        "non-triangular",
        "S'^n for 1 <= |n| <= 20",
        "0 triangular",
        format!("{} triangular", bad.len()),
        bad.is_empty(),
    ));

    let fixed = [
        GammaLetter::SPrime(1),
        GammaLetter::T(1),
        GammaLetter::SPrime(-1),
        GammaLetter::T(-1),
    ];
    let mut words = vec![fixed.to_vec()];
    words.extend((0..random_words).map(|_| random_gamma_word(rng, 4)));
    for w in &words {
        let n = nf_weight(&word_auto(w))?;
        rep.push(Record::new(
            "nontrivial",
            render(w),
            "normal form nonempty",
            format!("normal form length {n}"),
            n > 0,
        ));
    }
    Ok(rep)
}
