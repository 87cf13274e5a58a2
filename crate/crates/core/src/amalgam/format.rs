//! Text format for words.
//!
//! ```text
//! version: 1
//! affine: 0, 1 ; 1, 2 | 0, 0
//! elementary: 1, 0, 1 | x^2
//! tail: 1, 0, 1 | 0
//! ```
//!
//! `affine` lines hold a matrix and a translation, `elementary` and `tail`
//! lines hold `z1, t0, z2 | f(x)`. Blank lines and lines starting with `#`
//! are ignored. The tail line is optional and defaults to the identity.

use std::fmt;

use crate::auto::{AffineAuto, ElemAuto};
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::parse::{parse_poly_x_at, parse_scalar_at, split_exact};
use crate::scalar::Field;

use super::word::{AmalgamWord, Factor};

pub const WORD_FORMAT_VERSION: u32 = 1;

impl<F: Field> fmt::Display for AmalgamWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "version: {WORD_FORMAT_VERSION}")?;
        for x in &self.factors {
            writeln!(f, "{x}")?;
        }
        write!(f, "tail: {}", self.tail)
    }
}

fn scalars<F: Field>(src: &str, base: usize, n: usize, what: &str) -> Result<Vec<F>> {
    split_exact(src, base, ',', n, what)?
        .into_iter()
        .map(|(o, s)| parse_scalar_at(&s, o))
        .collect()
}

fn parse_elem<F: Field>(src: &str, base: usize) -> Result<ElemAuto<F>> {
    let parts = split_exact(src, base, '|', 2, "elementary letter")?;
    let s = scalars::<F>(&parts[0].1, parts[0].0, 3, "elementary letter")?;
    let f = parse_poly_x_at(&parts[1].1, parts[1].0)?;
    let mut it = s.into_iter();
    ElemAuto::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), f)
        .map_err(|e| Error::parse(base, e.to_string()))
}

fn parse_affine<F: Field>(src: &str, base: usize) -> Result<AffineAuto<F>> {
    let parts = split_exact(src, base, '|', 2, "affine letter")?;
    let rows = split_exact(&parts[0].1, parts[0].0, ';', 2, "matrix")?;
    let mut m = Vec::with_capacity(4);
    for (o, row) in rows {
        m.extend(scalars::<F>(&row, o, 2, "matrix row")?);
    }
    let v = scalars::<F>(&parts[1].1, parts[1].0, 2, "translation")?;
    let mut it = m.into_iter();
    let l = Mat2::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    );
    AffineAuto::new(l, [v[0].clone(), v[1].clone()]).map_err(|e| Error::parse(base, e.to_string()))
}

/// Parse the text format. The result is not normalized.
pub fn parse_word<F: Field>(src: &str) -> Result<AmalgamWord<F>> {
    let mut offset = 0;
    let mut version_seen = false;
    let mut factors = Vec::new();
    let mut tail = None;
    for raw in src.split_inclusive('\n') {
        let base = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = line.len() - trimmed.len();
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(Error::parse(base + lead, "expected `key: value`"));
        };
        let at = base + lead + key.len() + 1;
        if tail.is_some() {
            return Err(Error::parse(base + lead, "nothing may follow the tail"));
        }
        match key.trim() {
            "version" => {
                if version_seen || !factors.is_empty() {
                    return Err(Error::parse(base + lead, "version must be the first line"));
                }
                if rest.trim() != WORD_FORMAT_VERSION.to_string() {
                    return Err(Error::parse(at, format!("unsupported version `{}`", rest.trim())));
                }
                version_seen = true;
            }
            _ if !version_seen => return Err(Error::parse(base + lead, "missing version line")),
            "affine" => factors.push(Factor::Affine(parse_affine(rest, at)?)),
            "elementary" => factors.push(Factor::Elem(parse_elem(rest, at)?)),
            "tail" => {
                let t = parse_elem::<F>(rest, at)?;
                if !t.in_b() {
                    return Err(Error::parse(at, "tail must lie in B (deg f <= 1)"));
                }
                tail = Some(t);
            }
            other => return Err(Error::parse(base + lead, format!("unknown record kind `{other}`"))),
        }
    }
    if !version_seen {
        return Err(Error::parse(0, "missing version line"));
    }
    Ok(AmalgamWord {
        factors,
        tail: tail.unwrap_or_else(ElemAuto::identity),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amalgam::vdk_factor;
    use crate::auto::PlaneAuto;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn round_trip() {
        let phi: PlaneAuto<Q> = "y + x^2 + 1/2, 3*x".parse().unwrap();
        let w = vdk_factor(&phi).unwrap();
        let text = w.to_string();
        assert!(text.starts_with("version: 1\n"));
        assert_eq!(parse_word::<Q>(&text).unwrap(), w);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_word::<Q>("affine: 1, 0 ; 0, 1 | 0, 0"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_word::<Q>("version: 2"),
            Err(Error::Parse { pos: 8, .. })
        ));
        let bad_tail = "version: 1\ntail: 1, 0, 1 | x^2";
        assert!(matches!(parse_word::<Q>(bad_tail), Err(Error::Parse { pos: 16, .. })));
        let singular = "version: 1\naffine: 1, 1 ; 1, 1 | 0, 0";
        assert!(matches!(parse_word::<Q>(singular), Err(Error::Parse { .. })));
    }
}
