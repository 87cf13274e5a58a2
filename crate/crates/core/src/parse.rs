//! Text grammar for polynomials, automorphisms and matrices.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `x`, `y`, `t` and `z`; which ones are legal depends on the
//! target type. `z` is a scalar and needs a rational-function field.
//! Division is allowed only by nonzero scalars, so `1/2*x` and `x/(1+z)` parse
//! but `1/x` does not.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mat2::PolyMat2;
use crate::poly1::Poly1;
use crate::poly2::Poly2;
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num,
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize, usize)>,
}

impl<'a> Lexer<'a> {
    fn run(src: &'a str, base: usize) -> Result<Self> {
        let bytes = src.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            let start = i;
            let tok = match c {
                ' ' | '\t' | '\n' | '\r' => {
                    i += 1;
                    continue;
                }
                '0'..='9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    toks.push((Tok::Num, start, i));
                    continue;
                }
                'x' | 'y' | 't' | 'z' => Tok::Var(c),
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    let ch = src[i..].chars().next().unwrap();
                    return Err(Error::parse(base + i, format!("unexpected character `{ch}`")));
                }
            };
            i += 1;
            toks.push((tok, start, i));
        }
        Ok(Lexer { src, toks })
    }
}

/// A ring the grammar can evaluate into.
trait Target<F: Field>: Clone {
    fn from_scalar(c: F) -> Self;
    fn var(v: char) -> Option<Self>;
    fn as_scalar(&self) -> Option<F>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &F) -> Self;
    fn pow(&self, e: u32) -> Self;
}

impl<F: Field> Target<F> for F {
    fn from_scalar(c: F) -> Self {
        c
    }
    fn var(_: char) -> Option<Self> {
        None
    }
    fn as_scalar(&self) -> Option<F> {
        Some(self.clone())
    }
    fn add(&self, o: &Self) -> Self {
        Field::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Field::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Field::mul(self, o)
    }
    fn neg(&self) -> Self {
        Field::neg(self)
    }
    fn scale(&self, c: &F) -> Self {
        Field::mul(self, c)
    }
    fn pow(&self, e: u32) -> Self {
        Field::pow(self, e as u64)
    }
}

impl<F: Field> Target<F> for Poly2<F> {
    fn from_scalar(c: F) -> Self {
        Poly2::constant(c)
    }
    fn var(v: char) -> Option<Self> {
        match v {
            'x' => Some(Poly2::x()),
            'y' => Some(Poly2::y()),
            _ => None,
        }
    }
    fn as_scalar(&self) -> Option<F> {
        self.as_constant()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &F) -> Self {
        Poly2::scale(self, c)
    }
    fn pow(&self, e: u32) -> Self {
        Poly2::pow(self, e)
    }
}

/// `Poly1` with a fixed variable letter.
#[derive(Clone)]
struct Uni<F: Field, const V: char>(Poly1<F>);

impl<F: Field, const V: char> Target<F> for Uni<F, V> {
    fn from_scalar(c: F) -> Self {
        Uni(Poly1::constant(c))
    }
    fn var(v: char) -> Option<Self> {
        (v == V).then(|| Uni(Poly1::var()))
    }
    fn as_scalar(&self) -> Option<F> {
        self.0.as_constant()
    }
    fn add(&self, o: &Self) -> Self {
        Uni(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Uni(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Uni(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Uni(-&self.0)
    }
    fn scale(&self, c: &F) -> Self {
        Uni(self.0.scale(c))
    }
    fn pow(&self, e: u32) -> Self {
        Uni(self.0.pow(e))
    }
}

struct Parser<'a, F: Field, T: Target<F>> {
    lex: Lexer<'a>,
    pos: usize,
    base: usize,
    _m: std::marker::PhantomData<(F, T)>,
}

/// Exponents above this are rejected to keep malformed input from
/// allocating without bound.
const MAX_EXPONENT: u32 = 10_000;

impl<'a, F: Field, T: Target<F>> Parser<'a, F, T> {
    fn peek(&self) -> Option<Tok> {
        self.lex.toks.get(self.pos).map(|t| t.0)
    }

    fn here(&self) -> usize {
        self.base + self.lex.toks.get(self.pos).map_or(self.lex.src.len(), |t| t.1)
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    let c = d
                        .as_scalar()
                        .ok_or_else(|| Error::parse(at, "division by a non-constant"))?;
                    let inv = c.inv().ok_or_else(|| Error::parse(at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<T> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<T> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.here();
        match self.lex.toks.get(self.pos) {
            Some(&(Tok::Num, s, e)) => {
                self.pos += 1;
                let n: u32 = self.lex.src[s..e]
                    .parse()
                    .ok()
                    .filter(|&n| n <= MAX_EXPONENT)
                    .ok_or_else(|| Error::parse(at, "exponent too large"))?;
                Ok(base.pow(n))
            }
            _ => Err(Error::parse(at, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<T> {
        let at = self.here();
        let Some(&(tok, s, e)) = self.lex.toks.get(self.pos) else {
            return Err(Error::parse(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Num => {
                let n: BigInt = self.lex.src[s..e].parse().unwrap();
                Ok(T::from_scalar(F::from_bigint(&n)))
            }
            Tok::Var(v) => {
                if let Some(p) = T::var(v) {
                    return Ok(p);
                }
                if v == 'z' {
                    if let Some(z) = F::variable_z() {
                        return Ok(T::from_scalar(z));
                    }
                    return Err(Error::parse(
                        at,
                        format!("`z` needs a rational-function field, not {}", F::name()),
                    ));
                }
                Err(Error::parse(at, format!("variable `{v}` is not allowed here")))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(Error::parse(self.here(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(Error::parse(at, "expected a number, variable or `(`")),
        }
    }
}

fn run<F: Field, T: Target<F>>(src: &str, base: usize) -> Result<T> {
    let lex = Lexer::run(src, base)?;
    if lex.toks.is_empty() {
        return Err(Error::parse(base, "empty expression"));
    }
    let mut p = Parser::<F, T> {
        lex,
        pos: 0,
        base,
        _m: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != p.lex.toks.len() {
        return Err(Error::parse(p.here(), "unexpected trailing input"));
    }
    Ok(v)
}

/// Split on `sep` outside parentheses, returning each piece with its byte
/// offset in `src`.
pub fn split_top(src: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &src[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}

/// A scalar: integers, `/`, and `z` for rational-function fields.
pub fn parse_scalar<F: Field>(src: &str) -> Result<F> {
    parse_scalar_at(src, 0)
}

pub(crate) fn parse_scalar_at<F: Field>(src: &str, base: usize) -> Result<F> {
    run::<F, F>(src, base)
}

/// A polynomial in `x` and `y`.
pub fn parse_poly2<F: Field>(src: &str) -> Result<Poly2<F>> {
    parse_poly2_at(src, 0)
}

pub(crate) fn parse_poly2_at<F: Field>(src: &str, base: usize) -> Result<Poly2<F>> {
    run::<F, Poly2<F>>(src, base)
}

/// A polynomial in `t`.
pub fn parse_poly_t<F: Field>(src: &str) -> Result<Poly1<F>> {
    parse_poly_t_at(src, 0)
}

pub(crate) fn parse_poly_t_at<F: Field>(src: &str, base: usize) -> Result<Poly1<F>> {
    run::<F, Uni<F, 't'>>(src, base).map(|u| u.0)
}

/// A polynomial in `x` (the parameter of an elementary map).
pub fn parse_poly_x<F: Field>(src: &str) -> Result<Poly1<F>> {
    parse_poly_x_at(src, 0)
}

pub(crate) fn parse_poly_x_at<F: Field>(src: &str, base: usize) -> Result<Poly1<F>> {
    run::<F, Uni<F, 'x'>>(src, base).map(|u| u.0)
}

/// Split `src` into exactly `n` pieces on a top-level separator.
pub(crate) fn split_exact(src: &str, base: usize, sep: char, n: usize, what: &str) -> Result<Vec<(usize, String)>> {
    let parts = split_top(src, sep);
    if parts.len() != n {
        return Err(Error::parse(
            base,
            format!("{what} needs {n} `{sep}`-separated parts, found {}", parts.len()),
        ));
    }
    Ok(parts.into_iter().map(|(o, s)| (base + o, s.to_string())).collect())
}

/// A matrix literal `a, b ; c, d` with entries in `K[t]`.
pub fn parse_polymat<F: Field>(src: &str) -> Result<PolyMat2<F>> {
    let rows = split_exact(src, 0, ';', 2, "matrix")?;
    let mut entries = Vec::with_capacity(4);
    for (off, row) in rows {
        for (o, e) in split_exact(&row, off, ',', 2, "matrix row")? {
            entries.push(parse_poly_t_at(&e, o)?);
        }
    }
    let mut it = entries.into_iter();
    Ok(PolyMat2::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

/// A scalar matrix literal `a, b ; c, d`.
pub fn parse_mat<F: Field>(src: &str) -> Result<crate::mat2::Mat2<F>> {
    let rows = split_exact(src, 0, ';', 2, "matrix")?;
    let mut entries = Vec::with_capacity(4);
    for (off, row) in rows {
        for (o, e) in split_exact(&row, off, ',', 2, "matrix row")? {
            entries.push(parse_scalar_at(&e, o)?);
        }
    }
    let mut it = entries.into_iter();
    Ok(crate::mat2::Mat2::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}
