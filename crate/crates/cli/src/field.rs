use std::fmt;
use std::str::FromStr;

use autk2::scalar::is_prime;

/// Primes available as `fp:<p>`; the modulus is a const generic, so each
/// one is instantiated here.
pub const SUPPORTED_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSel {
    Q,
    Fp(u64),
    QOfZ,
    FpOfZ(u64),
}

impl FromStr for FieldSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "q" => return Ok(FieldSel::Q),
            "q-of-z" => return Ok(FieldSel::QOfZ),
            _ => {}
        }
        let Some(rest) = s.strip_prefix("fp:") else {
            return Err(format!(
                "unknown field `{s}` (expected q, fp:<p>, q-of-z or fp:<p>-of-z)"
            ));
        };
        let (num, of_z) = match rest.strip_suffix("-of-z") {
            Some(n) => (n, true),
            None => (rest, false),
        };
        let p: u64 = num.parse().map_err(|_| format!("`{num}` is not a number"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(format!("prime fields are supported for p < 50, got {p}"));
        }
        Ok(if of_z { FieldSel::FpOfZ(p) } else { FieldSel::Fp(p) })
    }
}

impl fmt::Display for FieldSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSel::Q => f.write_str("q"),
            FieldSel::Fp(p) => write!(f, "fp:{p}"),
            FieldSel::QOfZ => f.write_str("q-of-z"),
            FieldSel::FpOfZ(p) => write!(f, "fp:{p}-of-z"),
        }
    }
}

/// Call `$run::<F>(args)` with `F` the scalar type selected by `$sel`.
#[macro_export]
macro_rules! with_field {
    ($sel:expr, $run:ident $args:tt) => {{
        use autk2::scalar::{Fp, RatFunc, Rational};
        use $crate::field::FieldSel;
        match $sel {
            FieldSel::Q => $run::<Rational> $args,
            FieldSel::QOfZ => $run::<RatFunc<Rational>> $args,
            FieldSel::Fp(p) => $crate::with_field!(@prime p, $run $args; 2 3 5 7 11 13 17 19 23 29 31 37 41 43 47),
            FieldSel::FpOfZ(p) => $crate::with_field!(@prime_z p, $run $args; 2 3 5 7 11 13 17 19 23 29 31 37 41 43 47),
        }
    }};
    (@prime $p:ident, $run:ident $args:tt; $($q:literal)*) => {
        match $p {
            $( $q => $run::<Fp<$q>> $args, )*
            _ => unreachable!("field selector admits only supported primes"),
        }
    };
    (@prime_z $p:ident, $run:ident $args:tt; $($q:literal)*) => {
        match $p {
            $( $q => $run::<RatFunc<Fp<$q>>> $args, )*
            _ => unreachable!("field selector admits only supported primes"),
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors() {
        assert_eq!("q".parse(), Ok(FieldSel::Q));
        assert_eq!("fp:5".parse(), Ok(FieldSel::Fp(5)));
        assert_eq!("Q-of-z".parse(), Ok(FieldSel::QOfZ));
        assert_eq!("fp:7-of-z".parse(), Ok(FieldSel::FpOfZ(7)));
        assert!("fp:4".parse::<FieldSel>().is_err());
        assert!("fp:53".parse::<FieldSel>().is_err());
        assert!("r".parse::<FieldSel>().is_err());
        for s in ["q", "fp:2", "q-of-z", "fp:47-of-z"] {
            assert_eq!(s.parse::<FieldSel>().unwrap().to_string(), s);
        }
    }
}
