//! Text form of ExtElt: 24 whitespace-separated tokens `num/den`, the 12 power-basis
//! coordinates of the a-part followed by those of the b-part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cyclotomic::{CycElt, DEGREE};
use super::ext::ExtElt;
use crate::error::{Error, Result};

pub const TOKENS: usize = 2 * DEGREE;

/// Longest accepted digit string in a single token.
const MAX_DIGITS: usize = 4096;

pub fn rational_token(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational_token(tok: &str) -> Result<BigRational> {
    let (n, d) = tok
        .split_once('/')
        .ok_or_else(|| Error::parse(format!("expected num/den, got {tok:?}")))?;
    let num = parse_int(n, true)?;
    let den = parse_int(d, false)?;
    if den.is_zero() || den.is_negative() {
        return Err(Error::parse(format!("denominator must be positive in {tok:?}")));
    }
    Ok(BigRational::new(num, den))
}

fn parse_int(s: &str, signed: bool) -> Result<BigInt> {
    let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
    if digits.is_empty()
        || digits.len() > MAX_DIGITS
        || !digits.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(Error::parse(format!("bad integer {s:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::parse(format!("bad integer {s:?}: {e}")))
}

pub fn cyc_tokens(x: &CycElt) -> Vec<String> {
    x.coeffs().iter().map(rational_token).collect()
}

pub fn ext_to_string(x: &ExtElt) -> String {
    let mut toks = cyc_tokens(x.a());
    toks.extend(cyc_tokens(x.b()));
    toks.join(" ")
}

pub fn ext_from_tokens(toks: &[&str]) -> Result<ExtElt> {
    if toks.len() != TOKENS {
        return Err(Error::parse(format!(
            "expected {TOKENS} tokens, got {}",
            toks.len()
        )));
    }
    let coeffs = toks
        .iter()
        .map(|t| parse_rational_token(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtElt::new(
        CycElt::from_coeffs(&coeffs[..DEGREE]),
        CycElt::from_coeffs(&coeffs[DEGREE..]),
    ))
}

pub fn parse_ext(s: &str) -> Result<ExtElt> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    ext_from_tokens(&toks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = ExtElt::new(
            CycElt::from_int_poly(&[1, -2, 0, 7], 3),
            CycElt::xi_pow(5),
        );
        let s = ext_to_string(&x);
        assert_eq!(s.split_whitespace().count(), 24);
        assert_eq!(parse_ext(&s).unwrap(), x);
    }

    #[test]
    fn rejects_malformed() {
        let zero = vec!["0/1"; 24].join(" ");
        assert_eq!(parse_ext(&zero).unwrap(), ExtElt::zero());
        assert!(parse_ext(&vec!["0/1"; 23].join(" ")).is_err());
        assert!(parse_ext(&zero.replacen("0/1", "1/0", 1)).is_err());
        assert!(parse_ext(&zero.replacen("0/1", "1/-2", 1)).is_err());
        assert!(parse_ext(&zero.replacen("0/1", "+1/2", 1)).is_err());
        assert!(parse_ext(&zero.replacen("0/1", "1", 1)).is_err());
    }

    #[test]
    fn unreduced_input_is_normalised() {
        let s = format!("2/4 {}", vec!["0/1"; 23].join(" "));
        let x = parse_ext(&s).unwrap();
        assert_eq!(x, ExtElt::from_rational(&BigRational::new(1.into(), 2.into())));
    }
}
