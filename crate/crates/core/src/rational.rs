//! Exact rational scalars for branch coefficients and breakpoints.

use num_rational::Ratio;
use num_traits::{float::FloatCore, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// The exact value of a finite `f64` as a rational (every finite double is dyadic).
pub fn exact_from_f64(x: f64) -> Result<Rational> {
    if !x.is_finite() {
        return Err(Error::Unrepresentable(x));
    }
    if x == 0.0 {
        return Ok(Rational::zero());
    }
    let (mantissa, exponent, sign) = FloatCore::integer_decode(x);
    let mut numer = i128::from(sign) * mantissa as i128;
    let mut exp = i32::from(exponent);
    // strip trailing zero bits so the denominator stays small
    while exp < 0 && numer % 2 == 0 {
        numer /= 2;
        exp += 1;
    }
    if exp >= 0 {
        if exp > 70 {
            return Err(Error::Unrepresentable(x));
        }
        Ok(Rational::from_integer(numer << exp))
    } else {
        if exp < -120 {
            return Err(Error::Unrepresentable(x));
        }
        Ok(Rational::new(numer, 1i128 << (-exp)))
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    // numer/denom may each exceed f64 precision; the quotient is what matters
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Parse "p", "p/q" or a plain decimal such as "0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Ok(r) = s.parse::<Rational>() {
        return Ok(r);
    }
    let bad = || Error::InvalidParameter(format!("'{s}' is not a rational number"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, fractional) = body.split_once('.').ok_or_else(bad)?;
    if fractional.len() > 30 || (whole.is_empty() && fractional.is_empty()) {
        return Err(bad());
    }
    let digits = format!("{whole}{fractional}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: i128 = digits.parse().map_err(|_| bad())?;
    let denom = 10i128.pow(fractional.len() as u32);
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_conversion_is_lossless() {
        for x in [0.5, 0.1, 3.0, 1e6 + 1.0, 2.0f64.powi(-60), 123.456] {
            let r = exact_from_f64(x).unwrap();
            assert_eq!(to_f64(&r), x);
        }
        assert_eq!(exact_from_f64(0.75).unwrap(), frac(3, 4));
        assert!(exact_from_f64(f64::NAN).is_err());
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("2/35").unwrap(), frac(2, 35));
        assert_eq!(parse_rational("20").unwrap(), int(20));
        assert_eq!(parse_rational("0.01").unwrap(), frac(1, 100));
        assert_eq!(parse_rational("-1.5").unwrap(), frac(-3, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
