//! Exact scalar types: arbitrary-precision rationals and complex rationals.
//!
//! Rationals are kept reduced with a positive denominator by the underlying
//! representation, so equality of values is equality of representations.
//! The canonical text rendering is `"num/den"` (always with an explicit
//! denominator); parsing also accepts a bare integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type ComplexRational = num_complex::Complex<Rational>;

/// Small rational constant, `rat(3, -7) == -3/7`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn crat(re: Rational, im: Rational) -> ComplexRational {
    ComplexRational::new(re, im)
}

/// Complex rational from small integer parts.
pub fn crat_int(re: i64, im: i64) -> ComplexRational {
    ComplexRational::new(rat_int(re), rat_int(im))
}

/// The imaginary unit as a complex rational.
pub fn c_i() -> ComplexRational {
    crat_int(0, 1)
}

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{trimmed}`")))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{trimmed}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{trimmed}`")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical rendering, always `"num/den"` with positive denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering with 17 significant digits (round-trips f64 exactly).
pub fn format_f64_17(v: f64) -> String {
    format!("{v:.16e}")
}
