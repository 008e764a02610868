//! Exact scalar arithmetic: arbitrary-precision rationals with a few helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from `"-3"`, `"3/4"`, `"-3/4"` style strings.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| Error::structural(format!("bad rational numerator: {num_s:?}")))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| Error::structural(format!("bad rational denominator: {den_s:?}")))?;
    if den.is_zero() {
        return Err(Error::structural(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// gcd of two nonnegative integers (BigInt).
pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

pub fn big_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::lcm(a, b)
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// Exact binomial coefficient C(n, k) for small k, with polynomial-friendly
/// signature (n may be any integer; standard falling-factorial convention).
pub fn binomial_int(n: i64, k: u32) -> Rat {
    let mut acc = rat(1);
    for i in 0..k as i64 {
        acc *= rat(n - i);
    }
    let mut fact = rat(1);
    for i in 1..=k as i64 {
        fact *= rat(i);
    }
    acc / fact
}
