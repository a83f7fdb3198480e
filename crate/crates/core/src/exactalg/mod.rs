//! Exact algebra kernel.
//!
//! Everything here is computed over arbitrary-precision rationals. The types
//! build on one another:
//!
//! - [`Poly`]: dense univariate (Laurent) polynomials,
//! - [`WeightedPoly`]: `(x-1)^nu (x+1)^mu p(x)` with rational exponents,
//! - [`RatFunc`]: reduced quotients of polynomials,
//! - [`DiffOp`]: linear differential operators `sum_i c_i(x) D^i`.

mod diffop;
mod poly;
mod ratfunc;
mod weighted;

pub use diffop::DiffOp;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use weighted::WeightedPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` reduced. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Wire format: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Returns `Some(n)` when `r` is an integer that fits in an `i64`.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Returns `Some(n)` when `r` is a nonnegative integer.
pub fn as_natural(r: &Rational) -> Option<u32> {
    as_integer(r).and_then(|n| u32::try_from(n).ok())
}

pub fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `base^exp` for a possibly negative integer exponent. Panics on `0^-k`.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Decimal rendering with `digits` fractional digits, for human-readable output only.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (r.abs() * Rational::from_integer(scale.clone())).round().to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
    }
}
