//! Scalar helpers on top of [`BigRational`].

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Exact rational number. Always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

/// `p/q` rendering; integers print without a denominator.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p`, `p/q`. Decimal points and exponents are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = |msg: &str| ArithError::Parse {
        position: 0,
        message: format!("{msg}: {s:?}"),
    };
    if s.contains('.') {
        return Err(bad("decimal input is not accepted, use p/q"));
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad("invalid numerator"))?;
    let d = BigInt::from_str(d).map_err(|_| bad("invalid denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Least common multiple of the denominators of `qs` (1 for an empty list).
pub fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// The simplest rational (smallest denominator, then smallest numerator
/// magnitude) in the closed interval `[lo, hi]`, `lo <= hi`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

// Stern-Brocot descent via continued fractions, 0 < lo <= hi.
fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() || &(&fl + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    let rest = simplest_positive(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + rest.recip()
}
