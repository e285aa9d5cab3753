//! Exact scalar arithmetic.
//!
//! All coefficients in this crate are arbitrary-precision rationals. This
//! module re-exports the backing type and provides the handful of integer
//! combinatorial helpers the rest of the crate needs. Factorials, falling
//! factorials and binomial coefficients are computed by exact product loops.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, the coefficient field everywhere.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on a zero denominator.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// n! as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Falling factorial (x)_k = x (x-1) ... (x-k+1) for a rational base.
/// (x)_0 = 1.
pub fn falling_factorial(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k as i64 {
        acc *= x - rat(i);
    }
    acc
}

/// Falling factorial (n)_k for an integer base, as a rational.
pub fn falling_factorial_int(n: i64, k: u32) -> Rational {
    falling_factorial(&rat(n), k)
}

/// Binomial coefficient C(m, k) for integer m >= 0, zero when k > m.
pub fn binomial(m: u32, k: u32) -> Rational {
    if k > m {
        return Rational::zero();
    }
    falling_factorial_int(m as i64, k) / factorial(k)
}

/// x^e for a signed exponent. Errors on 0 raised to a negative power.
pub fn rational_pow(x: &Rational, e: i64) -> Result<Rational> {
    if x.is_zero() && e < 0 {
        return Err(Error::NotRepresentable(format!("0^{e}")));
    }
    if e >= 0 {
        Ok(num_traits::pow::Pow::pow(x, u32::try_from(e).map_err(|_| {
            Error::OutOfRange(format!("exponent {e} too large"))
        })?))
    } else {
        let inv = x.recip();
        Ok(num_traits::pow::Pow::pow(
            &inv,
            u32::try_from(-e).map_err(|_| Error::OutOfRange(format!("exponent {e} too large")))?,
        ))
    }
}

/// Parses a rational from `p` or `p/q` notation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// True when x is a non-negative integer.
pub fn is_nonneg_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}
