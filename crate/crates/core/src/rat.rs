//! Exact rational scalars.
//!
//! Every coefficient in the crate is a `Rat`: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. No floating
//! point appears anywhere in the system.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num/den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p/q"` or `"p"` (exact, no float contamination).
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::InvalidInput(format!("cannot parse rational {s:?}: {e}")))
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(a + n, n) evaluated as the polynomial `(a+1)(a+2)...(a+n)/n!` so that
/// negative `a` is allowed. This is the Euler characteristic chi(O_{P^n}(a)).
pub fn binomial_shifted(a: i64, n: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 1..=n {
        num *= BigInt::from(a) + BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 1..=n {
        den *= BigInt::from(i);
    }
    let q = Rat::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// True when the rational is a (signed) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Floor of a rational as a BigInt.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Nonnegative integer value, if the rational is one.
pub fn to_usize(r: &Rat) -> Option<usize> {
    if is_integer(r) && !r.is_negative() {
        usize::try_from(r.to_integer()).ok()
    } else {
        None
    }
}
