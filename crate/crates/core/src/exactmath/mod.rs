//! Exact rational, polynomial, and truncated power-series arithmetic.
//!
//! Everything downstream (β-coefficients, h-vectors, the identity checks)
//! is computed over [`Rational`] with no floating point anywhere, so every
//! verification in this crate is an exact equality, not an approximation.

mod poly;
mod series;

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use poly::Polynomial;
pub use series::{cosh_series, neg_z_over_cosh_series, TruncatedSeries};

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, or as a bare integer when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the output of [`format_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.parse().ok()?;
            let den: BigInt = den.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Serde adapter: a [`Rational`] as a `"p/q"` (or bare integer) JSON string.
pub mod rational_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).ok_or_else(|| de::Error::custom(format!("invalid rational: {s:?}")))
    }
}

/// Serde adapter: an optional [`Rational`] as an optional fraction string.
pub mod opt_rational_string {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => ser.serialize_some(&format_rational(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        match Option::<String>::deserialize(de)? {
            None => Ok(None),
            Some(s) => parse_rational(&s)
                .map(Some)
                .ok_or_else(|| de::Error::custom(format!("invalid rational: {s:?}"))),
        }
    }
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

// Bernoulli numbers, memoized. Guarded by a mutex so concurrent callers see a
// consistent table.
static BERNOULLI: LazyLock<Mutex<Vec<Rational>>> =
    LazyLock::new(|| Mutex::new(vec![Rational::one()]));

/// The Bernoulli number `B_n`, in the convention `B_1 = -1/2`.
///
/// The convention matters: it is the unique choice under which the recurrence
/// `Σ_{k=0}^{n} C(n+1, k) B_k = 0` (n ≥ 1) holds with `B_0 = 1`, and the one
/// under which the β-coefficient at index −1 comes out as −2
/// (see [`crate::coefficients::beta`]). Results are cached after first
/// computation; the cache is internally synchronized.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = BERNOULLI.lock().unwrap();
    while table.len() <= n {
        let m = table.len();
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            acc += b * Rational::from_integer(binomial(m as u64 + 1, k as i64));
        }
        let b = -acc / rat(m as i64 + 1);
        table.push(b);
    }
    table[n].clone()
}

/// True if `r` is an integer (denominator 1).
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Extracts an integer-valued rational as `i64`; panics on non-integers.
pub fn to_integer(r: &Rational) -> i64 {
    assert!(is_integer(r), "expected an integer, got {}", format_rational(r));
    let n = r.numer();
    let mag: u64 = n.magnitude().try_into().expect("integer out of i64 range");
    if n.is_negative() {
        -(mag as i64)
    } else {
        mag as i64
    }
}
