//! The β-coefficient sequence and the linear functional θ built on it.
//!
//! β is defined for indices n ≥ −1 by shifting the Bernoulli numbers:
//! β_{n} = 4(2^{n+2} − 1)·B_{n+2}/(n+2). Under the `B_1 = -1/2` convention
//! this single formula yields β_{-1} = −2 and β_n = 0 for every odd n ≥ 1.
//! θ is the linear extension of θ(z^n) = β_{n−1}; it kills every polynomial
//! antisymmetric under z ↦ −1−z and acts as −2·q(0) on polynomials with only
//! even powers, which is exactly what turns the h-vector identity into the
//! even-face Euler formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli, factorial, rat, Polynomial, Rational};

/// β_n for n ≥ −1.
pub fn beta(n: i64) -> Result<Rational> {
    if n < -1 {
        return Err(Error::BetaIndex(n));
    }
    Ok(beta_value(n))
}

// Callers that have already established n >= -1.
fn beta_value(n: i64) -> Rational {
    let m = (n + 2) as usize;
    let pow = (BigInt::one() << m) - BigInt::one();
    Rational::from_integer(BigInt::from(4) * pow) * bernoulli(m) / rat(m as i64)
}

/// Materialized β table over −1..=max_n, in index order.
///
/// The underlying Bernoulli values are shared with [`bernoulli`]'s memo, so
/// repeated tables are cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaTable {
    rows: Vec<(i64, Rational)>,
}

impl BetaTable {
    pub fn up_to(max_n: i64) -> Result<BetaTable> {
        if max_n < -1 {
            return Err(Error::BetaIndex(max_n));
        }
        Ok(BetaTable { rows: (-1..=max_n).map(|n| (n, beta_value(n))).collect() })
    }

    pub fn get(&self, n: i64) -> Option<&Rational> {
        self.rows.iter().find(|(i, _)| *i == n).map(|(_, v)| v)
    }

    pub fn rows(&self) -> &[(i64, Rational)] {
        &self.rows
    }
}

/// The linear functional θ(Σ c_k z^k) = Σ c_k·β_{k−1}.
pub fn theta(p: &Polynomial) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * beta_value(k as i64 - 1))
        .sum()
}

/// Splits `P = p + q` with `p(z) + p(−1−z) = 0` and `q` containing only even
/// powers of z. The split is unique; it is computed by descending induction
/// on the degree, peeling odd-degree leading terms into multiples of
/// `(1 + 2z)^m` and even-degree leading terms into monomials.
pub fn decompose(poly: &Polynomial) -> (Polynomial, Polynomial) {
    let mut rest = poly.clone();
    let mut anti = Polynomial::zero();
    let mut even = Polynomial::zero();
    while !rest.is_zero() {
        let m = rest.degree() as usize;
        let c = rest.coeff(m);
        let piece = if m % 2 == 1 {
            // (1+2z)^m is antisymmetric under z ↦ −1−z for odd m and has
            // leading coefficient 2^m.
            let scale = c / Rational::from_integer(BigInt::one() << m);
            let piece = one_plus_2z_pow(m as u32).scaled(&scale);
            anti = &anti + &piece;
            piece
        } else {
            let piece = Polynomial::monomial(m, c);
            even = &even + &piece;
            piece
        };
        rest = &rest - &piece;
        debug_assert!(rest.degree() < m as isize);
    }
    (anti, even)
}

/// `(1 + 2z)^m`.
pub fn one_plus_2z_pow(m: u32) -> Polynomial {
    Polynomial::from_integers(&[1, 2]).pow(m)
}

/// The finite sum S_m = Σ_{n=1}^{m+1} (4^n − 2^n)·B_n / (n!·(m+1−n)!),
/// defined for positive odd m. It equals the coefficient of z^{m+1} in
/// −z/cosh z, hence is exactly zero.
pub fn s_m_sum(m: i64) -> Result<Rational> {
    if m < 1 || m % 2 == 0 {
        return Err(Error::InvalidSmIndex(m));
    }
    let m = m as usize;
    let mut acc = Rational::zero();
    for n in 1..=m + 1 {
        let num = (BigInt::one() << (2 * n)) - (BigInt::one() << n);
        let den = factorial(n as u64) * factorial((m + 1 - n) as u64);
        acc += Rational::new(num, den) * bernoulli(n);
    }
    Ok(acc)
}
