use num_bigint::BigInt;
use num_traits::Zero;

use super::{factorial, Rational};

/// Truncated power series: coefficient of `z^k` at index `k`, valid for all
/// `k <= order`. Unlike [`super::Polynomial`], trailing zeros are kept, since
/// they carry the information that those coefficients are exactly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given order from a coefficient rule.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Product, truncated to the smaller order of the two factors.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |k| {
            (0..=k).map(|j| &self.coeffs[j] * &rhs.coeffs[k - j]).sum()
        })
    }

    /// Quotient by long division, truncated to the smaller order. The divisor
    /// must have a nonzero constant term.
    pub fn div(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert!(!rhs.coeffs[0].is_zero(), "series division requires a unit constant term");
        let order = self.order().min(rhs.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc -= &rhs.coeffs[j] * &q[k - j];
            }
            q.push(acc / &rhs.coeffs[0]);
        }
        TruncatedSeries { coeffs: q }
    }
}

/// Taylor series of `cosh z` up to `z^order`.
pub fn cosh_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            Rational::new(BigInt::from(1), factorial(k as u64))
        } else {
            Rational::zero()
        }
    })
}

/// Taylor series of `-z / cosh z` up to `z^order`, by exact series division.
pub fn neg_z_over_cosh_series(order: usize) -> TruncatedSeries {
    let neg_z = TruncatedSeries::from_fn(order, |k| {
        if k == 1 {
            -Rational::new(BigInt::from(1), BigInt::from(1))
        } else {
            Rational::zero()
        }
    });
    neg_z.div(&cosh_series(order))
}
