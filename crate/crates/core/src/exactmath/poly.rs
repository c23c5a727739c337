use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over [`Rational`], coefficient of `z^k` at
/// index `k`. The zero polynomial stores no coefficients, so its degree is −1
/// and degree arithmetic needs no special cases downstream.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The monomial `c * z^degree`.
    pub fn monomial(degree: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial having degree −1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of `z^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scaled(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact substitution `q(z) = p(a·z + b)`.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> Polynomial {
        // Horner: fold from the leading coefficient, multiplying by (a z + b).
        let linear = Polynomial::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &linear + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// The polynomial whose coefficient of `z^k` is this one's coefficient of
    /// `z^{d+1-k}`, i.e. `z^{d+1} · p(1/z)`. Requires `degree(p) <= d + 1`.
    pub fn reversed_with_leading(&self, d: usize) -> Result<Polynomial> {
        if self.degree() > d as isize + 1 {
            return Err(Error::DegreeTooLarge { degree: self.degree(), max: d + 1 });
        }
        let coeffs = (0..=d + 1).map(|k| self.coeff(d + 1 - k)).collect();
        Ok(Polynomial::from_coeffs(coeffs))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mag = super::format_rational(&c.abs());
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "z")?,
                1 => write!(f, "{mag}*z")?,
                _ if mag == "1" => write!(f, "z^{k}")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Signed;

    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn degree_conventions() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(Polynomial::one().degree(), 0);
        assert_eq!(Polynomial::from_integers(&[0, 0, 3]).degree(), 2);
        assert_eq!(Polynomial::from_integers(&[1, 0, 0]).degree(), 0);
    }

    #[test]
    fn affine_substitute_square() {
        // (−1 − z)^2 = z^2 + 2z + 1
        let p = Polynomial::monomial(2, rat(1));
        let q = p.affine_substitute(&rat(-1), &rat(-1));
        assert_eq!(q, Polynomial::from_integers(&[1, 2, 1]));
    }

    #[test]
    fn affine_substitute_shift() {
        // F(x) = x^3 + 4x^2 + 6x + 4 at x - 1 gives x^3 + x^2 + x + 1.
        // Oracle: brute-force expansion of (x-1)^k by repeated convolution.
        let f = Polynomial::from_integers(&[4, 6, 4, 1]);
        let shifted = f.affine_substitute(&rat(1), &rat(-1));
        let mut expected = vec![Rational::zero(); 4];
        let mut x_minus_1_pow = vec![rat(1)]; // (x-1)^0
        for k in 0..=3usize {
            let fk = f.coeff(k);
            for (i, c) in x_minus_1_pow.iter().enumerate() {
                expected[i] += c * &fk;
            }
            let mut next = vec![Rational::zero(); x_minus_1_pow.len() + 1];
            for (i, c) in x_minus_1_pow.iter().enumerate() {
                next[i] -= c; // * (-1)
                next[i + 1] += c; // * x
            }
            x_minus_1_pow = next;
        }
        assert_eq!(shifted, Polynomial::from_coeffs(expected));
        assert_eq!(shifted, Polynomial::from_integers(&[1, 1, 1, 1]));
    }

    #[test]
    fn affine_substitute_zero_fixed() {
        let z = Polynomial::zero();
        assert_eq!(z.affine_substitute(&ratio(7, 3), &rat(-2)), Polynomial::zero());
    }

    #[test]
    fn reversal_examples() {
        let f = Polynomial::from_integers(&[4, 6, 4, 1]);
        assert_eq!(f.reversed_with_leading(2).unwrap(), Polynomial::from_integers(&[1, 4, 6, 4]));

        let one = Polynomial::one();
        assert_eq!(one.reversed_with_leading(0).unwrap(), Polynomial::from_integers(&[0, 1]));

        // x^2 + 2x with d = 2: coefficients of z^0 and z^3 are 0.
        let p = Polynomial::from_integers(&[0, 2, 1]);
        assert_eq!(p.reversed_with_leading(2).unwrap(), Polynomial::from_integers(&[0, 1, 2]));
    }

    #[test]
    fn reversal_rejects_high_degree() {
        let p = Polynomial::monomial(4, rat(1));
        assert!(matches!(p.reversed_with_leading(2), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn eval_horner() {
        let p = Polynomial::from_integers(&[4, 6, 4, 1]);
        assert_eq!(p.eval(&rat(-1)), rat(1)); // -1 + 4 - 6 + 4
        assert_eq!(p.eval(&ratio(1, 2)), ratio(65, 8));
    }

    #[test]
    fn display_reads_naturally() {
        let p = Polynomial::from_coeffs(vec![rat(1), rat(-4), ratio(1, 2)]);
        assert_eq!(p.to_string(), "1/2*z^2 - 4*z + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_integers(&[0, -1]).to_string(), "-z");
        assert_eq!(Polynomial::from_integers(&[-3, 0, 0, 1]).to_string(), "z^3 - 3");
    }

    mod properties {
        use proptest::prelude::*;

        use super::*;

        fn arb_rational() -> impl Strategy<Value = Rational> {
            (-50i64..=50, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
        }

        fn arb_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
            prop::collection::vec(arb_rational(), 0..=max_degree + 1)
                .prop_map(Polynomial::from_coeffs)
        }

        proptest! {
            // Affine substitution is a ring homomorphism.
            #[test]
            fn substitution_respects_product(
                p in arb_poly(10), q in arb_poly(10), a in arb_rational(), b in arb_rational()
            ) {
                let lhs = (&p * &q).affine_substitute(&a, &b);
                let rhs = &p.affine_substitute(&a, &b) * &q.affine_substitute(&a, &b);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn substitution_respects_sum(
                p in arb_poly(10), q in arb_poly(10), a in arb_rational(), b in arb_rational()
            ) {
                let lhs = (&p + &q).affine_substitute(&a, &b);
                let rhs = &p.affine_substitute(&a, &b) + &q.affine_substitute(&a, &b);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn substitution_preserves_degree_when_a_nonzero(
                p in arb_poly(10), a in arb_rational(), b in arb_rational()
            ) {
                prop_assume!(!a.is_zero());
                prop_assert_eq!(p.affine_substitute(&a, &b).degree(), p.degree());
            }

            #[test]
            fn substitution_agrees_with_eval(
                p in arb_poly(8), a in arb_rational(), b in arb_rational(), x in arb_rational()
            ) {
                let q = p.affine_substitute(&a, &b);
                prop_assert_eq!(q.eval(&x), p.eval(&(&a * &x + &b)));
            }

            #[test]
            fn mul_commutes(p in arb_poly(8), q in arb_poly(8)) {
                prop_assert_eq!(&p * &q, &q * &p);
            }
        }
    }
}
