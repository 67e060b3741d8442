use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense univariate polynomial over the integers; `coeffs[i]` multiplies
/// `x^i`. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c.into());
        Self::new(v)
    }

    /// `x - c`.
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(IntPolynomial::constant(1), |acc, _| &acc * self)
    }

    /// `P(x + c)`.
    pub fn compose_shift(&self, c: &BigInt) -> Self {
        let shift = IntPolynomial::new(vec![c.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, a| &(&acc * &shift) + &IntPolynomial::constant(a.clone()))
    }

    /// Signs of the coefficients alternate from the leading term down,
    /// skipping nothing between the leading term and the lowest nonzero term.
    pub fn alternates_in_sign(&self) -> bool {
        let Some(d) = self.degree() else {
            return true;
        };
        let low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (low..=d).all(|i| {
            let c = &self.coeffs[i];
            let want_positive = (d - i) % 2 == 0;
            if want_positive {
                c > &BigInt::zero()
            } else {
                c < &BigInt::zero()
            }
        })
    }
}

impl fmt::Display for IntPolynomial {
    /// Space-separated coefficients `c0 c1 c2 ...`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPolynomial::from_i64(&c))
    }

    #[test]
    fn trimming_and_degree() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[0, -1, 1]).to_string(), "0 -1 1");
    }

    #[test]
    fn shift_composition() {
        // (x - 1)^2 shifted by 1 is x^2
        let p = IntPolynomial::linear_root(1).pow(2);
        assert_eq!(p.compose_shift(&BigInt::one()), IntPolynomial::monomial(1, 2));
    }

    #[test]
    fn sign_alternation() {
        // x(x-1)(x-2) = x^3 - 3x^2 + 2x
        assert!(IntPolynomial::from_i64(&[0, 2, -3, 1]).alternates_in_sign());
        assert!(!IntPolynomial::from_i64(&[0, 2, 3, 1]).alternates_in_sign());
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(a in poly(), b in poly(), x in -6i64..6) {
            let xv = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&xv), a.eval(&xv) * b.eval(&xv));
            prop_assert_eq!((&a - &b).eval(&xv), a.eval(&xv) - b.eval(&xv));
            prop_assert_eq!(a.compose_shift(&BigInt::from(3)).eval(&xv), a.eval(&(xv + 3)));
        }
    }
}
