use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse polynomial in a fixed number of variables. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPolynomial {
    pub fn zero(vars: usize) -> Self {
        MultiPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], BigInt::one());
        p
    }

    /// `x_0 + x_1 + ... + x_{vars-1}`.
    pub fn variable_sum(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        for i in 0..vars {
            let mut e = vec![0; vars];
            e[i] = 1;
            p.add_term(e, BigInt::one());
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.vars, "exponent vector length");
        let slot = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Total degree if every monomial has the same one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Evaluates with `x_var = value` and every other variable at 1.
    pub fn eval_one_var(&self, var: usize, value: &BigInt) -> BigInt {
        let mut point = vec![BigInt::one(); self.vars];
        point[var] = value.clone();
        self.eval(&point)
    }

    /// Sum of the coefficients of monomials whose exponent on `var` is `k`.
    pub fn coefficient_sum_at_exponent(&self, var: usize, k: u32) -> BigInt {
        self.terms
            .iter()
            .filter(|(e, _)| e[var] == k)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars);
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.vars];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.vars, rhs.vars);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPolynomial {
        (0..k).fold(Self::one(self.vars), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for MultiPolynomial {
    /// One `e0,e1,...:coefficient` line per monomial, in lexicographic
    /// exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in &self.terms {
            let exps: Vec<String> = e.iter().map(u32::to_string).collect();
            writeln!(f, "{}:{}", exps.join(","), c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_sum() {
        let s = MultiPolynomial::variable_sum(3).pow(2);
        assert_eq!(s.terms().len(), 6);
        assert_eq!(s.homogeneous_degree(), Some(2));
        assert_eq!(s.eval(&vec![BigInt::one(); 3]), BigInt::from(9));
        assert_eq!(s.coefficient_sum_at_exponent(0, 1), BigInt::from(4));
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = MultiPolynomial::zero(2);
        p.add_term(vec![1, 0], BigInt::from(2));
        p.add_term(vec![1, 0], BigInt::from(-2));
        assert!(p.is_zero());
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn display_and_permutation() {
        let mut p = MultiPolynomial::zero(2);
        p.add_term(vec![2, 0], BigInt::from(3));
        assert_eq!(p.to_string(), "2,0:3\n");
        assert_eq!(p.permute_vars(&[1, 0]).to_string(), "0,2:3\n");
    }
}
