//! Exponential generating functions with `n!`-scaled integer coefficients.
//!
//! A [`BigSeq`] stores `a_0 ..= a_N` where the series is `sum a_n x^n / n!`.
//! Products become binomial convolutions, so every computation stays in the
//! integers. Nothing is ever extrapolated past the horizon `N`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{binomial, factorial, pascal};
use crate::error::{Error, Result};
use crate::spancount::fibonacci;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigSeq {
    terms: Vec<BigInt>,
}

impl BigSeq {
    /// Panics on an empty vector; a sequence always has index 0.
    pub fn new(terms: Vec<BigInt>) -> Self {
        assert!(!terms.is_empty(), "a sequence holds at least a_0");
        BigSeq { terms }
    }

    pub fn from_fn(horizon: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        BigSeq::new((0..=horizon).map(f).collect())
    }

    pub fn from_i64(terms: &[i64]) -> Self {
        BigSeq::new(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn zeros(horizon: usize) -> Self {
        Self::from_fn(horizon, |_| BigInt::zero())
    }

    /// EGF of the constant 1.
    pub fn one(horizon: usize) -> Self {
        Self::from_fn(horizon, |n| if n == 0 { BigInt::one() } else { BigInt::zero() })
    }

    /// EGF of `e^x`.
    pub fn all_ones(horizon: usize) -> Self {
        Self::from_fn(horizon, |_| BigInt::one())
    }

    pub fn horizon(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.terms[n]
    }

    fn check_same(&self, other: &BigSeq) -> Result<()> {
        if self.horizon() == other.horizon() {
            Ok(())
        } else {
            Err(Error::HorizonMismatch(self.horizon(), other.horizon()))
        }
    }

    /// Truncates to a smaller horizon.
    pub fn truncate(&self, horizon: usize) -> BigSeq {
        BigSeq::new(self.terms[..=horizon.min(self.horizon())].to_vec())
    }
}

impl fmt::Display for BigSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(BigInt::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn seq_add(a: &BigSeq, b: &BigSeq) -> Result<BigSeq> {
    a.check_same(b)?;
    Ok(BigSeq::new(a.terms.iter().zip(&b.terms).map(|(x, y)| x + y).collect()))
}

/// `p_n = sum_i C(n, i) a_i b_(n-i)`.
pub fn seq_mul(a: &BigSeq, b: &BigSeq) -> Result<BigSeq> {
    a.check_same(b)?;
    let n = a.horizon();
    let binom = pascal(n);
    Ok(BigSeq::from_fn(n, |k| {
        (0..=k)
            .map(|i| &binom[k][i] * &a.terms[i] * &b.terms[k - i])
            .sum()
    }))
}

/// Multiplication by `x`: `b_0 = 0`, `b_n = n a_(n-1)`.
pub fn seq_shift_mul_x(a: &BigSeq) -> BigSeq {
    BigSeq::from_fn(a.horizon(), |n| {
        if n == 0 {
            BigInt::zero()
        } else {
            BigInt::from(n) * &a.terms[n - 1]
        }
    })
}

/// `A'(x)`: drop `a_0` and shift, so the horizon shrinks by one.
pub fn seq_derivative(a: &BigSeq) -> Result<BigSeq> {
    if a.horizon() == 0 {
        return Err(Error::InvalidParameter(
            "derivative needs horizon at least 1".into(),
        ));
    }
    Ok(BigSeq::new(a.terms[1..].to_vec()))
}

pub fn seq_pow(a: &BigSeq, k: u32) -> Result<BigSeq> {
    (0..k).try_fold(BigSeq::one(a.horizon()), |acc, _| seq_mul(&acc, a))
}

fn need_zero_head(s: &BigSeq, name: &str) -> Result<()> {
    if s.terms[0].is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name}_0 must be 0")))
    }
}

/// All structures from connected ones: solves `1 + A = e^C` from
/// `A' = (1 + A) C'`, giving
/// `a_(n+1) = c_(n+1) + sum_(m=1..n) C(n, m) a_m c_(n+1-m)`.
pub fn exp_formula_forward(c: &BigSeq) -> Result<BigSeq> {
    need_zero_head(c, "c")?;
    let n_max = c.horizon();
    let binom = pascal(n_max);
    let mut a = vec![BigInt::zero(); n_max + 1];
    for n in 0..n_max {
        let mut next = c.terms[n + 1].clone();
        for m in 1..=n {
            next += &binom[n][m] * &a[m] * &c.terms[n + 1 - m];
        }
        a[n + 1] = next;
    }
    Ok(BigSeq::new(a))
}

/// Connected structures from all structures; inverse of [`exp_formula_forward`].
pub fn exp_formula_inverse(a: &BigSeq) -> Result<BigSeq> {
    need_zero_head(a, "a")?;
    let n_max = a.horizon();
    let binom = pascal(n_max);
    let mut c = vec![BigInt::zero(); n_max + 1];
    for n in 0..n_max {
        let mut next = a.terms[n + 1].clone();
        for m in 1..=n {
            next -= &binom[n][m] * &a.terms[m] * &c[n + 1 - m];
        }
        c[n + 1] = next;
    }
    Ok(BigSeq::new(c))
}

/// `W_k = C^k / k!`: structures with exactly `k` connected pieces.
pub fn component_layer(c: &BigSeq, k: u32) -> Result<BigSeq> {
    need_zero_head(c, "c")?;
    let power = seq_pow(c, k)?;
    let kf = BigInt::from(factorial(k as u64));
    let terms = power
        .terms
        .iter()
        .map(|t| {
            let (q, r) = t.div_rem(&kf);
            debug_assert!(r.is_zero());
            q
        })
        .collect();
    Ok(BigSeq::new(terms))
}

/// Labeled structures on the vertex set of `K_n` counted by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedKind {
    PerfectMatchings,
    AllMatchings,
    TwoFactors,
    SpanningForests,
    ConnectedSubgraphs,
    HamiltonianCycles,
}

impl NamedKind {
    pub const ALL: [NamedKind; 6] = [
        NamedKind::PerfectMatchings,
        NamedKind::AllMatchings,
        NamedKind::TwoFactors,
        NamedKind::SpanningForests,
        NamedKind::ConnectedSubgraphs,
        NamedKind::HamiltonianCycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedKind::PerfectMatchings => "perfect_matchings",
            NamedKind::AllMatchings => "all_matchings",
            NamedKind::TwoFactors => "two_factors",
            NamedKind::SpanningForests => "spanning_forests",
            NamedKind::ConnectedSubgraphs => "connected_subgraphs",
            NamedKind::HamiltonianCycles => "hamiltonian_cycles",
        }
    }
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown kind {s:?}")))
    }
}

/// `(n-1)!/2` for `n >= 3`, else 0: labeled cycles through all `n` vertices.
fn cycle_count(n: usize) -> BigInt {
    if n < 3 {
        BigInt::zero()
    } else {
        BigInt::from(factorial(n as u64 - 1)) / 2
    }
}

/// The connected class `c` whose exponential transform gives `kind`.
/// For the connected-subgraph and Hamiltonian kinds this is the answer itself.
pub fn connected_class(kind: NamedKind, horizon: usize) -> BigSeq {
    match kind {
        NamedKind::PerfectMatchings => BigSeq::from_fn(horizon, |n| BigInt::from((n == 2) as u8)),
        NamedKind::AllMatchings => BigSeq::from_fn(horizon, |n| BigInt::from((n == 1 || n == 2) as u8)),
        NamedKind::TwoFactors | NamedKind::HamiltonianCycles => BigSeq::from_fn(horizon, cycle_count),
        NamedKind::SpanningForests => BigSeq::from_fn(horizon, |n| match n {
            0 => BigInt::zero(),
            1 => BigInt::one(),
            _ => BigInt::from(n).pow(n as u32 - 2),
        }),
        NamedKind::ConnectedSubgraphs => {
            let all = BigSeq::from_fn(horizon, |n| {
                if n == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(crate::combinatorics::pow(2, (n * (n - 1) / 2) as u64))
                }
            });
            exp_formula_inverse(&all).expect("zero head")
        }
    }
}

/// `n!`-scaled counts for `n = 0 ..= horizon` (index 0 is always 0).
pub fn named_series(kind: NamedKind, horizon: usize) -> BigSeq {
    let c = connected_class(kind, horizon);
    match kind {
        NamedKind::ConnectedSubgraphs | NamedKind::HamiltonianCycles => c,
        _ => exp_formula_forward(&c).expect("zero head"),
    }
}

pub fn named_counts(kind: NamedKind, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(named_series(kind, n).get(n).clone())
}

/// Values for `n = 1 ..= n_max`.
pub fn named_sequence(kind: NamedKind, n_max: usize) -> Result<Vec<BigInt>> {
    if n_max == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(named_series(kind, n_max).terms[1..].to_vec())
}

/// `(2n-1)!!`.
pub fn double_factorial_odd(n: u64) -> BigUint {
    (1..=n).map(|k| BigUint::from(2 * k - 1)).product()
}

/// Largest index for which the Binet check is run.
pub const BINET_LIMIT: u64 = 70;

/// Decimal digits in the rational bounds on `sqrt(5)`.
const SQRT5_DIGITS: u32 = 60;

/// `(phi^k - psi^k) / s` with `s = sqrt(5)` expands to
/// `2^(1-k) sum_(j odd) C(k, j) s^(j-1)`, a polynomial in `s` with
/// nonnegative coefficients. Evaluating it at rational bounds `lo < sqrt(5) < hi`
/// therefore encloses the true value; the check passes when both ends round
/// to `f_k`.
pub fn binet_rounds_to_fibonacci(k: u64) -> bool {
    if k == 0 {
        return fibonacci(0).is_zero();
    }
    let scale = BigUint::from(10u32).pow(SQRT5_DIGITS);
    let r_lo = (BigUint::from(5u32) * &scale * &scale).sqrt();
    let r_hi = &r_lo + 1u32;
    let f = fibonacci(k);
    // value at s = r / scale is numer(r) / (2^(k-1) scale^(k-1))
    let denom = BigUint::from(2u32).pow(k as u32 - 1) * scale.pow(k as u32 - 1);
    let numer = |r: &BigUint| -> BigUint {
        (1..=k)
            .step_by(2)
            .map(|j| binomial(k, j) * r.pow(j as u32 - 1) * scale.pow((k - j) as u32))
            .sum()
    };
    [r_lo, r_hi].iter().all(|r| {
        let n = BigInt::from(numer(r));
        let target = BigInt::from(&f * &denom);
        // |n / denom - f| < 1/2
        BigInt::from(2u32) * (n - target).abs() < BigInt::from(denom.clone())
    })
}

/// Coefficientwise `F'' = F + F'` on the Fibonacci EGF up to `n`, plus the
/// Binet rounding check for every `k <= min(n, 70)`.
pub fn fibonacci_egf_check(n: usize) -> bool {
    let f = BigSeq::from_fn(n + 2, |k| BigInt::from(fibonacci(k as u64)));
    let Ok(d1) = seq_derivative(&f) else { return false };
    let Ok(d2) = seq_derivative(&d1) else { return false };
    let ok = seq_add(&f.truncate(n), &d1.truncate(n)).is_ok_and(|sum| sum == d2);
    ok && (0..=(n as u64).min(BINET_LIMIT)).all(binet_rounds_to_fibonacci)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn product_rule() {
        let a = BigSeq::from_i64(&[2, 3, 5, 7]);
        let b = BigSeq::from_i64(&[11, 13, 17, 19]);
        let p = seq_mul(&a, &b).unwrap();
        assert_eq!(p.get(1), &BigInt::from(2 * 13 + 3 * 11));
        assert_eq!(seq_mul(&BigSeq::one(3), &b).unwrap(), b);
        let twos = seq_mul(&BigSeq::all_ones(10), &BigSeq::all_ones(10)).unwrap();
        assert_eq!(ints(twos.terms()), (0..=10).map(|n| 1i64 << n).collect::<Vec<_>>());
        assert_eq!(seq_mul(&a, &BigSeq::one(4)), Err(Error::HorizonMismatch(3, 4)));
    }

    #[test]
    fn shifts() {
        let x = seq_shift_mul_x(&BigSeq::all_ones(5));
        assert_eq!(ints(x.terms()), vec![0, 1, 2, 3, 4, 5]);
        let f = BigSeq::from_fn(6, |k| BigInt::from(fibonacci(k as u64)));
        let xd = seq_shift_mul_x(&seq_derivative(&f).unwrap());
        assert_eq!(xd.get(5), &BigInt::from(25));
        assert_eq!(seq_derivative(&f).unwrap().horizon(), 5);
        assert!(seq_derivative(&BigSeq::one(0)).is_err());
    }

    #[test]
    fn forward_examples() {
        let pm = named_series(NamedKind::PerfectMatchings, 10);
        assert_eq!(pm.get(6), &BigInt::from(15));
        assert_eq!(pm.get(10), &BigInt::from(945));
        assert!(pm.get(7).is_zero());
        let am = named_sequence(NamedKind::AllMatchings, 5).unwrap();
        assert_eq!(ints(&am), vec![1, 2, 4, 10, 26]);
        let sf = named_sequence(NamedKind::SpanningForests, 4).unwrap();
        assert_eq!(ints(&sf), vec![1, 2, 7, 38]);
    }

    #[test]
    fn inverse_examples() {
        let cs = named_sequence(NamedKind::ConnectedSubgraphs, 4).unwrap();
        assert_eq!(ints(&cs), vec![1, 1, 4, 38]);
        let am = named_series(NamedKind::AllMatchings, 8);
        let c = exp_formula_inverse(&am).unwrap();
        assert_eq!(ints(c.terms()), vec![0, 1, 1, 0, 0, 0, 0, 0, 0]);
        assert!(exp_formula_inverse(&BigSeq::one(3)).is_err());
        assert!(exp_formula_forward(&BigSeq::one(3)).is_err());
    }

    #[test]
    fn two_factors_and_cycles() {
        let c = connected_class(NamedKind::TwoFactors, 6);
        assert_eq!(ints(&c.terms()[1..]), vec![0, 0, 1, 3, 12, 60]);
        assert_eq!(named_counts(NamedKind::TwoFactors, 6).unwrap(), BigInt::from(70));
        assert_eq!(named_counts(NamedKind::HamiltonianCycles, 5).unwrap(), BigInt::from(12));
        assert!(named_counts(NamedKind::TwoFactors, 0).is_err());
    }

    #[test]
    fn layers_sum_to_total() {
        let c = connected_class(NamedKind::PerfectMatchings, 8);
        let total = named_series(NamedKind::PerfectMatchings, 8);
        let mut sum = BigSeq::zeros(8);
        for k in 1..=8 {
            sum = seq_add(&sum, &component_layer(&c, k).unwrap()).unwrap();
        }
        assert_eq!(sum, total);
    }

    #[test]
    fn fibonacci_checks() {
        assert!(fibonacci_egf_check(10));
        assert!(fibonacci_egf_check(80));
        assert!(binet_rounds_to_fibonacci(0));
        assert!(binet_rounds_to_fibonacci(70));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in NamedKind::ALL {
            assert_eq!(k.name().parse::<NamedKind>().unwrap(), k);
        }
        assert!("trees".parse::<NamedKind>().is_err());
        assert_eq!(double_factorial_odd(5), BigUint::from(945u32));
    }
}
