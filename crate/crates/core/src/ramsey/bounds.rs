use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{binomial, factorial, pow};
use crate::error::{guard, Error, Result};

/// `s(m, n)` from `s(m, n) = s(m-1, n) + s(m, n-1)` with `s(1, n) = s(n, 1) = 1`.
/// Row `m - 1`, column `n - 1` of the result holds `s(m, n)`.
pub fn s_table(rows: usize, cols: usize) -> Vec<Vec<BigUint>> {
    let mut t = vec![vec![BigUint::one(); cols]; rows];
    for m in 1..rows {
        for n in 1..cols {
            t[m][n] = &t[m - 1][n] + &t[m][n - 1];
        }
    }
    t
}

pub fn s_value(m: usize, n: usize) -> BigUint {
    assert!(m >= 1 && n >= 1);
    s_table(m, n)[m - 1][n - 1].clone()
}

/// Known values of `r(m, n)` for `m <= 4` and `n <= 9`; `None` is unknown.
pub fn known_r(m: usize, n: usize) -> Option<u64> {
    const ROW3: [u64; 9] = [1, 3, 6, 9, 14, 18, 23, 28, 36];
    const ROW4: [Option<u64>; 9] = [Some(1), Some(4), Some(9), Some(18), Some(25), None, None, None, None];
    let (a, b) = (m.min(n), m.max(n));
    match (a, b) {
        (1, 1..=9) => Some(1),
        (2, 2..=9) => Some(b as u64),
        (3, 3..=9) => Some(ROW3[b - 1]),
        (4, 4..=9) => ROW4[b - 1],
        _ => None,
    }
}

fn two_pow(e: usize) -> BigUint {
    pow(2, e as u64)
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(R, n) < 2^(C(n,2) - 1)`, which forces `r(n, n) > R`.
pub fn lower_condition(r: usize, n: usize) -> bool {
    assert!(n >= 1);
    let lhs = binomial(r as u64, n as u64);
    // 2 C(R, n) < 2^C(n,2) avoids a negative exponent at n = 1
    lhs * 2u32 < two_pow(pairs(n))
}

/// `W = 2 C(R, n) / 2^C(n,2)`, the expected number of monochromatic `K_n`
/// in a uniform coloring of `K_R`.
pub fn expected_mono(r: usize, n: usize) -> BigRational {
    BigRational::new(
        BigInt::from(binomial(r as u64, n as u64) * 2u32),
        BigInt::from(two_pow(pairs(n))),
    )
}

/// Monochromatic `K_n` summed over all `Omega = 2^C(R,2)` colorings:
/// `M = C(R, n) Omega 2 / 2^C(n,2)`. Returns `(M, Omega)`.
pub fn counting_m(r: usize, n: usize) -> (BigRational, BigUint) {
    let omega = two_pow(pairs(r));
    let m = BigRational::new(
        BigInt::from(binomial(r as u64, n as u64) * &omega * 2u32),
        BigInt::from(two_pow(pairs(n))),
    );
    (m, omega)
}

/// `(n-1)!/2` Hamiltonian cycles, each monochromatic with probability
/// `2 / 2^n`: `(n-1)! / 2^n`. Zero below 3 vertices.
pub fn expected_mono_hamiltonian(n: usize) -> BigRational {
    if n < 3 {
        return BigRational::zero();
    }
    BigRational::new(
        BigInt::from(factorial(n as u64 - 1)),
        BigInt::from(two_pow(n)),
    )
}

/// Largest `R` with the lower condition, so `r(n, n) > R`. Guard `n <= 40`.
pub fn best_probabilistic_r(n: usize) -> Result<usize> {
    guard("clique size", n, 40)?;
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let limit = two_pow(pairs(n));
    // C(n, n) = 1; raise R while 2 C(R+1, n) < 2^C(n,2)
    let mut r = n;
    let mut c = BigUint::one();
    if &c * 2u32 >= limit {
        return Ok(n - 1);
    }
    loop {
        let next = &c * (r as u64 + 1) / (r as u64 + 1 - n as u64);
        if &next * 2u32 >= limit {
            return Ok(r);
        }
        c = next;
        r += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValues {
    pub m: usize,
    pub n: usize,
    /// `s(m, n) = C(m+n-2, m-1)`, an upper bound on `r(m, n)`.
    pub s: BigUint,
    /// `4^n / 4`, an upper bound on `r(n, n)`.
    pub upper_diagonal: BigUint,
    /// `floor(2^(n/2) / 8)`; `r(n, n)` exceeds it.
    pub lower_diagonal: BigUint,
    /// Largest `R` passing [`lower_condition`].
    pub best_r: usize,
    pub expected_mono: BigRational,
    pub counting_m: BigRational,
    pub omega: BigUint,
    pub expected_mono_hamiltonian: BigRational,
}

pub fn bound_values(m: usize, n: usize) -> Result<BoundValues> {
    if m < 1 || n < 2 {
        return Err(Error::InvalidParameter("need m >= 1 and n >= 2".into()));
    }
    let best_r = best_probabilistic_r(n)?;
    let (cm, omega) = counting_m(best_r, n);
    Ok(BoundValues {
        m,
        n,
        s: binomial((m + n - 2) as u64, (m - 1) as u64),
        upper_diagonal: pow(4, n as u64 - 1),
        lower_diagonal: two_pow(n).sqrt() / 8u32,
        best_r,
        expected_mono: expected_mono(best_r, n),
        counting_m: cm,
        omega,
        expected_mono_hamiltonian: expected_mono_hamiltonian(n),
    })
}

/// `P_n = 2^-n sum_(k <= n/3) C(n, k)`: at most a third of `n` fair tosses
/// come up heads.
pub fn coin_tail(n: usize) -> BigRational {
    let total: BigUint = (0..=n / 3).map(|k| binomial(n as u64, k as u64)).sum();
    BigRational::new(BigInt::from(total), BigInt::from(two_pow(n)))
}

/// Markov's bound `P_n <= (3/4 * 2^(1/3))^n`, cubed to stay rational:
/// `P_n^3 <= (27/64)^n 2^n`.
pub fn coin_tail_proof_bound_holds(n: usize) -> bool {
    let p = coin_tail(n);
    let cube = &p * &p * &p;
    let rhs = BigRational::new(
        BigInt::from(pow(27, n as u64) * two_pow(n)),
        BigInt::from(pow(64, n as u64)),
    );
    cube <= rhs
}

/// `P_n < (19/20)^n` together with the cubed Markov bound.
pub fn markov_bound_check(n: usize) -> bool {
    let rhs = BigRational::new(
        BigInt::from(pow(19, n as u64)),
        BigInt::from(pow(20, n as u64)),
    );
    coin_tail(n) < rhs && coin_tail_proof_bound_holds(n)
}

/// Outcome of the randomized far-set search in `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarSet {
    pub n: usize,
    /// Kept vertices as bit strings; bit `i` is coordinate `i`.
    pub vertices: Vec<u64>,
    /// Smallest pairwise Hamming distance, `None` below two vertices.
    pub min_distance: Option<u32>,
    pub trials_used: usize,
    pub reached_target: bool,
}

/// Samples uniform vertices of `Q_n` and keeps each one lying at distance
/// more than `n/3` from everything kept so far, stopping at `k` vertices or
/// after `trials` samples.
pub fn qn_far_set_search(n: usize, k: usize, trials: usize, seed: u64) -> Result<FarSet> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidParameter("cube dimension must be in 1..=64".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut kept: Vec<u64> = Vec::new();
    let mut used = 0;
    while kept.len() < k && used < trials {
        used += 1;
        let v = rng.gen::<u64>() & mask;
        if kept.iter().all(|&u| 3 * (u ^ v).count_ones() as usize > n) {
            kept.push(v);
        }
    }
    let mut min_distance = None;
    for (i, &a) in kept.iter().enumerate() {
        for &b in &kept[i + 1..] {
            let d = (a ^ b).count_ones();
            min_distance = Some(min_distance.map_or(d, |m: u32| m.min(d)));
        }
    }
    Ok(FarSet {
        n,
        reached_target: kept.len() >= k,
        vertices: kept,
        min_distance,
        trials_used: used,
    })
}
