use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::pow;
use crate::error::{Error, Result};

/// Closed forms and linear recurrences for spanning-tree counts of families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `s(K_p) = p^(p-2)`.
    Cayley(u64),
    /// `s(K_{m,n}) = m^(n-1) n^(m-1)`.
    CompleteBipartite(u64, u64),
    /// `s(K_p - e) = (p-2) p^(p-3)`.
    CompleteMinusEdge(u64),
    /// `s(F_n) = f_{2n}`.
    Fan(u64),
    /// `s(Z_n) = f_{2n}`.
    Zigzag(u64),
    /// `b_1 = 1, b_2 = 4, b_{n+1} = 4 b_n - b_{n-1}`.
    Ladder(u64),
    /// `c_{n+1} = 4 c_n - 4 c_{n-1} + c_{n-2}` seeded with `1, 5, 16`.
    WheelRecurrence(u64),
    /// `s(W_n) = l_{2n} - 2`.
    WheelLucas(u64),
}

/// `f_0 = 0, f_1 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `l_n = f_{n+1} + f_{n-1}`, with `l_0 = 2`.
pub fn lucas(n: u64) -> BigUint {
    if n == 0 {
        BigUint::from(2u32)
    } else {
        fibonacci(n + 1) + fibonacci(n - 1)
    }
}

fn need(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} out of range")))
    }
}

/// Three-term linear recurrence evaluated over signed integers.
fn linear_recurrence(seeds: &[i64], coeffs: &[i64], n: u64) -> BigUint {
    let mut seq: Vec<BigInt> = seeds.iter().map(|&s| BigInt::from(s)).collect();
    while (seq.len() as u64) < n {
        let k = seq.len();
        let next: BigInt = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| BigInt::from(c) * &seq[k - 1 - i])
            .sum();
        seq.push(next);
    }
    seq[(n - 1) as usize]
        .to_biguint()
        .expect("spanning-tree counts are nonnegative")
}

pub fn closed_form(query: ClosedForm) -> Result<BigUint> {
    Ok(match query {
        ClosedForm::Cayley(p) => {
            need(p >= 1, "Cayley order")?;
            if p == 1 {
                BigUint::one()
            } else {
                pow(p, p - 2)
            }
        }
        ClosedForm::CompleteBipartite(m, n) => {
            need(m >= 1 && n >= 1, "bipartite part")?;
            pow(m, n - 1) * pow(n, m - 1)
        }
        ClosedForm::CompleteMinusEdge(p) => {
            need(p >= 3, "K_p - e order")?;
            BigUint::from(p - 2) * pow(p, p - 3)
        }
        ClosedForm::Fan(n) | ClosedForm::Zigzag(n) => {
            need(n >= 1, "fan/zigzag size")?;
            fibonacci(2 * n)
        }
        ClosedForm::Ladder(n) => {
            need(n >= 1, "ladder size")?;
            linear_recurrence(&[1, 4], &[4, -1], n)
        }
        ClosedForm::WheelRecurrence(n) => {
            need(n >= 1, "wheel size")?;
            linear_recurrence(&[1, 5, 16], &[4, -4, 1], n)
        }
        ClosedForm::WheelLucas(n) => {
            need(n >= 1, "wheel size")?;
            lucas(2 * n) - 2u32
        }
    })
}
