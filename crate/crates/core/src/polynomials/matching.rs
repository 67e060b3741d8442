use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntPolynomial;
use crate::error::{guard, Error, Result};
use crate::graph::Pseudograph;

/// Matching counts read off `M_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingStats {
    pub total: BigInt,
    pub even_count: BigInt,
    pub odd_count: BigInt,
    pub matching_number: usize,
}

/// `M_G(x) = sum_k m_k x^k` via `M_G = M_{G-e} + x M_{G-[e]}`.
///
/// Loops are rejected. Parallel edges count as distinct matching edges.
pub fn matching_polynomial(g: &Pseudograph) -> Result<IntPolynomial> {
    if g.has_loops() {
        return Err(Error::LoopPresent);
    }
    let mut edges = g.edge_multiset();
    edges.sort_unstable();
    let mut memo = HashMap::new();
    Ok(matching_rec(&edges, &mut memo))
}

fn matching_rec(
    edges: &[(usize, usize)],
    memo: &mut HashMap<Vec<(usize, usize)>, IntPolynomial>,
) -> IntPolynomial {
    let Some(&(a, b)) = edges.first() else {
        return IntPolynomial::constant(1);
    };
    if let Some(p) = memo.get(edges) {
        return p.clone();
    }
    let deleted = &edges[1..];
    let removed: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(x, y)| x != a && x != b && y != a && y != b)
        .collect();
    let value = &matching_rec(deleted, memo)
        + &(&IntPolynomial::x() * &matching_rec(&removed, memo));
    memo.insert(edges.to_vec(), value.clone());
    value
}

pub fn matching_stats(g: &Pseudograph) -> Result<MatchingStats> {
    let m = matching_polynomial(g)?;
    let at_one = m.eval_i64(1);
    let at_minus_one = m.eval_i64(-1);
    let two = BigInt::from(2);
    let (even, r1) = (&at_one + &at_minus_one).div_rem(&two);
    let (odd, r2) = (&at_one - &at_minus_one).div_rem(&two);
    debug_assert!(r1 == BigInt::default() && r2 == BigInt::default());
    Ok(MatchingStats {
        total: at_one,
        even_count: even,
        odd_count: odd,
        matching_number: m.degree().unwrap_or(0),
    })
}

/// Exhaustive oracle: `result[k]` is the number of `k`-edge matchings.
pub fn count_matchings_bruteforce(g: &Pseudograph) -> Result<Vec<BigUint>> {
    guard("edge count", g.size(), 24)?;
    let q = g.size();
    let mut counts = vec![0u64; q + 1];
    for mask in 0u32..(1u32 << q) {
        let mut used = vec![false; g.order()];
        let mut ok = true;
        for e in 0..q {
            if mask >> e & 1 == 1 {
                let (a, b) = g.edges()[e];
                if a == b || used[a] || used[b] {
                    ok = false;
                    break;
                }
                used[a] = true;
                used[b] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// `m_k` as machine integers, for tests and display.
pub fn coefficients_u64(p: &IntPolynomial) -> Vec<u64> {
    p.coeffs().iter().map(|c| c.to_u64().unwrap_or(u64::MAX)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn k(n: usize) -> Pseudograph {
        make_family(Family::Complete(n)).unwrap()
    }

    #[test]
    fn small_complete_graphs() {
        assert_eq!(matching_polynomial(&k(3)).unwrap(), IntPolynomial::from_i64(&[1, 3]));
        assert_eq!(matching_polynomial(&k(4)).unwrap(), IntPolynomial::from_i64(&[1, 6, 3]));
    }

    #[test]
    fn disjoint_union_multiplies() {
        let a = k(4);
        let b = make_family(Family::Path(5)).unwrap();
        let u = a.disjoint_union(&b);
        assert_eq!(
            matching_polynomial(&u).unwrap(),
            &matching_polynomial(&a).unwrap() * &matching_polynomial(&b).unwrap()
        );
    }

    #[test]
    fn stats() {
        let s = matching_stats(&k(3)).unwrap();
        assert_eq!((s.total, s.even_count, s.odd_count), (4.into(), 1.into(), 3.into()));
        let s = matching_stats(&Pseudograph::null(5).unwrap()).unwrap();
        assert_eq!((s.total, s.even_count, s.odd_count, s.matching_number), (1.into(), 1.into(), 0.into(), 0));
        let s = matching_stats(&k(4)).unwrap();
        assert_eq!((s.total, s.even_count, s.odd_count, s.matching_number), (10.into(), 4.into(), 6.into(), 2));
    }

    #[test]
    fn loops_rejected_parallels_counted() {
        let looped = Pseudograph::new(2, vec![(0, 1), (0, 0)]).unwrap();
        assert_eq!(matching_polynomial(&looped), Err(Error::LoopPresent));
        let doubled = Pseudograph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(matching_polynomial(&doubled).unwrap(), IntPolynomial::from_i64(&[1, 2]));
    }

    #[test]
    fn low_coefficients() {
        let g = make_family(Family::Cube(3)).unwrap();
        let m = matching_polynomial(&g).unwrap();
        assert_eq!(m.coeff(0), 1.into());
        assert_eq!(m.coeff(1), 12.into());
        let brute = count_matchings_bruteforce(&g).unwrap();
        assert_eq!(coefficients_u64(&m), brute.iter().map(|c| c.try_into().unwrap()).collect::<Vec<u64>>());
    }
}
