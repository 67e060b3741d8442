use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{guard, Error, Result};
use crate::graph::{Family, Pseudograph};
use crate::spancount::GraphMemo;

/// `P_G(x)` by deletion minus contraction.
///
/// A loop makes the polynomial zero. Parallel classes are collapsed first,
/// since they do not change which colorings are proper.
pub fn chromatic_polynomial(g: &Pseudograph) -> IntPolynomial {
    if g.has_loops() {
        return IntPolynomial::zero();
    }
    let mut memo = GraphMemo::default();
    chromatic_rec(g.simplified(), &mut memo)
}

fn chromatic_rec(g: Pseudograph, memo: &mut GraphMemo<IntPolynomial>) -> IntPolynomial {
    if g.size() == 0 {
        return IntPolynomial::monomial(1, g.order());
    }
    let deg = g.degrees();
    if g.order() > 1 {
        // isolated vertex contributes x, an end vertex contributes (x - 1)
        if let Some(v) = deg.iter().position(|&d| d <= 1) {
            let factor = if deg[v] == 0 {
                IntPolynomial::x()
            } else {
                IntPolynomial::linear_root(1)
            };
            let rest = g.delete_vertex(v).expect("order > 1");
            return &factor * &chromatic_rec(rest, memo);
        }
    }
    let (hit, slot) = memo.get(&g);
    if let Some(p) = hit {
        return p;
    }
    let deleted = g.delete_edge(0).expect("edge exists");
    let contracted = g.contract_edge(0).expect("simple graph").simplified();
    let value = &chromatic_rec(deleted, memo) - &chromatic_rec(contracted, memo);
    memo.put(slot, value.clone());
    value
}

/// Exhaustive count of proper colorings with `colors` colors.
pub fn count_colorings_bruteforce(g: &Pseudograph, colors: u32) -> Result<BigUint> {
    let p = g.order() as u32;
    let total = (colors as u64).checked_pow(p).unwrap_or(u64::MAX);
    guard("colorings to enumerate", total.min(usize::MAX as u64) as usize, 20_000_000)?;
    let mut assignment = vec![0u32; g.order()];
    let mut count: u64 = 0;
    if colors == 0 {
        return Ok(BigUint::zero());
    }
    loop {
        if g.edges().iter().all(|&(a, b)| assignment[a] != assignment[b]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == assignment.len() {
                return Ok(BigUint::from(count));
            }
            assignment[i] += 1;
            if assignment[i] < colors {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Smallest `k` with `P_G(k) > 0`; `None` when a loop makes coloring impossible.
pub fn chromatic_number(g: &Pseudograph) -> Option<usize> {
    let poly = chromatic_polynomial(g);
    if poly.is_zero() {
        return None;
    }
    (0..=g.order()).find(|&k| poly.eval_i64(k as i64) > BigInt::zero())
}

/// `x (x-1)^q`, the chromatic polynomial of every tree with `q` edges.
pub fn tree_chromatic(q: usize) -> IntPolynomial {
    &IntPolynomial::x() * &IntPolynomial::linear_root(1).pow(q as u32)
}

fn cycle_chromatic(n: usize) -> IntPolynomial {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let base = IntPolynomial::linear_root(1);
    &base.pow(n as u32) + &(&IntPolynomial::constant(sign) * &base)
}

/// Closed-form chromatic polynomials for the families that have one.
pub fn chromatic_family(family: Family) -> Result<IntPolynomial> {
    let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
    match family {
        Family::Null(p) if p >= 1 => Ok(IntPolynomial::monomial(1, p)),
        Family::Complete(p) if p >= 1 => Ok((0..p as i64)
            .fold(IntPolynomial::constant(1), |acc, i| &acc * &IntPolynomial::linear_root(i))),
        Family::Cycle(n) if n >= 1 => Ok(cycle_chromatic(n)),
        Family::Path(n) if n >= 1 => Ok(tree_chromatic(n - 1)),
        Family::Star(k) if k >= 1 => Ok(tree_chromatic(k)),
        Family::Fan(n) if n >= 1 => Ok(&tree_chromatic(1)
            * &IntPolynomial::linear_root(2).pow(n as u32 - 1)),
        Family::Ladder(n) if n >= 1 => Ok(&tree_chromatic(1)
            * &IntPolynomial::from_i64(&[3, -3, 1]).pow(n as u32 - 1)),
        Family::Wheel(n) if n >= 3 => {
            // P_W(x) = x * P_C(x - 1)
            let shifted = cycle_chromatic(n).compose_shift(&BigInt::from(-1));
            Ok(&IntPolynomial::x() * &shifted)
        }
        Family::Wheel(_) => bad("wheel needs at least 3 spokes"),
        Family::Null(_)
        | Family::Complete(_)
        | Family::Cycle(_)
        | Family::Path(_)
        | Family::Star(_)
        | Family::Fan(_)
        | Family::Ladder(_) => bad("family size must be positive"),
        other => bad(&format!("no closed chromatic form for {other}")),
    }
}
