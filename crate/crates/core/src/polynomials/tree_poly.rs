use num_bigint::BigInt;
use num_integer::Integer;

use super::MultiPolynomial;
use crate::error::{Error, Result};
use crate::graph::Pseudograph;
use crate::spancount::spanning_trees;

/// Non-loop edge limit for the enumeration behind the tree polynomial.
pub const TREE_POLY_EDGE_LIMIT: usize = 20;

/// `S_G = sum over spanning trees T of prod_v x_v^(deg_T(v) - 1)`.
///
/// Variable `i` is vertex `i` of `g`.
pub fn spanning_tree_polynomial(g: &Pseudograph) -> Result<MultiPolynomial> {
    let p = g.order();
    if p < 2 {
        return Err(Error::Precondition("tree polynomial needs p >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees = spanning_trees(g, TREE_POLY_EDGE_LIMIT)?;
    let mut poly = MultiPolynomial::zero(p);
    for tree in trees {
        let mut exps = vec![0u32; p];
        for &e in &tree {
            let (a, b) = g.edges()[e];
            exps[a] += 1;
            exps[b] += 1;
        }
        // every vertex of a spanning tree has degree at least 1
        exps.iter_mut().for_each(|d| *d -= 1);
        poly.add_term(exps, BigInt::from(1));
    }
    Ok(poly)
}

/// Per-vertex tree counts extracted from `S_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeQueries {
    pub vertex: usize,
    /// Trees in which `vertex` is a leaf: `S` at `x_v = 0`.
    pub leaf: BigInt,
    /// `by_degree[k]` counts trees where `vertex` has degree `k`.
    pub by_degree: Vec<BigInt>,
    pub odd_degree: BigInt,
    pub even_degree: BigInt,
}

impl TreeQueries {
    pub fn degree(&self, k: usize) -> BigInt {
        self.by_degree.get(k).cloned().unwrap_or_default()
    }
}

pub fn spanning_tree_queries(g: &Pseudograph, vertex: usize) -> Result<TreeQueries> {
    if vertex >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: vertex,
            limit: g.order(),
        });
    }
    let s = spanning_tree_polynomial(g)?;
    let leaf = s.eval_one_var(vertex, &BigInt::from(0));
    let mut by_degree = vec![BigInt::from(0)];
    for k in 1..g.order() {
        by_degree.push(s.coefficient_sum_at_exponent(vertex, k as u32 - 1));
    }
    let plus = s.eval_one_var(vertex, &BigInt::from(1));
    let minus = s.eval_one_var(vertex, &BigInt::from(-1));
    // exponent deg - 1 is even exactly when the degree is odd
    let two = BigInt::from(2);
    let odd_degree = (&plus + &minus).div_floor(&two);
    let even_degree = (&plus - &minus).div_floor(&two);
    Ok(TreeQueries {
        vertex,
        leaf,
        by_degree,
        odd_degree,
        even_degree,
    })
}
