//! Graph polynomials over the integers.
//!
//! Univariate values print as `c0 c1 c2 ...`; multivariate values print one
//! `exponent-vector:coefficient` line per monomial.

mod chromatic;
mod int_poly;
mod matching;
mod multi_poly;
mod tree_poly;

pub use chromatic::{
    chromatic_family, chromatic_number, chromatic_polynomial, count_colorings_bruteforce,
    tree_chromatic,
};
pub use int_poly::IntPolynomial;
pub use matching::{
    coefficients_u64, count_matchings_bruteforce, matching_polynomial, matching_stats,
    MatchingStats,
};
pub use multi_poly::MultiPolynomial;
pub use tree_poly::{
    spanning_tree_polynomial, spanning_tree_queries, TreeQueries, TREE_POLY_EDGE_LIMIT,
};
