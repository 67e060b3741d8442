//! Exact computations on finite pseudographs.
//!
//! Counts are arbitrary-precision integers and weights are exact rationals
//! throughout; nothing here touches floating point.
//!
//! Module map:
//!
//! * [`graph`]: the pseudograph model, named families, structural queries,
//!   edge-list I/O.
//! * [`spancount`]: spanning-tree counts by enumeration, deletion plus
//!   contraction, and the Kirchhoff determinant.
//! * [`polynomials`]: chromatic, matching and spanning-tree polynomials.
//! * [`egfcount`]: exponential generating functions and the exponential formula.
//! * [`ramsey`]: two-colorings of complete graphs and Ramsey bounds.
//! * [`mst`]: minimum spanning trees and the nearest-neighbor tour.
//! * [`matchflow`]: bipartite matching, covers, arc-disjoint paths.
//! * [`surfaces`]: rotation systems, face tracing, genus, Heawood bound.
//! * [`rado`]: the BIT-predicate Rado graph and random graphs.
//! * [`puzzles`]: river-crossing state graphs.

pub mod combinatorics;
pub mod egfcount;
pub mod error;
pub mod graph;
pub mod matchflow;
pub mod mst;
pub mod polynomials;
pub mod puzzles;
pub mod rado;
pub mod ramsey;
pub mod spancount;
pub mod surfaces;

pub use error::{Error, Result};
pub use graph::{make_family, Digraph, Family, Pseudograph, WeightedGraph};
pub use polynomials::{IntPolynomial, MultiPolynomial};
pub use egfcount::BigSeq;
pub use ramsey::EdgeColoring2;
pub use surfaces::RotationSystem;
