//! Pseudographs (loops and parallel edges allowed), digraphs, weighted graphs
//! and adjacency matrices.
//!
//! Every mutating operation returns a fresh value. Edge identity is the
//! position in the edge list, so `delete_edge(e)` shifts all later edges
//! down by one.

mod family;
mod io;
mod query;
pub mod random;

pub use family::{make_family, Family};
pub use io::{format_edge_list, parse_edge_list, EdgeList};
pub use query::StructureReport;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finite nonempty vertex set `0..order` with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pseudograph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Pseudograph {
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "a pseudograph needs at least one vertex".into(),
            ));
        }
        for &(a, b) in &edges {
            let worst = a.max(b);
            if worst >= order {
                return Err(Error::IndexOutOfRange {
                    index: worst,
                    limit: order,
                });
            }
        }
        Ok(Pseudograph { order, edges })
    }

    /// The null graph `N_p`: `p` vertices, no edges.
    pub fn null(order: usize) -> Result<Self> {
        Self::new(order, Vec::new())
    }

    /// Number of vertices `p`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges `q`, loops and parallels included.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::IndexOutOfRange {
            index: e,
            limit: self.edges.len(),
        })
    }

    pub fn is_loop(&self, e: usize) -> bool {
        matches!(self.edges.get(e), Some(&(a, b)) if a == b)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != b)
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: v,
                limit: self.order,
            })
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct neighbors of `v` in increasing order; `v` itself is listed
    /// when it carries a loop.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges joining `a` and `b` (loops at `a` when `a == b`).
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y)| (x == a && y == b) || (x == b && y == a))
            .count()
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Self> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        let mut edges = self.edges.clone();
        edges.push((a, b));
        Ok(Pseudograph {
            order: self.order,
            edges,
        })
    }

    /// `G - e`.
    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Pseudograph {
            order: self.order,
            edges,
        })
    }

    /// `G / e`: the endpoints merge into the smaller index, and the last
    /// vertex moves into the freed slot. An edge parallel to `e` turns into
    /// a loop.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let (a, b) = self.edge(e)?;
        if a == b {
            return Err(Error::LoopContraction(e));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let last = self.order - 1;
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v == last {
                gone
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(x, y))| (relabel(x), relabel(y)))
            .collect();
        Ok(Pseudograph {
            order: self.order - 1,
            edges,
        })
    }

    /// `G - v`: drops `v` with all incident edges; the last vertex takes
    /// over index `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.order == 1 {
            return Err(Error::InvalidParameter(
                "cannot delete the only vertex".into(),
            ));
        }
        let last = self.order - 1;
        let edges = self
            .edges
            .iter()
            .filter(|&&(x, y)| x != v && y != v)
            .map(|&(x, y)| {
                let r = |u: usize| if u == last { v } else { u };
                (r(x), r(y))
            })
            .collect();
        Ok(Pseudograph {
            order: self.order - 1,
            edges,
        })
    }

    pub fn without_loops(&self) -> Self {
        Pseudograph {
            order: self.order,
            edges: self.edges.iter().copied().filter(|&(a, b)| a != b).collect(),
        }
    }

    /// Drops loops and collapses parallel classes to a single edge. Edges
    /// come out normalized (`a < b`) and sorted.
    pub fn simplified(&self) -> Self {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != b)
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Pseudograph {
            order: self.order,
            edges,
        }
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Pseudograph) -> Self {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Pseudograph {
            order: self.order + other.order,
            edges,
        }
    }

    /// Induced subgraph on `vertices` (listed in the new label order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut map = vec![usize::MAX; self.order];
        for (new, &old) in vertices.iter().enumerate() {
            self.check_vertex(old)?;
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Pseudograph::new(vertices.len(), edges)
    }

    /// Spanning subgraph keeping only the listed edges (in that order).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let edges = keep
            .iter()
            .map(|&e| self.edge(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Pseudograph {
            order: self.order,
            edges,
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order {
            return Err(Error::InvalidParameter("permutation length".into()));
        }
        for &t in perm {
            if t >= self.order || seen[t] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[t] = true;
        }
        Ok(Pseudograph {
            order: self.order,
            edges: self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        })
    }

    /// Edge multiset in normalized, sorted form. Two graphs on the same
    /// labels are equal up to edge order iff these agree.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        v.sort_unstable();
        v
    }

    /// Adjacency matrix; a loop adds one to its diagonal entry.
    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        let mut m = vec![vec![BigUint::zero(); self.order]; self.order];
        for &(a, b) in &self.edges {
            m[a][b] += 1u32;
            if a != b {
                m[b][a] += 1u32;
            }
        }
        AdjacencyMatrix { entries: m }
    }

    /// Walks of length `n` from `i` to `j`: entry `(i, j)` of `A^n`.
    pub fn walk_count(&self, n: usize, i: usize, j: usize) -> Result<BigUint> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        let a = self.adjacency_matrix();
        let mut power = AdjacencyMatrix::identity(self.order);
        for _ in 0..n {
            power = power.mul(&a);
        }
        Ok(power.entries[i][j].clone())
    }
}

/// Square matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    pub entries: Vec<Vec<BigUint>>,
}

impl AdjacencyMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = BigUint::one();
        }
        AdjacencyMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn mul(&self, other: &AdjacencyMatrix) -> AdjacencyMatrix {
        let n = self.dim();
        let mut out = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for k in 0..n {
                let lhs = &self.entries[i][k];
                if lhs.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += lhs * &other.entries[k][j];
                }
            }
        }
        AdjacencyMatrix { entries: out }
    }
}

/// A pseudograph with one exact rational weight per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Pseudograph,
    weights: Vec<BigRational>,
}

impl WeightedGraph {
    pub fn new(graph: Pseudograph, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != graph.size() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.size()
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Convenience constructor from integer weights.
    pub fn from_integers(graph: Pseudograph, weights: &[i64]) -> Result<Self> {
        Self::new(
            graph,
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn graph(&self) -> &Pseudograph {
        &self.graph
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight(&self, e: usize) -> &BigRational {
        &self.weights[e]
    }

    /// Sum of the weights of the listed edges.
    pub fn total_weight(&self, edges: &[usize]) -> BigRational {
        edges
            .iter()
            .fold(BigRational::zero(), |acc, &e| acc + &self.weights[e])
    }

    pub fn map_weights<F: Fn(&BigRational) -> BigRational>(&self, f: F) -> WeightedGraph {
        WeightedGraph {
            graph: self.graph.clone(),
            weights: self.weights.iter().map(f).collect(),
        }
    }
}

/// Directed multigraph; arc identity is list position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    order: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(order: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "a digraph needs at least one vertex".into(),
            ));
        }
        for &(a, b) in &arcs {
            let worst = a.max(b);
            if worst >= order {
                return Err(Error::IndexOutOfRange {
                    index: worst,
                    limit: order,
                });
            }
        }
        Ok(Digraph { order, arcs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn without_arcs(&self, removed: &[usize]) -> Digraph {
        Digraph {
            order: self.order,
            arcs: self
                .arcs
                .iter()
                .enumerate()
                .filter(|(i, _)| !removed.contains(i))
                .map(|(_, &a)| a)
                .collect(),
        }
    }

    /// Whether `t` is reachable from `s` along arcs.
    pub fn reaches(&self, s: usize, t: usize) -> bool {
        let mut seen = vec![false; self.order];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            if v == t {
                return true;
            }
            for &(a, b) in &self.arcs {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Pseudograph {
        make_family(Family::Complete(3)).unwrap()
    }

    #[test]
    fn rejects_empty_vertex_set_and_bad_indices() {
        assert!(Pseudograph::new(0, vec![]).is_err());
        assert_eq!(
            Pseudograph::new(2, vec![(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, limit: 2 })
        );
    }

    #[test]
    fn delete_edge_of_triangle_leaves_path() {
        let g = k3();
        let h = g.delete_edge(1).unwrap();
        assert_eq!(h.size(), 2);
        assert!(h.is_connected());
        assert_eq!(g.size(), 3);
        assert!(g.delete_edge(3).is_err());
    }

    #[test]
    fn delete_parallel_and_loop() {
        let g = Pseudograph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.delete_edge(0).unwrap().edges(), &[(0, 1)]);
        let l = Pseudograph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(l.degree(0), 2);
        assert_eq!(l.delete_edge(0).unwrap().degree(0), 0);
    }

    #[test]
    fn contract_triangle_edge_gives_double_edge() {
        let h = k3().contract_edge(0).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.multiplicity(0, 1), 2);
    }

    #[test]
    fn contract_parallel_gives_loop() {
        let g = Pseudograph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let h = g.contract_edge(0).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(h.edges(), &[(0, 0)]);
        assert_eq!(h.contract_edge(0), Err(Error::LoopContraction(0)));
    }

    #[test]
    fn contract_path_edge() {
        let g = make_family(Family::Path(3)).unwrap();
        let h = g.contract_edge(0).unwrap();
        assert_eq!((h.order(), h.size()), (2, 1));
        assert!(!h.has_loops());
    }

    #[test]
    fn contraction_moves_last_vertex_into_freed_slot() {
        // 0-1, 1-2, 2-3; contract 0-1 frees slot 1, vertex 3 moves there
        let g = Pseudograph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.contract_edge(0).unwrap();
        assert_eq!(h.edges(), &[(0, 2), (2, 1)]);
    }

    #[test]
    fn walk_counts() {
        let g = k3();
        for i in 0..3 {
            for j in 0..3 {
                let w = g.walk_count(0, i, j).unwrap();
                assert_eq!(w, BigUint::from(u32::from(i == j)));
            }
        }
        assert_eq!(g.walk_count(2, 0, 0).unwrap(), BigUint::from(2u32));
        let d = Pseudograph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(d.walk_count(2, 0, 0).unwrap(), BigUint::from(4u32));
        assert!(d.walk_count(1, 0, 5).is_err());
    }

    #[test]
    fn adjacency_of_multigraph_is_symmetric_zero_diagonal() {
        let g = Pseudograph::new(4, vec![(0, 1), (0, 3), (1, 3), (1, 3), (1, 2)]).unwrap();
        let a = g.adjacency_matrix();
        assert!(a.is_symmetric());
        assert!((0..4).all(|i| a.entries[i][i].is_zero()));
        assert_eq!(a.entries[1][3], BigUint::from(2u32));
    }

    #[test]
    fn weighted_graph_length_check() {
        let g = k3();
        assert!(WeightedGraph::from_integers(g.clone(), &[1, 2]).is_err());
        let w = WeightedGraph::from_integers(g, &[1, 2, 3]).unwrap();
        assert_eq!(w.total_weight(&[0, 2]), BigRational::from_integer(4.into()));
    }
}
