//! Spanning-tree counting.
//!
//! Three independent routes to `s(G)`:
//!
//! * [`count_trees_bruteforce`] enumerates edge subsets of size `p - 1`,
//! * [`count_trees_dpc`] runs the deletion-plus-contraction recursion
//!   `s(G) = s(G - e) + s(G / e)` with loop, end-vertex and bridge shortcuts,
//! * [`count_trees_matrix`] takes the determinant of the Kirchhoff minor.
//!
//! The single-vertex graph has exactly one spanning tree (the empty one).

mod closed;
mod matrix;

pub use closed::{closed_form, fibonacci, lucas, ClosedForm};
pub use matrix::{count_trees_matrix, det_exact, kirchhoff_matrix, kirchhoff_minor, KirchhoffMinor};

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{guard, Result};
use crate::graph::Pseudograph;

/// Largest number of non-loop edges the enumeration oracle accepts.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 24;

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn is_spanning_tree(order: usize, edges: &[(usize, usize)], subset: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..order).collect();
    for &e in subset {
        let (a, b) = edges[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Every spanning tree as a sorted list of edge indices. Loops never appear.
pub fn spanning_trees(g: &Pseudograph, edge_limit: usize) -> Result<Vec<Vec<usize>>> {
    let candidates: Vec<usize> = (0..g.size()).filter(|&e| !g.is_loop(e)).collect();
    guard("non-loop edge count", candidates.len(), edge_limit)?;
    let p = g.order();
    if p == 1 {
        return Ok(vec![Vec::new()]);
    }
    Ok(candidates
        .into_iter()
        .combinations(p - 1)
        .filter(|subset| is_spanning_tree(p, g.edges(), subset))
        .collect())
}

/// Enumeration oracle: counts `(p-1)`-edge subsets that form a tree.
pub fn count_trees_bruteforce(g: &Pseudograph) -> Result<BigUint> {
    Ok(BigUint::from(
        spanning_trees(g, BRUTE_FORCE_EDGE_LIMIT)?.len(),
    ))
}

/// Memo table keyed by `(p, sorted degree sequence)`; each bucket stores the
/// degree-relabeled edge multiset so lookups compare exact graphs.
type MemoKey = (usize, Vec<usize>);
type EdgeSet = Vec<(usize, usize)>;

#[derive(Default)]
pub(crate) struct GraphMemo<V> {
    table: HashMap<MemoKey, Vec<(EdgeSet, V)>>,
}

impl<V: Clone> GraphMemo<V> {
    fn key(g: &Pseudograph) -> (MemoKey, EdgeSet) {
        let deg = g.degrees();
        let adj = g.incidence();
        let mut order: Vec<usize> = (0..g.order()).collect();
        let refine: Vec<(usize, Vec<usize>)> = (0..g.order())
            .map(|v| {
                let mut nd: Vec<usize> = adj[v].iter().map(|&(u, _)| deg[u]).collect();
                nd.sort_unstable();
                (deg[v], nd)
            })
            .collect();
        order.sort_by(|&a, &b| refine[a].cmp(&refine[b]).then(a.cmp(&b)));
        let mut perm = vec![0; g.order()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let relabeled = g.relabel(&perm).expect("valid permutation");
        let mut sorted_deg = deg;
        sorted_deg.sort_unstable();
        ((g.order(), sorted_deg), relabeled.edge_multiset())
    }

    pub(crate) fn get(&self, g: &Pseudograph) -> (Option<V>, MemoSlot) {
        let (k, edges) = Self::key(g);
        let hit = self
            .table
            .get(&k)
            .and_then(|bucket| bucket.iter().find(|(e, _)| *e == edges))
            .map(|(_, v)| v.clone());
        (hit, MemoSlot { key: k, edges })
    }

    pub(crate) fn put(&mut self, slot: MemoSlot, value: V) {
        self.table
            .entry(slot.key)
            .or_default()
            .push((slot.edges, value));
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.table.values().map(Vec::len).sum()
    }
}

pub(crate) struct MemoSlot {
    key: (usize, Vec<usize>),
    edges: Vec<(usize, usize)>,
}

/// Removes end vertices until none is left. Returns `None` when an isolated
/// vertex shows up in a graph with more than one vertex.
fn strip_end_vertices(mut g: Pseudograph) -> Option<Pseudograph> {
    loop {
        if g.order() == 1 {
            return Some(g);
        }
        let deg = g.degrees();
        if deg.contains(&0) {
            return None;
        }
        match deg.iter().position(|&d| d == 1) {
            Some(v) => g = g.delete_vertex(v).expect("order > 1"),
            None => return Some(g),
        }
    }
}

/// Deletion-plus-contraction count.
pub fn count_trees_dpc(g: &Pseudograph) -> BigUint {
    let mut memo = GraphMemo::default();
    dpc(g.without_loops(), &mut memo)
}

fn dpc(g: Pseudograph, memo: &mut GraphMemo<BigUint>) -> BigUint {
    let Some(g) = strip_end_vertices(g) else {
        return BigUint::zero();
    };
    if g.order() == 1 {
        return BigUint::one();
    }
    if !g.is_connected() {
        return BigUint::zero();
    }
    if g.order() == 2 {
        return BigUint::from(g.size());
    }
    if let Some(&bridge) = g.bridges().first() {
        let rest = g.delete_edge(bridge).expect("bridge index valid");
        return rest
            .components()
            .iter()
            .map(|part| dpc(rest.induced_subgraph(part).expect("valid part"), memo))
            .product();
    }
    let (hit, slot) = memo.get(&g);
    if let Some(v) = hit {
        return v;
    }
    let deg = g.degrees();
    let hub = (0..g.order()).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap();
    let pivot = g.incident_edges(hub)[0];
    let deleted = g.delete_edge(pivot).expect("pivot valid");
    let contracted = g.contract_edge(pivot).expect("loop-free").without_loops();
    let value = dpc(deleted, memo) + dpc(contracted, memo);
    memo.put(slot, value.clone());
    value
}
