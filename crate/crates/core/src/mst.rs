//! Minimum spanning trees over exact rational weights.
//!
//! Every algorithm orders edges by `(weight, edge index)`, so ties are broken
//! the same way everywhere and outputs are reproducible. Loops never enter a
//! tree.

use std::cmp::Ordering;
use std::collections::VecDeque;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{guard, Error, Result};
use crate::graph::{Pseudograph, WeightedGraph};

/// Disjoint-set forest with union by rank and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            Ordering::Less => self.parent[ra] = rb,
            Ordering::Greater => self.parent[rb] = ra,
            Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Edge set of a spanning tree (or forest), sorted, with its total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub edges: Vec<usize>,
    pub weight: BigRational,
}

impl SpanningTree {
    pub fn from_edges(g: &WeightedGraph, mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        let weight = g.total_weight(&edges);
        SpanningTree { edges, weight }
    }
}

fn cmp_edges(g: &WeightedGraph, a: usize, b: usize) -> Ordering {
    g.weight(a).cmp(g.weight(b)).then(a.cmp(&b))
}

fn sorted_edges(g: &WeightedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.graph().size()).filter(|&e| !g.graph().is_loop(e)).collect();
    order.sort_by(|&a, &b| cmp_edges(g, a, b));
    order
}

/// Whether `edges` is a spanning tree of `g`.
pub fn is_spanning_tree(g: &Pseudograph, edges: &[usize]) -> bool {
    if edges.len() + 1 != g.order() || edges.iter().any(|&e| e >= g.size()) {
        return false;
    }
    let mut uf = UnionFind::new(g.order());
    edges.iter().all(|&e| {
        let (a, b) = g.edges()[e];
        uf.union(a, b)
    })
}

fn need_connected(g: &WeightedGraph) -> Result<()> {
    if g.graph().is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Minimum spanning forest: one tree per component on disconnected input.
pub fn kruskal(g: &WeightedGraph) -> SpanningTree {
    let mut uf = UnionFind::new(g.graph().order());
    let chosen = sorted_edges(g)
        .into_iter()
        .filter(|&e| {
            let (a, b) = g.graph().edges()[e];
            uf.union(a, b)
        })
        .collect();
    SpanningTree::from_edges(g, chosen)
}

/// Grows one tree from `start`, always adding the cheapest edge to a new vertex.
pub fn prim(g: &WeightedGraph, start: usize) -> Result<SpanningTree> {
    let p = g.graph().order();
    if start >= p {
        return Err(Error::IndexOutOfRange { index: start, limit: p });
    }
    need_connected(g)?;
    let mut inside = vec![false; p];
    inside[start] = true;
    let mut chosen = Vec::with_capacity(p - 1);
    for _ in 1..p {
        let best = (0..g.graph().size())
            .filter(|&e| {
                let (a, b) = g.graph().edges()[e];
                inside[a] != inside[b]
            })
            .min_by(|&a, &b| cmp_edges(g, a, b))
            .expect("connected graph has a crossing edge");
        let (a, b) = g.graph().edges()[best];
        inside[a] = true;
        inside[b] = true;
        chosen.push(best);
    }
    Ok(SpanningTree::from_edges(g, chosen))
}

/// Every component adds its cheapest outgoing edge each round.
pub fn boruvka(g: &WeightedGraph) -> Result<SpanningTree> {
    need_connected(g)?;
    let p = g.graph().order();
    let mut uf = UnionFind::new(p);
    let mut chosen = Vec::with_capacity(p.saturating_sub(1));
    while chosen.len() + 1 < p {
        let mut cheapest: Vec<Option<usize>> = vec![None; p];
        for e in 0..g.graph().size() {
            let (a, b) = g.graph().edges()[e];
            let (ra, rb) = (uf.find(a), uf.find(b));
            if ra == rb {
                continue;
            }
            for r in [ra, rb] {
                let better = cheapest[r].is_none_or(|c| cmp_edges(g, e, c) == Ordering::Less);
                if better {
                    cheapest[r] = Some(e);
                }
            }
        }
        // merge in order of component representative for a fixed result
        for e in cheapest.into_iter().flatten().sorted().dedup() {
            let (a, b) = g.graph().edges()[e];
            if uf.union(a, b) {
                chosen.push(e);
            }
        }
    }
    Ok(SpanningTree::from_edges(g, chosen))
}

fn connected_with(g: &Pseudograph, alive: &[bool]) -> bool {
    let p = g.order();
    let mut adj = vec![Vec::new(); p];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if alive[e] && a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; p];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count == p
}

/// Deletes edges from heaviest to lightest unless that disconnects the graph.
pub fn reverse_delete(g: &WeightedGraph) -> Result<SpanningTree> {
    need_connected(g)?;
    let graph = g.graph();
    let mut alive: Vec<bool> = (0..graph.size()).map(|e| !graph.is_loop(e)).collect();
    for e in sorted_edges(g).into_iter().rev() {
        alive[e] = false;
        if !connected_with(graph, &alive) {
            alive[e] = true;
        }
    }
    let kept = (0..graph.size()).filter(|&e| alive[e]).collect();
    Ok(SpanningTree::from_edges(g, kept))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MstAlgorithm {
    Kruskal,
    Prim,
    Boruvka,
    ReverseDelete,
}

impl std::str::FromStr for MstAlgorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kruskal" => Ok(MstAlgorithm::Kruskal),
            "prim" => Ok(MstAlgorithm::Prim),
            "boruvka" => Ok(MstAlgorithm::Boruvka),
            "rdelete" | "reverse_delete" => Ok(MstAlgorithm::ReverseDelete),
            other => Err(Error::InvalidParameter(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Runs one algorithm; Prim starts at vertex 0. Kruskal also requires a
/// connected graph here so all four behave alike.
pub fn minimum_spanning_tree(g: &WeightedGraph, algo: MstAlgorithm) -> Result<SpanningTree> {
    match algo {
        MstAlgorithm::Kruskal => need_connected(g).map(|_| kruskal(g)),
        MstAlgorithm::Prim => prim(g, 0),
        MstAlgorithm::Boruvka => boruvka(g),
        MstAlgorithm::ReverseDelete => reverse_delete(g),
    }
}

/// Tree edges on the path between `a` and `b`.
fn tree_path(g: &Pseudograph, tree: &[usize], a: usize, b: usize) -> Vec<usize> {
    let p = g.order();
    let mut adj = vec![Vec::new(); p];
    for &e in tree {
        let (x, y) = g.edges()[e];
        adj[x].push((y, e));
        adj[y].push((x, e));
    }
    let mut via: Vec<Option<(usize, usize)>> = vec![None; p];
    let mut seen = vec![false; p];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &(u, e) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                via[u] = Some((v, e));
                queue.push_back(u);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = b;
    while let Some((prev, e)) = via[v] {
        path.push(e);
        v = prev;
    }
    path
}

/// Result of the neighbor test `T' = T - e + e'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalCheck {
    Minimal,
    /// The swap with the largest weight decrease.
    Improvable {
        remove: usize,
        add: usize,
        improved: SpanningTree,
    },
}

/// Checks every neighbor of `t`; a spanning tree is minimum iff no neighbor
/// is lighter.
pub fn is_locally_minimal(g: &WeightedGraph, t: &SpanningTree) -> Result<LocalCheck> {
    let graph = g.graph();
    if !is_spanning_tree(graph, &t.edges) {
        return Err(Error::Precondition("not a spanning tree".into()));
    }
    let mut best: Option<(BigRational, usize, usize)> = None;
    for add in 0..graph.size() {
        if graph.is_loop(add) || t.edges.binary_search(&add).is_ok() {
            continue;
        }
        let (a, b) = graph.edges()[add];
        for remove in tree_path(graph, &t.edges, a, b) {
            let gain = g.weight(remove) - g.weight(add);
            if gain > BigRational::from_integer(0.into())
                && best.as_ref().is_none_or(|(bg, _, _)| &gain > bg)
            {
                best = Some((gain, remove, add));
            }
        }
    }
    Ok(match best {
        None => LocalCheck::Minimal,
        Some((_, remove, add)) => {
            let mut edges: Vec<usize> = t.edges.iter().copied().filter(|&e| e != remove).collect();
            edges.push(add);
            LocalCheck::Improvable {
                remove,
                add,
                improved: SpanningTree::from_edges(g, edges),
            }
        }
    })
}

/// Applies improving swaps until none is left; returns the tree and the
/// number of swaps made.
pub fn descend_to_minimum(g: &WeightedGraph, t: &SpanningTree) -> Result<(SpanningTree, usize)> {
    let mut current = t.clone();
    let mut steps = 0;
    while let LocalCheck::Improvable { improved, .. } = is_locally_minimal(g, &current)? {
        current = improved;
        steps += 1;
    }
    Ok((current, steps))
}

/// For `s_e` in `S` but not `T`, an edge `t_e` of `T` not in `S` such that
/// `S - s_e + t_e` and `T + s_e - t_e` are both spanning trees.
pub fn exchange_witness(g: &Pseudograph, s: &[usize], t: &[usize], s_e: usize) -> Result<usize> {
    if !is_spanning_tree(g, s) || !is_spanning_tree(g, t) {
        return Err(Error::Precondition("S and T must be spanning trees".into()));
    }
    if !s.contains(&s_e) || t.contains(&s_e) {
        return Err(Error::Precondition("edge must lie in S and not in T".into()));
    }
    // sides of the cut left by removing s_e from S
    let mut uf = UnionFind::new(g.order());
    for &e in s.iter().filter(|&&e| e != s_e) {
        let (a, b) = g.edges()[e];
        uf.union(a, b);
    }
    let (a, b) = g.edges()[s_e];
    let witness = tree_path(g, t, a, b)
        .into_iter()
        .find(|&e| {
            let (x, y) = g.edges()[e];
            !uf.same(x, y)
        })
        .ok_or_else(|| Error::NoWitness("no crossing edge on the path".into()))?;
    let s_new: Vec<usize> = s.iter().copied().filter(|&e| e != s_e).chain([witness]).collect();
    let t_new: Vec<usize> = t.iter().copied().filter(|&e| e != witness).chain([s_e]).collect();
    debug_assert!(is_spanning_tree(g, &s_new) && is_spanning_tree(g, &t_new));
    if !is_spanning_tree(g, &s_new) || !is_spanning_tree(g, &t_new) {
        return Err(Error::NoWitness("swap did not give trees".into()));
    }
    Ok(witness)
}

/// A closed tour through every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    /// Visiting order, starting vertex first; the return edge is implied.
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub weight: BigRational,
}

fn pair_edges(g: &Pseudograph) -> Result<Vec<Vec<Option<usize>>>> {
    let p = g.order();
    if p < 3 {
        return Err(Error::Precondition("a tour needs at least 3 vertices".into()));
    }
    let mut table = vec![vec![None; p]; p];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b || table[a][b].is_some() {
            return Err(Error::NotSimple);
        }
        table[a][b] = Some(e);
        table[b][a] = Some(e);
    }
    if g.size() != p * (p - 1) / 2 {
        return Err(Error::Precondition("graph is not complete".into()));
    }
    Ok(table)
}

/// Greedy tour: always move to the nearest unvisited vertex.
pub fn nearest_neighbor_cycle(g: &WeightedGraph, start: usize) -> Result<Tour> {
    let table = pair_edges(g.graph())?;
    let p = g.graph().order();
    if start >= p {
        return Err(Error::IndexOutOfRange { index: start, limit: p });
    }
    let mut visited = vec![false; p];
    visited[start] = true;
    let mut vertices = vec![start];
    let mut edges = Vec::with_capacity(p);
    let mut here = start;
    for _ in 1..p {
        let e = (0..p)
            .filter(|&v| !visited[v])
            .map(|v| table[here][v].expect("complete"))
            .min_by(|&a, &b| cmp_edges(g, a, b))
            .expect("an unvisited vertex remains");
        let (a, b) = g.graph().edges()[e];
        here = if a == here { b } else { a };
        visited[here] = true;
        vertices.push(here);
        edges.push(e);
    }
    edges.push(table[here][start].expect("complete"));
    let weight = g.total_weight(&edges);
    Ok(Tour { vertices, edges, weight })
}

/// Lightest tour by trying every cyclic order with vertex 0 first.
pub fn best_tour_exhaustive(g: &WeightedGraph) -> Result<Tour> {
    let table = pair_edges(g.graph())?;
    let p = g.graph().order();
    guard("tour vertices", p, 10)?;
    let mut best: Option<Tour> = None;
    for rest in (1..p).permutations(p - 1) {
        let vertices: Vec<usize> = std::iter::once(0).chain(rest).collect();
        let edges: Vec<usize> = (0..p)
            .map(|i| table[vertices[i]][vertices[(i + 1) % p]].expect("complete"))
            .collect();
        let weight = g.total_weight(&edges);
        if best.as_ref().is_none_or(|b| weight < b.weight) {
            best = Some(Tour { vertices, edges, weight });
        }
    }
    Ok(best.expect("at least one tour"))
}

/// Kruskal before and after a weight map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    pub original: SpanningTree,
    pub transformed: SpanningTree,
}

impl TransformReport {
    pub fn same_edges(&self) -> bool {
        self.original.edges == self.transformed.edges
    }
}

pub fn monotone_transform_check<F>(g: &WeightedGraph, f: F) -> TransformReport
where
    F: Fn(&BigRational) -> BigRational,
{
    TransformReport {
        original: kruskal(g),
        transformed: kruskal(&g.map_weights(f)),
    }
}

/// Largest `|w|` accepted by [`pow2_transform_check`].
pub const POW2_EXPONENT_LIMIT: usize = 4096;

/// The `w -> 2^w` map, exact for integer weights.
pub fn pow2_transform_check(g: &WeightedGraph) -> Result<TransformReport> {
    for w in g.weights() {
        if !w.is_integer() {
            return Err(Error::Precondition("2^w is exact only for integer weights".into()));
        }
        let mag = w.to_integer().magnitude().clone();
        let too_big = mag > POW2_EXPONENT_LIMIT.into();
        if too_big {
            return Err(Error::GuardExceeded {
                guard: "weight magnitude",
                actual: usize::MAX,
                limit: POW2_EXPONENT_LIMIT,
            });
        }
    }
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(monotone_transform_check(g, |w| {
        let e: i32 = w.to_integer().try_into().expect("guarded");
        if e >= 0 {
            Pow::pow(&two, e as u32)
        } else {
            BigRational::one() / Pow::pow(&two, (-e) as u32)
        }
    }))
}
