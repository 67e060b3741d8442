//! Matchings, covers and arc-disjoint paths.

use std::collections::{HashMap, VecDeque};

use crate::error::{guard, Error, Result};
use crate::graph::{Digraph, Pseudograph};

/// A pseudograph with a fixed left/right split; every edge crosses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigraph {
    graph: Pseudograph,
    left: Vec<bool>,
}

impl Bigraph {
    pub fn new(graph: Pseudograph, left: Vec<bool>) -> Result<Self> {
        if left.len() != graph.order() {
            return Err(Error::InvalidParameter("side flags must cover every vertex".into()));
        }
        if graph.edges().iter().any(|&(a, b)| left[a] == left[b]) {
            return Err(Error::Precondition("an edge does not cross the bipartition".into()));
        }
        Ok(Bigraph { graph, left })
    }

    /// The first `k` vertices form the left side.
    pub fn from_parts(graph: Pseudograph, k: usize) -> Result<Self> {
        let left = (0..graph.order()).map(|v| v < k).collect();
        Self::new(graph, left)
    }

    /// Uses the two-coloring found by breadth-first search.
    pub fn from_bipartition(graph: Pseudograph) -> Result<Self> {
        let left = graph
            .bipartition()
            .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
        Self::new(graph, left)
    }

    pub fn graph(&self) -> &Pseudograph {
        &self.graph
    }

    pub fn is_left(&self, v: usize) -> bool {
        self.left[v]
    }

    pub fn left_vertices(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| self.left[v]).collect()
    }

    pub fn right_vertices(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| !self.left[v]).collect()
    }
}

/// Whether the edges share no endpoint (and contain no loop).
pub fn is_matching(g: &Pseudograph, edges: &[usize]) -> bool {
    let mut used = vec![false; g.order()];
    edges.iter().all(|&e| {
        let (a, b) = g.edges()[e];
        if a == b || used[a] || used[b] {
            return false;
        }
        used[a] = true;
        used[b] = true;
        true
    })
}

/// `mate[v]` is the matching edge at `v`.
fn mates(g: &Pseudograph, matching: &[usize]) -> Vec<Option<usize>> {
    let mut mate = vec![None; g.order()];
    for &e in matching {
        let (a, b) = g.edges()[e];
        mate[a] = Some(e);
        mate[b] = Some(e);
    }
    mate
}

fn other(g: &Pseudograph, e: usize, v: usize) -> usize {
    let (a, b) = g.edges()[e];
    if a == v {
        b
    } else {
        a
    }
}

/// Shortest M-augmenting path from an unmatched left vertex, as edge ids in
/// path order.
pub fn find_augmenting_path(bg: &Bigraph, matching: &[usize]) -> Option<Vec<usize>> {
    let g = &bg.graph;
    let mate = mates(g, matching);
    let inc = g.incidence();
    let mut via: Vec<Option<usize>> = vec![None; g.order()];
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::new();
    for v in bg.left_vertices() {
        if mate[v].is_none() {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        // v is a left vertex; leave along a non-matching edge
        for &(u, e) in &inc[v] {
            if Some(e) == mate[v] || seen[u] {
                continue;
            }
            seen[u] = true;
            via[u] = Some(e);
            match mate[u] {
                None => {
                    let mut path = vec![e];
                    let mut x = v;
                    while let Some(back) = via[x] {
                        path.push(back);
                        x = other(g, back, x);
                    }
                    path.reverse();
                    return Some(path);
                }
                Some(m) => {
                    let w = other(g, m, u);
                    if !seen[w] {
                        seen[w] = true;
                        via[w] = Some(m);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    None
}

/// Symmetric difference of a matching with an augmenting path.
pub fn augment(matching: &[usize], path: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = matching.iter().copied().filter(|e| !path.contains(e)).collect();
    out.extend(path.iter().copied().filter(|e| !matching.contains(e)));
    out.sort_unstable();
    out
}

/// Maximum matching by repeated shortest augmenting paths.
pub fn max_matching(bg: &Bigraph) -> Vec<usize> {
    let mut m = Vec::new();
    while let Some(path) = find_augmenting_path(bg, &m) {
        m = augment(&m, &path);
    }
    m
}

/// Result of the neighbor-set test on every subset of the left side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallReport {
    pub holds: bool,
    /// First left subset `W` (in mask order) with `|N(W)| < |W|`.
    pub violating_set: Option<Vec<usize>>,
    /// Whether a maximum matching saturates the left side.
    pub matching_covers_left: bool,
}

/// Largest left side accepted by [`hall_check`].
pub const HALL_LEFT_LIMIT: usize = 20;

pub fn hall_check(bg: &Bigraph) -> Result<HallReport> {
    let left = bg.left_vertices();
    guard("left side size", left.len(), HALL_LEFT_LIMIT)?;
    let nbrs: Vec<Vec<usize>> = left.iter().map(|&v| bg.graph.neighbors(v)).collect();
    let mut stamp = vec![0u32; bg.graph.order()];
    let mut violating = None;
    for mask in 1u32..1 << left.len() {
        let mut count = 0;
        for (i, ns) in nbrs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &u in ns {
                    if stamp[u] != mask {
                        stamp[u] = mask;
                        count += 1;
                    }
                }
            }
        }
        if count < mask.count_ones() {
            violating = Some((0..left.len()).filter(|i| mask >> i & 1 == 1).map(|i| left[i]).collect());
            break;
        }
    }
    let covers = max_matching(bg).len() == left.len();
    Ok(HallReport {
        holds: violating.is_none(),
        violating_set: violating,
        matching_covers_left: covers,
    })
}

/// Vertices reachable by M-alternating paths that start at unmatched vertices
/// of one side (the starting vertices included).
pub fn alternating_reachable(bg: &Bigraph, matching: &[usize], from_left: bool) -> Vec<bool> {
    let g = &bg.graph;
    let mate = mates(g, matching);
    let inc = g.incidence();
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::new();
    for v in 0..g.order() {
        if bg.left[v] == from_left && mate[v].is_none() {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        let on_start_side = bg.left[v] == from_left;
        for &(u, e) in &inc[v] {
            // start side leaves by non-matching edges, the other by matching ones
            let is_mate = Some(e) == mate[v];
            if on_start_side == is_mate || seen[u] {
                continue;
            }
            seen[u] = true;
            queue.push_back(u);
        }
    }
    seen
}

/// König's construction from a maximum matching; `|S| = |M|`.
pub fn min_vertex_cover(bg: &Bigraph) -> Vec<usize> {
    let m = max_matching(bg);
    let reach = alternating_reachable(bg, &m, true);
    let mut cover: Vec<usize> = m
        .iter()
        .map(|&e| {
            let (a, b) = bg.graph.edges()[e];
            let (l, r) = if bg.left[a] { (a, b) } else { (b, a) };
            if reach[l] {
                r
            } else {
                l
            }
        })
        .collect();
    cover.sort_unstable();
    cover
}

pub fn is_vertex_cover(g: &Pseudograph, vertices: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|(a, b)| vertices.contains(a) || vertices.contains(b))
}

/// Largest vertex count for the exact general matching search.
pub const GENERAL_MATCHING_LIMIT: usize = 40;

/// Maximum matching of an arbitrary loopless multigraph by memoized
/// branching on the lowest remaining vertex. Exponential in the worst case.
pub fn max_matching_general(g: &Pseudograph) -> Result<Vec<usize>> {
    if let Some(left) = g.bipartition() {
        return Ok(max_matching(&Bigraph::new(g.clone(), left)?));
    }
    guard("vertex count", g.order(), GENERAL_MATCHING_LIMIT)?;
    let inc = g.incidence();
    let full: u64 = if g.order() == 64 { u64::MAX } else { (1 << g.order()) - 1 };
    let mut memo: HashMap<u64, (usize, Option<usize>)> = HashMap::new();
    fn best(
        inc: &[Vec<(usize, usize)>],
        alive: u64,
        memo: &mut HashMap<u64, (usize, Option<usize>)>,
    ) -> usize {
        if alive == 0 {
            return 0;
        }
        if let Some(&(v, _)) = memo.get(&alive) {
            return v;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let mut top = (best(inc, rest, memo), None);
        for &(u, e) in &inc[v] {
            if u != v && rest >> u & 1 == 1 {
                let size = 1 + best(inc, rest & !(1 << u), memo);
                if size > top.0 {
                    top = (size, Some(e));
                }
            }
        }
        memo.insert(alive, top);
        top.0
    }
    best(&inc, full, &mut memo);
    let mut edges = Vec::new();
    let mut alive = full;
    while alive != 0 {
        let v = alive.trailing_zeros() as usize;
        match memo.get(&alive).and_then(|&(_, e)| e) {
            Some(e) => {
                edges.push(e);
                alive &= !(1 << v) & !(1 << other(g, e, v));
            }
            None => alive &= !(1 << v),
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// Maximum matching plus the lowest-index edge at each unmatched vertex.
/// Its size is `p - m`.
pub fn min_edge_cover(g: &Pseudograph) -> Result<Vec<usize>> {
    if g.order() < 2 {
        return Err(Error::Precondition("edge cover needs p >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let loopless = g.without_loops();
    let inc = loopless.incidence();
    if let Some(v) = (0..g.order()).find(|&v| inc[v].is_empty()) {
        return Err(Error::Precondition(format!("vertex {v} has no non-loop edge")));
    }
    // without_loops keeps the order of the remaining edges; map ids back
    let ids: Vec<usize> = (0..g.size()).filter(|&e| !g.is_loop(e)).collect();
    let m = max_matching_general(&loopless)?;
    let mate = mates(&loopless, &m);
    let mut cover: Vec<usize> = m.iter().map(|&e| ids[e]).collect();
    for v in 0..g.order() {
        if mate[v].is_none() {
            let e = inc[v].iter().map(|&(_, e)| e).min().expect("checked above");
            cover.push(ids[e]);
        }
    }
    cover.sort_unstable();
    cover.dedup();
    Ok(cover)
}

/// Every vertex is covered and each component of the chosen edges is a star.
pub fn is_star_cover(g: &Pseudograph, edges: &[usize]) -> bool {
    let Ok(sub) = g.edge_subgraph(edges) else {
        return false;
    };
    if sub.has_loops() || sub.degrees().contains(&0) {
        return false;
    }
    sub.components().iter().all(|comp| {
        let q = sub
            .edges()
            .iter()
            .filter(|(a, _)| comp.contains(a))
            .count();
        let center_degree = comp.iter().map(|&v| sub.degree(v)).max().unwrap_or(0);
        q + 1 == comp.len() && center_degree == q
    })
}

/// Arc-disjoint paths and a matching cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowReport {
    /// Each path as arc ids from `s` to `t`.
    pub paths: Vec<Vec<usize>>,
    /// Arcs leaving the set of vertices reachable from `s` in the residual graph.
    pub cut: Vec<usize>,
}

/// Unit-capacity augmentation: a path may run backwards along used arcs,
/// which reroutes the earlier path at that point.
pub fn edge_disjoint_paths(d: &Digraph, s: usize, t: usize) -> Result<FlowReport> {
    let p = d.order();
    for v in [s, t] {
        if v >= p {
            return Err(Error::IndexOutOfRange { index: v, limit: p });
        }
    }
    if s == t {
        return Err(Error::Precondition("source and sink must differ".into()));
    }
    let arcs = d.arcs();
    let mut out_arcs = vec![Vec::new(); p];
    let mut in_arcs = vec![Vec::new(); p];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        if a != b {
            out_arcs[a].push(i);
            in_arcs[b].push(i);
        }
    }
    let mut used = vec![false; arcs.len()];
    let residual_search = |used: &[bool]| -> (Vec<bool>, Vec<Option<(usize, bool)>>) {
        let mut seen = vec![false; p];
        let mut via: Vec<Option<(usize, bool)>> = vec![None; p];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &i in &out_arcs[v] {
                let u = arcs[i].1;
                if !used[i] && !seen[u] {
                    seen[u] = true;
                    via[u] = Some((i, true));
                    queue.push_back(u);
                }
            }
            for &i in &in_arcs[v] {
                let u = arcs[i].0;
                if used[i] && !seen[u] {
                    seen[u] = true;
                    via[u] = Some((i, false));
                    queue.push_back(u);
                }
            }
        }
        (seen, via)
    };
    loop {
        let (seen, via) = residual_search(&used);
        if !seen[t] {
            break;
        }
        let mut v = t;
        while let Some((i, forward)) = via[v] {
            used[i] = forward;
            v = if forward { arcs[i].0 } else { arcs[i].1 };
        }
    }
    let (reach, _) = residual_search(&used);
    let cut: Vec<usize> = (0..arcs.len())
        .filter(|&i| reach[arcs[i].0] && !reach[arcs[i].1])
        .collect();
    // peel paths off the flow; circuits met on the way are dropped
    let mut remaining = used.clone();
    let mut paths = Vec::new();
    loop {
        let mut path: Vec<usize> = Vec::new();
        let mut at = s;
        while at != t {
            let Some(&i) = out_arcs[at].iter().find(|&&i| remaining[i]) else {
                break;
            };
            remaining[i] = false;
            path.push(i);
            at = arcs[i].1;
            if let Some(pos) = path.iter().position(|&j| arcs[j].0 == at) {
                path.truncate(pos);
            }
        }
        if at != t {
            break;
        }
        paths.push(path);
    }
    debug_assert_eq!(paths.len(), cut.len());
    Ok(FlowReport { paths, cut })
}

/// `Ĝ`: source joined to every left vertex, left-to-right arcs for the
/// edges, every right vertex joined to the sink. Returns `(digraph, s, t)`.
pub fn marriage_network(bg: &Bigraph) -> (Digraph, usize, usize) {
    let p = bg.graph.order();
    let (s, t) = (p, p + 1);
    let mut arcs: Vec<(usize, usize)> = bg.left_vertices().into_iter().map(|l| (s, l)).collect();
    for &(a, b) in bg.graph.edges() {
        arcs.push(if bg.left[a] { (a, b) } else { (b, a) });
    }
    arcs.extend(bg.right_vertices().into_iter().map(|r| (r, t)));
    (Digraph::new(p + 2, arcs).expect("indices in range"), s, t)
}

/// The left side can be matched iff `Ĝ` carries `|L|` arc-disjoint paths.
pub fn marriage_via_mincut(bg: &Bigraph) -> bool {
    let (d, s, t) = marriage_network(bg);
    let flow = edge_disjoint_paths(&d, s, t).expect("s != t");
    flow.paths.len() == bg.left_vertices().len()
}
