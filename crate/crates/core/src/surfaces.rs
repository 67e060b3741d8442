//! Orientable embeddings as rotation systems, face tracing, and the
//! counting bounds for graphs on the torus and higher surfaces.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Pseudograph;

/// One end of an edge. Side 0 sits at the first listed endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub side: u8,
}

impl Dart {
    pub fn opposite(self) -> Dart {
        Dart {
            edge: self.edge,
            side: 1 - self.side,
        }
    }

    pub fn vertex(self, g: &Pseudograph) -> usize {
        let (a, b) = g.edges()[self.edge];
        if self.side == 0 {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tick = if self.side == 0 { "" } else { "'" };
        write!(f, "{}{}", self.edge, tick)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    base: Pseudograph,
    rotation: Vec<Vec<Dart>>,
}

impl RotationSystem {
    /// From the cyclic edge order at each vertex. A loop is listed twice;
    /// its first occurrence is side 0.
    pub fn from_edge_orders(base: Pseudograph, orders: &[Vec<usize>]) -> Result<Self> {
        if orders.len() != base.order() {
            return Err(Error::InvalidParameter(format!(
                "{} rotation lines for {} vertices",
                orders.len(),
                base.order()
            )));
        }
        let mut seen = vec![[false; 2]; base.size()];
        let mut rotation = Vec::with_capacity(orders.len());
        for (v, order) in orders.iter().enumerate() {
            let mut darts = Vec::with_capacity(order.len());
            for &e in order {
                let (a, b) = base.edge(e)?;
                let side = if a == b {
                    usize::from(seen[e][0])
                } else if v == a {
                    0
                } else if v == b {
                    1
                } else {
                    return Err(Error::InvalidParameter(format!("edge {e} is not incident to vertex {v}")));
                };
                if seen[e][side] {
                    return Err(Error::InvalidParameter(format!("edge {e} listed too often at vertex {v}")));
                }
                seen[e][side] = true;
                darts.push(Dart { edge: e, side: side as u8 });
            }
            rotation.push(darts);
        }
        if let Some(e) = seen.iter().position(|s| !(s[0] && s[1])) {
            return Err(Error::InvalidParameter(format!("edge {e} is missing an end")));
        }
        Ok(RotationSystem { base, rotation })
    }

    /// From the cyclic neighbor order at each vertex of a simple graph.
    pub fn from_neighbor_orders(base: Pseudograph, orders: &[Vec<usize>]) -> Result<Self> {
        if !base.is_simple() {
            return Err(Error::NotSimple);
        }
        let edge_orders = orders
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                nbrs.iter()
                    .map(|&u| {
                        base.edges()
                            .iter()
                            .position(|&(a, b)| (a, b) == (v, u) || (a, b) == (u, v))
                            .ok_or_else(|| Error::InvalidParameter(format!("{v} and {u} are not adjacent")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_edge_orders(base, &edge_orders)
    }

    /// Incident edges in increasing index order at every vertex.
    pub fn default_for(base: Pseudograph) -> Self {
        let rotation = (0..base.order()).map(|v| sorted_darts(&base, v)).collect();
        RotationSystem { base, rotation }
    }

    /// Uniformly shuffles every vertex's rotation.
    pub fn random<R: Rng>(base: Pseudograph, rng: &mut R) -> Self {
        let mut rs = Self::default_for(base);
        for darts in &mut rs.rotation {
            darts.shuffle(rng);
        }
        rs
    }

    pub fn base(&self) -> &Pseudograph {
        &self.base
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotation[v]
    }

    /// Rotation lines as edge indices, the format [`parse_rotation`] reads.
    pub fn edge_orders(&self) -> Vec<Vec<usize>> {
        self.rotation
            .iter()
            .map(|ds| ds.iter().map(|d| d.edge).collect())
            .collect()
    }

    fn successor_table(&self) -> Vec<[Dart; 2]> {
        let filler = Dart { edge: 0, side: 0 };
        let mut next = vec![[filler; 2]; self.base.size()];
        for darts in &self.rotation {
            for (i, d) in darts.iter().enumerate() {
                next[d.edge][d.side as usize] = darts[(i + 1) % darts.len()];
            }
        }
        next
    }
}

fn sorted_darts(g: &Pseudograph, v: usize) -> Vec<Dart> {
    let mut out = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == v {
            out.push(Dart { edge: e, side: 0 });
        }
        if b == v {
            out.push(Dart { edge: e, side: 1 });
        }
    }
    out
}

/// Reads one line per vertex of whitespace-separated edge indices; `#` starts
/// a comment and blank lines are skipped.
pub fn parse_rotation(base: Pseudograph, text: &str) -> Result<RotationSystem> {
    let mut orders = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let order = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: n + 1,
                    col: raw.find(tok).unwrap_or(0) + 1,
                    msg: format!("bad edge index {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        orders.push(order);
    }
    // isolated vertices have empty lines, which are easy to drop by accident
    while orders.len() < base.order() && base.size() == 0 {
        orders.push(Vec::new());
    }
    RotationSystem::from_edge_orders(base, &orders)
}

/// Each face is the cyclic list of darts it follows (a dart stands for its
/// edge traversed away from that end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub faces: Vec<Vec<Dart>>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

/// Orbits of "cross the edge, then turn to the next end in the rotation".
pub fn trace_faces(rs: &RotationSystem) -> Result<Faces> {
    let g = &rs.base;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.size() == 0 {
        return Ok(Faces { faces: vec![Vec::new()] });
    }
    let next = rs.successor_table();
    let mut done = vec![[false; 2]; g.size()];
    let mut faces = Vec::new();
    for e in 0..g.size() {
        for side in 0..2u8 {
            if done[e][side as usize] {
                continue;
            }
            let start = Dart { edge: e, side };
            let mut face = Vec::new();
            let mut d = start;
            loop {
                done[d.edge][d.side as usize] = true;
                face.push(d);
                let far = d.opposite();
                d = next[far.edge][far.side as usize];
                if d == start {
                    break;
                }
            }
            faces.push(face);
        }
    }
    Ok(Faces { faces })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerReport {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub chi: i64,
    pub genus: u64,
}

/// `chi = p - q + r = 2 - 2g`.
pub fn euler_genus(rs: &RotationSystem) -> Result<EulerReport> {
    let r = trace_faces(rs)?.count();
    let (p, q) = (rs.base.order(), rs.base.size());
    let chi = p as i64 - q as i64 + r as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0, "chi = {chi}");
    Ok(EulerReport {
        p,
        q,
        r,
        chi,
        genus: ((2 - chi) / 2) as u64,
    })
}

/// Upper limit on the number of rotation systems [`min_genus_embedding`] visits.
pub const EMBEDDING_SEARCH_LIMIT: u128 = 2_000_000;

/// Number of distinct rotation systems: product of `(deg - 1)!`.
pub fn rotation_system_count(g: &Pseudograph) -> u128 {
    g.degrees()
        .iter()
        .map(|&d| (1..d.max(1) as u128).product::<u128>())
        .fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Exhaustive search for a rotation system with the most faces, which is an
/// embedding of least orientable genus. The first dart at each vertex stays
/// fixed since rotations are cyclic.
pub fn min_genus_embedding(g: &Pseudograph) -> Result<(RotationSystem, EulerReport)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let total = rotation_system_count(g);
    if total > EMBEDDING_SEARCH_LIMIT {
        return Err(Error::GuardExceeded {
            guard: "rotation systems",
            actual: usize::try_from(total).unwrap_or(usize::MAX),
            limit: EMBEDDING_SEARCH_LIMIT as usize,
        });
    }
    let mut rs = RotationSystem::default_for(g.clone());
    let tails: Vec<Vec<Vec<Dart>>> = rs
        .rotation
        .iter()
        .map(|ds| permutations(ds.get(1..).unwrap_or(&[])))
        .collect();
    let mut idx = vec![0usize; g.order()];
    let mut best: Option<(RotationSystem, EulerReport)> = None;
    loop {
        for v in 0..g.order() {
            if let Some(first) = rs.rotation[v].first().copied() {
                let mut ds = vec![first];
                ds.extend_from_slice(&tails[v][idx[v]]);
                rs.rotation[v] = ds;
            }
        }
        let rep = euler_genus(&rs)?;
        if best.as_ref().is_none_or(|(_, b)| rep.r > b.r) {
            best = Some((rs.clone(), rep));
        }
        // odometer over the per-vertex permutation lists
        let mut v = 0;
        loop {
            if v == g.order() {
                return Ok(best.expect("at least one system"));
            }
            idx[v] += 1;
            if idx[v] < tails[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn permutations(items: &[Dart]) -> Vec<Vec<Dart>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToroidalCheck {
    pub p: usize,
    pub q: usize,
    pub q_le_3p: bool,
    /// `None` when some cycle is shorter than 4.
    pub girth4_q_le_2p: Option<bool>,
}

impl ToroidalCheck {
    /// Passing both counts does not imply the graph embeds in the torus.
    pub fn possibly_toroidal(&self) -> bool {
        self.q_le_3p && self.girth4_q_le_2p != Some(false)
    }

    pub fn verdict(&self) -> &'static str {
        if self.possibly_toroidal() {
            "possibly toroidal"
        } else {
            "not toroidal"
        }
    }
}

/// Edge-count conditions every simple toroidal graph satisfies.
pub fn toroidal_necessary(g: &Pseudograph) -> Result<ToroidalCheck> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let (p, q) = (g.order(), g.size());
    let girth4 = g.girth().is_none_or(|c| c >= 4);
    Ok(ToroidalCheck {
        p,
        q,
        q_le_3p: q <= 3 * p,
        girth4_q_le_2p: girth4.then_some(q <= 2 * p),
    })
}

/// `floor((7 + sqrt(1 + 48 g)) / 2)`. At `g = 0` this gives 4, which agrees
/// with the planar case only by accident of the formula.
pub fn heawood_bound(genus: u64) -> u64 {
    (7 + (1 + 48 * genus).isqrt()) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    DeleteVertex(usize),
    DeleteEdge(usize),
    ContractEdge(usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorOp::DeleteVertex(v) => write!(f, "delete vertex {v}"),
            MinorOp::DeleteEdge(e) => write!(f, "delete edge {e}"),
            MinorOp::ContractEdge(e) => write!(f, "contract edge {e}"),
        }
    }
}

pub fn apply_minor_op(g: &Pseudograph, op: MinorOp) -> Result<Pseudograph> {
    match op {
        MinorOp::DeleteVertex(v) => g.delete_vertex(v),
        MinorOp::DeleteEdge(e) => g.delete_edge(e),
        MinorOp::ContractEdge(e) => g.contract_edge(e),
    }
}

/// Operations taking `g` to one vertex carrying one loop, or `None` for a
/// forest (whose minors are all forests).
pub fn minor_chain_demo(g: &Pseudograph) -> Option<Vec<MinorOp>> {
    if !g.has_loops() && g.is_forest() {
        return None;
    }
    let mut h = g.clone();
    let mut ops = Vec::new();
    let mut step = |h: &mut Pseudograph, op: MinorOp| {
        *h = apply_minor_op(h, op).expect("valid minor step");
        ops.push(op);
    };
    while !h.has_loops() {
        // an edge on a cycle; contracting it shortens that cycle
        let bridges = h.bridges();
        let e = (0..h.size()).find(|e| !bridges.contains(e)).expect("graph has a cycle");
        step(&mut h, MinorOp::ContractEdge(e));
    }
    while h.size() > 1 {
        let keep = (0..h.size()).find(|&e| h.is_loop(e)).expect("loop present");
        let drop = if keep == 0 { 1 } else { 0 };
        step(&mut h, MinorOp::DeleteEdge(drop));
    }
    while h.order() > 1 {
        let at = h.edges()[0].0;
        let drop = if at == 0 { 1 } else { 0 };
        step(&mut h, MinorOp::DeleteVertex(drop));
    }
    debug_assert!(h.order() == 1 && h.size() == 1 && h.is_loop(0));
    Some(ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    pub(crate) fn k7_torus() -> RotationSystem {
        let g = make_family(Family::Complete(7)).unwrap();
        let orders: Vec<Vec<usize>> = (0..7)
            .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|d| (i + d) % 7).collect())
            .collect();
        RotationSystem::from_neighbor_orders(g, &orders).unwrap()
    }

    #[test]
    fn k7_is_toroidal() {
        let rs = k7_torus();
        let faces = trace_faces(&rs).unwrap();
        assert_eq!(faces.count(), 14);
        assert!(faces.lengths().iter().all(|&l| l == 3));
        let rep = euler_genus(&rs).unwrap();
        assert_eq!((rep.chi, rep.genus), (0, 1));
    }

    #[test]
    fn loops() {
        let one = Pseudograph::new(1, vec![(0, 0)]).unwrap();
        let rs = RotationSystem::from_edge_orders(one, &[vec![0, 0]]).unwrap();
        assert_eq!(trace_faces(&rs).unwrap().count(), 2);
        let two = Pseudograph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let torus = RotationSystem::from_edge_orders(two.clone(), &[vec![0, 1, 0, 1]]).unwrap();
        let rep = euler_genus(&torus).unwrap();
        assert_eq!((rep.r, rep.chi, rep.genus), (1, 0, 1));
        let flat = RotationSystem::from_edge_orders(two, &[vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(euler_genus(&flat).unwrap().genus, 0);
    }

    #[test]
    fn k4_planar() {
        let k4 = make_family(Family::Complete(4)).unwrap();
        let (rs, rep) = min_genus_embedding(&k4).unwrap();
        assert_eq!((rep.r, rep.genus), (4, 0));
        assert_eq!(trace_faces(&rs).unwrap().lengths().iter().sum::<usize>(), 12);
    }

    #[test]
    fn rotation_parsing() {
        let g = Pseudograph::new(2, vec![(0, 1)]).unwrap();
        let rs = parse_rotation(g.clone(), "0\n0\n").unwrap();
        assert_eq!(trace_faces(&rs).unwrap().count(), 1);
        assert!(parse_rotation(g.clone(), "0\n").is_err());
        assert!(parse_rotation(g, "0\nx\n").is_err());
        let bad = Pseudograph::new(2, vec![(0, 1)]).unwrap();
        assert!(RotationSystem::from_edge_orders(bad, &[vec![0], vec![0, 0]]).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(heawood_bound(0), 4);
        assert_eq!(heawood_bound(1), 7);
        assert_eq!(heawood_bound(2), 8);
        let k8 = toroidal_necessary(&make_family(Family::Complete(8)).unwrap()).unwrap();
        assert_eq!(k8.verdict(), "not toroidal");
        let k7 = toroidal_necessary(&make_family(Family::Complete(7)).unwrap()).unwrap();
        assert!(k7.possibly_toroidal());
        let k44 = toroidal_necessary(&make_family(Family::CompleteBipartite(4, 4)).unwrap()).unwrap();
        assert_eq!(k44.girth4_q_le_2p, Some(true));
        let k55 = toroidal_necessary(&make_family(Family::CompleteBipartite(5, 5)).unwrap()).unwrap();
        assert!(k55.q_le_3p && !k55.possibly_toroidal());
    }

    #[test]
    fn minor_chains() {
        assert!(minor_chain_demo(&make_family(Family::Path(5)).unwrap()).is_none());
        let c3 = make_family(Family::Cycle(3)).unwrap();
        let ops = minor_chain_demo(&c3).unwrap();
        assert_eq!(ops, vec![MinorOp::ContractEdge(0), MinorOp::ContractEdge(0)]);
        let k4 = make_family(Family::Complete(4)).unwrap();
        let ops = minor_chain_demo(&k4).unwrap();
        let end = ops.iter().fold(k4, |h, &op| apply_minor_op(&h, op).unwrap());
        assert_eq!((end.order(), end.size(), end.is_loop(0)), (1, 1, true));
    }
}
