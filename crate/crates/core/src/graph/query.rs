use std::collections::VecDeque;

use super::Pseudograph;
use crate::error::{Error, Result};

/// Summary of the structural queries on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub degrees: Vec<usize>,
    pub components: usize,
    pub connected: bool,
    /// `None` for acyclic graphs.
    pub girth: Option<usize>,
    /// `None` when disconnected.
    pub diameter: Option<usize>,
    /// Left/right flag per vertex when bipartite.
    pub bipartition: Option<Vec<bool>>,
    pub bridges: Vec<usize>,
}

impl Pseudograph {
    /// Adjacency lists of `(neighbor, edge index)`; a loop appears twice.
    pub(crate) fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.order];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    /// Component label per vertex, numbered in order of smallest member.
    pub fn component_labels(&self) -> Vec<usize> {
        let adj = self.incidence();
        let mut label = vec![usize::MAX; self.order];
        let mut next = 0;
        for s in 0..self.order {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(u, _) in &adj[v] {
                    if label[u] == usize::MAX {
                        label[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Vertex lists of each component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let labels = self.component_labels();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (v, &c) in labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Has no cycle, loops and parallel pairs included.
    pub fn is_forest(&self) -> bool {
        self.size() + self.component_count() == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order
    }

    /// Breadth-first distances from `s`.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let adj = self.incidence();
        let mut dist = vec![None; self.order];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &(u, _) in &adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.order {
            for d in self.distances_from(s) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Shortest cycle length: 1 with a loop, 2 with a parallel pair.
    pub fn girth(&self) -> Option<usize> {
        if self.has_loops() {
            return Some(1);
        }
        if self.has_parallel_edges() {
            return Some(2);
        }
        let adj = self.incidence();
        let mut best: Option<usize> = None;
        for s in 0..self.order {
            let mut dist = vec![usize::MAX; self.order];
            let mut via = vec![usize::MAX; self.order];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(u, e) in &adj[v] {
                    if e == via[v] {
                        continue;
                    }
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        via[u] = e;
                        queue.push_back(u);
                    } else {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-coloring with vertex 0 of each component on the left, or `None`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.incidence();
        let mut side: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v]?;
                for &(u, _) in &adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            stack.push(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        side.into_iter().collect()
    }

    /// Edges whose deletion increases the number of components.
    pub fn bridges(&self) -> Vec<usize> {
        let adj = self.incidence();
        let n = self.order;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, edge used to enter, next adjacency position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
                if *pos < adj[v].len() {
                    let (u, e) = adj[v][*pos];
                    *pos += 1;
                    if e == parent_edge {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        stack.push((u, e, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(w, _, _)) = stack.last() {
                        low[w] = low[w].min(low[v]);
                        if low[v] > disc[w] {
                            out.push(parent_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn structure(&self) -> StructureReport {
        let components = self.component_count();
        StructureReport {
            degrees: self.degrees(),
            components,
            connected: components == 1,
            girth: self.girth(),
            diameter: self.diameter().ok(),
            bipartition: self.bipartition(),
            bridges: self.bridges(),
        }
    }
}
