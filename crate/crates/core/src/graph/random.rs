//! Seeded random instance generators used by tests, benches and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Digraph, Pseudograph};

/// Connected pseudograph on `order` vertices with `size >= order - 1` edges:
/// a random spanning tree plus extra edges, which may be loops or parallels
/// when the flags allow.
pub fn connected_pseudograph<R: Rng>(
    rng: &mut R,
    order: usize,
    size: usize,
    loops: bool,
    parallels: bool,
) -> Pseudograph {
    assert!(order >= 1 && size + 1 >= order);
    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(rng);
    let mut edges = Vec::with_capacity(size);
    for i in 1..order {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j]));
    }
    let max_simple = order * (order - 1) / 2;
    let mut attempts = 0;
    while edges.len() < size {
        attempts += 1;
        let a = rng.gen_range(0..order);
        let b = rng.gen_range(0..order);
        if a == b && !loops {
            // a one-vertex graph can only grow through loops
            if order == 1 || attempts > 10_000 {
                break;
            }
            continue;
        }
        if !parallels && a != b {
            let dup = edges
                .iter()
                .any(|&(x, y)| (x == a && y == b) || (x == b && y == a));
            if dup {
                if edges.iter().filter(|&&(x, y)| x != y).count() >= max_simple {
                    break;
                }
                continue;
            }
        }
        edges.push((a, b));
    }
    Pseudograph::new(order, edges).expect("indices in range")
}

/// Erdős–Rényi style simple graph: each pair present with probability `num/den`.
pub fn simple_graph<R: Rng>(rng: &mut R, order: usize, num: u64, den: u64) -> Pseudograph {
    let mut edges = Vec::new();
    for i in 0..order {
        for j in i + 1..order {
            if rng.gen_range(0..den) < num {
                edges.push((i, j));
            }
        }
    }
    Pseudograph::new(order.max(1), edges).expect("indices in range")
}

/// Bipartite graph with left part `0..left` and right part `left..left+right`.
pub fn bigraph<R: Rng>(rng: &mut R, left: usize, right: usize, num: u64, den: u64) -> Pseudograph {
    let mut edges = Vec::new();
    for i in 0..left {
        for j in 0..right {
            if rng.gen_range(0..den) < num {
                edges.push((i, left + j));
            }
        }
    }
    Pseudograph::new((left + right).max(1), edges).expect("indices in range")
}

/// Digraph with `arcs` uniformly random arcs, no self-loops.
pub fn digraph<R: Rng>(rng: &mut R, order: usize, arcs: usize) -> Digraph {
    assert!(order >= 2);
    let mut out = Vec::with_capacity(arcs);
    while out.len() < arcs {
        let a = rng.gen_range(0..order);
        let b = rng.gen_range(0..order);
        if a != b {
            out.push((a, b));
        }
    }
    Digraph::new(order, out).expect("indices in range")
}

/// Random permutation of `0..n`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
