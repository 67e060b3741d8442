use graphcalc::graph::random::{connected_pseudograph, permutation};
use graphcalc::mst::{
    best_tour_exhaustive, descend_to_minimum, exchange_witness, is_locally_minimal, is_spanning_tree, kruskal,
    minimum_spanning_tree, nearest_neighbor_cycle, pow2_transform_check, LocalCheck, MstAlgorithm, SpanningTree,
};
use graphcalc::{Pseudograph, WeightedGraph};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALGOS: [MstAlgorithm; 4] =
    [MstAlgorithm::Kruskal, MstAlgorithm::Prim, MstAlgorithm::Boruvka, MstAlgorithm::ReverseDelete];

fn random_weighted(seed: u64, max_p: usize) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(2..=max_p);
    let q = rng.gen_range(p - 1..=(p + 6).min(14));
    let g = connected_pseudograph(&mut rng, p, q, true, true);
    // small ranges force ties; some weights are halves
    let weights = (0..g.size())
        .map(|_| BigRational::new(BigInt::from(rng.gen_range(-3..8)), BigInt::from(rng.gen_range(1..=2))))
        .collect();
    WeightedGraph::new(g, weights).unwrap()
}

/// Every spanning tree, found by testing each `(p-1)`-subset of edges.
fn all_spanning_trees(g: &Pseudograph) -> Vec<Vec<usize>> {
    (0..g.size()).combinations(g.order() - 1).filter(|s| is_spanning_tree(g, s)).collect()
}

fn brute_minimum(g: &WeightedGraph) -> BigRational {
    all_spanning_trees(g.graph()).iter().map(|t| g.total_weight(t)).min().unwrap()
}

#[test]
fn four_algorithms_agree_with_brute_force() {
    for seed in 0..200 {
        let g = random_weighted(seed, 8);
        let best = brute_minimum(&g);
        for algo in ALGOS {
            let t = minimum_spanning_tree(&g, algo).unwrap();
            assert!(is_spanning_tree(g.graph(), &t.edges), "seed {seed} {algo:?}");
            assert_eq!(t.weight, best, "seed {seed} {algo:?}");
            assert_eq!(t.weight, g.total_weight(&t.edges));
        }
    }
}

#[test]
fn local_minimality_is_global() {
    for seed in 0..40 {
        let g = random_weighted(1000 + seed, 7);
        let trees = all_spanning_trees(g.graph());
        let best = trees.iter().map(|t| g.total_weight(t)).min().unwrap();
        for t in trees {
            let t = SpanningTree::from_edges(&g, t);
            let local = is_locally_minimal(&g, &t).unwrap() == LocalCheck::Minimal;
            assert_eq!(local, t.weight == best, "seed {seed} {:?}", t.edges);
            let (down, _) = descend_to_minimum(&g, &t).unwrap();
            assert_eq!(down.weight, best);
        }
    }
}

#[test]
fn exchange_lemma_holds() {
    for seed in 0..30 {
        let g = random_weighted(2000 + seed, 6);
        let trees = all_spanning_trees(g.graph());
        for (s, t) in trees.iter().tuple_combinations().take(200) {
            for &e in s.iter().filter(|e| !t.contains(e)) {
                let w = exchange_witness(g.graph(), s, t, e).unwrap();
                assert!(t.contains(&w) && !s.contains(&w));
                let s2: Vec<usize> = s.iter().copied().filter(|&x| x != e).chain([w]).collect();
                let t2: Vec<usize> = t.iter().copied().filter(|&x| x != w).chain([e]).collect();
                assert!(is_spanning_tree(g.graph(), &s2) && is_spanning_tree(g.graph(), &t2));
            }
        }
    }
}

#[test]
fn edge_order_does_not_change_weight() {
    for seed in 0..60 {
        let g = random_weighted(3000 + seed, 8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = permutation(&mut rng, g.graph().size());
        let mut edges = vec![(0, 0); sigma.len()];
        let mut weights = vec![BigRational::from_integer(0.into()); sigma.len()];
        for (e, &to) in sigma.iter().enumerate() {
            edges[to] = g.graph().edges()[e];
            weights[to] = g.weight(e).clone();
        }
        let h = WeightedGraph::new(Pseudograph::new(g.graph().order(), edges).unwrap(), weights).unwrap();
        for algo in ALGOS {
            assert_eq!(minimum_spanning_tree(&h, algo).unwrap().weight, kruskal(&g).weight);
        }
    }
}

#[test]
fn cheapest_edge_at_a_vertex_is_in_some_minimum_tree() {
    for seed in 0..60 {
        let g = random_weighted(4000 + seed, 7);
        let best = brute_minimum(&g);
        let graph = g.graph();
        for v in 0..graph.order() {
            let cheapest = (0..graph.size())
                .filter(|&e| !graph.is_loop(e) && (graph.edges()[e].0 == v || graph.edges()[e].1 == v))
                .min_by(|&a, &b| g.weight(a).cmp(g.weight(b)))
                .unwrap();
            let ok = all_spanning_trees(graph)
                .iter()
                .any(|t| t.contains(&cheapest) && g.total_weight(t) == best);
            assert!(ok, "seed {seed} vertex {v}");
        }
    }
}

#[test]
fn nearest_neighbor_example() {
    let k4 = Pseudograph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
    let g = WeightedGraph::from_integers(k4, &[1, 1, 5, 4, 2, 2]).unwrap();
    let nn = nearest_neighbor_cycle(&g, 0).unwrap();
    assert_eq!(nn.vertices, vec![0, 1, 2, 3]);
    assert_eq!(nn.weight, BigRational::from_integer(11.into()));
    let best = best_tour_exhaustive(&g).unwrap();
    assert_eq!(best.weight, BigRational::from_integer(9.into()));
}

#[test]
fn doubling_weights_keeps_the_tree() {
    for seed in 0..40 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = connected_pseudograph(&mut rng, 6, 10, false, true);
        let weights: Vec<i64> = (0..g.size()).map(|_| rng.gen_range(-5..20)).collect();
        let g = WeightedGraph::from_integers(g, &weights).unwrap();
        assert!(pow2_transform_check(&g).unwrap().same_edges());
    }
}
