use graphcalc::graph::random::{bigraph, connected_pseudograph, digraph};
use graphcalc::matchflow::{
    augment, edge_disjoint_paths, find_augmenting_path, hall_check, is_matching, is_star_cover, is_vertex_cover,
    marriage_via_mincut, max_matching, max_matching_general, min_edge_cover, min_vertex_cover, Bigraph,
};
use graphcalc::{Digraph, Pseudograph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest matching by trying both options for every edge.
fn brute_matching(g: &Pseudograph) -> usize {
    fn go(edges: &[(usize, usize)], used: u64) -> usize {
        let Some((&(a, b), rest)) = edges.split_first() else { return 0 };
        let skip = go(rest, used);
        if a != b && used >> a & 1 == 0 && used >> b & 1 == 0 {
            skip.max(1 + go(rest, used | 1 << a | 1 << b))
        } else {
            skip
        }
    }
    go(g.edges(), 0)
}

fn brute_vertex_cover(g: &Pseudograph) -> usize {
    (0u32..1 << g.order())
        .filter(|s| g.edges().iter().all(|&(a, b)| s >> a & 1 == 1 || s >> b & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn brute_edge_cover(g: &Pseudograph) -> usize {
    let full = (1u64 << g.order()) - 1;
    (0u32..1 << g.size())
        .filter(|mask| {
            let covered = (0..g.size())
                .filter(|e| mask >> e & 1 == 1)
                .fold(0u64, |acc, e| acc | 1 << g.edges()[e].0 | 1 << g.edges()[e].1);
            covered == full
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

fn random_bigraph(rng: &mut ChaCha8Rng, max_side: usize) -> Bigraph {
    let l = rng.gen_range(1..=max_side);
    let r = rng.gen_range(1..=max_side);
    let num = rng.gen_range(1..=3);
    let g = bigraph(rng, l, r, num, 4);
    Bigraph::from_parts(g, l).unwrap()
}

#[test]
fn konig_equality() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let bg = random_bigraph(&mut rng, 6);
        let g = bg.graph();
        let m = max_matching(&bg);
        let cover = min_vertex_cover(&bg);
        assert!(is_matching(g, &m));
        assert!(is_vertex_cover(g, &cover));
        assert_eq!(m.len(), brute_matching(g));
        assert_eq!(cover.len(), brute_vertex_cover(g));
        assert_eq!(m.len(), cover.len());
        assert!(find_augmenting_path(&bg, &m).is_none());
    }
}

#[test]
fn augmenting_paths_grow_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let bg = random_bigraph(&mut rng, 6);
        let mut m = Vec::new();
        while let Some(path) = find_augmenting_path(&bg, &m) {
            let next = augment(&m, &path);
            assert_eq!(next.len(), m.len() + 1);
            assert!(is_matching(bg.graph(), &next));
            m = next;
        }
        assert_eq!(m.len(), brute_matching(bg.graph()));
    }
}

#[test]
fn matching_plus_edge_cover_is_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let p = rng.gen_range(2..=8);
        let q = rng.gen_range(p - 1..=14);
        let g = connected_pseudograph(&mut rng, p, q, false, true);
        let m = max_matching_general(&g).unwrap();
        let cover = min_edge_cover(&g).unwrap();
        assert!(is_matching(&g, &m));
        assert_eq!(m.len(), brute_matching(&g));
        assert_eq!(cover.len(), brute_edge_cover(&g));
        assert_eq!(m.len() + cover.len(), p);
        assert!(is_star_cover(&g, &cover));
    }
}

#[test]
fn cubic_graph_without_perfect_matching() {
    // a center joined to three copies of K_4 with one edge subdivided
    let mut edges = Vec::new();
    for k in 0..3 {
        let base = 1 + 5 * k;
        let (a, b, c, d, e) = (base, base + 1, base + 2, base + 3, base + 4);
        edges.extend([(0, a), (a, b), (a, c), (b, d), (b, e), (c, d), (c, e), (d, e)]);
    }
    let g = Pseudograph::new(16, edges).unwrap();
    assert!(g.degrees().iter().all(|&d| d == 3));
    assert!(g.is_connected());
    assert_eq!(max_matching_general(&g).unwrap().len(), 7);
    assert_eq!(min_edge_cover(&g).unwrap().len(), 9);
}

/// Smallest number of arcs leaving a vertex set that holds `s` but not `t`.
fn brute_min_cut(d: &Digraph, s: usize, t: usize) -> usize {
    (0u32..1 << d.order())
        .filter(|set| set >> s & 1 == 1 && set >> t & 1 == 0)
        .map(|set| d.arcs().iter().filter(|&&(a, b)| set >> a & 1 == 1 && set >> b & 1 == 0).count())
        .min()
        .unwrap()
}

fn reaches(d: &Digraph, s: usize, t: usize) -> bool {
    let mut seen = vec![false; d.order()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in d.arcs() {
            if a == v && !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen[t]
}

#[test]
fn menger_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let p = rng.gen_range(2..=8);
        let arcs = rng.gen_range(1..=18);
        let d = digraph(&mut rng, p, arcs);
        let s = rng.gen_range(0..p);
        let t = (s + rng.gen_range(1..p)) % p;
        let flow = edge_disjoint_paths(&d, s, t).unwrap();
        let k = brute_min_cut(&d, s, t);
        assert_eq!(flow.paths.len(), k);
        assert_eq!(flow.cut.len(), k);
        let mut used = vec![false; d.arcs().len()];
        for path in &flow.paths {
            let mut at = s;
            for &arc in path {
                assert!(!used[arc], "arc reused");
                used[arc] = true;
                assert_eq!(d.arcs()[arc].0, at);
                at = d.arcs()[arc].1;
            }
            assert_eq!(at, t);
        }
        assert!(!reaches(&d.without_arcs(&flow.cut), s, t));
    }
}

#[test]
fn marriage_agrees_with_hall() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..500 {
        let bg = random_bigraph(&mut rng, 7);
        let hall = hall_check(&bg).unwrap();
        // the subset check written out directly
        let left = bg.left_vertices();
        let direct = (1u32..1 << left.len()).all(|w| {
            let mut nbrs = std::collections::BTreeSet::new();
            for (i, &v) in left.iter().enumerate() {
                if w >> i & 1 == 1 {
                    nbrs.extend(bg.graph().neighbors(v));
                }
            }
            nbrs.len() >= w.count_ones() as usize
        });
        assert_eq!(hall.holds, direct);
        assert_eq!(marriage_via_mincut(&bg), direct);
        assert_eq!(hall.matching_covers_left, direct);
        if let Some(w) = hall.violating_set {
            let nbrs: std::collections::BTreeSet<usize> = w.iter().flat_map(|&v| bg.graph().neighbors(v)).collect();
            assert!(nbrs.len() < w.len());
        }
    }
}
