use std::collections::HashSet;

use graphcalc::puzzles::{build_state_graph, solutions, Puzzle, StateGraph};

fn mc(m: u32, c: u32, cap: u32) -> StateGraph {
    build_state_graph(Puzzle::Missionaries { missionaries: m, cannibals: c, capacity: cap }).unwrap()
}

/// Parses `cl_ml*||cr_mr` labels into (left cannibals, left missionaries, boat on left).
fn parse_mc(label: &str) -> (u32, u32, bool) {
    let boat_left = label.contains("*||");
    let clean = label.replace('*', "");
    let (left, _) = clean.split_once("||").unwrap();
    let (c, m) = left.split_once('_').unwrap();
    (c.parse().unwrap(), m.parse().unwrap(), boat_left)
}

#[test]
fn wolf_goat_cabbage_facts() {
    let sg = build_state_graph(Puzzle::Wgc).unwrap();
    assert_eq!(sg.graph.order(), 10);
    let sol = solutions(&sg);
    assert_eq!(sol.shortest, Some(7));
    assert_eq!(sol.simple_paths, Some(2));
    let path = sol.shortest_path.unwrap();
    assert_eq!(path.first(), Some(&sg.start));
    assert_eq!(path.last(), sg.goal.as_ref());
    // every state keeps the goat away from the wolf and the cabbage when the farmer is absent
    for label in &sg.labels {
        let (left, right) = label.split_once("||").unwrap();
        for bank in [left, right] {
            if !bank.contains('*') {
                assert!(!(bank.contains('g') && (bank.contains('w') || bank.contains('c'))), "{label}");
            }
        }
    }
    assert_eq!(sg.labels.iter().collect::<HashSet<_>>().len(), 10);
}

#[test]
fn missionary_states_are_legal_and_moves_respect_capacity() {
    for (m, c, cap) in [(3, 3, 2), (4, 4, 2), (4, 4, 3), (5, 5, 3), (3, 2, 2)] {
        let sg = mc(m, c, cap);
        for label in &sg.labels {
            let (cl, ml, _) = parse_mc(label);
            let (cr, mr) = (c - cl, m - ml);
            assert!(ml == 0 || ml >= cl, "{label}");
            assert!(mr == 0 || mr >= cr, "{label}");
        }
        for &(a, b) in sg.graph.edges() {
            let (ca, ma, ba) = parse_mc(&sg.labels[a]);
            let (cb, mb, bb) = parse_mc(&sg.labels[b]);
            assert_ne!(ba, bb);
            let moved = ca.abs_diff(cb) + ma.abs_diff(mb);
            assert!((1..=cap).contains(&moved));
            // everyone moves in the boat's direction
            let sign = |x: u32, y: u32| x.cmp(&y);
            assert!(ca == cb || ma == mb || sign(ca, cb) == sign(ma, mb));
        }
        assert!(sg.graph.is_connected());
    }
}

#[test]
fn missionary_solvability() {
    assert_eq!(solutions(&mc(3, 3, 2)).shortest, Some(11));
    let four = mc(4, 4, 2);
    assert_eq!(four.goal, None);
    let sol = solutions(&four);
    assert_eq!((sol.shortest, sol.simple_paths), (None, Some(0)));
    assert!(solutions(&mc(4, 4, 3)).shortest.is_some());
    assert!(solutions(&mc(5, 5, 3)).shortest.is_some());
    // more cannibals than missionaries on the starting bank
    assert!(build_state_graph(Puzzle::Missionaries { missionaries: 2, cannibals: 3, capacity: 2 }).is_err());
}

#[test]
fn shortest_paths_follow_edges() {
    for sg in [build_state_graph(Puzzle::Wgc).unwrap(), mc(3, 3, 2), mc(4, 4, 3)] {
        let sol = solutions(&sg);
        let path = sol.shortest_path.unwrap();
        assert_eq!(path.len(), sol.shortest.unwrap() + 1);
        for pair in path.windows(2) {
            assert!(sg.graph.neighbors(pair[0]).contains(&pair[1]));
        }
        assert_eq!(sg.edge_labels.len(), sg.graph.size());
    }
}
